"""Infinitesimal and finite Mobius invariance checks."""

import random
from fractions import Fraction

import pytest

from jetvar import (
    Expr,
    Jet,
    Param,
    ReservedParameter,
    UnsupportedAtom,
    mobius_substitute,
    pre_schwarzian,
    schippers,
    sigma,
    sl2_finite_check,
    sl2_residues,
)

from conftest import rand_poly

Q0 = Expr.atom(Jet(0))
Q1 = Expr.atom(Jet(1))
Q2 = Expr.atom(Jet(2))
A = Expr.atom(Param("a"))
B = Expr.atom(Param("b"))
C = Expr.atom(Param("c"))


def test_sigma_family_is_invariant():
    for n in range(3, 7):
        rep = sl2_residues(sigma(n))
        assert rep.residue_translation.is_zero
        assert rep.residue_scaling.is_zero
        assert rep.residue_special.is_zero
        assert rep.invariant


def test_pre_schwarzian_fails_special_conformal():
    rep = sl2_residues(pre_schwarzian())
    assert rep.residue_translation.is_zero
    assert rep.residue_scaling.is_zero
    assert rep.residue_special == 2 * Q1
    assert not rep.invariant


def test_schippers_residues_vanish_only_at_base_order():
    assert sl2_residues(schippers(3)).invariant
    for n in range(4, 7):
        assert not sl2_residues(schippers(n)).invariant


def test_finite_agrees_with_infinitesimal_on_corpus():
    corpus = [sigma(n) for n in range(3, 7)]
    corpus += [schippers(n) for n in range(3, 7)]
    corpus += [pre_schwarzian(), Q1 ** 2, Q2 / Q1]
    for e in corpus:
        assert sl2_finite_check(e) == sl2_residues(e).invariant


def test_mobius_substitute_base_point():
    # identity transformation: a=d=1, b=c=0
    e = sigma(3)
    assert mobius_substitute(e, 1, 0, 0, 1) == e


def test_mobius_substitute_concrete():
    # q -> 1/q is (a,b,c,d) = (0,1,1,0) up to the determinant sign; use
    # instead q -> (q+1)/q with a=1,b=1,c=1,d... det = a*d-b*c = 1 forces
    # d via the group constraint, d = (1+b*c)/a = 2
    w = mobius_substitute(Q0, 1, 1, 1, 2)
    assert w == (Q0 + 1) / (Q0 + 2)


def test_mobius_image_of_first_jet():
    # D_t((a*q+b)/(c*q+d)) with unit determinant is q1/(c*q+d)^2
    w1 = mobius_substitute(Q1, A, B, C, (1 + B * C) / A)
    expect = Q1 / (C * Q0 + (1 + B * C) / A) ** 2
    assert w1 == expect


def test_symbolic_determinant_elimination():
    # passing the symbol d triggers elimination d = (1+b*c)/a
    d = Expr.atom(Param("d"))
    lhs = mobius_substitute(sigma(3), A, B, C, d)
    assert lhs == sigma(3)


def test_group_composition_is_contravariant():
    e = Q2 / Q1
    rng = random.Random(3)

    def rand_mobius():
        while True:
            a = Fraction(rng.randint(-4, 4))
            if a != 0:
                break
        b = Fraction(rng.randint(-4, 4))
        c = Fraction(rng.randint(-4, 4))
        d = (1 + b * c) / a
        return a, b, c, d

    def compose(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        return (a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)

    for _ in range(5):
        m1 = rand_mobius()
        m2 = rand_mobius()
        once = mobius_substitute(mobius_substitute(e, *m2), *m1)
        prod = compose(m2, m1)
        assert once == mobius_substitute(e, *prod)


def test_reserved_parameter_rejected():
    for bad in (A, B, C, Expr.atom(Param("d"))):
        with pytest.raises(ReservedParameter):
            sl2_residues(bad * Q1)
        with pytest.raises(ReservedParameter):
            sl2_finite_check(bad * Q1)


def test_free_parameters_ride_along():
    a1 = Expr.atom(Param("a1"))
    assert sl2_finite_check(a1 * sigma(3))
    rep = sl2_residues(a1 * sigma(3))
    assert rep.invariant


def test_mobius_rejects_jet_coefficients():
    with pytest.raises(UnsupportedAtom):
        mobius_substitute(Q0, Q1, 0, 0, 1)


def test_invariance_of_random_functions_of_sigma():
    rng = random.Random(17)
    for _ in range(5):
        c0 = Fraction(rng.randint(1, 9))
        e = c0 * sigma(3) ** 2 + sigma(4)
        assert sl2_finite_check(e)
        assert sl2_residues(e).invariant
    # but mixing in the pre-schwarzian breaks both routes
    e = sigma(3) + pre_schwarzian()
    assert not sl2_finite_check(e)
    assert not sl2_residues(e).invariant


def test_non_invariant_polynomial():
    rng = random.Random(29)
    for _ in range(5):
        e = rand_poly(rng, jets_max=2, allow_t=False, max_terms=2)
        assert sl2_finite_check(e) == sl2_residues(e).invariant
