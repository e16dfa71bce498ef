"""
Checking Mobius invariance two independent ways
===============================================

An expression is SL(2,R)-invariant when it is unchanged by
q -> (a*q + b)/(c*q + d) with a*d - b*c = 1.  The library offers two
routes that must agree: prolonged infinitesimal generators (three
residues, one per group direction) and literal finite substitution of
the transformed q with symbolic group parameters.
"""

from jetvar import (mobius_substitute, pre_schwarzian, render, schippers,
                    sigma, sl2_finite_check, sl2_residues)
from jetvar.expr import param

# route one: residues of the three generators.  translation is q -> q+eps,
# scaling is q -> (1+eps)q, special conformal is q -> q/(1-eps*q).
for name, e in [("sigma(3)", sigma(3)), ("presch", pre_schwarzian()),
                ("schippers(4)", schippers(4))]:
    rep = sl2_residues(e)
    print(name)
    print("   translation residue:", render(rep.residue_translation))
    print("   scaling residue:    ", render(rep.residue_scaling))
    print("   special residue:    ", render(rep.residue_special))
    print("   invariant:          ", rep.invariant)
    print()

# route two: substitute the full transformation with symbols a, b, c and
# the eliminated d = (1 + b*c)/a, then compare canonical forms
a, b, c, d = param("a"), param("b"), param("c"), param("d")

w = mobius_substitute(sigma(3), a, b, c, d)
print("sigma(3) after finite substitution:", render(w))
assert w == sigma(3)

# the whole family passes both routes; the pre-Schwarzian and the
# Schippers members above order three fail both
for n in range(3, 7):
    assert sl2_finite_check(sigma(n)) and sl2_residues(sigma(n)).invariant
assert not sl2_finite_check(pre_schwarzian())
assert not sl2_finite_check(schippers(4))
print()
print("both routes agree on the whole built-in corpus")

# concrete numbers help see what the finite route does.  take the
# specific map q -> (q+1)/(q+2), i.e. a=1, b=1, c=1, d=2:
img = mobius_substitute(pre_schwarzian(), 1, 1, 1, 2)
print()
print("presch under q -> (q+1)/(q+2):", render(img))
print("which differs from", render(pre_schwarzian()), "so not invariant")
