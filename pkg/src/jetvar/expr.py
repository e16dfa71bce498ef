"""Canonical rational expressions over jet atoms.

An Expr is a reduced fraction num/den of Polynomials such that

  * gcd(num, den) = 1,
  * all coefficients are integers with overall content 1,
  * the leading coefficient of den is positive.

Under the fixed atom and monomial orders this makes the representation
unique, so semantic equality is structural equality and ``is_zero`` is just
a check on the numerator.  All arithmetic routes through the same reduction,
and log atoms carry canonical Exprs as arguments so they compare by value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .atoms import TIME, Atom, Jet, LogAtom, Param, TimeAtom
from .errors import (
    DivisionByZero,
    UnsupportedAtom,
    UnsupportedLogArgument,
)
from .poly import P_ONE, P_ZERO, Polynomial, exact_div, poly_gcd


def _joint_scale(num: Polynomial, den: Polynomial):
    """Rescale so all coefficients are integers with joint content 1."""
    num_g = 0
    den_lcm = 1
    for _, c in num.terms:
        num_g = _int_gcd(num_g, c.numerator)
        den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    for _, c in den.terms:
        num_g = _int_gcd(num_g, c.numerator)
        den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    if num_g == 0:
        return num, den
    scale = Fraction(den_lcm, num_g)
    if scale != 1:
        num = num.scale(scale)
        den = den.scale(scale)
    return num, den


class Expr:
    """Immutable exact rational expression in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial, _reduced: bool = False):
        if not _reduced:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", hash((num, den)))

    def __setattr__(self, name, value):
        raise AttributeError("Expr values are immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "Expr":
        c = Fraction(c)
        return Expr(Polynomial.const(c.numerator),
                    Polynomial.const(c.denominator), _reduced=True)

    @staticmethod
    def atom(a: Atom) -> "Expr":
        return Expr(Polynomial.atom(a), P_ONE, _reduced=True)

    @staticmethod
    def log(arg) -> "Expr":
        return log(arg)

    # -- predicates and views ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_const(self) -> bool:
        return self.num.is_const and self.den.is_const

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def atoms(self) -> set:
        """Atoms appearing at top level (log atoms included, not opened)."""
        return self.num.atoms() | self.den.atoms()

    def all_atoms(self) -> set:
        """Atoms at any depth, including inside log arguments."""
        out = set()
        stack = [self]
        while stack:
            e = stack.pop()
            for a in e.atoms():
                if a in out:
                    continue
                out.add(a)
                if isinstance(a, LogAtom):
                    stack.append(a.arg)
        return out

    def jet_order(self):
        """Largest jet order at any depth, or None when jet-free."""
        best = None
        for a in self.all_atoms():
            if isinstance(a, Jet) and (best is None or a.order > best):
                best = a.order
        return best

    def sort_key(self):
        key_n = tuple((tuple((a.sort_key(), e) for a, e in m), str(c))
                      for m, c in self.num.terms)
        key_d = tuple((tuple((a.sort_key(), e) for a, e in m), str(c))
                      for m, c in self.den.terms)
        return (key_n, key_d)

    def partial(self, atom: Atom) -> "Expr":
        return partial(self, atom)

    def substitute(self, atom: Atom, value) -> "Expr":
        return substitute(self, atom, value)

    def substitute_many(self, mapping: dict) -> "Expr":
        return substitute_many(self, mapping)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Expr.const(other)
        return (isinstance(other, Expr)
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .render import render

        return f"Expr({render(self)})"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(v) -> "Expr":
        if isinstance(v, Expr):
            return v
        if isinstance(v, (int, Fraction)):
            return Expr.const(v)
        return NotImplemented

    def __add__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        if self.den == o.den:
            return Expr(self.num.add(o.num), self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_const:
            num = self.num.mul(o.den).add(o.num.mul(self.den))
            return Expr(num, self.den.mul(o.den))
        d1 = exact_div(self.den, g)
        d2 = exact_div(o.den, g)
        num = self.num.mul(d2).add(o.num.mul(d1))
        return Expr(num, self.den.mul(d2))

    __radd__ = __add__

    def __neg__(self):
        return Expr(self.num.neg(), self.den, _reduced=True)

    def __sub__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.__add__(o.__neg__())

    def __rsub__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return E_ZERO
        # cross-cancel so the product of reduced fractions is reduced
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_const else exact_div(self.num, g1)
        d2 = o.den if g1.is_const else exact_div(o.den, g1)
        n2 = o.num if g2.is_const else exact_div(o.num, g2)
        d1 = self.den if g2.is_const else exact_div(self.den, g2)
        num, den = _joint_scale(n1.mul(n2), d1.mul(d2))
        if den.leading()[1] < 0:
            num, den = num.neg(), den.neg()
        return Expr(num, den, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("division by zero expression")
        return self.__mul__(Expr(o.den, o.num))

    def __rtruediv__(self, other):
        o = Expr._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return E_ONE
        if k < 0:
            if self.is_zero:
                raise DivisionByZero("zero raised to a negative power")
            base = Expr(self.den, self.num)
            k = -k
        else:
            base = self
        # num and den are coprime, so powers stay coprime
        num, den = _joint_scale(base.num.pow(k), base.den.pow(k))
        if den.leading()[1] < 0:
            num, den = num.neg(), den.neg()
        return Expr(num, den, _reduced=True)


def _reduce(num: Polynomial, den: Polynomial):
    if den.is_zero:
        raise DivisionByZero("expression denominator is zero")
    if num.is_zero:
        return P_ZERO, P_ONE
    if den.is_const:
        c = den.const_value()
        num = num.scale(1 / c)
        den = P_ONE
    else:
        g = poly_gcd(num, den)
        if not g.is_const:
            num = exact_div(num, g)
            den = exact_div(den, g)
    num, den = _joint_scale(num, den)
    if den.leading()[1] < 0:
        num, den = num.neg(), den.neg()
    return num, den


E_ZERO = Expr.const(0)
E_ONE = Expr.const(1)


# -- public constructors -----------------------------------------------------


def const(c) -> Expr:
    """Exact constant from an int or Fraction."""
    return Expr.const(c)


def time() -> Expr:
    return Expr.atom(TIME)


def jet(order: int) -> Expr:
    """The jet coordinate q^(order); jet(0) is q itself."""
    return Expr.atom(Jet(order))


def param(name: str) -> Expr:
    """A named symbolic constant."""
    return Expr.atom(Param(name))


def log(arg: Expr) -> Expr:
    """Natural log as an opaque atom over a canonical argument.

    log(1) collapses to 0; any other constant argument is rejected since it
    has no exact rational value.
    """
    arg = Expr._coerce(arg)
    if arg is NotImplemented:
        raise UnsupportedLogArgument("log argument must be an expression")
    if arg.is_zero:
        raise UnsupportedLogArgument("log(0) is undefined")
    if arg.is_const:
        if arg.const_value() == 1:
            return E_ZERO
        raise UnsupportedLogArgument(
            f"log of constant {arg.const_value()} has no exact value")
    return Expr.atom(LogAtom(arg))


# -- differentiation ----------------------------------------------------------


def _poly_partial(p: Polynomial, atom: Atom) -> Expr:
    """Partial derivative of a polynomial, with the chain rule through logs."""
    direct = Expr(p.partial(atom), P_ONE, _reduced=True)
    extra = E_ZERO
    for a in p.atoms():
        if isinstance(a, LogAtom) and not isinstance(atom, LogAtom):
            inner = partial(a.arg, atom)
            if inner.is_zero:
                continue
            outer = Expr(p.partial(a), P_ONE, _reduced=True)
            extra = extra + outer * (inner / a.arg)
    return direct + extra


def partial(e: Expr, atom: Atom) -> Expr:
    """Exact partial derivative with respect to a time, jet, or param atom."""
    if isinstance(atom, LogAtom):
        raise UnsupportedAtom("cannot differentiate with respect to a log atom")
    if not isinstance(atom, (TimeAtom, Jet, Param)):
        raise UnsupportedAtom(f"cannot differentiate with respect to {atom!r}")
    dn = _poly_partial(e.num, atom)
    if e.den.is_const:
        c = e.den.const_value()
        return dn if c == 1 else dn / c
    dd = _poly_partial(e.den, atom)
    den_e = Expr(e.den, P_ONE, _reduced=True)
    num_e = Expr(e.num, P_ONE, _reduced=True)
    return (dn * den_e - num_e * dd) / (den_e * den_e)


# -- substitution -------------------------------------------------------------


def _subst_poly(p: Polynomial, mapping: dict, cache: dict) -> Expr:
    out = E_ZERO
    for m, c in p.terms:
        term = Expr.const(c)
        for a, ex in m:
            key = (a, ex)
            val = cache.get(key)
            if val is None:
                base = cache.get((a, 1))
                if base is None:
                    if isinstance(a, LogAtom):
                        new_arg = substitute_many(a.arg, mapping)
                        base = log(new_arg)
                    elif a in mapping:
                        base = mapping[a]
                    else:
                        base = Expr.atom(a)
                    cache[(a, 1)] = base
                val = base if ex == 1 else base ** ex
                cache[key] = val
            term = term * val
        out = out + term
    return out


def substitute_many(e: Expr, mapping: dict) -> Expr:
    """Simultaneously replace atoms by expressions (atoms -> Expr)."""
    if not mapping:
        return e
    cache: dict = {}
    num = _subst_poly(e.num, mapping, cache)
    den = _subst_poly(e.den, mapping, cache)
    if den.is_zero:
        raise DivisionByZero("substitution makes a denominator vanish")
    return num / den

def substitute(e: Expr, atom: Atom, value: Expr) -> Expr:
    """Replace one atom by an expression everywhere, including inside logs."""
    return substitute_many(e, {atom: Expr._coerce(value)})


# -- tree normalization --------------------------------------------------------


def normalize(tree) -> Expr:
    """Canonical Expr of a nested tuple arithmetic tree.

    Nodes: ("int", n), ("rat", p, q), ("atom", a), ("expr", e),
    ("neg", x), ("log", x), ("pow", x, k) with integer k, and
    ("add" | "sub" | "mul" | "div", left, right).
    """
    tag = tree[0]
    if tag == "int":
        return const(tree[1])
    if tag == "rat":
        return const(Fraction(tree[1], tree[2]))
    if tag == "atom":
        return Expr.atom(tree[1])
    if tag == "expr":
        return tree[1]
    if tag == "neg":
        return -normalize(tree[1])
    if tag == "log":
        return log(normalize(tree[1]))
    if tag == "pow":
        return normalize(tree[1]) ** tree[2]
    if tag in ("add", "sub", "mul", "div"):
        left = normalize(tree[1])
        right = normalize(tree[2])
        if tag == "add":
            return left + right
        if tag == "sub":
            return left - right
        if tag == "mul":
            return left * right
        return left / right
    raise ValueError(f"unknown expression tree node {tag!r}")
