"""Atoms: the indeterminates expressions are built from.

Four kinds exist: the time variable t, jet variables q{k} (the k-th time
derivative of the dependent variable, treated as an independent coordinate),
named constant parameters, and logs of whole expressions.  Atoms carry a
fixed total order -- Time < Jet(0) < Jet(1) < ... < Param (by name) < Log
(by canonical form of the argument) -- which makes every downstream
canonical form deterministic.
"""

from __future__ import annotations

from typing import Union


class TimeAtom:
    """The independent variable t (singleton; use the module-level TIME)."""

    __slots__ = ()

    def sort_key(self):
        return (0,)

    def __eq__(self, other):
        return isinstance(other, TimeAtom)

    def __hash__(self):
        return hash("jetvar.time")

    def __repr__(self):
        return "TIME"


TIME = TimeAtom()


class Jet:
    """The jet variable of the given derivative order (Jet(0) is q itself)."""

    __slots__ = ("order", "_hash")

    def __init__(self, order: int):
        if not isinstance(order, int) or order < 0:
            raise ValueError(f"jet order must be a nonnegative integer, got {order!r}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_hash", hash(("jetvar.jet", order)))

    def sort_key(self):
        return (1, self.order)

    def __eq__(self, other):
        return isinstance(other, Jet) and other.order == self.order

    def __hash__(self):
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("Jet atoms are immutable")

    def __repr__(self):
        return f"Jet({self.order})"


class Param:
    """A named constant parameter (time-independent)."""

    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        if not name or not name[0].isalpha():
            raise ValueError(f"parameter name must start with a letter, got {name!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("jetvar.param", name)))

    def sort_key(self):
        return (2, self.name)

    def __eq__(self, other):
        return isinstance(other, Param) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("Param atoms are immutable")

    def __repr__(self):
        return f"Param({self.name!r})"


class LogAtom:
    """log of a canonical expression, treated as an independent transcendental.

    Two log atoms are the same atom iff their arguments are structurally
    equal canonical expressions; no log identities are applied.
    """

    __slots__ = ("arg", "_key", "_hash")

    def __init__(self, arg):
        # arg must already be a canonical Expr; constructors in expr.py
        # enforce that it is not a bare constant.
        object.__setattr__(self, "arg", arg)
        object.__setattr__(self, "_key", (3, arg.sort_key()))
        object.__setattr__(self, "_hash", hash(("jetvar.log", arg)))

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, LogAtom) and other.arg == self.arg

    def __hash__(self):
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("Log atoms are immutable")

    def __repr__(self):
        return f"LogAtom({self.arg!r})"


Atom = Union[TimeAtom, Jet, Param, LogAtom]
