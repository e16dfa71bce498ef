"""Differential operators on jet expressions.

The total time derivative treats q0, q1, ... as coordinates of a jet space
and acts as D_t = d/dt + sum_j q{j+1} d/dq{j}.  Prolongation extends an
evolutionary vector field with characteristic phi to all jet orders:
pr v = sum_k D_t^k(phi) d/dq{k}.
"""

from __future__ import annotations

from .atoms import TIME, Jet
from .expr import E_ZERO, Expr, jet, partial


def _dt_once(e: Expr) -> Expr:
    out = partial(e, TIME)
    jets = sorted((a for a in e.all_atoms() if isinstance(a, Jet)),
                  key=lambda a: a.order)
    for a in jets:
        d = partial(e, a)
        if not d.is_zero:
            out = out + jet(a.order + 1) * d
    return out


def total_derivative(e: Expr, k: int = 1) -> Expr:
    """k-fold total time derivative of e (k >= 1; k = 0 returns e)."""
    if k < 0:
        raise ValueError("total derivative order must be nonnegative")
    for _ in range(k):
        e = _dt_once(e)
    return e


def jet_order(e: Expr):
    """Largest jet order occurring anywhere in e, or None if jet-free."""
    return e.jet_order()


def prolong(phi: Expr, e: Expr) -> Expr:
    """Apply the prolonged vector field with characteristic phi to e.

    Only jet orders actually present in e contribute, so the formally
    infinite sum truncates exactly.
    """
    phi = Expr._coerce(phi)
    orders = sorted(a.order for a in e.all_atoms() if isinstance(a, Jet))
    out = E_ZERO
    d = phi
    at = 0
    for k in orders:
        d = total_derivative(d, k - at)
        at = k
        term = partial(e, Jet(k))
        if not term.is_zero:
            out = out + d * term
    return out
