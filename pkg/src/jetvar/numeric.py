"""Floating-point spot checks for the exact machinery.

An Euler-Lagrange expression that is linear in its top derivative converts
to an explicit ODE q{m} = rhs(t, q0, ..., q{m-1}); a classical fixed-step
RK4 integrator follows the companion first-order system, and a drift report
measures how well a supposed constant of motion stays constant along the
trajectory.  All heavy lifting stays exact; floats appear only here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atoms import Jet, LogAtom, Param, TimeAtom
from .errors import MissingAtom, NullODE, NumericSingularity
from .expr import Expr
from .poly import Polynomial
from .variational import euler_lagrange, isolate_top

SINGULAR_GUARD = 1e-12


@dataclass(frozen=True)
class ODESystem:
    """Explicit top-derivative form q{order} = rhs, singular where the
    top-derivative coefficient vanishes."""

    order: int
    rhs: Expr
    singular_set: Expr


@dataclass(frozen=True)
class DriftReport:
    """Evaluations of a monitored expression along a trajectory."""

    samples: tuple
    max_abs_drift: float
    max_rel_drift: float


# -- evaluation ---------------------------------------------------------------


def _eval_poly(p: Polynomial, point: dict) -> float:
    total = 0.0
    for mono, coeff in p.terms:
        v = float(coeff)
        for atom, ex in mono:
            if isinstance(atom, LogAtom):
                arg = _eval_expr_raw(atom.arg, point)
                if arg <= 0.0:
                    raise NumericSingularity(
                        "log argument is not positive at the evaluation point")
                base = math.log(arg)
            else:
                base = point[atom]
            v *= base ** ex
        total += v
    return total


def _eval_expr_raw(e: Expr, point: dict) -> float:
    num = _eval_poly(e.num, point)
    den = _eval_poly(e.den, point)
    if den == 0.0:
        raise NumericSingularity("denominator evaluated to zero")
    return num / den


def eval_expr(e: Expr, point: dict) -> float:
    """IEEE double value of e at a point mapping atoms to floats."""
    missing = sorted(
        (a for a in e.all_atoms()
         if not isinstance(a, LogAtom) and a not in point),
        key=lambda a: a.sort_key(),
    )
    if missing:
        from .render import atom_label

        names = ", ".join(atom_label(a) for a in missing)
        raise MissingAtom(f"evaluation point lacks {names}")
    return _eval_expr_raw(e, point)


# -- compiled evaluators for tight loops -------------------------------------

_T_SLOT = -1


def _compile_poly(p: Polynomial, order: int):
    terms = []
    for mono, coeff in p.terms:
        factors = []
        for atom, ex in mono:
            if isinstance(atom, Jet):
                if atom.order >= order:
                    raise MissingAtom(
                        f"state of size {order} does not cover jet q{atom.order}")
                factors.append((atom.order, ex))
            elif isinstance(atom, TimeAtom):
                factors.append((_T_SLOT, ex))
            elif isinstance(atom, LogAtom):
                factors.append((_compile(atom.arg, order), ex))
            elif isinstance(atom, Param):
                raise MissingAtom(
                    f"state does not cover parameter {atom.name}")
        terms.append((float(coeff), tuple(factors)))
    return tuple(terms)


def _eval_terms(terms, t: float, y) -> float:
    total = 0.0
    for c, factors in terms:
        v = c
        for f, ex in factors:
            if type(f) is int:
                x = t if f == _T_SLOT else y[f]
            else:
                x = f(t, y)
                if x <= 0.0:
                    raise NumericSingularity(
                        "log argument is not positive along the trajectory")
                x = math.log(x)
            v *= x ** ex
        total += v
    return total


def _compile(e: Expr, order: int):
    """Evaluator f(t, y) for an expression over t and Jet(k), k < order."""
    num_terms = _compile_poly(e.num, order)
    den_terms = _compile_poly(e.den, order)

    def f(t: float, y) -> float:
        den = _eval_terms(den_terms, t, y)
        if den == 0.0:
            raise NumericSingularity("denominator evaluated to zero")
        return _eval_terms(num_terms, t, y) / den

    return f


# -- dynamics -----------------------------------------------------------------


def derive_ode(L: Expr) -> ODESystem:
    """Explicit ODE from the Euler-Lagrange expression of L."""
    E = euler_lagrange(L)
    if E.is_zero:
        raise NullODE("null Lagrangian: the Euler-Lagrange expression is 0")
    iso = isolate_top(E)
    rhs = -(iso.remainder / iso.coefficient)
    return ODESystem(order=iso.order, rhs=rhs, singular_set=iso.coefficient)


def integrate_rk4(sys: ODESystem, init, t0: float, t1: float, h: float):
    """Classical fixed-step RK4 trajectory of the companion system.

    Returns a list of (t, state) with state = (q0, ..., q{m-1}).  Aborts
    with NumericSingularity carrying the partial trajectory when the
    top-derivative coefficient falls below the singular guard or a
    denominator vanishes.
    """
    if h <= 0:
        raise ValueError("step size must be positive")
    if t1 <= t0:
        raise ValueError("integration interval is empty")
    m = sys.order
    if len(init) != m:
        raise ValueError(f"initial state must have {m} components")

    frhs = _compile(sys.rhs, m)
    fguard = _compile(sys.singular_set, m)

    def deriv(t, y):
        if abs(fguard(t, y)) < SINGULAR_GUARD:
            raise NumericSingularity(
                "top-derivative coefficient within the singular guard")
        return y[1:] + (frhs(t, y),)

    y = tuple(float(v) for v in init)
    traj = [(t0, y)]
    steps = max(1, round((t1 - t0) / h))
    h2 = h / 2.0
    try:
        for i in range(steps):
            t = t0 + i * h
            k1 = deriv(t, y)
            k2 = deriv(t + h2, tuple(y[j] + h2 * k1[j] for j in range(m)))
            k3 = deriv(t + h2, tuple(y[j] + h2 * k2[j] for j in range(m)))
            k4 = deriv(t + h, tuple(y[j] + h * k3[j] for j in range(m)))
            y = tuple(
                y[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j])
                for j in range(m)
            )
            traj.append((t0 + (i + 1) * h, y))
    except NumericSingularity as exc:
        raise NumericSingularity(str(exc), trajectory=traj) from None
    return traj


def monitor(traj, e: Expr) -> DriftReport:
    """Evaluate e along a trajectory and report drift from its first value."""
    if not traj:
        raise ValueError("trajectory is empty")
    m = len(traj[0][1])
    f = _compile(e, m)
    samples = tuple((t, f(t, y)) for t, y in traj)
    v0 = samples[0][1]
    max_abs = max(abs(v - v0) for _, v in samples)
    if v0 != 0.0:
        max_rel = max_abs / abs(v0)
    else:
        max_rel = 0.0 if max_abs == 0.0 else math.inf
    return DriftReport(samples=samples, max_abs_drift=max_abs,
                       max_rel_drift=max_rel)
