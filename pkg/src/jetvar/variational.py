"""Variational operators: Euler-Lagrange, energy function, gauge extraction.

For a Lagrangian L(t, q0, ..., qn) the Euler-Lagrange expression is

  E(L) = sum_{i=0}^{n} (-1)^i D_t^i (dL/dq{i})

and the energy (Jacobi) function is

  J(L) = sum_{r=1}^{n} q{r} * sum_{k=0}^{n-r} (-1)^k D_t^k (dL/dq{r+k}) - L.

E(L) = 0 identically exactly when L is a total derivative D_t P; such L are
null Lagrangians and P is their gauge function, recovered here by peeling
the top jet order one integration at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .atoms import TIME, Jet, LogAtom
from .errors import (
    IntegrationUnsupported,
    NoJet,
    NonexactTop,
    NonlinearTop,
    NotNull,
)
from .expr import E_ZERO, Expr, jet, partial
from .jets import total_derivative
from .poly import P_ONE


def euler_lagrange(L: Expr) -> Expr:
    """Euler-Lagrange expression of L; identically 0 iff L is null."""
    n = L.jet_order()
    if n is None:
        return E_ZERO
    out = E_ZERO
    for i in range(n + 1):
        d = partial(L, Jet(i))
        if d.is_zero:
            continue
        term = total_derivative(d, i)
        out = out + (term if i % 2 == 0 else -term)
    return out


def jacobi(L: Expr) -> Expr:
    """Energy function of L; conserved on-shell when L has no explicit time."""
    n = L.jet_order()
    if n is None:
        return -L
    out = -L
    # cache D_t^k(dL/dq{j}); the double sum reuses each derivative chain
    derivs = {}
    for j in range(1, n + 1):
        d = partial(L, Jet(j))
        derivs[(j, 0)] = d
        for k in range(1, j):
            derivs[(j, k)] = total_derivative(derivs[(j, k - 1)])
    for r in range(1, n + 1):
        inner = E_ZERO
        for k in range(0, n - r + 1):
            term = derivs[(r + k, k)]
            if term.is_zero:
                continue
            inner = inner + (term if k % 2 == 0 else -term)
        if not inner.is_zero:
            out = out + jet(r) * inner
    return out


def is_null(L: Expr) -> bool:
    """True iff the Euler-Lagrange expression of L vanishes identically."""
    return euler_lagrange(L).is_zero


@dataclass(frozen=True)
class GaugeResult:
    """Gauge function P with D_t P = L; the additive constant is fixed to 0."""

    gauge: Expr
    residual_constant: Fraction = Fraction(0)


@dataclass(frozen=True)
class TopIsolation:
    """Decomposition E = coefficient * Jet(order) + remainder."""

    order: int
    coefficient: Expr
    remainder: Expr


def _contains_at_depth(e: Expr, atom) -> bool:
    return atom in e.all_atoms()


def _integrate(A: Expr, x) -> Expr:
    """Antiderivative of A with respect to the atom x, constant fixed to 0.

    Supported integrands: polynomial in x, plus a remainder of the form
    r/(linear in x) which integrates to a log atom.  The denominator may not
    contain x beyond first degree, and no log argument may contain x.
    """
    for a in A.all_atoms():
        if isinstance(a, LogAtom) and _contains_at_depth(a.arg, x):
            raise IntegrationUnsupported(
                f"integrand contains log depending on {a!r}")
    num, den = A.num, A.den
    ddeg = den.degree_in(x)
    if ddeg > 1:
        raise IntegrationUnsupported(
            "denominator has degree > 1 in the integration variable")

    ncoeffs = [Expr(p, P_ONE) for p in num.as_univariate(x)]
    xe = Expr.atom(x)

    if ddeg == 0:
        d = Expr(den, P_ONE)
        out = E_ZERO
        for i, c in enumerate(ncoeffs):
            if c.is_zero:
                continue
            out = out + (c / d) * Fraction(1, i + 1) * xe ** (i + 1)
        return out

    dcoeffs = den.as_univariate(x)
    beta = Expr(dcoeffs[0], P_ONE)
    alpha = Expr(dcoeffs[1], P_ONE)

    # synthetic division of the numerator by alpha*x + beta
    p = len(ncoeffs) - 1
    quot = [E_ZERO] * max(p, 0)
    rem = list(ncoeffs)
    for i in range(p, 0, -1):
        q = rem[i] / alpha
        quot[i - 1] = q
        rem[i - 1] = rem[i - 1] - q * beta

    out = E_ZERO
    for i, c in enumerate(quot):
        if c.is_zero:
            continue
        out = out + c * Fraction(1, i + 1) * xe ** (i + 1)
    if not rem[0].is_zero:
        from .expr import log

        out = out + (rem[0] / alpha) * log(Expr(den, P_ONE))
    return out


def extract_gauge(L: Expr) -> GaugeResult:
    """Recover the gauge function P with D_t P = L for a null Lagrangian.

    Peels the top jet order: with n = jet_order(L), dL/dq{n} must be free of
    q{n} and its antiderivative in q{n-1} strips one order off L.  The final
    jet-free remainder is integrated in t.
    """
    if not euler_lagrange(L).is_zero:
        raise NotNull("Euler-Lagrange expression does not vanish")
    gauge = E_ZERO
    rem = L
    while True:
        n = rem.jet_order()
        if n is None or n == 0:
            break
        A = partial(rem, Jet(n))
        if _contains_at_depth(A, Jet(n)):
            raise NonexactTop(
                f"top-order coefficient still depends on jet order {n}")
        piece = _integrate(A, Jet(n - 1))
        gauge = gauge + piece
        rem = rem - total_derivative(piece)
        new_n = rem.jet_order()
        if new_n is not None and new_n >= n:
            raise IntegrationUnsupported(
                "peeling failed to lower the jet order")
    if not rem.is_zero:
        gauge = gauge + _integrate(rem, TIME)
    if total_derivative(gauge) != L:
        raise IntegrationUnsupported(
            "reconstructed gauge does not reproduce the Lagrangian")
    return GaugeResult(gauge=gauge)


def isolate_top(E: Expr) -> TopIsolation:
    """Write E as C * Jet(m) + R with C and R free of the top jet q{m}."""
    m = E.jet_order()
    if m is None:
        raise NoJet("expression contains no jet variables")
    top = Jet(m)
    C = partial(E, top)
    if _contains_at_depth(C, top):
        raise NonlinearTop(f"expression is not linear in jet order {m}")
    R = E - C * jet(m)
    if _contains_at_depth(R, top):
        raise NonlinearTop(f"expression is not linear in jet order {m}")
    return TopIsolation(order=m, coefficient=C, remainder=R)
