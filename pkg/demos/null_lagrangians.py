"""
Null Lagrangians and their gauge functions
==========================================

A Lagrangian is null when its Euler-Lagrange expression vanishes
identically, which in one independent variable means it is a total
time derivative of some gauge function P.  This script walks through
the two classic first-order examples and recovers P for each.
"""

from jetvar import (Expr, Jet, Param, euler_lagrange, extract_gauge,
                    is_null, jacobi, render, total_derivative)

q = Expr.atom(Jet(0))
qd = Expr.atom(Jet(1))

# first example: c1 * q * q'
c1 = Expr.atom(Param("c1"))
NL1 = c1 * q * qd

print("L =", render(NL1))
print("  euler_lagrange:", render(euler_lagrange(NL1)))
print("  jacobi:        ", render(jacobi(NL1)))
print("  is_null:       ", is_null(NL1))

P1 = extract_gauge(NL1).gauge
print("  gauge P:       ", render(P1))

# the defining property L = D_t P holds exactly, not approximately
assert total_derivative(P1) == NL1

# second example: a1*q' / (a2*q + a4), which needs a logarithm
a1 = Expr.atom(Param("a1"))
a2 = Expr.atom(Param("a2"))
a4 = Expr.atom(Param("a4"))
NL2 = a1 * qd / (a2 * q + a4)

print()
print("L =", render(NL2))
print("  euler_lagrange:", render(euler_lagrange(NL2)))
print("  is_null:       ", is_null(NL2))

P2 = extract_gauge(NL2).gauge
print("  gauge P:       ", render(P2))
assert total_derivative(P2) == NL2

# a gauge function is only determined up to an additive constant.
# shifting P2 changes nothing downstream:
shifted = P2 + 7
assert total_derivative(shifted) == NL2

# a quick negative control; the harmonic oscillator is not null
L_osc = qd ** 2 / 2 - q ** 2 / 2
print()
print("L =", render(L_osc))
print("  is_null:", is_null(L_osc))
print("  euler_lagrange:", render(euler_lagrange(L_osc)))
