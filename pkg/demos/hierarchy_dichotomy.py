"""
The even/odd split in the higher Schwarzian hierarchy
=====================================================

The sigma family starts at the Schwarzian derivative sigma(3) and climbs
in derivative order.  The striking pattern: every even-order member is a
null Lagrangian, every odd-order member carries genuine dynamics.
"""

from jetvar import (euler_lagrange, extract_gauge, is_null, jacobi,
                    render, sigma, total_derivative)

for n in range(3, 7):
    s = sigma(n)
    print(f"sigma({n}), jet order {s.jet_order()}")
    print("   null:", is_null(s))
    J = jacobi(s)
    print("   jacobi:", "0" if J.is_zero else render(J))
    print()

# the even members are total derivatives, and their gauges are exactly
# the preceding odd members
print("gauge of sigma(4):", render(extract_gauge(sigma(4)).gauge))
assert extract_gauge(sigma(4)).gauge == sigma(3)

P6 = extract_gauge(sigma(6)).gauge
print("gauge of sigma(6):", render(P6))
assert P6 == sigma(5)

# so integrating sigma(6) by parts all the way down reconstructs
# sigma(5) term for term; the round trip closes exactly
assert total_derivative(P6) == sigma(6)

# the odd members instead produce equations of motion.  sigma(3) and the
# quadratic pre-Schwarzian Lagrangian share one orbit equation:
print()
print("equation from sigma(3):", render(euler_lagrange(sigma(3))), "= 0")
print("equation from sigma(5):", render(euler_lagrange(sigma(5))), "= 0")

# energies of the two odd members, conserved along their own flows
print()
print("jacobi(sigma(3)) =", render(jacobi(sigma(3))))
print("jacobi(sigma(5)) =", render(jacobi(sigma(5))))
