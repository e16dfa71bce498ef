"""
Conserved energies under fixed-step integration
===============================================

The Jacobi integral of an autonomous Lagrangian is constant along
solutions of its equation of motion.  A good way to stress both the
symbolic and numeric halves of the library at once: derive the ODE
symbolically, integrate with RK4, and watch how far the exact conserved
quantity drifts in floating point.
"""

from jetvar import (derive_ode, eval_expr, integrate_rk4, jacobi, l2,
                    monitor, render, sigma, Jet)

L = l2()
system = derive_ode(L)
print("Lagrangian:", render(L))
print("solved equation: q^(4) =", render(system.rhs))
print("guard expression (must stay away from zero):",
      render(system.singular_set))
print()

# the drift of jacobi(L) shrinks like h^4, the classical RK4 order
J = jacobi(L)
init = (0.0, 1.0, 1.0, 0.0)
print("h        max_rel_drift of the energy")
for h in (4e-3, 2e-3, 1e-3, 5e-4):
    traj = integrate_rk4(system, init, 0.0, 1.0, h)
    rep = monitor(traj, J)
    print(f"{h:<8g} {rep.max_rel_drift:.3e}")

# Mobius functions of t solve this equation exactly, and the Schwarzian
# vanishes on them.  starting from data taken off q(t) = (t-1)/(t+... )
# style solutions, sigma(3) should stay at numerical zero all along:
print()
traj = integrate_rk4(system, (1.0, -1.0, 2.0, -6.0), 0.0, 1.0, 1e-3)
worst = max(
    abs(eval_expr(sigma(3), {Jet(k): v for k, v in enumerate(state)}))
    for _, state in traj
)
print("Mobius initial data: max |sigma(3)| along the run =", f"{worst:.3e}")

# the sixth-order dynamics of sigma(5) gets the same treatment
system5 = derive_ode(sigma(5))
print()
print("sigma(5) dynamics has order", system5.order)
traj = integrate_rk4(system5, (0.0, 1.0, 1.0, 0.0, 0.0, 0.0), 0.0, 0.5, 1e-4)
rep = monitor(traj, jacobi(sigma(5)))
print("energy drift over [0, 0.5] at h = 1e-4:",
      f"{rep.max_rel_drift:.3e}")
