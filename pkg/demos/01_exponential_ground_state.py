# Equally spaced levels plus nearest-neighbour coupling: the weak-coupling
# ground state of the tridiagonal ladder is the Taylor series of exp(-v/E).
import math

import numpy as np

from ladderstrength import TRI, build_hamiltonian, ground_state, rs_series

u = 0.01
spec = TRI.with_coupling(u)
print(build_hamiltonian(spec)[:4, :4])

# Numerical diagonalization (Jacobi rotations)
energy, a = ground_state(build_hamiltonian(spec))
print("ground energy", energy, "second-order estimate", -u**2)

# The exact series, to 12th order
state = rs_series(spec, 0, 12)
for n, amp in enumerate(state.amplitudes):
    m, c = amp.leading()
    taylor = (-u) ** n / math.factorial(n)
    print(f"a{n:<2d} numeric {a[n]: .6e}   leading {c}*u^{m}   (-u)^n/n! {taylor: .6e}")

# Unit-normalizing the series reproduces the eigenvector to machine precision
print("max deviation", np.max(np.abs(state.evaluate(u, normalize=True) - a)))
