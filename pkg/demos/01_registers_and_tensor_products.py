"""
Two registers, Hadamards, and what a tensor product of kets really is
=====================================================================

Basis index of |a>|y> is a * 2**ell + y.  Register 1 is built from Hadamards;
register 2 starts at |1>.
"""

import numpy as np

from shorsim import (FIRST, SECOND, RegisterLayout, marginal_distribution, new_basis_state,
                     tensor, uniform_first_register)
from shorsim.state import ket

layout = RegisterLayout(t=3, ell=4)
print("basis |5>|9> sits at index", np.flatnonzero(new_basis_state(layout, 5, 9).amps))

# %% three Hadamards give the uniform superposition over a = 0..7
state = uniform_first_register(layout, y0=1)
print("register-1 marginal:", marginal_distribution(state, FIRST))
print("register-2 marginal support:", np.flatnonzero(marginal_distribution(state, SECOND)))

# %% kets written in decimal concatenate bit strings: |3> (2 bits) x |9> (4 bits) = |57>
print("|3>|9> ->", np.flatnonzero(tensor(ket(3, 2), ket(9, 4))))

# %% the product of (|1> + |x^(2^i) mod n>)/sqrt2 terms grows the dimension
# with every factor, so it cannot equal a superposition on one 4-qubit register
n, x, ell = 15, 7, 4
vec = np.array([1.0 + 0j])
for i in range(3):
    vec = tensor(vec, (ket(1, ell) + ket(pow(x, 2**i, n), ell)) / np.sqrt(2))
    print(f"after {i + 1} factor(s): dimension {vec.size}  (one register: {2**ell})")
