"""Two-register state-vector simulation of Shor order finding."""

from shorsim.cfrac import ConvergentList, continued_fraction, recover_order, verify_bound_chain
from shorsim.gates import (CNOT, H, X, Y, Z, CircuitStats, PermutationGate, apply_cnot,
                           apply_controlled_permutation, apply_single_qubit, mod_mult_perm)
from shorsim.modexp import (AuditReport, SquareTable, claim_audit, modexp_circuit, modexp_oracle,
                            modpow, order_bruteforce, precompute_squares)
from shorsim.pipeline import (DEMONSTRATIONS, DemoAuditRow, ShorConfig, ShorReport, choose_q,
                              demo_audit, order_find, run_shor, success_sweep)
from shorsim.qft import qft_first_register, qft_matrix
from shorsim.spectrum import (OutcomeDistribution, analytic_distribution, peak_bound_check,
                              simulated_distribution)
from shorsim.state import (FIRST, SECOND, CapacityError, RegisterLayout, StateVector,
                           marginal_distribution, measure_register, new_basis_state, tensor,
                           uniform_first_register)

__version__ = "0.1.0"
