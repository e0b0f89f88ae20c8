"""SU(2)-invariant bipartite spin states and their local quantum uncertainty."""

from .angular import (HALF, ONE, CoupledVector, Spin, cg_spin_half, cg_spin_one,
                      coupled_vector, product_index, projector, sector_spins,
                      spin_matrices, twice_m_range)
from .linalg import (NumericalError, commutator, eigh, hermiticity_defect,
                     matrix_sqrt_psd, sym3_max_eigenvalue)
from .lqu import (STATIONARY_DIRECTIONS, GeneratorBasis, LquResult,
                  formula_branches_spin_one, gell_mann_basis, generator_basis,
                  lqu_formula_spin_half, lqu_formula_spin_one, lqu_numeric,
                  lqu_w_matrix, observable_from_direction, pauli_basis,
                  skew_information, stationary_direction_values, w_matrix)
from .states import (SU2InvariantState, SpinHalfCoefficients,
                     SpinOneSqrtCoefficients, build_state_spin_half,
                     build_state_spin_one, check_su2_invariance,
                     sector_probabilities, spin_half_coefficients,
                     spin_one_sqrt_coefficients, sqrt_density_matrix,
                     to_density_matrix, validation_residuals)

__version__ = "0.1.0"

__all__ = [
    "HALF", "ONE", "CoupledVector", "Spin", "cg_spin_half", "cg_spin_one",
    "coupled_vector", "product_index", "projector", "sector_spins",
    "spin_matrices", "twice_m_range",
    "NumericalError", "commutator", "eigh", "hermiticity_defect",
    "matrix_sqrt_psd", "sym3_max_eigenvalue",
    "STATIONARY_DIRECTIONS", "GeneratorBasis", "LquResult",
    "formula_branches_spin_one", "gell_mann_basis", "generator_basis",
    "lqu_formula_spin_half", "lqu_formula_spin_one", "lqu_numeric",
    "lqu_w_matrix", "observable_from_direction", "pauli_basis",
    "skew_information", "stationary_direction_values", "w_matrix",
    "SU2InvariantState", "SpinHalfCoefficients", "SpinOneSqrtCoefficients",
    "build_state_spin_half", "build_state_spin_one", "check_su2_invariance",
    "sector_probabilities", "spin_half_coefficients",
    "spin_one_sqrt_coefficients", "sqrt_density_matrix", "to_density_matrix",
    "validation_residuals",
]
