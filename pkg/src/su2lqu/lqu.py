"""Local quantum uncertainty via three mutually checking routes.

For a bipartite state with measurements on the B side, the LQU is the minimum
Wigner-Yanase skew information I(rho, I x K) over traceless unit-norm local
observables K.  This module provides:

* the closed-form expression for a spin-1/2 partner,
* the equivalent route through the 3x3 overlap matrix
  W_ij = Tr(sqrt(rho) (I x sigma_i) sqrt(rho) (I x sigma_j)), LQU = 1 - max eig W,
* the closed form for a spin-1 partner as the smaller of the two
  stationary-direction values on the Gell-Mann sphere,
* a multi-start numerical minimizer over the full sphere of generator
  coefficients, which checks the closed forms instead of trusting them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular import Spin, twice_m_range
from .linalg import NumericalError, commutator, require_hermitian, sym3_max_eigenvalue
from .states import (SU2InvariantState, check_probability, spin_one_sqrt_coefficients,
                     sqrt_density_matrix)


@dataclass(frozen=True)
class GeneratorBasis:
    """Ordered traceless Hermitian generators of the local side, Tr(g_i g_j) = 2 d_ij."""

    local_dim: int
    generators: tuple

    def __len__(self) -> int:
        return len(self.generators)


def pauli_basis() -> GeneratorBasis:
    """The three Pauli matrices."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return GeneratorBasis(2, (sx, sy, sz))


def gell_mann_basis() -> GeneratorBasis:
    """The eight Gell-Mann matrices in the standard order lambda_1 .. lambda_8."""
    def mat(rows):
        return np.array(rows, dtype=complex)

    l1 = mat([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    l2 = mat([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]])
    l3 = mat([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    l4 = mat([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    l5 = mat([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]])
    l6 = mat([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    l7 = mat([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]])
    l8 = mat([[1, 0, 0], [0, 1, 0], [0, 0, -2]]) / math.sqrt(3)
    return GeneratorBasis(3, (l1, l2, l3, l4, l5, l6, l7, l8))


def generator_basis(local_dim: int) -> GeneratorBasis:
    if local_dim == 2:
        return pauli_basis()
    if local_dim == 3:
        return gell_mann_basis()
    raise ValueError(f"no generator basis for local dimension {local_dim}")


STATIONARY_DIRECTIONS = (
    np.array([0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, math.sqrt(3) / 2]),
    np.array([0.0, 0.0, -math.sqrt(3) / 2, 0.0, 0.0, 0.0, 0.0, 0.5]),
)
"""Gell-Mann coefficient vectors where the sphere-constrained skew information
of a rotation-invariant state is stationary: n . lambda equals diag(1, 0, -1)
and diag(-1, 2, -1)/sqrt(3)."""


@dataclass(frozen=True)
class LquResult:
    """An LQU value with the route that produced it.

    method is one of 'closed_formula', 'w_matrix', 'numeric_min'; direction is
    the minimizing generator-coefficient vector for the numeric route.
    """

    value: float
    method: str
    direction: np.ndarray | None = None


def observable_from_direction(basis: GeneratorBasis, n: np.ndarray) -> np.ndarray:
    """K = sum_i n_i g_i for a unit coefficient vector n."""
    n = np.asarray(n, dtype=float)
    if n.shape != (len(basis),):
        raise ValueError(f"direction needs {len(basis)} components, got shape {n.shape}")
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"direction must have unit norm, got |n| = {norm}")
    out = np.zeros((basis.local_dim, basis.local_dim), dtype=complex)
    for coef, g in zip(n, basis.generators):
        out += coef * g
    return out


def skew_information(sqrt_rho: np.ndarray, k: np.ndarray) -> float:
    """Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2).

    Nonnegative, zero iff K commutes with rho, and equal to the variance
    <K^2> - <K>^2 when rho is pure.
    """
    sqrt_rho = require_hermitian(np.asarray(sqrt_rho), name="sqrt_rho")
    k = require_hermitian(np.asarray(k), name="K")
    c = commutator(sqrt_rho, k)
    return float(-0.5 * np.trace(c @ c).real)


def _embedded_generators(basis: GeneratorBasis, dim_a: int) -> list:
    eye_a = np.eye(dim_a)
    return [np.kron(eye_a, g) for g in basis.generators]


def w_matrix(sqrt_rho: np.ndarray, ja: Spin) -> np.ndarray:
    """Overlap matrix W_ij = Tr(sqrt(rho) (I x sigma_i) sqrt(rho) (I x sigma_j)).

    Measurements act on the spin-1/2 B side.  W is real symmetric with
    eigenvalues in [0, 1], and its diagonal satisfies
    W_ii = 1 - I(rho, I x sigma_i) because (I x sigma_i)^2 is the identity.
    """
    sqrt_rho = require_hermitian(np.asarray(sqrt_rho), name="sqrt_rho")
    if sqrt_rho.shape[0] != 2 * ja.dim:
        raise ValueError("the overlap-matrix route needs a spin-1/2 partner"
                         f" (dimension {2 * ja.dim}, got {sqrt_rho.shape[0]})")
    products = [sqrt_rho @ k for k in _embedded_generators(pauli_basis(), ja.dim)]
    w = np.empty((3, 3))
    for i in range(3):
        for k in range(i, 3):
            w[i, k] = w[k, i] = float(np.trace(products[i] @ products[k]).real)
    return w


def lqu_w_matrix(state: SU2InvariantState) -> LquResult:
    """LQU = 1 - max eigenvalue of W; spin-1/2 partner only."""
    if state.jb.twice != 1:
        raise ValueError("the w_matrix route requires a spin-1/2 partner (jB = 1/2)")
    w = w_matrix(sqrt_density_matrix(state), state.ja)
    return LquResult(1.0 - sym3_max_eigenvalue(w), "w_matrix")


def lqu_formula_spin_half(j: Spin, p: float) -> float:
    """Closed-form LQU of the spin-j x spin-1/2 family,

        8 j (j+1) (sqrt(P/2j) - sqrt((1-P)/(2(j+1))))^2 / (3 (2j+1)),

    which vanishes exactly at P = j/(2j+1) and reaches 1 at (j, P) = (1/2, 1).
    """
    if j.twice < 1:
        raise ValueError("the spin-1/2 family needs j >= 1/2")
    p = check_probability(p, "p")
    tj = j.twice
    gap = math.sqrt(p / tj) - math.sqrt((1.0 - p) / (tj + 2))
    return 2 * tj * (tj + 2) * gap * gap / (3 * (tj + 1))


def formula_branches_spin_one(j: Spin, p: float, q: float) -> tuple[float, float]:
    """The two stationary-direction skew informations of the spin-1 family as
    coefficient sums: (sum_m u1^2 + u2^2 + 4 u3^2, 3 sum_m u1^2 + u2^2)."""
    first = 0.0
    second = 0.0
    for tm in twice_m_range(j):
        c = spin_one_sqrt_coefficients(j, tm, p, q)
        first += c.u1 * c.u1 + c.u2 * c.u2 + 4.0 * c.u3 * c.u3
        second += c.u1 * c.u1 + c.u2 * c.u2
    return first, 3.0 * second


def lqu_formula_spin_one(j: Spin, p: float, q: float) -> float:
    """Closed-form LQU of the spin-j x spin-1 family: the smaller stationary value."""
    return min(formula_branches_spin_one(j, p, q))


def stationary_direction_values(state: SU2InvariantState) -> tuple[float, float]:
    """Skew information of a spin-1-partner state at the two stationary directions.

    Each value is evaluated from the commutator definition and checked against
    the coefficient-sum form before being returned.
    """
    if state.jb.twice != 2:
        raise ValueError("stationary directions are defined for a spin-1 partner (jB = 1)")
    p = state.sector_probs[Spin(state.ja.twice - 2)]
    q = state.sector_probs[Spin(state.ja.twice)]
    expected = formula_branches_spin_one(state.ja, p, q)
    root = sqrt_density_matrix(state)
    basis = gell_mann_basis()
    eye_a = np.eye(state.ja.dim)
    values = []
    for n, reference in zip(STATIONARY_DIRECTIONS, expected):
        value = skew_information(root, np.kron(eye_a, observable_from_direction(basis, n)))
        if abs(value - reference) > 1e-12:
            raise NumericalError(
                f"stationary-direction value {value} disagrees with its coefficient"
                f" sum {reference}", best_value=value, residual=abs(value - reference))
        values.append(value)
    return values[0], values[1]


_START_SEED = 61_803_398
_MAX_ITERATIONS = 10_000
_VALUE_TOL = 1e-12


def _start_directions(n_components: int, seeds: int) -> np.ndarray:
    """Fixed start sequence: warm starts plus a seeded Gaussian sphere sample."""
    if seeds < 0:
        raise ValueError("seeds must be nonnegative")
    warm = np.asarray(STATIONARY_DIRECTIONS) if n_components == 8 else np.eye(3)
    rng = np.random.default_rng(_START_SEED)
    points = rng.standard_normal((seeds, n_components))
    starts = np.vstack([warm, points]) if seeds else np.array(warm)
    return starts / np.linalg.norm(starts, axis=1, keepdims=True)


def _minimize_on_sphere(flat_commutators: np.ndarray, starts: np.ndarray):
    """Minimize f(n) = 0.5 |sum_i n_i C_i|_F^2 over unit n, all starts in lockstep.

    f(n) is exactly the skew information of the observable with coefficients n,
    by linearity of the commutator.  Each iteration takes the steepest-descent
    great circle and minimizes f along it in closed form, which never increases
    f, so the iteration terminates; starts parked at saddle points are harmless
    because only the minimum over starts is reported.
    """
    conj_flat = flat_commutators.conj()
    n = starts.copy()
    values = None
    for _ in range(_MAX_ITERATIONS):
        amplitudes = n @ flat_commutators
        values = 0.5 * np.einsum("si,si->s", amplitudes, amplitudes.conj()).real
        gradient = (amplitudes @ conj_flat.T).real
        radial = np.einsum("si,si->s", gradient, n)
        tangent = gradient - radial[:, None] * n
        tangent_norm = np.linalg.norm(tangent, axis=1)
        active = tangent_norm > 1e-14 * (1.0 + np.abs(values))
        if not np.any(active):
            break
        descent = -tangent[active] / tangent_norm[active, None]
        descent_amp = descent @ flat_commutators
        circle_far = 0.5 * np.einsum("si,si->s", descent_amp, descent_amp.conj()).real
        half_diff = (values[active] - circle_far) / 2
        half_cross = -tangent_norm[active] / 2
        radius = np.hypot(half_diff, half_cross)
        theta = (np.arctan2(half_cross, half_diff) + math.pi) / 2
        moved = (np.cos(theta)[:, None] * n[active]
                 + np.sin(theta)[:, None] * descent)
        n[active] = moved / np.linalg.norm(moved, axis=1, keepdims=True)
        new_values = (values[active] + circle_far) / 2 - radius
        improvement = values[active] - new_values
        if improvement.max() <= _VALUE_TOL * (1.0 + np.abs(values[active]).max()):
            values[active] = new_values
            break
        values[active] = new_values
    else:
        best = float(values.min())
        raise NumericalError(
            f"sphere minimization did not converge within {_MAX_ITERATIONS} iterations"
            f" (best value so far {best})", best_value=best)
    index = int(np.argmin(values))
    return n[index], float(values[index])


def lqu_numeric(state: SU2InvariantState, seeds: int = 64) -> LquResult:
    """LQU by direct minimization of the skew information over the unit sphere
    of generator coefficients.

    Runs `seeds` quasi-random starts plus warm starts (the two stationary
    directions for a spin-1 partner, the coordinate axes for spin-1/2) and
    reports the best local minimum with its direction.  Deterministic for a
    fixed seed count.
    """
    if state.jb.twice not in (1, 2):
        raise ValueError("numeric minimization supports jB in {1/2, 1}")
    basis = generator_basis(state.jb.dim)
    root = sqrt_density_matrix(state)
    stack = np.stack([commutator(root, k) for k in _embedded_generators(basis, state.ja.dim)])
    flat = stack.reshape(len(basis), -1)
    starts = _start_directions(len(basis), seeds)
    direction, value = _minimize_on_sphere(flat, starts)
    return LquResult(value, "numeric_min", direction)
