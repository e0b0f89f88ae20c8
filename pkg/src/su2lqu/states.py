"""SU(2)-invariant bipartite states of spin-j x spin-1/2 and spin-j x spin-1.

A state is a convex mixture of normalized projectors onto total-angular-
momentum sectors.  The spectral sums over sector projectors are the
authoritative construction for both rho and sqrt(rho); the product-basis
coefficient formulas are kept as an independent second route and the two are
cross-checked entrywise in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .angular import (HALF, ONE, Spin, projector, require_magnetic, sector_spins,
                      cg_spin_one, spin_matrices)
from .linalg import hermiticity_defect

PROB_TOL = 1e-12


def check_probability(value: float, name: str = "p") -> float:
    """Validate a probability within absolute tolerance 1e-12 and clamp to [0, 1]."""
    value = float(value)
    if not -PROB_TOL <= value <= 1.0 + PROB_TOL:
        raise ValueError(f"{name} = {value} outside [0, 1]")
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class SU2InvariantState:
    """Mixture of total-spin sector projectors, keyed by the sector spin J.

    Weights p_J must cover exactly the sectors allowed by the triangle rule,
    be nonnegative, and sum to one (within 1e-12 on input; out-of-simplex
    weights are hard errors, never renormalized away).
    """

    ja: Spin
    jb: Spin
    sector_probs: dict

    def __post_init__(self):
        allowed = sector_spins(self.ja, self.jb)
        if set(self.sector_probs) != set(allowed):
            labels = ", ".join(str(s) for s in allowed)
            raise ValueError(f"sector probabilities must be keyed by exactly J in {{{labels}}}")
        cleaned = {}
        for sector in allowed:
            cleaned[sector] = check_probability(self.sector_probs[sector], f"p[J={sector}]")
        total = sum(cleaned.values())
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"sector probabilities sum to {total}, not 1")
        object.__setattr__(self, "sector_probs", cleaned)

    @property
    def dim(self) -> int:
        return self.ja.dim * self.jb.dim


def build_state_spin_half(j: Spin, p: float) -> SU2InvariantState:
    """State of spin-j x spin-1/2 with weight p on the J = j - 1/2 sector."""
    if j.twice < 1:
        raise ValueError("the spin-1/2 family needs j >= 1/2")
    p = check_probability(p, "p")
    return SU2InvariantState(j, HALF, {Spin(j.twice - 1): p, Spin(j.twice + 1): 1.0 - p})


def build_state_spin_one(j: Spin, p: float, q: float) -> SU2InvariantState:
    """State of spin-j x spin-1 with weights (p, q, 1-p-q) on J = j-1, j, j+1."""
    if j.twice < 2:
        raise ValueError("the spin-1 family needs j >= 1 so the J = j - 1 sector exists")
    p = check_probability(p, "p")
    q = check_probability(q, "q")
    if p + q > 1.0 + PROB_TOL:
        raise ValueError(f"p + q = {p + q} exceeds 1")
    return SU2InvariantState(
        j, ONE,
        {Spin(j.twice - 2): p, Spin(j.twice): q, Spin(j.twice + 2): 1.0 - p - q})


def _projector_mixture(state: SU2InvariantState, weight) -> np.ndarray:
    out = np.zeros((state.dim, state.dim), dtype=complex)
    for sector, prob in state.sector_probs.items():
        out += weight(prob, sector.dim) * projector(state.ja, state.jb, sector)
    return out


def to_density_matrix(state: SU2InvariantState) -> np.ndarray:
    """rho = sum_J p_J / (2J + 1) Pi_J in the product basis."""
    return _projector_mixture(state, lambda p, d: p / d)


def sqrt_density_matrix(state: SU2InvariantState) -> np.ndarray:
    """sqrt(rho) = sum_J sqrt(p_J / (2J + 1)) Pi_J; same projectors, root weights."""
    return _projector_mixture(state, lambda p, d: math.sqrt(p / d))


class SpinHalfCoefficients(NamedTuple):
    u: float
    v: float
    w: float


def spin_half_coefficients(j: Spin, tm: int, p: float) -> SpinHalfCoefficients:
    """Product-basis entries of rho for the spin-1/2 family at A-side index m.

    u and v sit on the diagonal against |up><up| and |down><down|; w connects
    |m, up> with |m+1, down> and vanishes at m = j.
    """
    if j.twice < 1:
        raise ValueError("the spin-1/2 family needs j >= 1/2")
    require_magnetic(j, tm)
    p = check_probability(p, "p")
    tj = j.twice
    lower = p / tj               # P / 2j
    upper = (1.0 - p) / (tj + 2)  # (1 - P) / (2(j + 1))
    den = 2 * (tj + 1)
    u = lower * (tj - tm) / den + upper * (tj + tm + 2) / den
    v = lower * (tj + tm) / den + upper * (tj - tm + 2) / den
    w = -math.sqrt((tj - tm) * (tj + tm + 2)) / den * (lower - upper)
    return SpinHalfCoefficients(u, v, w)


class SpinOneSqrtCoefficients(NamedTuple):
    v1: float
    v2: float
    v3: float
    u1: float
    u2: float
    u3: float


def spin_one_sqrt_coefficients(j: Spin, tm: int, p: float, q: float) -> SpinOneSqrtCoefficients:
    """Entries of sqrt(rho) on the total-z-projection-m block for the spin-1 family.

    The block is spanned by |m-1>|1,1>, |m>|1,0>, |m+1>|1,-1>; v1, v2, v3 are its
    diagonal and u1, u2, u3 the (1,2), (3,2), (1,3) off-diagonal entries.  Each
    sector contributes sqrt(p_J / (2J+1)) times products of its coupling
    coefficients; sectors whose multiplet does not reach m contribute zero.
    """
    tj = j.twice
    if tj < 2:
        raise ValueError("the spin-1 family needs j >= 1")
    if (tj - tm) % 2 != 0:
        raise ValueError(f"m = {tm}/2 is not an integer offset from j = {j}")
    if abs(tm) > tj + 2:
        raise ValueError(f"m = {tm}/2 outside every sector of j = {j}")
    p = check_probability(p, "p")
    q = check_probability(q, "q")
    if p + q > 1.0 + PROB_TOL:
        raise ValueError(f"p + q = {p + q} exceeds 1")
    out = [0.0] * 6
    for sector, prob in ((-1, p), (0, q), (1, max(1.0 - p - q, 0.0))):
        t_total = tj + 2 * sector
        if abs(tm) > t_total:
            continue
        root = math.sqrt(prob / (t_total + 1))
        x1, x2, x3 = cg_spin_one(j, tm, sector)
        out[0] += root * x1 * x1
        out[1] += root * x2 * x2
        out[2] += root * x3 * x3
        out[3] += root * x1 * x2
        out[4] += root * x3 * x2
        out[5] += root * x1 * x3
    return SpinOneSqrtCoefficients(*out)


def check_su2_invariance(rho: np.ndarray, j1: Spin, j2: Spin) -> float:
    """Largest entry of [rho, J_k x I + I x J_k] over k in {x, y, z}.

    Vanishing commutators with all three total spin components is equivalent
    to invariance under joint rotations, so this is an exact invariance test.
    """
    rho = np.asarray(rho)
    d = j1.dim * j2.dim
    if rho.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} matrix for {j1} x {j2}, got {rho.shape}")
    eye1 = np.eye(j1.dim)
    eye2 = np.eye(j2.dim)
    worst = 0.0
    for k1, k2 in zip(spin_matrices(j1), spin_matrices(j2)):
        total = np.kron(k1, eye2) + np.kron(eye1, k2)
        worst = max(worst, float(np.abs(rho @ total - total @ rho).max()))
    return worst


def sector_probabilities(rho: np.ndarray, j1: Spin, j2: Spin) -> dict:
    """Recover sector weights p_J = Tr(rho Pi_J)."""
    return {sector: float(np.trace(rho @ projector(j1, j2, sector)).real)
            for sector in sector_spins(j1, j2)}


def validation_residuals(state: SU2InvariantState) -> dict:
    """Diagnostics for a constructed state; every entry is ~0 for a valid build."""
    rho = to_density_matrix(state)
    root = sqrt_density_matrix(state)
    eigenvalues = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    recovered = sector_probabilities(rho, state.ja, state.jb)
    return {
        "trace": abs(float(np.trace(rho).real) - 1.0),
        "hermiticity": hermiticity_defect(rho),
        "psd": max(0.0, -float(eigenvalues[0])),
        "invariance": check_su2_invariance(rho, state.ja, state.jb),
        "sqrt_consistency": float(np.abs(root @ root - rho).max()),
        "sector_roundtrip": max(abs(recovered[s] - p) for s, p in state.sector_probs.items()),
    }
