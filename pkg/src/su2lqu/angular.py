"""Half-integer spin arithmetic, coupling to spin-1/2 and spin-1 partners, and
total-angular-momentum projectors.

Spins and magnetic quantum numbers travel as twice their value in plain
integers, so all sector bookkeeping is exact and square roots are the only
floating-point step.  The product basis is ordered |j1, m> (x) |j2, m'> with m
descending from j1 and, within that, m' descending from j2, which makes matrix
dumps reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True, order=True)
class Spin:
    """Angular momentum j stored as the integer 2j."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be an int, got {type(self.twice).__name__}")
        if self.twice < 0:
            raise ValueError(f"spin must be nonnegative, got {self.twice}/2")

    @property
    def j(self) -> float:
        return self.twice / 2

    @property
    def dim(self) -> int:
        """Dimension 2j + 1 of the spin-j multiplet."""
        return self.twice + 1

    @classmethod
    def parse(cls, text) -> "Spin":
        """Parse '5/2', '3', 2.5, or a Fraction into a Spin."""
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse spin from {text!r}") from exc
        if value.denominator not in (1, 2):
            raise ValueError(f"spin must be an integer or half-integer, got {text!r}")
        if value < 0:
            raise ValueError(f"spin must be nonnegative, got {text!r}")
        return cls(int(value * 2))

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


HALF = Spin(1)
ONE = Spin(2)


def twice_m_range(spin: Spin) -> range:
    """Twice-m values of the multiplet, descending from 2j to -2j."""
    return range(spin.twice, -spin.twice - 1, -2)


def require_magnetic(spin: Spin, tm: int, name: str = "m") -> int:
    """Validate a twice-m index against its multiplet: |m| <= j, m - j integer."""
    if (spin.twice - tm) % 2 != 0:
        raise ValueError(f"{name} = {tm}/2 is not an integer offset from j = {spin}")
    if abs(tm) > spin.twice:
        raise ValueError(f"{name} = {tm}/2 outside the multiplet of j = {spin}")
    return tm


def product_index(j1: Spin, j2: Spin, tm1: int, tm2: int) -> int:
    """Row index of the product ket |j1, m1>|j2, m2> in the fixed basis order."""
    require_magnetic(j1, tm1, "m1")
    require_magnetic(j2, tm2, "m2")
    return ((j1.twice - tm1) // 2) * j2.dim + (j2.twice - tm2) // 2


def sector_spins(j1: Spin, j2: Spin) -> tuple[Spin, ...]:
    """Total spins allowed by the triangle rule, ascending."""
    lo = abs(j1.twice - j2.twice)
    return tuple(Spin(t) for t in range(lo, j1.twice + j2.twice + 1, 2))


def cg_spin_half(j: Spin, tm: int, branch: str) -> tuple[float, float]:
    """Coupling j x 1/2 -> J = j +/- 1/2.

    Returns (a, b) such that |J, m> = a |j, m-1/2>|up> + b |j, m+1/2>|down>,
    a = +/- sqrt((j + 1/2 +/- m) / (2j + 1)) and b = sqrt((j + 1/2 -/+ m) / (2j + 1)).
    Arguments under the square roots are exact integers and hit zero exactly at
    the multiplet boundaries.
    """
    tj = j.twice
    if branch == "plus":
        total = Spin(tj + 1)
    elif branch == "minus":
        if tj < 1:
            raise ValueError("no J = j - 1/2 sector for j = 0")
        total = Spin(tj - 1)
    else:
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    require_magnetic(total, tm)
    den = 2 * (tj + 1)
    up = math.sqrt((tj + 1 + tm) / den)
    down = math.sqrt((tj + 1 - tm) / den)
    return (up, down) if branch == "plus" else (-down, up)


def cg_spin_one(j: Spin, tm: int, sector: int) -> tuple[float, float, float]:
    """Coupling j x 1 -> J = j + sector with sector in {+1, 0, -1}.

    Returns (x1, x2, x3) such that
    |J, m> = x1 |j, m-1>|1,1> + x2 |j, m>|1,0> + x3 |j, m+1>|1,-1>.
    Signs follow the usual convention: x1 < 0 in the J = j sector and x2 < 0
    in the J = j - 1 sector wherever they do not vanish.
    """
    if sector not in (1, 0, -1):
        raise ValueError(f"sector must be +1, 0 or -1, got {sector!r}")
    tj = j.twice
    t_total = tj + 2 * sector
    if t_total < abs(tj - 2):
        raise ValueError(f"sector J = j{sector:+d} violates the triangle rule for j = {j}")
    require_magnetic(Spin(t_total), tm)
    minus = tj - tm   # 2(j - m)
    plus = tj + tm    # 2(j + m)
    if sector == 1:
        den = 4 * (tj + 1) * (tj + 2)
        return (math.sqrt(plus * (plus + 2) / den),
                math.sqrt(2 * (minus + 2) * (plus + 2) / den),
                math.sqrt(minus * (minus + 2) / den))
    if sector == 0:
        den = 2 * tj * (tj + 2)
        return (-math.sqrt(plus * (minus + 2) / den),
                tm / math.sqrt(tj * (tj + 2)),
                math.sqrt(minus * (plus + 2) / den))
    den = 4 * tj * (tj + 1)
    return (math.sqrt(minus * (minus + 2) / den),
            -math.sqrt(2 * minus * plus / den),
            math.sqrt(plus * (plus + 2) / den))


@dataclass(frozen=True)
class CoupledVector:
    """Total-angular-momentum eigenstate |J, M> expanded over the product basis."""

    j1: Spin
    j2: Spin
    total: Spin
    twice_m: int
    amplitudes: np.ndarray


def coupled_vector(j1: Spin, j2: Spin, total: Spin, tm: int) -> CoupledVector:
    """Build |J, M> of j1 x j2 for j2 in {1/2, 1}.

    Coefficients that would multiply kets outside the j1 multiplet are asserted
    to vanish (they do, exactly, by the integer arithmetic) rather than skipped,
    which catches index errors.
    """
    if j2.twice not in (1, 2):
        raise ValueError("only spin-1/2 and spin-1 partners are supported")
    if not (abs(j1.twice - j2.twice) <= total.twice <= j1.twice + j2.twice) \
            or (j1.twice + j2.twice - total.twice) % 2 != 0:
        raise ValueError(f"total spin {total} violates the triangle rule for {j1} x {j2}")
    require_magnetic(total, tm, "M")
    if j2.twice == 1:
        coeffs = cg_spin_half(j1, tm, "plus" if total.twice > j1.twice else "minus")
        parts = ((tm - 1, 1), (tm + 1, -1))
    else:
        coeffs = cg_spin_one(j1, tm, (total.twice - j1.twice) // 2)
        parts = ((tm - 2, 2), (tm, 0), (tm + 2, -2))
    vec = np.zeros(j1.dim * j2.dim)
    for coef, (tm1, tm2) in zip(coeffs, parts):
        if abs(tm1) > j1.twice:
            assert coef == 0.0, f"nonzero weight {coef} on missing ket m1 = {tm1}/2"
            continue
        vec[product_index(j1, j2, tm1, tm2)] = coef
    return CoupledVector(j1, j2, total, tm, vec)


def projector(j1: Spin, j2: Spin, total: Spin) -> np.ndarray:
    """Projector onto the total-spin-J subspace of j1 x j2, in the product basis."""
    columns = np.stack(
        [coupled_vector(j1, j2, total, tm).amplitudes for tm in twice_m_range(total)],
        axis=1)
    return (columns @ columns.T).astype(complex)


def spin_matrices(spin: Spin) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Angular momentum matrices (Jx, Jy, Jz) in the basis |j, m>, m descending."""
    tj = spin.twice
    jz = np.diag([tm / 2 for tm in twice_m_range(spin)]).astype(complex)
    raise_op = np.zeros((spin.dim, spin.dim), dtype=complex)
    for col in range(1, spin.dim):
        tm = tj - 2 * col
        raise_op[col - 1, col] = math.sqrt((tj - tm) * (tj + tm + 2)) / 2
    lower_op = raise_op.conj().T
    jx = (raise_op + lower_op) / 2
    jy = (raise_op - lower_op) / 2j
    return jx, jy, jz
