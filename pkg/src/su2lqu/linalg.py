"""Dense complex linear algebra shared by the rest of the package."""

from __future__ import annotations

import math

import numpy as np

HERMITICITY_TOL = 1e-12
PSD_CLAMP = 1e-10


class NumericalError(RuntimeError):
    """A numerical routine failed to meet its accuracy contract.

    Carries the best value obtained so far when one is available.
    """

    def __init__(self, message: str, best_value: float | None = None,
                 residual: float | None = None):
        super().__init__(message)
        self.best_value = best_value
        self.residual = residual


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    return float(np.abs(m - m.conj().T).max())


def require_square(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def require_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL,
                      name: str = "matrix") -> np.ndarray:
    m = require_square(m, name)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise ValueError(
            f"{name} is not Hermitian: max |M - M^dag| = {defect:.3e} exceeds {tol:.1e}")
    return m


def eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Returns (eigenvalues, eigenvectors) with eigenvectors as columns, so that
    V diag(w) V^dag reconstructs the input.
    """
    m = require_hermitian(m)
    sym = (m + m.conj().T) / 2
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        off = float(np.abs(sym - np.diag(np.diag(sym))).max())
        raise NumericalError(
            f"eigendecomposition did not converge (off-diagonal magnitude {off:.3e})",
            residual=off) from exc
    return w, v


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in (-PSD_CLAMP, 0) are rounding noise from projector sums and
    are clamped to zero; anything below -PSD_CLAMP is a hard error.
    """
    w, v = eigh(m)
    if w[0] < -PSD_CLAMP:
        raise ValueError(
            f"matrix is not positive semidefinite: min eigenvalue {w[0]:.3e}")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return (root + root.conj().T) / 2


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b - b @ a; anti-Hermitian whenever both arguments are Hermitian."""
    a = require_square(a, "a")
    b = require_square(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def sym3_max_eigenvalue(w: np.ndarray) -> float:
    """Largest eigenvalue of a real symmetric 3x3 matrix via the closed-form cubic.

    The largest root of the characteristic polynomial is the best conditioned
    of the three, so the trigonometric formula reaches ~1e-15 relative error.
    """
    a = np.asarray(w, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    if float(np.abs(a - a.T).max()) > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2
    p1 = a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2
    if p1 == 0.0:
        return float(max(a[0, 0], a[1, 1], a[2, 2]))
    q = (a[0, 0] + a[1, 1] + a[2, 2]) / 3
    p2 = (a[0, 0] - q) ** 2 + (a[1, 1] - q) ** 2 + (a[2, 2] - q) ** 2 + 2 * p1
    p = math.sqrt(p2 / 6)
    b = (a - q * np.eye(3)) / p
    det_b = (b[0, 0] * (b[1, 1] * b[2, 2] - b[1, 2] * b[2, 1])
             - b[0, 1] * (b[1, 0] * b[2, 2] - b[1, 2] * b[2, 0])
             + b[0, 2] * (b[1, 0] * b[2, 1] - b[1, 1] * b[2, 0]))
    r = min(1.0, max(-1.0, det_b / 2))
    phi = math.acos(r) / 3
    return float(q + 2 * p * math.cos(phi))
