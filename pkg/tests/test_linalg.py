import numpy as np
import pytest

from su2lqu.angular import Spin, projector, sector_spins
from su2lqu.linalg import (commutator, eigh, hermiticity_defect, matrix_sqrt_psd,
                           sym3_max_eigenvalue)
from su2lqu.states import build_state_spin_half, sqrt_density_matrix, to_density_matrix

rng = np.random.default_rng(20250808)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def random_hermitian(dim):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2


class TestEigh:
    def test_identity(self):
        w, _ = eigh(np.eye(2, dtype=complex))
        assert np.allclose(w, [1.0, 1.0])

    def test_already_diagonal_sorted_ascending(self):
        w, _ = eigh(np.diag([3.0, -1.0]).astype(complex))
        assert np.allclose(w, [-1.0, 3.0])

    def test_pauli_x_spectrum(self):
        w, _ = eigh(SX)
        assert np.allclose(w, [-1.0, 1.0])

    @pytest.mark.parametrize("dim", [1, 2, 5, 17, 40])
    def test_reconstruction_and_unitarity(self, dim):
        m = random_hermitian(dim)
        w, v = eigh(m)
        assert np.all(np.diff(w) >= 0)
        assert np.abs(v @ np.diag(w) @ v.conj().T - m).max() <= 1e-10 * dim
        assert np.abs(v.conj().T @ v - np.eye(dim)).max() <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            eigh(np.zeros((2, 3)))


class TestMatrixSqrtPsd:
    def test_identity(self):
        assert np.allclose(matrix_sqrt_psd(np.eye(3, dtype=complex)), np.eye(3))

    def test_diagonal(self):
        assert np.allclose(matrix_sqrt_psd(np.diag([4.0, 0.0])), np.diag([2.0, 0.0]))

    @pytest.mark.parametrize("dim", [2, 3, 8, 25])
    def test_squares_back(self, dim):
        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        m = a.conj().T @ a
        root = matrix_sqrt_psd(m)
        assert hermiticity_defect(root) <= 1e-12
        assert np.abs(root @ root - m).max() <= 1e-10 * dim * np.abs(m).max()

    def test_matches_spectral_root_of_invariant_state(self):
        state = build_state_spin_half(Spin(1), 0.5)
        via_eigh = matrix_sqrt_psd(to_density_matrix(state))
        via_projectors = sqrt_density_matrix(state)
        assert np.abs(via_eigh - via_projectors).max() <= 1e-10

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError, match="positive semidefinite"):
            matrix_sqrt_psd(np.diag([1.0, -1.0]))

    def test_clamps_rounding_noise(self):
        root = matrix_sqrt_psd(np.diag([1.0, -5e-11]))
        assert np.allclose(root, np.diag([1.0, 0.0]))


class TestCommutator:
    def test_self_commutator_vanishes(self):
        assert np.abs(commutator(SZ, SZ)).max() == 0.0

    def test_pauli_algebra(self):
        assert np.allclose(commutator(SX, SY), 2j * SZ)

    def test_antisymmetry_is_exact_negation(self):
        a = random_hermitian(6)
        b = random_hermitian(6)
        assert np.array_equal(commutator(a, b), -commutator(b, a))

    @pytest.mark.parametrize("tj", [1, 2, 5, 8])
    def test_sector_projectors_commute(self, tj):
        j = Spin(tj)
        low, high = sector_spins(j, Spin(1))
        c = commutator(projector(j, Spin(1), low), projector(j, Spin(1), high))
        assert np.abs(c).max() <= 1e-14

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            commutator(np.eye(2), np.eye(3))


class TestSym3MaxEigenvalue:
    def test_identity(self):
        assert sym3_max_eigenvalue(np.eye(3)) == 1.0

    def test_diagonal(self):
        assert sym3_max_eigenvalue(np.diag([0.2, 0.5, 0.9])) == 0.9

    @pytest.mark.parametrize("scale", [1.0, 1e-6, 1e6])
    def test_against_lapack(self, scale):
        for _ in range(50):
            a = rng.standard_normal((3, 3)) * scale
            a = (a + a.T) / 2
            reference = float(np.linalg.eigvalsh(a)[-1])
            value = sym3_max_eigenvalue(a)
            assert abs(value - reference) <= 1e-12 * max(1.0, abs(reference))

    def test_near_degenerate(self):
        a = np.eye(3) + 1e-14 * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0.0]])
        reference = float(np.linalg.eigvalsh(a)[-1])
        assert abs(sym3_max_eigenvalue(a) - reference) <= 1e-12

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            sym3_max_eigenvalue(np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0.0]]))

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="3x3"):
            sym3_max_eigenvalue(np.eye(4))
