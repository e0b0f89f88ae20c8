import math

import numpy as np
import pytest

from su2lqu.angular import (HALF, ONE, Spin, cg_spin_half, cg_spin_one,
                            coupled_vector, product_index, projector,
                            sector_spins, spin_matrices, twice_m_range)

SQ2 = math.sqrt(2)


class TestSpin:
    @pytest.mark.parametrize("text,twice", [("1/2", 1), ("5/2", 5), ("3", 6),
                                            (2, 4), (2.5, 5), ("0", 0)])
    def test_parse(self, text, twice):
        assert Spin.parse(text).twice == twice

    @pytest.mark.parametrize("text", ["1/3", "-1", "0.3", "j"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Spin.parse(text)

    def test_dim_and_str(self):
        assert Spin(5).dim == 6
        assert str(Spin(5)) == "5/2"
        assert str(Spin(4)) == "2"

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Spin(-1)

    def test_m_range_descends(self):
        assert list(twice_m_range(Spin(3))) == [3, 1, -1, -3]


class TestCgSpinHalf:
    def test_triplet_center(self):
        a, b = cg_spin_half(HALF, 0, "plus")
        assert np.allclose((a, b), (1 / SQ2, 1 / SQ2))

    def test_singlet_center(self):
        a, b = cg_spin_half(HALF, 0, "minus")
        assert np.allclose((a, b), (-1 / SQ2, 1 / SQ2))

    def test_stretched(self):
        assert cg_spin_half(HALF, 2, "plus") == (1.0, 0.0)

    @pytest.mark.parametrize("tj", range(1, 22))
    def test_normalization_and_signs(self, tj):
        j = Spin(tj)
        for branch, t_total in (("plus", tj + 1), ("minus", tj - 1)):
            if t_total < 0:
                continue
            for tm in twice_m_range(Spin(t_total)):
                a, b = cg_spin_half(j, tm, branch)
                assert abs(a * a + b * b - 1.0) <= 1e-14
                assert b >= 0.0
                if branch == "minus":
                    assert a < 0.0

    def test_rejects_out_of_range_m(self):
        with pytest.raises(ValueError, match="outside"):
            cg_spin_half(HALF, 2, "minus")

    def test_rejects_unknown_branch(self):
        with pytest.raises(ValueError, match="branch"):
            cg_spin_half(HALF, 0, "up")


class TestCgSpinOne:
    def test_stretched_top_sector(self):
        assert cg_spin_one(ONE, 4, 1) == (1.0, 0.0, 0.0)

    def test_middle_sector_center_component_vanishes(self):
        x1, x2, x3 = cg_spin_one(ONE, 0, 0)
        assert x2 == 0.0
        assert x1 < 0.0 < x3

    def test_lowest_sector_center(self):
        x1, x2, x3 = cg_spin_one(ONE, 0, -1)
        assert np.allclose((x1, x2, x3),
                           (math.sqrt(1 / 3), -math.sqrt(1 / 3), math.sqrt(1 / 3)))

    @pytest.mark.parametrize("tj", range(1, 22))
    def test_normalization_and_signs(self, tj):
        j = Spin(tj)
        for sector in (1, 0, -1):
            t_total = tj + 2 * sector
            if t_total < abs(tj - 2):
                continue
            for tm in twice_m_range(Spin(t_total)):
                x = cg_spin_one(j, tm, sector)
                assert abs(sum(c * c for c in x) - 1.0) <= 1e-14
                if sector == 0:
                    assert x[0] <= 0.0
                if sector == -1:
                    assert x[1] <= 0.0

    def test_rejects_missing_sector(self):
        with pytest.raises(ValueError, match="triangle"):
            cg_spin_one(Spin(1), 1, -1)

    def test_rejects_out_of_range_m(self):
        with pytest.raises(ValueError, match="outside"):
            cg_spin_one(ONE, 2, -1)


class TestCoupledVector:
    def test_singlet_amplitudes(self):
        vec = coupled_vector(HALF, HALF, Spin(0), 0).amplitudes
        # basis order: |uu>, |ud>, |du>, |dd>
        assert np.allclose(vec, [0.0, 1 / SQ2, -1 / SQ2, 0.0])

    def test_stretched_spin_one_pair(self):
        vec = coupled_vector(ONE, ONE, Spin(4), 4).amplitudes
        expected = np.zeros(9)
        expected[product_index(ONE, ONE, 2, 2)] = 1.0
        assert np.array_equal(vec, expected)

    def test_support_respects_total_m(self):
        j1, j2 = Spin(5), ONE
        vec = coupled_vector(j1, j2, Spin(5), 1)
        for tm1 in twice_m_range(j1):
            for tm2 in twice_m_range(j2):
                amp = vec.amplitudes[product_index(j1, j2, tm1, tm2)]
                if tm1 + tm2 != 1:
                    assert amp == 0.0

    def test_orthonormal_across_sectors(self):
        j1, j2 = Spin(5), ONE
        vecs = [coupled_vector(j1, j2, total, 1).amplitudes
                for total in sector_spins(j1, j2)]
        gram = np.array([[u @ v for v in vecs] for u in vecs])
        assert np.abs(gram - np.eye(3)).max() <= 1e-12

    def test_rejects_triangle_violation(self):
        with pytest.raises(ValueError, match="triangle"):
            coupled_vector(HALF, HALF, Spin(4), 0)

    def test_rejects_unsupported_partner(self):
        with pytest.raises(ValueError, match="partner"):
            coupled_vector(Spin(4), Spin(4), Spin(8), 0)


@pytest.mark.parametrize("tj1", range(1, 22))
@pytest.mark.parametrize("j2", [HALF, ONE])
def test_cg_columns_orthonormal(tj1, j2):
    """Columns of all coupled vectors form an orthonormal basis of j1 x j2."""
    j1 = Spin(tj1)
    columns = np.stack(
        [coupled_vector(j1, j2, total, tm).amplitudes
         for total in sector_spins(j1, j2) for tm in twice_m_range(total)],
        axis=1)
    gram = columns.T @ columns
    assert np.abs(gram - np.eye(columns.shape[1])).max() <= 1e-12


class TestProjector:
    def test_triplet_trace(self):
        pi = projector(HALF, HALF, Spin(2))
        assert abs(np.trace(pi).real - 3.0) <= 1e-12

    @pytest.mark.parametrize("tj1,j2", [(1, HALF), (4, HALF), (5, HALF),
                                        (2, ONE), (5, ONE), (11, ONE)])
    def test_idempotent_orthogonal_complete(self, tj1, j2):
        j1 = Spin(tj1)
        sectors = sector_spins(j1, j2)
        projs = [projector(j1, j2, total) for total in sectors]
        for total, pi in zip(sectors, projs):
            assert np.abs(pi @ pi - pi).max() <= 1e-12
            assert abs(np.trace(pi).real - total.dim) <= 1e-12
        for i in range(len(projs)):
            for k in range(i + 1, len(projs)):
                assert np.abs(projs[i] @ projs[k]).max() <= 1e-12
        total_sum = sum(projs)
        assert np.abs(total_sum - np.eye(j1.dim * j2.dim)).max() <= 1e-12

    def test_rank_five_sector_of_half_integer_pair(self):
        pi = projector(Spin(5), HALF, Spin(4))
        assert abs(np.trace(pi).real - 5.0) <= 1e-12
        assert np.abs(pi @ pi - pi).max() <= 1e-12


class TestSpinMatrices:
    @pytest.mark.parametrize("tj", [1, 2, 3, 7, 10])
    def test_su2_algebra_and_casimir(self, tj):
        jx, jy, jz = spin_matrices(Spin(tj))
        assert np.abs(jx @ jy - jy @ jx - 1j * jz).max() <= 1e-12
        casimir = jx @ jx + jy @ jy + jz @ jz
        j = tj / 2
        assert np.abs(casimir - j * (j + 1) * np.eye(tj + 1)).max() <= 1e-12

    def test_spin_half_is_half_pauli(self):
        jx, jy, jz = spin_matrices(HALF)
        assert np.allclose(2 * jz, np.diag([1.0, -1.0]))
        assert np.allclose(2 * jx, np.array([[0, 1], [1, 0]]))
