import numpy as np
import pytest
from numpy.testing import assert_allclose

from trideph.errors import ContractError
from trideph.linalg import hermitian_eigenvalues, von_neumann_entropy
from trideph.states import PurityMix, ghz_state, make_state, w_state


class TestGHZFamily:
    def test_fully_mixed(self):
        assert_allclose(ghz_state(0.0), np.eye(8) / 8, atol=0)

    def test_pure(self):
        rho = ghz_state(1.0)
        assert_allclose(rho[0, 0], 0.5, atol=0)
        assert_allclose(rho[7, 7], 0.5, atol=0)
        assert_allclose(rho[0, 7], 0.5, atol=0)
        assert_allclose(hermitian_eigenvalues(rho), [1] + [0] * 7, atol=1e-12)

    def test_structure(self):
        r = 0.6
        rho = ghz_state(r)
        background = (1 - r) / 8
        diag = np.diag(rho).real
        assert_allclose(diag[0], background + r / 2)
        assert_allclose(diag[7], background + r / 2)
        assert_allclose(diag[1:7], background)
        off = rho.copy()
        np.fill_diagonal(off, 0)
        off[0, 7] = off[7, 0] = 0
        assert np.max(np.abs(off)) == 0.0

    def test_two_distinct_eigenvalues(self):
        r = 0.37
        w = hermitian_eigenvalues(ghz_state(r))
        assert_allclose(w[0], (1 - r) / 8 + r, atol=1e-12)
        assert_allclose(w[1:], np.full(7, (1 - r) / 8), atol=1e-12)


class TestWFamily:
    def test_point_values(self):
        rho = w_state(0.98)
        background = 0.02 / 8
        assert_allclose(background, 0.0025)
        diag = np.diag(rho).real
        for idx in (3, 5, 6):  # |100>, |010>, |001>
            assert_allclose(diag[idx], background + 0.98 / 3)
        for idx in (0, 1, 2, 4, 7):
            assert_allclose(diag[idx], background)
        for i, j in ((3, 5), (3, 6), (5, 6)):
            assert_allclose(rho[i, j], 0.98 / 3, atol=0)

    def test_pure_entropy_zero(self):
        assert von_neumann_entropy(w_state(1.0)) < 1e-12


class TestContracts:
    def test_trace_one_exact(self):
        for family in ("GHZ", "W"):
            for r in (0.0, 0.3, 1.0):
                assert np.trace(make_state(PurityMix(family, r))).real == pytest.approx(1.0, abs=1e-15)

    def test_hermitian_exact(self):
        rho = w_state(0.5)
        assert np.array_equal(rho, rho.conj().T)

    def test_invalid_purity(self):
        with pytest.raises(ContractError):
            PurityMix("GHZ", 1.2)
        with pytest.raises(ContractError):
            PurityMix("W", -0.01)

    def test_invalid_family(self):
        with pytest.raises(ContractError):
            PurityMix("GHZ2", 0.5)
