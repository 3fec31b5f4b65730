import warnings

import numpy as np
import pytest

from src.anticonc.core.exceptions import ConvergenceError, RankDeficiencyError
from src.anticonc.core.rng import Rng
from src.anticonc.numerics.linalg import householder_qr, jacobi_eigh
from src.anticonc.simulator.gates import dagger, unitarity_deviation


class TestHouseholderQR:
    """Householder QR against its defining identities."""

    @pytest.mark.parametrize("N", [1, 2, 4, 8])
    def test_reconstructs_input(self, N, rng):
        z = rng.complex_normal((N, N))
        q, r = householder_qr(z)
        np.testing.assert_allclose(q @ r, z, atol=1e-12)
        assert unitarity_deviation(q) < 1e-12
        np.testing.assert_allclose(np.tril(r, -1), 0, atol=0)

    def test_batched(self, rng):
        z = rng.complex_normal((50, 4, 4))
        q, r = householder_qr(z)
        np.testing.assert_allclose(q @ r, z, atol=1e-12)

    def test_zero_column_raises(self):
        z = np.zeros((3, 3), dtype=complex)
        z[0, 0] = 1
        with pytest.raises(RankDeficiencyError):
            householder_qr(z)


class TestJacobiEigh:
    """Cyclic Jacobi against LAPACK."""

    @pytest.mark.parametrize("N", [2, 4, 16])
    def test_matches_lapack_eigenvalues(self, N, rng):
        r = rng.complex_normal((N, N))
        h = r + dagger(r)
        values, vectors = jacobi_eigh(h)
        np.testing.assert_allclose(values, np.linalg.eigvalsh(h), atol=1e-9)
        np.testing.assert_allclose(h @ vectors, vectors * values[None, :], atol=1e-9)
        assert unitarity_deviation(vectors) < 1e-10

    def test_real_symmetric_and_diagonal_inputs(self):
        values, _ = jacobi_eigh(np.diag([3.0, -1.0, 2.0]))
        np.testing.assert_allclose(values, [-1.0, 2.0, 3.0])

    def test_batched_ascending(self):
        r = Rng(3).complex_normal((20, 6, 6))
        values, _ = jacobi_eigh(r + dagger(r))
        assert np.all(np.diff(values, axis=-1) >= 0)

    def test_sweep_budget_exhausted(self):
        r = Rng(4).complex_normal((8, 8))
        with pytest.raises(ConvergenceError) as info:
            jacobi_eigh(r + dagger(r), tol=1e-15, max_sweeps=0)
        assert info.value.sweeps == 0
        assert info.value.off_diagonal_norm > 0

    def test_vanishing_off_diagonal_raises_no_warning(self):
        """A rotation angle that overflows to infinity is a zero rotation, not a floating-point warning."""
        h = np.array([[0.0, 1e-155], [1e-155, 1e154]])
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            values, vectors = jacobi_eigh(h, tol=0.0)
        np.testing.assert_allclose(values, [0.0, 1e154])
        np.testing.assert_allclose(np.abs(vectors), np.eye(2))


class TestConvergenceError:
    """Message assembly from the optional diagnostics."""

    def test_default_message(self):
        assert ConvergenceError().message == "Eigensolver did not converge."

    def test_sweeps_without_norm(self):
        error = ConvergenceError(sweeps=3)
        assert error.message == "Eigensolver did not converge. (sweeps=3)"
        assert error.off_diagonal_norm is None

    def test_sweeps_and_norm(self):
        error = ConvergenceError("Jacobi stalled", sweeps=2, off_diagonal_norm=0.5)
        assert error.message == "Jacobi stalled (sweeps=2, off-diagonal norm=5.000e-01)"
