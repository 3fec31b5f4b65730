"""
Self-contained dense factorizations: Householder QR and cyclic Jacobi for Hermitian matrices.

Both routines accept a batch of matrices on the leading axes, ``(..., N, N)``, and loop only
over matrix indices, so sampling thousands of small matrices stays vectorized.
"""

import numpy as np

from ..core.config import settings
from ..core.exceptions import ConvergenceError, RankDeficiencyError
from ..core.logger import logging

logger = logging.getLogger(__name__)

_TINY = 1e-300


def householder_qr(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """QR factorization by Householder reflections.

    Parameters
    ----------
    z : np.ndarray
        Complex array of shape ``(..., N, N)``.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        ``(Q, R)`` with ``Q`` unitary, ``R`` upper triangular and ``Q @ R == z``. The diagonal
        of ``R`` is not phase-normalized.

    Raises
    ------
    RankDeficiencyError
        If a column below the diagonal vanishes in any batch member.
    """
    r = np.array(z, dtype=np.complex128, copy=True)
    n = r.shape[-1]
    q = np.broadcast_to(np.eye(n, dtype=np.complex128), r.shape).copy()

    for k in range(n):
        x = r[..., k:, k]
        norm_x = np.linalg.norm(x, axis=-1)
        if np.any(norm_x < 1e-13):
            raise RankDeficiencyError(f"Column {k} is numerically zero below the diagonal")
        x0 = x[..., 0]
        phase = np.where(np.abs(x0) > _TINY, x0 / np.maximum(np.abs(x0), _TINY), 1.0)
        # reflect x onto -phase * |x| e_1 so the first component never cancels
        v = x.copy()
        v[..., 0] = x0 + phase * norm_x
        v /= np.linalg.norm(v, axis=-1)[..., None]

        # R <- (I - 2 v v^dag) R on rows k:, Q <- Q (I - 2 v v^dag) on columns k:
        block = r[..., k:, :]
        r[..., k:, :] = block - 2.0 * v[..., :, None] * np.einsum("...i,...ij->...j", v.conj(), block)[..., None, :]
        cols = q[..., :, k:]
        q[..., :, k:] = cols - 2.0 * np.einsum("...ij,...j->...i", cols, v)[..., :, None] * v.conj()[..., None, :]

    r = np.triu(r)
    return q, r


def jacobi_eigh(
    a: np.ndarray,
    tol: float | None = None,
    max_sweeps: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of Hermitian matrices by cyclic complex Jacobi rotations.

    Each rotation zeroes ``a[p, q]``: the off-diagonal entry is made real by a diagonal phase
    and then removed with the classical real rotation. Sweeps repeat until the off-diagonal
    Frobenius norm is at most ``tol * max(1, ||a||_F)`` for every batch member.

    Parameters
    ----------
    a : np.ndarray
        Hermitian array of shape ``(..., N, N)``.
    tol : float | None
        Convergence threshold, defaults to ``settings.JACOBI_TOLERANCE``.
    max_sweeps : int | None
        Sweep budget, defaults to ``settings.JACOBI_MAX_SWEEPS``.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        Eigenvalues ``(..., N)`` in ascending order and the unitary eigenvector matrix
        ``(..., N, N)`` with eigenvectors as columns.

    Raises
    ------
    ConvergenceError
        If the sweep budget is exhausted.
    """
    tol = settings.JACOBI_TOLERANCE if tol is None else tol
    max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps

    a = np.array(a, dtype=np.complex128, copy=True)
    a = 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))
    n = a.shape[-1]
    v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy()
    scale = np.maximum(1.0, np.linalg.norm(a, axis=(-2, -1)))

    def off_norm() -> np.ndarray:
        off = a - np.einsum("...ii->...i", a)[..., None] * np.eye(n)
        return np.linalg.norm(off, axis=(-2, -1))

    sweeps = 0
    residual = off_norm()
    while np.any(residual > tol * scale):
        if sweeps >= max_sweeps:
            worst = float(np.max(residual / scale))
            raise ConvergenceError("Jacobi eigensolver did not converge", sweeps=sweeps, off_diagonal_norm=worst)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1
        residual = off_norm()

    logger.debug(f"Jacobi converged after {sweeps} sweep(s) for N={n}")
    eigenvalues = np.einsum("...ii->...i", a).real
    order = np.argsort(eigenvalues, axis=-1)
    eigenvalues = np.take_along_axis(eigenvalues, order, axis=-1)
    v = np.take_along_axis(v, order[..., None, :], axis=-1)
    return eigenvalues, v


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """One in-place Jacobi rotation on the (p, q) plane of every batch member."""
    apq = a[..., p, q]
    magnitude = np.abs(apq)
    active = magnitude > _TINY
    safe = np.where(active, magnitude, 1.0)
    e_phase = np.where(active, apq / safe, 1.0)

    app = a[..., p, p].real
    aqq = a[..., q, q].real
    # theta overflows to inf for vanishing off-diagonals, which gives t = 0
    with np.errstate(over="ignore", divide="ignore"):
        theta = (aqq - app) / (2.0 * safe)
        t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    # J restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    jpp = c
    jpq = s
    jqp = -s * np.conj(e_phase)
    jqq = c * np.conj(e_phase)

    col_p = a[..., :, p].copy()
    col_q = a[..., :, q].copy()
    a[..., :, p] = col_p * jpp[..., None] + col_q * jqp[..., None]
    a[..., :, q] = col_p * jpq[..., None] + col_q * jqq[..., None]

    row_p = a[..., p, :].copy()
    row_q = a[..., q, :].copy()
    a[..., p, :] = np.conj(jpp)[..., None] * row_p + np.conj(jqp)[..., None] * row_q
    a[..., q, :] = np.conj(jpq)[..., None] * row_p + np.conj(jqq)[..., None] * row_q
    a[..., p, q] = 0.0
    a[..., q, p] = 0.0

    vec_p = v[..., :, p].copy()
    vec_q = v[..., :, q].copy()
    v[..., :, p] = vec_p * jpp[..., None] + vec_q * jqp[..., None]
    v[..., :, q] = vec_p * jpq[..., None] + vec_q * jqq[..., None]
