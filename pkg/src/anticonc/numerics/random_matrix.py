"""
Random matrix ensembles and the Haar output-probability law.

Two independent Haar constructions are provided: phase-fixed QR of a Ginibre matrix, and GUE
eigenvectors multiplied by independent uniform phases. Both accept an optional ``batch`` so
Monte Carlo loops draw many matrices per call.
"""

import numpy as np
import scipy.linalg

from ..core.config import LinalgBackend, settings
from ..core.exceptions import InputError, RankDeficiencyError
from ..core.logger import logging
from ..core.rng import Rng
from .linalg import householder_qr, jacobi_eigh

logger = logging.getLogger(__name__)

MAX_RESAMPLES = 16


def _shape(N: int, batch: int | None) -> tuple[int, ...]:
    if N < 1:
        raise InputError(f"Matrix dimension must be at least 1, got {N}")
    return (N, N) if batch is None else (batch, N, N)


# -------------- Ginibre / Haar via QR --------------
def sample_ginibre(N: int, rng: Rng, batch: int | None = None) -> np.ndarray:
    """N x N matrix of i.i.d. complex Gaussians with E|z|^2 = 1."""
    return rng.complex_normal(_shape(N, batch))


def _qr(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if settings.LINALG_BACKEND == LinalgBackend.LAPACK:
        if z.ndim == 2:
            return scipy.linalg.qr(z)
        q, r = np.linalg.qr(z)
        return q, r
    return householder_qr(z)


def haar_via_qr(N: int, rng: Rng, batch: int | None = None) -> np.ndarray:
    """Haar unitary from the QR factorization of a Ginibre matrix.

    The columns of ``Q`` are multiplied by the phases of ``diag(R)`` so that the factorization
    has a real positive diagonal, which makes ``Q`` Haar distributed.

    Parameters
    ----------
    N : int
        Dimension.
    rng : Rng
        Random stream.
    batch : int | None
        Number of independent draws stacked on a leading axis, or ``None`` for one matrix.

    Returns
    -------
    np.ndarray
        Unitary of shape ``(N, N)`` or ``(batch, N, N)``.
    """
    shape = _shape(N, batch)
    for attempt in range(MAX_RESAMPLES):
        z = sample_ginibre(N, rng, batch)
        try:
            q, r = _qr(z)
        except RankDeficiencyError:
            logger.warning(f"Rank-deficient Ginibre draw (N={N}, attempt {attempt + 1}); resampling")
            continue
        d = np.diagonal(r, axis1=-2, axis2=-1)
        return q * (d / np.abs(d))[..., None, :]
    raise RankDeficiencyError(f"Could not draw a full-rank {shape} Ginibre sample in {MAX_RESAMPLES} attempts")


def haar_state(N: int, rng: Rng, batch: int | None = None) -> np.ndarray:
    """First column of a Haar unitary, i.e. ``U|0>`` for Haar ``U``.

    The first column of the phase-fixed QR factor is the first Ginibre column divided by its
    norm, so only that column is drawn.
    """
    if N < 1:
        raise InputError(f"Dimension must be at least 1, got {N}")
    z = rng.complex_normal((N,) if batch is None else (batch, N))
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


# -------------- GUE / Haar via eigenvectors --------------
def sample_gue(N: int, rng: Rng, batch: int | None = None) -> np.ndarray:
    """Hermitian ``D + R + R^dagger``: D real N(0, 1) on the diagonal, R strictly upper triangular
    with E|R_ij|^2 = 1, so every entry of the result has the same second moment.
    """
    shape = _shape(N, batch)
    d = rng.normal(shape[:-1])
    r = np.triu(rng.complex_normal(shape), k=1)
    h = r + np.conj(np.swapaxes(r, -1, -2))
    idx = np.arange(N)
    h[..., idx, idx] += d
    return h


def _eigh(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if settings.LINALG_BACKEND == LinalgBackend.LAPACK:
        return np.linalg.eigh(h)
    return jacobi_eigh(h)


def haar_via_gue(N: int, rng: Rng, batch: int | None = None) -> np.ndarray:
    """Haar unitary whose columns are GUE eigenvectors times independent uniform phases.

    Raises
    ------
    ConvergenceError
        If the Jacobi eigensolver exhausts its sweep budget.
    """
    h = sample_gue(N, rng, batch)
    _, v = _eigh(h)
    phases = rng.random_phases(v.shape[:-2] + (N,))
    return v * phases[..., None, :]


def haar_invariance_samples(
    v: np.ndarray,
    draws: int,
    rng: Rng,
    construction: str = "qr",
) -> tuple[np.ndarray, np.ndarray]:
    """Samples of ``|(VU)_00|^2`` and ``|U_00|^2`` from independent Haar draws of ``U``.

    Under left invariance both arrays follow the same law.
    """
    v = np.asarray(v, dtype=np.complex128)
    N = v.shape[0]
    sampler = haar_via_gue if construction == "gue" else haar_via_qr
    shifted = v @ sampler(N, rng.substream(0), draws)
    plain = sampler(N, rng.substream(1), draws)
    return np.abs(shifted[:, 0, 0]) ** 2, np.abs(plain[:, 0, 0]) ** 2


# -------------- Porter-Thomas law --------------
def _check_dimension(N: int, minimum: int = 2) -> None:
    if N < minimum:
        raise InputError(f"Porter-Thomas law needs N >= {minimum}, got {N}")


def porter_thomas_pdf(p: float | np.ndarray, N: int) -> float | np.ndarray:
    """(N - 1)(1 - p)^(N - 2), the density of one output probability of a Haar unitary."""
    _check_dimension(N)
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise InputError("Probabilities must lie in [0, 1]")
    density = (N - 1) * np.power(1.0 - p, N - 2)
    return float(density) if density.ndim == 0 else density


def porter_thomas_cdf(p: float | np.ndarray, N: int) -> float | np.ndarray:
    _check_dimension(N)
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    # 1 - (1 - p)^(N - 1), computed without cancellation for small p
    cdf = -np.expm1((N - 1) * np.log1p(-p))
    cdf = np.where(p >= 1.0, 1.0, cdf)
    return float(cdf) if cdf.ndim == 0 else cdf


def porter_thomas_exponential_pdf(p: float | np.ndarray, N: int) -> float | np.ndarray:
    """Large-N approximation N exp(-N p)."""
    _check_dimension(N)
    density = N * np.exp(-N * np.asarray(p, dtype=float))
    return float(density) if density.ndim == 0 else density


def sample_porter_thomas(N: int, count: int, rng: Rng) -> np.ndarray:
    """Inverse-CDF draws ``p = 1 - (1 - u)^(1/(N-1))``."""
    _check_dimension(N)
    u = rng.uniform(size=count)
    return -np.expm1(np.log1p(-u) / (N - 1))


def haar_moments(N: int) -> tuple[float, float]:
    """(E[p], E[p^2]) = (1/N, 2/(N(N+1)))."""
    if N < 1:
        raise InputError(f"Dimension must be at least 1, got {N}")
    return 1.0 / N, 2.0 / (N * (N + 1))
