"""Named gate matrices and unitarity helpers."""

import numpy as np

from ..core.config import settings
from ..core.exceptions import InputError, UnitarityError

SQRT_HALF = 1.0 / np.sqrt(2.0)

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = SQRT_HALF * np.array([[1, 1], [1, -1]], dtype=np.complex128)
T = np.diag([1.0, np.exp(1j * np.pi / 4)]).astype(np.complex128)
SQRT_X = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=np.complex128)
SQRT_Y = 0.5 * np.array([[1 + 1j, -1 - 1j], [1 + 1j, 1 + 1j]], dtype=np.complex128)
CZ = np.diag([1.0, 1.0, 1.0, -1.0]).astype(np.complex128)


def phase(phi: float) -> np.ndarray:
    """Single-qubit phase gate diag(1, e^{i phi})."""
    return np.diag([1.0, np.exp(1j * phi)]).astype(np.complex128)


def controlled_phase(phi: float) -> np.ndarray:
    """Two-qubit controlled-phase gate diag(1, 1, 1, e^{i phi})."""
    return np.diag([1.0, 1.0, 1.0, np.exp(1j * phi)]).astype(np.complex128)


def dagger(g: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(g, -1, -2))


def unitarity_deviation(g: np.ndarray) -> float:
    """max-norm of U^dagger U - I."""
    g = np.asarray(g)
    return float(np.max(np.abs(dagger(g) @ g - np.eye(g.shape[-1]))))


def is_unitary(g: np.ndarray, tol: float | None = None) -> bool:
    tol = settings.UNITARITY_TOLERANCE if tol is None else tol
    return unitarity_deviation(g) <= tol


def ensure_unitary(g: np.ndarray, tol: float | None = None) -> None:
    tol = settings.UNITARITY_TOLERANCE if tol is None else tol
    deviation = unitarity_deviation(g)
    if deviation > tol:
        raise UnitarityError(f"Gate is not unitary: max|U^dag U - I| = {deviation:.3e} > {tol:.1e}", deviation)


def as_gate_matrix(g: np.ndarray | list) -> np.ndarray:
    """Coerce to a complex 2x2 or 4x4 matrix."""
    matrix = np.asarray(g, dtype=np.complex128)
    if matrix.shape not in {(2, 2), (4, 4)}:
        raise InputError(f"Gate matrices must be 2x2 or 4x4, got shape {matrix.shape}")
    return matrix


def is_diagonal(g: np.ndarray) -> bool:
    return not np.any(g - np.diag(np.diag(g)))


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> tuple[bool, float]:
    """Compare two arrays after removing the phase of a's first nonzero entry from both.

    Returns
    -------
    tuple[bool, float]
        Whether the max modulus deviation is within ``tol``, and that deviation.
    """
    a = np.asarray(a, dtype=np.complex128).ravel()
    b = np.asarray(b, dtype=np.complex128).ravel()
    if a.shape != b.shape:
        raise InputError(f"Shape mismatch: {a.shape} vs {b.shape}")
    nonzero = np.flatnonzero(np.abs(a) > 1e-12)
    if nonzero.size == 0:
        deviation = float(np.max(np.abs(b), initial=0.0))
        return deviation <= tol, deviation
    k = nonzero[0]
    if abs(b[k]) <= 1e-12:
        deviation = float(np.max(np.abs(a - b)))
        return False, max(deviation, abs(a[k]))
    phase_a = a[k] / abs(a[k])
    phase_b = b[k] / abs(b[k])
    deviation = float(np.max(np.abs(a / phase_a - b / phase_b)))
    return deviation <= tol, deviation
