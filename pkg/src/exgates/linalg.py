"""Small dense linear-algebra helpers shared across modules."""

from __future__ import annotations

import numpy as np

__all__ = ["expi", "is_hermitian", "max_abs"]


def expi(h: np.ndarray) -> np.ndarray:
    """Unitary exp(i*h) of a Hermitian matrix via spectral decomposition."""
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def is_hermitian(m: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) <= tol * max(1.0, float(np.max(np.abs(m)))))


def max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0
