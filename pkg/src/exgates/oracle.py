"""Independent validation in the full 64-dimensional six-spin space.

Everything here is built directly from the physical picture: transpositions
act by swapping tensor factors of product states, and the logical frames
come from the printed three-spin encodings

    |0_L>|up>   = (|010> - |100>) / sqrt(2)
    |0_L>|down> = (|101> - |011>) / sqrt(2)
    |1_L>|up>   = (2|001> - |100> - |010>) / sqrt(6)
    |1_L>|down> = (2|110> - |011> - |101>) / sqrt(6)

with bit 0 meaning spin up.  The spin-1 frame tensors the two |up> gauge
states (total S_z = +1 forces total spin 1); the spin-0 frame is the
singlet combination of the gauge doublets.  No representation matrices or
embedding tables from the other modules are used, so agreement with them
is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .encoding import SpinSector
from .linalg import expi
from .symrep import GroupAlgebraElement, Permutation
from .trotter import PulseSchedule, PulseStep

__all__ = [
    "DIM",
    "physical_swap",
    "physical_permutation",
    "LogicalFrame",
    "logical_frame",
    "oracle_projected_rep",
    "oracle_simulate",
    "oracle_fidelity",
    "frame_closure",
]

N_SPINS = 6
DIM = 2**N_SPINS


@lru_cache(maxsize=None)
def physical_permutation(perm: Permutation) -> np.ndarray:
    """64 x 64 matrix permuting the tensor factors of |b1 ... b6>.

    Bit b_k of a basis index (most significant bit first) moves to
    position perm(k), so the new string is b'_m = b_{perm^-1(m)}.
    """
    if perm.degree != N_SPINS:
        raise ValueError("physical permutations act on six spins")
    inv = perm.inverse()
    m = np.zeros((DIM, DIM))
    for idx in range(DIM):
        bits = [(idx >> (N_SPINS - 1 - k)) & 1 for k in range(N_SPINS)]
        new_bits = [bits[inv(k + 1) - 1] for k in range(N_SPINS)]
        new_idx = 0
        for b in new_bits:
            new_idx = (new_idx << 1) | b
        m[new_idx, idx] = 1.0
    m.setflags(write=False)
    return m


def physical_swap(i: int, j: int) -> np.ndarray:
    """Permutation matrix exchanging tensor factors i and j."""
    if not (1 <= i < j <= N_SPINS):
        raise ValueError(f"need 1 <= i < j <= {N_SPINS}, got ({i}, {j})")
    return physical_permutation(Permutation.transposition(N_SPINS, i, j))


def _block_state(terms: list[tuple[str, float]]) -> np.ndarray:
    v = np.zeros(8)
    for bits, coeff in terms:
        v[int(bits, 2)] = coeff
    return v


_SQ2 = np.sqrt(2.0)
_SQ6 = np.sqrt(6.0)

_GAUGE_UP = (
    _block_state([("010", 1 / _SQ2), ("100", -1 / _SQ2)]),
    _block_state([("001", 2 / _SQ6), ("100", -1 / _SQ6), ("010", -1 / _SQ6)]),
)
_GAUGE_DOWN = (
    _block_state([("101", 1 / _SQ2), ("011", -1 / _SQ2)]),
    _block_state([("110", 2 / _SQ6), ("011", -1 / _SQ6), ("101", -1 / _SQ6)]),
)


@dataclass(frozen=True, eq=False)
class LogicalFrame:
    """Four orthonormal 64-dim vectors carrying |00>, |01>, |10>, |11>."""

    sector: SpinSector
    matrix: np.ndarray = field(repr=False)


@lru_cache(maxsize=None)
def logical_frame(sector: SpinSector) -> LogicalFrame:
    rows = []
    for x in (0, 1):
        for y in (0, 1):
            if sector is SpinSector.SPIN1:
                rows.append(np.kron(_GAUGE_UP[x], _GAUGE_UP[y]))
            else:
                rows.append(
                    (
                        np.kron(_GAUGE_UP[x], _GAUGE_DOWN[y])
                        - np.kron(_GAUGE_DOWN[x], _GAUGE_UP[y])
                    )
                    / _SQ2
                )
    m = np.array(rows)
    m.setflags(write=False)
    return LogicalFrame(sector, m)


def oracle_projected_rep(x: GroupAlgebraElement, sector: SpinSector) -> np.ndarray:
    """Frame compression of the physical representation of x."""
    if x.degree != N_SPINS:
        raise ValueError("expected a degree-6 group algebra element")
    phi = logical_frame(sector).matrix
    m = np.zeros((DIM, DIM), dtype=complex)
    for perm, coeff in x.terms.items():
        m += coeff * physical_permutation(perm)
    return phi @ m @ phi.conj().T


def _step_unitary(step: PulseStep) -> np.ndarray:
    g = np.zeros((DIM, DIM))
    for pair, c in zip(step.pairs, step.coeffs):
        g = g + c * physical_swap(*pair)
    u = expi(g)
    if step.phase:
        u = np.exp(1j * step.phase) * u
    return u


def oracle_simulate(schedule: PulseSchedule) -> np.ndarray:
    """64-dim unitary of a schedule (rightmost step acts first)."""
    total = np.eye(DIM, dtype=complex)
    cache: dict[PulseStep, np.ndarray] = {}
    for step in schedule.steps:
        u = cache.get(step)
        if u is None:
            u = cache[step] = _step_unitary(step)
        total = total @ u
    return total


def oracle_fidelity(
    schedule: PulseSchedule, sector: SpinSector, target: np.ndarray
) -> tuple[float, float]:
    """End-to-end (fidelity, leakage) of a schedule in the physical space.

    The leakage projector is the complement of the frame; schedule
    unitaries never leave the frame's permutation-invariant closure, so
    this agrees with the complement taken inside that closure.
    """
    phi = logical_frame(sector).matrix
    g = oracle_simulate(schedule)
    target = np.asarray(target, dtype=complex)
    c_ext = phi.conj().T @ target @ phi + (np.eye(DIM) - phi.T @ phi)
    overlap = np.trace(phi @ g.conj().T @ c_ext @ phi.conj().T)
    fidelity = float(abs(overlap / 4.0) ** 2)
    pi_perp = np.eye(DIM) - phi.T @ phi
    value = np.trace(
        phi @ g.conj().T @ c_ext @ pi_perp @ c_ext.conj().T @ g @ phi.conj().T
    )
    return fidelity, float(value.real / 4.0)


def frame_closure(sector: SpinSector, tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the invariant subspace generated by the frame.

    Repeatedly applies all fifteen swaps and orthonormalizes until the
    dimension stabilizes (9 for spin 1, 5 for spin 0).
    """
    swaps = [
        physical_swap(i, j) for i in range(1, 7) for j in range(i + 1, 7)
    ]
    basis = [v.copy() for v in logical_frame(sector).matrix]
    changed = True
    while changed:
        changed = False
        for m in swaps:
            for v in list(basis):
                w = m @ v
                for b in basis:
                    w = w - (b @ w) * b
                norm = np.linalg.norm(w)
                if norm > tol:
                    basis.append(w / norm)
                    changed = True
    return np.array(basis)
