"""Pulse schedules: product formulas, CNOT constructions, and rewrites.

A schedule is an ordered list of steps; each step exponentiates a real
combination of exchange interactions (plus an optional identity phase).
Steps are listed left factor first, so the *rightmost* step acts first on
states and the simulated unitary is the matrix product of the step
unitaries in list order.

The decoupled evolutions follow the first-order product formula

    exp(i a D(H)) ~ Udag ((exp(i dt/2 H) U)^3 exp(i dt H)
                          (Udag exp(i dt/2 H))^3)^n U,    dt = a / 4n,

whose error is O(dt^2).  The two CNOT families instantiate it with the
cross-block generator N (spin-independent) and with the spin-1 optimized
generator N1, both with dt = pi/8n and the local prefactor
exp(-i pi/4 (1 + (12))).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .encoding import (
    ALL_PAIRS,
    BLOCK_A_PAIRS,
    BLOCK_B_PAIRS,
    CROSS_PAIRS,
    SpinSector,
    hamiltonian_from_pauli,
)
from .symrep import GroupAlgebraElement, rep_element

__all__ = [
    "PulseStep",
    "PulseSchedule",
    "CanonicalGateSpec",
    "SWAP_GENERATOR_N",
    "SWAP_GENERATOR_N1",
    "trotter_product",
    "decoupled_evolution",
    "cnot_spin_independent",
    "cnot_spin1",
    "single_qubit_schedule",
    "canonical_two_qubit_schedule",
    "consolidate",
    "cancel_negatives",
    "normalized_time",
    "schedule_to_json",
    "schedule_from_json",
]

_SQ3 = math.sqrt(3.0)

# The two CNOT generators, as coefficient maps on transpositions.
SWAP_GENERATOR_N = {
    (1, 5): 3 * _SQ3 / 4,
    (1, 4): -3 * _SQ3 / 4,
    (2, 5): 3 * _SQ3 / 4,
    (2, 4): -3 * _SQ3 / 4,
}
SWAP_GENERATOR_N1 = {
    (5, 6): _SQ3 / 4,
    (4, 6): -_SQ3 / 4,
    (3, 4): 3 * _SQ3 / 4,
    (3, 5): -3 * _SQ3 / 4,
}


def _normalize_pair(pair: Iterable[int]) -> tuple[int, int]:
    i, j = sorted(int(v) for v in pair)
    if not (1 <= i < j <= 6):
        raise ValueError(f"not a transposition pair of six spins: ({i}, {j})")
    return i, j


@dataclass(frozen=True)
class PulseStep:
    """One exponential factor exp(i sum_c c_ij (i j) + i phase).

    Coefficients are radians on transpositions; zero coefficients are not
    stored, and pairs are kept sorted so equal steps compare equal.
    """

    pairs: tuple[tuple[int, int], ...]
    coeffs: tuple[float, ...]
    phase: float = 0.0

    @classmethod
    def make(cls, coeffs: Mapping[tuple[int, int], float], phase: float = 0.0) -> "PulseStep":
        merged: dict[tuple[int, int], float] = {}
        for p, c in coeffs.items():
            key = _normalize_pair(p)
            merged[key] = merged.get(key, 0.0) + float(c)
        items = sorted((p, c) for p, c in merged.items() if c != 0.0)
        return cls(tuple(p for p, _ in items), tuple(c for _, c in items), float(phase))

    def coefficients(self) -> dict[tuple[int, int], float]:
        return dict(zip(self.pairs, self.coeffs))

    def scaled(self, factor: float) -> "PulseStep":
        return PulseStep(self.pairs, tuple(c * factor for c in self.coeffs), self.phase * factor)

    def generator(self) -> GroupAlgebraElement:
        return GroupAlgebraElement.from_transpositions(
            6, self.coefficients(), identity=self.phase
        )

    def max_coefficient(self) -> float:
        """Largest coefficient magnitude, identity phase excluded."""
        return max((abs(c) for c in self.coeffs), default=0.0)

    def is_cross_block(self) -> bool:
        return any(p in CROSS_PAIRS for p in self.pairs)


@dataclass(frozen=True)
class PulseSchedule:
    """An ordered pulse sequence with construction metadata.

    ``sector_independent`` records whether the construction acts the same
    on the computational subspace of both sectors; it is in-memory
    metadata and not part of the wire format.
    """

    steps: tuple[PulseStep, ...]
    name: str = "schedule"
    order: int = 1
    n: int = 1
    sector_independent: bool | None = None

    def __len__(self) -> int:
        return len(self.steps)


def _merge_steps(a: PulseStep, b: PulseStep) -> PulseStep:
    coeffs = a.coefficients()
    for p, c in b.coefficients().items():
        coeffs[p] = coeffs.get(p, 0.0) + c
    return PulseStep.make(coeffs, a.phase + b.phase)


def _element_step(x: GroupAlgebraElement, weight: float) -> PulseStep:
    """Step exp(i * weight * x) for a real transposition combination."""
    coeffs: dict[tuple[int, int], float] = {}
    phase = 0.0
    for perm, c in x.terms.items():
        if abs(complex(c).imag) > 1e-14:
            raise ValueError("schedule generators must have real coefficients")
        c = float(complex(c).real)
        if perm.is_identity():
            phase += c
            continue
        moved = [k for k in range(1, 7) if perm(k) != k]
        if len(moved) != 2:
            raise ValueError(f"generator term is not a transposition: {perm}")
        coeffs[_normalize_pair(moved)] = coeffs.get(_normalize_pair(moved), 0.0) + c
    return PulseStep.make({p: c * weight for p, c in coeffs.items()}, phase * weight)


def trotter_product(
    terms: Sequence[GroupAlgebraElement],
    alpha: float,
    n: int,
    order: int = 1,
) -> PulseSchedule:
    """Product-formula schedule approximating exp(i alpha sum(terms)).

    Order 0 is the plain exponential product with error O(1/n); order 1 is
    the symmetrized split with error O(1/n^2).  A single term is exact.
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    steps: list[PulseStep] = []
    if order == 0:
        cycle = [_element_step(t, alpha / n) for t in terms]
    else:
        head = [_element_step(t, alpha / (2 * n)) for t in terms[1:]]
        cycle = list(reversed(head)) + [_element_step(terms[0], alpha / n)] + head
    for _ in range(n):
        steps.extend(cycle)
    return PulseSchedule(tuple(steps), name="trotter-product", order=order, n=n)


def _decoupler_step(weight: float, drop: tuple[tuple[int, int], ...]) -> PulseStep:
    pairs = [p for p in BLOCK_A_PAIRS + BLOCK_B_PAIRS if p not in drop]
    return PulseStep.make({p: weight / 3.0 for p in pairs})


def decoupled_evolution(
    h: GroupAlgebraElement,
    alpha: float,
    n: int,
    *,
    order: int = 1,
    drop_from_decoupler: Iterable[tuple[int, int]] = (),
) -> PulseSchedule:
    """Schedule approximating exp(i alpha D(rep(h))) by decoupled pulses.

    ``drop_from_decoupler`` removes local transpositions from the
    decoupler generator; this is exact whenever the dropped transpositions
    commute with h, since their phase factors then cancel in pairs.
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    drop = tuple(_normalize_pair(p) for p in drop_from_decoupler)
    dt = alpha / (4 * n)
    u = _decoupler_step(np.pi / 2, drop)
    udag = u.scaled(-1.0)
    if order == 1:
        h_half = _element_step(h, dt / 2)
        h_full = _element_step(h, dt)
        cycle = (
            [h_half, u] * 3 + [h_full] + [udag, h_half] * 3
        )
        steps = [udag] + cycle * n + [u]
    elif order == 0:
        u2 = _decoupler_step(np.pi, drop)
        h_full = _element_step(h, dt)
        # conjugation order {U^2, U, 1, U^dag} written out per iteration
        cycle = [u2, h_full, u2.scaled(-1.0), u, h_full, udag, h_full, udag, h_full, u]
        steps = cycle * n
    else:
        raise ValueError("order must be 0 or 1")
    return PulseSchedule(tuple(steps), name="decoupled-evolution", order=order, n=n)


def _cnot_prefactor() -> PulseStep:
    return PulseStep.make({(1, 2): -np.pi / 4}, phase=-np.pi / 4)


def cnot_spin_independent(n: int, order: int = 1) -> PulseSchedule:
    """Trotterized spin-independent CNOT at n iterations.

    The decoupler omits (12), which commutes with the generator, matching
    the planar interaction geometry; the local prefactor
    exp(-i pi/4 (1 + (12))) turns the decoupled evolution into CNOT on the
    computational subspace of both sectors.
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    h = GroupAlgebraElement.from_transpositions(6, SWAP_GENERATOR_N)
    core = decoupled_evolution(
        h, np.pi / 2, n, order=order, drop_from_decoupler=[(1, 2)]
    )
    steps = (_cnot_prefactor(),) + core.steps
    return PulseSchedule(
        steps, name="cnot-independent", order=order, n=n, sector_independent=True
    )


def cnot_spin1(n: int) -> PulseSchedule:
    """Spin-1 optimized Trotterized CNOT at n iterations.

    The generator commutes with its own block-b conjugate, and its block-a
    conjugate commutes with the conjugate by both decouplers, so the
    symmetric split collapses to the twelve-factor cycle
    (T^1/2 Ub T^1/2 Ub' Ua T Ub T Ua' T^1/2 Ub' T^1/2)^n; (12) is dropped
    from Ua since it commutes with the generator.
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    dt = np.pi / (8 * n)
    h = GroupAlgebraElement.from_transpositions(6, SWAP_GENERATOR_N1)
    t_half = _element_step(h, dt / 2)
    t_full = _element_step(h, dt)
    ua = PulseStep.make({p: np.pi / 3 for p in ((1, 3), (2, 3))})
    ua_dag = ua.scaled(-1.0)
    ub = PulseStep.make({p: np.pi / 3 for p in BLOCK_B_PAIRS})
    ub_dag = ub.scaled(-1.0)
    cycle = [
        t_half, ub, t_half, ub_dag, ua, t_full, ub, t_full, ua_dag,
        t_half, ub_dag, t_half,
    ]
    steps = (_cnot_prefactor(),) + tuple(cycle * n)
    return PulseSchedule(steps, name="cnot-spin1", order=1, n=n, sector_independent=False)


def _local_x_step(block: int, angle: float, phase: float = 0.0) -> PulseStep:
    base = (1, 2), (1, 3)
    pairs = base if block == 1 else tuple((i + 3, j + 3) for i, j in base)
    return PulseStep.make(
        {pairs[0]: -angle / _SQ3, pairs[1]: -2 * angle / _SQ3}, phase=phase
    )


def _local_z_step(block: int, angle: float, phase: float = 0.0) -> PulseStep:
    pair = (1, 2) if block == 1 else (4, 5)
    return PulseStep.make({pair: -angle}, phase=phase)


def single_qubit_schedule(
    block: int, alpha: float, beta: float, gamma: float, delta: float = 0.0
) -> PulseSchedule:
    """Local gate exp(i d) exp(i a X) exp(i b Z) exp(i g X) on one qubit.

    Realized through the within-block dictionary (X from the pair
    (12),(13) or (45),(46); Z from minus the first local transposition),
    so the action is identical in both sectors.
    """
    if block not in (1, 2):
        raise ValueError("block must be 1 or 2")
    steps: list[PulseStep] = []
    if alpha != 0.0:
        steps.append(_local_x_step(block, alpha))
    if beta != 0.0:
        steps.append(_local_z_step(block, beta))
    if gamma != 0.0:
        steps.append(_local_x_step(block, gamma))
    if delta != 0.0:
        if steps:
            steps[0] = replace(steps[0], phase=steps[0].phase + delta)
        else:
            steps.append(PulseStep((), (), delta))
    return PulseSchedule(
        tuple(steps), name=f"local-block{block}", order=1, n=1, sector_independent=True
    )


@dataclass(frozen=True)
class CanonicalGateSpec:
    """Canonical two-qubit gate data: K1 exp(i(a XX + b YY + c ZZ)) K2.

    The local factors are sequences of ("x" | "z", block, angle) Pauli
    exponentials, leftmost factor applied last.
    """

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    k1: tuple[tuple[str, int, float], ...] = ()
    k2: tuple[tuple[str, int, float], ...] = ()


_INDEPENDENT_ANGLES = (-np.pi / 2, 0.0, np.pi / 2)


def _local_factor_steps(factors: Sequence[tuple[str, int, float]]) -> list[PulseStep]:
    steps = []
    for axis, block, angle in factors:
        if angle == 0.0:
            continue
        if axis == "x":
            steps.append(_local_x_step(block, angle))
        elif axis == "z":
            steps.append(_local_z_step(block, angle))
        else:
            raise ValueError(f"local factors must be over x/z, got {axis!r}")
    return steps


def _xx_conjugator(sign: float) -> PulseStep:
    theta = sign * np.pi / 4
    return _merge_steps(_local_x_step(1, theta), _local_x_step(2, theta))


def canonical_two_qubit_schedule(
    gate: CanonicalGateSpec, n: int, sector: SpinSector | None = None
) -> PulseSchedule:
    """Schedule for a canonical two-qubit gate via decoupled evolution.

    With ``sector`` given, the entangling exponentials use that sector's
    exchange dictionary and the gate is exact there up to Trotter error.
    With ``sector=None`` the schedule is sector-independent, which
    restricts the canonical angles to multiples of pi/2 (the two sectors'
    exponentials then agree because the cross-block scaling -3 only shifts
    the phase by full periods).

    The YY factor is realized by conjugating a ZZ evolution with
    exp(i pi/4 (XI + IX)).
    """
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    independent = sector is None
    basis_sector = SpinSector.SPIN1 if independent else sector
    if independent:
        for angle in (gate.alpha, gate.beta, gate.gamma):
            if not any(abs(angle - v) <= 1e-12 for v in _INDEPENDENT_ANGLES):
                raise ValueError(
                    "sector-independent mode requires canonical angles in "
                    f"{{-pi/2, 0, pi/2}}; got {angle}"
                )

    steps: list[PulseStep] = []
    steps.extend(_local_factor_steps(gate.k1))
    if gate.alpha != 0.0:
        xx = hamiltonian_from_pauli({"XX": 1.0}, basis_sector)
        steps.extend(decoupled_evolution(xx, gate.alpha, n).steps)
    if gate.beta != 0.0:
        zz = hamiltonian_from_pauli({"ZZ": 1.0}, basis_sector)
        steps.append(_xx_conjugator(+1.0))
        steps.extend(decoupled_evolution(zz, gate.beta, n).steps)
        steps.append(_xx_conjugator(-1.0))
    if gate.gamma != 0.0:
        zz = hamiltonian_from_pauli({"ZZ": 1.0}, basis_sector)
        steps.extend(decoupled_evolution(zz, gate.gamma, n).steps)
    steps.extend(_local_factor_steps(gate.k2))
    return PulseSchedule(
        tuple(steps),
        name="canonical-gate",
        order=1,
        n=n,
        sector_independent=independent,
    )


@lru_cache(maxsize=None)
def _pair_rep(sector: SpinSector, pair: tuple[int, int]) -> np.ndarray:
    return rep_element(
        sector.partition, GroupAlgebraElement.transposition(6, *pair)
    ).matrix.real


def _step_matrix_generator(step: PulseStep, sector: SpinSector) -> np.ndarray:
    g = np.zeros((sector.dim, sector.dim))
    for pair, c in zip(step.pairs, step.coeffs):
        g = g + c * _pair_rep(sector, pair)
    return g


def _steps_commute(a: PulseStep, b: PulseStep, tol: float = 1e-12) -> bool:
    """Commutation of the step generators, tested in both irreps."""
    for sector in SpinSector:
        ga = _step_matrix_generator(a, sector)
        gb = _step_matrix_generator(b, sector)
        scale = max(1.0, float(np.max(np.abs(ga))) * float(np.max(np.abs(gb))))
        if np.max(np.abs(ga @ gb - gb @ ga)) > tol * scale:
            return False
    return True


def consolidate(schedule: PulseSchedule) -> PulseSchedule:
    """Greedy left-to-right merge of adjacent commuting steps.

    The merged step sums coefficient maps and identity phases; the
    simulated unitary is unchanged.  The resulting step count is the
    clock-cycle count of the schedule.
    """
    merged: list[PulseStep] = []
    for step in schedule.steps:
        if merged and _steps_commute(merged[-1], step):
            merged[-1] = _merge_steps(merged[-1], step)
        else:
            merged.append(step)
    return replace(schedule, steps=tuple(merged))


def normalized_time(schedule: PulseSchedule) -> float:
    """Summed per-step maximum coefficient magnitude in swap durations.

    One unit is the duration of a full swap (coefficient pi/2); the
    identity phase does not count toward a step's duration.  Computed on
    the schedule as constructed, before any consolidation: each printed
    exponential factor is one parallel pulse.
    """
    return sum(step.max_coefficient() for step in schedule.steps) / (np.pi / 2)


def _cancel_step(step: PulseStep, mode: str) -> PulseStep:
    coeffs = step.coefficients()
    negatives = {p: c for p, c in coeffs.items() if c < 0.0}
    if not negatives:
        return step
    if len(coeffs) == 1:
        # single exchange interaction: shift by full periods
        (pair, c), = coeffs.items()
        shift = 2 * np.pi * math.ceil(-c / (2 * np.pi))
        return PulseStep.make({pair: c + shift}, step.phase)
    if mode == "full-sum":
        m = max(-c for c in negatives.values())
        for p in ALL_PAIRS:
            coeffs[p] = coeffs.get(p, 0.0) + m
    elif mode == "cross-sum":
        cross_neg = [-c for p, c in negatives.items() if p in CROSS_PAIRS]
        if cross_neg:
            m = max(cross_neg)
            for p in CROSS_PAIRS:
                coeffs[p] = coeffs.get(p, 0.0) + m
        for block in (BLOCK_A_PAIRS, BLOCK_B_PAIRS):
            block_neg = [-coeffs[p] for p in block if coeffs.get(p, 0.0) < 0.0]
            if block_neg:
                m = max(block_neg)
                for p in block:
                    coeffs[p] = coeffs.get(p, 0.0) + m
    elif mode == "local-sum":
        if any(p in CROSS_PAIRS for p in negatives):
            raise ValueError(
                "local-sum mode cannot cancel negative cross-block coefficients"
            )
        for block in (BLOCK_A_PAIRS, BLOCK_B_PAIRS):
            block_neg = [-coeffs[p] for p in block if coeffs.get(p, 0.0) < 0.0]
            if block_neg:
                m = max(block_neg)
                for p in block:
                    coeffs[p] = coeffs.get(p, 0.0) + m
    else:
        raise ValueError(f"unknown cancellation mode: {mode!r}")
    out = PulseStep.make(coeffs, step.phase)
    if any(c < 0.0 for c in out.coeffs):
        raise AssertionError("cancellation left a negative coefficient")
    return out


def cancel_negatives(schedule: PulseSchedule, mode: str = "cross-sum") -> PulseSchedule:
    """Remove negative coefficients from Hamiltonian-bearing steps.

    A step is Hamiltonian-bearing when it involves a cross-block
    transposition.  The added transposition sums act as sector constants
    (full or cross sum) or as zero (block sums) on the computational
    subspace, so the logical action changes by at most a global phase per
    sector; a Hamiltonian step holding a single exchange interaction is
    instead shifted by a full period, which leaves its unitary untouched.
    Purely local steps (decouplers, prefactors, one-qubit factors) are
    left alone; their negatives are reported rather than rewritten.
    """
    steps = tuple(
        _cancel_step(s, mode) if s.is_cross_block() else s for s in schedule.steps
    )
    return replace(schedule, steps=steps)


def schedule_to_json(schedule: PulseSchedule) -> dict:
    return {
        "version": 1,
        "name": schedule.name,
        "order": schedule.order,
        "n": schedule.n,
        "steps": [
            {
                "pairs": [list(p) for p in s.pairs],
                "coeffs": list(s.coeffs),
                "phase": s.phase,
            }
            for s in schedule.steps
        ],
    }


def schedule_from_json(data: dict) -> PulseSchedule:
    try:
        if data.get("version") != 1:
            raise ValueError(f"unsupported schedule version: {data.get('version')!r}")
        steps = []
        for k, s in enumerate(data["steps"]):
            pairs = [tuple(p) for p in s["pairs"]]
            coeffs = [float(c) for c in s["coeffs"]]
            if len(pairs) != len(coeffs):
                raise ValueError(f"step {k}: pairs and coeffs differ in length")
            steps.append(
                PulseStep.make(dict(zip(pairs, coeffs)), float(s.get("phase", 0.0)))
            )
        return PulseSchedule(
            tuple(steps),
            name=str(data.get("name", "schedule")),
            order=int(data.get("order", 1)),
            n=int(data.get("n", 1)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed schedule JSON: {exc}") from exc


def save_schedule(schedule: PulseSchedule, path) -> None:
    with open(path, "w") as fh:
        json.dump(schedule_to_json(schedule), fh, indent=1)
        fh.write("\n")


def load_schedule(path) -> PulseSchedule:
    with open(path) as fh:
        return schedule_from_json(json.load(fh))
