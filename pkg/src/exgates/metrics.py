"""Schedule scoring: simulation, entanglement fidelity, leakage, tables.

Fidelity is the squared modulus of the normalized computational-subspace
trace overlap,

    F(G, C) = | tr(Pi G^dag C) / 4 |^2,

with the target C extended by identity on the complement; it is invariant
under a global phase of G.  Leakage is the trace formula

    L(G, C) = tr(Pi G^dag C Pi_perp C^dag G) / 4,

the portion of 1 - F due to population leaving the computational
subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .encoding import SpinSector, projector
from .linalg import expi
from .symrep import GroupAlgebraElement, rep_element
from .trotter import (
    PulseSchedule,
    PulseStep,
    cancel_negatives,
    cnot_spin1,
    cnot_spin_independent,
    consolidate,
    normalized_time,
)

__all__ = [
    "CNOT",
    "FONG_WANDZURA_CYCLES",
    "FONG_WANDZURA_TIME",
    "SynthesisReport",
    "simulate",
    "entanglement_fidelity",
    "leakage",
    "report",
    "table_rows",
    "render_markdown",
    "render_csv",
    "render_json",
]

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)

# Benchmark constants of the exact spin-independent CNOT sequence used for
# comparison in the tables (not recomputed here).
FONG_WANDZURA_CYCLES = 13
FONG_WANDZURA_TIME = 12.3


def _step_unitary(step: PulseStep, sector: SpinSector) -> np.ndarray:
    g = np.zeros((sector.dim, sector.dim))
    for pair, c in zip(step.pairs, step.coeffs):
        g = g + c * rep_element(
            sector.partition, GroupAlgebraElement.transposition(6, *pair)
        ).matrix.real
    u = expi(g)
    if step.phase:
        u = np.exp(1j * step.phase) * u
    return u


def simulate(schedule: PulseSchedule, sector: SpinSector) -> np.ndarray:
    """Unitary of a schedule in one sector's irrep (rightmost step first)."""
    total = np.eye(sector.dim, dtype=complex)
    cache: dict[PulseStep, np.ndarray] = {}
    for step in schedule.steps:
        u = cache.get(step)
        if u is None:
            u = cache[step] = _step_unitary(step, sector)
        total = total @ u
    return total


def _extended_target(target: np.ndarray, sector: SpinSector) -> np.ndarray:
    pi = projector(sector)
    return pi.T @ np.asarray(target, dtype=complex) @ pi + (
        np.eye(sector.dim) - pi.T @ pi
    )


def entanglement_fidelity(
    gate: np.ndarray, target: np.ndarray, sector: SpinSector
) -> float:
    pi = projector(sector)
    overlap = np.trace(pi @ gate.conj().T @ _extended_target(target, sector) @ pi.T)
    return float(abs(overlap / 4.0) ** 2)


def leakage(gate: np.ndarray, target: np.ndarray, sector: SpinSector) -> float:
    pi = projector(sector)
    pi_perp = np.eye(sector.dim) - pi.T @ pi
    c = _extended_target(target, sector)
    value = np.trace(pi @ gate.conj().T @ c @ pi_perp @ c.conj().T @ gate @ pi.T)
    return float(value.real / 4.0)


@dataclass(frozen=True)
class SynthesisReport:
    """Scorecard of one schedule against a target gate.

    ``cycles`` counts the consolidated exponential factors;
    ``normalized_time`` sums per-pulse maxima in swap durations (computed
    on the schedule as constructed).  Fidelity and leakage are keyed by
    sector name.  ``negative_local_steps`` flags steps outside the
    Hamiltonian pulses that still carry negative coefficients.
    """

    name: str
    n: int
    cycles: int
    normalized_time: float
    fidelity: dict[str, float]
    leakage: dict[str, float]
    negative_local_steps: int = 0


def report(schedule: PulseSchedule, target: np.ndarray | None = None) -> SynthesisReport:
    if target is None:
        target = CNOT
    fid: dict[str, float] = {}
    leak: dict[str, float] = {}
    for sector in SpinSector:
        g = simulate(schedule, sector)
        fid[sector.name] = entanglement_fidelity(g, target, sector)
        leak[sector.name] = leakage(g, target, sector)
    negative_local = sum(
        1
        for s in schedule.steps
        if not s.is_cross_block() and any(c < 0 for c in s.coeffs)
    )
    return SynthesisReport(
        name=schedule.name,
        n=schedule.n,
        cycles=len(consolidate(schedule).steps),
        normalized_time=normalized_time(schedule),
        fidelity=fid,
        leakage=leak,
        negative_local_steps=negative_local,
    )


def table_rows(
    which: int,
    ns: Sequence[int] | None = None,
    cancel: bool = False,
) -> list[SynthesisReport]:
    """Reports behind the two CNOT benchmark tables.

    Table 1 is the spin-independent construction at n = 3, 5, 9; table 2
    the spin-1 optimized one at n = 2, 3, 4.  With ``cancel`` the
    negative coefficients of the Hamiltonian pulses are first removed with
    the all-transposition sum, which is central in each irrep and so
    changes the simulated unitary by a pure per-sector phase: time grows
    by the canceled magnitude, fidelity and leakage stay put.
    """
    if which == 1:
        ns = tuple(ns) if ns is not None else (3, 5, 9)
        builder = cnot_spin_independent
    elif which == 2:
        ns = tuple(ns) if ns is not None else (2, 3, 4)
        builder = cnot_spin1
    else:
        raise ValueError("table must be 1 or 2")
    rows = []
    for n in ns:
        schedule = builder(n)
        if cancel:
            schedule = cancel_negatives(schedule, "full-sum")
        rows.append(report(schedule))
    return rows


def _row_cells(r: SynthesisReport) -> tuple[str, str, str, str, str]:
    return (
        str(r.n),
        str(r.cycles),
        f"{r.normalized_time:.1f}",
        f"{r.fidelity['SPIN1']:.5f}",
        f"{r.leakage['SPIN1']:.5f}",
    )


_HEADER = ("n", "cycles", "time", "fidelity", "leakage")
_BENCH_NOTE = (
    f"benchmark (exact sequence): {FONG_WANDZURA_CYCLES} cycles, "
    f"normalized time {FONG_WANDZURA_TIME}"
)


def render_markdown(rows: Sequence[SynthesisReport]) -> str:
    lines = [
        "| " + " | ".join(_HEADER) + " |",
        "|" + "|".join("---" for _ in _HEADER) + "|",
    ]
    for r in rows:
        lines.append("| " + " | ".join(_row_cells(r)) + " |")
    lines.append("")
    lines.append(_BENCH_NOTE)
    return "\n".join(lines)


def render_csv(rows: Sequence[SynthesisReport]) -> str:
    lines = [",".join(_HEADER)]
    for r in rows:
        lines.append(",".join(_row_cells(r)))
    return "\n".join(lines)


def render_json(rows: Sequence[SynthesisReport]) -> str:
    import json

    payload = {
        "benchmark": {"cycles": FONG_WANDZURA_CYCLES, "time": FONG_WANDZURA_TIME},
        "rows": [
            {
                "n": r.n,
                "cycles": r.cycles,
                "time": float(f"{r.normalized_time:.1f}"),
                "fidelity": float(f"{r.fidelity['SPIN1']:.5f}"),
                "leakage": float(f"{r.leakage['SPIN1']:.5f}"),
            }
            for r in rows
        ],
    }
    return json.dumps(payload, indent=1)
