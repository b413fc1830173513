"""Exchange-only entangling gates for three-spin DFS logical qubits.

Submodules:

* ``symrep``   - partitions, tableaux, Young's orthogonal form
* ``encoding`` - computational-basis embeddings and Pauli dictionaries
* ``decouple`` - block sums, decoupler unitaries, decoupling average
* ``trotter``  - pulse schedules: product formulas and CNOT constructions
* ``metrics``  - simulation, fidelity, leakage, benchmark tables
* ``oracle``   - independent 64-dimensional physical-space validation
* ``cli``      - command-line front end
"""

from .encoding import SpinSector
from .metrics import CNOT, SynthesisReport, entanglement_fidelity, leakage, report, simulate
from .symrep import GroupAlgebraElement, Partition, Permutation, StandardTableau
from .trotter import (
    CanonicalGateSpec,
    PulseSchedule,
    PulseStep,
    cancel_negatives,
    canonical_two_qubit_schedule,
    cnot_spin1,
    cnot_spin_independent,
    consolidate,
    decoupled_evolution,
    normalized_time,
    single_qubit_schedule,
    trotter_product,
)

__version__ = "0.1.0"

__all__ = [
    "SpinSector",
    "CNOT",
    "SynthesisReport",
    "entanglement_fidelity",
    "leakage",
    "report",
    "simulate",
    "GroupAlgebraElement",
    "Partition",
    "Permutation",
    "StandardTableau",
    "CanonicalGateSpec",
    "PulseSchedule",
    "PulseStep",
    "cancel_negatives",
    "canonical_two_qubit_schedule",
    "cnot_spin1",
    "cnot_spin_independent",
    "consolidate",
    "decoupled_evolution",
    "normalized_time",
    "single_qubit_schedule",
    "trotter_product",
    "__version__",
]
