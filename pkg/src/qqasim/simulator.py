"""Quantum query algorithms: data model, simulation, and verification.

An algorithm is a fixed pipeline over ``m`` basis states: input-independent
unitary steps interleaved with query steps whose diagonal ±1 signs depend on
the input bits, followed by a 0/1 value assignment to every basis state.
Running it on an n-bit input yields each value with probability equal to the
summed squared magnitudes of the amplitudes assigned to it.

Only the number of query steps counts toward complexity; unitary steps are
free.  The whole model is immutable: every operation here is a pure function,
safe to call from concurrent workers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .boolfun import TruthTable, bit_string, _check_input
from .linalg import NORM_TOL, UNITARY_TOL, is_unitary


@dataclass(frozen=True)
class QueryGate:
    """Per-amplitude variable assignment; ``None`` leaves an amplitude alone.

    On input X the gate is the diagonal matrix whose j-th entry is -1 when
    the variable assigned to amplitude j has value 1, and +1 otherwise.
    """

    assignments: tuple

    def __post_init__(self):
        object.__setattr__(self, "assignments", tuple(self.assignments))
        for v in self.assignments:
            if v is not None and (not isinstance(v, (int, np.integer)) or v < 0):
                raise ValueError(f"variable index must be None or a non-negative int, got {v!r}")


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class QQA:
    """A quantum query algorithm over ``amplitudes`` basis states.

    ``steps`` holds unitary matrices and :class:`QueryGate` objects in
    execution order; ``measurement`` assigns an output value (0 or 1) to each
    basis state.  Construction validates unitarity of every gate at
    ``UNITARY_TOL`` and unit norm of the initial state at ``NORM_TOL``.
    """

    arity: int
    amplitudes: int
    initial: np.ndarray
    steps: tuple
    measurement: tuple

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError(f"arity must be non-negative, got {self.arity}")
        if self.amplitudes < 1:
            raise ValueError(f"need at least one amplitude, got {self.amplitudes}")
        m = self.amplitudes

        initial = np.array(self.initial, dtype=complex)
        if initial.shape != (m,):
            raise ValueError(f"initial state must have shape ({m},), got {initial.shape}")
        if abs(float(np.sum(np.abs(initial) ** 2)) - 1.0) > NORM_TOL:
            raise ValueError("initial state is not unit-norm")
        object.__setattr__(self, "initial", _freeze(initial))

        steps = []
        for k, step in enumerate(self.steps):
            if isinstance(step, QueryGate):
                if len(step.assignments) != m:
                    raise ValueError(f"step {k}: query gate needs {m} assignments")
                for v in step.assignments:
                    if v is not None and v >= self.arity:
                        raise ValueError(
                            f"step {k}: variable index {v} out of range for arity {self.arity}"
                        )
                steps.append(step)
            else:
                matrix = np.array(step, dtype=complex)
                if matrix.shape != (m, m):
                    raise ValueError(f"step {k}: expected a {m}x{m} matrix, got {matrix.shape}")
                if not is_unitary(matrix, UNITARY_TOL):
                    raise ValueError(f"step {k}: matrix is not unitary within {UNITARY_TOL}")
                steps.append(_freeze(matrix))
        object.__setattr__(self, "steps", tuple(steps))

        measurement = tuple(int(v) for v in self.measurement)
        if len(measurement) != m or any(v not in (0, 1) for v in measurement):
            raise ValueError(f"measurement must assign 0 or 1 to each of the {m} outputs")
        object.__setattr__(self, "measurement", measurement)

    @property
    def query_count(self) -> int:
        """Number of query steps; the complexity measure."""
        return sum(1 for s in self.steps if isinstance(s, QueryGate))

    def accepting_outputs(self) -> tuple:
        """Indices of basis states assigned value 1."""
        return tuple(i for i, v in enumerate(self.measurement) if v == 1)


@dataclass(frozen=True, eq=False)
class SimulationTrace:
    """Initial state plus the state after every step, for one input."""

    input: str
    states: tuple


@dataclass(frozen=True)
class VerificationReport:
    """Per-input success probabilities of an algorithm against a target table."""

    per_input: dict
    exact: bool
    worst_case_p: float
    queries: int


class StructuralProperty(enum.Enum):
    """Pre-measurement amplitude disciplines used as composition preconditions."""

    #: On every input, one basis state holds all of the probability.
    CERTAIN_OUTCOME = "certain-outcome"
    #: Exactly one accepting output, and its amplitude is always 0 or +1.
    ACCEPT_PLUS_ONE = "accepting-in-zero-plus-one"
    #: Exactly one accepting output, and its amplitude is always 0 or -1.
    ACCEPT_MINUS_ONE = "accepting-in-zero-minus-one"
    #: CERTAIN_OUTCOME plus exactly one accepting output with amplitude in {-1, 0, +1}.
    ACCEPT_SIGNED_UNIT = "accepting-signed-unit"


def query_transform(gate: QueryGate, input_bits: str) -> np.ndarray:
    """The concrete diagonal ±1 matrix of a query gate on one input."""
    signs = _signs(gate, input_bits, len(input_bits))
    return np.diag(signs.astype(complex))


def _signs(gate: QueryGate, input_bits: str, arity: int) -> np.ndarray:
    _check_input(input_bits, arity)
    out = np.ones(len(gate.assignments))
    for j, v in enumerate(gate.assignments):
        if v is not None:
            if v >= arity:
                raise ValueError(f"variable index {v} out of range for arity {arity}")
            if input_bits[v] == "1":
                out[j] = -1.0
    return out


def _evolve(a: QQA, input_bits: str, keep_intermediate: bool = False):
    state = a.initial
    states = [state]
    for step in a.steps:
        if isinstance(step, QueryGate):
            state = state * _signs(step, input_bits, a.arity)
        else:
            state = state @ step
        if keep_intermediate:
            states.append(state)
    norm = float(np.sum(np.abs(state) ** 2))
    if abs(norm - 1.0) > NORM_TOL:
        raise RuntimeError(f"state norm drifted to {norm} on input {input_bits!r}")
    return states if keep_intermediate else state


def run(a: QQA, input_bits: str):
    """Final state and outcome probabilities ``{0: p0, 1: p1}`` for one input."""
    final = _evolve(a, input_bits)
    probs = np.abs(final) ** 2
    values = np.array(a.measurement)
    outcome = {0: float(probs[values == 0].sum()), 1: float(probs[values == 1].sum())}
    if abs(outcome[0] + outcome[1] - 1.0) > NORM_TOL:
        raise RuntimeError("outcome probabilities do not sum to 1")
    return final, outcome


def trace(a: QQA, input_bits: str) -> SimulationTrace:
    """All intermediate states (initial first, final last) for one input."""
    states = _evolve(a, input_bits, keep_intermediate=True)
    return SimulationTrace(input_bits, tuple(_freeze(s.copy()) for s in states))


def run_all(a: QQA) -> np.ndarray:
    """Final states for every input, as a ``(2**arity, amplitudes)`` array.

    Row i is the pre-measurement state on input ``bit_string(i, arity)``.
    Simulating all inputs in one batch keeps exhaustive verification of the
    constructed 12-variable algorithms to a few dense matmuls.
    """
    n, m = a.arity, a.amplitudes
    count = 1 << n
    shifts = np.arange(n - 1, -1, -1)
    bits = (np.arange(count)[:, None] >> shifts[None, :]) & 1  # column k = variable k
    states = np.tile(a.initial, (count, 1))
    for step in a.steps:
        if isinstance(step, QueryGate):
            signs = np.ones((count, m))
            for j, v in enumerate(step.assignments):
                if v is not None:
                    signs[:, j] = 1.0 - 2.0 * bits[:, v]
            states = states * signs
        else:
            states = states @ step
    norms = np.sum(np.abs(states) ** 2, axis=1)
    if float(np.abs(norms - 1.0).max()) > NORM_TOL:
        raise RuntimeError("state norm drifted during batch simulation")
    return states


def _success_probabilities(a: QQA) -> np.ndarray:
    """P(output = 1) for every input, in row order."""
    states = run_all(a)
    mask = np.array(a.measurement) == 1
    return (np.abs(states[:, mask]) ** 2).sum(axis=1)


def verify(a: QQA, f: TruthTable, tol: float = NORM_TOL) -> VerificationReport:
    """Exhaustively compare an algorithm against a target truth table.

    ``exact`` means the worst-case success probability is within ``tol`` of 1.
    """
    if a.arity != f.arity:
        raise ValueError(f"arity mismatch: algorithm has {a.arity}, function has {f.arity}")
    p_one = _success_probabilities(a)
    target = np.frombuffer(f.bits, dtype=np.uint8)
    success = np.where(target == 1, p_one, 1.0 - p_one)
    per_input = {bit_string(i, a.arity): float(p) for i, p in enumerate(success)}
    worst = float(success.min())
    return VerificationReport(per_input, worst >= 1.0 - tol, worst, a.query_count)


def computed_function(a: QQA, tol: float = NORM_TOL) -> TruthTable:
    """The majority-outcome truth table of an algorithm.

    Fails if on some input neither value has probability above 1/2, in which
    case the algorithm computes nothing even under bounded error.
    """
    if a.arity < 1:
        raise ValueError("algorithm must read at least one variable to define a truth table")
    p_one = _success_probabilities(a)
    bits = bytearray(len(p_one))
    for i, p in enumerate(p_one):
        if abs(p - 0.5) <= tol:
            raise ValueError(
                f"no outcome has probability above 1/2 on input {bit_string(i, a.arity)}"
            )
        bits[i] = 1 if p > 0.5 else 0
    return TruthTable(a.arity, bytes(bits))


def check_property(a: QQA, which: StructuralProperty, tol: float = NORM_TOL) -> bool:
    """Exhaustively test one of the pre-measurement amplitude disciplines."""
    states = run_all(a)
    probs = np.abs(states) ** 2
    if which is StructuralProperty.CERTAIN_OUTCOME:
        return bool(np.all(probs.max(axis=1) >= 1.0 - tol))

    accepting = a.accepting_outputs()
    if len(accepting) != 1:
        return False
    column = states[:, accepting[0]]

    def near(value):
        return np.abs(column - value) <= tol

    if which is StructuralProperty.ACCEPT_PLUS_ONE:
        return bool(np.all(near(0.0) | near(1.0)))
    if which is StructuralProperty.ACCEPT_MINUS_ONE:
        return bool(np.all(near(0.0) | near(-1.0)))
    if which is StructuralProperty.ACCEPT_SIGNED_UNIT:
        certain = bool(np.all(probs.max(axis=1) >= 1.0 - tol))
        return certain and bool(np.all(near(0.0) | near(1.0) | near(-1.0)))
    raise ValueError(f"unknown property {which!r}")
