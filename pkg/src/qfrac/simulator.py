"""Dense statevector simulation of single-qubit gates and CNOTs.

Basis states are big-endian: qubit 0 is the most significant bit of the basis
index, so ``|q0 q1 ... q(n-1)>`` has index ``q0 * 2**(n-1) + ... + q(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bridge import as_unitary

MAX_QUBITS = 24
MAX_MATRIX_QUBITS = 10
NORM_TOL = 1e-10
RNG_NAME = "numpy.PCG64"


class CapacityError(ValueError):
    """Raised when a register exceeds the simulator's size limits."""


class StateVector:
    """Normalised amplitudes of an ``n_qubits`` register."""

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes):
        amps = np.array(amplitudes, dtype=complex)
        if not 1 <= n_qubits <= MAX_QUBITS:
            raise CapacityError(f"register size must be in 1..{MAX_QUBITS}, got {n_qubits}")
        if amps.shape != (2**n_qubits,):
            raise ValueError(f"expected {2**n_qubits} amplitudes, got shape {amps.shape}")
        total = float(np.vdot(amps, amps).real)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalised: sum |amp|^2 = {total!r}")
        amps.flags.writeable = False
        self.n_qubits = n_qubits
        self.amplitudes = amps

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits}, amplitudes={self.amplitudes!r})"

    def _tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n_qubits)


@dataclass(frozen=True, eq=False)
class Gate1:
    """Single-qubit gate ``matrix`` on qubit ``target``."""

    matrix: np.ndarray = field(repr=False)
    target: int

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_unitary(self.matrix))


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("CNOT control and target must differ")


CircuitOp = Gate1 | CNOT


@dataclass(frozen=True)
class ShotResult:
    counts: dict[str, int]
    shots: int
    seed: int
    rng: str = RNG_NAME

    def frequency(self, outcome: str = "1") -> float:
        return self.counts.get(outcome, 0) / self.shots


def new_state(n: int) -> StateVector:
    if not 1 <= n <= MAX_QUBITS:
        raise CapacityError(f"register size must be in 1..{MAX_QUBITS}, got {n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    return StateVector(n, amps)


def _check_index(s: StateVector, q: int) -> None:
    if not 0 <= q < s.n_qubits:
        raise IndexError(f"qubit {q} out of range for a {s.n_qubits}-qubit register")


def _apply_1q(psi: np.ndarray, u: np.ndarray, target: int) -> np.ndarray:
    out = np.tensordot(u, psi, axes=([1], [target]))
    return np.moveaxis(out, 0, target)


def _apply_cnot(psi: np.ndarray, control: int, target: int) -> np.ndarray:
    out = psi.copy()
    idx = [slice(None)] * psi.ndim
    idx[control] = 1
    idx = tuple(idx)
    axis = target if target < control else target - 1
    out[idx] = np.flip(psi[idx], axis=axis)
    return out


def apply_1q(s: StateVector, u, target: int) -> StateVector:
    _check_index(s, target)
    psi = _apply_1q(s._tensor(), as_unitary(u), target)
    return StateVector(s.n_qubits, psi.reshape(-1))


def apply_cnot(s: StateVector, control: int, target: int) -> StateVector:
    if control == target:
        raise ValueError("CNOT control and target must differ")
    _check_index(s, control)
    _check_index(s, target)
    psi = _apply_cnot(s._tensor(), control, target)
    return StateVector(s.n_qubits, psi.reshape(-1))


def run(ops, n: int, state: StateVector | None = None) -> StateVector:
    """Apply ``ops`` in order to ``state`` (default ``|0...0>``)."""
    s = new_state(n) if state is None else state
    if s.n_qubits != n:
        raise ValueError(f"state has {s.n_qubits} qubits, circuit expects {n}")
    psi = s._tensor()
    for op in ops:
        if isinstance(op, Gate1):
            _check_index(s, op.target)
            psi = _apply_1q(psi, op.matrix, op.target)
        else:
            _check_index(s, op.control)
            _check_index(s, op.target)
            psi = _apply_cnot(psi, op.control, op.target)
    return StateVector(n, psi.reshape(-1))


def _full_gate(u: np.ndarray, target: int, n: int) -> np.ndarray:
    m = np.ones((1, 1), dtype=complex)
    for q in range(n):
        m = np.kron(m, u if q == target else np.eye(2))
    return m


def _full_cnot(control: int, target: int, n: int) -> np.ndarray:
    dim = 2**n
    cbit, tbit = 1 << (n - 1 - control), 1 << (n - 1 - target)
    m = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        m[col ^ tbit if col & cbit else col, col] = 1.0
    return m


def circuit_unitary(ops, n: int) -> np.ndarray:
    """Full ``2**n x 2**n`` matrix of ``ops`` built from Kronecker products."""
    if not 1 <= n <= MAX_MATRIX_QUBITS:
        raise CapacityError(f"dense circuit matrices support 1..{MAX_MATRIX_QUBITS} qubits, got {n}")
    total = np.eye(2**n, dtype=complex)
    for op in ops:
        if isinstance(op, Gate1):
            if not 0 <= op.target < n:
                raise IndexError(f"qubit {op.target} out of range")
            step = _full_gate(op.matrix, op.target, n)
        else:
            if not (0 <= op.control < n and 0 <= op.target < n):
                raise IndexError(f"CNOT({op.control}, {op.target}) out of range")
            step = _full_cnot(op.control, op.target, n)
        total = step @ total
    return total


def prob_one(s: StateVector, qubit: int) -> float:
    """Probability that measuring ``qubit`` yields 1."""
    _check_index(s, qubit)
    p = np.abs(s._tensor()) ** 2
    idx = [slice(None)] * s.n_qubits
    idx[qubit] = 1
    return float(min(1.0, max(0.0, p[tuple(idx)].sum())))


def sample(s: StateVector, qubit: int, shots: int, seed: int) -> ShotResult:
    """Simulate ``shots`` measurements of ``qubit`` with a seeded PCG64 stream."""
    if shots < 1:
        raise ValueError("shots must be positive")
    return sample_probability(prob_one(s, qubit), shots, seed)


def sample_probability(p: float, shots: int, seed: int) -> ShotResult:
    rng = np.random.Generator(np.random.PCG64(seed))
    ones = int(np.count_nonzero(rng.random(shots) < p))
    return ShotResult({"0": shots - ones, "1": ones}, shots, seed)
