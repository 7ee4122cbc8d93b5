"""CNOT adder circuits: summand qubits feeding one sum qubit.

Each summand qubit is rotated by its own gate and then CNOT-ed into the sum
qubit, which is measured. With two summands the outcome probability has a
closed form; for more summands it is obtained by simulation.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .bridge import ComplexPairForm
from .gates import GeneratorKind
from .simulator import CNOT, Gate1, prob_one, run

MAX_INPUTS = 12


@dataclass(frozen=True)
class AdderSpec:
    """Ordered ``(generator, angle)`` summands; the sum qubit is implied."""

    inputs: tuple[tuple[GeneratorKind, float], ...]

    def __post_init__(self):
        inputs = tuple((g, float(a)) for g, a in self.inputs)
        if not inputs:
            raise ValueError("an adder needs at least one input")
        if any(not math.isfinite(a) for _, a in inputs):
            raise ValueError("adder angles must be finite")
        object.__setattr__(self, "inputs", inputs)

    def gates(self) -> list[np.ndarray]:
        return [g.rotation(a) for g, a in self.inputs]


def adder_circuit(gates) -> tuple[list, int]:
    """Ops and register size for summands ``gates`` wired to a final sum qubit.

    Each gate is applied and immediately CNOT-ed into the sum qubit; these
    pairs commute with one another, so the order of summands is immaterial.
    """
    n = len(gates) + 1
    ops = []
    for q, u in enumerate(gates):
        ops += [Gate1(u, q), CNOT(q, n - 1)]
    return ops, n


def adder_n_gates(gates) -> float:
    if not 1 <= len(gates) <= MAX_INPUTS:
        raise ValueError(f"adders support 1..{MAX_INPUTS} inputs, got {len(gates)}")
    ops, n = adder_circuit(gates)
    return prob_one(run(ops, n), n - 1)


def adder_two_simulated(a, b) -> float:
    """P(sum qubit = 1) for ``[a on q0, CNOT(0,2), b on q1, CNOT(1,2)]``."""
    return adder_n_gates([a, b])


def adder_n_simulated(spec: AdderSpec) -> float:
    return adder_n_gates(spec.gates())


def xrot_probability(theta: float, phi: float) -> float:
    """Closed form for two ``rx`` summands."""
    ct, st = math.cos(theta / 2) ** 2, math.sin(theta / 2) ** 2
    cp, sp = math.cos(phi / 2) ** 2, math.sin(phi / 2) ** 2
    return ct * sp + st * cp


def general_two_probability(a, b) -> float:
    """Closed form ``|alpha conj(delta)|^2 + |conj(beta) gamma|^2`` for SU(2) summands.

    ``a = [[alpha, beta], ...]`` and ``b = [[gamma, delta], ...]`` must be in
    special-unitary pair form.
    """
    pa = a if isinstance(a, ComplexPairForm) else ComplexPairForm.from_matrix(a)
    pb = b if isinstance(b, ComplexPairForm) else ComplexPairForm.from_matrix(b)
    return (abs(pa.alpha * pb.beta.conjugate()) ** 2
            + abs(pa.beta.conjugate() * pb.alpha) ** 2)


@dataclass(frozen=True, eq=False)
class SurfaceGrid:
    theta_axis: np.ndarray
    phi_axis: np.ndarray
    values: np.ndarray

    def to_csv(self, precision: int = 12) -> str:
        digits = max(int(precision), 12)
        buf = io.StringIO()
        buf.write("theta,phi,p_one\n")
        for i, t in enumerate(self.theta_axis):
            for j, p in enumerate(self.phi_axis):
                buf.write(f"{t:.{digits}g},{p:.{digits}g},{self.values[i, j]:.{digits}g}\n")
        return buf.getvalue()


def grid_axis(resolution: int) -> np.ndarray:
    if resolution < 2:
        raise ValueError("surface resolution must be at least 2")
    return np.linspace(0.0, 2.0 * math.pi, resolution)


def surface(gen_a: GeneratorKind, gen_b: GeneratorKind, resolution: int) -> SurfaceGrid:
    """Simulated adder probability on a uniform ``resolution**2`` grid over [0, 2pi]^2."""
    axis = grid_axis(resolution)
    rot_a = [gen_a.rotation(t) for t in axis]
    rot_b = [gen_b.rotation(p) for p in axis]
    values = np.empty((resolution, resolution))
    for i, ua in enumerate(rot_a):
        # the first summand's stage is shared by the whole row
        ops_a = [Gate1(ua, 0), CNOT(0, 2)]
        state = run(ops_a, 3)
        for j, ub in enumerate(rot_b):
            values[i, j] = prob_one(run([Gate1(ub, 1), CNOT(1, 2)], 3, state), 2)
    return SurfaceGrid(axis, axis.copy(), values)

