"""Tenth-of-a-Hadamard: naive Euler-angle splitting versus the quaternion root.

A Hadamard is, up to phase, ``rx(180°)`` applied after ``ry(90°)``. Repeating
``rx(18°) ry(9°)`` ten times does not reproduce it, because the rotations do
not commute. The tenth root from :func:`qfrac.bridge.gate_power` does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bridge import gate_power
from .gates import named_gate, rx, ry

STEPS = 10
HADAMARD_TARGET = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)
# amplitudes reported for the failed Euler-angle construction
REPORTED_EULER_STATE = np.array([0.445 - 0.05j, 0.632 - 0.632j])


def align_phase(v: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Multiply ``v`` by the global phase that best matches ``reference``."""
    overlap = np.vdot(v, reference)
    if abs(overlap) == 0.0:
        return v.copy()
    return v * (overlap / abs(overlap))


def overlap(u: np.ndarray, v: np.ndarray) -> float:
    return float(abs(np.vdot(u, v)))


def repeated(step: np.ndarray, times: int = STEPS) -> np.ndarray:
    return np.linalg.matrix_power(step, times) @ np.array([1.0, 0.0], dtype=complex)


@dataclass(frozen=True, eq=False)
class EulerDemo:
    paths: dict[str, np.ndarray]
    quaternion_state: np.ndarray
    target: np.ndarray

    def overlaps(self) -> dict[str, float]:
        out = {name: overlap(v, self.target) for name, v in self.paths.items()}
        out["quaternion"] = overlap(self.quaternion_state, self.target)
        return out


def euler_demo() -> EulerDemo:
    """Compute every path.

    ``rx18_ry9`` and ``ry9_rx18`` are the two orderings of the literal tenth
    angles. ``rx9_ry9`` is the per-step operator whose tenth power reproduces
    the reported amplitudes; it differs from the literal construction by using
    half the X angle.
    """
    deg = math.pi / 180.0
    paths = {
        "rx18_ry9": repeated(rx(18 * deg) @ ry(9 * deg)),
        "ry9_rx18": repeated(ry(9 * deg) @ rx(18 * deg)),
        "rx9_ry9": repeated(rx(9 * deg) @ ry(9 * deg)),
    }
    root = gate_power(named_gate("H"), STEPS, recover_phase=True)
    return EulerDemo(paths, repeated(root), HADAMARD_TARGET.copy())
