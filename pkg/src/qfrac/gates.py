"""Named single-qubit gates and the fractional X / Hadamard generators."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT1_2 = 1.0 / math.sqrt(2.0)

_NAMED = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * SQRT1_2,
}


def named_gate(name: str) -> np.ndarray:
    """Textbook U(2) form of ``I``, ``X``, ``Y``, ``Z`` or ``H``."""
    try:
        return _NAMED[name.upper()].copy()
    except KeyError:
        raise ValueError(f"unknown gate {name!r}; expected one of {', '.join(_NAMED)}") from None


def fractional_x(alpha: float) -> np.ndarray:
    """SU(2) matrix of ``k**alpha``; ``alpha = 1`` gives ``iX``."""
    c, s = math.cos(math.pi * alpha / 2), math.sin(math.pi * alpha / 2)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)


def fractional_h(alpha: float) -> np.ndarray:
    """SU(2) matrix of ``((i + k)/sqrt 2)**alpha``; ``alpha = 1`` gives ``iH``."""
    c, s = math.cos(math.pi * alpha / 2), math.sin(math.pi * alpha / 2)
    t = 1j * SQRT1_2 * s
    return np.array([[c + t, t], [t, c - t]], dtype=complex)


def rx(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


_FRACTIONAL = {"x": fractional_x, "h": fractional_h}


@dataclass(frozen=True)
class GeneratorKind:
    """A fractional generator family (``"x"`` or ``"h"``) at a base exponent.

    ``matrix()`` is the generator itself, ``base**exponent``. ``rotation(angle)``
    raises that generator to ``angle / pi``, so with ``exponent = 1`` an angle
    of ``pi`` is the full gate and the x family reproduces the outcome
    statistics of ``rx(angle)``.
    """

    tag: str
    exponent: float = 1.0

    def __post_init__(self):
        tag = self.tag.lower()
        if tag not in _FRACTIONAL:
            raise ValueError(f"unknown generator {self.tag!r}; expected 'x' or 'h'")
        if not math.isfinite(self.exponent):
            raise ValueError("generator exponent must be finite")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "exponent", float(self.exponent))

    def matrix(self) -> np.ndarray:
        return _FRACTIONAL[self.tag](self.exponent)

    def rotation(self, angle: float) -> np.ndarray:
        return _FRACTIONAL[self.tag](self.exponent * angle / math.pi)

    def to_dict(self) -> dict:
        return {"tag": self.tag, "exponent": self.exponent}

    @classmethod
    def from_dict(cls, d: dict) -> GeneratorKind:
        return cls(d["tag"], d.get("exponent", 1.0))
