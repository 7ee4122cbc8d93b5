"""Fractional powers of single-qubit gates via unit quaternions.

Also provides CNOT "adder" circuits that combine fractional rotations and a
small bag-of-words topic classifier built from them.
"""

from .bridge import (
    ComplexPairForm,
    NotSpecialUnitaryError,
    NotUnitaryError,
    gate_exponent,
    gate_power,
    gate_roots,
    project_to_su2,
    quat_to_su2,
    su2_to_quat,
)
from .gates import GeneratorKind, fractional_h, fractional_x, named_gate, rx, ry, rz
from .quaternion import (
    DegenerateRootError,
    PolarForm,
    Quaternion,
    QuaternionDomainError,
    UnitQuaternion,
    conjugate,
    from_polar,
    inverse,
    mul,
    norm,
    polar_decompose,
    power,
    roots,
)

__version__ = "0.1.0"
