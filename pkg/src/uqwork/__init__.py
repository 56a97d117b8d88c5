"""Quantized enveloping algebras: PBW normal forms, Hopf structure, parabolic
nilradicals, integrable parts, Verma modules and the checks built on them."""

from .pbw import QuantumGroup, UqElement, quantum_group
from .qscalar import QScalar, parse_qscalar, qint, qpow, qs
from .rootdata import CartanDatum, ParabolicSubset, TorusChar, cartan

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "ParabolicSubset",
    "QScalar",
    "QuantumGroup",
    "TorusChar",
    "UqElement",
    "cartan",
    "parse_qscalar",
    "qint",
    "qpow",
    "qs",
    "quantum_group",
]
