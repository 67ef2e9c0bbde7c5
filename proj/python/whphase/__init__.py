"""Finite-dimensional extended Weyl-Heisenberg algebras: phase operators,
phase statistics, unitary depolarizers, generalized Bell states and MUBs."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    ContractViolation,
    InvalidDimension,
    UnsupportedConfiguration,
    ValidationError,
)

__version__ = "0.1.0"
