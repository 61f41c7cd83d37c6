"""Finite rings as Cayley tables, with the analysis tools built on them.

Modules:
  rings      ring representation, validation, named families, ringtab format
  structure  zero divisors, ideals, radical, decomposition, isomorphism
  graphs     zero-divisor graphs, canonical forms, DOT import/export
  freealg    noncommutative integer polynomials and identity checking
  atlas      exhaustive classification of rings by order
  scenarios  named end-to-end verification runs
  cli        the `finring` command
"""

from .errors import (
    AxiomViolation,
    BudgetExceeded,
    FinringError,
    FormatError,
    GraphCapExceeded,
    NoIdentity,
    NotAnIdeal,
    NotPrime,
    OrderCapExceeded,
    ParseError,
    UnboundVariable,
    ZeroPolynomial,
)
from .rings import FiniteRing, make_ring

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BudgetExceeded",
    "FiniteRing",
    "FinringError",
    "FormatError",
    "GraphCapExceeded",
    "NoIdentity",
    "NotAnIdeal",
    "NotPrime",
    "OrderCapExceeded",
    "ParseError",
    "UnboundVariable",
    "ZeroPolynomial",
    "make_ring",
    "__version__",
]
