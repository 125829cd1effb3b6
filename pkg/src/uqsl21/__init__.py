"""Exact computations in U_q(gl(2|1)) and the quantum loop superalgebra U_q(L(sl(2|1)))."""

from .pbw import AlgebraElement, E, F, ONE_ELT, ZERO_ELT, qK, omega, supercommutator
from .report import CheckReport
from .scalars import QRat, Series, kappa, q_bracket, q_pow

__all__ = [
    "AlgebraElement", "CheckReport", "E", "F", "ONE_ELT", "QRat", "Series", "ZERO_ELT",
    "kappa", "omega", "q_bracket", "q_pow", "qK", "supercommutator",
]
