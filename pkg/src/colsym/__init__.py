"""Colored quasisymmetric, noncommutative symmetric and symmetric functions
with exact arithmetic."""

from .algebras import Algebras
from .classical import NSym, QSym, Sym
from .free_module import FormalSum, Key, TensorSum, tensor
from .hopf import NSymA, PSymA, QSymA, SymA, chi, iota, m_from_M, uncolor
from .sentences import Alphabet

__all__ = [
    "Algebras", "Alphabet", "FormalSum", "Key", "TensorSum", "tensor",
    "NSymA", "QSymA", "PSymA", "SymA", "NSym", "QSym", "Sym",
    "chi", "iota", "m_from_M", "uncolor",
]
