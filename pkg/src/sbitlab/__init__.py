"""sbitlab: the S model of computation.

Sbits take the values ``0``, ``1`` and ``s``; gates are defined on basis
words and extended by weak additivity.  The package provides the value
algebra, a ternary netlist IR with exhaustive w-additivity checking,
universal synthesis, a classical-to-w-additive lowering pass, the constant
test and search query algorithms, and a dual-rail Boolean backend.
"""

from .core import S, ONE, ZERO, BasisWordSet, Sbit, SbitWord, expand, sbit_add, sum_set, word, word_add
from .gates import BasisTable, FullTable, GateKind, Status, Verdict, check_weak_additivity, extend, gate_apply
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "S", "ONE", "ZERO", "BasisWordSet", "Sbit", "SbitWord", "expand", "sbit_add", "sum_set", "word",
    "word_add", "BasisTable", "FullTable", "GateKind", "Status", "Verdict", "check_weak_additivity",
    "extend", "gate_apply", "BACKEND",
]
