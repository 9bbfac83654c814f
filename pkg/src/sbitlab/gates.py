"""Named w-additive gates, basis tables and the w-additive extension.

Every gate is defined by its rows on basis inputs.  Full-domain tables are
generated from those rows by the extension and cross-checked against the
hard-coded published tables when this module is imported, so a single
discrepancy fails at import time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping

import numpy as np

from . import kernels
from .core import (
    SbitWord,
    all_words,
    basis_positions,
    basis_words,
    iter_expand,
    row_to_word,
    sum_set,
    word,
)
from .errors import CapExceededError, MalformedError

DEFAULT_CAP = 12


class GateKind(Enum):
    I = ("I", 1, 1)
    NOT = ("NOT", 1, 1)
    H = ("H", 1, 1)
    C0 = ("C0", 1, 1)
    C1 = ("C1", 1, 1)
    S0 = ("S0", 1, 1)
    S0BAR = ("S0BAR", 1, 1)
    S1 = ("S1", 1, 1)
    S1BAR = ("S1BAR", 1, 1)
    AND = ("AND", 2, 1)
    OR = ("OR", 2, 1)
    XOR = ("XOR", 2, 1)
    FANOUT = ("FANOUT", 1, 2)
    T = ("T", 3, 1)

    def __init__(self, label, arity_in, arity_out):
        self.label = label
        self.arity_in = arity_in
        self.arity_out = arity_out

    def __str__(self) -> str:
        return self.label

    @property
    def code(self) -> int:
        return _CODES[self]

    @classmethod
    def parse(cls, name: str) -> "GateKind":
        try:
            return cls[name.upper()]
        except KeyError:
            raise MalformedError(f"unknown gate {name!r}") from None


_CODES = {g: i for i, g in enumerate(GateKind)}

# Outputs on basis inputs, listed in lexicographic input order.
BASIS_ROWS: dict[GateKind, tuple[str, ...]] = {
    GateKind.I: ("0", "1"),
    GateKind.NOT: ("1", "0"),
    GateKind.H: ("s", "s"),
    GateKind.C0: ("0", "0"),
    GateKind.C1: ("1", "1"),
    GateKind.S0: ("s", "0"),
    GateKind.S0BAR: ("0", "s"),
    GateKind.S1: ("s", "1"),
    GateKind.S1BAR: ("1", "s"),
    GateKind.AND: ("0", "0", "0", "1"),
    GateKind.OR: ("0", "1", "1", "1"),
    GateKind.XOR: ("0", "1", "1", "0"),
    GateKind.FANOUT: ("00", "11"),
    GateKind.T: ("0", "0", "1", "1", "0", "1", "0", "1"),
}

# Published full-domain tables, inputs in lexicographic order over 0 < 1 < s.
PUBLISHED_TABLES: dict[GateKind, tuple[str, ...]] = {
    GateKind.I: tuple("01s"),
    GateKind.NOT: tuple("10s"),
    GateKind.H: tuple("sss"),
    GateKind.C0: tuple("000"),
    GateKind.C1: tuple("111"),
    GateKind.S0: tuple("s0s"),
    GateKind.S0BAR: tuple("0ss"),
    GateKind.S1: tuple("s1s"),
    GateKind.S1BAR: tuple("1ss"),
    GateKind.FANOUT: ("00", "11", "ss"),
    GateKind.AND: tuple("000" "01s" "0ss"),
    GateKind.OR: tuple("01s" "111" "s1s"),
    GateKind.XOR: tuple("01s" "10s" "sss"),
    GateKind.T: tuple("000111sss" "01s01s01s" "0sss1ssss"),
}


@dataclass(frozen=True)
class BasisTable:
    """A map from all 2^n_in basis words to output words of length n_out.

    ``rows[i]`` is the output for ``SbitWord.from_bits(i, n_in)``.  Outputs may
    contain ``s``; keys never do.
    """

    n_in: int
    n_out: int
    rows: tuple[SbitWord, ...]

    def __post_init__(self):
        if self.n_in < 1 or self.n_out < 1:
            raise MalformedError("basis tables need n_in >= 1 and n_out >= 1")
        rows = tuple(word(r) for r in self.rows)
        if len(rows) != 2 ** self.n_in:
            raise MalformedError(
                f"basis table on {self.n_in} inputs needs {2 ** self.n_in} rows, got {len(rows)}"
            )
        for r in rows:
            if len(r) != self.n_out:
                raise MalformedError(f"row {r} does not have width {self.n_out}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[str | SbitWord]) -> "BasisTable":
        rows = [word(r) for r in rows]
        n_in = max(len(rows).bit_length() - 1, 0)
        return cls(n_in, len(rows[0]), tuple(rows))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str | SbitWord, str | SbitWord]) -> "BasisTable":
        items = {word(k): word(v) for k, v in mapping.items()}
        n_in = len(next(iter(items)))
        missing = [str(x) for x in basis_words(n_in) if x not in items]
        if missing or any(not k.is_basis for k in items):
            raise MalformedError(f"mapping must cover exactly the basis words (missing {missing})")
        return cls.from_rows(items[x] for x in basis_words(n_in))

    @classmethod
    def from_function(cls, n_in: int, f: Callable[[SbitWord], SbitWord | str]) -> "BasisTable":
        return cls.from_rows(word(f(x)) for x in basis_words(n_in))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "BasisTable":
        arr = np.asarray(arr)
        return cls.from_rows(row_to_word(r) for r in arr)

    @classmethod
    def of_gate(cls, g: GateKind) -> "BasisTable":
        return cls.from_rows(BASIS_ROWS[g])

    def __call__(self, x: SbitWord | str) -> SbitWord:
        x = word(x)
        if len(x) != self.n_in:
            raise MalformedError(f"expected {self.n_in} input sbits, got {len(x)}")
        return self.rows[x.bits()]

    def items(self):
        return zip(basis_words(self.n_in), self.rows)

    def as_array(self) -> np.ndarray:
        return np.array([r.symbols for r in self.rows], dtype=np.uint8)

    def cofactor(self, first: int) -> "BasisTable":
        """Table of the function with its first input fixed to ``first``."""
        if self.n_in < 2:
            raise MalformedError("cannot fix an input of a one-input table")
        half = 2 ** (self.n_in - 1)
        return BasisTable(self.n_in - 1, self.n_out, self.rows[first * half:(first + 1) * half])

    def output(self, j: int) -> "BasisTable":
        return BasisTable(self.n_in, 1, tuple(r[j:j + 1] for r in self.rows))

    def is_constant(self) -> bool:
        return len(set(self.rows)) == 1

    def dumps(self) -> str:
        lines = [f"basis {self.n_in} {self.n_out}"]
        lines += [f"{x} {y}" for x, y in self.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "BasisTable":
        lines = _content_lines(text)
        if not lines or lines[0][0] != "basis" or len(lines[0]) != 3:
            raise MalformedError("basis table must start with 'basis <n_in> <n_out>'")
        try:
            n_in, n_out = int(lines[0][1]), int(lines[0][2])
        except ValueError:
            raise MalformedError("basis table header widths must be integers") from None
        keys = []
        rows = []
        for parts in lines[1:]:
            if len(parts) != 2:
                raise MalformedError(f"bad basis table row: {' '.join(parts)}")
            keys.append(word(parts[0]))
            rows.append(word(parts[1]))
        if keys != list(basis_words(n_in)):
            raise MalformedError("basis table rows must list every basis word once, in lexicographic order")
        return cls(n_in, n_out, tuple(rows))


@dataclass(frozen=True)
class FullTable:
    """An arbitrary total map K_n_in -> K_n_out, one row per word in lexicographic order."""

    n_in: int
    n_out: int
    array: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.array, dtype=np.uint8)
        if arr.shape != (3 ** self.n_in, self.n_out):
            raise MalformedError(f"full table needs shape {(3 ** self.n_in, self.n_out)}, got {arr.shape}")
        if arr.size and arr.max() > 2:
            raise MalformedError("full table entries must be sbits")
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @classmethod
    def from_function(cls, n_in: int, f: Callable[[SbitWord], SbitWord | str]) -> "FullTable":
        rows = [word(f(w)).symbols for w in all_words(n_in)]
        return cls(n_in, len(rows[0]), np.array(rows, dtype=np.uint8))

    def __call__(self, w: SbitWord | str) -> SbitWord:
        return row_to_word(self.array[word(w).index()])

    def basis_table(self) -> BasisTable:
        return BasisTable.from_array(self.array[basis_positions(self.n_in)])

    def dumps(self) -> str:
        lines = [f"full {self.n_in} {self.n_out}"]
        lines += [f"{w} {row_to_word(r)}" for w, r in zip(all_words(self.n_in), self.array)]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "FullTable":
        lines = _content_lines(text)
        if not lines or lines[0][0] != "full" or len(lines[0]) != 3:
            raise MalformedError("full table must start with 'full <n_in> <n_out>'")
        n_in, n_out = int(lines[0][1]), int(lines[0][2])
        keys = [word(p[0]) for p in lines[1:]]
        if keys != list(all_words(n_in)):
            raise MalformedError("full table rows must list every word once, in lexicographic order")
        rows = [word(p[1]).symbols for p in lines[1:]]
        return cls(n_in, n_out, np.array(rows, dtype=np.uint8).reshape(-1, n_out))


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def extend(t: BasisTable, w: SbitWord | str) -> SbitWord:
    """Value of the w-additive extension of ``t`` at ``w``: the sum of t over the maximal set."""
    w = word(w)
    if len(w) != t.n_in:
        raise MalformedError(f"expected {t.n_in} input sbits, got {len(w)}")
    return sum_set(t(x) for x in iter_expand(w))


def extension_array(t: BasisTable) -> np.ndarray:
    """The extension of ``t`` on all 3^n inputs, shape ``(3**n_in, n_out)``."""
    return kernels.extension_table(t.as_array(), t.n_in)


def check_cap(n: int, cap: int | None, base: int = 3) -> None:
    if cap is not None and n > cap:
        raise CapExceededError(n, cap, base)


class Status(Enum):
    WADDITIVE = "WADDITIVE"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: SbitWord | None = None
    gate_count: int = 0
    query_count: int = 0

    def __post_init__(self):
        if (self.witness is None) != (self.status is Status.WADDITIVE):
            raise ValueError("a witness is present exactly for violations")

    @property
    def ok(self) -> bool:
        return self.status is Status.WADDITIVE

    def __bool__(self) -> bool:
        return self.ok


def first_violation(full: np.ndarray, n: int) -> SbitWord | None:
    """Lexicographically least word where ``full`` differs from its basis extension."""
    full = np.asarray(full, dtype=np.uint8)
    ext = kernels.extension_table(full[basis_positions(n)], n)
    bad = np.flatnonzero((full != ext).any(axis=1))
    if bad.size == 0:
        return None
    return SbitWord.from_index(int(bad[0]), n)


def check_weak_additivity(f, n: int | None = None, cap: int = DEFAULT_CAP) -> Verdict:
    """Check a total map K_n -> K_m for weak additivity on every one of its 3^n inputs.

    ``f`` is a :class:`FullTable`, an array of shape ``(3**n, m)``, or a callable
    on words (then ``n`` is required).  Multi-output maps are checked
    component-wise; the witness is the least violating input.
    """
    if isinstance(f, FullTable):
        n, full = f.n_in, f.array
    elif isinstance(f, np.ndarray):
        if n is None:
            n = 0
            while 3 ** n < f.shape[0]:
                n += 1
        full = f
    else:
        if n is None:
            raise MalformedError("input width is required for a callable")
        check_cap(n, cap)
        full = FullTable.from_function(n, f).array
    check_cap(n, cap)
    if full.shape[0] != 3 ** n:
        raise MalformedError(f"expected {3 ** n} rows, got {full.shape[0]}")
    witness = first_violation(full, n)
    if witness is None:
        return Verdict(Status.WADDITIVE)
    return Verdict(Status.VIOLATION, witness)


def random_basis_table(n_in: int, n_out: int, seed: int, cap: int = DEFAULT_CAP,
                       basis_outputs: bool = False) -> BasisTable:
    """Deterministic pseudo-random table; each row uniform over K_n_out.

    With ``basis_outputs`` the rows are drawn from basis words only.
    """
    check_cap(n_in, cap)
    rng = random.Random(seed)
    alphabet = "01" if basis_outputs else "01s"
    rows = ["".join(rng.choice(alphabet) for _ in range(n_out)) for _ in range(2 ** n_in)]
    return BasisTable(n_in, n_out, tuple(rows))


def _build_tables() -> dict[GateKind, np.ndarray]:
    full = {}
    for g in GateKind:
        t = BasisTable.of_gate(g)
        arr = extension_array(t)
        published = np.array([word(r).symbols for r in PUBLISHED_TABLES[g]], dtype=np.uint8)
        if arr.shape != published.shape or not np.array_equal(arr, published):
            raise RuntimeError(f"extension of {g} disagrees with its published table")
        arr.setflags(write=False)
        full[g] = arr
    return full


FULL_TABLES = _build_tables()

# Dense lookup used by the sweep kernels: TABLES[code, input index, output position].
TABLES = np.zeros((len(GateKind), 27, 2), dtype=np.uint8)
ARITY_IN = np.array([g.arity_in for g in GateKind], dtype=np.int32)
ARITY_OUT = np.array([g.arity_out for g in GateKind], dtype=np.int32)
for _g, _arr in FULL_TABLES.items():
    TABLES[_g.code, : _arr.shape[0], : _arr.shape[1]] = _arr
TABLES.setflags(write=False)


def gate_apply(g: GateKind, w: SbitWord | str) -> SbitWord:
    w = word(w)
    if len(w) != g.arity_in:
        raise MalformedError(f"{g} takes {g.arity_in} sbits, got {len(w)}")
    return row_to_word(FULL_TABLES[g][w.index()])


def full_table_of_gate(g: GateKind) -> FullTable:
    return FullTable(g.arity_in, g.arity_out, FULL_TABLES[g])
