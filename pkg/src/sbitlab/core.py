"""Sbit values, words, the sbit sum and maximal-set machinery.

Symbols are stored as small integers (0, 1, 2 for ``0``, ``1``, ``s``), so the
natural integer order is also the lexicographic order ``0 < 1 < s`` used
for every enumeration in the package.  Words are rendered with the leftmost
symbol as sbit 1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache, reduce
from typing import Iterable, Iterator

import numpy as np

from .errors import MalformedError

WORD_RE = re.compile(r"[01s]+")


class Sbit(IntEnum):
    ZERO = 0
    ONE = 1
    S = 2

    def __str__(self) -> str:
        return "01s"[self]

    @property
    def is_basis(self) -> bool:
        return self is not Sbit.S

    @classmethod
    def parse(cls, ch: str) -> "Sbit":
        try:
            return cls("01s".index(ch))
        except ValueError:
            raise MalformedError(f"not an sbit symbol: {ch!r}") from None


ZERO, ONE, S = Sbit.ZERO, Sbit.ONE, Sbit.S


def sbit_add(a: Sbit, b: Sbit) -> Sbit:
    """The sbit sum: equal symbols are kept, anything else collapses to ``s``."""
    return Sbit(a) if a == b else S


@dataclass(frozen=True, order=True)
class SbitWord:
    """An immutable word of ``n >= 1`` sbits; an element of K_n."""

    symbols: tuple[Sbit, ...]

    def __post_init__(self):
        if not self.symbols:
            raise MalformedError("a word needs at least one sbit")
        object.__setattr__(self, "symbols", tuple(Sbit(x) for x in self.symbols))

    @classmethod
    def parse(cls, text: str) -> "SbitWord":
        if not WORD_RE.fullmatch(text):
            raise MalformedError(f"word literal must match [01s]+, got {text!r}")
        return cls(tuple(Sbit.parse(ch) for ch in text))

    @classmethod
    def from_index(cls, index: int, n: int) -> "SbitWord":
        """The ``index``-th word of K_n in lexicographic order."""
        digits = []
        for _ in range(n):
            index, d = divmod(index, 3)
            digits.append(d)
        return cls(tuple(reversed(digits)))

    @classmethod
    def from_bits(cls, bits: int, n: int) -> "SbitWord":
        """The ``bits``-th basis word of K_n in lexicographic order."""
        return cls(tuple((bits >> (n - 1 - i)) & 1 for i in range(n)))

    def __str__(self) -> str:
        return "".join("01s"[x] for x in self.symbols)

    def __repr__(self) -> str:
        return f"SbitWord('{self}')"

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Sbit]:
        return iter(self.symbols)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return SbitWord(self.symbols[i])
        return self.symbols[i]

    def __add__(self, other: "SbitWord") -> "SbitWord":
        return word_add(self, other)

    def concat(self, other: "SbitWord") -> "SbitWord":
        return SbitWord(self.symbols + other.symbols)

    @property
    def is_basis(self) -> bool:
        return S not in self.symbols

    @property
    def s_count(self) -> int:
        return self.symbols.count(S)

    def index(self) -> int:
        """Position of this word in the lexicographic enumeration of K_n."""
        i = 0
        for x in self.symbols:
            i = 3 * i + x
        return i

    def bits(self) -> int:
        if not self.is_basis:
            raise MalformedError(f"{self} is not a basis word")
        i = 0
        for x in self.symbols:
            i = 2 * i + x
        return i


def word(text: str | SbitWord | Iterable[int]) -> SbitWord:
    """Coerce a literal, word or symbol sequence into an :class:`SbitWord`."""
    if isinstance(text, SbitWord):
        return text
    if isinstance(text, str):
        return SbitWord.parse(text)
    return SbitWord(tuple(text))


def word_add(a: SbitWord, b: SbitWord) -> SbitWord:
    if len(a) != len(b):
        raise MalformedError(f"cannot add words of lengths {len(a)} and {len(b)}")
    return SbitWord(tuple(sbit_add(x, y) for x, y in zip(a, b)))


class BasisWordSet:
    """A nonempty set of equal-length basis words, kept in lexicographic order."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[SbitWord | str]):
        ms = sorted({word(m) for m in members})
        if not ms:
            raise MalformedError("a basis word set must be nonempty")
        n = len(ms[0])
        for m in ms:
            if not m.is_basis:
                raise MalformedError(f"{m} is not a basis word")
            if len(m) != n:
                raise MalformedError("basis word set members differ in length")
        self.members: tuple[SbitWord, ...] = tuple(ms)

    def __iter__(self) -> Iterator[SbitWord]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return word(w) in set(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, BasisWordSet):
            return self.members == other.members
        if isinstance(other, (set, frozenset)):
            return set(self.members) == {word(x) for x in other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __le__(self, other: "BasisWordSet") -> bool:
        return set(self.members) <= set(other.members)

    def __repr__(self) -> str:
        return "BasisWordSet({" + ", ".join(f"'{m}'" for m in self.members) + "})"


def iter_expand(w: SbitWord) -> Iterator[SbitWord]:
    """Basis words of the maximal set of ``w``, Zero before One at each s."""
    choices = [(ZERO, ONE) if x is S else (x,) for x in w]
    for combo in itertools.product(*choices):
        yield SbitWord(combo)


def expand(w: SbitWord | str) -> BasisWordSet:
    """The maximal set: the 2^k basis words that sum to ``w``."""
    return BasisWordSet(iter_expand(word(w)))


def sum_set(words: Iterable[SbitWord | str]) -> SbitWord:
    """Fold :func:`word_add` over a nonempty collection of words.

    The sbit algebra has no neutral element, so an empty collection is an
    error rather than a default value.
    """
    ws = [word(w) for w in words]
    if not ws:
        raise MalformedError("cannot sum an empty set: the sbit sum has no identity")
    return reduce(word_add, ws)


def all_words(n: int) -> Iterator[SbitWord]:
    for combo in itertools.product((ZERO, ONE, S), repeat=n):
        yield SbitWord(combo)


def basis_words(n: int) -> Iterator[SbitWord]:
    for combo in itertools.product((ZERO, ONE), repeat=n):
        yield SbitWord(combo)


# Array forms used by the exhaustive sweeps.  Row i of ``all_words_array(n)``
# is ``SbitWord.from_index(i, n)``.

@lru_cache(maxsize=32)
def all_words_array(n: int) -> np.ndarray:
    grid = np.indices((3,) * n, dtype=np.uint8).reshape(n, -1).T
    grid = np.ascontiguousarray(grid)
    grid.setflags(write=False)
    return grid


@lru_cache(maxsize=32)
def basis_words_array(n: int) -> np.ndarray:
    grid = np.indices((2,) * n, dtype=np.uint8).reshape(n, -1).T
    grid = np.ascontiguousarray(grid)
    grid.setflags(write=False)
    return grid


@lru_cache(maxsize=32)
def basis_positions(n: int) -> np.ndarray:
    """Ternary index of every basis word, in basis (binary) order."""
    weights = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    pos = basis_words_array(n).astype(np.int64) @ weights
    pos.setflags(write=False)
    return pos


def words_to_array(words: Iterable[SbitWord]) -> np.ndarray:
    return np.array([w.symbols for w in words], dtype=np.uint8)


def row_to_word(row) -> SbitWord:
    return SbitWord(tuple(int(x) for x in row))
