"""Query algorithms on w-additive oracles and the circuit families they run on.

``deutsch_classify`` decides constant vs. non-constant with one evaluation
on the all-``s`` word.  ``search`` recovers the marked point of a point
function with one evaluation per bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .circuit import TernaryCircuit, check_circuit
from .core import ONE, S, ZERO, Sbit, SbitWord, word
from .errors import InconsistentOracleError, MalformedError, NotWAdditiveError
from .gates import DEFAULT_CAP, GateKind
from .netlist import Netlist, Node

G = GateKind


class Classification(Enum):
    CONSTANT0 = "CONSTANT0"
    CONSTANT1 = "CONSTANT1"
    NONCONSTANT = "NONCONSTANT"


_CLASSIFY = {ZERO: Classification.CONSTANT0, ONE: Classification.CONSTANT1, S: Classification.NONCONSTANT}


@dataclass(frozen=True)
class DJResult:
    classification: Classification
    queries: int = 1


@dataclass(frozen=True)
class SearchResult:
    found: SbitWord
    queries: int
    per_bit_outputs: tuple[Sbit, ...] = field(default=())


class CountingOracle:
    """Wraps a circuit and counts gate-local evaluations."""

    def __init__(self, circuit: Netlist):
        self.circuit = circuit
        self.queries = 0

    def __call__(self, w: SbitWord) -> SbitWord:
        self.queries += 1
        return self.circuit.evaluate(w)


def _single_output(oracle: Netlist) -> None:
    if oracle.n_outputs != 1:
        raise MalformedError(f"oracle must have exactly one output, has {oracle.n_outputs}")


def deutsch_classify(oracle: Netlist, verify: bool = True, cap: int = DEFAULT_CAP) -> DJResult:
    """Classify the oracle's Boolean function as constant 0, constant 1 or non-constant.

    Preparing n zeros and applying H to each gives the all-``s`` word, whose
    maximal set is every basis word; its image is ``0``/``1`` for constant
    functions and ``s`` otherwise.  With ``verify`` the oracle is first checked
    for weak additivity (skipped when its width exceeds ``cap``).
    """
    _single_output(oracle)
    if verify and oracle.n_inputs <= cap:
        verdict = check_circuit(oracle, cap=cap)
        if not verdict.ok:
            raise NotWAdditiveError(verdict)
    q = CountingOracle(oracle)
    out = q(SbitWord((S,) * oracle.n_inputs))[0]
    return DJResult(_CLASSIFY[out], q.queries)


def probe_word(n: int, j: int) -> SbitWord:
    """All ``s`` except ``0`` at (1-based) position ``j``."""
    return SbitWord(tuple(ZERO if i == j - 1 else S for i in range(n)))


def search(oracle: Netlist, n: int | None = None, verify: bool = True) -> SearchResult:
    """Recover the marked point ``a`` of a point-function oracle with n queries.

    Position j is probed with ``0`` there and ``s`` elsewhere, from j = n down
    to 1.  Output ``s`` means ``a`` lies in the probed half (a_j = 0), ``0``
    means it does not (a_j = 1), and ``1`` means the probe was ``a`` itself,
    which only happens for n = 1 (a_j = 0).  With ``verify`` the result is
    confirmed by one extra basis evaluation, not counted as a query.
    """
    _single_output(oracle)
    n = oracle.n_inputs if n is None else n
    if n != oracle.n_inputs:
        raise MalformedError(f"oracle has {oracle.n_inputs} inputs, asked to search width {n}")
    q = CountingOracle(oracle)
    bits = [ZERO] * n
    outputs = [S] * n
    for j in range(n, 0, -1):
        out = q(probe_word(n, j))[0]
        outputs[j - 1] = out
        bits[j - 1] = ONE if out is ZERO else ZERO
    found = SbitWord(tuple(bits))
    if verify and oracle.evaluate(found)[0] is not ONE:
        raise InconsistentOracleError(
            f"decoded {found} but the oracle gives {oracle.evaluate(found)} there; not a point function"
        )
    return SearchResult(found, q.queries, tuple(outputs))


# -- circuit families -------------------------------------------------------

def _and_chain(nodes: list[Node], wires: list[str], prefix: str = "c") -> str:
    acc = wires[0]
    for i, w in enumerate(wires[1:], 1):
        out = f"{prefix}{i}"
        nodes.append(Node(G.AND, (acc, w), (out,)))
        acc = out
    return acc


def oracle_circuit(a: SbitWord | str) -> TernaryCircuit:
    """Point-function oracle marking ``a``: 2n - 1 gates.

    Input i passes through an identity gate when a_i = 1 and a NOT gate when
    a_i = 0, then all n results are ANDed left to right.
    """
    a = word(a)
    if not a.is_basis:
        raise MalformedError(f"marked element must be a basis word, got {a}")
    xs = [f"x{i + 1}" for i in range(len(a))]
    nodes: list[Node] = []
    gs = []
    for i, (x, bit) in enumerate(zip(xs, a), 1):
        g = f"g{i}"
        nodes.append(Node(G.I if bit is ONE else G.NOT, (x,), (g,)))
        gs.append(g)
    out = _and_chain(nodes, gs)
    return TernaryCircuit(tuple(xs), tuple(nodes), (out,))


def constant_circuit(n: int, value: Sbit | int) -> TernaryCircuit:
    """Constant function on n inputs: C0 (or C1) on each input, ANDed together."""
    value = Sbit(value)
    if n < 1 or value is S:
        raise MalformedError("constant circuits need n >= 1 and a basis value")
    gate = G.C0 if value is ZERO else G.C1
    xs = [f"x{i + 1}" for i in range(n)]
    nodes = [Node(gate, (x,), (f"k{i + 1}",)) for i, x in enumerate(xs)]
    out = _and_chain(nodes, [f"k{i + 1}" for i in range(n)])
    return TernaryCircuit(tuple(xs), tuple(nodes), (out,))


def projection_circuit(n: int, j: int) -> TernaryCircuit:
    """The projection onto input j, written as ``x_j OR (C0 x_i AND ...)`` over i != j."""
    if not 1 <= j <= n:
        raise MalformedError(f"projection index {j} outside 1..{n}")
    xs = [f"x{i + 1}" for i in range(n)]
    if n == 1:
        return TernaryCircuit(tuple(xs), (), (xs[0],))
    nodes: list[Node] = []
    zeros = []
    for i, x in enumerate(xs, 1):
        if i != j:
            nodes.append(Node(G.C0, (x,), (f"k{i}",)))
            zeros.append(f"k{i}")
    rest = _and_chain(nodes, zeros)
    nodes.append(Node(G.OR, (xs[j - 1], rest), ("y",)))
    return TernaryCircuit(tuple(xs), tuple(nodes), ("y",))
