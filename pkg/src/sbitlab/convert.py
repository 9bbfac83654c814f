"""Lowering of classical Boolean netlists to w-additive ternary circuits.

AND, OR, NOT and XOR nodes are replaced one-for-one by their w-additive
counterparts.  FANOUT is the only gate that can break weak additivity; two
local FANOUT shapes are known to be safe and are collapsed to constants:

* ``x -> FANOUT -> (a, NOT b) -> AND``  becomes ``C0 x``
* ``x -> FANOUT -> (a, NOT b) -> OR``   becomes ``C1 x``

Any other FANOUT makes the circuit not convertible by these rules.  An
optional fallback tabulates the circuit on all 2^n basis inputs and runs the
universal synthesizer instead, which is exponential and says so.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .circuit import TernaryCircuit, basis_table_of, check_circuit, synthesize
from .core import basis_words_array
from .errors import NotWAdditiveError, StructuralError, VerdictError
from .gates import DEFAULT_CAP, BasisTable, GateKind, check_cap
from .netlist import Netlist, Node

log = logging.getLogger(__name__)

G = GateKind

PATTERNS = {G.AND: ("c0", G.C0), G.OR: ("c1", G.C1)}


class ClassicalCircuit(Netlist):
    """Boolean netlist over AND, OR, NOT, XOR and explicit FANOUT."""

    GATES = frozenset({G.AND, G.OR, G.NOT, G.XOR, G.FANOUT})
    KIND = "classical"


def truth_table(c: Netlist, cap: int | None = DEFAULT_CAP) -> BasisTable:
    """Boolean function of ``c``: its outputs on all 2^n basis inputs."""
    check_cap(c.n_inputs, cap, base=2)
    return BasisTable.from_array(c.sweep(basis_words_array(c.n_inputs)))


class ConvertStatus(Enum):
    CONVERTED = "converted"
    NOT_CONVERTIBLE = "not-convertible"


@dataclass(frozen=True)
class Rewrite:
    pattern: str
    nodes: tuple[int, ...]

    def __str__(self) -> str:
        return f"REWRITE {self.pattern} nodes={','.join(map(str, self.nodes))}"


@dataclass
class ConvertReport:
    status: ConvertStatus
    circuit: TernaryCircuit | None = None
    rewrites: list[Rewrite] = field(default_factory=list)
    substitutions: int = 0
    unmatched: list[int] = field(default_factory=list)
    fallback_used: bool = False
    verified: bool | None = None

    @property
    def converted(self) -> bool:
        return self.status is ConvertStatus.CONVERTED

    def log_lines(self) -> list[str]:
        lines = [str(r) for r in self.rewrites]
        lines.append(f"STATUS {self.status.value}")
        lines.append(f"FALLBACK {'used' if self.fallback_used else 'unused'}")
        return lines


def _consumers(c: Netlist) -> dict[str, int | None]:
    """Map each wire to the index of the node reading it (None for a circuit output)."""
    out: dict[str, int | None] = {}
    for k, node in enumerate(c.nodes):
        for x in node.inputs:
            if isinstance(x, str):
                out[x] = k
    for x in c.outputs:
        if isinstance(x, str):
            out[x] = None
    return out


def _match_fanout(c: Netlist, k: int, readers) -> tuple[int, int] | None:
    """(NOT node, join node) if FANOUT node ``k`` heads a collapsible shape."""
    a, b = c.nodes[k].outputs
    for direct, negated in ((a, b), (b, a)):
        n = readers.get(negated)
        j = readers.get(direct)
        if n is None or j is None:
            continue
        not_node, join = c.nodes[n], c.nodes[j]
        if not_node.gate is not G.NOT or join.gate not in PATTERNS:
            continue
        if readers.get(not_node.outputs[0]) != j:
            continue
        if set(join.inputs) == {direct, not_node.outputs[0]}:
            return n, j
    return None


def match_patterns(c: Netlist) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """Structural pattern phase: matched FANOUTs and the FANOUTs left over."""
    readers = _consumers(c)
    matches: dict[int, tuple[int, int]] = {}
    unmatched: list[int] = []
    claimed: dict[int, int] = {}
    for k, node in enumerate(c.nodes):
        if node.gate is not G.FANOUT:
            continue
        m = _match_fanout(c, k, readers)
        if m is None:
            unmatched.append(k)
            continue
        for idx in m:
            if idx in claimed:
                raise StructuralError(
                    f"node {idx} belongs to the patterns of FANOUT nodes {claimed[idx]} and {k}", idx
                )
            claimed[idx] = k
        matches[k] = m
    return matches, unmatched


def is_convertible_by_rules(c: Netlist) -> tuple[bool, list[int]]:
    _, unmatched = match_patterns(c)
    return not unmatched, unmatched


def convert(c: ClassicalCircuit, allow_fallback: bool = False, verify: bool = True,
            cap: int | None = DEFAULT_CAP) -> ConvertReport:
    """Lower a classical netlist to a w-additive ternary circuit in one pass.

    With ``verify`` (and n within ``cap``) the result is checked against the
    source truth table and for weak additivity; a failure raises.
    """
    matches, unmatched = match_patterns(c)
    if unmatched:
        report = ConvertReport(ConvertStatus.NOT_CONVERTIBLE, unmatched=unmatched)
        if not allow_fallback:
            return report
        check_cap(c.n_inputs, cap, base=2)
        log.warning(
            "FANOUT nodes %s match no rule; tabulating all 2^%d = %d basis inputs and synthesizing",
            unmatched, c.n_inputs, 2 ** c.n_inputs,
        )
        report.circuit = synthesize(truth_table(c, cap=None))
        report.fallback_used = True
    else:
        report = ConvertReport(ConvertStatus.CONVERTED)
        absorbed = {idx for n, j in matches.values() for idx in (n, j)}
        join_of = {j: k for k, (n, j) in matches.items()}
        nodes = []
        for k, node in enumerate(c.nodes):
            if k in matches:
                continue
            if k in join_of:
                f = join_of[k]
                name, gate = PATTERNS[node.gate]
                nodes.append(Node(gate, c.nodes[f].inputs, node.outputs))
                report.rewrites.append(Rewrite(name, (f, matches[f][0], k)))
            elif k not in absorbed:
                nodes.append(Node(node.gate, node.inputs, node.outputs))
                report.substitutions += 1
        report.circuit = TernaryCircuit(c.inputs, tuple(nodes), c.outputs)

    if verify and (cap is None or c.n_inputs <= cap):
        if basis_table_of(report.circuit, cap=None) != truth_table(c, cap=None):
            raise VerdictError("converted circuit does not reproduce the source truth table")
        verdict = check_circuit(report.circuit, cap=None)
        if not verdict.ok:
            raise NotWAdditiveError(verdict)
        report.verified = True
    return report
