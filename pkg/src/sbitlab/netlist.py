"""Netlist IR shared by ternary, classical and dual-rail circuits.

Text format::

    inputs x1 x2 x3
    a, b = FANOUT x3        # '#' starts a comment
    y = AND a 0             # 0 / 1 are constant operands
    outputs y

Nodes must appear in topological order: every operand is a circuit input,
an output of an earlier node, or a constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Iterable, Union

import numpy as np

from . import kernels
from .core import Sbit, SbitWord, all_words_array, row_to_word, word
from .errors import MalformedError, StructuralError
from .gates import ARITY_IN, ARITY_OUT, DEFAULT_CAP, TABLES, GateKind, check_cap, gate_apply

WIRE_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
CONSTANTS = {"0": Sbit.ZERO, "1": Sbit.ONE}

Operand = Union[str, Sbit]


@dataclass(frozen=True)
class Node:
    gate: GateKind
    inputs: tuple[Operand, ...]
    outputs: tuple[str, ...]

    def __str__(self) -> str:
        ins = " ".join(_fmt_operand(x) for x in self.inputs)
        return f"{', '.join(self.outputs)} = {self.gate} {ins}"


def _fmt_operand(x: Operand) -> str:
    return str(x) if isinstance(x, Sbit) else x


def _parse_operand(tok: str, line_no: int) -> Operand:
    if tok in CONSTANTS:
        return CONSTANTS[tok]
    if not WIRE_RE.fullmatch(tok):
        raise MalformedError(f"line {line_no}: bad wire name {tok!r}")
    return tok


@dataclass(frozen=True)
class Program:
    """Flat integer form of a netlist consumed by the sweep kernels."""

    n_wires: int
    codes: np.ndarray
    ins: np.ndarray
    outs: np.ndarray
    slots: dict
    output_slots: np.ndarray
    tables: np.ndarray = TABLES
    arity_in: np.ndarray = ARITY_IN
    arity_out: np.ndarray = ARITY_OUT


@dataclass(frozen=True)
class Netlist:
    """A combinational DAG of gates over named wires.

    Subclasses restrict the gate set and the wire-use discipline.  With
    ``EXACT_USE`` every wire feeds exactly one gate input or circuit output;
    otherwise a wire may be used at most once.
    """

    inputs: tuple[str, ...]
    nodes: tuple[Node, ...]
    outputs: tuple[Operand, ...]

    GATES: ClassVar[frozenset] = frozenset(GateKind)
    EXACT_USE: ClassVar[bool] = True
    KIND: ClassVar[str] = "netlist"

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        self._validate()

    def _validate(self) -> None:
        uses: dict[str, int] = {}
        for x in self.inputs:
            if not isinstance(x, str) or not WIRE_RE.fullmatch(x):
                raise StructuralError(f"bad input wire name {x!r}")
            if x in uses:
                raise StructuralError(f"input {x} declared twice")
            uses[x] = 0
        for k, node in enumerate(self.nodes):
            g = node.gate
            if g not in self.GATES:
                raise StructuralError(f"gate {g} not allowed in a {self.KIND} circuit", k)
            if len(node.inputs) != g.arity_in or len(node.outputs) != g.arity_out:
                raise StructuralError(
                    f"{g} takes {g.arity_in} input(s) and drives {g.arity_out} output(s)", k
                )
            for x in node.inputs:
                if isinstance(x, Sbit):
                    continue
                if x not in uses:
                    raise StructuralError(f"wire {x} is used before it is driven (cycle or dangling wire)", k)
                if uses[x]:
                    raise StructuralError(f"wire {x} is read a second time; duplicate it with FANOUT", k)
                uses[x] += 1
            for y in node.outputs:
                if not WIRE_RE.fullmatch(y):
                    raise StructuralError(f"bad wire name {y!r}", k)
                if y in uses:
                    raise StructuralError(f"wire {y} has more than one driver", k)
                uses[y] = 0
        for x in self.outputs:
            if isinstance(x, Sbit):
                continue
            if x not in uses:
                raise StructuralError(f"output {x} is never driven")
            uses[x] += 1
        for x, count in uses.items():
            if count > 1:
                raise StructuralError(f"wire {x} is used {count} times; duplicate it with FANOUT")
            if count == 0 and self.EXACT_USE:
                raise StructuralError(f"wire {x} is never used")

    # -- size ---------------------------------------------------------------

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def n_outputs(self) -> int:
        return len(self.outputs)

    def gate_count(self) -> int:
        return len(self.nodes)

    def count(self, gate: GateKind) -> int:
        return sum(1 for n in self.nodes if n.gate is gate)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, w: SbitWord | str) -> SbitWord:
        """Gate-local evaluation of one input word, node by node."""
        w = word(w)
        if len(w) != self.n_inputs:
            raise MalformedError(f"circuit has {self.n_inputs} inputs, word has {len(w)} sbits")
        values: dict[str, Sbit] = dict(zip(self.inputs, w))

        def get(x):
            return x if isinstance(x, Sbit) else values[x]

        for node in self.nodes:
            out = gate_apply(node.gate, SbitWord(tuple(get(x) for x in node.inputs)))
            values.update(zip(node.outputs, out))
        return SbitWord(tuple(get(x) for x in self.outputs))

    __call__ = evaluate

    @cached_property
    def program(self) -> Program:
        slots: dict[str, int] = {}
        const_slot = {Sbit.ZERO: 0, Sbit.ONE: 1, Sbit.S: 2}
        for x in self.inputs:
            slots[x] = len(slots) + 3
        for node in self.nodes:
            for y in node.outputs:
                slots[y] = len(slots) + 3

        def slot(x):
            return const_slot[x] if isinstance(x, Sbit) else slots[x]

        K = len(self.nodes)
        codes = np.array([n.gate.code for n in self.nodes], dtype=np.int32)
        ins = np.zeros((K, 3), dtype=np.int32)
        outs = np.zeros((K, 2), dtype=np.int32)
        for k, node in enumerate(self.nodes):
            for j, x in enumerate(node.inputs):
                ins[k, j] = slot(x)
            for j, y in enumerate(node.outputs):
                outs[k, j] = slots[y]
        out_slots = np.array([slot(x) for x in self.outputs], dtype=np.int32)
        return Program(len(slots) + 3, codes, ins, outs, slots, out_slots)

    def wire_values(self, inputs: np.ndarray) -> np.ndarray:
        """Values of every wire slot for each input row (see :class:`Program`)."""
        inputs = np.asarray(inputs, dtype=np.uint8)
        if inputs.ndim != 2 or inputs.shape[1] != self.n_inputs:
            raise MalformedError(f"expected input rows of width {self.n_inputs}")
        return kernels.run_netlist(inputs, self.program)

    def sweep(self, inputs: np.ndarray) -> np.ndarray:
        """Outputs for each input row, shape ``(N, n_outputs)``."""
        return self.wire_values(inputs)[:, self.program.output_slots]

    def full_array(self, cap: int | None = DEFAULT_CAP) -> np.ndarray:
        """Gate-local outputs on all 3^n inputs in lexicographic order."""
        check_cap(self.n_inputs, cap)
        return self.sweep(all_words_array(self.n_inputs))

    # -- text format --------------------------------------------------------

    def header_lines(self) -> list[str]:
        return []

    def dumps(self) -> str:
        lines = self.header_lines()
        lines.append("inputs " + " ".join(self.inputs))
        lines += [str(n) for n in self.nodes]
        lines.append("outputs " + " ".join(_fmt_operand(x) for x in self.outputs))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str):
        inputs, nodes, outputs = parse_netlist_text(text)
        return cls(inputs, nodes, outputs)

    # -- wiring helpers -----------------------------------------------------

    def renamed(self, prefix: str):
        """Copy with every wire name prefixed; handy for composing circuits."""
        def r(x):
            return x if isinstance(x, Sbit) else prefix + x

        nodes = [Node(n.gate, tuple(map(r, n.inputs)), tuple(map(r, n.outputs))) for n in self.nodes]
        return type(self)(tuple(map(r, self.inputs)), tuple(nodes), tuple(map(r, self.outputs)))

    def output_words(self, arr: np.ndarray) -> list[SbitWord]:
        return [row_to_word(r) for r in arr]


def parse_netlist_text(text: str) -> tuple[list[str], list[Node], list[Operand]]:
    inputs = None
    outputs = None
    nodes: list[Node] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if outputs is not None:
            raise MalformedError(f"line {line_no}: content after the outputs line")
        head, _, rest = line.partition(" ")
        if head == "inputs" and "=" not in line:
            if inputs is not None or nodes:
                raise MalformedError(f"line {line_no}: the inputs line must come first, once")
            inputs = rest.split()
            for x in inputs:
                _check_wire(x, line_no)
            continue
        if inputs is None:
            raise MalformedError(f"line {line_no}: netlist must start with an inputs line")
        if head == "outputs" and "=" not in line:
            outputs = [_parse_operand(t, line_no) for t in rest.split()]
            continue
        lhs, eq, rhs = line.partition("=")
        if not eq:
            raise MalformedError(f"line {line_no}: expected 'out[,out] = GATE in...'")
        outs = [t.strip() for t in lhs.split(",")]
        for y in outs:
            _check_wire(y, line_no)
        toks = rhs.split()
        if not toks:
            raise MalformedError(f"line {line_no}: missing gate name")
        gate = GateKind.parse(toks[0])
        nodes.append(Node(gate, tuple(_parse_operand(t, line_no) for t in toks[1:]), tuple(outs)))
    if inputs is None or outputs is None:
        raise MalformedError("netlist needs both an inputs line and an outputs line")
    return inputs, nodes, outputs


def _check_wire(x: str, line_no: int) -> None:
    if not WIRE_RE.fullmatch(x):
        raise MalformedError(f"line {line_no}: bad wire name {x!r}")


class WireNamer:
    """Fresh wire names ``<prefix><k>`` that avoid a given set of names."""

    def __init__(self, prefix: str = "w", taken: Iterable[str] = ()):
        self.prefix = prefix
        self.k = 0
        self.taken = set(taken)

    def __call__(self) -> str:
        while True:
            name = f"{self.prefix}{self.k}"
            self.k += 1
            if name not in self.taken:
                self.taken.add(name)
                return name
