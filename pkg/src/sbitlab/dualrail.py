"""Dual-rail compilation of ternary circuits to pure Boolean netlists.

Each sbit travels on a (zero rail, one rail) pair: ``0 -> 10``, ``1 -> 01``,
``s -> 11``; ``00`` never encodes anything.  A rail is 1 when the sbit can
take that basis value, so the sbit sum is rail-wise OR.

Templates, for input pairs a = (a1, a2), b = (b1, b2), control c = (c1, c2)::

    NOT     swap the rails (wiring only)
    OR      (a1 AND b1, a2 OR b2)
    AND     (a1 OR b1,  a2 AND b2)
    XOR     ((a1 AND b1) OR (a2 AND b2), (a2 AND b1) OR (a1 AND b2))
    T       ((c1 AND a1) OR (c2 AND b1), (c1 AND a2) OR (c2 AND b2))
    I       wiring;  FANOUT  one FANOUT per rail
    C0 (1,0)   C1 (0,1)   H (1,1)
    S0 (1,p)   S0BAR (1,q)   S1 (p,1)   S1BAR (q,1)    for input pair (p, q)

Rails read twice by XOR and T are duplicated with explicit FANOUTs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import ONE, ZERO, Sbit, SbitWord, all_words_array, word
from .errors import InvalidEncodingError, MalformedError
from .gates import DEFAULT_CAP, GateKind, check_cap
from .netlist import Netlist, Node, Operand, WireNamer, parse_netlist_text, _fmt_operand

G = GateKind

_RAILS = {Sbit.ZERO: (1, 0), Sbit.ONE: (0, 1), Sbit.S: (1, 1)}


def encode(w: SbitWord | str) -> tuple[int, ...]:
    out: list[int] = []
    for x in word(w):
        out.extend(_RAILS[x])
    return tuple(out)


def parse_rails(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        if not text or set(text) - {"0", "1"}:
            raise MalformedError(f"rail vector must be a nonempty bitstring, got {text!r}")
        return tuple(int(ch) for ch in text)
    return tuple(int(b) for b in text)


def rails_str(rails: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in rails)


def decode(rails: str | Sequence[int]) -> SbitWord:
    bits = parse_rails(rails)
    if len(bits) % 2:
        raise MalformedError("a rail vector has even length")
    out = []
    for i in range(0, len(bits), 2):
        z, o = bits[i], bits[i + 1]
        if not (z or o):
            raise InvalidEncodingError(i // 2 + 1)
        out.append(Sbit.S if z and o else (ONE if o else ZERO))
    return SbitWord(tuple(out))


def encode_array(words: np.ndarray) -> np.ndarray:
    words = np.asarray(words, dtype=np.uint8)
    rails = np.empty((words.shape[0], 2 * words.shape[1]), dtype=np.uint8)
    rails[:, 0::2] = words != 1
    rails[:, 1::2] = words != 0
    return rails


def decode_array(rails: np.ndarray) -> np.ndarray:
    rails = np.asarray(rails, dtype=np.uint8)
    z, o = rails[:, 0::2], rails[:, 1::2]
    bad = np.argwhere((z == 0) & (o == 0))
    if bad.size:
        raise InvalidEncodingError(int(bad[0, 1]) + 1)
    return (o + (z & o)).astype(np.uint8)


@dataclass(frozen=True)
class DualRailCircuit(Netlist):
    """Boolean netlist on rail pairs.

    ``pairs`` names the rail pair of every ternary wire of the source
    circuit, so simulations can watch for the forbidden ``00`` state.
    """

    pairs: tuple[tuple[str, Operand, Operand], ...] = ()

    GATES = frozenset({G.AND, G.OR, G.NOT, G.FANOUT})
    EXACT_USE = False
    KIND = "dual-rail"

    @property
    def n_sbits_in(self) -> int:
        return self.n_inputs // 2

    def header_lines(self) -> list[str]:
        lines = []
        for i in range(self.n_sbits_in):
            lines.append(f"# pair {i + 1} = {self.inputs[2 * i]} {self.inputs[2 * i + 1]}")
        for name, z, o in self.pairs:
            lines.append(f"# wire {name} = {_fmt_operand(z)} {_fmt_operand(o)}")
        return lines

    @classmethod
    def parse(cls, text: str) -> "DualRailCircuit":
        inputs, nodes, outputs = parse_netlist_text(text)
        consts = {"0": ZERO, "1": ONE}
        pairs = []
        for line in text.splitlines():
            parts = line.strip().lstrip("#").split()
            if len(parts) == 5 and parts[0] == "wire" and parts[2] == "=":
                pairs.append((parts[1], consts.get(parts[3], parts[3]), consts.get(parts[4], parts[4])))
        if len(inputs) % 2:
            raise MalformedError("a dual-rail circuit has an even number of input rails")
        return cls(tuple(inputs), tuple(nodes), tuple(outputs), tuple(pairs))


class _Compiler:
    def __init__(self, taken):
        self.nodes: list[Node] = []
        self.fresh = WireNamer("r", taken)

    def gate(self, g: GateKind, *ins) -> Operand | tuple:
        outs = tuple(self.fresh() for _ in range(g.arity_out))
        self.nodes.append(Node(g, tuple(ins), outs))
        return outs[0] if len(outs) == 1 else outs

    def dup(self, x: Operand) -> tuple[Operand, Operand]:
        if isinstance(x, Sbit):
            return x, x
        return self.gate(G.FANOUT, x)

    def mux(self, c1, c2, a, b):
        # (c1 AND a) OR (c2 AND b)
        return self.gate(G.OR, self.gate(G.AND, c1, a), self.gate(G.AND, c2, b))

    def template(self, g: GateKind, ins: list[tuple]) -> list[tuple]:
        if g is G.I:
            return [ins[0]]
        if g is G.NOT:
            p, q = ins[0]
            return [(q, p)]
        if g in (G.C0, G.C1, G.H):
            return [{G.C0: (ONE, ZERO), G.C1: (ZERO, ONE), G.H: (ONE, ONE)}[g]]
        if g in (G.S0, G.S0BAR, G.S1, G.S1BAR):
            p, q = ins[0]
            return [{G.S0: (ONE, p), G.S0BAR: (ONE, q), G.S1: (p, ONE), G.S1BAR: (q, ONE)}[g]]
        if g is G.FANOUT:
            p, q = ins[0]
            p1, p2 = self.dup(p)
            q1, q2 = self.dup(q)
            return [(p1, q1), (p2, q2)]
        if g in (G.AND, G.OR):
            (a1, a2), (b1, b2) = ins
            inner, outer = (G.AND, G.OR) if g is G.AND else (G.OR, G.AND)
            return [(self.gate(outer, a1, b1), self.gate(inner, a2, b2))]
        if g is G.XOR:
            (a1, a2), (b1, b2) = ins
            a1x, a1y = self.dup(a1)
            a2x, a2y = self.dup(a2)
            b1x, b1y = self.dup(b1)
            b2x, b2y = self.dup(b2)
            return [(self.mux(a1x, a2x, b1x, b2x), self.mux(a2y, a1y, b1y, b2y))]
        if g is G.T:
            (c1, c2), (a1, a2), (b1, b2) = ins
            c1x, c1y = self.dup(c1)
            c2x, c2y = self.dup(c2)
            return [(self.mux(c1x, c2x, a1, b1), self.mux(c1y, c2y, a2, b2))]
        raise MalformedError(f"no dual-rail template for {g}")


def compile_dualrail(c: Netlist) -> DualRailCircuit:
    """Compile a ternary circuit gate by gate into a Boolean netlist on rail pairs."""
    taken = set()
    rails: dict[str, tuple] = {}
    inputs = []
    for x in c.inputs:
        pair = (f"{x}_z", f"{x}_o")
        rails[x] = pair
        inputs.extend(pair)
        taken.update(pair)
    comp = _Compiler(taken)

    def get(x: Operand) -> tuple:
        return _RAILS_CONST[x] if isinstance(x, Sbit) else rails[x]

    for node in c.nodes:
        outs = comp.template(node.gate, [get(x) for x in node.inputs])
        for y, pair in zip(node.outputs, outs):
            rails[y] = pair
    outputs = [r for x in c.outputs for r in get(x)]
    pairs = tuple((name, z, o) for name, (z, o) in rails.items())
    return DualRailCircuit(tuple(inputs), tuple(comp.nodes), tuple(outputs), pairs)


_RAILS_CONST = {s: (Sbit(z), Sbit(o)) for s, (z, o) in _RAILS.items()}


def eval_dualrail(d: DualRailCircuit, rails: str | Sequence[int]) -> tuple[int, ...]:
    """Boolean simulation of ``d`` on one valid rail vector."""
    bits = parse_rails(rails)
    if len(bits) != d.n_inputs:
        raise MalformedError(f"circuit has {d.n_inputs} input rails, got {len(bits)}")
    decode(bits)  # rejects (0,0) pairs
    out = d.sweep(np.array([bits], dtype=np.uint8))[0]
    return tuple(int(b) for b in out)


def co_simulate(c: Netlist, d: DualRailCircuit | None = None,
                cap: int | None = DEFAULT_CAP) -> tuple[bool, bool]:
    """Exhaustively compare a ternary circuit with its dual-rail compilation.

    Returns ``(equivalent, valid)``: decoded dual-rail outputs equal gate-local
    outputs on all 3^n inputs, and no rail pair of any ternary wire ever holds
    ``00``.
    """
    check_cap(c.n_inputs, cap)
    d = d or compile_dualrail(c)
    words = all_words_array(c.n_inputs)
    values = d.wire_values(encode_array(words))
    slots = d.program.slots

    def column(x):
        if isinstance(x, Sbit):
            return np.full(values.shape[0], int(x), dtype=np.uint8)
        return values[:, slots[x]]

    valid = all(bool(np.all(column(z) | column(o))) for _, z, o in d.pairs)
    if not valid:
        return False, False
    expected = c.sweep(words)
    got = decode_array(values[:, d.program.output_slots])
    return bool(np.array_equal(got, expected)), True


def template_sizes() -> dict[GateKind, int]:
    """Boolean gate count of each ternary gate's template."""
    return dict(_template_sizes())


@lru_cache(maxsize=1)
def _template_sizes():
    from .circuit import single_gate_circuit

    return tuple((g, compile_dualrail(single_gate_circuit(g)).gate_count()) for g in GateKind)


def overhead_constant() -> int:
    """The k with Boolean gate count <= k * ternary gate count for every circuit."""
    return max(n for _, n in _template_sizes())
