"""Ternary circuits: evaluation, circuit-level w-additivity checks and synthesis."""

from __future__ import annotations

from .core import Sbit, SbitWord, basis_words_array
from .gates import (
    DEFAULT_CAP,
    BasisTable,
    GateKind,
    Status,
    Verdict,
    check_cap,
    first_violation,
)
from .netlist import Netlist, Node, WireNamer

G = GateKind


class TernaryCircuit(Netlist):
    """A netlist over the full w-additive gate set with single-use wires."""

    KIND = "ternary"


def evaluate(c: Netlist, w: SbitWord | str) -> SbitWord:
    """Gate-local evaluation: propagate ternary values through ``c`` in order."""
    return c.evaluate(w)


def gate_count(c: Netlist) -> int:
    return c.gate_count()


def basis_table_of(c: Netlist, cap: int | None = DEFAULT_CAP) -> BasisTable:
    """Restriction of ``c`` to the 2^n basis words."""
    check_cap(c.n_inputs, cap, base=2)
    return BasisTable.from_array(c.sweep(basis_words_array(c.n_inputs)))


def check_circuit(c: Netlist, cap: int | None = DEFAULT_CAP) -> Verdict:
    """Compare gate-local evaluation with the extension of the circuit's basis table.

    All 3^n inputs are swept; the circuit is w-additive iff they agree
    everywhere.  The witness of a violation is the least disagreeing word.
    """
    full = c.full_array(cap)
    witness = first_violation(full, c.n_inputs)
    if witness is None:
        return Verdict(Status.WADDITIVE, gate_count=c.gate_count())
    return Verdict(Status.VIOLATION, witness, gate_count=c.gate_count())


# -- composition ------------------------------------------------------------

def compose_and(c1: Netlist, c2: Netlist) -> TernaryCircuit:
    """AND of two single-output circuits on disjoint input wires."""
    a, b = c1.renamed("l_"), c2.renamed("r_")
    nodes = a.nodes + b.nodes + (Node(G.AND, (a.outputs[0], b.outputs[0]), ("y",)),)
    return TernaryCircuit(a.inputs + b.inputs, nodes, ("y",))


def compose_not(c1: Netlist) -> TernaryCircuit:
    a = c1.renamed("u_")
    return TernaryCircuit(a.inputs, a.nodes + (Node(G.NOT, (a.outputs[0],), ("y",)),), ("y",))


# -- synthesis --------------------------------------------------------------

# One-input tables keyed by their two basis outputs.
NAMED_ONE_SBIT = {
    ("0", "1"): G.I,
    ("1", "0"): G.NOT,
    ("s", "s"): G.H,
    ("0", "0"): G.C0,
    ("1", "1"): G.C1,
    ("s", "0"): G.S0,
    ("0", "s"): G.S0BAR,
    ("s", "1"): G.S1,
    ("1", "s"): G.S1BAR,
}

# The same nine tables over {NOT, AND, OR, S0} with constant operands.
# Each recipe is a sequence of steps applied to the running wire;
# ("AND", Sbit.ZERO) means AND(wire, constant 0).
PRIMITIVE_RECIPES = {
    G.I: (),
    G.NOT: ("NOT",),
    G.C0: (("AND", Sbit.ZERO),),
    G.C1: (("OR", Sbit.ONE),),
    G.S0: ("S0",),
    G.S0BAR: ("NOT", "S0"),
    G.S1: ("S0", "NOT"),
    G.S1BAR: ("NOT", "S0", "NOT"),
    G.H: ("S0", "NOT", "NOT", "S0", "NOT"),
}


class _Builder:
    def __init__(self, primitive: bool):
        self.primitive = primitive
        self.nodes: list[Node] = []
        self.fresh = WireNamer("w")

    def emit(self, gate: GateKind, *inputs) -> tuple[str, ...]:
        outs = tuple(self.fresh() for _ in range(gate.arity_out))
        self.nodes.append(Node(gate, tuple(inputs), outs))
        return outs

    def one_sbit(self, t: BasisTable, x: str) -> str:
        key = tuple(str(r) for r in t.rows)
        named = NAMED_ONE_SBIT[key]
        if not self.primitive:
            return self.emit(named, x)[0]
        for step in PRIMITIVE_RECIPES[named]:
            if isinstance(step, tuple):
                x = self.emit(G[step[0]], x, step[1])[0]
            else:
                x = self.emit(G[step], x)[0]
        return x

    def build(self, t: BasisTable, xs: list[str]) -> str:
        """Wire computing the single-output table ``t`` on input wires ``xs``."""
        if t.n_in == 1:
            return self.one_sbit(t, xs[0])
        left, right = [], []
        for x in xs[1:]:
            a, b = self.emit(G.FANOUT, x)
            left.append(a)
            right.append(b)
        g0 = self.build(t.cofactor(0), left)
        g1 = self.build(t.cofactor(1), right)
        # control 0 selects the first target, 1 the second, s their sum
        return self.emit(G.T, xs[0], g0, g1)[0]

    def copies(self, x: str, k: int) -> list[str]:
        out = []
        while k > 1:
            a, x = self.emit(G.FANOUT, x)
            out.append(a)
            k -= 1
        out.append(x)
        return out


def synthesize(t: BasisTable, primitive: bool = False) -> TernaryCircuit:
    """Build a w-additive circuit whose basis table is ``t``.

    The first input controls a T gate choosing between sub-circuits for the
    two cofactors, each fed by FANOUT copies of the remaining inputs; one-input
    tables map to a named gate, or with ``primitive`` to a composition over
    NOT, AND, OR and S0.  Several outputs are synthesized independently on
    FANOUT copies of the inputs.
    """
    b = _Builder(primitive)
    xs = [f"x{i + 1}" for i in range(t.n_in)]
    b.fresh.taken.update(xs)
    if t.n_out == 1:
        outs = [b.build(t, xs)]
    else:
        per_input = [b.copies(x, t.n_out) for x in xs]
        outs = [b.build(t.output(j), [cs[j] for cs in per_input]) for j in range(t.n_out)]
    return TernaryCircuit(tuple(xs), tuple(b.nodes), tuple(outs))


def synthesized_gate_count(n: int) -> int:
    """Gate count of a named-mode synthesized single-output circuit on n inputs."""
    if n == 1:
        return 1
    return 2 * synthesized_gate_count(n - 1) + n


def wire_circuit(n: int = 1) -> TernaryCircuit:
    """Pass-through circuit with no gates."""
    xs = tuple(f"x{i + 1}" for i in range(n))
    return TernaryCircuit(xs, (), xs)


def single_gate_circuit(g: GateKind) -> TernaryCircuit:
    xs = tuple(f"x{i + 1}" for i in range(g.arity_in))
    ys = tuple(f"y{j + 1}" for j in range(g.arity_out))
    return TernaryCircuit(xs, (Node(g, xs, ys),), ys)
