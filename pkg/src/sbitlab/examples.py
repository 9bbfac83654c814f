"""Small worked circuits used by the tests, the CLI ``gen`` command and the README."""

from __future__ import annotations

from .circuit import TernaryCircuit
from .convert import ClassicalCircuit
from .gates import GateKind
from .netlist import Node

G = GateKind


def convertible_classical() -> ClassicalCircuit:
    """``(x1 OR NOT x2) AND (x3 AND NOT x3)`` with the x3 copy made by FANOUT."""
    return ClassicalCircuit(
        ("x1", "x2", "x3"),
        (
            Node(G.NOT, ("x2",), ("n2",)),
            Node(G.OR, ("x1", "n2"), ("o",)),
            Node(G.FANOUT, ("x3",), ("a", "b")),
            Node(G.NOT, ("b",), ("nb",)),
            Node(G.AND, ("a", "nb"), ("z",)),
            Node(G.AND, ("o", "z"), ("y",)),
        ),
        ("y",),
    )


def convertible_wadd() -> TernaryCircuit:
    """The w-additive counterpart of :func:`convertible_classical`."""
    return TernaryCircuit(
        ("x1", "x2", "x3"),
        (
            Node(G.NOT, ("x2",), ("n2",)),
            Node(G.OR, ("x1", "n2"), ("o",)),
            Node(G.C0, ("x3",), ("z",)),
            Node(G.AND, ("o", "z"), ("y",)),
        ),
        ("y",),
    )


def one_bit_constant_classical(value: int) -> ClassicalCircuit:
    """``x AND NOT x`` (value 0) or ``x OR NOT x`` (value 1)."""
    join = G.AND if value == 0 else G.OR
    return ClassicalCircuit(
        ("x",),
        (
            Node(G.FANOUT, ("x",), ("a", "b")),
            Node(G.NOT, ("b",), ("nb",)),
            Node(join, ("a", "nb"), ("y",)),
        ),
        ("y",),
    )


def one_bit_balanced_classical(negate: bool) -> ClassicalCircuit:
    if negate:
        return ClassicalCircuit(("x",), (Node(G.NOT, ("x",), ("y",)),), ("y",))
    return ClassicalCircuit(("x",), (), ("x",))


def one_bit_wadd(kind: str) -> TernaryCircuit:
    """The four one-input oracles: ``zero``, ``one``, ``identity``, ``negation``."""
    if kind == "identity":
        return TernaryCircuit(("x",), (), ("x",))
    gate = {"zero": G.C0, "one": G.C1, "negation": G.NOT}[kind]
    return TernaryCircuit(("x",), (Node(gate, ("x",), ("y",)),), ("y",))


def self_contradiction_ternary() -> TernaryCircuit:
    """``x AND NOT x`` built with a FANOUT and read gate-locally; not w-additive."""
    return TernaryCircuit(
        ("x",),
        (
            Node(G.FANOUT, ("x",), ("a", "b")),
            Node(G.NOT, ("b",), ("nb",)),
            Node(G.AND, ("a", "nb"), ("y",)),
        ),
        ("y",),
    )


def shared_fanout_classical() -> ClassicalCircuit:
    """A FANOUT whose copies go straight to two circuit outputs."""
    return ClassicalCircuit(("x",), (Node(G.FANOUT, ("x",), ("a", "b")),), ("a", "b"))
