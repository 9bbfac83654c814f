import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sbitlab import BasisTable, GateKind, Status, extend, gate_apply, word
from sbitlab.circuit import (
    NAMED_ONE_SBIT, TernaryCircuit, basis_table_of, check_circuit, compose_and, compose_not,
    single_gate_circuit, synthesize, synthesized_gate_count, wire_circuit,
)
from sbitlab.core import all_words
from sbitlab.errors import CapExceededError
from sbitlab.examples import convertible_wadd, self_contradiction_ternary
from sbitlab.gates import extension_array, random_basis_table

G = GateKind


def _ext_circuit(n, seed):
    return synthesize(random_basis_table(n, 1, seed))


@pytest.mark.parametrize("g", list(GateKind))
def test_single_gates_are_wadditive(g):
    v = check_circuit(single_gate_circuit(g))
    assert v.ok and v.gate_count == 1


def test_self_contradiction_witness():
    v = check_circuit(self_contradiction_ternary())
    assert v.status is Status.VIOLATION
    assert str(v.witness) == "s"
    assert v.gate_count == 3


def test_convertible_wadd_example():
    c = convertible_wadd()
    assert check_circuit(c).ok
    assert c.gate_count() == 4


def test_basis_table_of():
    c = single_gate_circuit(G.XOR)
    assert basis_table_of(c) == BasisTable.of_gate(G.XOR)
    with pytest.raises(CapExceededError):
        check_circuit(wire_circuit(3), cap=2)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 3), m=st.integers(1, 3), s1=st.integers(0, 10**6), s2=st.integers(0, 10**6))
def test_and_join_of_wadditive_parts(n, m, s1, s2):
    c = compose_and(_ext_circuit(n, s1), _ext_circuit(m, s2))
    assert c.n_inputs == n + m
    assert check_circuit(c).ok


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 5), seed=st.integers(0, 10**6))
def test_not_wrap_of_wadditive_part(n, seed):
    assert check_circuit(compose_not(_ext_circuit(n, seed))).ok


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 4), n_out=st.integers(1, 2), seed=st.integers(0, 10**6), primitive=st.booleans())
def test_synthesis_matches_extension(n, n_out, seed, primitive):
    t = random_basis_table(n, n_out, seed)
    c = synthesize(t, primitive=primitive)
    full = c.full_array()
    assert (full == extension_array(t)).all()
    assert check_circuit(c).ok


def test_synthesis_reference_route():
    # per-word evaluate vs per-word extend, no kernels involved
    t = random_basis_table(3, 1, 7)
    c = synthesize(t)
    for w in all_words(3):
        assert c.evaluate(w) == extend(t, w)


def test_synthesized_gate_counts():
    assert [synthesized_gate_count(n) for n in (1, 2, 3, 4)] == [1, 4, 11, 26]
    for n in (1, 2, 3, 4):
        assert synthesize(random_basis_table(n, 1, n)).gate_count() == synthesized_gate_count(n)


def test_one_input_catalogue():
    assert len(NAMED_ONE_SBIT) == 9
    for rows in itertools.product("01s", repeat=2):
        t = BasisTable.from_rows(rows)
        c = synthesize(t)
        assert c.gate_count() == 1 and c.nodes[0].gate is NAMED_ONE_SBIT[rows]
        for w in "01s":
            assert c.evaluate(w) == extend(t, w)


def _chain(*gates):
    def f(x):
        for g in gates:
            x = gate_apply(g, x)
        return x
    return f


@pytest.mark.parametrize("target, f", [
    (G.C0, lambda x: gate_apply(G.AND, word(str(x) + "0"))),
    (G.C1, lambda x: gate_apply(G.OR, word(str(x) + "1"))),
    (G.S0BAR, _chain(G.NOT, G.S0)),
    (G.S1, _chain(G.S0, G.NOT)),
    (G.S1BAR, _chain(G.NOT, G.S1)),
    (G.H, _chain(G.S1, G.S1BAR)),
])
def test_one_sbit_identities(target, f):
    for x in "01s":
        assert f(word(x)) == gate_apply(target, x)


def test_primitive_mode_gate_set():
    allowed = {G.NOT, G.AND, G.OR, G.S0, G.FANOUT, G.T, G.I}
    for rows in itertools.product("01s", repeat=2):
        c = synthesize(BasisTable.from_rows(rows), primitive=True)
        assert {n.gate for n in c.nodes} <= allowed
        assert all(c.evaluate(w) == gate_apply(NAMED_ONE_SBIT[rows], w) for w in "01s")


def test_circuit_text_round_trip():
    c = synthesize(random_basis_table(3, 2, 5))
    assert TernaryCircuit.parse(c.dumps()) == c
