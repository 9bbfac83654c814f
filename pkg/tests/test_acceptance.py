"""End-to-end acceptance checks, one test per criterion.

Each test times itself against its budget and records a PASS/FAIL line that
is printed in the pytest terminal summary.  Expected values are written out
here by hand rather than read back from the library.
"""

import itertools
import random
import time
from contextlib import contextmanager

from sbitlab import GateKind, S, ONE, ZERO, SbitWord, expand, sbit_add, sum_set, word
from sbitlab.algorithms import (
    Classification, constant_circuit, deutsch_classify, oracle_circuit, projection_circuit, search,
)
from sbitlab.circuit import (
    basis_table_of, check_circuit, compose_and, compose_not,
    single_gate_circuit, synthesize,
)
from sbitlab.cli import run
from sbitlab.convert import ClassicalCircuit, convert, truth_table
from sbitlab.core import all_words
from sbitlab.dualrail import co_simulate, compile_dualrail, decode, encode, eval_dualrail, overhead_constant
from sbitlab.gates import BasisTable, Status, check_weak_additivity, extend, gate_apply, random_basis_table

from conftest import ACCEPTANCE_RESULTS

G = GateKind


@contextmanager
def criterion(num: int, title: str, budget: float | None = None):
    start = time.perf_counter()
    passed = False
    try:
        yield
        elapsed = time.perf_counter() - start
        passed = budget is None or elapsed < budget
        if not passed:
            raise AssertionError(f"took {elapsed:.2f} s, budget {budget} s")
    finally:
        elapsed = time.perf_counter() - start
        limit = f" < {budget:g} s" if budget is not None else ""
        ACCEPTANCE_RESULTS.append((num, title, passed, f"{elapsed:.2f} s{limit}"))


# Gate tables over the whole domain, rows in the published order
# (basis inputs first, then the inputs containing s).
PUBLISHED = {
    "I":      {"0": "0", "1": "1", "s": "s"},
    "NOT":    {"0": "1", "1": "0", "s": "s"},
    "C0":     {"0": "0", "1": "0", "s": "0"},
    "C1":     {"0": "1", "1": "1", "s": "1"},
    "S0":     {"0": "s", "1": "0", "s": "s"},
    "S0BAR":  {"0": "0", "1": "s", "s": "s"},
    "S1":     {"0": "s", "1": "1", "s": "s"},
    "S1BAR":  {"0": "1", "1": "s", "s": "s"},
    "H":      {"0": "s", "1": "s", "s": "s"},
    "FANOUT": {"0": "00", "1": "11", "s": "ss"},
    "AND": {"00": "0", "01": "0", "10": "0", "11": "1", "0s": "0", "1s": "s", "s0": "0", "s1": "s", "ss": "s"},
    "OR":  {"00": "0", "01": "1", "10": "1", "11": "1", "0s": "s", "1s": "1", "s0": "s", "s1": "1", "ss": "s"},
    "XOR": {"00": "0", "01": "1", "10": "1", "11": "0", "0s": "s", "1s": "s", "s0": "s", "s1": "s", "ss": "s"},
    "T": {
        "000": "0", "001": "0", "00s": "0", "010": "1", "011": "1", "01s": "1", "0s0": "s", "0s1": "s", "0ss": "s",
        "100": "0", "101": "1", "10s": "s", "110": "0", "111": "1", "11s": "s", "1s0": "0", "1s1": "1", "1ss": "s",
        "s00": "0", "s01": "s", "s0s": "s", "s10": "s", "s11": "1", "s1s": "s", "ss0": "s", "ss1": "s", "sss": "s",
    },
}


def test_1_gate_tables(capsys):
    with criterion(1, "table --full matches the published gate tables row for row", 1.0):
        assert set(PUBLISHED) == {g.name for g in GateKind}
        for name, expected in PUBLISHED.items():
            assert run(["table", name, "--full"]) == 0
            lines = capsys.readouterr().out.splitlines()
            k = len(next(iter(expected)))
            assert lines[0].split()[:2] == ["full", str(k)]
            rows = [ln.split() for ln in lines[1:]]
            assert len(rows) == 3 ** k
            keys = [r[0] for r in rows]
            assert keys == sorted(keys, key=lambda w: ["01s".index(ch) for ch in w])
            assert dict(rows) == expected


def test_2_algebra_laws():
    with criterion(2, "sbit sum laws and expand/sum round trip up to n = 8", 5.0):
        vals = [ZERO, ONE, S]
        for a, b in itertools.product(vals, repeat=2):
            assert sbit_add(a, b) == sbit_add(b, a)
        for a, b, c in itertools.product(vals, repeat=3):
            assert sbit_add(sbit_add(a, b), c) == sbit_add(a, sbit_add(b, c))
        for a in vals:
            assert sbit_add(a, a) == a
        count = 0
        for n in range(1, 9):
            for w in all_words(n):
                assert sum_set(expand(w)) == w
                count += n == 8
        assert count == 6561


def test_3_partial_sum_inconsistency():
    with criterion(3, "non-maximal sum differs from the extension; contradictory completion flagged at ss"):
        t = BasisTable.from_mapping({"00": "0", "01": "1", "10": "0", "11": "0"})
        assert extend(t, "ss") == word("s")
        assert sum_set([t("00"), t("11")]) == word("0")

        def completion(w):
            return "0" if str(w) == "ss" else extend(t, w)

        v = check_weak_additivity(completion, n=2)
        assert v.status is Status.VIOLATION and str(v.witness) == "ss"


ONE_BIT_CLASSICAL = {
    "x AND NOT x": "inputs x\na, b = FANOUT x\nnb = NOT b\ny = AND a nb\noutputs y\n",
    "x OR NOT x": "inputs x\na, b = FANOUT x\nnb = NOT b\ny = OR a nb\noutputs y\n",
    "x": "inputs x\noutputs x\n",
    "NOT x": "inputs x\ny = NOT x\noutputs y\n",
}


def test_4_deutsch_one_bit():
    with criterion(4, "one-bit oracles classify as constant 0, constant 1, non-constant, non-constant"):
        expected = [Classification.CONSTANT0, Classification.CONSTANT1,
                    Classification.NONCONSTANT, Classification.NONCONSTANT]
        for text, cls in zip(ONE_BIT_CLASSICAL.values(), expected):
            report = convert(ClassicalCircuit.parse(text))
            assert report.converted and not report.fallback_used
            r = deutsch_classify(report.circuit)
            assert r.classification is cls and r.queries == 1


def test_5_deutsch_scaling():
    with criterion(5, "constant and projection families n = 2..10: one query, linear gate counts", 5.0):
        sizes = {"c0": [], "c1": [], "proj": []}
        for n in range(2, 11):
            for key, v, cls in (("c0", 0, Classification.CONSTANT0), ("c1", 1, Classification.CONSTANT1)):
                c = constant_circuit(n, v)
                r = deutsch_classify(c)
                assert r.classification is cls and r.queries == 1
                sizes[key].append(c.gate_count())
            for j in sorted({1, n}):
                p = projection_circuit(n, j)
                r = deutsch_classify(p)
                assert r.classification is Classification.NONCONSTANT and r.queries == 1
            sizes["proj"].append(projection_circuit(n, 1).gate_count())
        for counts in sizes.values():
            steps = {b - a for a, b in zip(counts, counts[1:])}
            assert len(steps) == 1


def test_6_search_completeness():
    with criterion(6, "search recovers every marked word with exactly n queries", 30.0):
        rng = random.Random(2024)
        for n in range(1, 11):
            if n <= 7:
                marks = [SbitWord.from_bits(b, n) for b in range(2 ** n)]
            else:
                marks = [SbitWord.from_bits(rng.getrandbits(n), n) for _ in range(100)]
            for a in marks:
                r = search(oracle_circuit(a))
                assert r.found == a and r.queries == n


def test_7_oracle_size():
    with criterion(7, "oracle circuit has 2n - 1 gates for n = 1..16"):
        rng = random.Random(7)
        for n in range(1, 17):
            for _ in range(5):
                a = SbitWord.from_bits(rng.getrandbits(n), n)
                assert oracle_circuit(a).gate_count() == 2 * n - 1


CONVERTIBLE = """\
inputs x1 x2 x3
n2 = NOT x2
o = OR x1 n2
a, b = FANOUT x3
nb = NOT b
z = AND a nb
y = AND o z
outputs y
"""


def test_8_conversion_fidelity():
    with criterion(8, "worked classical circuit converts by rules alone and stays faithful"):
        c = ClassicalCircuit.parse(CONVERTIBLE)
        report = convert(c, verify=False)
        assert report.converted and not report.fallback_used
        out = report.circuit
        assert [n.gate for n in out.nodes] == [G.NOT, G.OR, G.C0, G.AND]
        tt = truth_table(c)
        assert len(tt.rows) == 8
        assert basis_table_of(out) == tt
        # the x3 AND NOT x3 factor makes the function identically 0
        assert all(str(out.evaluate(SbitWord.from_bits(b, 3))) == "0" for b in range(8))
        v = check_circuit(out)
        assert v.ok
        assert all(out.evaluate(w) == extend(tt, w) for w in all_words(3))


def test_9_composition_properties():
    with criterion(9, "AND-joins and NOT-wraps of w-additive parts pass check_circuit", 60.0):
        rng = random.Random(9)
        for i in range(120):
            n = rng.randint(1, 5)
            m = rng.randint(1, 6 - n)
            left = synthesize(random_basis_table(n, 1, rng.getrandbits(32)))
            right = synthesize(random_basis_table(m, 1, rng.getrandbits(32)))
            assert check_circuit(compose_and(left, right)).ok
            assert check_circuit(compose_not(left)).ok
            assert check_circuit(compose_not(compose_and(left, right))).ok


def test_10_synthesis():
    with criterion(10, "synthesized circuits match the extension; one-input catalogue and identities", 60.0):
        rng = random.Random(10)
        for i in range(60):
            n = 1 + i % 4
            t = random_basis_table(n, 1 + i % 2, rng.getrandbits(32))
            for primitive in (False, True):
                c = synthesize(t, primitive=primitive)
                assert all(c.evaluate(w) == extend(t, w) for w in all_words(n))
                assert check_circuit(c).ok
        gates = set()
        for rows in itertools.product("01s", repeat=2):
            t = BasisTable.from_rows(rows)
            c = synthesize(t)
            assert c.gate_count() == 1
            gates.add(c.nodes[0].gate)
            assert all(c.evaluate(w) == extend(t, w) for w in "01s")
        assert gates == {G.I, G.NOT, G.H, G.C0, G.C1, G.S0, G.S0BAR, G.S1, G.S1BAR}

        def seq(*gs):
            def f(x):
                for g in gs:
                    x = gate_apply(g, x)
                return x
            return f

        identities = [
            (G.C0, lambda x: gate_apply(G.AND, str(x) + "0")),
            (G.C1, lambda x: gate_apply(G.OR, str(x) + "1")),
            (G.S0BAR, seq(G.NOT, G.S0)),
            (G.S1, seq(G.S0, G.NOT)),
            (G.S1BAR, seq(G.NOT, G.S1)),
            (G.H, seq(G.S1, G.S1BAR)),
        ]
        for target, f in identities:
            assert all(f(word(x)) == gate_apply(target, x) for x in "01s")


def test_11_dual_rail():
    with criterion(11, "dual-rail compilation is equivalent, never produces 00, overhead <= k", 60.0):
        corpus = [single_gate_circuit(g) for g in GateKind]
        corpus.append(convert(ClassicalCircuit.parse(CONVERTIBLE)).circuit)
        for n in range(1, 6):
            corpus += [oracle_circuit(SbitWord.from_bits(b, n)) for b in range(2 ** n)]
        rng = random.Random(11)
        for i in range(20):
            n = 1 + i % 4
            corpus.append(synthesize(random_basis_table(n, 1 + i % 2, rng.getrandbits(32))))
        k = overhead_constant()
        assert k == 10
        for c in corpus:
            d = compile_dualrail(c)
            assert co_simulate(c, d) == (True, True)
            for w in all_words(c.n_inputs):
                assert decode(eval_dualrail(d, encode(w))) == c.evaluate(w)
            assert d.gate_count() <= k * max(c.gate_count(), 1)
