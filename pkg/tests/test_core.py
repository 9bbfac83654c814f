import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sbitlab import BasisWordSet, S, ONE, ZERO, Sbit, SbitWord, expand, sbit_add, sum_set, word, word_add
from sbitlab.core import all_words, all_words_array, basis_positions, basis_words, basis_words_array
from sbitlab.errors import MalformedError

from conftest import sbits, words


def test_sbit_add_table():
    assert sbit_add(ZERO, ZERO) is ZERO
    assert sbit_add(ONE, ONE) is ONE
    assert sbit_add(ZERO, ONE) is S
    assert sbit_add(S, ZERO) is S
    assert sbit_add(S, S) is S


@given(sbits(), sbits(), sbits())
def test_sbit_add_semilattice(a, b, c):
    assert sbit_add(a, b) == sbit_add(b, a)
    assert sbit_add(sbit_add(a, b), c) == sbit_add(a, sbit_add(b, c))
    assert sbit_add(a, a) == a


def test_word_parse_and_str():
    w = word("0s1")
    assert str(w) == "0s1" and len(w) == 3 and w.s_count == 1
    assert w[1] is S and str(w[1:]) == "s1"
    for bad in ["", "02", "S1", "0 1"]:
        with pytest.raises(MalformedError):
            word(bad)


def test_word_add_length_mismatch():
    with pytest.raises(MalformedError):
        word_add(word("01"), word("0"))


def test_lexicographic_order_matches_index():
    ws = list(all_words(3))
    assert ws == sorted(ws)
    assert [w.index() for w in ws] == list(range(27))
    assert str(ws[0]) == "000" and str(ws[-1]) == "sss"


@given(words(max_size=7))
def test_index_round_trip(w):
    assert SbitWord.from_index(w.index(), len(w)) == w


def test_expand_examples():
    assert expand("ss") == {"00", "01", "10", "11"}
    assert expand("0s1") == {"001", "011"}
    assert expand("101") == {"101"}
    assert [str(x) for x in expand("s0s")] == ["000", "001", "100", "101"]


@given(words(max_size=8))
def test_expand_size_and_sum(w):
    m = expand(w)
    assert len(m) == 2 ** w.s_count
    assert sum_set(m) == w


def test_sum_set_round_trip_exhaustive_n1_to_8():
    for n in range(1, 9):
        for w in all_words(n):
            assert sum_set(expand(w)) == w


def test_maximality_all_subsets_small_n():
    # expand(w) is the largest basis set summing to w
    for n in range(1, 4):
        basis = list(basis_words(n))
        for r in range(1, len(basis) + 1):
            for subset in itertools.combinations(basis, r):
                total = sum_set(subset)
                assert BasisWordSet(subset) <= expand(total)


def test_basis_minimal_and_unique_small_n():
    # the basis words are exactly the words not expressible as a sum of other words
    for n in (1, 2):
        ws = list(all_words(n))
        for w in ws:
            others = [v for v in ws if v != w]
            decomposable = any(
                sum_set(pair) == w for r in (2,) for pair in itertools.combinations(others, r)
            )
            assert decomposable == (not w.is_basis)


def test_basis_word_set_validation():
    with pytest.raises(MalformedError):
        BasisWordSet([])
    with pytest.raises(MalformedError):
        BasisWordSet(["0s"])
    with pytest.raises(MalformedError):
        BasisWordSet(["0", "01"])
    with pytest.raises(MalformedError):
        sum_set([])


def test_arrays_match_words():
    for n in (1, 2, 4):
        arr = all_words_array(n)
        assert arr.shape == (3 ** n, n)
        assert [str(SbitWord(tuple(Sbit(int(v)) for v in row))) for row in arr] == [str(w) for w in all_words(n)]
        b = basis_words_array(n)
        assert np.array_equal(arr[basis_positions(n)], b)
        assert [str(SbitWord(tuple(Sbit(int(v)) for v in row))) for row in b] == [str(w) for w in basis_words(n)]


@given(st.integers(0, 255))
def test_from_bits(bits):
    w = SbitWord.from_bits(bits, 8)
    assert w.is_basis and w.bits() == bits
