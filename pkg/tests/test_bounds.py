import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from lefkit.bounds import (
    HilbertSeq,
    binomial_expansion,
    expansion_shift,
    first_difference,
    gotzmann_growth,
    green_bound,
    is_differentiable,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
    parse_sequence,
    positive_difference,
)
from lefkit.errors import NotStandard

from oracles import all_binomial_expansions


def test_expansion_examples():
    assert binomial_expansion(8, 3).terms == ((4, 3), (3, 2), (1, 1))
    assert binomial_expansion(1, 5).terms == ((5, 5),)
    assert binomial_expansion(10, 3).terms == ((5, 3),)


@pytest.mark.parametrize("s", range(3, 9))
def test_expansion_of_3s_minus_1(s):
    expected = ((s + 1, s), (s, s - 1)) + tuple((k, k) for k in range(s - 2, 0, -1))
    assert binomial_expansion(3 * s - 1, s).terms == expected


def test_expansion_unique_by_search():
    for i in range(1, 9):
        for n in range(1, 501):
            found = all_binomial_expansions(n, i)
            assert found == [binomial_expansion(n, i).terms], (n, i)


def test_shift_examples():
    assert expansion_shift(binomial_expansion(8, 3), 0, -1) == 2
    assert expansion_shift(binomial_expansion(3, 3), 0, -1) == 0
    for n in range(1, 40):
        assert expansion_shift(binomial_expansion(n, 4), 0, 0) == n


def test_shift_subscript_readings_for_two_in_degree_three():
    exp = binomial_expansion(2, 3)
    # the Green operator (bottom unchanged, top minus one) is zero here
    assert expansion_shift(exp, 0, -1) == 0
    # lowering the bottom as well gives C(2,2) + C(1,1)
    assert expansion_shift(exp, -1, -1) == 2


def test_macaulay_examples():
    assert macaulay_bound(3, 1) == 6
    assert macaulay_bound(1, 2) == 1
    assert macaulay_bound(6, 2) == 10
    assert macaulay_bound(0, 4) == 0


def test_green_examples():
    assert green_bound(8, 3) == 2
    assert green_bound(3, 3) == 0
    assert green_bound(2, 3) == 0
    assert green_bound(0, 3) == 0


def test_gotzmann_examples():
    assert gotzmann_growth(7, 3, 2) == 11
    for n in range(1, 30):
        assert gotzmann_growth(n, 3, 0) == n
        assert gotzmann_growth(n, 3, 1) == macaulay_bound(n, 3)


def test_macaulay_bound_is_lex_growth():
    # h_d = dim R_d in n variables grows to dim R_(d+1)
    for n in range(1, 6):
        for d in range(1, 6):
            assert macaulay_bound(comb(n - 1 + d, d), d) == comb(n + d, d + 1)


def test_errors():
    with pytest.raises(ValueError):
        binomial_expansion(3, 0)
    with pytest.raises(ValueError):
        macaulay_bound(3, 0)


def test_o_sequence_examples():
    assert is_o_sequence((1, 3, 6, 10))
    assert not is_o_sequence((1, 3, 6, 11))
    assert is_o_sequence((1, 3, 5, 5))
    assert is_o_sequence((1, 3, 6, 6, 2))
    with pytest.raises(NotStandard):
        is_o_sequence((2, 3))


def test_si_examples():
    assert is_si_sequence((1, 3, 6, 8, 8, 6, 3, 1))
    assert is_si_sequence((1, 3, 3, 1))
    assert not is_si_sequence((1, 2, 1, 2, 1))
    assert not is_unimodal((1, 2, 1, 2, 1))
    assert not is_si_sequence((1, 3, 6, 6, 3))


def test_si_implies_unimodal_exhaustive():
    count = 0
    for e in range(1, 9):
        half = e // 2
        for mid in itertools.product(range(1, 13), repeat=max(half - 1, 0)):
            first = (1, 3) + mid if half >= 1 else (1,)
            first = first[: half + 1]
            seq = first + tuple(reversed(first[: e + 1 - len(first)]))
            if len(seq) != e + 1:
                continue
            if is_si_sequence(seq):
                count += 1
                assert is_unimodal(seq)
    assert count > 0


def test_differences():
    assert first_difference((1, 3, 6, 6, 2)) == (1, 2, 3, 0, -4)
    assert positive_difference((1, 3, 6, 8, 6, 3, 1), 7) == (1, 2, 3, 2, 0, 0, 0)
    assert is_differentiable((1, 3, 5, 7))
    assert not is_differentiable((1, 3, 6, 6, 7))
    assert is_symmetric((1, 3, 1))


def test_hilbert_seq():
    h = HilbertSeq([1, 3, 3, 1, 0, 0])
    assert tuple(h) == (1, 3, 3, 1) and h.socle_degree == 3
    assert h.at(7) == 0 and h.at(-1) == 0
    assert str(h) == "(1,3,3,1)"
    assert parse_sequence("(1, 3,6,6,2)") == HilbertSeq((1, 3, 6, 6, 2))
    with pytest.raises(ValueError):
        HilbertSeq([1, -1])


@given(st.integers(1, 2000), st.integers(1, 9))
def test_expansion_roundtrip(n, i):
    exp = binomial_expansion(n, i)
    assert sum(comb(t, b) for t, b in exp.terms) == n
    assert macaulay_bound(n, i) >= n or i == 1 and n == 1
