from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oriposet.fence import InvalidParams, circular_rank, rank
from oriposet.matrix import D0, RankMatrix
from oriposet.qpoly import ONE, Q, LaurentPoly, RatFunc, poly, qint
from oriposet.qrational import (
    InternalMismatch,
    NegativeCF,
    Rational,
    RegularCF,
    alpha_of,
    all_rationals,
    counterexamples,
    denominator_poly,
    evaluate,
    expand_negative,
    expand_regular,
    matrix_Mq,
    matrix_Mq_plus,
    negative_q_form,
    numerator_poly,
    parse_cf,
    parse_rational,
    q_rational,
    rational_of_alpha,
    regular_q_form,
    regular_to_negative,
    trace_theorems,
)

import oracles

RANK_2113 = poly(1, 3, 5, 6, 6, 5, 3, 2, 1)
RANK_13 = poly(1, 2, 2, 2, 1, 1)

rationals = st.builds(
    lambda t, k: Fraction(t + k, t),
    st.integers(1, 60),
    st.integers(0, 200),
).filter(lambda x: x >= 1)


# -- the 32/9 example ----------------------------------------------------------------

def test_expansions_of_32_9():
    x = parse_rational("32/9")
    assert expand_regular(x) == (3, 1, 1, 4)
    assert expand_negative(x) == (4, 3, 2, 2, 2)
    assert alpha_of(x) == (2, 1, 1, 3)


def test_q_rational_of_32_9():
    x = q_rational("32/9")
    assert x == RatFunc(RANK_2113, RANK_13)
    assert numerator_poly("32/9") == RANK_2113
    assert denominator_poly("32/9") == RANK_13
    assert RANK_13 == rank((1, 3))


def test_matrix_Mq_of_32_9():
    M = matrix_Mq((4, 3, 2, 2, 2))
    assert M == RankMatrix([
        [RANK_2113, -Q * poly(1, 3, 5, 5, 5, 3, 2, 1)],
        [RANK_13, -Q * poly(1, 2, 2, 1, 1)],
    ])
    # the determinant is a power of q, so it is 1 at q = 1
    assert M.at(1) == [[32, -25], [9, -7]]
    assert M[0, 1] == -Q * LaurentPoly(oracles.fence_rank((2, 1, 1, 2)))
    assert M[1, 1] == -Q * rank((1, 2))
    assert M.trace() == RANK_2113 - Q * rank((1, 2)) == circular_rank((2, 1, 1, 4))


def test_matrix_Mq_plus_of_32_9():
    M = matrix_Mq_plus((3, 1, 1, 4))
    assert M == RankMatrix([
        [Q * RANK_2113, poly(1, 2, 2, 1, 1)],
        [Q * RANK_13, 1 + Q],
    ])
    assert M[0, 1] == rank((2, 1)) and M[1, 1] == qint(2)
    assert M.trace() == Q * RANK_2113 + 1 + Q == circular_rank((3, 1, 1, 4))
    assert M.trace() == LaurentPoly(oracles.circular_fence_rank((3, 1, 1, 4)))


def test_integer_case():
    assert q_rational("5") == RatFunc(qint(5))
    assert expand_regular(5) == (4, 1)
    assert expand_negative(5) == (5,)


def test_one_is_a_boundary_case():
    assert expand_regular(1) == (0, 1)
    assert expand_negative(1) == (1,)
    assert q_rational(1) == RatFunc(ONE)
    with pytest.raises(ValueError):
        alpha_of(1)
    assert all(trace_theorems(1).values())
    assert matrix_Mq_plus((0, 1)).trace() == D0.trace()


# -- parsing and validation --------------------------------------------------------

def test_parsing():
    assert parse_rational("32/9") == Rational(32, 9)
    assert parse_rational(Fraction(7, 2)) == Rational(7, 2)
    assert parse_cf("[3,1,1,4]") == RegularCF((3, 1, 1, 4))
    assert isinstance(parse_cf("[[4,3,2,2,2]]"), NegativeCF)
    for bad in ["9/32", "4/2", "0/1", "x", "3/-1"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_invalid_expansions():
    with pytest.raises(ValueError):
        RegularCF((3, 1, 1))
    with pytest.raises(ValueError):
        NegativeCF((4, 1))


def test_all_rationals_count():
    rs = all_rationals(10)
    assert len(rs) == sum(1 for r in range(1, 11) for t in range(1, r + 1) if Fraction(r, t).denominator == t)
    assert rs[0] == Rational(1, 1)


# -- expansions against the independent oracle ---------------------------------------

@given(rationals)
def test_expansions_match_oracle(x):
    assert list(expand_regular(x)) == oracles.cf_regular(x)
    assert list(expand_negative(x)) == oracles.cf_negative(x)
    assert evaluate(expand_regular(x)) == x == evaluate(expand_negative(x))


@given(rationals)
def test_regular_to_negative(x):
    assert regular_to_negative(expand_regular(x)) == expand_negative(x)


@pytest.mark.parametrize("r", range(2, 201, 7))
def test_alpha_round_trip(r):
    for x in all_rationals(r):
        if x.r == r and x.r != x.t:
            assert rational_of_alpha(alpha_of(x)) == x


@pytest.mark.parametrize("q", [Fraction(2), Fraction(1, 2), Fraction(-3, 5)])
def test_nested_forms_match_numeric_oracle(q):
    for x in all_rationals(25):
        value = q_rational(x).eval(q)
        terms = oracles.cf_regular(x.value)
        assert value == oracles.q_regular_value(terms, q)
        assert value == oracles.q_negative_value(oracles.cf_negative(x.value), q)


@given(rationals)
def test_both_forms_agree(x):
    x = parse_rational(x)
    fx = q_rational(x)
    assert regular_q_form(expand_regular(x)) == negative_q_form(expand_negative(x)) == fx
    assert fx.num.at_one() == x.r and fx.den.at_one() == x.t


# -- trace theorems -----------------------------------------------------------------

@pytest.mark.parametrize("x", all_rationals(18))
def test_trace_theorems_small(x):
    report = trace_theorems(x, oracle=x.r <= 12)
    assert all(report.values()), report


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda xs: xs + xs), st.integers(0, 8))
def test_cyclic_shift_trace_invariance(a, k):
    # trace of a product of RSR and R powers is invariant under even rotations
    k = 2 * (k % (len(a) // 2))
    assert matrix_Mq_plus(a[k:] + a[:k]).trace() == matrix_Mq_plus(a).trace()


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3).flatmap(
    lambda xs: st.lists(st.integers(1, 4), min_size=len(xs), max_size=len(xs)).map(
        lambda ys: [v for p in zip(xs, ys) for v in p])))
def test_mplus_trace_is_circular_rank(a):
    t = matrix_Mq_plus(a).trace()
    assert t == circular_rank(a)
    assert all(c > 0 for c in t.coeffs)
    assert t[0] == 1


# -- counterexample families --------------------------------------------------------

@pytest.mark.parametrize("k", range(2, 11))
def test_ce1(k):
    assert counterexamples("CE1", k) == ONE + Q ** k
    assert not oracles.is_unimodal([1] + [0] * (k - 1) + [1])


@pytest.mark.parametrize("n", range(1, 9))
def test_ce2_families(n):
    rising = list(range(1, n + 2))
    closed = LaurentPoly(rising + [n] + rising[::-1])
    assert counterexamples("CE2", n) == closed
    assert counterexamples("CE2'", n) == closed
    assert not oracles.is_unimodal(list(closed.coeffs))


def test_ce2_first_instance():
    assert counterexamples("CE2", 1) == poly(1, 2, 1, 2, 1)


def test_counterexample_errors():
    with pytest.raises(InvalidParams):
        counterexamples("CE1", 1)
    with pytest.raises(InvalidParams):
        counterexamples("CE2", 0)
    with pytest.raises(InvalidParams):
        counterexamples("CE7", 3)
    assert issubclass(InternalMismatch, AssertionError)
