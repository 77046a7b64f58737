"""Prefix determination of quantifier-free sentences.

The brute oracle enumerates every extension of a prefix over the value
alphabet the sentence can actually distinguish, so a decided answer here
is ground truth for decide_prefix and determination_bound.
"""

import pytest
from hypothesis import given, settings, strategies as st

from baireguess import (
    And,
    Const,
    Eq,
    Exists,
    FApp,
    Not,
    Point,
    Truth,
    Var,
    corpus_points,
    corpus_sentences,
    decide_prefix,
    determination_bound,
    determined_by,
    evaluate,
    f_atom,
    in_atomic_fragment,
)

PHIS = corpus_sentences(80, seed=7)
POINTS = corpus_points(25, seed=7)

phi_ix = st.integers(min_value=0, max_value=len(PHIS) - 1)
pt_ix = st.integers(min_value=0, max_value=len(POINTS) - 1)


def test_rejects_quantifiers():
    q = Exists("y", Eq(FApp(Var("y")), Const(0)))
    with pytest.raises(ValueError):
        decide_prefix(q, (0,))
    with pytest.raises(ValueError):
        determination_bound(q, Point((), (0,)))


def test_pinned_decisions():
    phi = f_atom(2, 5)
    assert decide_prefix(phi, (1, 1)) is None
    assert decide_prefix(phi, (1, 1, 5)) is True
    assert decide_prefix(phi, (1, 1, 4)) is False


def test_strictness_is_order_independent():
    # every read is attempted: a settled conjunct never masks an out-of-prefix
    # one, so both operand orders stay undecided until all reads fit
    left = And(f_atom(0, 9), f_atom(3, 1))
    right = And(f_atom(3, 1), f_atom(0, 9))
    assert decide_prefix(left, (0,)) is None is decide_prefix(right, (0,))
    assert decide_prefix(left, (0, 0, 0, 1)) is False is decide_prefix(right, (0, 0, 0, 1))


@given(phi_ix, pt_ix, st.integers(min_value=0, max_value=12))
def test_decisions_agree_with_full_evaluation(i, j, n):
    phi, p = PHIS[i], POINTS[j]
    got = decide_prefix(phi, p.prefix(n))
    if got is not None:
        assert got == (evaluate(phi, p) is Truth.TRUE)


@given(phi_ix, pt_ix, st.integers(min_value=0, max_value=10))
def test_decisions_are_stable_under_extension(i, j, n):
    phi, p = PHIS[i], POINTS[j]
    got = decide_prefix(phi, p.prefix(n))
    if got is not None:
        assert decide_prefix(phi, p.prefix(n + 1)) is got


@given(phi_ix, pt_ix)
def test_bound_suffices(i, j):
    phi, p = PHIS[i], POINTS[j]
    k = determination_bound(phi, p)
    assert determined_by(phi, p.prefix(k + 1))
    assert decide_prefix(phi, p.prefix(k + 1)) == (evaluate(phi, p) is Truth.TRUE)


@settings(max_examples=60)
@given(phi_ix, pt_ix)
def test_atomic_bound_is_brute_minimal(i, j):
    phi, p = PHIS[i], POINTS[j]
    if not in_atomic_fragment(phi):
        return
    k = determination_bound(phi, p)
    # brute minimal prefix length that determines phi along p
    n = 0
    while decide_prefix(phi, p.prefix(n)) is None:
        n += 1
        assert n <= k + 1
    assert n == (k + 1 if k or decide_prefix(phi, ()) is None else 0)


def test_atomic_bound_is_largest_f_index_read():
    phi = And(f_atom(4, 0), Not(f_atom(1, 2)))
    p = Point((0, 3), (0,))
    assert determination_bound(phi, p) == 4
    assert decide_prefix(phi, p.prefix(4)) is None
    assert decide_prefix(phi, p.prefix(5)) is True
