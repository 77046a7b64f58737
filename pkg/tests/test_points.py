"""Canonical form and total evaluation of eventually periodic points."""

import pytest
from hypothesis import given, strategies as st

from baireguess import Point

values = st.integers(min_value=0, max_value=5)
pres = st.lists(values, max_size=6).map(tuple)
pers = st.lists(values, min_size=1, max_size=5).map(tuple)


def test_period_required():
    with pytest.raises(ValueError):
        Point((1, 2), ())


def test_naturals_only():
    with pytest.raises(ValueError):
        Point((-1,), (0,))
    with pytest.raises(ValueError):
        Point((), (0, -2))


def test_primitive_root_reduction():
    assert Point((), (1, 2, 1, 2)) == Point((), (1, 2))
    assert Point((), (3, 3, 3)).per == (3,)


def test_preamble_absorption():
    # a preamble that merely pre-plays the period is folded into it
    assert Point((0, 1), (0, 1)) == Point((), (0, 1))
    assert Point((5, 7), (7,)).pre == (5,)


def test_at_and_prefix():
    p = Point((3, 1), (2, 0))
    assert [p.at(i) for i in range(7)] == [3, 1, 2, 0, 2, 0, 2]
    assert p.prefix(4) == (3, 1, 2, 0)
    with pytest.raises(ValueError):
        p.at(-1)


def test_extends():
    p = Point((3, 1), (2,))
    assert p.extends(())
    assert p.extends((3, 1, 2, 2))
    assert not p.extends((3, 2))


def test_constant():
    p = Point.constant(4)
    assert p.pre == () and p.per == (4,)
    assert p.at(100) == 4


def test_describe_is_dsl_literal():
    assert Point((3, 1), (2,)).describe() == "(point :pre (3 1) :per (2))"


@given(pres, pers)
def test_canonical_form_preserves_values(pre, per):
    p = Point(pre, per)
    raw = list(pre) + [per[(i - len(pre)) % len(per)] for i in range(len(pre), len(pre) + 3 * len(per) + 4)]
    assert [p.at(i) for i in range(len(raw))] == raw


@given(pres, pers, pres, pers)
def test_equality_iff_pointwise(pre1, per1, pre2, per2):
    a, b = Point(pre1, per1), Point(pre2, per2)
    bound = len(a.pre) + len(b.pre) + len(a.per) * len(b.per)
    pointwise = all(a.at(i) == b.at(i) for i in range(bound))
    assert (a == b) == pointwise
    assert a.same_function(b) == pointwise


@given(pres, pers)
def test_canonical_form_is_minimal(pre, per):
    p = Point(pre, per)
    # primitive period: no proper divisor rotation reproduces it
    k = len(p.per)
    for d in range(1, k):
        if k % d == 0:
            assert p.per != p.per[:d] * (k // d)
    # no absorbable tail remains
    assert not (p.pre and p.pre[-1] == p.per[-1])
