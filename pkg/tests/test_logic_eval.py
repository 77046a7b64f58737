"""Three-valued sentence evaluation: decided answers are exact, unknowns
only ever refine toward the truth as fuel grows."""

import pytest
from hypothesis import given, settings, strategies as st

from baireguess import (
    And,
    Const,
    Eq,
    Exists,
    FApp,
    Forall,
    Not,
    Or,
    PFunApp,
    Point,
    PredApp,
    Truth,
    UndecidedError,
    Var,
    corpus_points,
    corpus_sentences,
    evaluate,
    f_atom,
    negate,
    truth_bit,
)

P01 = Point((), (0, 1))

PHIS = corpus_sentences(60, seed=11)
POINTS = corpus_points(30, seed=11)

phi_ix = st.integers(min_value=0, max_value=len(PHIS) - 1)
pt_ix = st.integers(min_value=0, max_value=len(POINTS) - 1)


def test_atomic_pinned():
    p = Point((3, 1), (2,))
    assert evaluate(f_atom(0, 3), p) is Truth.TRUE
    assert evaluate(f_atom(0, 4), p) is Truth.FALSE
    assert evaluate(f_atom(5, 2), p) is Truth.TRUE


def test_surjectivity_pinned():
    # (0 1)^w misses the value 2, so "every value is hit" fails
    surj = Forall("x", Exists("y", Eq(FApp(Var("y")), Var("x"))))
    assert evaluate(surj, P01) is Truth.FALSE
    assert evaluate(surj, P01, fuel=4) is Truth.FALSE


def test_value_search_collapses_to_the_period():
    hit7 = Exists("y", Eq(FApp(Var("y")), Const(7)))
    assert evaluate(hit7, P01) is Truth.FALSE
    assert evaluate(hit7, Point((7,), (1,))) is Truth.TRUE


def test_prefix_functional_pinned():
    # zerocount reads the window f(0..4): three zeros along (0 1)^w
    zc = Eq(PFunApp("zerocount", (Const(4),)), Const(2))
    assert evaluate(zc, P01) is Truth.FALSE
    assert evaluate(Eq(PFunApp("zerocount", (Const(4),)), Const(3)), P01) is Truth.TRUE


def test_predicates_and_connectives():
    p = Point((3, 1), (2,))
    even3 = PredApp("even", (FApp(Const(3)),))
    assert evaluate(even3, p) is Truth.TRUE
    assert evaluate(Not(even3), p) is Truth.FALSE
    assert evaluate(And(even3, f_atom(0, 3)), p) is Truth.TRUE
    assert evaluate(Or(Not(even3), f_atom(0, 4)), p) is Truth.FALSE


def test_unknown_surfaces_as_error_in_truth_bit():
    # a genuine two-quantifier residue the bounded evaluator cannot close
    inf0 = Forall(
        "x",
        Exists("y", And(PredApp("lt", (Var("x"), Var("y"))), Eq(FApp(Var("y")), Const(0)))),
    )
    assert evaluate(inf0, P01) is Truth.UNKNOWN
    with pytest.raises(UndecidedError):
        truth_bit(inf0, P01)


def test_truth_bit_values():
    p = Point((3, 1), (2,))
    assert truth_bit(f_atom(0, 3), p) == 1
    assert truth_bit(f_atom(0, 4), p) == 0


@given(phi_ix, pt_ix)
def test_negation_duality(i, j):
    a = evaluate(PHIS[i], POINTS[j])
    b = evaluate(negate(PHIS[i]), POINTS[j])
    assert {a, b} == {Truth.TRUE, Truth.FALSE}


@given(phi_ix, pt_ix)
def test_quantifier_free_always_decides(i, j):
    assert evaluate(PHIS[i], POINTS[j]) is not Truth.UNKNOWN


@settings(max_examples=40)
@given(pt_ix, st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=6))
def test_fuel_refines_monotonically(j, i, v):
    # once a quantified sentence decides, more fuel never changes the verdict
    phi = Exists("y", Eq(FApp(Var("y")), Const(v)))
    low = evaluate(phi, POINTS[j], fuel=4)
    high = evaluate(phi, POINTS[j], fuel=128)
    if low is not Truth.UNKNOWN:
        assert low is high
    # pure value-range sentences collapse against the period and decide
    psi = Forall("y", Or(Eq(FApp(Var("y")), Const(0)), Eq(FApp(Var("y")), Const(1))))
    expected = POINTS[j].values() <= {0, 1}
    assert evaluate(psi, POINTS[j], fuel=16) is (Truth.TRUE if expected else Truth.FALSE)
