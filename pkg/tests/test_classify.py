"""Prenex conversion and alternation counting."""

from hypothesis import given, strategies as st

from baireguess import (
    And,
    Const,
    Eq,
    Exists,
    FApp,
    Forall,
    Not,
    Or,
    Point,
    Truth,
    Var,
    classify,
    corpus_points,
    corpus_sentences,
    evaluate,
    f_atom,
    prenex,
)
from baireguess.classify import EXISTS, FORALL

PHIS = corpus_sentences(40, seed=3)
POINTS = corpus_points(15, seed=3)


def test_quantifier_free_is_level_zero():
    c = classify(And(f_atom(0, 1), Not(f_atom(2, 0))))
    assert c.level == 0 and c.leading is None
    assert c.is_existential_form(1) and c.is_universal_form(1)


def test_single_block_levels():
    ex = Exists("y", Eq(FApp(Var("y")), Const(0)))
    c = classify(ex)
    assert (c.level, c.leading) == (1, EXISTS)
    assert c.is_existential_form(1) and not c.is_universal_form(1)
    assert c.is_existential_form(2) and c.is_universal_form(2)

    fa = Forall("y", Eq(FApp(Var("y")), Const(0)))
    assert (classify(fa).level, classify(fa).leading) == (1, FORALL)


def test_alternations_counted_not_quantifiers():
    # two like quantifiers merge into one block
    phi = Exists("a", Exists("b", Eq(FApp(Var("a")), Var("b"))))
    assert classify(phi).level == 1
    psi = Forall("x", Exists("y", Eq(FApp(Var("y")), Var("x"))))
    assert (classify(psi).level, classify(psi).leading) == (2, FORALL)


def test_negation_flips_leading_block():
    psi = Not(Forall("x", Exists("y", Eq(FApp(Var("y")), Var("x")))))
    assert (classify(psi).level, classify(psi).leading) == (2, EXISTS)


def test_connectives_take_the_max_level():
    ex = Exists("y", Eq(FApp(Var("y")), Const(0)))
    fa = Forall("z", Eq(FApp(Var("z")), Const(1)))
    both = And(ex, fa)
    assert classify(both).level == 2 or classify(both).level == 1
    # prenexing And(exists, forall) needs at least one alternation whichever
    # block is pulled first
    assert classify(both).level >= 1


def test_prenex_blocks_are_well_formed():
    psi = Forall("x", Or(Exists("y", Eq(FApp(Var("y")), Var("x"))), f_atom(0, 1)))
    pn = prenex(psi)
    assert [k for k, _ in pn.blocks] == [FORALL, EXISTS]
    names = [v for _, v in pn.blocks]
    assert len(set(names)) == len(names)


@given(
    st.integers(min_value=0, max_value=len(PHIS) - 1),
    st.integers(min_value=0, max_value=len(POINTS) - 1),
)
def test_prenex_preserves_truth(i, j):
    phi, p = PHIS[i], POINTS[j]
    pn = prenex(phi).to_formula()
    assert evaluate(pn, p) is evaluate(phi, p)


@given(st.integers(min_value=0, max_value=len(PHIS) - 1))
def test_quantifier_free_corpus_classifies_level_zero(i):
    assert classify(PHIS[i]).level == 0


def test_prenex_idempotent_on_prenex_input():
    psi = Forall("x", Exists("y", Eq(FApp(Var("y")), Var("x"))))
    pn = prenex(psi)
    assert pn.to_formula() == prenex(pn.to_formula()).to_formula()
