"""The s-expression surface syntax: round trips and positioned errors."""

import pytest
from hypothesis import given, settings, strategies as st

from baireguess import (
    DslError,
    GuessEvent,
    IndexedUnion,
    Point,
    PrintError,
    SynthesisSpec,
    catalog_pair,
    corpus_points,
    corpus_sentences,
    parse,
    to_dsl,
)
from baireguess.dsl import parse_code, parse_point, parse_sentence, parse_spec

POINTS = corpus_points(40, seed=47)
PHIS = corpus_sentences(60, seed=47)


PINNED = [
    "(point :pre (3 1) :per (2))",
    "(point :per (0 1))",
    "(forall x (exists y (= (f y) x)))",
    "(= (f 0) 3)",
    "(not (= (f 2) 0))",
    "(and (= (f 0) 1) (or (= (f 1) 1) (= (f 2) 1)))",
    "(cyl (3 1))",
    "(co-cyl (3))",
    "(union (cyl (0)) (co-cyl (1 2)))",
    "(inter (cyl (0)))",
    "(iunion (template first-repeat))",
    "(iunion (tail (cyl (0)) (cyl (1)) :tail (co-cyl (9))))",
    "(exists y (= ((:fun succ) (f y)) 3))",
    "((:pred even) (f 4))",
    "(= ((:pfun zerocount) 4) 2)",
]


@pytest.mark.parametrize("text", PINNED)
def test_pinned_literals_roundtrip(text):
    obj = parse(text)
    printed = to_dsl(obj)
    assert printed == text
    assert parse(printed) == obj


def test_catalog_spec_roundtrip():
    spec = parse("(catalog exactly-zeros :k 2)")
    assert isinstance(spec, SynthesisSpec)
    assert spec.pair.params == {"k": 2}
    assert to_dsl(spec) == "(catalog exactly-zeros :k 2)"
    assert to_dsl(spec.pair) == "(catalog exactly-zeros :k 2)"


def test_point_literals_roundtrip_object_level():
    for p in POINTS:
        assert parse(to_dsl(p)) == p


@given(st.integers(min_value=0, max_value=len(PHIS) - 1))
def test_corpus_sentences_roundtrip(i):
    phi = PHIS[i]
    assert parse(to_dsl(phi)) == phi


def test_comments_and_whitespace():
    text = """
    ; the first interesting point
    (point :pre (3 1)
           :per (2))  ; trailing note
    """
    assert parse(text) == Point((3, 1), (2,))


def test_parse_entry_points_enforce_kinds():
    assert parse_point("(point :per (1))") == Point((), (1,))
    assert parse_sentence("(= (f 0) 1)") is not None
    assert parse_code("(cyl (1))") is not None
    assert isinstance(parse_spec("(catalog equal-first-two)"), SynthesisSpec)
    with pytest.raises(DslError):
        parse_point("(= (f 0) 1)")
    with pytest.raises(DslError):
        parse_sentence("(point :per (1))")


ERRORS = [
    ("(point :per (1)", 1, 1, "unclosed"),
    ("(point :per (1)))", 1, 17, "trailing"),
    ("(point :per ())", None, None, "period"),
    ("(point :pre (1))", None, None, ":per"),
    ("(point :per (1) :per (2))", None, None, "duplicate"),
    ("(catalog no-such-set)", None, None, "unknown catalog"),
    ("(= (f 0) x 3)", None, None, None),
]


@pytest.mark.parametrize("text,line,col,needle", ERRORS)
def test_errors_are_positioned(text, line, col, needle):
    with pytest.raises(DslError) as exc:
        parse(text)
    err = exc.value
    assert err.line >= 1 and err.col >= 1
    if line is not None:
        assert (err.line, err.col) == (line, col)
    if needle is not None:
        assert needle.lower() in err.message.lower()


def test_multiline_error_position():
    text = "(and (= (f 0) 1)\n     (= (f 1) oops))"
    with pytest.raises(DslError) as exc:
        parse(text)
    assert exc.value.line == 2


def test_guess_event_codes_do_not_print():
    from baireguess import CanonicalAtomicListing

    ev = GuessEvent(lambda bits: 1, CanonicalAtomicListing(), round=2, desired=1)
    with pytest.raises(PrintError):
        to_dsl(ev)


def test_template_families_roundtrip_as_values():
    code = parse("(iunion (template first-repeat))")
    assert isinstance(code, IndexedUnion)
    assert parse(to_dsl(code)) == code


def test_negative_int_is_rejected_for_points():
    with pytest.raises(DslError):
        parse("(point :per (-1))")
