"""Compiling indexed code trees into prenex sentences and back.

Ground truth throughout is the catalog's exact oracle; a compiled sentence
may go UNKNOWN under bounded evaluation but must never decide wrongly.
"""

import pytest

from baireguess import (
    Cylinder,
    Point,
    SentenceLeaf,
    Truth,
    Verdict,
    classify,
    clopen_set,
    compile_to_sentence,
    corpus_points,
    evaluate,
    exact_oracle,
    f_atom,
    is_sentence,
    member,
    reference_codes,
    sentence_to_code,
)
from baireguess.codes import ExplicitTailFamily, IndexedUnion
from baireguess.sentences import And, Not, Or
from baireguess.transforms import MalformedNormalForm

POINTS = corpus_points(50, seed=29)


def test_reference_codes_catalog():
    refs = reference_codes()
    assert set(refs) == {
        "open-equal-first-two",
        "closed-equal-first-two",
        "sigma2-eventually-zero",
        "pi3-infinitely-many-zeros",
    }
    for name, (code, depth, oracle_name) in refs.items():
        assert 1 <= depth <= 3


def test_depth_validation():
    code, _, _ = reference_codes()["open-equal-first-two"]
    with pytest.raises(ValueError):
        compile_to_sentence(code, 0)
    with pytest.raises(ValueError):
        compile_to_sentence(code, 4)
    with pytest.raises(MalformedNormalForm):
        compile_to_sentence(Cylinder((1,)), 1)


@pytest.mark.parametrize("name", sorted(reference_codes()))
def test_compiled_sentences_sound_and_useful(name):
    code, depth, oracle_name = reference_codes()[name]
    compiled = compile_to_sentence(code, depth)
    assert is_sentence(compiled.sentence)
    assert classify(compiled.sentence).level <= depth
    decided = 0
    for p in POINTS:
        want = exact_oracle(oracle_name, p)
        got = evaluate(compiled.sentence, p, fuel=256, sig=compiled.signature)
        if got is not Truth.UNKNOWN:
            decided += 1
            assert (got is Truth.TRUE) == want, (name, p)
    assert decided >= len(POINTS) // 2, f"{name} decided only {decided}"


def test_compiled_quantifier_shape():
    code, depth, _ = reference_codes()["sigma2-eventually-zero"]
    compiled = compile_to_sentence(code, depth)
    assert compiled.union_led and compiled.depth == 2
    assert compiled.describe().startswith("compiled[sigma 2")


def test_fresh_symbols_do_not_collide():
    code, depth, _ = reference_codes()["open-equal-first-two"]
    a = compile_to_sentence(code, depth)
    b = compile_to_sentence(code, depth)
    assert a.tau_name != b.tau_name
    assert a.ell_name != b.ell_name


def test_sentence_to_code_roundtrip_on_clopen():
    phi = Or(And(f_atom(0, 1), Not(f_atom(2, 0))), f_atom(1, 3))
    code = sentence_to_code(phi)
    for p in POINTS[:25]:
        want = Verdict.IN if evaluate(phi, p) is Truth.TRUE else Verdict.OUT
        assert member(code, p) is want


def test_sentence_to_code_on_quantified():
    from baireguess import Const, Eq, Exists, FApp, Var

    phi = Exists("y", Eq(FApp(Var("y")), Const(0)))
    code = sentence_to_code(phi)
    for p in POINTS[:25]:
        want = 0 in p.values()
        got = member(code, p, fuel=96)
        assert got in ((Verdict.IN if want else Verdict.OUT), Verdict.UNKNOWN)
        if want:
            assert got is Verdict.IN


def test_clopen_set_is_exact():
    phi = And(f_atom(0, 1), Not(f_atom(2, 0)))
    code = clopen_set(phi)
    for p in POINTS:
        want = Verdict.IN if evaluate(phi, p) is Truth.TRUE else Verdict.OUT
        assert member(code, p) is want


def test_clopen_set_rejects_quantifiers():
    from baireguess import Const, Eq, Exists, FApp, Var

    with pytest.raises(ValueError):
        clopen_set(Exists("y", Eq(FApp(Var("y")), Const(0))))


def test_compile_then_recode_stays_sound():
    # sentence -> code -> membership agrees with direct evaluation
    code, depth, oracle_name = reference_codes()["closed-equal-first-two"]
    compiled = compile_to_sentence(code, depth)
    back = sentence_to_code(compiled.sentence, sig=compiled.signature)
    for p in POINTS[:20]:
        want = exact_oracle(oracle_name, p)
        got = member(back, p, fuel=128, sig=compiled.signature)
        assert got in ((Verdict.IN if want else Verdict.OUT), Verdict.UNKNOWN)
