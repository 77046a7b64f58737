"""Sentence codecs: bijectivity on the closed fragment, atom placement."""

import itertools

import pytest
from hypothesis import given, strategies as st

from baireguess import And, Const, Eq, FApp, Not, Or, Var, f_atom, is_sentence
from baireguess.enumeration import (
    atom_at,
    atom_shape,
    atom_slot,
    canonical_slot_candidate,
    decode_quantified,
    decode_sentence,
    decode_term,
    encode_sentence,
    encode_term,
    iter_quantified,
)

codes = st.integers(min_value=0, max_value=50_000)


@given(codes)
def test_term_codec_roundtrip(j):
    assert encode_term(decode_term(j)) == j


@given(codes)
def test_sentence_codec_roundtrip(k):
    assert encode_sentence(decode_sentence(k)) == k


def test_encode_rejects_foreign_nodes():
    with pytest.raises(ValueError):
        encode_term(Var("x"))
    with pytest.raises(ValueError):
        encode_sentence(Eq(Var("x"), Const(0)))


def test_atom_diagonal():
    assert atom_at(0) == f_atom(0, 0)
    for k in range(40):
        phi = atom_at(k)
        i, n = atom_shape(phi)
        assert atom_at(atom_slot(i, n) // 2) == phi


def test_atom_shape_only_matches_literal_atoms():
    assert atom_shape(f_atom(3, 2)) == (3, 2)
    assert atom_shape(Not(f_atom(3, 2))) is None
    assert atom_shape(Eq(Const(1), Const(1))) is None
    assert atom_shape(Eq(FApp(FApp(Const(0))), Const(1))) is None


def test_canonical_slots_interleave():
    # even slots walk the atom diagonal, odd slots the full codec
    assert canonical_slot_candidate(0) == f_atom(0, 0)
    assert canonical_slot_candidate(2) == atom_at(1)
    assert canonical_slot_candidate(1) == decode_sentence(0)
    assert canonical_slot_candidate(5) == decode_sentence(2)


def test_every_pure_sentence_appears():
    seen = set()
    for t in range(4000):
        seen.add(canonical_slot_candidate(t))
    for k in range(500):
        assert decode_sentence(k) in seen


@given(codes)
def test_quantified_codec_total_and_closed(k):
    phi = decode_quantified(k)
    if phi is not None:
        assert is_sentence(phi)


def test_iter_quantified_yields_sentences():
    got = list(itertools.islice(iter_quantified(), 25))
    assert len(got) == 25
    assert all(is_sentence(phi) for phi in got)
