"""Translating guessers between the move board and the fact board.

A prefix guesser watches f(0), f(1), ... directly; a fact guesser watches
truth bits of listed sentences.  Each direction must preserve the guess
limit, and the composition of both must reproduce the source's limit.
"""

import pytest

from baireguess import (
    CanonicalAtomicListing,
    ConstantGuesser,
    FactStream,
    FnGuesser,
    Point,
    PrefixFactTape,
    corpus_points,
    heuristic,
    prefix_to_sentence_guesser,
    seeded_machines,
    sentence_to_prefix_guesser,
)

POINTS = corpus_points(12, seed=41)


def fact_limit(bit_guesser, listing, p, rounds):
    stream = FactStream(listing, p)
    bit_guesser.reset()
    out = 0
    for i in range(rounds):
        out = bit_guesser.feed(stream.bit(i))
    return out


def move_limit(nat_guesser, p, moves):
    nat_guesser.reset()
    out = 0
    for i in range(moves):
        out = nat_guesser.feed(p.at(i))
    return out


def test_constant_source_translates_to_constant_limit():
    g, handle = prefix_to_sentence_guesser(ConstantGuesser(1))
    for p in POINTS[:4]:
        assert fact_limit(g, handle, p, 400) == 1


def test_prefix_to_sentence_reconstructs_moves():
    # "last move is zero" depends on the reconstructed prefix tip
    src = heuristic("last-is-zero")
    g, handle = prefix_to_sentence_guesser(src)
    zero = Point((), (0,))
    one = Point((), (1,))
    assert fact_limit(g, handle, zero, 400) == 1
    assert fact_limit(g, handle, one, 400) == 0


def test_sentence_guesser_outputs_zero_before_any_value_appears():
    g, handle = prefix_to_sentence_guesser(ConstantGuesser(1))
    g.reset()
    # facts about f(1), f(2), ... say nothing about f(0); no prefix is
    # reconstructed, so the translated guess stays 0
    assert g.feed(0) == 0
    assert g.output_now() == 0


def test_fact_to_prefix_empty_prefix_outputs_zero():
    g = sentence_to_prefix_guesser(ConstantGuesser(1))
    g.reset()
    assert g.output_now() == 0


def test_fact_to_prefix_decides_facts_from_moves():
    # fact source: believes membership iff the f(0)=0 bit was fed as 1
    listing = CanonicalAtomicListing()
    idx = listing.atom_index(0, 0)

    class FirstFact(ConstantGuesser):
        def __init__(self):
            super().__init__(0, name="first-fact")
            self._val = 0
            self._n = 0

        def reset(self):
            self._val = 0
            self._n = 0

        def feed(self, bit):
            if self._n == idx:
                self._val = bit
            self._n += 1
            return self._val

        def guess(self, bits):
            return 1 if len(bits) > idx and bits[idx] else 0

    g = sentence_to_prefix_guesser(FirstFact(), listing)
    assert move_limit(g, Point((), (0,)), 30) == 1
    assert move_limit(g, Point((), (1,)), 30) == 0


def test_tape_rejects_divergent_histories():
    tape = PrefixFactTape()
    tape.ensure((0, 1))
    tape.ensure((0, 1, 2))  # extension is fine
    with pytest.raises(ValueError):
        tape.ensure((0, 2))


def test_tape_must_match_listing():
    other = CanonicalAtomicListing()
    tape = PrefixFactTape(other)
    listing = CanonicalAtomicListing()
    # distinct handle objects are fine only when the tape was built on the
    # same handle passed in
    with pytest.raises(ValueError):
        sentence_to_prefix_guesser(ConstantGuesser(1), listing, tape=tape)


def test_round_trip_preserves_limits_small_scale():
    machines = seeded_machines(6, seed=2024)
    listing = CanonicalAtomicListing()
    for p in POINTS:
        tape = PrefixFactTape(listing)
        for m in machines:
            src_limit = move_limit(m, p, 1500)
            translated, handle = prefix_to_sentence_guesser(m, listing)
            composed = sentence_to_prefix_guesser(translated, handle, tape=tape)
            got = move_limit(composed, p, 48)
            assert got == src_limit, (m.name, p)


def test_decided_facts_grow_with_moves():
    g = sentence_to_prefix_guesser(ConstantGuesser(1))
    g.reset()
    p = POINTS[0]
    last = 0
    for i in range(25):
        g.feed(p.at(i))
        n = g.decided_facts()
        assert n >= last
        last = n
    assert last > 25  # many listed facts settle within a short prefix
