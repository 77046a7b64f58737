"""Pulling set codes back out of a guesser, and fusing dual forms into a
single family presentation."""

import pytest

from baireguess import (
    FiniteIntersection,
    FiniteUnion,
    GuessEvent,
    SynthesisSpec,
    Verdict,
    catalog_pair,
    corpus_points,
    exact_oracle,
    explicit_expansion,
    guesser_to_codes,
    member,
    synthesize_mu_nu,
    unify_family,
)

POINTS = corpus_points(20, seed=43)


def spec_and_guesser(name="exactly-zeros", **params):
    spec = SynthesisSpec(catalog_pair(name, **params))
    return spec, synthesize_mu_nu(spec)


def test_extracted_codes_sound_and_decisive():
    spec, g = spec_and_guesser(k=1)
    union_form, intersection_form = guesser_to_codes(g, spec.listing)
    decided = 0
    for p in POINTS:
        want = Verdict.IN if exact_oracle("exactly-zeros", p, k=1) else Verdict.OUT
        for form in (union_form, intersection_form):
            got = member(form, p, fuel=1000)
            assert got in (want, Verdict.UNKNOWN), (p, form)
            if got is not Verdict.UNKNOWN:
                decided += 1
    assert decided >= len(POINTS)  # the certificate limiter closes most scans


def test_extraction_without_limiter_stays_sound():
    spec, g = spec_and_guesser(k=0)
    union_form, intersection_form = guesser_to_codes(g, spec.listing, limiter=None)
    for p in POINTS[:8]:
        want = Verdict.IN if exact_oracle("exactly-zeros", p, k=0) else Verdict.OUT
        for form in (union_form, intersection_form):
            assert member(form, p, fuel=300) in (want, Verdict.UNKNOWN)


def test_explicit_expansion_shape():
    spec, g = spec_and_guesser(k=1)
    exp = explicit_expansion(g, spec.listing, 3)
    assert isinstance(exp, FiniteUnion)
    for item in exp.items:
        assert isinstance(item, FiniteIntersection)
        assert len(item.items) == 4  # one literal per listed fact bit


def test_explicit_expansion_bounds():
    spec, g = spec_and_guesser(k=1)
    with pytest.raises(ValueError):
        explicit_expansion(g, spec.listing, -1)
    with pytest.raises(ValueError):
        explicit_expansion(g, spec.listing, 13)


@pytest.mark.parametrize("j", [0, 2, 5, 8])
def test_expansion_extensionally_equals_guess_event(j):
    spec, g = spec_and_guesser(k=1)
    exp = explicit_expansion(g, spec.listing, j)
    ev = GuessEvent(lambda bits: g.guess(bits), spec.listing, round=j, desired=1)
    for p in POINTS:
        a = member(exp, p, fuel=200)
        b = member(ev, p, fuel=200)
        assert a is b, (j, p)
        assert a is not Verdict.UNKNOWN


def test_expansion_desired_zero_is_the_complement():
    spec, g = spec_and_guesser(k=1)
    pos = explicit_expansion(g, spec.listing, 4, desired=1)
    neg = explicit_expansion(g, spec.listing, 4, desired=0)
    for p in POINTS[:10]:
        a = member(pos, p)
        b = member(neg, p)
        assert {a, b} == {Verdict.IN, Verdict.OUT}


def test_unify_family_serves_both_shapes():
    pair = catalog_pair("exactly-zeros", k=1)
    unified = unify_family(pair.union_form, pair.intersection_form, m=2)
    assert unified.class_order == 2
    decided = 0
    for p in POINTS:
        want = Verdict.IN if exact_oracle("exactly-zeros", p, k=1) else Verdict.OUT
        for form in (unified.union_form, unified.intersection_form):
            got = member(form, p, fuel=1000)
            assert got in (want, Verdict.UNKNOWN), (p,)
            if got is not Verdict.UNKNOWN:
                decided += 1
    # the fused family keeps the certificates, so most points still decide
    assert decided >= len(POINTS)


def test_unified_rows_are_the_same_family_both_ways():
    from baireguess.extract import GuessRoundFamily

    pair = catalog_pair("equal-first-two")
    unified = unify_family(pair.union_form, pair.intersection_form, m=2)
    # union side: rows are intersections of Z; intersection side: unions of Z
    row_u = unified.union_form.family.child(3)
    row_i = unified.intersection_form.family.child(3)
    assert isinstance(row_u.family, GuessRoundFamily)
    assert isinstance(row_i.family, GuessRoundFamily)
    # the shared Z_j leaves are guess-round events over one listing
    a = row_u.family.child(2)
    b = row_i.family.child(2)
    assert isinstance(a, GuessEvent) and isinstance(b, GuessEvent)
    assert a.listing is b.listing
    assert a.desired == b.desired == 1


def test_unify_rejects_low_order():
    pair = catalog_pair("equal-first-two")
    with pytest.raises(ValueError):
        unify_family(pair.union_form, pair.intersection_form, m=1)
