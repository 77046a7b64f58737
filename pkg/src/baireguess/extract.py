"""From guessers back to set codes.

A stabilizing guesser run along a fact listing carves out the set of points
where its outputs converge to 1.  That set has two standard presentations:
"eventually always 1" (union of intersections) and "1 infinitely often"
(intersection of unions); guesser_to_codes builds both over the single
doubly-indexed family of clopen GuessEvent leaves.  When the guesser came
out of synthesis its limit certificate turns both presentations decidable:
the tail hooks answer every membership scan in closed form.
"""

from __future__ import annotations

import itertools
from typing import Callable, Optional, Tuple

from .catalog import DeltaPrimePair, standard_form_cert
from .codes import (
    Code,
    Family,
    FiniteIntersection,
    FiniteUnion,
    GuessEvent,
    IndexedIntersection,
    IndexedUnion,
    SentenceLeaf,
    Verdict,
)
from .guessers import ConstantGuesser, Guesser
from .listing import FactListing
from .points import Point
from .sentences import negate
from .synthesis import MinIndexGuesser, SynthesisSpec, limit_certificate, synthesize_mu_nu

# limit hook: point -> (limit bit, round from which the guess equals it), or
# None to decline and let the bounded scan run
Limiter = Callable[[Point], Optional[Tuple[int, int]]]

EXPANSION_CAP = 12  # explicit bit-vector expansions stay exponential past this


def _as_runner(guesser) -> Callable[[Tuple[int, ...]], int]:
    if isinstance(guesser, Guesser):
        return guesser.guess
    if callable(guesser):
        return guesser
    raise TypeError(f"not a guesser or bits->bit callable: {guesser!r}")


def _limit_hook(guesser, listing) -> Optional[Limiter]:
    """Exact tail knowledge for guessers whose limits are known in advance:
    constants, and synthesized guessers on their own listing."""
    if isinstance(guesser, ConstantGuesser):
        return lambda point: (guesser.bit, 0)
    if not isinstance(guesser, MinIndexGuesser) or guesser.listing is not listing:
        return None
    pair = getattr(listing, "pair", None)
    if pair is None or pair.cert is None:
        return None
    spec = SynthesisSpec(pair, listing)

    def hook(point: Point) -> Optional[Tuple[int, int]]:
        try:
            cert = limit_certificate(spec, point)
        except (ValueError, RuntimeError, NotImplementedError):
            return None
        return cert.limit, cert.stabilization_bound

    return hook


class GuessRoundFamily(Family):
    """Children t -> GuessEvent at round start+t; exact tail via a limiter."""

    def __init__(
        self,
        run: Callable[[Tuple[int, ...]], int],
        listing: FactListing,
        start: int,
        desired: int,
        limiter: Optional[Limiter] = None,
    ):
        self.run = run
        self.listing = listing
        self.start = start
        self.desired = desired
        self.limiter = limiter

    def child(self, t: int) -> Code:
        return GuessEvent(self.run, self.listing, self.start + t, self.desired)

    def tail_verdict(self, point, fuel, sig):
        if self.limiter is None:
            return None
        lim = self.limiter(point)
        if lim is None:
            return None
        limit, bound = lim
        v = Verdict.IN if limit == self.desired else Verdict.OUT
        return (max(bound - self.start, 0), v)

    def describe(self) -> str:
        return f"guess-rounds[start {self.start}, want {self.desired}]"


class LimitOneFamily(Family):
    """Outer family over cut points i: child i collects the rounds past i.

    union_led=True:  child i = intersection over j>i of [guess_j = 1]
    union_led=False: child i = union over j>i of [guess_j = 1]
    """

    def __init__(
        self,
        run: Callable[[Tuple[int, ...]], int],
        listing: FactListing,
        union_led: bool,
        limiter: Optional[Limiter] = None,
    ):
        self.run = run
        self.listing = listing
        self.union_led = union_led
        self.limiter = limiter

    def child(self, i: int) -> Code:
        inner = GuessRoundFamily(self.run, self.listing, i + 1, 1, self.limiter)
        return IndexedIntersection(inner) if self.union_led else IndexedUnion(inner)

    def tail_verdict(self, point, fuel, sig):
        if self.limiter is None:
            return None
        lim = self.limiter(point)
        if lim is None:
            return None
        limit, bound = lim
        if self.union_led:
            # cuts at or past the stabilization round trap the constant tail
            return (bound, Verdict.IN) if limit == 1 else (0, Verdict.OUT)
        return (0, Verdict.IN) if limit == 1 else (bound, Verdict.OUT)

    def describe(self) -> str:
        shape = "eventually-always" if self.union_led else "infinitely-often"
        return f"{shape}-1 cuts"


def guesser_to_codes(guesser, listing: FactListing, limiter: Optional[Limiter] = None) -> Tuple[Code, Code]:
    """Both standard presentations of {p : guesses along the listing at p
    converge to 1}: (union-of-intersections, intersection-of-unions)."""
    run = _as_runner(guesser)
    if limiter is None:
        limiter = _limit_hook(guesser, listing)
    union_form = IndexedUnion(LimitOneFamily(run, listing, True, limiter))
    intersection_form = IndexedIntersection(LimitOneFamily(run, listing, False, limiter))
    return union_form, intersection_form


def explicit_expansion(guesser, listing: FactListing, round_index: int, desired: int = 1) -> FiniteUnion:
    """The GuessEvent at round_index spelled out as a clopen code: a union
    over all accepted bit vectors of the conjunction of the matching
    sentence literals.  Exponential in round_index; refuses past 12."""
    if round_index < 0:
        raise ValueError("round_index must be a natural")
    if round_index > EXPANSION_CAP:
        raise ValueError(f"explicit expansion capped at round {EXPANSION_CAP}")
    run = _as_runner(guesser)
    sentences = [listing.sentence(i) for i in range(round_index + 1)]
    items = []
    for bits in itertools.product((0, 1), repeat=round_index + 1):
        if run(bits) != desired:
            continue
        literals = tuple(
            SentenceLeaf(phi if b else negate(phi)) for phi, b in zip(sentences, bits)
        )
        items.append(FiniteIntersection(literals))
    return FiniteUnion(tuple(items))


def unify_family(union_form: Code, intersection_form: Code, m: int = 2, name: str = "unified") -> DeltaPrimePair:
    """Fuse a pair of standard forms into one family serving both shapes.

    Recovers the forms' certificate system, synthesizes the min-index
    guesser for it, and presents Z_j = "the guesser outputs 1 at round j"
    both ways.  The result carries the same certificates, so its own
    membership scans stay decidable."""
    if m < 2:
        raise ValueError("pairs live at level order 2 and above")
    cert = standard_form_cert(union_form, intersection_form)
    base = DeltaPrimePair(
        name=f"{name}-source",
        params={"m": m},
        union_form=union_form,
        intersection_form=intersection_form,
        level=m - 2,
        cert=cert,
    )
    spec = SynthesisSpec(base)
    guesser = synthesize_mu_nu(spec)
    uu, ii = guesser_to_codes(guesser, spec.listing)
    return DeltaPrimePair(
        name=name,
        params={"m": m},
        union_form=uu,
        intersection_form=ii,
        level=m - 2,
        cert=cert,
    )
