"""Min-index guesser synthesis from a paired presentation.

The guesser watches the fact bits of a SynthesisListing and tracks two
frontiers over rows:

  mu = least x such that no held fact so far is a not-sigma(x, y)
  nu = least x such that no held fact so far is a tau(x, y)

and guesses 1 exactly when mu < nu.  For a point inside the set, mu gets
stuck at the first union row that contains the point while nu climbs
forever; outside, nu gets stuck at the first intersection row missing the
point while mu climbs.  Either way the guess stabilizes to the membership
bit, and with exact row analytics the stabilization round can be computed
in advance (limit_certificate)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .catalog import DeltaPrimePair
from .codes import ScanResult
from .guessers import BitGuesser
from .listing import MU_KILL, NU_KILL, FactStream, RoleEvent, SynthesisListing
from .points import Point
from .signature import DEFAULT_SIGNATURE, Signature


@dataclass
class SynthesisSpec:
    """A pair plus the listing the synthesized guesser will read."""

    pair: DeltaPrimePair
    listing: SynthesisListing = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.listing is None:
            self.listing = SynthesisListing(self.pair)
        if self.listing.pair is not self.pair:
            raise ValueError("listing was built for a different pair")

    def describe(self) -> str:
        return f"synthesis spec for {self.pair.describe()}"


class MinIndexGuesser(BitGuesser):
    """Bit guesser implementing the two-frontier rule over a listing.

    feed(bit) consumes the truth bit of the next listed sentence.  The
    session keeps mutable internals for speed; guess(bits) replays a fresh
    instance, so outputs stay a pure function of the bits consumed."""

    def __init__(self, listing: SynthesisListing, name: str = "min-index"):
        self.listing = listing
        self.name = name
        super().__init__()
        self.reset()

    # session API implemented natively (mutable state, replayable)
    def reset(self) -> None:
        self._bits: List[int] = []
        self._ev_ptr = 0
        self._mu_killed: set = set()
        self._nu_killed: set = set()
        self.mu = 0
        self.nu = 0
        self._fed = 0

    def feed(self, bit: int) -> int:
        self._bits.append(1 if bit else 0)
        self._fed += 1
        n = len(self._bits) - 1  # rounds are listing indices
        self.listing.sentence(n)  # materialize events through round n
        events = self.listing.events_list()
        while self._ev_ptr < len(events) and events[self._ev_ptr].attach_round <= n:
            ev = events[self._ev_ptr]
            self._ev_ptr += 1
            if ev.index < len(self._bits) and self._bits[ev.index] == 1:
                if ev.kind == MU_KILL:
                    self._mu_killed.add(ev.x)
                else:
                    self._nu_killed.add(ev.x)
        while self.mu in self._mu_killed:
            self.mu += 1
        while self.nu in self._nu_killed:
            self.nu += 1
        return self.output_now()

    def output_now(self) -> int:
        return 1 if self.mu < self.nu else 0

    def guess(self, bits) -> int:
        fresh = MinIndexGuesser(self.listing, self.name)
        out = 0
        for b in bits:
            out = fresh.feed(b)
        return out

    def outputs_along(self, bits) -> List[int]:
        fresh = MinIndexGuesser(self.listing, self.name)
        return [fresh.feed(b) for b in bits]

    def initial(self):
        return None  # session state is kept natively

    def step(self, state, move):  # pragma: no cover - feed() is native
        raise NotImplementedError("MinIndexGuesser keeps a native session")

    def output(self, state):  # pragma: no cover - feed() is native
        raise NotImplementedError("MinIndexGuesser keeps a native session")


def synthesize_mu_nu(spec: SynthesisSpec) -> MinIndexGuesser:
    """Fresh min-index guesser for the spec's listing."""
    return MinIndexGuesser(spec.listing, name=f"mu-nu[{spec.pair.name}]")


# ---------------------------------------------------------------------------
# Traced runs
# ---------------------------------------------------------------------------


@dataclass
class MuNuStep:
    round: int
    mu: int
    nu: int
    guess: int


@dataclass
class MuNuTrace:
    """Change-point trace of a synthesis run.

    steps holds one record per round where (mu, nu, guess) moved, plus the
    final round.  stabilization_index is the first round from which the
    guess never changes again within the run; flips counts guess changes."""

    point: Point
    rounds: int
    steps: List[MuNuStep]
    final_mu: int
    final_nu: int
    final_guess: int
    flips: int
    stabilization_index: int

    def mu_values(self) -> List[int]:
        return [s.mu for s in self.steps]


def run_synthesis(
    spec: SynthesisSpec,
    point: Point,
    rounds: int,
    fuel: int = 128,
    sig: Signature = DEFAULT_SIGNATURE,
) -> MuNuTrace:
    g = synthesize_mu_nu(spec)
    stream = FactStream(spec.listing, point, fuel=fuel, sig=sig)
    steps: List[MuNuStep] = []
    flips = 0
    stab = 0
    last = None
    for n in range(rounds):
        guess = g.feed(stream.bit(n))
        cur = (g.mu, g.nu, guess)
        if last is None or cur != (last.mu, last.nu, last.guess):
            steps.append(MuNuStep(n, g.mu, g.nu, guess))
        if last is not None and guess != last.guess:
            flips += 1
            stab = n
        last = MuNuStep(n, g.mu, g.nu, guess)
    if last is not None and (not steps or steps[-1].round != last.round):
        steps.append(last)
    return MuNuTrace(
        point=point,
        rounds=rounds,
        steps=steps,
        final_mu=last.mu if last else 0,
        final_nu=last.nu if last else 0,
        final_guess=last.guess if last else 0,
        flips=flips,
        stabilization_index=stab,
    )


# ---------------------------------------------------------------------------
# Exact limits
# ---------------------------------------------------------------------------


@dataclass
class LimitCertificate:
    """Provable limit behaviour of the synthesized guesser at a point.

    limit is the stabilized guess bit; after round stabilization_bound the
    guess never moves.  Exactly one frontier stalls: mu_limit is the row mu
    never passes (point inside, nu climbs without bound, reported None) and
    nu_limit is the row nu never passes (point outside, mu unbounded)."""

    limit: int
    stabilization_bound: int
    mu_limit: Optional[int]
    nu_limit: Optional[int]


def _witness_x(res: ScanResult, what: str) -> Optional[int]:
    if res.witness is not None:
        return res.witness
    if res.exhausted:
        return None
    raise ValueError(f"{what}: analytics gave no information")


def limit_certificate(spec: SynthesisSpec, point: Point, slot_cap: int = 1 << 22) -> LimitCertificate:
    """Exact limit and stabilization bound, from the pair's row analytics.

    One side suffices.  Inside, mu is pinned at the first all-containing
    union row forever, so the guess settles once nu has climbed past it:
    only the nu kills for rows up to that one are needed.  Outside, nu is
    pinned at the first never-hit intersection row, so only the mu kills
    for the rows below it matter.  Requires a certificate system with total
    first_d_miss/first_e_hit and witness scans (the catalog pairs qualify)."""
    cert = spec.pair.cert
    listing = spec.listing
    inside = _witness_x(cert.union_witness(point), "union witness")

    needed: List[Tuple[str, int, int]] = []
    if inside is not None:
        x_star = inside
        for x in range(x_star + 1):
            y = cert.first_e_hit(x, point)
            if y is None:
                raise ValueError("point is inside: every intersection row must hit")
            needed.append((NU_KILL, x, y))
        limit, mu_lim, nu_lim = 1, x_star, None
    else:
        out = _witness_x(cert.intersection_out_witness(point), "intersection witness")
        if out is None:
            raise ValueError("analytics claim the point is neither inside nor outside")
        x_out = out
        for x in range(x_out):
            y = cert.first_d_miss(x, point)
            if y is None:
                raise ValueError("intersection witness was not least")
            needed.append((MU_KILL, x, y))
        limit, mu_lim, nu_lim = 0, None, x_out

    if not needed:
        return LimitCertificate(limit=limit, stabilization_bound=0, mu_limit=mu_lim, nu_limit=nu_lim)

    max_slot = max(listing.kill_slot(kind, x, y) for kind, x, y in needed)
    if max_slot > slot_cap:
        raise RuntimeError(
            f"stabilization slot {max_slot} exceeds the materialization cap {slot_cap}"
        )
    listing.materialize_through_slot(max_slot)
    want = {(kind, x, y) for kind, x, y in needed}
    bound = 0
    for ev in listing.events_list():
        key = (ev.kind, ev.x, ev.y)
        if key in want:
            want.discard(key)
            bound = max(bound, ev.attach_round)
            if not want:
                break
    if want:
        raise RuntimeError("scheduled kill events were not produced by the listing")
    return LimitCertificate(
        limit=limit,
        stabilization_bound=bound,
        mu_limit=mu_lim,
        nu_limit=nu_lim,
    )
