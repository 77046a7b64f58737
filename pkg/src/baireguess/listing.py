"""Fact listings: deterministic, duplicate-free sentence enumerations that
guessers consume as bit streams.

Two handles are provided.  CanonicalAtomicListing interleaves the dense
atom stream (atom f(i)=n at raw slot 2*pair(i,n)) with the general
quantifier-free codec on odd slots, deduplicating as it goes; the atom copy
in the general stream always sits at a later raw slot than the dense copy,
so every atom keeps a listing index at most 2*pair(i,n).

SynthesisListing serves a paired presentation: certificate sentences for
the pair interleaved with the canonical stream (one canonical slot in every
16).  Certificate slots are split into nine lanes.  Lanes 0..7 each own one
row x = lane and cycle not-sigma(x, q), tau(x, q), then a cold sigma or
not-tau, so the decisive certificates for row x at within-row index y
appear by slot O(y) with a constant independent of how populous earlier
rows are.  Lane 8 sweeps all rows x >= 8 through the pairing function; the
synthesized guesser only ever needs rows up to the point's stabilization
row, so the dense lanes carry the load and lane 8 is a completeness
backstop.  Deduplication merges sentences but keeps their certificate roles
as timed events: a kill role attached to an already-listed sentence becomes
effective at the round the attachment happened, exactly when the
undeduplicated enumeration would have shown the duplicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .catalog import DeltaPrimePair, leaf_sentence
from .codes import CoCylinder, Cylinder
from .enumeration import atom_shape, canonical_slot_candidate
from .evaluate import PointReader, UndecidedError, _eval_qf, truth_bit
from .pairing import pair, unpair
from .points import Point
from .sentences import Formula, is_quantifier_free, negate
from .signature import DEFAULT_SIGNATURE, Signature

MU_KILL = "mu-kill"  # a not-sigma(x, y) certificate held (bit 1)
NU_KILL = "nu-kill"  # a tau(x, y) certificate held (bit 1)

CANON_EVERY = 16  # one canonical-stream slot in every CANON_EVERY raw slots
ROW_LANES = 8  # rows 0..7 get their own certificate lane; lane 8 sweeps the rest


@dataclass(frozen=True)
class RoleEvent:
    """Certificate role attached to listing index `index`, visible from
    round `attach_round` on (attach_round >= index always)."""

    attach_round: int
    kind: str  # MU_KILL or NU_KILL
    x: int
    y: int
    index: int


class FactListing:
    """Deterministic duplicate-free sentence enumeration."""

    def sentence(self, i: int) -> Formula:
        raise NotImplementedError

    def meta(self, i: int) -> Tuple:
        """("atom", j, v) for f(j)=v slots, ("qf",) otherwise."""
        raise NotImplementedError

    def describe(self) -> str:
        return type(self).__name__


class CanonicalAtomicListing(FactListing):
    def __init__(self) -> None:
        self._items: List[Formula] = []
        self._meta: List[Tuple] = []
        self._seen: Dict[Formula, int] = {}
        self._slot = 0  # next raw slot to process

    def _push_candidate(self, phi: Formula) -> None:
        if phi in self._seen:
            return
        self._seen[phi] = len(self._items)
        self._items.append(phi)
        shape = atom_shape(phi)
        self._meta.append(("atom", shape[0], shape[1]) if shape else ("qf",))

    def _extend_to(self, i: int) -> None:
        while len(self._items) <= i:
            self._push_candidate(canonical_slot_candidate(self._slot))
            self._slot += 1

    def sentence(self, i: int) -> Formula:
        self._extend_to(i)
        return self._items[i]

    def meta(self, i: int) -> Tuple:
        self._extend_to(i)
        return self._meta[i]

    def index_of(self, phi: Formula, search_slots: int = 1 << 20) -> Optional[int]:
        """Listing index of a sentence, if it appears within the slot budget."""
        if phi in self._seen:
            return self._seen[phi]
        while self._slot < search_slots:
            self._push_candidate(canonical_slot_candidate(self._slot))
            self._slot += 1
            if phi in self._seen:
                return self._seen[phi]
        return None

    def atom_index(self, j: int, v: int) -> int:
        """Listing index of the atom f(j)=v; at most its dense slot 2*pair(j,v)."""
        from .pairing import pair
        from .sentences import f_atom

        slot = 2 * pair(j, v)
        self._extend_to(0)
        while self._slot <= slot:
            self._push_candidate(canonical_slot_candidate(self._slot))
            self._slot += 1
        return self._seen[f_atom(j, v)]

    def describe(self) -> str:
        return "canonical quantifier-free listing"


class SynthesisListing(FactListing):
    """Certificate quadruples of a pair interleaved with the canonical
    stream.  Tracks role events for the min-index guesser."""

    def __init__(self, pair: DeltaPrimePair):
        if pair.cert is None:
            raise ValueError("synthesis listing needs a pair with certificates")
        self.pair = pair
        self.cert = pair.cert
        self._items: List[Formula] = []
        self._meta: List[Tuple] = []
        self._seen: Dict[Formula, int] = {}
        self._events: List[RoleEvent] = []
        self._slot = 0
        self._cert_t = 0

    def _push(self, phi: Formula, meta: Tuple, role: Optional[Tuple[str, int, int]]) -> None:
        idx = self._seen.get(phi)
        if idx is None:
            idx = len(self._items)
            self._seen[phi] = idx
            self._items.append(phi)
            shape = atom_shape(phi)
            self._meta.append(meta if meta else (("atom", shape[0], shape[1]) if shape else ("qf",)))
            attach = idx
        else:
            attach = len(self._items)
        if role is not None:
            kind, x, y = role
            self._events.append(RoleEvent(attach, kind, x, y, idx))

    def _push_cert(self, kind: str, x: int, y: int) -> None:
        positive = kind in ("sigma", "tau")
        leaf = self.cert.d_leaf(x, y) if kind in ("sigma", "not-sigma") else self.cert.e_leaf(x, y)
        base = leaf_sentence(leaf)
        phi = base if positive else negate(base)
        check = None
        if isinstance(leaf, Cylinder):
            check = (leaf.prefix, positive)
        elif isinstance(leaf, CoCylinder):
            check = (leaf.prefix, not positive)
        role = None
        if kind == "not-sigma":
            role = (MU_KILL, x, y)
        elif kind == "tau":
            role = (NU_KILL, x, y)
        self._push(phi, ("cert", kind, x, y, check), role)

    def _advance(self) -> None:
        s = self._slot
        self._slot += 1
        if s % CANON_EVERY == CANON_EVERY - 1:
            self._push(canonical_slot_candidate(s // CANON_EVERY), (), None)
            return
        t = self._cert_t
        self._cert_t += 1
        lane = t % (ROW_LANES + 1)
        u = t // (ROW_LANES + 1)
        if lane < ROW_LANES:
            w, q = u % 3, u // 3
            if w == 0:
                self._push_cert("not-sigma", lane, q)
            elif w == 1:
                self._push_cert("tau", lane, q)
            elif q % 2 == 0:
                self._push_cert("sigma", lane, q // 2)
            else:
                self._push_cert("not-tau", lane, q // 2)
        else:
            a, m = unpair(u)
            kind = ("sigma", "not-sigma", "tau", "not-tau")[m % 4]
            self._push_cert(kind, ROW_LANES + a, m // 4)

    def kill_slot(self, kind: str, x: int, y: int) -> int:
        """Raw slot at which the MU_KILL/NU_KILL certificate for (x, y) is
        scheduled.  The matching RoleEvent attaches by the round the slot's
        sentence lands at, so materializing through this slot exposes it."""
        if kind not in (MU_KILL, NU_KILL):
            raise ValueError(f"not a kill kind: {kind!r}")
        if x < ROW_LANES:
            u = 3 * y + (0 if kind == MU_KILL else 1)
            t = (ROW_LANES + 1) * u + x
        else:
            m = 4 * y + (1 if kind == MU_KILL else 2)
            t = (ROW_LANES + 1) * pair(x - ROW_LANES, m) + ROW_LANES
        return t + t // (CANON_EVERY - 1)

    def materialize_through_slot(self, slot: int) -> None:
        while self._slot <= slot:
            self._advance()

    def _extend_to(self, i: int) -> None:
        while len(self._items) <= i:
            self._advance()

    def sentence(self, i: int) -> Formula:
        self._extend_to(i)
        return self._items[i]

    def meta(self, i: int) -> Tuple:
        self._extend_to(i)
        return self._meta[i]

    def events_visible_at(self, n: int) -> List[RoleEvent]:
        """All role events with attach_round <= n (listing materialized
        through index n first)."""
        self._extend_to(n)
        # events are appended with nondecreasing attach rounds
        out = []
        for ev in self._events:
            if ev.attach_round > n:
                break
            out.append(ev)
        return out

    def events_list(self) -> List[RoleEvent]:
        """Live internal event list (nondecreasing attach rounds); callers
        must treat it as read-only and index with their own pointer."""
        return self._events

    def event_log(self) -> Tuple[RoleEvent, ...]:
        return tuple(self._events)

    def describe(self) -> str:
        return f"synthesis listing for {self.pair.describe()}"


class FactStream:
    """Bits of a listing's sentences at one point: bit(i) = truth of
    sentence i.  Atom and cylinder-certificate bits are read straight off
    the point; everything else goes through sentence evaluation (strict for
    quantifier-free sentences, fueled for the rest)."""

    def __init__(
        self,
        listing: FactListing,
        point: Point,
        fuel: int = 128,
        sig: Signature = DEFAULT_SIGNATURE,
    ):
        self.listing = listing
        self.point = point
        self.fuel = fuel
        self.sig = sig
        self._bits: List[int] = []

    def bit(self, i: int) -> int:
        while len(self._bits) <= i:
            k = len(self._bits)
            self._bits.append(self._compute(k))
        return self._bits[i]

    def bits_through(self, n: int) -> Tuple[int, ...]:
        self.bit(n)
        return tuple(self._bits[: n + 1])

    def _compute(self, i: int) -> int:
        meta = self.listing.meta(i)
        if meta and meta[0] == "atom":
            return 1 if self.point.at(meta[1]) == meta[2] else 0
        if meta and meta[0] == "cert" and meta[4] is not None:
            prefix, want = meta[4]
            return 1 if self.point.extends(prefix) == want else 0
        phi = self.listing.sentence(i)
        if is_quantifier_free(phi):
            ok = _eval_qf(phi, {}, PointReader(self.point), self.sig)
            return 1 if ok else 0
        return truth_bit(phi, self.point, self.fuel, self.sig)

    def describe(self) -> str:
        return f"facts of {self.listing.describe()} at {self.point.describe()}"
