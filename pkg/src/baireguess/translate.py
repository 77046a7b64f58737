"""Moving guessers between the two boards.

A prefix guesser watches the hidden function's values directly.  A fact
guesser watches truth bits of listed sentences.  Either kind converts to
the other without moving the guess limit: true fact bits pin down ever
longer value prefixes, and a growing value prefix decides an ever longer
initial run of listed facts.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .evaluate import decide_prefix
from .guessers import BitGuesser, NatGuesser
from .listing import CanonicalAtomicListing
from .signature import DEFAULT_SIGNATURE, Signature


class SentenceFactGuesser(BitGuesser):
    """Runs a prefix guesser on the value segment its fact bits reveal.

    Consumes truth bits of the handle's sentences in listing order.  The
    appeared atoms f(i) = v (bit 1) pin down an initial segment of values;
    the output replays the source on the longest such segment.  Actual
    truth bits never disagree, so on a real fact stream the segment is
    unambiguous; a missing or conflicting early value defaults the output
    to 0.
    """

    def __init__(
        self,
        source: NatGuesser,
        handle: Optional[CanonicalAtomicListing] = None,
        name: Optional[str] = None,
    ):
        self.source = source
        self.handle = handle if handle is not None else CanonicalAtomicListing()
        self.name = name or f"facts[{source.name}]"
        super().__init__()
        self.reset()

    # session API implemented natively (mutable state, replayable)
    def reset(self) -> None:
        self._n = 0  # bits consumed
        self._values: Dict[int, int] = {}  # index -> first appeared value
        self._stop = 0  # first index with no appeared value
        self._ambig: Optional[int] = None  # least index with two appeared values
        self._out = 0
        self._fed = 0

    def feed(self, bit: int) -> int:
        i = self._n
        self._n += 1
        self._fed += 1
        if bit:
            meta = self.handle.meta(i)
            if meta[0] == "atom":
                j, v = meta[1], meta[2]
                cur = self._values.get(j)
                if cur is None:
                    self._values[j] = v
                    if j == self._stop:
                        while self._stop in self._values:
                            self._stop += 1
                        self._out = self._recompute()
                elif cur != v and (self._ambig is None or j < self._ambig):
                    self._ambig = j
                    if j < self._stop:
                        self._out = self._recompute()
        return self._out

    def _recompute(self) -> int:
        stop = self._stop
        if stop == 0 or (self._ambig is not None and self._ambig < stop):
            return 0
        # values below stop never change once set, so replaying here is a
        # pure function of the bits consumed
        return self.source.guess(tuple(self._values[j] for j in range(stop)))

    def output_now(self) -> int:
        return self._out

    def segment(self) -> Tuple[int, ...]:
        """The value segment the consumed bits currently pin down."""
        if self._stop == 0 or (self._ambig is not None and self._ambig < self._stop):
            return ()
        return tuple(self._values[j] for j in range(self._stop))

    def guess(self, bits: Sequence[int]) -> int:
        fresh = SentenceFactGuesser(self.source, self.handle, self.name)
        out = 0
        for b in bits:
            out = fresh.feed(b)
        return out

    def outputs_along(self, bits: Sequence[int]) -> List[int]:
        fresh = SentenceFactGuesser(self.source, self.handle, self.name)
        return [fresh.feed(b) for b in bits]

    def initial(self):
        return None  # session state is kept natively

    def step(self, state, move):  # pragma: no cover - feed() is native
        raise NotImplementedError("SentenceFactGuesser keeps a native session")

    def output(self, state):  # pragma: no cover - feed() is native
        raise NotImplementedError("SentenceFactGuesser keeps a native session")


class PrefixFactTape:
    """Incremental record of which listed facts a growing prefix decides.

    Append-only: extending the prefix only ever adds decided facts, so the
    tape remembers, for every prefix length reached, how many initial facts
    were decided and their truth bits.  Guessers that watch the same move
    sequence can share one tape and skip repeating the determination scan.
    """

    def __init__(
        self,
        handle: Optional[CanonicalAtomicListing] = None,
        sig: Signature = DEFAULT_SIGNATURE,
    ):
        self.handle = handle if handle is not None else CanonicalAtomicListing()
        self.sig = sig
        self._moves: List[int] = []
        self._bits: List[int] = []
        self._scan()
        self._k_at: List[int] = [len(self._bits)]

    def _scan(self) -> None:
        # extend the decided run: stop at the first fact the prefix leaves open
        s = tuple(self._moves)
        while True:
            i = len(self._bits)
            meta = self.handle.meta(i)
            if meta[0] == "atom":
                j, v = meta[1], meta[2]
                if j >= len(s):
                    break
                bit = 1 if s[j] == v else 0
            else:
                val = decide_prefix(self.handle.sentence(i), s, self.sig)
                if val is None:
                    break
                bit = 1 if val else 0
            self._bits.append(bit)

    def ensure(self, moves: Sequence[int]) -> Tuple[int, List[int]]:
        """Decided-fact count for this prefix, plus the shared bit list.

        The moves must extend or be a prefix of what the tape has seen; a
        tape follows one move sequence for its whole life.
        """
        n = len(moves)
        have = len(self._moves)
        if list(moves[: min(n, have)]) != self._moves[: min(n, have)]:
            raise ValueError("tape already follows a different move sequence")
        for m in moves[have:]:
            self._moves.append(m)
            self._scan()
            self._k_at.append(len(self._bits))
        return self._k_at[n], self._bits


class FactPrefixGuesser(NatGuesser):
    """Runs a fact guesser on the bits the seen prefix determines.

    After each move, every listed sentence in the maximal decided initial
    run is evaluated against the prefix and its bit fed to the source.  No
    sentence decided yet means output 0.  The source guesser's session is
    owned by this instance: reset() resets it too.
    """

    def __init__(
        self,
        source: BitGuesser,
        handle: Optional[CanonicalAtomicListing] = None,
        sig: Signature = DEFAULT_SIGNATURE,
        tape: Optional[PrefixFactTape] = None,
        name: Optional[str] = None,
    ):
        if tape is not None:
            if handle is not None and tape.handle is not handle:
                raise ValueError("tape was built over a different listing")
            self.handle = tape.handle
        else:
            self.handle = handle if handle is not None else CanonicalAtomicListing()
        self._construction_tape = tape
        self.source = source
        self.sig = sig
        self.name = name or f"prefix[{source.name}]"
        super().__init__()
        self.reset()

    # session API implemented natively (mutable state, replayable)
    def reset(self) -> None:
        self._moves: List[int] = []
        self._k = 0  # bits fed to the source so far
        self._last = 0
        self._fed = 0
        tape = self._construction_tape
        self._tape = tape if tape is not None else PrefixFactTape(self.handle, self.sig)
        self.source.reset()

    def feed(self, move: int) -> int:
        self._moves.append(move)
        self._fed += 1
        k, bits = self._tape.ensure(self._moves)
        while self._k < k:
            self._last = self.source.feed(bits[self._k])
            self._k += 1
        return self.output_now()

    def output_now(self) -> int:
        return self._last if self._k > 0 else 0

    def decided_facts(self) -> int:
        """How many initial listed facts the seen prefix decides."""
        return self._k

    def guess(self, moves: Sequence[int]) -> int:
        # replay on a private tape so arbitrary move sequences stay legal
        fresh = FactPrefixGuesser(self.source, self.handle, self.sig, name=self.name)
        out = 0
        for m in moves:
            out = fresh.feed(m)
        return out

    def outputs_along(self, moves: Sequence[int]) -> List[int]:
        fresh = FactPrefixGuesser(self.source, self.handle, self.sig, name=self.name)
        return [fresh.feed(m) for m in moves]

    def initial(self):
        return None  # session state is kept natively

    def step(self, state, move):  # pragma: no cover - feed() is native
        raise NotImplementedError("FactPrefixGuesser keeps a native session")

    def output(self, state):  # pragma: no cover - feed() is native
        raise NotImplementedError("FactPrefixGuesser keeps a native session")


def prefix_to_sentence_guesser(
    source: NatGuesser,
    handle: Optional[CanonicalAtomicListing] = None,
) -> Tuple[SentenceFactGuesser, CanonicalAtomicListing]:
    """Fact guesser with the same guess limit, plus the listing it reads."""
    g = SentenceFactGuesser(source, handle)
    return g, g.handle


def sentence_to_prefix_guesser(
    source: BitGuesser,
    handle: Optional[CanonicalAtomicListing] = None,
    *,
    sig: Signature = DEFAULT_SIGNATURE,
    tape: Optional[PrefixFactTape] = None,
) -> FactPrefixGuesser:
    """Prefix guesser with the same guess limit over the given fact listing."""
    return FactPrefixGuesser(source, handle, sig=sig, tape=tape)
