"""The lopsided guessing game: simulation, evidence, and counterplay.

One player commits to an infinite move sequence before play begins; the
other watches information accumulate and keeps emitting a membership
guess.  Two boards exist: in a prefix game the guesser sees the moves
themselves, in a fact game it sees truth bits of listed sentences about
the move sequence.

A finite trace is evidence, never a verdict on the infinite play.  The
simulator reports stabilization over a trailing window (an artifact
convention, flagged as such) and a separate adjudication step labels the
evidence against supplied ground truth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .guessers import BitGuesser, Guesser, NatGuesser
from .listing import CanonicalAtomicListing, FactListing, FactStream
from .evaluate import DEFAULT_FUEL, UndecidedError
from .points import Point
from .signature import DEFAULT_SIGNATURE, Signature

PREFIX_GAME = "prefix"
FACT_GAME = "facts"

CONSISTENT_WIN_BOB = "CONSISTENT-WIN-BOB"
CONSISTENT_WIN_ALICE = "CONSISTENT-WIN-ALICE"
UNSTABLE_AT_HORIZON = "UNSTABLE-AT-HORIZON"


@dataclass(frozen=True)
class GameConfig:
    """How a game runs: which board, how long, and what counts as settled.

    In fact mode the listing supplies the sentences whose truth bits the
    guesser sees (order records the fragment level, informational only);
    None means the canonical listing.  window is the trailing run of equal
    guesses required before the trace reports stabilization.
    """

    mode: str = PREFIX_GAME
    rounds: int = 100
    window: int = 1
    fuel: int = DEFAULT_FUEL
    order: int = 0
    listing: Optional[FactListing] = None
    sig: Signature = DEFAULT_SIGNATURE

    def __post_init__(self) -> None:
        if self.mode not in (PREFIX_GAME, FACT_GAME):
            raise ValueError(f"unknown game mode {self.mode!r}")
        if not self.rounds >= self.window >= 1:
            raise ValueError("need rounds >= window >= 1")


@dataclass(frozen=True)
class GameRound:
    round: int  # 1-based
    input: int  # move or fact bit, depending on the board
    guess: int


@dataclass(frozen=True)
class GameTrace:
    """Record of one finite run.

    flips counts adjacent unequal guesses.  stabilization_index is the
    round where the final constant guess run begins, reported only when
    that run spans at least the window; final_guess is its bit.  aborted
    carries the diagnostic when a fact bit could not be decided at the
    configured fuel (the run stops there; shorter record, no invented
    guesses).
    """

    mode: str
    rounds_requested: int
    window: int
    records: Tuple[GameRound, ...]
    flips: int
    stabilization_index: Optional[int]
    final_guess: Optional[int]
    aborted: Optional[str] = None

    @property
    def guesses(self) -> Tuple[int, ...]:
        return tuple(r.guess for r in self.records)


def _trailing_run(guesses: Sequence[int]) -> int:
    run = 0
    for g in reversed(guesses):
        if run and g != guesses[-1]:
            break
        run += 1
    return run


def _finish_trace(
    cfg: GameConfig,
    records: List[GameRound],
    aborted: Optional[str],
) -> GameTrace:
    guesses = [r.guess for r in records]
    flips = sum(1 for a, b in zip(guesses, guesses[1:]) if a != b)
    run = _trailing_run(guesses)
    stab: Optional[int] = None
    final: Optional[int] = None
    if records and run >= cfg.window:
        stab = records[len(records) - run].round
        final = guesses[-1]
    return GameTrace(
        mode=cfg.mode,
        rounds_requested=cfg.rounds,
        window=cfg.window,
        records=tuple(records),
        flips=flips,
        stabilization_index=stab,
        final_guess=final,
        aborted=aborted,
    )


def run_game(alice: Point, bob: Guesser, cfg: GameConfig) -> GameTrace:
    """Simulate cfg.rounds rounds of bob guessing against alice's point.

    Deterministic: the same (alice, bob, cfg) always yields the same trace,
    and replaying bob on the recorded inputs reproduces the recorded
    guesses exactly (bob's session is reset before play).
    """
    if cfg.mode == FACT_GAME:
        if not isinstance(bob, BitGuesser):
            raise TypeError("fact games need a BitGuesser")
        listing = cfg.listing if cfg.listing is not None else CanonicalAtomicListing()
        stream = FactStream(listing, alice, fuel=cfg.fuel, sig=cfg.sig)
    else:
        if not isinstance(bob, NatGuesser):
            raise TypeError("prefix games need a NatGuesser")
        stream = None

    bob.reset()
    records: List[GameRound] = []
    aborted: Optional[str] = None
    for i in range(cfg.rounds):
        if stream is None:
            inp = alice.at(i)
        else:
            try:
                inp = stream.bit(i)
            except UndecidedError as exc:
                aborted = f"fact {i} undecided at fuel {cfg.fuel}: {exc}"
                break
        records.append(GameRound(round=i + 1, input=inp, guess=bob.feed(inp)))
    return _finish_trace(cfg, records, aborted)


def adjudicate(trace: GameTrace, truth: bool) -> str:
    """Label the evidence in a trace against ground-truth membership."""
    if trace.final_guess is None:
        return UNSTABLE_AT_HORIZON
    if trace.final_guess == (1 if truth else 0):
        return CONSISTENT_WIN_BOB
    return CONSISTENT_WIN_ALICE


def trace_jsonl(trace: GameTrace, verdict: Optional[str] = None) -> List[str]:
    """Trace as JSON lines: per-round objects, then a summary object.

    Field names are fixed: round, input, guess per round; flips,
    stabilizationIndex, verdict in the summary.
    """
    lines = [
        json.dumps({"round": r.round, "input": r.input, "guess": r.guess})
        for r in trace.records
    ]
    lines.append(
        json.dumps(
            {
                "flips": trace.flips,
                "stabilizationIndex": trace.stabilization_index,
                "verdict": verdict,
            }
        )
    )
    return lines


# ---------------------------------------------------------------------------
# Diagonalizing adversary
# ---------------------------------------------------------------------------

FLIP_TARGETS = ("eventually-zero", "eventually-constant")


@dataclass(frozen=True)
class AdversaryReport:
    """Outcome of counterplay against one guesser.

    Replaying the guesser on the constructed prefix reproduces at least the
    reported flips.  note is set when the guesser held one answer through a
    full phase cap: the adversary's committed continuation then makes that
    stabilized answer wrong (all zeros from a quiet phase lands inside the
    target set; repeated disruptions land outside it).
    """

    target: str
    prefix: Tuple[int, ...]
    flips: int
    fuel_spent: int
    final_guess: Optional[int]
    trailing_run: int
    phase_cap: int
    note: Optional[str]


def diagonalize(
    bob: NatGuesser,
    target: str = "eventually-zero",
    fuel: int = 10_000,
    phase_cap: int = 500,
) -> AdversaryReport:
    """Greedy counterplay: quiet zeros until bob claims membership, then a
    disrupting nonzero, repeated until fuel runs out or bob goes quiet for
    a whole phase cap.
    """
    if target not in FLIP_TARGETS:
        raise ValueError(
            f"target {target!r} does not admit the flip strategy; "
            f"supported: {', '.join(FLIP_TARGETS)}"
        )
    if fuel < 1:
        raise ValueError("fuel must be positive")

    bob.reset()
    moves: List[int] = []
    guesses: List[int] = []
    cur = bob.guess(())  # stance before any move is played

    def play(m: int) -> None:
        nonlocal cur
        moves.append(m)
        cur = bob.feed(m)
        guesses.append(cur)

    capped = False
    while len(moves) < fuel:
        zeros = 0
        while cur != 1 and zeros < phase_cap and len(moves) < fuel:
            play(0)
            zeros += 1
        if cur != 1:
            capped = zeros >= phase_cap
            break
        if len(moves) >= fuel:
            break
        play(1)

    flips = sum(1 for a, b in zip(guesses, guesses[1:]) if a != b)
    run = _trailing_run(guesses)
    final = guesses[-1] if guesses else cur
    note: Optional[str] = None
    if capped or run >= phase_cap:
        if final == 0:
            note = (
                "held 0 through a full quiet phase; the all-zero "
                "continuation is in the target set, so a stabilized 0 is wrong"
            )
        else:
            note = (
                "held 1 through repeated disruptions; the continuation "
                "keeps nonzero values coming, so a stabilized 1 is wrong"
            )
    return AdversaryReport(
        target=target,
        prefix=tuple(moves),
        flips=flips,
        fuel_spent=len(moves),
        final_guess=final,
        trailing_run=run,
        phase_cap=phase_cap,
        note=note,
    )
