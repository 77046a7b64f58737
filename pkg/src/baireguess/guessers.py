"""Guessers: deterministic strategies that watch a growing move sequence
and keep emitting a bit.

A guesser is pure: its output depends only on the moves seen so far, so a
run can always be replayed.  For long games the feed() session API advances
one move at a time; guess() on a whole move tuple is the defining form and
the two are interchangeable.

NatGuesser consumes arbitrary naturals (prefix games).  BitGuesser consumes
bits (fact games).  The distinction is documentation of the intended move
alphabet; both share the same machinery.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple


class Guesser:
    """Base: override initial/step/output with pure functions of state."""

    name = "guesser"

    def __init__(self) -> None:
        self._state = self.initial()
        self._fed = 0

    # --- pure core ---
    def initial(self) -> object:
        return None

    def step(self, state: object, move: int) -> object:
        raise NotImplementedError

    def output(self, state: object) -> int:
        raise NotImplementedError

    # --- session API ---
    def reset(self) -> None:
        self._state = self.initial()
        self._fed = 0

    def feed(self, move: int) -> int:
        self._state = self.step(self._state, move)
        self._fed += 1
        return self.output(self._state)

    @property
    def moves_fed(self) -> int:
        return self._fed

    def guess(self, moves: Sequence[int]) -> int:
        """Output after replaying the whole move sequence from scratch."""
        state = self.initial()
        for m in moves:
            state = self.step(state, m)
        return self.output(state)

    def outputs_along(self, moves: Sequence[int]) -> List[int]:
        """Output after each successive move (replayed, stateless)."""
        state = self.initial()
        out = []
        for m in moves:
            state = self.step(state, m)
            out.append(self.output(state))
        return out

    def describe(self) -> str:
        return self.name


class NatGuesser(Guesser):
    """Moves are naturals: the values of the hidden function in order."""


class BitGuesser(Guesser):
    """Moves are truth bits of listed sentences, in listing order."""


class FnGuesser(NatGuesser):
    """Stateless guesser defined by a function of the full move tuple."""

    def __init__(self, fn: Callable[[Tuple[int, ...]], int], name: str):
        self._fn = fn
        self.name = name
        super().__init__()

    def initial(self) -> Tuple[int, ...]:
        return ()

    def step(self, state: Tuple[int, ...], move: int) -> Tuple[int, ...]:
        return state + (move,)

    def output(self, state: Tuple[int, ...]) -> int:
        return 1 if self._fn(state) else 0


class ConstantGuesser(NatGuesser):
    def __init__(self, bit: int, name: Optional[str] = None):
        self.bit = 1 if bit else 0
        self.name = name or f"constant-{self.bit}"
        super().__init__()

    def initial(self) -> None:
        return None

    def step(self, state: None, move: int) -> None:
        return None

    def output(self, state: None) -> int:
        return self.bit


class SaturatingMachine(NatGuesser):
    """Finite-state guesser whose state index never decreases.

    Moves are classed as min(move, value_cap).  Because transitions are
    monotone on a finite state set, the state is eventually constant on any
    input, so the guess limit always exists and is reached within
    n_states distinct state changes.
    """

    def __init__(
        self,
        transitions: Sequence[Sequence[int]],
        outputs: Sequence[int],
        value_cap: int,
        name: str = "machine",
    ):
        self.transitions = tuple(tuple(row) for row in transitions)
        self.outputs = tuple(1 if b else 0 for b in outputs)
        self.value_cap = value_cap
        self.name = name
        n = len(self.transitions)
        if len(self.outputs) != n or n == 0:
            raise ValueError("outputs must match the state count")
        for s, row in enumerate(self.transitions):
            if len(row) != value_cap + 1:
                raise ValueError("each row needs value_cap + 1 entries")
            for t in row:
                if not s <= t < n:
                    raise ValueError("transitions must be monotone and in range")
        super().__init__()

    def initial(self) -> int:
        return 0

    def step(self, state: int, move: int) -> int:
        return self.transitions[state][min(move, self.value_cap)]

    def output(self, state: int) -> int:
        return self.outputs[state]


def seeded_machines(count: int = 20, seed: int = 2024) -> List[SaturatingMachine]:
    """Deterministic family of saturating machines for round-trip drills."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randrange(3, 7)
        cap = rng.randrange(1, 4)
        trans = []
        for s in range(n):
            trans.append([rng.randrange(s, n) for _ in range(cap + 1)])
        outputs = [rng.randrange(2) for _ in range(n)]
        out.append(SaturatingMachine(trans, outputs, cap, name=f"machine-{k}"))
    return out


# ---------------------------------------------------------------------------
# Named heuristics for the adversary drills
# ---------------------------------------------------------------------------


def _tail_zero_run(moves: Tuple[int, ...]) -> int:
    run = 0
    for m in reversed(moves):
        if m != 0:
            break
        run += 1
    return run


def _changes(moves: Tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(moves, moves[1:]) if a != b)


class _StickyZero(NatGuesser):
    """Claims 'eventually zero'; loses faith on a nonzero, regains it after
    three consecutive zeros."""

    name = "sticky-faith"

    def initial(self) -> Tuple[int, int]:
        return (1, 0)  # (belief bit, current zero run)

    def step(self, state: Tuple[int, int], move: int) -> Tuple[int, int]:
        belief, run = state
        if move != 0:
            return (0, 0)
        run += 1
        if run >= 3:
            belief = 1
        return (belief, run)

    def output(self, state: Tuple[int, int]) -> int:
        return state[0]


class _StubbornLate(NatGuesser):
    """Guesses 0 for ten moves, then 1 forever, ignoring the input."""

    name = "stubborn-after-ten"

    def initial(self) -> int:
        return 0

    def step(self, state: int, move: int) -> int:
        return state + 1

    def output(self, state: int) -> int:
        return 1 if state >= 10 else 0


def _h(fn: Callable[[Tuple[int, ...]], int], name: str) -> Callable[[], NatGuesser]:
    return lambda: FnGuesser(fn, name)


HEURISTICS: Dict[str, Callable[[], NatGuesser]] = {
    "last-is-zero": _h(lambda ms: not ms or ms[-1] == 0, "last-is-zero"),
    "always-one": lambda: ConstantGuesser(1, "always-one"),
    "always-zero": lambda: ConstantGuesser(0, "always-zero"),
    "tail-run-2": _h(lambda ms: _tail_zero_run(ms) >= 2, "tail-run-2"),
    "tail-run-3": _h(lambda ms: _tail_zero_run(ms) >= 3, "tail-run-3"),
    "tail-run-5": _h(lambda ms: _tail_zero_run(ms) >= 5, "tail-run-5"),
    "majority-zero": _h(lambda ms: sum(1 for m in ms if m == 0) * 2 > len(ms), "majority-zero"),
    "quiet-window-4": _h(lambda ms: all(m == 0 for m in ms[-4:]), "quiet-window-4"),
    "quiet-last-half": _h(
        lambda ms: all(m == 0 for m in ms[len(ms) // 2 :]), "quiet-last-half"
    ),
    "few-nonzeros": _h(lambda ms: sum(1 for m in ms if m != 0) <= 3, "few-nonzeros"),
    "last-two-equal": _h(lambda ms: len(ms) >= 2 and ms[-1] == ms[-2], "last-two-equal"),
    "constant-tail-3": _h(
        lambda ms: len(ms) >= 3 and ms[-1] == ms[-2] == ms[-3], "constant-tail-3"
    ),
    "all-equal-first": _h(lambda ms: all(m == ms[0] for m in ms) if ms else True, "all-equal-first"),
    "max-is-zero": _h(lambda ms: not ms or max(ms) == 0, "max-is-zero"),
    "early-quiet": _h(
        lambda ms: not ms or all(i < len(ms) // 2 for i, m in enumerate(ms) if m != 0),
        "early-quiet",
    ),
    "few-changes": _h(lambda ms: _changes(ms) <= 2, "few-changes"),
    "growing-calm": _h(
        lambda ms: _tail_zero_run(ms) * 3 >= len(ms), "growing-calm"
    ),
    "parity-of-flips": _h(lambda ms: _changes(ms) % 2 == 0, "parity-of-flips"),
    "sticky-faith": _StickyZero,
    "stubborn-after-ten": _StubbornLate,
}


def heuristic(name: str) -> NatGuesser:
    try:
        return HEURISTICS[name]()
    except KeyError:
        known = ", ".join(sorted(HEURISTICS))
        raise KeyError(f"unknown heuristic {name!r}; known: {known}") from None


def heuristic_names() -> Tuple[str, ...]:
    return tuple(HEURISTICS)
