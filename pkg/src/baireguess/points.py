"""Eventually periodic points of Baire space.

A Point is an infinite sequence of naturals presented as a finite preamble
followed by a repeating nonempty period.  Construction canonicalizes: the
period is reduced to its primitive root and trailing preamble values that
merely pre-play the period are absorbed into it.  The canonical form of an
eventually periodic sequence is unique, so structural equality coincides
with pointwise equality; ``same_function`` cross-checks that by unrolling
both presentations to the classical bound |pre1| + |pre2| + lcm(|per1|, |per2|).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Tuple

Prefix = Tuple[int, ...]


def _primitive_root(per: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            return per[:d]
    return per  # unreachable


@dataclass(frozen=True)
class Point:
    """An eventually periodic f : N -> N in canonical (preamble, period) form."""

    pre: Prefix
    per: Prefix

    def __init__(self, pre: Iterable[int] = (), per: Iterable[int] = ()) -> None:
        pre = tuple(int(v) for v in pre)
        per = tuple(int(v) for v in per)
        if not per:
            raise ValueError("period must be nonempty")
        if any(v < 0 for v in pre) or any(v < 0 for v in per):
            raise ValueError("point values must be naturals")
        per = _primitive_root(per)
        pre_l = list(pre)
        per_l = list(per)
        while pre_l and pre_l[-1] == per_l[-1]:
            per_l.insert(0, per_l.pop())
            pre_l.pop()
        object.__setattr__(self, "pre", tuple(pre_l))
        object.__setattr__(self, "per", tuple(per_l))

    @classmethod
    def constant(cls, v: int) -> "Point":
        return cls((), (v,))

    def at(self, n: int) -> int:
        """Value f(n); total for every natural n."""
        if n < 0:
            raise ValueError("index must be a natural")
        if n < len(self.pre):
            return self.pre[n]
        return self.per[(n - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> Prefix:
        """First n values (f(0), ..., f(n-1))."""
        return tuple(self.at(i) for i in range(n))

    def extends(self, s: Iterable[int]) -> bool:
        """Does this point pass through the finite prefix s?"""
        s = tuple(s)
        return self.prefix(len(s)) == s

    def values(self) -> frozenset:
        """All values the point ever takes."""
        return frozenset(self.pre) | frozenset(self.per)

    def same_function(self, other: "Point") -> bool:
        """Pointwise equality decided by unrolling to the classical bound."""
        bound = len(self.pre) + len(other.pre) + lcm(len(self.per), len(other.per))
        return all(self.at(i) == other.at(i) for i in range(bound))

    def describe(self) -> str:
        pre = " ".join(str(v) for v in self.pre)
        per = " ".join(str(v) for v in self.per)
        return f"(point :pre ({pre}) :per ({per}))"


def extends(p: Point, s: Iterable[int]) -> bool:
    return p.extends(s)
