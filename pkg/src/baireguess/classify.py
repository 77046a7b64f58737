"""Prenex normal form and arithmetical-shape classification of sentences.

A sentence's class is the number of quantifier-alternation blocks in its
prenex form plus which kind leads.  Level 0 (quantifier-free) counts as both
existential-led and universal-led at every higher level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .points import Point
from .sentences import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    PredApp,
    substitute_var_name,
)

EXISTS = "exists"
FORALL = "forall"


@dataclass(frozen=True)
class Prenex:
    blocks: Tuple[Tuple[str, str], ...]  # (kind, variable), outermost first
    matrix: Formula

    def to_formula(self) -> Formula:
        out = self.matrix
        for kind, var in reversed(self.blocks):
            out = Exists(var, out) if kind == EXISTS else Forall(var, out)
        return out


class _Fresh:
    def __init__(self) -> None:
        self.n = 0

    def __call__(self) -> str:
        name = f"q{self.n}"
        self.n += 1
        return name


def _flip(kind: str) -> str:
    return FORALL if kind == EXISTS else EXISTS


def prenex(phi: Formula) -> Prenex:
    """Prenex form with all bound variables renamed fresh, so pulled
    quantifiers can never capture."""
    fresh = _Fresh()

    def rec(psi: Formula) -> Tuple[List[Tuple[str, str]], Formula]:
        if isinstance(psi, (Eq, PredApp)):
            return [], psi
        if isinstance(psi, Not):
            blocks, matrix = rec(psi.body)
            return [(_flip(k), v) for k, v in blocks], Not(matrix)
        if isinstance(psi, (And, Or)):
            lb, lm = rec(psi.lhs)
            rb, rm = rec(psi.rhs)
            kind = And if isinstance(psi, And) else Or
            return lb + rb, kind(lm, rm)
        if isinstance(psi, (Exists, Forall)):
            u = fresh()
            body = substitute_var_name(psi.body, psi.var, u)
            blocks, matrix = rec(body)
            mine = EXISTS if isinstance(psi, Exists) else FORALL
            return [(mine, u)] + blocks, matrix
        raise TypeError(f"not a formula: {psi!r}")

    blocks, matrix = rec(phi)
    return Prenex(tuple(blocks), matrix)


@dataclass(frozen=True)
class SentenceClass:
    """level = number of alternation blocks; leading kind of the first block.

    level 0 means quantifier-free: it sits inside every class.
    """

    level: int
    leading: Optional[str]  # EXISTS / FORALL, None at level 0

    def is_existential_form(self, n: int) -> bool:
        if self.level < n or self.level == 0:
            return self.level <= n
        return self.level == n and self.leading == EXISTS

    def is_universal_form(self, n: int) -> bool:
        if self.level < n or self.level == 0:
            return self.level <= n
        return self.level == n and self.leading == FORALL

    def describe(self) -> str:
        if self.level == 0:
            return "quantifier-free"
        kind = "existential" if self.leading == EXISTS else "universal"
        return f"{kind}-led, {self.level} alternation block(s)"


def classify(phi: Formula) -> SentenceClass:
    pn = prenex(phi)
    blocks: List[str] = []
    for kind, _ in pn.blocks:
        if not blocks or blocks[-1] != kind:
            blocks.append(kind)
    if not blocks:
        return SentenceClass(0, None)
    return SentenceClass(len(blocks), blocks[0])


@dataclass(frozen=True)
class DeltaCertificate:
    """A pair of equivalent presentations: one existential-led, one
    universal-led, both at the stated level.  Shape is validated; the
    semantic equivalence is the certifier's claim and can be spot checked.
    """

    level: int
    existential_form: Formula
    universal_form: Formula

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("certificate level must be at least 1")
        if not classify(self.existential_form).is_existential_form(self.level):
            raise ValueError("first component is not in existential form at this level")
        if not classify(self.universal_form).is_universal_form(self.level):
            raise ValueError("second component is not in universal form at this level")

    def spot_check(self, points, fuel: int = 128, sig=None) -> List[Point]:
        """Points where both forms decide and disagree (should be empty)."""
        from .evaluate import DEFAULT_SIGNATURE, Truth, evaluate

        s = sig if sig is not None else DEFAULT_SIGNATURE
        bad: List[Point] = []
        for p in points:
            a = evaluate(self.existential_form, p, fuel, s)
            b = evaluate(self.universal_form, p, fuel, s)
            if Truth.UNKNOWN not in (a, b) and a is not b:
                bad.append(p)
        return bad
