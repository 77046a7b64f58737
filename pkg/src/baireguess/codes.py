"""Set codes over Baire space and a sound three-valued membership check.

A code denotes a subset of Baire space.  Indexed unions/intersections run
over countable families of child codes.  member() never lies: IN/OUT are
proofs, UNKNOWN means the fuel or the available certificates ran out.

Families can carry exact scan hooks.  A hook answers "is there a child
containing the point / omitting the point, and can absence be proven" or
"from some bound on, every child gives the same verdict".   Hooks let
membership decide infinite unions and intersections that a bounded scan
alone never could.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple
from weakref import WeakKeyDictionary

from .evaluate import DEFAULT_FUEL, DEFAULT_SIGNATURE, Truth, UndecidedError, collapse_range, evaluate
from .points import Point
from .sentences import (
    Const,
    Exists,
    Formula,
    Not,
    is_quantifier_free,
    negate,
    substitute,
)
from .signature import Signature


class Verdict(enum.Enum):
    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown"

    def flipped(self) -> "Verdict":
        if self is Verdict.IN:
            return Verdict.OUT
        if self is Verdict.OUT:
            return Verdict.IN
        return Verdict.UNKNOWN


@dataclass(frozen=True)
class ScanResult:
    """Outcome of an exact family scan.

    witness: index of a child with the scanned property (need not be least);
    exhausted: True asserts no child anywhere has the property.
    """

    witness: Optional[int] = None
    exhausted: bool = False


class Family:
    """Countable family of codes, child(0), child(1), ...

    Subclasses may override the three hook methods with exact answers; the
    defaults decline.  Hook answers must be sound for every fuel.
    """

    def child(self, i: int) -> "Code":
        raise NotImplementedError

    def first_in_child(self, point: Point, fuel: int, sig: Signature) -> Optional[ScanResult]:
        return None

    def first_out_child(self, point: Point, fuel: int, sig: Signature) -> Optional[ScanResult]:
        return None

    def tail_verdict(self, point: Point, fuel: int, sig: Signature) -> Optional[Tuple[int, Verdict]]:
        """(bound, v) asserts: point-in-child(i) has verdict v for ALL i >= bound."""
        return None

    def describe(self) -> str:
        return type(self).__name__


# ---------------------------------------------------------------------------
# Code nodes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cylinder:
    prefix: Tuple[int, ...]


@dataclass(frozen=True)
class CoCylinder:
    prefix: Tuple[int, ...]


@dataclass(frozen=True)
class FiniteUnion:
    items: Tuple["Code", ...]


@dataclass(frozen=True)
class FiniteIntersection:
    items: Tuple["Code", ...]


@dataclass(frozen=True)
class IndexedUnion:
    family: Family


@dataclass(frozen=True)
class IndexedIntersection:
    family: Family


@dataclass(frozen=True)
class SentenceLeaf:
    sentence: Formula

    def __post_init__(self) -> None:
        if not is_quantifier_free(self.sentence):
            raise ValueError("SentenceLeaf requires a quantifier-free sentence")


@dataclass(frozen=True)
class GuessEvent:
    """Points whose fact stream makes the guesser output `desired` at `round`.

    guesser maps bit tuples to bits; listing supplies sentence(i).  Both are
    held opaquely so code nodes stay decoupled from the guessing machinery.
    """

    guesser: object
    listing: object
    round: int
    desired: int


Code = object  # union of the node classes above; kept loose for simplicity


# ---------------------------------------------------------------------------
# Complement in negation normal form
# ---------------------------------------------------------------------------


class ComplementFamily(Family):
    def __init__(self, inner: Family):
        self.inner = inner

    def child(self, i: int) -> Code:
        return complement(self.inner.child(i))

    def first_in_child(self, point, fuel, sig):
        return self.inner.first_out_child(point, fuel, sig)

    def first_out_child(self, point, fuel, sig):
        return self.inner.first_in_child(point, fuel, sig)

    def tail_verdict(self, point, fuel, sig):
        got = self.inner.tail_verdict(point, fuel, sig)
        if got is None:
            return None
        bound, v = got
        return bound, v.flipped()

    def describe(self) -> str:
        return f"complement-of({self.inner.describe()})"


def complement(code: Code) -> Code:
    if isinstance(code, Cylinder):
        return CoCylinder(code.prefix)
    if isinstance(code, CoCylinder):
        return Cylinder(code.prefix)
    if isinstance(code, FiniteUnion):
        return FiniteIntersection(tuple(complement(c) for c in code.items))
    if isinstance(code, FiniteIntersection):
        return FiniteUnion(tuple(complement(c) for c in code.items))
    if isinstance(code, IndexedUnion):
        return IndexedIntersection(ComplementFamily(code.family))
    if isinstance(code, IndexedIntersection):
        return IndexedUnion(ComplementFamily(code.family))
    if isinstance(code, SentenceLeaf):
        return SentenceLeaf(negate(code.sentence))
    if isinstance(code, GuessEvent):
        return GuessEvent(code.guesser, code.listing, code.round, 1 - code.desired)
    raise TypeError(f"not a code: {code!r}")


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


# fact bits are shared across every GuessEvent over the same listing: the
# member() scans revisit the same (listing, point) pair once per round
_EVENT_STREAMS: "WeakKeyDictionary[object, dict]" = WeakKeyDictionary()


def _event_bits(listing, point: Point, fuel: int, sig: Signature, n: int) -> Tuple[int, ...]:
    from .listing import FactStream  # deferred: listing imports this module

    per = _EVENT_STREAMS.get(listing)
    if per is None:
        per = {}
        _EVENT_STREAMS[listing] = per
    key = (point, fuel, id(sig))
    stream = per.get(key)
    if stream is None:
        stream = FactStream(listing, point, fuel, sig)
        per[key] = stream
    return stream.bits_through(n)


def _guess_event_verdict(code: GuessEvent, point: Point, fuel: int, sig: Signature) -> Verdict:
    try:
        bits = _event_bits(code.listing, point, fuel, sig, code.round)
    except UndecidedError:
        return Verdict.UNKNOWN
    got = code.guesser(bits)
    return Verdict.IN if got == code.desired else Verdict.OUT


def member(
    code: Code,
    point: Point,
    fuel: int = DEFAULT_FUEL,
    sig: Signature = DEFAULT_SIGNATURE,
) -> Verdict:
    if isinstance(code, Cylinder):
        return Verdict.IN if point.extends(code.prefix) else Verdict.OUT
    if isinstance(code, CoCylinder):
        return Verdict.OUT if point.extends(code.prefix) else Verdict.IN
    if isinstance(code, SentenceLeaf):
        r = evaluate(code.sentence, point, fuel, sig)
        if r is Truth.UNKNOWN:  # unreachable for quantifier-free leaves
            return Verdict.UNKNOWN
        return Verdict.IN if r is Truth.TRUE else Verdict.OUT
    if isinstance(code, GuessEvent):
        return _guess_event_verdict(code, point, fuel, sig)
    if isinstance(code, FiniteUnion):
        saw_unknown = False
        for c in code.items:
            v = member(c, point, fuel, sig)
            if v is Verdict.IN:
                return Verdict.IN
            if v is Verdict.UNKNOWN:
                saw_unknown = True
        return Verdict.UNKNOWN if saw_unknown else Verdict.OUT
    if isinstance(code, FiniteIntersection):
        saw_unknown = False
        for c in code.items:
            v = member(c, point, fuel, sig)
            if v is Verdict.OUT:
                return Verdict.OUT
            if v is Verdict.UNKNOWN:
                saw_unknown = True
        return Verdict.UNKNOWN if saw_unknown else Verdict.IN
    if isinstance(code, IndexedUnion):
        return _indexed_verdict(code.family, point, fuel, sig, union=True)
    if isinstance(code, IndexedIntersection):
        return _indexed_verdict(code.family, point, fuel, sig, union=False)
    raise TypeError(f"not a code: {code!r}")


def _indexed_verdict(fam: Family, point: Point, fuel: int, sig: Signature, union: bool) -> Verdict:
    short = Verdict.IN if union else Verdict.OUT  # verdict a single child can force
    scan = fam.first_in_child(point, fuel, sig) if union else fam.first_out_child(point, fuel, sig)
    if scan is not None:
        if scan.witness is not None:
            return short
        if scan.exhausted:
            return short.flipped()

    tail = fam.tail_verdict(point, fuel, sig)
    if tail is not None:
        bound, v = tail
        if v is short:
            return short
        if v is not Verdict.UNKNOWN and bound <= fuel:
            # decide by finishing the finite part
            all_opposite = True
            for i in range(bound):
                got = member(fam.child(i), point, fuel, sig)
                if got is short:
                    return short
                if got is Verdict.UNKNOWN:
                    all_opposite = False
            if all_opposite:
                return short.flipped()
            return Verdict.UNKNOWN

    for i in range(fuel):
        if member(fam.child(i), point, fuel, sig) is short:
            return short
    return Verdict.UNKNOWN


# ---------------------------------------------------------------------------
# Stock families
# ---------------------------------------------------------------------------


class ExplicitTailFamily(Family):
    """Finitely many explicit children, then a constant tail code."""

    def __init__(self, items: Sequence[Code], tail: Code):
        self.items = tuple(items)
        self.tail = tail

    def child(self, i: int) -> Code:
        return self.items[i] if i < len(self.items) else self.tail

    def tail_verdict(self, point, fuel, sig):
        v = member(self.tail, point, fuel, sig)
        if v is Verdict.UNKNOWN:
            return None
        return len(self.items), v

    def describe(self) -> str:
        return f"explicit[{len(self.items)} items, then tail]"

    # declarative value: compare by content so codes round-trip the DSL
    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExplicitTailFamily)
            and self.items == other.items
            and self.tail == other.tail
        )

    def __hash__(self) -> int:
        return hash((ExplicitTailFamily, self.items, self.tail))


class FnFamily(Family):
    """Programmatic family; optional hook callables."""

    def __init__(
        self,
        fn: Callable[[int], Code],
        description: str = "fn-family",
        first_in: Optional[Callable[[Point, int, Signature], Optional[ScanResult]]] = None,
        first_out: Optional[Callable[[Point, int, Signature], Optional[ScanResult]]] = None,
        tail: Optional[Callable[[Point, int, Signature], Optional[Tuple[int, Verdict]]]] = None,
    ):
        self.fn = fn
        self.description = description
        self._first_in = first_in
        self._first_out = first_out
        self._tail = tail

    def child(self, i: int) -> Code:
        return self.fn(i)

    def first_in_child(self, point, fuel, sig):
        return self._first_in(point, fuel, sig) if self._first_in else None

    def first_out_child(self, point, fuel, sig):
        return self._first_out(point, fuel, sig) if self._first_out else None

    def tail_verdict(self, point, fuel, sig):
        return self._tail(point, fuel, sig) if self._tail else None

    def describe(self) -> str:
        return self.description


class SubstitutionFamily(Family):
    """child(i) = the quantifier-free body with the variable set to i.

    When the body lives in the pure {f, =} fragment, both scans are exact:
    the quantifier collapse bounds where a witness can first appear.
    """

    def __init__(self, var: str, body: Formula, sig: Signature = DEFAULT_SIGNATURE):
        if not is_quantifier_free(body):
            raise ValueError("substitution family needs a quantifier-free body")
        self.var = var
        self.body = body
        self.sig = sig

    def child(self, i: int) -> Code:
        return SentenceLeaf(substitute(self.body, self.var, Const(i)))

    def _scan(self, point: Point, fuel: int, sig: Signature, want: Verdict) -> Optional[ScanResult]:
        bound = collapse_range(Exists(self.var, self.body), point, {})
        limit = bound if bound is not None else fuel
        for i in range(limit):
            v = member(self.child(i), point, fuel, sig)
            if v is want:
                return ScanResult(witness=i)
        if bound is not None:
            return ScanResult(exhausted=True)
        return None

    def first_in_child(self, point, fuel, sig):
        return self._scan(point, fuel, sig, Verdict.IN)

    def first_out_child(self, point, fuel, sig):
        return self._scan(point, fuel, sig, Verdict.OUT)

    def describe(self) -> str:
        return f"substitute[{self.var}]"


class ConstantFamily(Family):
    """Every child is the same code."""

    def __init__(self, code: Code):
        self.code = code

    def child(self, i: int) -> Code:
        return self.code

    def tail_verdict(self, point, fuel, sig):
        v = member(self.code, point, fuel, sig)
        return None if v is Verdict.UNKNOWN else (0, v)

    def describe(self) -> str:
        return "constant"


# ---------------------------------------------------------------------------
# Coarse syntactic level, for display and normal-form checks
# ---------------------------------------------------------------------------


def syntactic_level(code: Code) -> Tuple[int, int]:
    """(union_led_level, intersection_led_level), probing child(0) of
    indexed nodes.  Display-quality only; families are level-uniform by
    construction everywhere this package builds them."""
    if isinstance(code, (Cylinder, CoCylinder, SentenceLeaf, GuessEvent)):
        return (1, 1)
    if isinstance(code, (FiniteUnion, FiniteIntersection)):
        if not code.items:
            return (1, 1)
        pairs = [syntactic_level(c) for c in code.items]
        return (max(s for s, _ in pairs), max(p for _, p in pairs))
    if isinstance(code, IndexedUnion):
        s, p = syntactic_level(code.family.child(0))
        sigma = min(s, p + 1)
        return (sigma, sigma + 1)
    if isinstance(code, IndexedIntersection):
        s, p = syntactic_level(code.family.child(0))
        pi = min(p, s + 1)
        return (pi + 1, pi)
    raise TypeError(f"not a code: {code!r}")
