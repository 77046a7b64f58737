"""Benchmark subsets of Baire space.

Each catalog entry has an exact membership oracle on eventually periodic
points.  The entries that sit at the bottom of the difference hierarchy also
carry a dual presentation: a union-of-intersections and an
intersection-of-unions over cylinder/co-cylinder leaves, plus the
certificate analytics (least failing/witnessing leaf per row) that make
membership and guesser synthesis exact.

Leaf enumerations use the sum-shell sequence codecs, so the certificate
index of a small-valued prefix stays small; fact-listing budgets depend on
that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .codes import (
    CoCylinder,
    Code,
    Cylinder,
    Family,
    FiniteIntersection,
    FiniteUnion,
    IndexedIntersection,
    IndexedUnion,
    ScanResult,
    SentenceLeaf,
)
from .pairing import (
    composition_count,
    composition_rank,
    composition_unrank,
    subset_count,
    subset_rank,
    subset_unrank,
)
from .points import Point
from .sentences import Formula, Not, conj, disj, prefix_sentence

Seq = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Zero bookkeeping on eventually periodic points
# ---------------------------------------------------------------------------


def zeros_in(seq: Sequence[int]) -> int:
    return sum(1 for v in seq if v == 0)


def has_infinitely_many_zeros(p: Point) -> bool:
    return 0 in p.per


def total_zeros(p: Point) -> Optional[int]:
    """Number of zeros, None when infinite."""
    if has_infinitely_many_zeros(p):
        return None
    return zeros_in(p.pre)


def kth_zero(p: Point, k: int) -> Optional[int]:
    """Position of the k-th zero (k >= 1), None if there are fewer."""
    if k < 1:
        raise ValueError("k must be at least 1")
    seen = 0
    for i, v in enumerate(p.pre):
        if v == 0:
            seen += 1
            if seen == k:
                return i
    offsets = [i for i, v in enumerate(p.per) if v == 0]
    if not offsets:
        return None
    idx = k - seen - 1
    cycle, off = divmod(idx, len(offsets))
    return len(p.pre) + cycle * len(p.per) + offsets[off]


def first_zero_at_or_after(p: Point, n: int) -> Optional[int]:
    for i in range(n, len(p.pre)):
        if p.pre[i] == 0:
            return i
    start = max(n, len(p.pre))
    for j in range(start, start + len(p.per)):
        if p.at(j) == 0:
            return j
    return None


def last_zero(p: Point) -> Optional[int]:
    """Position of the final zero; requires finitely many zeros."""
    if has_infinitely_many_zeros(p):
        raise ValueError("point has infinitely many zeros")
    pos = None
    for i, v in enumerate(p.pre):
        if v == 0:
            pos = i
    return pos


# ---------------------------------------------------------------------------
# Prefix streams: deterministic enumerations of leaf prefixes
# ---------------------------------------------------------------------------


class FixedLenZeroStream:
    """Length-n sequences whose zero count lies in `allowed`.

    Shells by total sum; inside a shell, fewer zeros first, then zero
    positions lexicographically, then the nonzero values in lex order.
    Degenerates to the single all-zeros sequence when allowed == {n}.
    """

    def __init__(self, n: int, allowed: Sequence[int]):
        self.n = n
        self.branches = tuple(sorted(set(allowed)))
        if any(z < 0 or z > n for z in self.branches):
            raise ValueError("zero counts must lie in 0..n")
        if not self.branches:
            raise ValueError("empty branch set; drop the stream instead")
        self.total = 1 if self.branches == (n,) else None

    def _cell(self, z: int, s: int) -> int:
        free = self.n - z
        if s < free:
            return 0
        return subset_count(self.n, z) * composition_count(s - free, free)

    def shell_count(self, s: int) -> int:
        return sum(self._cell(z, s) for z in self.branches)

    def unrank(self, r: int) -> Seq:
        if self.total == 1:
            return (0,) * self.n
        s = 0
        while True:
            shell = self.shell_count(s)
            if r < shell:
                for z in self.branches:
                    c = self._cell(z, s)
                    if r < c:
                        free = self.n - z
                        per = composition_count(s - free, free)
                        pos_rank, comp_r = divmod(r, per)
                        positions = set(subset_unrank(self.n, z, pos_rank))
                        values = [
                            v + 1
                            for v in composition_unrank(s - free, free, comp_r)
                        ]
                        out: List[int] = []
                        it = iter(values)
                        for i in range(self.n):
                            out.append(0 if i in positions else next(it))
                        return tuple(out)
                    r -= c
            r -= shell
            s += 1

    def rank(self, seq: Seq) -> Optional[int]:
        if len(seq) != self.n:
            return None
        z = zeros_in(seq)
        if z not in self.branches:
            return None
        if self.total == 1:
            return 0
        s = sum(seq)
        r = 0
        for s2 in range(s):
            r += self.shell_count(s2)
        for z2 in self.branches:
            if z2 == z:
                break
            r += self._cell(z2, s)
        free = self.n - z
        per = composition_count(s - free, free)
        positions = tuple(i for i, v in enumerate(seq) if v == 0)
        values = tuple(v - 1 for v in seq if v != 0)
        r += subset_rank(self.n, positions) * per + composition_rank(values)
        return r


class BadPrefixStream:
    """Spoilers for a union row cut at n: length-n sequences whose zero
    count lies in `allowed`, plus every longer sequence ending in a zero.

    Graded by sum + (length - n), so a low-sum spoiler keeps a small index
    no matter which branch it comes from; inside a grade, the length-n items
    come first, then longer ones by length, free parts in lex order.
    """

    total: Optional[int] = None

    def __init__(self, n: int, allowed: Sequence[int]):
        self.n = n
        self.fixed = FixedLenZeroStream(n, allowed) if allowed else None

    def _fixed_cell(self, s: int) -> int:
        return self.fixed.shell_count(s) if self.fixed is not None else 0

    def _long_cell(self, g: int, extra: int) -> int:
        s = g - (extra + 1)
        if s < 0:
            return 0
        return composition_count(s, self.n + extra)

    def _shell(self, g: int) -> int:
        return self._fixed_cell(g) + sum(self._long_cell(g, e) for e in range(g))

    def unrank(self, r: int) -> Seq:
        g = 0
        fixed_prior = 0
        while True:
            fc = self._fixed_cell(g)
            shell = fc + sum(self._long_cell(g, e) for e in range(g))
            if r < shell:
                if r < fc:
                    return self.fixed.unrank(fixed_prior + r)
                r -= fc
                for extra in range(g):
                    c = self._long_cell(g, extra)
                    if r < c:
                        free = composition_unrank(g - extra - 1, self.n + extra, r)
                        return free + (0,)
                    r -= c
            r -= shell
            fixed_prior += fc
            g += 1

    def rank(self, seq: Seq) -> Optional[int]:
        if len(seq) == self.n:
            if self.fixed is None:
                return None
            fr = self.fixed.rank(seq)
            if fr is None:
                return None
            g = sum(seq)
            prior_bad = sum(self._shell(g2) for g2 in range(g))
            prior_fixed = sum(self._fixed_cell(g2) for g2 in range(g))
            return prior_bad + (fr - prior_fixed)
        if len(seq) > self.n and seq[-1] == 0:
            extra = len(seq) - self.n - 1
            g = sum(seq) + extra + 1
            r = sum(self._shell(g2) for g2 in range(g))
            r += self._fixed_cell(g)
            for e2 in range(extra):
                r += self._long_cell(g, e2)
            return r + composition_rank(seq[:-1])
        return None


class ExactZeroStream:
    """All finite sequences with exactly z zeros; shells by length + sum."""

    total: Optional[int] = None

    def __init__(self, z: int):
        self.z = z

    def _cell_count(self, ln: int, s: int) -> int:
        free = ln - self.z
        if free < 0 or s < free:
            return 0
        return subset_count(ln, self.z) * composition_count(s - free, free)

    def unrank(self, r: int) -> Seq:
        t = 0
        while True:
            for ln in range(self.z, t + 1):
                s = t - ln
                c = self._cell_count(ln, s)
                if r < c:
                    free = ln - self.z
                    per_subset = composition_count(s - free, free)
                    pos_rank, comp_rank = divmod(r, per_subset)
                    positions = set(subset_unrank(ln, self.z, pos_rank))
                    values = [
                        v + 1
                        for v in composition_unrank(s - free, free, comp_rank)
                    ]
                    out: List[int] = []
                    it = iter(values)
                    for i in range(ln):
                        out.append(0 if i in positions else next(it))
                    return tuple(out)
                r -= c
            t += 1

    def rank(self, seq: Seq) -> Optional[int]:
        if zeros_in(seq) != self.z:
            return None
        ln, s = len(seq), sum(seq)
        t = ln + s
        r = 0
        for t2 in range(t):
            for ln2 in range(self.z, t2 + 1):
                r += self._cell_count(ln2, t2 - ln2)
        for ln2 in range(self.z, ln):
            r += self._cell_count(ln2, t - ln2)
        free = ln - self.z
        positions = tuple(i for i, v in enumerate(seq) if v == 0)
        values = tuple(v - 1 for v in seq if v != 0)
        per_subset = composition_count(s - free, free)
        r += subset_rank(ln, positions) * per_subset + composition_rank(values)
        return r


class OffDiagonalPairStream:
    """Pairs (a, b) with a != b; shells by a + b, lexicographic inside."""

    total: Optional[int] = None

    @staticmethod
    def _shell_size(s: int) -> int:
        return s + 1 - (1 if s % 2 == 0 else 0)

    def unrank(self, r: int) -> Seq:
        s = 0
        while True:
            c = self._shell_size(s)
            if r < c:
                if s % 2 == 0 and r >= s // 2:
                    r += 1
                return (r, s - r)
            r -= c
            s += 1

    def rank(self, seq: Seq) -> Optional[int]:
        if len(seq) != 2 or seq[0] == seq[1]:
            return None
        a, b = seq
        s = a + b
        r = sum(self._shell_size(s2) for s2 in range(s))
        inside = a
        if s % 2 == 0 and a > s // 2:
            inside -= 1
        return r + inside


class ConstantStream:
    """The same prefix at every index."""

    total = 1

    def __init__(self, seq: Seq):
        self.seq = tuple(seq)

    def unrank(self, r: int) -> Seq:
        return self.seq

    def rank(self, seq: Seq) -> Optional[int]:
        return 0 if tuple(seq) == self.seq else None


# ---------------------------------------------------------------------------
# Certificate systems and dual presentations
# ---------------------------------------------------------------------------


def leaf_sentence(code: Code) -> Formula:
    """Quantifier-free sentence defining a clopen code (leaves and finite combos)."""
    if isinstance(code, Cylinder):
        return prefix_sentence(code.prefix)
    if isinstance(code, CoCylinder):
        return Not(prefix_sentence(code.prefix))
    if isinstance(code, SentenceLeaf):
        return code.sentence
    if isinstance(code, FiniteUnion):
        return disj([leaf_sentence(c) for c in code.items])
    if isinstance(code, FiniteIntersection):
        return conj([leaf_sentence(c) for c in code.items])
    raise TypeError(f"not a clopen code: {code!r}")


class CertSystem:
    """Rows of leaves with exact per-row analytics.

    Union side:        S = union over x of (intersection over y of D(x, y)).
    Intersection side: S = intersection over x of (union over y of E(x, y)).
    first_d_miss(x, p): least y with p outside D(x, y), None = provably never.
    first_e_hit(x, p):  least y with p inside  E(x, y), None = provably never.
    union_witness(p):           some x whose D-row fully contains p, or exhausted.
    intersection_out_witness(p): some x whose E-row misses p entirely, or exhausted.
    """

    def d_leaf(self, x: int, y: int) -> Code:
        raise NotImplementedError

    def e_leaf(self, x: int, y: int) -> Code:
        raise NotImplementedError

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        raise NotImplementedError

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        raise NotImplementedError

    def union_witness(self, p: Point) -> ScanResult:
        raise NotImplementedError

    def intersection_out_witness(self, p: Point) -> ScanResult:
        raise NotImplementedError

    def d_row_tail(self, x: int, p: Point):
        """Optional (bound, Verdict) tail fact for row D(x, .)."""
        raise NotImplementedError

    def e_row_tail(self, x: int, p: Point):
        raise NotImplementedError

    def sigma(self, x: int, y: int) -> Formula:
        return leaf_sentence(self.d_leaf(x, y))

    def tau(self, x: int, y: int) -> Formula:
        return leaf_sentence(self.e_leaf(x, y))


class _InnerDRow(Family):
    def __init__(self, cert: CertSystem, x: int):
        self.cert = cert
        self.x = x

    def child(self, y: int) -> Code:
        return self.cert.d_leaf(self.x, y)

    def first_out_child(self, point, fuel, sig):
        try:
            y = self.cert.first_d_miss(self.x, point)
        except NotImplementedError:
            return None
        if y is None:
            return ScanResult(exhausted=True)
        return ScanResult(witness=y)

    def tail_verdict(self, point, fuel, sig):
        try:
            return self.cert.d_row_tail(self.x, point)
        except NotImplementedError:
            return None

    def describe(self) -> str:
        return f"d-row[{self.x}]"


class _OuterD(Family):
    def __init__(self, cert: CertSystem):
        self.cert = cert

    def child(self, x: int) -> Code:
        return IndexedIntersection(_InnerDRow(self.cert, x))

    def first_in_child(self, point, fuel, sig):
        try:
            return self.cert.union_witness(point)
        except NotImplementedError:
            return None

    def describe(self) -> str:
        return "d-rows"


class _InnerERow(Family):
    def __init__(self, cert: CertSystem, x: int):
        self.cert = cert
        self.x = x

    def child(self, y: int) -> Code:
        return self.cert.e_leaf(self.x, y)

    def first_in_child(self, point, fuel, sig):
        try:
            y = self.cert.first_e_hit(self.x, point)
        except NotImplementedError:
            return None
        if y is None:
            return ScanResult(exhausted=True)
        return ScanResult(witness=y)

    def tail_verdict(self, point, fuel, sig):
        try:
            return self.cert.e_row_tail(self.x, point)
        except NotImplementedError:
            return None

    def describe(self) -> str:
        return f"e-row[{self.x}]"


class _OuterE(Family):
    def __init__(self, cert: CertSystem):
        self.cert = cert

    def child(self, x: int) -> Code:
        return IndexedUnion(_InnerERow(self.cert, x))

    def first_out_child(self, point, fuel, sig):
        try:
            return self.cert.intersection_out_witness(point)
        except NotImplementedError:
            return None

    def describe(self) -> str:
        return "e-rows"


@dataclass
class DeltaPrimePair:
    """A set presented both ways at once: union_form = U_x I_y D(x,y) and
    intersection_form = I_x U_y E(x,y).

    level is the level of the inner codes D/E (0 = clopen leaves).  The
    class order of the pair as a whole is level + 2: clopen-leaf pairs are
    order 2, pairs over level-1 inner codes are order 3, and so on.
    """

    name: str
    params: Dict[str, object]
    union_form: Code
    intersection_form: Code
    level: int = 0
    cert: Optional[CertSystem] = None
    oracle: Optional[Callable[[Point], bool]] = None

    @property
    def class_order(self) -> int:
        return self.level + 2

    def describe(self) -> str:
        bits = [f"{k} {v}" for k, v in sorted(self.params.items())]
        inner = f" ({', '.join(bits)})" if bits else ""
        return f"pair[{self.name}{inner}, order {self.class_order}]"


def standard_form_cert(union_form: Code, intersection_form: Code) -> CertSystem:
    """Recover the certificate system shared by a pair's two standard forms;
    raises when the forms are not certificate-backed or disagree."""
    fu = getattr(union_form, "family", None)
    fi = getattr(intersection_form, "family", None)
    if isinstance(fu, _OuterD) and isinstance(fi, _OuterE) and fu.cert is fi.cert:
        return fu.cert
    raise ValueError("expected the two standard forms of one certificate-backed pair")


def build_pair(name: str, params: Dict[str, object], cert: CertSystem, oracle) -> DeltaPrimePair:
    return DeltaPrimePair(
        name=name,
        params=params,
        union_form=IndexedUnion(_OuterD(cert)),
        intersection_form=IndexedIntersection(_OuterE(cert)),
        level=0,
        cert=cert,
        oracle=oracle,
    )


# --- concrete certificate systems ------------------------------------------


class ExactZerosCert(CertSystem):
    """Exactly k zeros.  Union rows: 'all zeros shown by N, count right'.
    Intersection rows: 'at least k somewhere' and 'at most k in each prefix'."""

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("k must be a natural")
        self.k = k
        self._bad: Dict[int, BadPrefixStream] = {}
        self._good: Dict[int, FixedLenZeroStream] = {}
        self._witness = None if k == 0 else ExactZeroStream(k - 1)

    def _bad_stream(self, n: int) -> BadPrefixStream:
        if n not in self._bad:
            allowed = tuple(z for z in range(n + 1) if z != self.k)
            self._bad[n] = BadPrefixStream(n, allowed)
        return self._bad[n]

    def _good_stream(self, n: int) -> FixedLenZeroStream:
        if n not in self._good:
            self._good[n] = FixedLenZeroStream(n, range(min(self.k, n) + 1))
        return self._good[n]

    def d_leaf(self, x: int, y: int) -> Code:
        return CoCylinder(self._bad_stream(x).unrank(y))

    def e_leaf(self, x: int, y: int) -> Code:
        if x == 0:
            if self.k == 0:
                return Cylinder(())
            return Cylinder(self._witness.unrank(y) + (0,))
        return Cylinder(self._good_stream(x - 1).unrank(y))

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        stream = self._bad_stream(x)
        candidates = []
        pref = p.prefix(x)
        if zeros_in(pref) != self.k:
            candidates.append(stream.rank(pref))
        j = first_zero_at_or_after(p, x)
        if j is not None:
            candidates.append(stream.rank(p.prefix(j + 1)))
        candidates = [c for c in candidates if c is not None]
        return min(candidates) if candidates else None

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        if x == 0:
            if self.k == 0:
                return 0
            pos = kth_zero(p, self.k)
            if pos is None:
                return None
            return self._witness.rank(p.prefix(pos))
        pref = p.prefix(x - 1)
        if zeros_in(pref) > self.k:
            return None
        return self._good_stream(x - 1).rank(pref)

    def union_witness(self, p: Point) -> ScanResult:
        tz = total_zeros(p)
        if tz != self.k:
            return ScanResult(exhausted=True)
        if self.k == 0:
            return ScanResult(witness=0)
        return ScanResult(witness=kth_zero(p, self.k) + 1)

    def intersection_out_witness(self, p: Point) -> ScanResult:
        tz = total_zeros(p)
        if tz is not None and tz < self.k:
            return ScanResult(witness=0)
        if tz is None or tz > self.k:
            return ScanResult(witness=kth_zero(p, self.k + 1) + 2)
        return ScanResult(exhausted=True)


class AtMostZerosCert(CertSystem):
    """At most k zeros."""

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("k must be a natural")
        self.k = k
        self._bad: Dict[int, BadPrefixStream] = {}
        self._good: Dict[int, FixedLenZeroStream] = {}

    def _bad_stream(self, n: int) -> BadPrefixStream:
        if n not in self._bad:
            allowed = tuple(range(self.k + 1, n + 1))
            self._bad[n] = BadPrefixStream(n, allowed)
        return self._bad[n]

    def _good_stream(self, n: int) -> FixedLenZeroStream:
        if n not in self._good:
            self._good[n] = FixedLenZeroStream(n, range(min(self.k, n) + 1))
        return self._good[n]

    def d_leaf(self, x: int, y: int) -> Code:
        return CoCylinder(self._bad_stream(x).unrank(y))

    def e_leaf(self, x: int, y: int) -> Code:
        return Cylinder(self._good_stream(x).unrank(y))

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        stream = self._bad_stream(x)
        candidates = []
        pref = p.prefix(x)
        if zeros_in(pref) > self.k:
            candidates.append(stream.rank(pref))
        j = first_zero_at_or_after(p, x)
        if j is not None:
            candidates.append(stream.rank(p.prefix(j + 1)))
        candidates = [c for c in candidates if c is not None]
        return min(candidates) if candidates else None

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        pref = p.prefix(x)
        if zeros_in(pref) > self.k:
            return None
        return self._good_stream(x).rank(pref)

    def union_witness(self, p: Point) -> ScanResult:
        tz = total_zeros(p)
        if tz is None or tz > self.k:
            return ScanResult(exhausted=True)
        lz = last_zero(p)
        return ScanResult(witness=0 if lz is None else lz + 1)

    def intersection_out_witness(self, p: Point) -> ScanResult:
        tz = total_zeros(p)
        if tz is not None and tz <= self.k:
            return ScanResult(exhausted=True)
        return ScanResult(witness=kth_zero(p, self.k + 1) + 1)


class FirstValueCert(CertSystem):
    """f(0) = c.  Row 0 does the work; higher rows are degenerate."""

    def __init__(self, c: int):
        self.c = c

    def _other(self, y: int) -> int:
        return y if y < self.c else y + 1

    def d_leaf(self, x: int, y: int) -> Code:
        if x == 0:
            return CoCylinder((self._other(y),))
        return CoCylinder(())

    def e_leaf(self, x: int, y: int) -> Code:
        return Cylinder((self.c,) if x == 0 else ())

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        if x != 0:
            return 0
        a = p.at(0)
        if a == self.c:
            return None
        return a if a < self.c else a - 1

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        if x != 0:
            return 0
        return 0 if p.at(0) == self.c else None

    def union_witness(self, p: Point) -> ScanResult:
        if p.at(0) == self.c:
            return ScanResult(witness=0)
        return ScanResult(exhausted=True)

    def intersection_out_witness(self, p: Point) -> ScanResult:
        if p.at(0) == self.c:
            return ScanResult(exhausted=True)
        return ScanResult(witness=0)


class EqualFirstTwoCert(CertSystem):
    """f(0) = f(1)."""

    def __init__(self) -> None:
        self.offdiag = OffDiagonalPairStream()

    def d_leaf(self, x: int, y: int) -> Code:
        if x == 0:
            return CoCylinder(self.offdiag.unrank(y))
        return CoCylinder(())

    def e_leaf(self, x: int, y: int) -> Code:
        return Cylinder((y, y) if x == 0 else ())

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        if x != 0:
            return 0
        a, b = p.at(0), p.at(1)
        if a == b:
            return None
        return self.offdiag.rank((a, b))

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        if x != 0:
            return 0
        a, b = p.at(0), p.at(1)
        return a if a == b else None

    def union_witness(self, p: Point) -> ScanResult:
        if p.at(0) == p.at(1):
            return ScanResult(witness=0)
        return ScanResult(exhausted=True)

    def intersection_out_witness(self, p: Point) -> ScanResult:
        if p.at(0) == p.at(1):
            return ScanResult(exhausted=True)
        return ScanResult(witness=0)


class CylinderCert(CertSystem):
    def __init__(self, prefix: Seq, co: bool = False):
        self.prefix = tuple(prefix)
        self.co = co

    def _leaf(self) -> Code:
        return CoCylinder(self.prefix) if self.co else Cylinder(self.prefix)

    def _holds(self, p: Point) -> bool:
        ext = p.extends(self.prefix)
        return not ext if self.co else ext

    def d_leaf(self, x: int, y: int) -> Code:
        return self._leaf()

    def e_leaf(self, x: int, y: int) -> Code:
        return self._leaf()

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        return None if self._holds(p) else 0

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        return 0 if self._holds(p) else None

    def union_witness(self, p: Point) -> ScanResult:
        return ScanResult(witness=0) if self._holds(p) else ScanResult(exhausted=True)

    def intersection_out_witness(self, p: Point) -> ScanResult:
        return ScanResult(exhausted=True) if self._holds(p) else ScanResult(witness=0)


class WholeCert(CylinderCert):
    def __init__(self) -> None:
        super().__init__((), co=False)


class EmptyCert(CylinderCert):
    def __init__(self) -> None:
        super().__init__((), co=True)


# ---------------------------------------------------------------------------
# Named family templates (referenced from the DSL)
# ---------------------------------------------------------------------------


class FirstRepeatFamily(Family):
    """child(i) = the cylinder [(i, i)]; union is 'first two values equal'.

    Deliberately carries no exactness hooks: it demonstrates that a bare
    union scan can confirm but never refute.  The refutation side comes
    from the complement set's own union presentation (see EqualFirstTwoCert).
    """

    def child(self, i: int) -> Code:
        return Cylinder((i, i))

    def describe(self) -> str:
        return "first-repeat"

    # parameterless template: all instances are the same value
    def __eq__(self, other: object) -> bool:
        return type(other) is FirstRepeatFamily

    def __hash__(self) -> int:
        return hash(FirstRepeatFamily)


TEMPLATES: Dict[str, Callable[[], Family]] = {
    "first-repeat": FirstRepeatFamily,
}


# ---------------------------------------------------------------------------
# Catalog registry
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    params: Tuple[str, ...]  # required parameter names
    make_oracle: Callable[..., Callable[[Point], bool]]
    make_pair: Optional[Callable[..., DeltaPrimePair]] = None


def _oracle_cylinder(prefix: Seq):
    prefix = tuple(prefix)
    return lambda p: p.extends(prefix)


def _oracle_co_cylinder(prefix: Seq):
    prefix = tuple(prefix)
    return lambda p: not p.extends(prefix)


def _oracle_first_value(c: int):
    return lambda p: p.at(0) == c


def _oracle_equal_first_two():
    return lambda p: p.at(0) == p.at(1)


def _oracle_exactly_zeros(k: int):
    return lambda p: total_zeros(p) == k


def _oracle_at_most_zeros(k: int):
    return lambda p: total_zeros(p) is not None and total_zeros(p) <= k


def _oracle_eventually_zero():
    return lambda p: p.per == (0,)


def _oracle_infinitely_many_zeros():
    return lambda p: 0 in p.per


def _oracle_eventually_constant():
    return lambda p: len(p.per) == 1


def _oracle_whole():
    return lambda p: True


def _oracle_empty():
    return lambda p: False


CATALOG: Dict[str, CatalogEntry] = {
    "whole": CatalogEntry(
        "whole",
        (),
        _oracle_whole,
        lambda: build_pair("whole", {}, WholeCert(), _oracle_whole()),
    ),
    "empty": CatalogEntry(
        "empty",
        (),
        _oracle_empty,
        lambda: build_pair("empty", {}, EmptyCert(), _oracle_empty()),
    ),
    "cylinder": CatalogEntry(
        "cylinder",
        ("prefix",),
        _oracle_cylinder,
        lambda prefix: build_pair(
            "cylinder", {"prefix": tuple(prefix)}, CylinderCert(prefix), _oracle_cylinder(prefix)
        ),
    ),
    "co-cylinder": CatalogEntry(
        "co-cylinder",
        ("prefix",),
        _oracle_co_cylinder,
        lambda prefix: build_pair(
            "co-cylinder",
            {"prefix": tuple(prefix)},
            CylinderCert(prefix, co=True),
            _oracle_co_cylinder(prefix),
        ),
    ),
    "first-value": CatalogEntry(
        "first-value",
        ("c",),
        _oracle_first_value,
        lambda c: build_pair("first-value", {"c": c}, FirstValueCert(c), _oracle_first_value(c)),
    ),
    "equal-first-two": CatalogEntry(
        "equal-first-two",
        (),
        _oracle_equal_first_two,
        lambda: build_pair(
            "equal-first-two", {}, EqualFirstTwoCert(), _oracle_equal_first_two()
        ),
    ),
    "exactly-zeros": CatalogEntry(
        "exactly-zeros",
        ("k",),
        _oracle_exactly_zeros,
        lambda k: build_pair(
            "exactly-zeros", {"k": k}, ExactZerosCert(k), _oracle_exactly_zeros(k)
        ),
    ),
    "at-most-zeros": CatalogEntry(
        "at-most-zeros",
        ("k",),
        _oracle_at_most_zeros,
        lambda k: build_pair(
            "at-most-zeros", {"k": k}, AtMostZerosCert(k), _oracle_at_most_zeros(k)
        ),
    ),
    "eventually-zero": CatalogEntry("eventually-zero", (), _oracle_eventually_zero),
    "infinitely-many-zeros": CatalogEntry(
        "infinitely-many-zeros", (), _oracle_infinitely_many_zeros
    ),
    "eventually-constant": CatalogEntry(
        "eventually-constant", (), _oracle_eventually_constant
    ),
}


# camelCase spellings accepted on API/CLI surfaces
_ALIASES: Dict[str, str] = {
    "firstValueEquals": "first-value",
    "first-value-equals": "first-value",
    "equalFirstTwo": "equal-first-two",
    "exactlyZeros": "exactly-zeros",
    "atMostZeros": "at-most-zeros",
    "eventuallyZero": "eventually-zero",
    "infinitelyManyZeros": "infinitely-many-zeros",
    "eventuallyConstant": "eventually-constant",
    "coCylinder": "co-cylinder",
}


def canonical_name(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in CATALOG:
        known = ", ".join(sorted(CATALOG))
        raise KeyError(f"unknown catalog set {name!r}; known: {known}")
    return name


def catalog_oracle(name: str, **params) -> Callable[[Point], bool]:
    entry = CATALOG[canonical_name(name)]
    return entry.make_oracle(**params)


def exact_oracle(name: str, point: Point, **params) -> bool:
    """Closed-form membership verdict for a catalog set."""
    return catalog_oracle(name, **params)(point)


def catalog_pair(name: str, **params) -> DeltaPrimePair:
    entry = CATALOG[canonical_name(name)]
    if entry.make_pair is None:
        raise ValueError(f"catalog set {name!r} has no dual presentation")
    return entry.make_pair(**params)


def paired_catalog_names() -> Tuple[str, ...]:
    return tuple(n for n, e in CATALOG.items() if e.make_pair is not None)
