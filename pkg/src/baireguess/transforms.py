"""Moving between paired presentations and one-sided hierarchy normal forms.

A DeltaPrimePair presents one set two ways at once: as a union of
intersection-rows and as an intersection of union-rows over the same
difficulty of inner code.  The two operations here convert such a pair to
ordinary one-sided normal forms and back:

  delta_prime_to_delta(pair)            -> (sigma_form, pi_form)
  delta_to_delta_prime(sigma, pi, m)    -> DeltaPrimePair

Class orders follow the pair convention: a pair over inner codes of level
L has class order m = L + 2.  Order 2 (clopen inner codes) is the identity
case in both directions.  Order 3 consumes/produces basic-open leaves.
Higher orders flatten through the inner pairs with an index-merging family.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Tuple

from .catalog import CertSystem, DeltaPrimePair, leaf_sentence
from .codes import (
    CoCylinder,
    Code,
    ConstantFamily,
    Cylinder,
    Family,
    FiniteIntersection,
    FiniteUnion,
    IndexedIntersection,
    IndexedUnion,
    ScanResult,
    SentenceLeaf,
    member,
    Verdict,
)
from .pairing import unpair
from .points import Point
from .sentences import Formula


class MalformedNormalForm(ValueError):
    """Input code does not have the required union/intersection shape."""


_PROBE = 6  # children sampled when validating a family shape
_SCAN_CAP = 4096  # bounded search before a structural certificate declines


# ---------------------------------------------------------------------------
# Shape predicates
# ---------------------------------------------------------------------------


def is_clopen_code(code: Code) -> bool:
    if isinstance(code, (Cylinder, CoCylinder, SentenceLeaf)):
        return True
    if isinstance(code, (FiniteUnion, FiniteIntersection)):
        return all(is_clopen_code(c) for c in code.items)
    return False


def is_basic_open(code: Code) -> bool:
    return isinstance(code, Cylinder)


def _check_children(fam: Family, pred: Callable[[Code], bool], what: str) -> None:
    for i in range(_PROBE):
        c = fam.child(i)
        if not pred(c):
            raise MalformedNormalForm(f"child {i} of {fam.describe()} is not {what}: {c!r}")


# ---------------------------------------------------------------------------
# Structural certificates: rows read off the two supplied forms
# ---------------------------------------------------------------------------


class StructuralCert(CertSystem):
    """Certificate rows recovered from the shapes of a (sigma, pi) form pair.

    D rows are constant: D(x, y) = x-th disjunct of the sigma form, so
    first_d_miss is exact for free.  E rows are the pi form's union rows;
    their membership scans are bounded and decline (NotImplementedError)
    rather than guess, keeping member() sound.
    """

    def __init__(self, d_row: Callable[[int], Code], e_row: Callable[[int, int], Code]):
        self._d_row = d_row
        self._e_row = e_row

    def d_leaf(self, x: int, y: int) -> Code:
        return self._d_row(x)

    def e_leaf(self, x: int, y: int) -> Code:
        return self._e_row(x, y)

    def first_d_miss(self, x: int, p: Point) -> Optional[int]:
        v = member(self._d_row(x), p, fuel=_SCAN_CAP)
        if v is Verdict.IN:
            return None
        if v is Verdict.OUT:
            return 0
        raise NotImplementedError

    def first_e_hit(self, x: int, p: Point) -> Optional[int]:
        for y in range(_SCAN_CAP):
            v = member(self._e_row(x, y), p, fuel=_SCAN_CAP)
            if v is Verdict.IN:
                return y
        raise NotImplementedError

    def union_witness(self, p: Point) -> ScanResult:
        for x in range(_SCAN_CAP):
            v = member(self._d_row(x), p, fuel=_SCAN_CAP)
            if v is Verdict.IN:
                return ScanResult(witness=x)
        raise NotImplementedError

    def intersection_out_witness(self, p: Point) -> ScanResult:
        raise NotImplementedError  # refuting a union row needs exact analytics

    def sigma(self, x: int, y: int) -> Formula:
        return leaf_sentence(self._d_row(x))

    def tau(self, x: int, y: int) -> Formula:
        return leaf_sentence(self._e_row(x, y))


# ---------------------------------------------------------------------------
# Pair -> one-sided forms
# ---------------------------------------------------------------------------


def delta_prime_to_delta(pair: DeltaPrimePair) -> Tuple[Code, Code]:
    """Both one-sided normal forms of the set a pair presents.

    Order 2 pairs are returned unchanged (their forms already are the
    normal forms, one level down).  Order 3 pairs are likewise already
    shaped as union-of-closed / intersection-of-open.  From order 4 up the
    inner codes must be CertifiedCode wrappers so their own pair forms can
    be merged in.
    """
    m = pair.class_order
    if m < 2:
        raise ValueError(f"pair class order must be at least 2, got {m}")
    if m <= 3:
        return pair.union_form, pair.intersection_form
    u = _require_indexed(pair.union_form, IndexedUnion, "union form")
    i = _require_indexed(pair.intersection_form, IndexedIntersection, "intersection form")
    sigma = IndexedUnion(_RowMergeFamily(u.family, take_pi=True))
    pi = IndexedIntersection(_RowMergeFamily(i.family, take_pi=False))
    return sigma, pi


def _require_indexed(code: Code, kind, what: str):
    if not isinstance(code, kind):
        raise MalformedNormalForm(f"{what} must be {kind.__name__}, got {type(code).__name__}")
    return code


class CertifiedCode:
    """A code node that also remembers a pair presentation of its set.

    Used for inner codes of pairs above order 3: membership goes through
    the union form, while transforms can reach both forms.
    """

    def __init__(self, pair: DeltaPrimePair):
        self.pair = pair

    def sigma_form(self) -> Code:
        return delta_prime_to_delta(self.pair)[0]

    def pi_form(self) -> Code:
        return delta_prime_to_delta(self.pair)[1]

    def describe(self) -> str:
        return self.pair.describe()


class _RowMergeFamily(Family):
    """Merge row x of an outer family with the index of its inner rows.

    For the sigma side: child(x) of the outer union is an intersection-row
    over certified codes D(x, y); replacing each D by its pi form
    I_a U_b ... and fusing (y, a) into one index keeps an
    intersection-of-(one-level-lower) shape.  Dually for the pi side.
    """

    def __init__(self, outer: Family, take_pi: bool):
        self.outer = outer
        self.take_pi = take_pi

    def child(self, x: int) -> Code:
        row = self.outer.child(x)
        if self.take_pi:
            fam = _require_indexed(row, IndexedIntersection, "union-form row").family
            return IndexedIntersection(_FusedRow(fam, take_pi=True))
        fam = _require_indexed(row, IndexedUnion, "intersection-form row").family
        return IndexedUnion(_FusedRow(fam, take_pi=False))

    def describe(self) -> str:
        side = "pi" if self.take_pi else "sigma"
        return f"row-merge[{side}] over {self.outer.describe()}"


class _FusedRow(Family):
    def __init__(self, inner: Family, take_pi: bool):
        self.inner = inner
        self.take_pi = take_pi

    def child(self, w: int) -> Code:
        y, a = unpair(w)
        leaf = self.inner.child(y)
        if not isinstance(leaf, CertifiedCode):
            # level <= 1 inner code: constant in the fused coordinate
            return leaf
        form = leaf.pi_form() if self.take_pi else leaf.sigma_form()
        if isinstance(form, (IndexedIntersection, IndexedUnion)):
            return form.family.child(a)
        return form

    def describe(self) -> str:
        return f"fused {self.inner.describe()}"


# ---------------------------------------------------------------------------
# One-sided forms -> pair
# ---------------------------------------------------------------------------


def delta_to_delta_prime(sigma_form: Code, pi_form: Code, m: int) -> DeltaPrimePair:
    """Package one-sided normal forms of the same set as an order-m pair.

    sigma_form must be an indexed union, pi_form an indexed intersection,
    both over codes one level down (basic-open / clopen leaves when m = 3).
    The D rows repeat the sigma disjuncts (constant rows), the E rows are
    the pi form's union rows, and the certificates are read off the leaf
    shapes.  The result is extensionally the same set presented at order m.
    """
    if m < 3:
        raise ValueError(f"packaging starts at order 3, got m={m}")
    u = _require_indexed(sigma_form, IndexedUnion, "sigma form")
    i = _require_indexed(pi_form, IndexedIntersection, "pi form")

    if m == 3:
        _check_children(u.family, is_clopen_code, "basic-open/clopen")

        def pi_row(x: int) -> Code:
            return i.family.child(x)

        def e_row(x: int, y: int) -> Code:
            row = pi_row(x)
            if isinstance(row, IndexedUnion):
                return row.family.child(y)
            if isinstance(row, FiniteUnion):
                items = row.items
                return items[y] if y < len(items) else items[-1]
            if is_clopen_code(row):
                return row
            raise MalformedNormalForm(f"pi-form row {x} is not a union of leaves: {row!r}")

        # probe rows so malformed input fails fast rather than mid-scan
        for x in range(_PROBE):
            e_row(x, 0)

        cert = StructuralCert(u.family.child, e_row)
        return DeltaPrimePair(
            name="packaged",
            params={"order": m},
            union_form=IndexedUnion(_ConstantRows(u.family)),
            intersection_form=pi_form,
            level=m - 2,
            cert=cert,
            oracle=None,
        )

    # m >= 4: inner codes stay as given; rows must already be certified codes
    _check_children(u.family, lambda c: isinstance(c, (IndexedIntersection, CertifiedCode)), "certified")
    return DeltaPrimePair(
        name="packaged",
        params={"order": m},
        union_form=sigma_form,
        intersection_form=pi_form,
        level=m - 2,
        cert=None,
        oracle=None,
    )


class _ConstantRows(Family):
    """Row x = the single code child(x), repeated for every y."""

    def __init__(self, base: Family):
        self.base = base

    def child(self, x: int) -> Code:
        return IndexedIntersection(ConstantFamily(self.base.child(x)))

    def first_in_child(self, point, fuel, sig):
        for x in range(min(fuel, _SCAN_CAP)):
            if member(self.base.child(x), point, fuel=fuel) is Verdict.IN:
                return ScanResult(witness=x)
        return None

    def describe(self) -> str:
        return f"constant rows over {self.base.describe()}"
