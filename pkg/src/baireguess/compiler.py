"""Bridges between code trees and sentences.

compile_to_sentence turns an alternating indexed union/intersection tree of
depth n (leaves = cylinders or co-cylinders) into a single prenex sentence
over two freshly registered symbols: a window test tau(x1..xn, m), equal to
1 exactly when f's window f(0..m) matches the leaf prefix selected by the
indices, and a window bound ell(x1..xn) = len(prefix) - 1.  The emitted
sentence is

    Q1 x1 ... Qn xn  (tau of f)(x1..xn, ell(x1..xn)) = b

with the quantifier string fixed by the side (sigma starts with exists) and
the target bit b fixed by the leaf parity: union-led trees of odd depth and
intersection-led trees of even depth have cylinder leaves and test for 1;
the other two combinations have co-cylinder leaves and test for 0.

sentence_to_code goes the other way, and clopen_set builds a code for a
quantifier-free sentence by a symbolic case split on window values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .catalog import OffDiagonalPairStream, first_zero_at_or_after
from .classify import prenex
from .codes import (
    CoCylinder,
    Code,
    Cylinder,
    FiniteIntersection,
    FiniteUnion,
    FnFamily,
    Family,
    IndexedIntersection,
    IndexedUnion,
    SentenceLeaf,
    SubstitutionFamily,
)
from .evaluate import OutOfPrefix, PrefixReader, _eval_qf
from .pairing import seq_fixed_rank, seq_fixed_unrank, seq_varlen_rank, seq_varlen_unrank
from .points import Point
from .sentences import (
    Const,
    Eq,
    Exists,
    FApp,
    Forall,
    Formula,
    FunApp,
    Not,
    PFunApp,
    Term,
    Var,
    atoms,
    constants_in,
    is_quantifier_free,
    substitute,
)
from .signature import DEFAULT_SIGNATURE, FunctionSymbol, PrefixFunctional, Signature
from .transforms import MalformedNormalForm

_PROBE = 4
_SCAN_CAP = 512

_serial = itertools.count(1)


# ---------------------------------------------------------------------------
# Compiling codes to sentences
# ---------------------------------------------------------------------------


@dataclass
class CompiledSentence:
    """A compiled sentence plus the signature extension it needs."""

    sentence: Formula
    signature: Signature
    tau_name: str
    ell_name: str
    depth: int
    union_led: bool

    def describe(self) -> str:
        side = "sigma" if self.union_led else "pi"
        return f"compiled[{side} {self.depth}, {self.tau_name}/{self.ell_name}]"


def _walk(code: Code, indices: Tuple[int, ...]) -> Code:
    """Descend one family level per index; returns the node reached."""
    node = code
    for i in indices:
        if isinstance(node, (IndexedUnion, IndexedIntersection)):
            node = node.family.child(i)
        else:
            raise MalformedNormalForm(f"expected an indexed node at depth {indices}: {node!r}")
    return node


def _leaf_prefix(code: Code, indices: Tuple[int, ...], want_cyl: bool) -> Tuple[int, ...]:
    leaf = _walk(code, indices)
    if want_cyl and isinstance(leaf, Cylinder):
        u = leaf.prefix
    elif not want_cyl and isinstance(leaf, CoCylinder):
        u = leaf.prefix
    else:
        kind = "cylinder" if want_cyl else "co-cylinder"
        raise MalformedNormalForm(f"leaf at {indices} is not a {kind}: {leaf!r}")
    if len(u) == 0:
        raise ValueError("empty prefix leaf cannot be compiled to a window test")
    return u


class _CompiledAnalyzer:
    """Exact quantifier answers for a compiled tau symbol.

    Walks the source code tree to the family the fixed indices select and
    defers to that family's own analytics when present:

      first_extending(point)          least y whose leaf prefix p extends
      first_not_extending(point)      least y whose leaf prefix p does not
      first_row_never_extending(point)  least y whose row has no extending
                                        leaf at all (one level up)

    A None return from those methods is a proof of absence.  Without them
    the scans are bounded and decline rather than conclude.
    """

    def __init__(self, code: Code, depth: int, want_cyl: bool, len_name: str):
        self.code = code
        self.depth = depth
        self.want_cyl = want_cyl
        self.len_name = len_name
        self.range_is_01 = True

    def _family_at(self, fixed: Tuple[int, ...]) -> Family:
        node = _walk(self.code, fixed)
        if not isinstance(node, (IndexedUnion, IndexedIntersection)):
            raise MalformedNormalForm(f"expected an indexed node under {fixed}: {node!r}")
        return node.family

    def _prefix(self, fixed: Tuple[int, ...], y: int) -> Tuple[int, ...]:
        return _leaf_prefix(self.code, fixed + (y,), self.want_cyl)

    # "hit" = the window equals the leaf prefix = point extends it
    def first_hit(self, point: Point, fixed: Tuple[int, ...]) -> Optional[int]:
        fam = self._family_at(fixed)
        probe = getattr(fam, "first_extending", None)
        if probe is not None:
            return probe(point)
        for y in range(_SCAN_CAP):
            if point.extends(self._prefix(fixed, y)):
                return y
        raise NotImplementedError

    def first_miss(self, point: Point, fixed: Tuple[int, ...]) -> Optional[int]:
        fam = self._family_at(fixed)
        probe = getattr(fam, "first_not_extending", None)
        if probe is not None:
            return probe(point)
        for y in range(_SCAN_CAP):
            if not point.extends(self._prefix(fixed, y)):
                return y
        raise NotImplementedError

    def first_fixed_with_no_hit(self, point: Point, fixed: Tuple[int, ...]) -> Optional[int]:
        fam = self._family_at(fixed)
        probe = getattr(fam, "first_row_never_extending", None)
        if probe is not None:
            return probe(point)
        raise NotImplementedError


def compile_to_sentence(
    code: Code, n: int, sig: Signature = DEFAULT_SIGNATURE
) -> CompiledSentence:
    """Compile a depth-n alternating indexed tree into one prenex sentence.

    Registers fresh tau/ell symbols in a copy of the signature; the result
    carries that extended signature.  Only depths 1..3 are supported.
    """
    if not 1 <= n <= 3:
        raise ValueError(f"compilation is supported for depth 1..3, got {n}")
    if isinstance(code, IndexedUnion):
        union_led = True
    elif isinstance(code, IndexedIntersection):
        union_led = False
    else:
        raise MalformedNormalForm(f"top node must be an indexed union/intersection: {code!r}")

    # probe the alternation shape and leaf kind near the origin
    want_cyl = union_led == (n % 2 == 1)
    expected = [IndexedUnion if union_led else IndexedIntersection]
    for d in range(1, n):
        expected.append(IndexedIntersection if expected[-1] is IndexedUnion else IndexedUnion)
    for d in range(n):
        node = _walk(code, (0,) * d)
        if not isinstance(node, expected[d]):
            raise MalformedNormalForm(
                f"depth {d} should be {expected[d].__name__}, found {type(node).__name__}"
            )
    for probe in itertools.product(range(_PROBE), repeat=min(n, 2)):
        idx = probe + (0,) * (n - len(probe))
        _leaf_prefix(code, idx, want_cyl)

    serial = next(_serial)
    tau_name = f"tau{serial}"
    ell_name = f"ell{serial}"
    target_bit = 1 if want_cyl else 0

    def ell_fn(*xs: int) -> int:
        return len(_leaf_prefix(code, xs, want_cyl)) - 1

    def tau_fn(leading: Tuple[int, ...], window: Tuple[int, ...]) -> int:
        u = _leaf_prefix(code, leading, want_cyl)
        return 1 if window[: len(u)] == u and len(window) >= len(u) else 0

    analyzer = _CompiledAnalyzer(code, n, want_cyl, ell_name)
    sig_out = sig.extend(
        functions=[FunctionSymbol(ell_name, n, ell_fn)],
        prefix_functionals=[PrefixFunctional(tau_name, n, tau_fn, analyzer=analyzer)],
    )

    xs = [Var(f"x{i + 1}") for i in range(n)]
    lit = Eq(
        PFunApp(tau_name, tuple(xs) + (FunApp(ell_name, tuple(xs)),)),
        Const(target_bit),
    )
    phi: Formula = lit
    for i in reversed(range(n)):
        exists_here = (i % 2 == 0) == union_led
        phi = Exists(xs[i].name, phi) if exists_here else Forall(xs[i].name, phi)
    return CompiledSentence(phi, sig_out, tau_name, ell_name, n, union_led)


# ---------------------------------------------------------------------------
# Decompiling sentences to codes
# ---------------------------------------------------------------------------


def sentence_to_code(phi: Formula, sig: Signature = DEFAULT_SIGNATURE) -> Code:
    """A code whose membership agrees with evaluating the sentence.

    Quantifier-free sentences become leaves; each quantifier becomes an
    indexed union (exists) or intersection (forall) over substitution
    instances.  Input is normalized to prenex form first.
    """
    pn = prenex(phi)
    return _prenex_to_code(pn.to_formula(), sig)


def _prenex_to_code(phi: Formula, sig: Signature) -> Code:
    if is_quantifier_free(phi):
        return SentenceLeaf(phi)
    if isinstance(phi, Exists):
        if is_quantifier_free(phi.body):
            return IndexedUnion(SubstitutionFamily(phi.var, phi.body, sig))
        var, body = phi.var, phi.body
        return IndexedUnion(
            FnFamily(
                lambda i: _prenex_to_code(substitute(body, var, Const(i)), sig),
                description=f"exists {var}",
            )
        )
    if isinstance(phi, Forall):
        if is_quantifier_free(phi.body):
            return IndexedIntersection(SubstitutionFamily(phi.var, phi.body, sig))
        var, body = phi.var, phi.body
        return IndexedIntersection(
            FnFamily(
                lambda i: _prenex_to_code(substitute(body, var, Const(i)), sig),
                description=f"forall {var}",
            )
        )
    raise TypeError(f"not prenex: {phi!r}")


# ---------------------------------------------------------------------------
# Clopen sets of quantifier-free sentences
# ---------------------------------------------------------------------------


def _direct_reads(phi: Formula) -> Optional[List[int]]:
    """Indices read by f when every f argument is itself f-free and ground,
    and every atom is an equality over f-applications and constants only.
    None when the sentence falls outside that fragment."""
    reads: List[int] = []

    def term_ok(t: Term, top: bool) -> bool:
        if isinstance(t, Const):
            return True
        if isinstance(t, FApp):
            if not top:
                return False
            if not isinstance(t.arg, Const):
                return False
            reads.append(t.arg.value)
            return True
        return False

    for a in atoms(phi):
        if not isinstance(a, Eq):
            return None
        if not (term_ok(a.lhs, True) and term_ok(a.rhs, True)):
            return None
    return reads


def clopen_set(phi: Formula, sig: Signature = DEFAULT_SIGNATURE) -> Code:
    """A code extensionally equal to the truth set of a quantifier-free
    sentence.

    Inside the equality fragment with constant f arguments the truth set is
    expanded by a symbolic case split over window values up to the
    determination bound: value patterns that only use mentioned constants
    give a finite union of cylinders (or its complement when the false side
    is the finite one).  Everything else falls back to a sentence leaf,
    which is still decidable everywhere.
    """
    if not is_quantifier_free(phi):
        raise ValueError("clopen_set expects a quantifier-free sentence")
    reads = _direct_reads(phi)
    if reads is None:
        return SentenceLeaf(phi)
    if not reads:
        ok = _eval_qf(phi, {}, PrefixReader(()), sig)
        return Cylinder(()) if ok else CoCylinder(())

    width = max(reads) + 1
    consts = sorted(constants_in(phi))
    fresh0 = (max(consts) + 1) if consts else 0
    alphabet = consts + list(range(fresh0, fresh0 + width))
    if len(alphabet) ** width > 20000:
        return SentenceLeaf(phi)

    true_pats: List[Tuple[int, ...]] = []
    false_pats: List[Tuple[int, ...]] = []
    true_fresh = false_fresh = False
    for w in itertools.product(alphabet, repeat=width):
        ok = _eval_qf(phi, {}, PrefixReader(w), sig)
        uses_fresh = any(v >= fresh0 for v in w)
        if ok:
            true_pats.append(w)
            true_fresh = true_fresh or uses_fresh
        else:
            false_pats.append(w)
            false_fresh = false_fresh or uses_fresh

    if not false_pats:
        return Cylinder(())
    if not true_pats:
        return CoCylinder(())
    if not true_fresh:
        items = tuple(Cylinder(w) for w in true_pats)
        return items[0] if len(items) == 1 else FiniteUnion(items)
    if not false_fresh:
        items = tuple(CoCylinder(w) for w in false_pats)
        return items[0] if len(items) == 1 else FiniteIntersection(items)
    return SentenceLeaf(phi)


# ---------------------------------------------------------------------------
# Reference codes with exact analytics, used by demos and tests
# ---------------------------------------------------------------------------


class DiagonalFamily(Family):
    """child(i) = [(i, i)]; union = first two values equal (open)."""

    def child(self, i: int) -> Code:
        return Cylinder((i, i))

    def first_extending(self, point: Point) -> Optional[int]:
        a, b = point.at(0), point.at(1)
        return a if a == b else None

    def first_not_extending(self, point: Point) -> Optional[int]:
        a, b = point.at(0), point.at(1)
        if a == b:
            return 1 if a == 0 else 0
        return 0

    def describe(self) -> str:
        return "diagonal cylinders"


class OffDiagonalFamily(Family):
    """child(j) = co-cylinder on the j-th ordered pair (a, b), a != b;
    intersection = first two values equal (closed)."""

    def __init__(self) -> None:
        self.stream = OffDiagonalPairStream()

    def child(self, j: int) -> Code:
        return CoCylinder(self.stream.unrank(j))

    def first_extending(self, point: Point) -> Optional[int]:
        a, b = point.at(0), point.at(1)
        if a == b:
            return None
        return self.stream.rank((a, b))

    def first_not_extending(self, point: Point) -> Optional[int]:
        a, b = point.at(0), point.at(1)
        first = self.stream.unrank(0)
        return 1 if (a, b) == first else 0

    def describe(self) -> str:
        return "off-diagonal co-cylinders"


def _last_nonzero(p: Point) -> Optional[int]:
    """Greatest index holding a nonzero value, None if f is all zero;
    raises if nonzero values recur forever."""
    if any(v != 0 for v in p.per):
        raise ValueError("nonzero values recur forever")
    best = None
    for i, v in enumerate(p.pre):
        if v != 0:
            best = i
    return best


class NonzeroTailRow(Family):
    """Row N: co-cylinders on every prefix of length > N ending nonzero.
    The intersection over the row = 'f is zero from N on'."""

    def __init__(self, n: int):
        self.n = n

    def _decode(self, y: int) -> Tuple[int, ...]:
        base = seq_varlen_unrank(y, self.n + 1)
        return base[:-1] + (base[-1] + 1,)

    def child(self, y: int) -> Code:
        return CoCylinder(self._decode(y))

    def first_extending(self, point: Point) -> Optional[int]:
        m = self._first_nonzero_at_or_after(point, self.n)
        if m is None:
            return None
        u = point.prefix(m + 1)
        return seq_varlen_rank(u[:-1] + (u[-1] - 1,), self.n + 1)

    def first_not_extending(self, point: Point) -> Optional[int]:
        for y in range(64):
            if not point.extends(self._decode(y)):
                return y
        raise NotImplementedError

    @staticmethod
    def _first_nonzero_at_or_after(p: Point, n: int) -> Optional[int]:
        for i in range(n, len(p.pre)):
            if p.at(i) != 0:
                return i
        if all(v == 0 for v in p.per):
            return None
        start = max(n, len(p.pre))
        for i in range(start, start + len(p.per)):
            if p.at(i) != 0:
                return i
        raise AssertionError("periodic part has a nonzero value")

    def describe(self) -> str:
        return f"nonzero tails past {self.n}"


class EventuallyZeroRows(Family):
    """child(N) = intersection of row N; union over N = eventually zero."""

    def child(self, n: int) -> Code:
        return IndexedIntersection(NonzeroTailRow(n))

    def first_row_never_extending(self, point: Point) -> Optional[int]:
        try:
            last = _last_nonzero(point)
        except ValueError:
            return None
        return 0 if last is None else last + 1

    def describe(self) -> str:
        return "zero-from-N rows"


class FixedLenNonzeroEnd(Family):
    """child(y) = co-cylinder on the y-th length-L sequence ending nonzero.
    The intersection over the row = 'f(L-1) = 0'."""

    def __init__(self, length: int):
        if length < 1:
            raise ValueError("length must be positive")
        self.length = length

    def _decode(self, y: int) -> Tuple[int, ...]:
        base = seq_fixed_unrank(self.length, y)
        return base[:-1] + (base[-1] + 1,)

    def child(self, y: int) -> Code:
        return CoCylinder(self._decode(y))

    def first_extending(self, point: Point) -> Optional[int]:
        last = point.at(self.length - 1)
        if last == 0:
            return None
        u = point.prefix(self.length)
        return seq_fixed_rank(u[:-1] + (u[-1] - 1,))

    def first_not_extending(self, point: Point) -> Optional[int]:
        for y in range(64):
            if not point.extends(self._decode(y)):
                return y
        raise NotImplementedError

    def describe(self) -> str:
        return f"nonzero-ended length {self.length}"


class ZeroSomewherePastRow(Family):
    """child(x2) = intersection forcing f(x1 + x2) = 0; the union over x2
    = 'some zero at or past x1'."""

    def __init__(self, x1: int):
        self.x1 = x1

    def child(self, x2: int) -> Code:
        return IndexedIntersection(FixedLenNonzeroEnd(self.x1 + x2 + 1))

    def first_row_never_extending(self, point: Point) -> Optional[int]:
        z = first_zero_at_or_after(point, self.x1)
        if z is None:
            return None
        return z - self.x1

    def describe(self) -> str:
        return f"zero at or past {self.x1}"


class AllThresholdsFamily(Family):
    """child(x1) = union over x2; the intersection = infinitely many zeros."""

    def child(self, x1: int) -> Code:
        return IndexedUnion(ZeroSomewherePastRow(x1))

    def describe(self) -> str:
        return "zeros past every threshold"


def open_equal_first_two() -> Code:
    """Depth-1 union-led code for {first two values equal}."""
    return IndexedUnion(DiagonalFamily())


def closed_equal_first_two() -> Code:
    """Depth-1 intersection-led code for the same set."""
    return IndexedIntersection(OffDiagonalFamily())


def sigma2_eventually_zero() -> Code:
    """Depth-2 union-led code for {f is eventually zero}."""
    return IndexedUnion(EventuallyZeroRows())


def pi3_infinitely_many_zeros() -> Code:
    """Depth-3 intersection-led code for {f has infinitely many zeros}."""
    return IndexedIntersection(AllThresholdsFamily())


def reference_codes() -> Dict[str, Tuple[Code, int, str]]:
    """name -> (code, depth, catalog oracle name) for the compiled corpus."""
    return {
        "open-equal-first-two": (open_equal_first_two(), 1, "equal-first-two"),
        "closed-equal-first-two": (closed_equal_first_two(), 1, "equal-first-two"),
        "sigma2-eventually-zero": (sigma2_eventually_zero(), 2, "eventually-zero"),
        "pi3-infinitely-many-zeros": (pi3_infinitely_many_zeros(), 3, "infinitely-many-zeros"),
    }
