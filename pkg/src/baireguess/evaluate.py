"""Three-valued evaluation of sentences against eventually periodic points.

Quantifier-free sentences always decide.  Quantified sentences decide when
either (a) the quantified part mentions only f, constants and variables, in
which case quantifiers collapse to a finite range computed from the point's
preamble/period and the sentence's quantifier count, or (b) the innermost
quantifier ranges over a compiled prefix-functional literal whose symbol
carries an exact analyzer.  Otherwise a fuel-bounded witness search runs and
the undecided side reports UNKNOWN, never a wrong verdict.
"""

from __future__ import annotations

import enum
from typing import Dict, Optional, Set, Tuple

from .points import Point
from .sentences import (
    And,
    Const,
    Eq,
    Exists,
    FApp,
    Forall,
    Formula,
    FunApp,
    Not,
    Or,
    PFunApp,
    PredApp,
    Term,
    Var,
    constants_in,
    is_quantifier_free,
    quantifier_count,
)
from .signature import DEFAULT_SIGNATURE, Signature

DEFAULT_FUEL = 128

# Cost guard for the collapsed-quantifier exact path.
_COLLAPSE_BUDGET = 5_000_000


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:  # guard against accidental truthiness bugs
        raise TypeError("Truth is three-valued; compare explicitly")


class UndecidedError(Exception):
    """Raised where a caller needs a definite bit but evaluation is UNKNOWN."""

    def __init__(self, sentence: Formula, fuel: int):
        super().__init__(
            f"evaluation undecided at fuel {fuel}; sentence shape {type(sentence).__name__}"
        )
        self.sentence = sentence
        self.fuel = fuel


class OutOfPrefix(Exception):
    """A read fell past the end of a finite prefix."""

    def __init__(self, index: int, length: int):
        super().__init__(f"read f({index}) outside prefix of length {length}")
        self.index = index
        self.length = length


class PointReader:
    __slots__ = ("point", "record")

    def __init__(self, point: Point, record: Optional[Set[int]] = None):
        self.point = point
        self.record = record

    def at(self, i: int) -> int:
        if self.record is not None:
            self.record.add(i)
        return self.point.at(i)


class PrefixReader:
    __slots__ = ("prefix", "record")

    def __init__(self, prefix: Tuple[int, ...], record: Optional[Set[int]] = None):
        self.prefix = tuple(prefix)
        self.record = record

    def at(self, i: int) -> int:
        if i >= len(self.prefix):
            raise OutOfPrefix(i, len(self.prefix))
        if self.record is not None:
            self.record.add(i)
        return self.prefix[i]


def eval_term(t: Term, env: Dict[str, int], reader, sig: Signature) -> int:
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    if isinstance(t, FApp):
        return reader.at(eval_term(t.arg, env, reader, sig))
    if isinstance(t, FunApp):
        sym = sig.function(t.name)
        if len(t.args) != sym.arity:
            raise ValueError(f"{t.name} expects {sym.arity} args, got {len(t.args)}")
        return sym.fn(*(eval_term(a, env, reader, sig) for a in t.args))
    if isinstance(t, PFunApp):
        sym = sig.prefix_functional(t.name)
        if len(t.args) != sym.arity:
            raise ValueError(f"{t.name} expects {sym.arity} args, got {len(t.args)}")
        vals = [eval_term(a, env, reader, sig) for a in t.args]
        leading, bound = tuple(vals[:-1]), vals[-1]
        window = tuple(reader.at(i) for i in range(bound + 1))
        return sym.fn(leading, window)
    raise TypeError(f"not a term: {t!r}")


def _eval_qf(phi: Formula, env: Dict[str, int], reader, sig: Signature) -> bool:
    """Strict (non-short-circuit) classical evaluation; total on any reader
    that never raises, and read-tracking-faithful because every mentioned
    subterm is evaluated."""
    if isinstance(phi, Eq):
        return eval_term(phi.lhs, env, reader, sig) == eval_term(phi.rhs, env, reader, sig)
    if isinstance(phi, PredApp):
        sym = sig.predicate(phi.name)
        if len(phi.args) != sym.arity:
            raise ValueError(f"{phi.name} expects {sym.arity} args, got {len(phi.args)}")
        return bool(sym.fn(*(eval_term(a, env, reader, sig) for a in phi.args)))
    if isinstance(phi, Not):
        return not _eval_qf(phi.body, env, reader, sig)
    if isinstance(phi, And):
        a = _eval_qf(phi.lhs, env, reader, sig)
        b = _eval_qf(phi.rhs, env, reader, sig)
        return a and b
    if isinstance(phi, Or):
        a = _eval_qf(phi.lhs, env, reader, sig)
        b = _eval_qf(phi.rhs, env, reader, sig)
        return a or b
    raise TypeError(f"quantifier-free formula expected, got {type(phi).__name__}")


# ---------------------------------------------------------------------------
# Exact path 1: quantifier collapse for the pure {f, =} fragment
# ---------------------------------------------------------------------------


def _in_pure_fragment(phi: Formula) -> bool:
    """Atoms are equalities over terms built from f, variables and constants."""

    def term_ok(t: Term) -> bool:
        if isinstance(t, (Const, Var)):
            return True
        if isinstance(t, FApp):
            return term_ok(t.arg)
        return False

    if isinstance(phi, Eq):
        return term_ok(phi.lhs) and term_ok(phi.rhs)
    if isinstance(phi, PredApp):
        return False
    if isinstance(phi, Not):
        return _in_pure_fragment(phi.body)
    if isinstance(phi, (And, Or)):
        return _in_pure_fragment(phi.lhs) and _in_pure_fragment(phi.rhs)
    if isinstance(phi, (Exists, Forall)):
        return _in_pure_fragment(phi.body)
    raise TypeError(f"not a formula: {phi!r}")


def _quantifier_depth(phi: Formula) -> int:
    if isinstance(phi, (Eq, PredApp)):
        return 0
    if isinstance(phi, Not):
        return _quantifier_depth(phi.body)
    if isinstance(phi, (And, Or)):
        return max(_quantifier_depth(phi.lhs), _quantifier_depth(phi.rhs))
    return 1 + _quantifier_depth(phi.body)


def collapse_range(phi: Formula, point: Point, env: Dict[str, int]) -> Optional[int]:
    """Finite quantifier range that preserves truth for pure-fragment phi.

    Elements below T behave individually; above T only the residue mod the
    period matters, and q spare representatives per residue cover every
    choice a quantifier can make.  Returns None when the finite check would
    be too large to run.
    """
    if not _in_pure_fragment(phi):
        return None
    consts = constants_in(phi)
    q = quantifier_count(phi)
    t_floor = [len(point.pre), max(point.values(), default=0) + 1]
    if consts:
        t_floor.append(max(consts) + 1)
    if env:
        t_floor.append(max(env.values()) + 1)
    big_t = max(t_floor)
    n = big_t + len(point.per) * max(q, 1)
    depth = _quantifier_depth(phi)
    if depth and n**depth > _COLLAPSE_BUDGET:
        return None
    return n


def _eval_collapsed(phi: Formula, env: Dict[str, int], reader, n: int, sig: Signature) -> bool:
    if isinstance(phi, (Eq, PredApp)):
        return _eval_qf(phi, env, reader, sig)
    if isinstance(phi, Not):
        return not _eval_collapsed(phi.body, env, reader, n, sig)
    if isinstance(phi, And):
        a = _eval_collapsed(phi.lhs, env, reader, n, sig)
        b = _eval_collapsed(phi.rhs, env, reader, n, sig)
        return a and b
    if isinstance(phi, Or):
        a = _eval_collapsed(phi.lhs, env, reader, n, sig)
        b = _eval_collapsed(phi.rhs, env, reader, n, sig)
        return a or b
    if isinstance(phi, Exists):
        for w in range(n):
            env2 = dict(env)
            env2[phi.var] = w
            if _eval_collapsed(phi.body, env2, reader, n, sig):
                return True
        return False
    if isinstance(phi, Forall):
        for w in range(n):
            env2 = dict(env)
            env2[phi.var] = w
            if not _eval_collapsed(phi.body, env2, reader, n, sig):
                return False
        return True
    raise TypeError(f"not a formula: {phi!r}")


# ---------------------------------------------------------------------------
# Exact path 2: analyzer hook for compiled innermost quantifiers
# ---------------------------------------------------------------------------


def _compiled_literal(body: Formula, var: str, env: Dict[str, int], sig: Signature):
    """Recognize ``(g of f)(v1..vk, x, len(v1..vk, x)) = c`` with x = var
    innermost, possibly negated, g carrying an exact analyzer.  Returns
    (analyzer, fixed_leading_values, polarity_bit) or None.
    """
    negated = False
    while isinstance(body, Not):
        negated = not negated
        body = body.body
    if not isinstance(body, Eq):
        return None
    lhs, rhs = body.lhs, body.rhs
    if isinstance(rhs, PFunApp) and isinstance(lhs, Const):
        lhs, rhs = rhs, lhs
    if not (isinstance(lhs, PFunApp) and isinstance(rhs, Const)):
        return None
    try:
        sym = sig.prefix_functional(lhs.name)
    except KeyError:
        return None
    analyzer = sym.analyzer
    if analyzer is None or not getattr(analyzer, "range_is_01", False):
        return None
    args = lhs.args
    if len(args) < 2:
        return None
    index_args, len_term = args[:-1], args[-1]
    if not (
        isinstance(len_term, FunApp)
        and len_term.name == getattr(analyzer, "len_name", None)
        and len_term.args == index_args
    ):
        return None
    if index_args[-1] != Var(var):
        return None
    fixed = []
    for t in index_args[:-1]:
        if isinstance(t, Const):
            fixed.append(t.value)
        elif isinstance(t, Var) and t.name in env:
            fixed.append(env[t.name])
        else:
            return None
    c = rhs.value
    if c not in (0, 1):
        # range is {0,1}: the equation is identically false
        truth_at_every_x = False if not negated else True
        return ("constant", truth_at_every_x)
    want_hit = c == 1
    if negated:
        want_hit = not want_hit
    return (analyzer, tuple(fixed), want_hit)


def _compiled_literal_template(body: Formula, inner_var: str, outer_var: str,
                               env: Dict[str, int], sig: Signature):
    """Like _compiled_literal, but the second-to-last index argument is the
    still-unbound outer variable.  Returns (analyzer, fixed, want_hit) where
    fixed omits the outer slot (the analyzer's row scan supplies it)."""
    negated = False
    while isinstance(body, Not):
        negated = not negated
        body = body.body
    if not isinstance(body, Eq):
        return None
    lhs, rhs = body.lhs, body.rhs
    if isinstance(rhs, PFunApp) and isinstance(lhs, Const):
        lhs, rhs = rhs, lhs
    if not (isinstance(lhs, PFunApp) and isinstance(rhs, Const)):
        return None
    try:
        sym = sig.prefix_functional(lhs.name)
    except KeyError:
        return None
    analyzer = sym.analyzer
    if analyzer is None or not getattr(analyzer, "range_is_01", False):
        return None
    args = lhs.args
    if len(args) < 3:
        return None
    index_args, len_term = args[:-1], args[-1]
    if not (
        isinstance(len_term, FunApp)
        and len_term.name == getattr(analyzer, "len_name", None)
        and len_term.args == index_args
    ):
        return None
    if index_args[-1] != Var(inner_var) or index_args[-2] != Var(outer_var):
        return None
    fixed = []
    for t in index_args[:-2]:
        if isinstance(t, Const):
            fixed.append(t.value)
        elif isinstance(t, Var) and t.name in env:
            fixed.append(env[t.name])
        else:
            return None
    c = rhs.value
    if c not in (0, 1):
        return ("constant", negated)
    want_hit = c == 1
    if negated:
        want_hit = not want_hit
    return (analyzer, tuple(fixed), want_hit)


def _eval_two_level(phi: Formula, env: Dict[str, int], point: Point, sig: Signature) -> Optional[Truth]:
    """Exact two-quantifier block over a compiled literal: resolves
    'exists a row with no hit' questions through the analyzer."""
    inner = phi.body
    if not isinstance(inner, (Exists, Forall)) or type(inner) is type(phi):
        return None
    recognized = _compiled_literal_template(inner.body, inner.var, phi.var, env, sig)
    if recognized is None:
        return None
    if recognized[0] == "constant":
        return Truth.FALSE if recognized[1] else Truth.TRUE
    analyzer, fixed, want_hit = recognized
    outer_exists = isinstance(phi, Exists)
    # Exists-x Forall-y not-hit  <=>  some row has no hit at all.
    # Forall-x Exists-y hit      <=>  no row is hit-free.
    if (outer_exists and not want_hit) or (not outer_exists and want_hit):
        probe = getattr(analyzer, "first_fixed_with_no_hit", None)
        if probe is None:
            return None
        try:
            v = probe(point, fixed)
        except NotImplementedError:
            return None
        row_exists = v is not None
        if outer_exists:
            return Truth.TRUE if row_exists else Truth.FALSE
        return Truth.FALSE if row_exists else Truth.TRUE
    # The dual pair needs 'some row entirely hit'.
    probe = getattr(analyzer, "first_fixed_all_hit", None)
    if probe is None:
        return None
    try:
        v = probe(point, fixed)
    except NotImplementedError:
        return None
    row_exists = v is not None
    if outer_exists:  # exists-x forall-y hit
        return Truth.TRUE if row_exists else Truth.FALSE
    return Truth.FALSE if row_exists else Truth.TRUE


def _eval_compiled_quantifier(kind, recognized, point: Point) -> Optional[Truth]:
    if recognized[0] == "constant":
        always = recognized[1]
        value = always  # same truth at every witness; domain nonempty
        return Truth.TRUE if value else Truth.FALSE
    analyzer, fixed, want_hit = recognized
    try:
        if kind is Exists:
            found = (
                analyzer.first_hit(point, fixed)
                if want_hit
                else analyzer.first_miss(point, fixed)
            )
            return Truth.TRUE if found is not None else Truth.FALSE
        found = (
            analyzer.first_miss(point, fixed)
            if want_hit
            else analyzer.first_hit(point, fixed)
        )
        return Truth.FALSE if found is not None else Truth.TRUE
    except NotImplementedError:
        return None


# ---------------------------------------------------------------------------
# Main evaluation
# ---------------------------------------------------------------------------


def _eval(phi: Formula, env: Dict[str, int], point: Point, reader, fuel: int, sig: Signature) -> Truth:
    if is_quantifier_free(phi):
        return Truth.TRUE if _eval_qf(phi, env, reader, sig) else Truth.FALSE

    n = collapse_range(phi, point, env)
    if n is not None:
        ok = _eval_collapsed(phi, env, reader, n, sig)
        return Truth.TRUE if ok else Truth.FALSE

    if isinstance(phi, Not):
        r = _eval(phi.body, env, point, reader, fuel, sig)
        if r is Truth.UNKNOWN:
            return Truth.UNKNOWN
        return Truth.FALSE if r is Truth.TRUE else Truth.TRUE
    if isinstance(phi, And):
        a = _eval(phi.lhs, env, point, reader, fuel, sig)
        if a is Truth.FALSE:
            return Truth.FALSE
        b = _eval(phi.rhs, env, point, reader, fuel, sig)
        if b is Truth.FALSE:
            return Truth.FALSE
        if a is Truth.TRUE and b is Truth.TRUE:
            return Truth.TRUE
        return Truth.UNKNOWN
    if isinstance(phi, Or):
        a = _eval(phi.lhs, env, point, reader, fuel, sig)
        if a is Truth.TRUE:
            return Truth.TRUE
        b = _eval(phi.rhs, env, point, reader, fuel, sig)
        if b is Truth.TRUE:
            return Truth.TRUE
        if a is Truth.FALSE and b is Truth.FALSE:
            return Truth.FALSE
        return Truth.UNKNOWN
    if isinstance(phi, (Exists, Forall)):
        exact = _eval_two_level(phi, env, point, sig)
        if exact is not None:
            return exact
        recognized = _compiled_literal(phi.body, phi.var, env, sig)
        if recognized is not None:
            exact = _eval_compiled_quantifier(type(phi), recognized, point)
            if exact is not None:
                return exact
        saw_unknown = False
        if isinstance(phi, Exists):
            for w in range(fuel):
                env2 = dict(env)
                env2[phi.var] = w
                r = _eval(phi.body, env2, point, reader, fuel, sig)
                if r is Truth.TRUE:
                    return Truth.TRUE
                if r is Truth.UNKNOWN:
                    saw_unknown = True
            return Truth.UNKNOWN
        for w in range(fuel):
            env2 = dict(env)
            env2[phi.var] = w
            r = _eval(phi.body, env2, point, reader, fuel, sig)
            if r is Truth.FALSE:
                return Truth.FALSE
            if r is Truth.UNKNOWN:
                saw_unknown = True
        del saw_unknown
        return Truth.UNKNOWN
    raise TypeError(f"not a formula: {phi!r}")


def evaluate(
    phi: Formula,
    point: Point,
    fuel: int = DEFAULT_FUEL,
    sig: Signature = DEFAULT_SIGNATURE,
) -> Truth:
    """Evaluate a sentence at an eventually periodic point."""
    return _eval(phi, {}, point, PointReader(point), fuel, sig)


def truth_bit(
    phi: Formula,
    point: Point,
    fuel: int = DEFAULT_FUEL,
    sig: Signature = DEFAULT_SIGNATURE,
) -> int:
    r = evaluate(phi, point, fuel, sig)
    if r is Truth.UNKNOWN:
        raise UndecidedError(phi, fuel)
    return 1 if r is Truth.TRUE else 0


# ---------------------------------------------------------------------------
# Determination against finite prefixes
# ---------------------------------------------------------------------------


def decide_prefix(
    phi: Formula,
    prefix: Tuple[int, ...],
    sig: Signature = DEFAULT_SIGNATURE,
) -> Optional[bool]:
    """Truth value of quantifier-free phi if the prefix settles it, else None.

    Strict evaluation: every read the sentence can make is attempted, so the
    answer does not depend on operand order.
    """
    if not is_quantifier_free(phi):
        raise ValueError("decide_prefix applies to quantifier-free sentences")
    try:
        return _eval_qf(phi, {}, PrefixReader(prefix), sig)
    except OutOfPrefix:
        return None


def determined_by(
    phi: Formula,
    prefix: Tuple[int, ...],
    sig: Signature = DEFAULT_SIGNATURE,
) -> bool:
    return decide_prefix(phi, prefix, sig) is not None


def determination_bound(
    phi: Formula,
    point: Point,
    sig: Signature = DEFAULT_SIGNATURE,
) -> int:
    """Largest f-index read while evaluating quantifier-free phi at the point
    (0 when nothing is read).  Prefixes of the point longer than this bound
    determine phi."""
    if not is_quantifier_free(phi):
        raise ValueError("determination_bound applies to quantifier-free sentences")
    record: Set[int] = set()
    _eval_qf(phi, {}, PointReader(point, record), sig)
    return max(record) if record else 0
