"""Deterministic evaluation corpus: eventually periodic points stratified by
zero count, plus random quantifier-free sentences.

The bundled guessing sets all count or locate zeros, so the point corpus is
stratified by total zero count (none, one, two, three-or-more, infinitely
many) to exercise both sides of every membership question.  Shapes are kept
small on purpose: values in {0, 1, 2}, preambles of length at most 5,
periods of length at most 3, and once a zero is in play the first eight
values sum to at most 8.  Small shapes pin every decisive certificate of
the catalog pairs inside the first ~10^5 listed facts, which is what makes
exhaustive stabilization checks affordable; see tests for the sweep that
verifies the bound over the whole shape space.
"""

from __future__ import annotations

import random
from typing import Dict, Iterator, List, Optional, Tuple

from .catalog import total_zeros
from .points import Point
from .sentences import (
    And,
    Const,
    Eq,
    FApp,
    Formula,
    Not,
    Or,
    PFunApp,
    Term,
    f_atom,
    is_quantifier_free,
)

# bucket name -> weight out of 100
_BUCKETS: Tuple[Tuple[str, int], ...] = (
    ("zero", 15),
    ("one", 18),
    ("two", 18),
    ("many", 19),
    ("infinite", 30),
)

_VALUES = (0, 1, 2)
_NONZERO = (1, 2)
MAX_PREAMBLE = 5
MAX_PERIOD = 3
WEIGHT_CAP = 8  # sum of the first eight values, for points containing a zero


def point_bucket(p: Point) -> str:
    tz = total_zeros(p)
    if tz is None:
        return "infinite"
    if tz >= 3:
        return "many"
    return ("zero", "one", "two")[tz]


def _first_eight(pre: Tuple[int, ...], per: Tuple[int, ...]) -> List[int]:
    vals = list(pre)
    while len(vals) < 8:
        vals.extend(per)
    return vals[:8]


def admissible_shape(pre: Tuple[int, ...], per: Tuple[int, ...]) -> bool:
    """The shape discipline shared by the generator and the budget sweep."""
    if len(pre) > MAX_PREAMBLE or not 1 <= len(per) <= MAX_PERIOD:
        return False
    if any(v not in _VALUES for v in pre + per):
        return False
    if 0 in per:
        # zero-repeating tails keep the zeros early so no guessing set ever
        # needs a certificate row past 7
        if per == (0,):
            if len(pre) > 3:
                return False
        elif per == (0, 1):
            if len(pre) > 1:
                return False
        else:
            return False
    vals8 = _first_eight(pre, per)
    if 0 in vals8 and sum(vals8) > WEIGHT_CAP:
        return False
    return True


def _quotas(count: int) -> Dict[str, int]:
    total_w = sum(w for _, w in _BUCKETS)
    out = {name: count * w // total_w for name, w in _BUCKETS}
    remainders = sorted(
        _BUCKETS, key=lambda nw: -((count * nw[1]) % total_w)
    )
    short = count - sum(out.values())
    for i in range(short):
        out[remainders[i % len(remainders)][0]] += 1
    return out


def _draw_shape(rng: random.Random, bucket: str) -> Optional[Point]:
    if bucket == "infinite":
        if rng.random() < 0.75:
            per = (0,)
            pre_len = rng.randrange(4)
        else:
            per = (0, 1)
            pre_len = rng.randrange(2)
        pre = tuple(rng.choice(_VALUES) for _ in range(pre_len))
    else:
        per = tuple(rng.choice(_NONZERO) for _ in range(rng.randrange(1, MAX_PERIOD + 1)))
        pre = tuple(rng.choice(_VALUES) for _ in range(rng.randrange(MAX_PREAMBLE + 1)))
    if not admissible_shape(pre, per):
        return None
    p = Point(pre, per)
    return p if point_bucket(p) == bucket else None


def corpus_points(count: int = 100, seed: int = 2024) -> Tuple[Point, ...]:
    """Distinct eventually periodic points, reproducible for a given seed."""
    rng = random.Random(seed)
    quotas = _quotas(count)
    seen = set()
    out: List[Point] = []
    for name, _ in _BUCKETS:
        need = quotas[name]
        attempts = 0
        while need > 0:
            attempts += 1
            if attempts > 500_000:
                raise RuntimeError(f"could not fill corpus bucket {name!r}")
            p = _draw_shape(rng, name)
            if p is None or p in seen:
                continue
            seen.add(p)
            out.append(p)
            need -= 1
    rng.shuffle(out)
    return tuple(out)


# ---------------------------------------------------------------------------
# Sentence corpus
# ---------------------------------------------------------------------------

_PFUNS = ("zerocount", "windowmax")


def _atom(rng: random.Random, max_index: int, max_value: int, allow_pfun: bool) -> Formula:
    if allow_pfun and rng.random() < 0.3:
        name = rng.choice(_PFUNS)
        window = rng.randrange(max_index + 1)
        return Eq(PFunApp(name, (Const(window),)), Const(rng.randrange(max_value + 1)))
    return f_atom(rng.randrange(max_index + 1), rng.randrange(max_value + 1))


def _formula(rng: random.Random, depth: int, max_index: int, max_value: int, allow_pfun: bool) -> Formula:
    if depth == 0 or rng.random() < 0.35:
        return _atom(rng, max_index, max_value, allow_pfun)
    roll = rng.random()
    if roll < 0.4:
        return And(
            _formula(rng, depth - 1, max_index, max_value, allow_pfun),
            _formula(rng, depth - 1, max_index, max_value, allow_pfun),
        )
    if roll < 0.8:
        return Or(
            _formula(rng, depth - 1, max_index, max_value, allow_pfun),
            _formula(rng, depth - 1, max_index, max_value, allow_pfun),
        )
    return Not(_formula(rng, depth - 1, max_index, max_value, allow_pfun))


def corpus_sentences(
    count: int = 200,
    seed: int = 2024,
    max_index: int = 6,
    max_value: int = 4,
) -> Tuple[Formula, ...]:
    """Distinct quantifier-free sentences; roughly the first 60% stay in the
    atomic fragment (f-atoms and Boolean combinations only), the rest mix in
    prefix-functional atoms."""
    rng = random.Random(seed)
    seen = set()
    out: List[Formula] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 500_000:
            raise RuntimeError("could not fill the sentence corpus")
        allow_pfun = len(out) >= (count * 3) // 5
        phi = _formula(rng, rng.randrange(4), max_index, max_value, allow_pfun)
        if phi in seen:
            continue
        assert is_quantifier_free(phi)
        seen.add(phi)
        out.append(phi)
    return tuple(out)


# ---------------------------------------------------------------------------
# Fragment helpers used by the determination checks
# ---------------------------------------------------------------------------


def _atom_terms(phi: Formula) -> Iterator[Term]:
    if isinstance(phi, Eq):
        yield phi.lhs
        yield phi.rhs
    elif isinstance(phi, Not):
        yield from _atom_terms(phi.body)
    elif isinstance(phi, (And, Or)):
        yield from _atom_terms(phi.lhs)
        yield from _atom_terms(phi.rhs)
    else:
        raise ValueError("expected a quantifier-free Boolean combination of equalities")


def in_atomic_fragment(phi: Formula) -> bool:
    """True when every term is a constant or f applied to a constant."""
    try:
        terms = list(_atom_terms(phi))
    except ValueError:
        return False
    for t in terms:
        if isinstance(t, Const):
            continue
        if isinstance(t, FApp) and isinstance(t.arg, Const):
            continue
        return False
    return True


def largest_f_index(phi: Formula) -> Optional[int]:
    """Largest i with f(i) mentioned (atomic fragment); None when f is unused."""
    best: Optional[int] = None
    for t in _atom_terms(phi):
        if isinstance(t, FApp) and isinstance(t.arg, Const):
            i = t.arg.value
            best = i if best is None or i > best else best
    return best
