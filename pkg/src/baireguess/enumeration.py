"""Codecs between naturals and sentence ASTs, and the canonical streams.

Two streams feed the canonical quantifier-free listing over {f, constants}:

* the atom diagonal, placing the atom  f(i) = n  at even slot 2*pair(i, n),
  so its listing index is at most 2*pair(i, n) and atom placement is a
  closed-form computation;
* a bijective codec for the whole fragment at odd slots, guaranteeing every
  quantifier-free sentence of the fragment appears exactly once after
  deduplication.

A third codec covers quantified sentences (used for closure streams at
higher orders); it is total but not injective, so consumers deduplicate.
"""

from __future__ import annotations

from typing import Iterator, Optional, Set

from .pairing import pair, unpair
from .sentences import (
    And,
    Const,
    Eq,
    Exists,
    FApp,
    Forall,
    Formula,
    Not,
    Or,
    Term,
    Var,
    f_atom,
)

# ---------------------------------------------------------------------------
# Closed pure-fragment codec (quantifier-free, no variables)
# ---------------------------------------------------------------------------


def decode_term(j: int) -> Term:
    if j < 0:
        raise ValueError("term code must be a natural")
    if j % 2 == 0:
        return Const(j // 2)
    return FApp(decode_term((j - 1) // 2))


def encode_term(t: Term) -> int:
    if isinstance(t, Const):
        return 2 * t.value
    if isinstance(t, FApp):
        return 2 * encode_term(t.arg) + 1
    raise ValueError(f"term outside the pure closed fragment: {t!r}")


def decode_sentence(k: int) -> Formula:
    if k < 0:
        raise ValueError("sentence code must be a natural")
    tag, rest = k % 4, k // 4
    if tag == 0:
        a, b = unpair(rest)
        return Eq(decode_term(a), decode_term(b))
    if tag == 1:
        return Not(decode_sentence(rest))
    a, b = unpair(rest)
    kind = And if tag == 2 else Or
    return kind(decode_sentence(a), decode_sentence(b))


def encode_sentence(phi: Formula) -> int:
    if isinstance(phi, Eq):
        return 4 * pair(encode_term(phi.lhs), encode_term(phi.rhs))
    if isinstance(phi, Not):
        return 4 * encode_sentence(phi.body) + 1
    if isinstance(phi, And):
        return 4 * pair(encode_sentence(phi.lhs), encode_sentence(phi.rhs)) + 2
    if isinstance(phi, Or):
        return 4 * pair(encode_sentence(phi.lhs), encode_sentence(phi.rhs)) + 3
    raise ValueError(f"sentence outside the pure closed fragment: {phi!r}")


# ---------------------------------------------------------------------------
# Atom diagonal
# ---------------------------------------------------------------------------


def atom_at(k: int) -> Eq:
    i, n = unpair(k)
    return f_atom(i, n)


def atom_slot(i: int, n: int) -> int:
    """Even slot where the atom f(i) = n enters the canonical listing; the
    listing index never exceeds this."""
    return 2 * pair(i, n)


def atom_shape(phi: Formula) -> Optional[tuple]:
    """(i, n) when phi is literally the atom f(i) = n."""
    if (
        isinstance(phi, Eq)
        and isinstance(phi.lhs, FApp)
        and isinstance(phi.lhs.arg, Const)
        and isinstance(phi.rhs, Const)
    ):
        return (phi.lhs.arg.value, phi.rhs.value)
    return None


def canonical_slot_candidate(t: int) -> Formula:
    """Candidate sentence at slot t of the canonical interleave."""
    if t % 2 == 0:
        return atom_at(t // 2)
    return decode_sentence((t - 1) // 2)


# ---------------------------------------------------------------------------
# Quantified codec (total, deduplicate downstream)
# ---------------------------------------------------------------------------


def _decode_term_scoped(j: int, depth: int) -> Optional[Term]:
    tag, rest = j % 3, j // 3
    if tag == 0:
        return Const(rest)
    if tag == 1:
        inner = _decode_term_scoped(rest, depth)
        return None if inner is None else FApp(inner)
    if depth == 0:
        return None
    return Var(f"x{rest % depth}")


def decode_quantified(k: int, depth: int = 0) -> Optional[Formula]:
    """Closed sentences over {f, constants, variables} with quantifiers.
    Binder at nesting depth d binds the name x<d>.  Returns None for the
    few codes that mention a variable with no binder in scope."""
    tag, rest = k % 6, k // 6
    if tag == 0:
        a, b = unpair(rest)
        lhs = _decode_term_scoped(a, depth)
        rhs = _decode_term_scoped(b, depth)
        if lhs is None or rhs is None:
            return None
        return Eq(lhs, rhs)
    if tag == 1:
        body = decode_quantified(rest, depth)
        return None if body is None else Not(body)
    if tag in (2, 3):
        a, b = unpair(rest)
        lhs = decode_quantified(a, depth)
        rhs = decode_quantified(b, depth)
        if lhs is None or rhs is None:
            return None
        kind = And if tag == 2 else Or
        return kind(lhs, rhs)
    body = decode_quantified(rest, depth + 1)
    if body is None:
        return None
    kind = Exists if tag == 4 else Forall
    return kind(f"x{depth}", body)


def iter_quantified(predicate=None) -> Iterator[Formula]:
    """Deduplicated stream of closed quantified sentences, optionally
    filtered; deterministic order by code."""
    seen: Set[Formula] = set()
    k = 0
    while True:
        phi = decode_quantified(k)
        k += 1
        if phi is None or phi in seen:
            continue
        seen.add(phi)
        if predicate is None or predicate(phi):
            yield phi
