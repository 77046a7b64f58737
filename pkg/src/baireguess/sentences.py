"""Terms and sentences of the first-order language used by the guessing games.

The language has a constant for every natural, registered function and
predicate symbols, a distinguished unary symbol ``f`` naming the point under
discussion, and prefix-functional symbols whose last argument bounds the
f-prefix they read: an application ``(g of f)(m1, ..., mn, m)`` is evaluated
as ``g(m1, ..., mn, f(0), ..., f(m))``.

ASTs are immutable and hashable; structural equality is the identity the
enumerators and listings deduplicate by.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple, Union


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class FunApp:
    name: str
    args: Tuple["Term", ...]


@dataclass(frozen=True)
class FApp:
    """Application of the distinguished point symbol f."""

    arg: "Term"


@dataclass(frozen=True)
class PFunApp:
    """Prefix-functional application; the last argument bounds the f-window."""

    name: str
    args: Tuple["Term", ...]


Term = Union[Const, Var, FunApp, FApp, PFunApp]


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class PredApp:
    name: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Or:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Eq, PredApp, Not, And, Or, Exists, Forall]
Sentence = Formula  # a Formula with no free variables; see is_sentence


# ---------------------------------------------------------------------------
# Structural helpers
# ---------------------------------------------------------------------------


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, (FunApp, PFunApp)):
        for a in t.args:
            yield from subterms(a)
    elif isinstance(t, FApp):
        yield from subterms(t.arg)


def atoms(phi: Formula) -> Iterator[Formula]:
    if isinstance(phi, (Eq, PredApp)):
        yield phi
    elif isinstance(phi, Not):
        yield from atoms(phi.body)
    elif isinstance(phi, (And, Or)):
        yield from atoms(phi.lhs)
        yield from atoms(phi.rhs)
    elif isinstance(phi, (Exists, Forall)):
        yield from atoms(phi.body)


def formula_terms(phi: Formula) -> Iterator[Term]:
    for a in atoms(phi):
        if isinstance(a, Eq):
            yield from subterms(a.lhs)
            yield from subterms(a.rhs)
        else:
            for t in a.args:
                yield from subterms(t)


def free_vars(phi: Formula) -> frozenset:
    def term_vars(t: Term) -> frozenset:
        return frozenset(s.name for s in subterms(t) if isinstance(s, Var))

    if isinstance(phi, Eq):
        return term_vars(phi.lhs) | term_vars(phi.rhs)
    if isinstance(phi, PredApp):
        out: frozenset = frozenset()
        for t in phi.args:
            out |= term_vars(t)
        return out
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, (And, Or)):
        return free_vars(phi.lhs) | free_vars(phi.rhs)
    if isinstance(phi, (Exists, Forall)):
        return free_vars(phi.body) - {phi.var}
    raise TypeError(f"not a formula: {phi!r}")


def is_sentence(phi: Formula) -> bool:
    return not free_vars(phi)


def is_quantifier_free(phi: Formula) -> bool:
    if isinstance(phi, (Eq, PredApp)):
        return True
    if isinstance(phi, Not):
        return is_quantifier_free(phi.body)
    if isinstance(phi, (And, Or)):
        return is_quantifier_free(phi.lhs) and is_quantifier_free(phi.rhs)
    return False


def quantifier_count(phi: Formula) -> int:
    if isinstance(phi, (Eq, PredApp)):
        return 0
    if isinstance(phi, Not):
        return quantifier_count(phi.body)
    if isinstance(phi, (And, Or)):
        return quantifier_count(phi.lhs) + quantifier_count(phi.rhs)
    if isinstance(phi, (Exists, Forall)):
        return 1 + quantifier_count(phi.body)
    raise TypeError(f"not a formula: {phi!r}")


def constants_in(phi: Formula) -> frozenset:
    return frozenset(t.value for t in formula_terms(phi) if isinstance(t, Const))


def substitute(phi: Formula, var: str, value: Term) -> Formula:
    """Replace free occurrences of var.  The replacement must be closed."""

    def sub_term(t: Term) -> Term:
        if isinstance(t, Var):
            return value if t.name == var else t
        if isinstance(t, Const):
            return t
        if isinstance(t, FApp):
            return FApp(sub_term(t.arg))
        if isinstance(t, FunApp):
            return FunApp(t.name, tuple(sub_term(a) for a in t.args))
        if isinstance(t, PFunApp):
            return PFunApp(t.name, tuple(sub_term(a) for a in t.args))
        raise TypeError(f"not a term: {t!r}")

    if isinstance(phi, Eq):
        return Eq(sub_term(phi.lhs), sub_term(phi.rhs))
    if isinstance(phi, PredApp):
        return PredApp(phi.name, tuple(sub_term(t) for t in phi.args))
    if isinstance(phi, Not):
        return Not(substitute(phi.body, var, value))
    if isinstance(phi, And):
        return And(substitute(phi.lhs, var, value), substitute(phi.rhs, var, value))
    if isinstance(phi, Or):
        return Or(substitute(phi.lhs, var, value), substitute(phi.rhs, var, value))
    if isinstance(phi, (Exists, Forall)):
        if phi.var == var:
            return phi
        kind = type(phi)
        return kind(phi.var, substitute(phi.body, var, value))
    raise TypeError(f"not a formula: {phi!r}")


def rename_bound(phi: Formula, old: str, new: str) -> Formula:
    """Rename one quantifier's bound variable (new must be fresh)."""
    return substitute_var_name(phi, old, new)


def substitute_var_name(phi: Formula, old: str, new: str) -> Formula:
    def sub_term(t: Term) -> Term:
        if isinstance(t, Var):
            return Var(new) if t.name == old else t
        if isinstance(t, Const):
            return t
        if isinstance(t, FApp):
            return FApp(sub_term(t.arg))
        if isinstance(t, FunApp):
            return FunApp(t.name, tuple(sub_term(a) for a in t.args))
        if isinstance(t, PFunApp):
            return PFunApp(t.name, tuple(sub_term(a) for a in t.args))
        raise TypeError(f"not a term: {t!r}")

    if isinstance(phi, Eq):
        return Eq(sub_term(phi.lhs), sub_term(phi.rhs))
    if isinstance(phi, PredApp):
        return PredApp(phi.name, tuple(sub_term(t) for t in phi.args))
    if isinstance(phi, Not):
        return Not(substitute_var_name(phi.body, old, new))
    if isinstance(phi, And):
        return And(
            substitute_var_name(phi.lhs, old, new),
            substitute_var_name(phi.rhs, old, new),
        )
    if isinstance(phi, Or):
        return Or(
            substitute_var_name(phi.lhs, old, new),
            substitute_var_name(phi.rhs, old, new),
        )
    if isinstance(phi, (Exists, Forall)):
        kind = type(phi)
        if phi.var == old:
            return kind(new, substitute_var_name(phi.body, old, new))
        return kind(phi.var, substitute_var_name(phi.body, old, new))
    raise TypeError(f"not a formula: {phi!r}")


def negate(phi: Formula) -> Formula:
    """Negation with double-negation collapse (keeps listings tidy)."""
    if isinstance(phi, Not):
        return phi.body
    return Not(phi)


# Convenience builders used all over the tests and catalog code.


def f_at(i: int) -> FApp:
    return FApp(Const(i))


def f_atom(i: int, n: int) -> Eq:
    """The atom f(i) = n."""
    return Eq(f_at(i), Const(n))


TAUTOLOGY: Formula = Eq(Const(0), Const(0))
CONTRADICTION: Formula = Not(TAUTOLOGY)


def conj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return TAUTOLOGY
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return CONTRADICTION
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def prefix_sentence(prefix) -> Formula:
    """Quantifier-free sentence 'f passes through the given finite prefix'."""
    return conj(f_atom(i, v) for i, v in enumerate(prefix))
