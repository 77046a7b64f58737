"""Symbol registry: computable functions, decidable predicates, prefix functionals.

A Signature maps names to semantics.  Evaluation looks symbols up here; the
compiler extends signatures with fresh prefix functionals whose semantics it
manufactures.  Signatures are persistent: extend() returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Tuple

from .pairing import pair, unpair


@dataclass(frozen=True)
class FunctionSymbol:
    name: str
    arity: int
    fn: Callable[..., int]


@dataclass(frozen=True)
class PredicateSymbol:
    name: str
    arity: int
    fn: Callable[..., bool]


@dataclass(frozen=True)
class PrefixFunctional:
    """Symbol g applied as g(m1, ..., mn, m) reading the window f(0..m).

    leading is n, the count of ordinary numeric arguments before the window
    bound.  fn receives (leading_args, window) where window = (f(0), ..., f(m)).
    analyzer, when present, answers exact quantifier questions for compiled
    symbols; evaluation treats it as an optional oracle.
    """

    name: str
    leading: int
    fn: Callable[[Tuple[int, ...], Tuple[int, ...]], int]
    analyzer: Optional[object] = None

    @property
    def arity(self) -> int:
        return self.leading + 1


@dataclass(frozen=True)
class Signature:
    functions: Mapping[str, FunctionSymbol] = field(default_factory=dict)
    predicates: Mapping[str, PredicateSymbol] = field(default_factory=dict)
    prefix_functionals: Mapping[str, PrefixFunctional] = field(default_factory=dict)

    def function(self, name: str) -> FunctionSymbol:
        try:
            return self.functions[name]
        except KeyError:
            raise KeyError(f"unknown function symbol {name!r}") from None

    def predicate(self, name: str) -> PredicateSymbol:
        try:
            return self.predicates[name]
        except KeyError:
            raise KeyError(f"unknown predicate symbol {name!r}") from None

    def prefix_functional(self, name: str) -> PrefixFunctional:
        try:
            return self.prefix_functionals[name]
        except KeyError:
            raise KeyError(f"unknown prefix functional {name!r}") from None

    def has_name(self, name: str) -> bool:
        return (
            name in self.functions
            or name in self.predicates
            or name in self.prefix_functionals
        )

    def extend(
        self,
        functions: Tuple[FunctionSymbol, ...] = (),
        predicates: Tuple[PredicateSymbol, ...] = (),
        prefix_functionals: Tuple[PrefixFunctional, ...] = (),
    ) -> "Signature":
        fns: Dict[str, FunctionSymbol] = dict(self.functions)
        preds: Dict[str, PredicateSymbol] = dict(self.predicates)
        pfs: Dict[str, PrefixFunctional] = dict(self.prefix_functionals)
        for s in functions:
            if self.has_name(s.name):
                raise ValueError(f"symbol {s.name!r} already registered")
            fns[s.name] = s
        for s in predicates:
            if self.has_name(s.name):
                raise ValueError(f"symbol {s.name!r} already registered")
            preds[s.name] = s
        for s in prefix_functionals:
            if self.has_name(s.name):
                raise ValueError(f"symbol {s.name!r} already registered")
            pfs[s.name] = s
        return Signature(fns, preds, pfs)

    def fresh_name(self, stem: str) -> str:
        if not self.has_name(stem):
            return stem
        k = 1
        while self.has_name(f"{stem}{k}"):
            k += 1
        return f"{stem}{k}"


def table_function(name: str, mapping: Mapping[Tuple[int, ...], int], default: int = 0) -> FunctionSymbol:
    """Finite lookup table, default outside the table (keeps it total)."""
    if not mapping:
        raise ValueError("empty table")
    arity = len(next(iter(mapping)))
    if any(len(k) != arity for k in mapping):
        raise ValueError("inconsistent table key arity")
    frozen = dict(mapping)

    def fn(*args: int) -> int:
        return frozen.get(tuple(args), default)

    return FunctionSymbol(name, arity, fn)


def default_signature() -> Signature:
    fns = (
        FunctionSymbol("succ", 1, lambda a: a + 1),
        FunctionSymbol("add", 2, lambda a, b: a + b),
        FunctionSymbol("mul", 2, lambda a, b: a * b),
        FunctionSymbol("pairnat", 2, pair),
        FunctionSymbol("left", 1, lambda k: unpair(k)[0]),
        FunctionSymbol("right", 1, lambda k: unpair(k)[1]),
    )
    preds = (
        PredicateSymbol("lt", 2, lambda a, b: a < b),
        PredicateSymbol("leq", 2, lambda a, b: a <= b),
        PredicateSymbol("even", 1, lambda a: a % 2 == 0),
    )
    pfs = (
        # Running count of zeros in the window f(0..m); handy in demos/tests.
        PrefixFunctional(
            "zerocount", 0, lambda _lead, window: sum(1 for v in window if v == 0)
        ),
        # Window maximum.
        PrefixFunctional(
            "windowmax", 0, lambda _lead, window: max(window) if window else 0
        ),
    )
    return Signature().extend(fns, preds, pfs)


DEFAULT_SIGNATURE = default_signature()
