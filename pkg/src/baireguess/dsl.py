"""S-expression surface syntax for points, sentences, codes, and catalog
set specs.

Inputs are human-writable fixtures; outputs stay JSON.  The printer and
parser are inverse on everything serializable: codes carrying opaque
guessers (guess events, programmatic families) are excluded by design so
that every printed artifact re-parses to an equal value.

Grammar by example:

    (point :pre (3 1) :per (2))
    (forall x (exists y (= (f y) x)))
    (= ((:pfun zerocount) 8) 2)
    (cyl (3 1))   (co-cyl (3))   (union (cyl (0)) (leaf (= (f 0) 1)))
    (iunion (template first-repeat))
    (iinter (tail (cyl (0)) (cyl (1)) :tail (co-cyl ())))
    (catalog exactly-zeros :k 2)

Errors carry 1-based line and column of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .catalog import CATALOG, TEMPLATES, canonical_name, catalog_pair, DeltaPrimePair
from .codes import (
    Code,
    CoCylinder,
    Cylinder,
    ExplicitTailFamily,
    Family,
    FiniteIntersection,
    FiniteUnion,
    GuessEvent,
    IndexedIntersection,
    IndexedUnion,
    SentenceLeaf,
)
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
)
from .synthesis import SynthesisSpec


class DslError(ValueError):
    """Parse-side failure, annotated with the source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class PrintError(ValueError):
    """The object has no faithful textual form (opaque parts)."""


# ---------------------------------------------------------------------------
# Reader: text -> positioned nodes
# ---------------------------------------------------------------------------

_SYMBOL_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
                    "0123456789=<>!?*+/._-")


@dataclass(frozen=True)
class _Atom:
    kind: str  # "int" | "sym" | "key"
    value: object
    line: int
    col: int


@dataclass(frozen=True)
class _ListNode:
    items: Tuple[Union["_Atom", "_ListNode"], ...]
    line: int
    col: int


_Node = Union[_Atom, _ListNode]


def _tokenize(text: str) -> List[_Atom]:
    # parens are carried as atoms of kind "(" / ")"
    out: List[_Atom] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            out.append(_Atom(ch, ch, line, col))
            i += 1
            col += 1
            continue
        start_i, start_col = i, col
        if ch == ":":
            i += 1
            col += 1
        while i < n and text[i] in _SYMBOL_CHARS:
            i += 1
            col += 1
        word = text[start_i:i]
        if word in (":", ""):
            raise DslError(f"unexpected character {ch!r}", line, start_col)
        if word.startswith(":"):
            out.append(_Atom("key", word[1:], line, start_col))
        elif word.lstrip("-").isdigit():
            out.append(_Atom("int", int(word), line, start_col))
        else:
            out.append(_Atom("sym", word, line, start_col))
    return out


def _read(tokens: List[_Atom], pos: int) -> Tuple[_Node, int]:
    if pos >= len(tokens):
        raise DslError("unexpected end of input", 0, 0)
    tok = tokens[pos]
    if tok.kind == "(":
        items: List[_Node] = []
        pos += 1
        while True:
            if pos >= len(tokens):
                raise DslError("unclosed '('", tok.line, tok.col)
            if tokens[pos].kind == ")":
                return _ListNode(tuple(items), tok.line, tok.col), pos + 1
            node, pos = _read(tokens, pos)
            items.append(node)
    if tok.kind == ")":
        raise DslError("unmatched ')'", tok.line, tok.col)
    return tok, pos + 1


def _read_one(text: str) -> _Node:
    tokens = _tokenize(text)
    if not tokens:
        raise DslError("empty input", 1, 1)
    node, pos = _read(tokens, 0)
    if pos != len(tokens):
        extra = tokens[pos]
        raise DslError("trailing input after the first form", extra.line, extra.col)
    return node


def _err(node: _Node, message: str) -> None:
    raise DslError(message, node.line, node.col)


# ---------------------------------------------------------------------------
# Builders: nodes -> domain values
# ---------------------------------------------------------------------------


def _want_list(node: _Node, what: str) -> _ListNode:
    if not isinstance(node, _ListNode):
        _err(node, f"expected {what}")
    return node


def _int_value(node: _Node, what: str = "a number") -> int:
    if not (isinstance(node, _Atom) and node.kind == "int"):
        _err(node, f"expected {what}")
    return node.value  # type: ignore[return-value]


def _int_tuple(node: _Node, what: str = "a list of numbers") -> Tuple[int, ...]:
    lst = _want_list(node, what)
    return tuple(_int_value(item) for item in lst.items)


def _symbol(node: _Node, what: str = "a name") -> str:
    if not (isinstance(node, _Atom) and node.kind == "sym"):
        _err(node, f"expected {what}")
    return node.value  # type: ignore[return-value]


def _keyword_args(items: Sequence[_Node], allowed: Sequence[str]) -> Dict[str, _Node]:
    out: Dict[str, _Node] = {}
    i = 0
    while i < len(items):
        key = items[i]
        if not (isinstance(key, _Atom) and key.kind == "key"):
            _err(key, "expected a :keyword")
        if key.value not in allowed:
            _err(key, f"unknown keyword :{key.value}; allowed: "
                      + ", ".join(f":{a}" for a in allowed))
        if key.value in out:
            _err(key, f"duplicate keyword :{key.value}")
        if i + 1 >= len(items):
            _err(key, f"keyword :{key.value} needs a value")
        out[key.value] = items[i + 1]  # type: ignore[assignment]
        i += 2
    return out


def _build_point(node: _ListNode):
    from .points import Point

    kw = _keyword_args(node.items[1:], ("pre", "per"))
    pre = _int_tuple(kw["pre"]) if "pre" in kw else ()
    if "per" not in kw:
        _err(node, "point needs a :per list")
    per = _int_tuple(kw["per"])
    try:
        return Point(pre, per)
    except ValueError as exc:
        _err(node, str(exc))


def _build_catalog(node: _ListNode) -> SynthesisSpec:
    if len(node.items) < 2:
        _err(node, "catalog needs a set name")
    name_node = node.items[1]
    name = _symbol(name_node, "a catalog set name")
    try:
        entry_name = canonical_name(name)
    except KeyError as exc:
        _err(name_node, str(exc.args[0]))
    entry = CATALOG[entry_name]
    kw = _keyword_args(node.items[2:], entry.params)
    params: Dict[str, object] = {}
    for pname, pnode in kw.items():
        if isinstance(pnode, _ListNode):
            params[pname] = _int_tuple(pnode)
        else:
            params[pname] = _int_value(pnode, "a number or list of numbers")
    missing = [p for p in entry.params if p not in params]
    if missing:
        _err(node, f"catalog {entry_name} needs " + ", ".join(f":{m}" for m in missing))
    try:
        pair = catalog_pair(entry_name, **params)
    except ValueError as exc:
        _err(name_node, str(exc))
    return SynthesisSpec(pair)


_TERM_HEAD_KINDS = {"fun": FunApp, "pfun": PFunApp}


def _build_term(node: _Node) -> Term:
    if isinstance(node, _Atom):
        if node.kind == "int":
            return Const(node.value)  # type: ignore[arg-type]
        if node.kind == "sym":
            return Var(node.value)  # type: ignore[arg-type]
        _err(node, "a keyword is not a term")
    if not node.items:
        _err(node, "empty term")
    head = node.items[0]
    if isinstance(head, _Atom) and head.kind == "sym":
        if head.value != "f":
            _err(head, f"unknown term head {head.value!r} (did you mean (:fun {head.value})?)")
        if len(node.items) != 2:
            _err(node, "f takes exactly one argument")
        return FApp(_build_term(node.items[1]))
    if isinstance(head, _ListNode):
        kind, name = _registry_head(head, ("fun", "pfun"))
        args = tuple(_build_term(a) for a in node.items[1:])
        return _TERM_HEAD_KINDS[kind](name, args)
    _err(head, "expected a term")


def _registry_head(node: _ListNode, kinds: Sequence[str]) -> Tuple[str, str]:
    # (:fun succ) / (:pfun tau17) / (:pred even)
    if (
        len(node.items) != 2
        or not isinstance(node.items[0], _Atom)
        or node.items[0].kind != "key"
    ):
        _err(node, "expected a registry reference like (" + ":" + kinds[0] + " name)")
    kind = node.items[0].value
    if kind not in kinds:
        _err(node.items[0], f"expected one of " + ", ".join(f":{k}" for k in kinds))
    return kind, _symbol(node.items[1], "a registry name")


_FORMULA_HEADS = ("=", "not", "and", "or", "exists", "forall")


def _build_formula(node: _Node) -> Formula:
    lst = _want_list(node, "a sentence")
    if not lst.items:
        _err(lst, "empty sentence")
    head = lst.items[0]
    if isinstance(head, _ListNode):
        kind, name = _registry_head(head, ("pred",))
        return PredApp(name, tuple(_build_term(a) for a in lst.items[1:]))
    if head.kind != "sym":
        _err(head, "expected a sentence head")
    name = head.value
    rest = lst.items[1:]
    if name == "=":
        if len(rest) != 2:
            _err(lst, "= takes exactly two terms")
        return Eq(_build_term(rest[0]), _build_term(rest[1]))
    if name == "not":
        if len(rest) != 1:
            _err(lst, "not takes exactly one sentence")
        return Not(_build_formula(rest[0]))
    if name in ("and", "or"):
        if len(rest) != 2:
            _err(lst, f"{name} takes exactly two sentences")
        ctor = And if name == "and" else Or
        return ctor(_build_formula(rest[0]), _build_formula(rest[1]))
    if name in ("exists", "forall"):
        if len(rest) != 2:
            _err(lst, f"{name} takes a variable and a body")
        var = _symbol(rest[0], "a variable name")
        ctor = Exists if name == "exists" else Forall
        return ctor(var, _build_formula(rest[1]))
    _err(head, f"unknown sentence head {name!r}")


_CODE_HEADS = ("cyl", "co-cyl", "union", "inter", "iunion", "iinter", "leaf")


def _build_family(node: _Node) -> Family:
    lst = _want_list(node, "a family form")
    if not lst.items:
        _err(lst, "empty family form")
    head = lst.items[0]
    name = _symbol(head, "a family head (template or tail)")
    if name == "template":
        if len(lst.items) < 2:
            _err(lst, "template needs a name")
        tname = _symbol(lst.items[1], "a template name")
        if tname not in TEMPLATES:
            _err(lst.items[1], f"unknown template {tname!r}; known: "
                               + ", ".join(sorted(TEMPLATES)))
        kw = _keyword_args(lst.items[2:], ())
        return TEMPLATES[tname](**{k: _int_value(v) for k, v in kw.items()})
    if name == "tail":
        items: List[Code] = []
        i = 1
        while i < len(lst.items) and not (
            isinstance(lst.items[i], _Atom) and lst.items[i].kind == "key"
        ):
            items.append(_build_code(lst.items[i]))
            i += 1
        kw = _keyword_args(lst.items[i:], ("tail",))
        if "tail" not in kw:
            _err(lst, "tail family needs a :tail code")
        return ExplicitTailFamily(items, _build_code(kw["tail"]))
    _err(head, f"unknown family head {name!r}")


def _build_code(node: _Node) -> Code:
    lst = _want_list(node, "a code")
    if not lst.items:
        _err(lst, "empty code")
    head = lst.items[0]
    name = _symbol(head, "a code head")
    rest = lst.items[1:]
    if name == "cyl" or name == "co-cyl":
        if len(rest) != 1:
            _err(lst, f"{name} takes one list of values")
        ctor = Cylinder if name == "cyl" else CoCylinder
        return ctor(_int_tuple(rest[0]))
    if name in ("union", "inter"):
        ctor = FiniteUnion if name == "union" else FiniteIntersection
        return ctor(tuple(_build_code(c) for c in rest))
    if name in ("iunion", "iinter"):
        if len(rest) != 1:
            _err(lst, f"{name} takes one family form")
        ctor = IndexedUnion if name == "iunion" else IndexedIntersection
        return ctor(_build_family(rest[0]))
    if name == "leaf":
        if len(rest) != 1:
            _err(lst, "leaf takes one sentence")
        return SentenceLeaf(_build_formula(rest[0]))
    _err(head, f"unknown code head {name!r}")


def parse(text: str):
    """One DSL form -> Point | Formula | Code | SynthesisSpec."""
    node = _read_one(text)
    lst = _want_list(node, "a parenthesized form")
    if not lst.items:
        _err(lst, "empty form")
    head = lst.items[0]
    if isinstance(head, _ListNode):
        return _build_formula(lst)  # predicate-headed sentence
    if head.kind == "key":
        _err(head, "a keyword cannot head a form")
    name = head.value
    if name == "point":
        return _build_point(lst)
    if name == "catalog":
        return _build_catalog(lst)
    if name in _CODE_HEADS:
        return _build_code(lst)
    if name in _FORMULA_HEADS:
        return _build_formula(lst)
    _err(head, f"unknown form {name!r}")


def parse_point(text: str):
    obj = parse(text)
    from .points import Point

    if not isinstance(obj, Point):
        raise DslError("expected a point", 1, 1)
    return obj


def parse_sentence(text: str) -> Formula:
    obj = parse(text)
    if not isinstance(obj, tuple(_FORMULA_TYPES)):
        raise DslError("expected a sentence", 1, 1)
    return obj


def parse_code(text: str) -> Code:
    obj = parse(text)
    if not isinstance(obj, tuple(_CODE_TYPES)):
        raise DslError("expected a code", 1, 1)
    return obj


def parse_spec(text: str) -> SynthesisSpec:
    obj = parse(text)
    if not isinstance(obj, SynthesisSpec):
        raise DslError("expected a (catalog ...) spec", 1, 1)
    return obj


_FORMULA_TYPES = (Eq, PredApp, Not, And, Or, Exists, Forall)
_CODE_TYPES = (
    Cylinder,
    CoCylinder,
    FiniteUnion,
    FiniteIntersection,
    IndexedUnion,
    IndexedIntersection,
    SentenceLeaf,
    GuessEvent,
)


# ---------------------------------------------------------------------------
# Printer: domain values -> text (inverse of parse where defined)
# ---------------------------------------------------------------------------


def _ints(values: Sequence[int]) -> str:
    return "(" + " ".join(str(v) for v in values) + ")"


def _term_text(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, FApp):
        return f"(f {_term_text(t.arg)})"
    if isinstance(t, FunApp):
        return _apply_text("fun", t.name, t.args)
    if isinstance(t, PFunApp):
        return _apply_text("pfun", t.name, t.args)
    raise PrintError(f"unknown term {t!r}")


def _apply_text(kind: str, name: str, args: Sequence[Term]) -> str:
    inner = "".join(" " + _term_text(a) for a in args)
    return f"((:{kind} {name}){inner})"


def _formula_text(phi: Formula) -> str:
    if isinstance(phi, Eq):
        return f"(= {_term_text(phi.lhs)} {_term_text(phi.rhs)})"
    if isinstance(phi, PredApp):
        inner = "".join(" " + _term_text(a) for a in phi.args)
        return f"((:pred {phi.name}){inner})"
    if isinstance(phi, Not):
        return f"(not {_formula_text(phi.body)})"
    if isinstance(phi, And):
        return f"(and {_formula_text(phi.lhs)} {_formula_text(phi.rhs)})"
    if isinstance(phi, Or):
        return f"(or {_formula_text(phi.lhs)} {_formula_text(phi.rhs)})"
    if isinstance(phi, Exists):
        return f"(exists {phi.var} {_formula_text(phi.body)})"
    if isinstance(phi, Forall):
        return f"(forall {phi.var} {_formula_text(phi.body)})"
    raise PrintError(f"unknown sentence {phi!r}")


def _family_text(fam: Family) -> str:
    for name, ctor in TEMPLATES.items():
        if type(fam) is ctor:
            return f"(template {name})"
    if isinstance(fam, ExplicitTailFamily):
        inner = "".join(" " + _code_text(c) for c in fam.items)
        return f"(tail{inner} :tail {_code_text(fam.tail)})"
    raise PrintError(
        f"family {fam.describe()} is programmatic and has no textual form"
    )


def _code_text(code: Code) -> str:
    if isinstance(code, Cylinder):
        return f"(cyl {_ints(code.prefix)})"
    if isinstance(code, CoCylinder):
        return f"(co-cyl {_ints(code.prefix)})"
    if isinstance(code, FiniteUnion):
        return "(union" + "".join(" " + _code_text(c) for c in code.items) + ")"
    if isinstance(code, FiniteIntersection):
        return "(inter" + "".join(" " + _code_text(c) for c in code.items) + ")"
    if isinstance(code, IndexedUnion):
        return f"(iunion {_family_text(code.family)})"
    if isinstance(code, IndexedIntersection):
        return f"(iinter {_family_text(code.family)})"
    if isinstance(code, SentenceLeaf):
        return f"(leaf {_formula_text(code.sentence)})"
    if isinstance(code, GuessEvent):
        raise PrintError("guess-event codes carry an opaque guesser; not serializable")
    raise PrintError(f"unknown code {code!r}")


def _pair_text(pair: DeltaPrimePair) -> str:
    if pair.name not in CATALOG or CATALOG[pair.name].make_pair is None:
        raise PrintError(f"pair {pair.name!r} is not a catalog set")
    parts = [f"(catalog {pair.name}"]
    for key in sorted(pair.params):
        val = pair.params[key]
        if isinstance(val, tuple):
            parts.append(f" :{key} {_ints(val)}")
        else:
            parts.append(f" :{key} {val}")
    return "".join(parts) + ")"


def to_dsl(obj) -> str:
    """Textual form of a point, sentence, code, pair, or spec."""
    from .points import Point

    if isinstance(obj, Point):
        return f"(point :pre {_ints(obj.pre)} :per {_ints(obj.per)})"
    if isinstance(obj, _FORMULA_TYPES):
        return _formula_text(obj)
    if isinstance(obj, _CODE_TYPES):
        return _code_text(obj)
    if isinstance(obj, SynthesisSpec):
        return _pair_text(obj.pair)
    if isinstance(obj, DeltaPrimePair):
        return _pair_text(obj)
    raise PrintError(f"no textual form for {type(obj).__name__}")
