"""Guessing games on Baire space: which sets of infinite sequences can a
bit-emitting observer eventually always get right, and from what kind of
information stream.

The package builds the whole pipeline: eventually periodic points, a
first-order language of facts about them with sound three-valued
evaluation, serializable set codes with bounded membership checking, dual
union/intersection presentations with exactness certificates, synthesis of
the two-frontier guesser from a fact listing, extraction of codes back out
of any guesser, translations between value-prefix and fact-bit boards,
game simulation with stabilization evidence, and a diagonalizing adversary
for sets no guesser captures.
"""

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
    f_at,
    f_atom,
    is_quantifier_free,
    is_sentence,
    negate,
)
from .signature import DEFAULT_SIGNATURE, Signature
from .evaluate import (
    DEFAULT_FUEL,
    Truth,
    UndecidedError,
    decide_prefix,
    determination_bound,
    determined_by,
    evaluate,
    truth_bit,
)
from .classify import Prenex, SentenceClass, classify, prenex
from .codes import (
    CoCylinder,
    Code,
    Cylinder,
    ExplicitTailFamily,
    Family,
    FiniteIntersection,
    FiniteUnion,
    GuessEvent,
    IndexedIntersection,
    IndexedUnion,
    SentenceLeaf,
    Verdict,
    complement,
    member,
    syntactic_level,
)
from .catalog import (
    CATALOG,
    DeltaPrimePair,
    canonical_name,
    catalog_oracle,
    catalog_pair,
    exact_oracle,
    paired_catalog_names,
)
from .transforms import delta_prime_to_delta, delta_to_delta_prime
from .compiler import compile_to_sentence, reference_codes, sentence_to_code, clopen_set
from .guessers import (
    BitGuesser,
    ConstantGuesser,
    FnGuesser,
    Guesser,
    NatGuesser,
    SaturatingMachine,
    heuristic,
    heuristic_names,
    seeded_machines,
)
from .listing import CanonicalAtomicListing, FactStream, SynthesisListing
from .synthesis import (
    LimitCertificate,
    MinIndexGuesser,
    MuNuStep,
    MuNuTrace,
    SynthesisSpec,
    limit_certificate,
    run_synthesis,
    synthesize_mu_nu,
)
from .extract import explicit_expansion, guesser_to_codes, unify_family
from .translate import (
    FactPrefixGuesser,
    PrefixFactTape,
    SentenceFactGuesser,
    prefix_to_sentence_guesser,
    sentence_to_prefix_guesser,
)
from .game import (
    AdversaryReport,
    GameConfig,
    GameTrace,
    adjudicate,
    diagonalize,
    run_game,
    trace_jsonl,
)
from .corpus import corpus_points, corpus_sentences, in_atomic_fragment, largest_f_index
from .dsl import DslError, PrintError, parse, to_dsl
from .manifest import RunManifest

__version__ = "0.1.0"

__all__ = [
    "Point",
    "And", "Const", "Eq", "Exists", "FApp", "Forall", "Formula", "FunApp",
    "Not", "Or", "PFunApp", "PredApp", "Term", "Var",
    "f_at", "f_atom", "is_quantifier_free", "is_sentence", "negate",
    "DEFAULT_SIGNATURE", "Signature",
    "DEFAULT_FUEL", "Truth", "UndecidedError", "decide_prefix",
    "determination_bound", "determined_by", "evaluate", "truth_bit",
    "Prenex", "SentenceClass", "classify", "prenex",
    "CoCylinder", "Code", "Cylinder", "ExplicitTailFamily", "Family",
    "FiniteIntersection", "FiniteUnion", "GuessEvent",
    "IndexedIntersection", "IndexedUnion", "SentenceLeaf", "Verdict",
    "complement", "member", "syntactic_level",
    "CATALOG", "DeltaPrimePair", "canonical_name", "catalog_oracle",
    "catalog_pair", "exact_oracle", "paired_catalog_names",
    "delta_prime_to_delta", "delta_to_delta_prime",
    "compile_to_sentence", "reference_codes", "sentence_to_code", "clopen_set",
    "BitGuesser", "ConstantGuesser", "FnGuesser", "Guesser", "NatGuesser",
    "SaturatingMachine", "heuristic", "heuristic_names", "seeded_machines",
    "CanonicalAtomicListing", "FactStream", "SynthesisListing",
    "LimitCertificate", "MinIndexGuesser", "MuNuStep", "MuNuTrace",
    "SynthesisSpec", "limit_certificate", "run_synthesis", "synthesize_mu_nu",
    "explicit_expansion", "guesser_to_codes", "unify_family",
    "FactPrefixGuesser", "PrefixFactTape", "SentenceFactGuesser",
    "prefix_to_sentence_guesser", "sentence_to_prefix_guesser",
    "AdversaryReport", "GameConfig", "GameTrace", "adjudicate",
    "diagonalize", "run_game", "trace_jsonl",
    "corpus_points", "corpus_sentences", "in_atomic_fragment", "largest_f_index",
    "DslError", "PrintError", "parse", "to_dsl",
    "RunManifest",
]
