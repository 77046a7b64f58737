"""Command-line surface tying the modules into reproducible runs.

Subcommands: eval, synthesize, play, roundtrip, unify, compile, adversary.
Every JSON report embeds its run manifest; rerunning a manifest's argv
reproduces the bytes exactly (all defaults are resolved into the manifest,
and nothing nondeterministic enters a report).

Flag resolution precedence: explicit flag > environment variable > default.
Environment variables: BAIREGUESS_FUEL, BAIREGUESS_ROUNDS,
BAIREGUESS_WINDOW, BAIREGUESS_ORDER, BAIREGUESS_SEED, BAIREGUESS_FORMAT.

Exit codes: 0 ok, 2 undecided (an evaluation or game could not reach a
decision at the configured fuel), 3 parse/usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Callable, Dict, List, Optional, Tuple

from .catalog import CATALOG, canonical_name, catalog_oracle, catalog_pair
from .codes import Verdict, member
from .compiler import compile_to_sentence, reference_codes
from .dsl import DslError, parse, parse_code, parse_point, parse_sentence, to_dsl
from .evaluate import DEFAULT_FUEL, Truth, evaluate
from .extract import unify_family
from .game import (
    FACT_GAME,
    PREFIX_GAME,
    GameConfig,
    adjudicate,
    diagonalize,
    run_game,
    trace_jsonl,
)
from .guessers import NatGuesser, heuristic, heuristic_names, seeded_machines
from .manifest import (
    CANONICAL_ORDER,
    SYNTHESIS_ORDER,
    RunManifest,
)
from .points import Point
from .synthesis import SynthesisSpec, limit_certificate, synthesize_mu_nu
from .translate import prefix_to_sentence_guesser, sentence_to_prefix_guesser

EXIT_OK = 0
EXIT_UNDECIDED = 2
EXIT_PARSE = 3

DEFAULT_ROUNDS = 1000
DEFAULT_WINDOW = 32
DEFAULT_SEED = 2024

ENV_PREFIX = "BAIREGUESS_"


class CliError(Exception):
    """Usage-level failure; message printed to stderr, exit code 3."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 means undecided here,
    # so route usage problems through CliError instead
    def error(self, message: str):
        raise CliError(message)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"environment variable {ENV_PREFIX}{name} must be an integer")


def _resolve(flag_value: Optional[int], env_name: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = _env_int(env_name)
    if env is not None:
        return env
    return default


def _resolve_format(flag_value: Optional[str]) -> str:
    fmt = flag_value or os.environ.get(ENV_PREFIX + "FORMAT") or "json"
    if fmt not in ("json", "text"):
        raise CliError(f"format must be json or text, got {fmt!r}")
    return fmt


# ---------------------------------------------------------------------------
# Input readers
# ---------------------------------------------------------------------------


def _spec_from_text(text: str) -> SynthesisSpec:
    """A (catalog ...) form, a bare catalog name, or name-<param> shorthand."""
    stripped = text.strip()
    if stripped.startswith("("):
        obj = parse(stripped)
        if not isinstance(obj, SynthesisSpec):
            raise CliError(f"--spec needs a (catalog ...) form, got {stripped!r}")
        return obj
    try:
        name = canonical_name(stripped)
    except KeyError:
        m = re.fullmatch(r"(.+)-(\d+)", stripped)
        if not m:
            raise CliError(f"unknown catalog set {stripped!r}")
        try:
            name = canonical_name(m.group(1))
        except KeyError:
            raise CliError(f"unknown catalog set {stripped!r}")
        entry = CATALOG[name]
        if len(entry.params) != 1:
            raise CliError(
                f"{name} takes parameters {entry.params}; use the (catalog ...) form"
            )
        return SynthesisSpec(catalog_pair(name, **{entry.params[0]: int(m.group(2))}))
    entry = CATALOG[name]
    if entry.params:
        raise CliError(
            f"{name} needs parameters; write {stripped}-<n> or a (catalog ...) form"
        )
    return SynthesisSpec(catalog_pair(name))


def _point_from_text(text: str) -> Point:
    return parse_point(text.strip())


def _guesser_from_name(name: str, seed: int) -> NatGuesser:
    m = re.fullmatch(r"machine-(\d+)", name.strip())
    if m:
        idx = int(m.group(1))
        machines = seeded_machines(count=max(20, idx + 1), seed=seed)
        return machines[idx]
    try:
        return heuristic(name.strip())
    except KeyError:
        known = ", ".join(sorted(heuristic_names()))
        raise CliError(
            f"unknown guesser {name!r}; known heuristics: {known}; "
            f"seeded machines are machine-0 .. machine-19"
        )


def _spec_oracle(spec: SynthesisSpec) -> Callable[[Point], bool]:
    return catalog_oracle(spec.pair.name, **spec.pair.params)


# ---------------------------------------------------------------------------
# Subcommands: each returns (report dict, text lines, exit code)
# ---------------------------------------------------------------------------

_Result = Tuple[dict, List[str], int]


def _cmd_eval(args, cfg) -> _Result:
    if bool(args.sentence) == bool(args.code):
        raise CliError("eval needs exactly one of --sentence or --code")
    point = _point_from_text(args.point)
    if args.sentence:
        phi = parse_sentence(args.sentence)
        truth = evaluate(phi, point, fuel=cfg["fuel"])
        value = {Truth.TRUE: True, Truth.FALSE: False, Truth.UNKNOWN: None}[truth]
        report = {"kind": "sentence", "value": value, "decided": value is not None}
        text = [str(truth.name.title()) if value is None else str(value)]
    else:
        code = parse_code(args.code)
        verdict = member(code, point, fuel=cfg["fuel"])
        value = {Verdict.IN: True, Verdict.OUT: False, Verdict.UNKNOWN: None}[verdict]
        report = {"kind": "code", "value": value, "decided": value is not None}
        text = [verdict.name]
    return report, text, EXIT_OK if value is not None else EXIT_UNDECIDED


def _cmd_synthesize(args, cfg) -> _Result:
    spec = _spec_from_text(args.spec)
    guesser = synthesize_mu_nu(spec)
    report = {
        "pair": spec.pair.name,
        "params": {k: list(v) if isinstance(v, tuple) else v
                   for k, v in sorted(spec.pair.params.items())},
        "order": spec.pair.class_order,
        "guesser": guesser.name,
    }
    text = [f"synthesized {guesser.name} (order {spec.pair.class_order})"]
    if args.point:
        point = _point_from_text(args.point)
        cert = limit_certificate(spec, point)
        report["limit"] = cert.limit
        report["stabilizationBound"] = cert.stabilization_bound
        text.append(f"limit {cert.limit} from fact {cert.stabilization_bound} on")
    return report, text, EXIT_OK


def _cmd_play(args, cfg) -> _Result:
    spec = _spec_from_text(args.spec)
    point = _point_from_text(args.point)
    mode = args.mode
    if mode == PREFIX_GAME:
        if not args.guesser:
            raise CliError("prefix-mode play needs --guesser")
        bob = _guesser_from_name(args.guesser, cfg["seed"])
        game_cfg = GameConfig(
            mode=PREFIX_GAME, rounds=cfg["rounds"], window=cfg["window"],
            fuel=cfg["fuel"],
        )
    else:
        bob = synthesize_mu_nu(spec)
        game_cfg = GameConfig(
            mode=FACT_GAME, rounds=cfg["rounds"], window=cfg["window"],
            fuel=cfg["fuel"], order=spec.pair.class_order, listing=spec.listing,
        )
    trace = run_game(point, bob, game_cfg)
    truth = _spec_oracle(spec)(point)
    verdict = adjudicate(trace, truth)
    report = {
        "mode": mode,
        "flips": trace.flips,
        "stabilizationIndex": trace.stabilization_index,
        "finalGuess": trace.final_guess,
        "roundsPlayed": len(trace.records),
        "truth": truth,
        "verdict": verdict,
        "aborted": trace.aborted,
    }
    text = [
        f"verdict {verdict}",
        f"flips {trace.flips}",
        f"stabilization {trace.stabilization_index}",
        f"final {trace.final_guess}",
    ]
    if trace.aborted:
        text.append(f"aborted: {trace.aborted}")
    return report, text, EXIT_UNDECIDED if trace.aborted else EXIT_OK


def _cmd_roundtrip(args, cfg) -> _Result:
    source = _guesser_from_name(args.guesser, cfg["seed"])
    point = _point_from_text(args.point)
    horizon = cfg["rounds"]  # defaults to 10000 for this subcommand
    composed_moves = args.moves
    fact_guesser, handle = prefix_to_sentence_guesser(source)
    composed = sentence_to_prefix_guesser(fact_guesser, handle)
    src_limit = source.guess([point.at(i) for i in range(horizon)])
    out = 0
    for i in range(composed_moves):
        out = composed.feed(point.at(i))
    report = {
        "guesser": source.name,
        "sourceHorizon": horizon,
        "sourceLimit": src_limit,
        "composedMoves": composed_moves,
        "composedLimit": out,
        "decidedFacts": composed.decided_facts(),
        "agree": out == src_limit,
    }
    text = [
        f"source limit {src_limit} at {horizon} moves",
        f"composed limit {out} at {composed_moves} moves "
        f"({composed.decided_facts()} facts)",
        "agree" if out == src_limit else "DISAGREE",
    ]
    return report, text, EXIT_OK


def _cmd_unify(args, cfg) -> _Result:
    spec = _spec_from_text(args.spec)
    m = cfg["order"] if cfg["order"] >= 2 else 2
    unified = unify_family(
        spec.pair.union_form,
        spec.pair.intersection_form,
        m=m,
        name=f"unified-{spec.pair.name}",
    )
    report = {
        "pair": spec.pair.name,
        "unified": unified.name,
        "order": unified.class_order,
    }
    text = [f"unified {spec.pair.name} at order {unified.class_order}"]
    code = EXIT_OK
    if args.point:
        point = _point_from_text(args.point)
        vu = member(unified.union_form, point, fuel=cfg["fuel"])
        vi = member(unified.intersection_form, point, fuel=cfg["fuel"])
        truth = _spec_oracle(spec)(point)
        report["unionVerdict"] = vu.name
        report["intersectionVerdict"] = vi.name
        report["truth"] = truth
        text.append(f"union {vu.name}, intersection {vi.name}, truth {truth}")
        if vu is Verdict.UNKNOWN and vi is Verdict.UNKNOWN:
            code = EXIT_UNDECIDED
    return report, text, code


def _cmd_compile(args, cfg) -> _Result:
    named = reference_codes()
    if args.code in named:
        code, depth, oracle_name = named[args.code]
        code_text = args.code
    else:
        code = parse_code(args.code)
        if args.depth is None:
            raise CliError("compile needs --depth for a DSL code")
        depth, oracle_name, code_text = args.depth, None, to_dsl(code)
    compiled = compile_to_sentence(code, depth)
    side = "sigma" if compiled.union_led else "pi"
    report = {
        "code": code_text,
        "depth": depth,
        "side": side,
    }
    text = [f"compiled to a {side}-{depth} sentence"]
    exit_code = EXIT_OK
    if args.point:
        point = _point_from_text(args.point)
        truth = evaluate(compiled.sentence, point, fuel=cfg["fuel"], sig=compiled.signature)
        value = {Truth.TRUE: True, Truth.FALSE: False, Truth.UNKNOWN: None}[truth]
        report["value"] = value
        report["decided"] = value is not None
        text.append(f"value {truth.name}")
        if oracle_name is not None:
            report["truth"] = catalog_oracle(oracle_name)(point)
        if value is None:
            exit_code = EXIT_UNDECIDED
    return report, text, exit_code


def _cmd_adversary(args, cfg) -> _Result:
    bob = _guesser_from_name(args.guesser, cfg["seed"])
    rep = diagonalize(bob, target=args.target, fuel=cfg["fuel"], phase_cap=args.phase_cap)
    report = {
        "guesser": bob.name,
        "target": rep.target,
        "flips": rep.flips,
        "fuelSpent": rep.fuel_spent,
        "finalGuess": rep.final_guess,
        "trailingRun": rep.trailing_run,
        "note": rep.note,
    }
    text = [f"flips {rep.flips} in {rep.fuel_spent} moves"]
    if rep.note:
        text.append(f"note: {rep.note}")
    return report, text, EXIT_OK


_COMMANDS: Dict[str, Callable] = {
    "eval": _cmd_eval,
    "synthesize": _cmd_synthesize,
    "play": _cmd_play,
    "roundtrip": _cmd_roundtrip,
    "unify": _cmd_unify,
    "compile": _cmd_compile,
    "adversary": _cmd_adversary,
}

# flags whose raw values are recorded as manifest inputs, per subcommand
_INPUT_FLAGS: Dict[str, Tuple[str, ...]] = {
    "eval": ("sentence", "code", "point"),
    "synthesize": ("spec", "point"),
    "play": ("spec", "point", "mode", "guesser", "trace_out"),
    "roundtrip": ("guesser", "point", "moves"),
    "unify": ("spec", "point"),
    "compile": ("code", "depth", "point"),
    "adversary": ("guesser", "target", "phase_cap"),
}


def build_parser() -> _Parser:
    parser = _Parser(prog="baireguess", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--fuel", type=int, default=None,
                       help=f"evaluation budget (default {DEFAULT_FUEL})")
        p.add_argument("--rounds", type=int, default=None,
                       help=f"game rounds (default {DEFAULT_ROUNDS})")
        p.add_argument("--window", type=int, default=None,
                       help=f"stabilization window (default {DEFAULT_WINDOW})")
        p.add_argument("--order", type=int, default=None,
                       help="fragment order m (default 0)")
        p.add_argument("--seed", type=int, default=None,
                       help=f"seed for sampled artifacts (default {DEFAULT_SEED})")
        p.add_argument("--format", dest="fmt", choices=("json", "text"), default=None,
                       help="output format (default json)")

    p = sub.add_parser("eval", help="evaluate a sentence or code at a point")
    p.add_argument("--sentence", help="sentence DSL text")
    p.add_argument("--code", help="code DSL text")
    p.add_argument("--point", required=True, help="point DSL text")
    common(p)

    p = sub.add_parser("synthesize", help="build the two-frontier guesser for a catalog set")
    p.add_argument("--spec", required=True, help="(catalog ...) form or name-k shorthand")
    p.add_argument("--point", help="also certify the guess limit at this point")
    common(p)

    p = sub.add_parser("play", help="run one game and adjudicate the evidence")
    p.add_argument("--spec", required=True, help="target set (names the oracle)")
    p.add_argument("--point", required=True, help="the committed move sequence")
    p.add_argument("--mode", choices=(FACT_GAME, PREFIX_GAME), default=FACT_GAME)
    p.add_argument("--guesser", help="heuristic name (prefix mode only)")
    p.add_argument("--trace-out", dest="trace_out", help="write the JSONL trace here")
    common(p)

    p = sub.add_parser("roundtrip", help="translate a prefix guesser to facts and back")
    p.add_argument("--guesser", required=True, help="heuristic name or machine-<k>")
    p.add_argument("--point", required=True, help="point DSL text")
    p.add_argument("--moves", type=int, default=128,
                   help="moves fed to the composed guesser (default 128)")
    common(p)

    p = sub.add_parser("unify", help="merge a pair's two forms into one family")
    p.add_argument("--spec", required=True)
    p.add_argument("--point", help="report member verdicts at this point")
    common(p)

    p = sub.add_parser("compile", help="compile an indexed code into one sentence")
    p.add_argument("--code", required=True,
                   help="reference code name or code DSL text; names: "
                        + ", ".join(sorted(reference_codes())))
    p.add_argument("--depth", type=int, help="alternation depth for DSL codes")
    p.add_argument("--point", help="evaluate the compiled sentence here")
    common(p)

    p = sub.add_parser("adversary", help="diagonalize against a heuristic guesser")
    p.add_argument("--guesser", required=True)
    p.add_argument("--target", default="eventually-zero")
    p.add_argument("--phase-cap", dest="phase_cap", type=int, default=500)
    common(p)

    return parser


def _make_manifest(args, cfg) -> RunManifest:
    inputs = {}
    for flag in _INPUT_FLAGS[args.command]:
        value = getattr(args, flag, None)
        if value is not None:
            inputs[flag.replace("_", "-")] = str(value)
    if args.command in ("synthesize", "unify") or (
        args.command == "play" and args.mode == FACT_GAME
    ):
        listing_order = SYNTHESIS_ORDER
    else:
        listing_order = CANONICAL_ORDER
    return RunManifest.make(
        args.command,
        inputs,
        fuel=cfg["fuel"],
        rounds=cfg["rounds"],
        window=cfg["window"],
        order=cfg["order"],
        listing_order=listing_order,
        seed=cfg["seed"],
    )


def run(argv: Optional[List[str]] = None) -> Tuple[int, str]:
    """Parse argv, run the subcommand, and return (exit code, stdout text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    rounds_default = 10_000 if args.command == "roundtrip" else DEFAULT_ROUNDS
    cfg = {
        "fuel": _resolve(args.fuel, "FUEL", DEFAULT_FUEL),
        "rounds": _resolve(args.rounds, "ROUNDS", rounds_default),
        "window": _resolve(args.window, "WINDOW", DEFAULT_WINDOW),
        "order": _resolve(args.order, "ORDER", 0),
        "seed": _resolve(args.seed, "SEED", DEFAULT_SEED),
    }
    fmt = _resolve_format(args.fmt)
    manifest = _make_manifest(args, cfg)
    report, text, exit_code = _COMMANDS[args.command](args, cfg)

    if args.command == "play" and args.trace_out:
        point = _point_from_text(args.point)  # re-parse: cheap, keeps cmd pure
        _write_trace(args, cfg, manifest, point)

    if fmt == "json":
        payload = {"manifest": manifest.as_dict(), "report": report}
        out = json.dumps(payload, sort_keys=True, indent=2)
    else:
        out = "\n".join(text)
    return exit_code, out


def _write_trace(args, cfg, manifest: RunManifest, point: Point) -> None:
    # replays the game to export the full JSONL trace with embedded manifest
    spec = _spec_from_text(args.spec)
    if args.mode == PREFIX_GAME:
        bob = _guesser_from_name(args.guesser, cfg["seed"])
        game_cfg = GameConfig(mode=PREFIX_GAME, rounds=cfg["rounds"],
                              window=cfg["window"], fuel=cfg["fuel"])
    else:
        bob = synthesize_mu_nu(spec)
        game_cfg = GameConfig(mode=FACT_GAME, rounds=cfg["rounds"],
                              window=cfg["window"], fuel=cfg["fuel"],
                              order=spec.pair.class_order, listing=spec.listing)
    trace = run_game(point, bob, game_cfg)
    verdict = adjudicate(trace, _spec_oracle(spec)(point))
    lines = [json.dumps({"manifest": manifest.as_dict()}, sort_keys=True)]
    lines.extend(trace_jsonl(trace, verdict))
    with open(args.trace_out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        exit_code, out = run(argv)
    except CliError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DslError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (KeyError, ValueError, TypeError) as exc:
        module = type(exc).__module__
        origin = module.split(".")[-1] if module.startswith("baireguess") else "input"
        print(f"error [{origin}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(out)
    return exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
