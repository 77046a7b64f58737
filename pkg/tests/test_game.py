"""Game simulation, trace evidence, adjudication, and the diagonalizer."""

import json

import pytest

from baireguess import (
    ConstantGuesser,
    FnGuesser,
    GameConfig,
    Point,
    SynthesisSpec,
    adjudicate,
    catalog_pair,
    diagonalize,
    exact_oracle,
    heuristic,
    heuristic_names,
    run_game,
    synthesize_mu_nu,
    trace_jsonl,
)
from baireguess.game import (
    CONSISTENT_WIN_ALICE,
    CONSISTENT_WIN_BOB,
    FACT_GAME,
    PREFIX_GAME,
    UNSTABLE_AT_HORIZON,
)


def test_config_validation():
    with pytest.raises(ValueError):
        GameConfig(mode="royale")
    with pytest.raises(ValueError):
        GameConfig(rounds=3, window=4)
    with pytest.raises(ValueError):
        GameConfig(window=0)


def test_board_type_checking():
    p = Point((), (1,))
    with pytest.raises(TypeError):
        run_game(p, synthesize_mu_nu(SynthesisSpec(catalog_pair("equal-first-two"))), GameConfig())
    with pytest.raises(TypeError):
        run_game(p, ConstantGuesser(1), GameConfig(mode=FACT_GAME, listing=None))  # NatGuesser


def test_constant_bob_pinned_trace():
    trace = run_game(Point((), (1,)), ConstantGuesser(1), GameConfig(rounds=10))
    assert trace.flips == 0
    assert trace.final_guess == 1
    assert trace.stabilization_index == 1
    assert len(trace.records) == 10
    assert trace.records[0].round == 1 and trace.records[0].input == 1


def test_deterministic_and_replayable():
    bob = heuristic("last-is-zero")
    cfg = GameConfig(rounds=40)
    p = Point((0, 2), (1, 0))
    a = run_game(p, bob, cfg)
    b = run_game(p, bob, cfg)
    assert a == b
    # replaying bob on the recorded inputs reproduces the guesses
    assert list(a.guesses) == bob.outputs_along([r.input for r in a.records])


def test_flips_and_stabilization_window():
    # guess = last move: on (0 1 1 1 ...) it flips once then holds 1
    p = Point((0,), (1,))
    bob = FnGuesser(lambda ms: ms[-1] if ms else 0, "echo")
    trace = run_game(p, bob, GameConfig(rounds=12, window=3))
    assert trace.flips == 1
    assert trace.stabilization_index == 2
    assert trace.final_guess == 1
    # a window longer than the trailing run withholds stabilization
    short = run_game(p, bob, GameConfig(rounds=12, window=12))
    assert short.stabilization_index is None and short.final_guess is None


def test_adjudication():
    p = Point((0,), (1,))
    bob = FnGuesser(lambda ms: ms[-1] if ms else 0, "echo")
    trace = run_game(p, bob, GameConfig(rounds=12, window=3))
    assert adjudicate(trace, True) == CONSISTENT_WIN_BOB
    assert adjudicate(trace, False) == CONSISTENT_WIN_ALICE
    unstable = run_game(p, bob, GameConfig(rounds=12, window=12))
    assert adjudicate(unstable, True) == UNSTABLE_AT_HORIZON


def test_fact_game_with_synthesized_guesser():
    spec = SynthesisSpec(catalog_pair("exactly-zeros", k=1))
    bob = synthesize_mu_nu(spec)
    p = Point((0, 2), (1,))
    cfg = GameConfig(mode=FACT_GAME, rounds=1500, window=32, fuel=64, listing=spec.listing)
    trace = run_game(p, bob, cfg)
    assert trace.aborted is None
    assert trace.final_guess == 1
    truth = exact_oracle("exactly-zeros", p, k=1)
    assert adjudicate(trace, truth) == CONSISTENT_WIN_BOB


def test_trace_jsonl_fields():
    p = Point((), (1,))
    trace = run_game(p, ConstantGuesser(1), GameConfig(rounds=3))
    lines = trace_jsonl(trace, verdict=CONSISTENT_WIN_BOB)
    assert len(lines) == 4
    first = json.loads(lines[0])
    assert set(first) == {"round", "input", "guess"}
    summary = json.loads(lines[-1])
    assert summary == {
        "flips": 0,
        "stabilizationIndex": 1,
        "verdict": CONSISTENT_WIN_BOB,
    }


def test_diagonalize_validation():
    with pytest.raises(ValueError):
        diagonalize(heuristic("always-one"), target="first-value")
    with pytest.raises(ValueError):
        diagonalize(heuristic("always-one"), fuel=0)


def test_diagonalize_flip_farm():
    # "last move is zero" flips on every disruption: maximal flip harvest
    report = diagonalize(heuristic("last-is-zero"), fuel=1000)
    assert report.flips == 999
    assert report.fuel_spent == 1000
    assert report.note is None


def test_diagonalize_stubborn_zero():
    report = diagonalize(heuristic("always-zero"), fuel=10_000, phase_cap=500)
    assert report.fuel_spent == 500  # one full quiet phase, then indicted
    assert report.final_guess == 0
    assert report.note is not None and "stabilized 0" in report.note


def test_diagonalize_stubborn_one():
    report = diagonalize(heuristic("always-one"), fuel=3000, phase_cap=500)
    assert report.final_guess == 1
    assert report.note is not None and "stabilized 1" in report.note
    # every move was a disruption
    assert all(m == 1 for m in report.prefix)


def test_diagonalize_defeats_every_bundled_heuristic():
    for name in heuristic_names():
        report = diagonalize(heuristic(name), fuel=10_000)
        assert report.flips >= 10 or report.note is not None, name


def test_replaying_the_prefix_reproduces_flips():
    report = diagonalize(heuristic("sticky-faith"), fuel=2000)
    bob = heuristic("sticky-faith")
    outs = bob.outputs_along(report.prefix)
    flips = sum(1 for a, b in zip(outs, outs[1:]) if a != b)
    assert flips >= report.flips
