"""Run manifests: the reproducibility record embedded in every CLI output.

A manifest captures the subcommand, its raw textual inputs, and the full
effective configuration (after flag/env/default resolution), so rerunning
from the manifest reproduces byte-identical reports.  JSON with sorted
keys everywhere; no timestamps, no floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

ARTIFACT_VERSION = "0.1.0"

# listing-order identifiers recorded in manifests
SYNTHESIS_ORDER = "cert-lanes-16"  # certificate lanes with every 16th slot canonical
CANONICAL_ORDER = "canonical-dense"  # atoms at even slots, sentence codec at odd


@dataclass(frozen=True)
class RunManifest:
    command: str
    inputs: Tuple[Tuple[str, str], ...]  # sorted (flag, raw value) pairs
    fuel: int
    rounds: int
    window: int
    order: int
    listing_order: str
    seed: int
    version: str = ARTIFACT_VERSION

    @staticmethod
    def make(
        command: str,
        inputs: Dict[str, str],
        *,
        fuel: int,
        rounds: int,
        window: int,
        order: int,
        listing_order: str,
        seed: int,
    ) -> "RunManifest":
        return RunManifest(
            command=command,
            inputs=tuple(sorted((k, str(v)) for k, v in inputs.items())),
            fuel=fuel,
            rounds=rounds,
            window=window,
            order=order,
            listing_order=listing_order,
            seed=seed,
        )

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": {k: v for k, v in self.inputs},
            "config": {
                "fuel": self.fuel,
                "rounds": self.rounds,
                "window": self.window,
                "order": self.order,
                "listingOrder": self.listing_order,
                "seed": self.seed,
            },
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @staticmethod
    def from_dict(data: dict) -> "RunManifest":
        cfg = data["config"]
        return RunManifest(
            command=data["command"],
            inputs=tuple(sorted((k, str(v)) for k, v in data["inputs"].items())),
            fuel=int(cfg["fuel"]),
            rounds=int(cfg["rounds"]),
            window=int(cfg["window"]),
            order=int(cfg["order"]),
            listing_order=str(cfg["listingOrder"]),
            seed=int(cfg["seed"]),
        )

    def argv(self) -> List[str]:
        """Command line that reruns this manifest exactly.

        All config values are passed as explicit flags so environment
        variables cannot change the replay.
        """
        out = [self.command]
        for flag, value in self.inputs:
            out.extend([f"--{flag}", value])
        out.extend(
            [
                "--fuel", str(self.fuel),
                "--rounds", str(self.rounds),
                "--window", str(self.window),
                "--order", str(self.order),
                "--seed", str(self.seed),
            ]
        )
        return out


def load_manifest(text: str) -> RunManifest:
    return RunManifest.from_dict(json.loads(text))
