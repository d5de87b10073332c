"""Structured report documents and their human-readable rendering.

The structured document is the source of truth: a JSON-serializable dict
with explicit tool version and seed, byte-reproducible for a fixed config
(keys sorted, no timestamps, floats via repr).  The human table is derived
from the same data, never the other way around.
"""

from __future__ import annotations

import json
from typing import Any

from .protocol import ProtocolConfig, ScoreReport

TOOL_NAME = "ariselect"


def config_to_dict(cfg: ProtocolConfig) -> dict[str, Any]:
    return {
        "repetitions": cfg.repetitions,
        "fraction": cfg.fraction,
        "absolute": cfg.absolute,
        "seed": cfg.seed,
        "normalize": cfg.normalize,
        "relief_neighbors": cfg.relief_neighbors,
    }


def report_to_dict(report: ScoreReport) -> dict[str, Any]:
    return {
        "method": report.method.value,
        "sample_size": report.sample_size,
        "redundant_fraction": report.redundant_fraction,
        "config": config_to_dict(report.config),
        "features": [
            {
                "index": s.feature,
                "name": s.name,
                "raw_mean": s.raw_mean,
                "normalized": s.normalized,
                "flags": sorted(s.flags),
                "counts": {
                    "ratio": s.ratio_count,
                    "zero_variance": s.zero_variance_count,
                    "redundant": s.redundant_count,
                },
            }
            for s in report.scores
        ],
    }


def build_document(
    command: str,
    version: str,
    seed: int,
    dataset: dict[str, Any],
    body: dict[str, Any],
) -> dict[str, Any]:
    """Assemble the self-describing document envelope."""
    return {
        "tool": TOOL_NAME,
        "version": version,
        "command": command,
        "seed": seed,
        "dataset": dataset,
        **body,
    }


def to_json(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def human_table(report: ScoreReport) -> str:
    """Fixed-width text table of one report."""
    lines = [
        f"method: {report.method.value}   sample_size: {report.sample_size}   "
        f"repetitions: {report.repetitions}",
        f"{'feature':<12}{'raw_mean':>12}{'normalized':>12}  flags",
    ]
    for s in report.scores:
        norm = "-" if s.normalized is None else f"{s.normalized:.4f}"
        flags = ",".join(sorted(s.flags)) if s.flags else "-"
        lines.append(f"{s.name:<12}{s.raw_mean:>12.4f}{norm:>12}  {flags}")
    if report.redundant_fraction > 0:
        lines.append(f"redundant-flagged features: {report.redundant_fraction:.1%}")
    return "\n".join(lines)
