"""Command-line driver.

Four subcommands: ``generate`` writes a synthetic dataset as CSV, ``score``
runs the repeated-subsampling protocol for one or more methods, ``eval``
cross-validates a classifier on each method's top-k features, and ``sweep``
probes how sentinel prevalence reacts to universe size versus sample size.

Human-readable tables go to standard output; ``--out`` additionally writes
the structured JSON document, which is byte-reproducible for a fixed seed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .baselines import MethodId
from .dataset import CategoricalDataset, load_csv, write_csv
from .errors import AriSelectError
from .evaluation import EvalConfig, cv_accuracy, top_k_features
from .protocol import ProtocolConfig, dimensionality_sweep, run_protocol
from .report import build_document, human_table, report_to_dict, to_json
from .synthetic import FUNCTION_IDS, SyntheticSpec, generate

DEFAULT_FRACTION = 1.0 / 3.0


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _method_list(text: str) -> list[MethodId]:
    methods = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            methods.append(MethodId(part))
        except ValueError:
            valid = ",".join(m.value for m in MethodId)
            raise argparse.ArgumentTypeError(f"unknown method {part!r}; choose from {valid}")
    if not methods:
        raise argparse.ArgumentTypeError("expected at least one method")
    return methods


def _dataset_descriptor(source: str, ds: CategoricalDataset) -> dict[str, Any]:
    return {
        "source": source,
        "rows": ds.n_rows,
        "features": list(ds.feature_names),
        "label": ds.label_name,
    }


def _protocol_config(args: argparse.Namespace, normalize: bool) -> ProtocolConfig:
    fraction = args.fraction
    if fraction is None and args.absolute is None:
        fraction = DEFAULT_FRACTION
    return ProtocolConfig(
        repetitions=args.reps,
        fraction=fraction,
        absolute=args.absolute,
        seed=args.seed,
        normalize=normalize,
    )


def _write_document(path: str, document: dict[str, Any]) -> None:
    Path(path).write_text(to_json(document), encoding="utf-8")


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = SyntheticSpec(
        function=args.function,
        dimension=args.dim,
        range_size=args.range,
        sample_size=None if args.full else args.sample,
        seed=args.seed,
    )
    ds = generate(spec)
    out = args.out if args.out else f"{args.function}.csv"
    write_csv(ds, out)
    print(f"wrote {out}: {ds.n_rows} rows, {ds.n_features} features + label")
    return 0


def _cmd_score(args: argparse.Namespace) -> int:
    ds = load_csv(args.data)
    cfg = _protocol_config(args, normalize=not args.no_normalize)
    reports = [run_protocol(ds, method, cfg) for method in args.methods]
    for report in reports:
        print(human_table(report))
        print()
    if args.out:
        document = build_document(
            command="score",
            version=__version__,
            seed=args.seed,
            dataset=_dataset_descriptor(args.data, ds),
            body={"reports": [report_to_dict(r) for r in reports]},
        )
        _write_document(args.out, document)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    ds = load_csv(args.data)
    proto_cfg = _protocol_config(args, normalize=True)
    eval_cfg = EvalConfig(
        k=args.k,
        folds=args.folds,
        seed=args.seed,
        stratified=not args.no_stratify,
    )
    baseline = cv_accuracy(ds, list(range(ds.n_features)), eval_cfg)
    print(f"baseline (all {ds.n_features} features): {baseline:.4f}")
    sections = []
    for method in args.methods:
        report = run_protocol(ds, method, proto_cfg)
        chosen = top_k_features(report, args.k)
        accuracy = cv_accuracy(ds, chosen, eval_cfg)
        names = [ds.feature_names[f] for f in chosen]
        print(
            f"{method.value} top-{args.k} -> {','.join(names)} "
            f"({len(chosen)} used): {accuracy:.4f}"
        )
        sections.append(
            {
                "method": method.value,
                "k": args.k,
                "features_used": names,
                "accuracy": accuracy,
                "report": report_to_dict(report),
            }
        )
    if args.out:
        document = build_document(
            command="eval",
            version=__version__,
            seed=args.seed,
            dataset=_dataset_descriptor(args.data, ds),
            body={
                "baseline_accuracy": baseline,
                "folds": args.folds,
                "stratified": not args.no_stratify,
                "methods": sections,
            },
        )
        _write_document(args.out, document)
    return 0


def _coverage_percent(size: int, universe: int) -> float:
    return 100.0 * size / universe


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = ProtocolConfig(
        repetitions=args.reps,
        seed=args.seed,
        normalize=args.normalize,
    )
    entries = []
    for dim in args.dims:
        for range_size in args.ranges:
            template = SyntheticSpec(
                function=args.function, dimension=dim, range_size=range_size
            )
            reports = dimensionality_sweep(template, args.sizes, cfg)
            for size, report in zip(args.sizes, reports):
                universe = template.universe_size
                coverage = _coverage_percent(size, universe)
                shown = f"{coverage:.1f}" if coverage >= 0.1 else f"{coverage:.2g}"
                print(
                    f"function={args.function} dim={dim} range={range_size} size={size}: "
                    f"universe={universe} coverage={shown}% "
                    f"redundant-flagged={report.redundant_fraction:.1%}"
                )
                frequencies = " ".join(
                    f"{s.name}={s.redundant_count / report.repetitions:.2f}"
                    for s in report.scores
                )
                print(f"  sentinel-frequency: {frequencies}")
                entries.append(
                    {
                        "function": args.function,
                        "dimension": dim,
                        "range": range_size,
                        "size": size,
                        "universe": universe,
                        "coverage_percent": coverage,
                        "report": report_to_dict(report),
                    }
                )
    if args.out:
        document = build_document(
            command="sweep",
            version=__version__,
            seed=args.seed,
            dataset={"source": "synthetic", "function": args.function},
            body={"sweeps": entries},
        )
        _write_document(args.out, document)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ariselect",
        description="Feature scoring for categorical data with sentinel-aware "
        "distance-1 pair analysis and standard baselines.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a synthetic dataset as CSV")
    p_gen.add_argument("--function", required=True, choices=FUNCTION_IDS)
    p_gen.add_argument("--dim", type=int, default=10, help="feature count (default 10)")
    p_gen.add_argument("--range", type=int, default=2, help="values per feature (default 2)")
    mode = p_gen.add_mutually_exclusive_group(required=True)
    mode.add_argument("--full", action="store_true", help="enumerate the whole universe")
    mode.add_argument("--sample", type=int, help="draw this many rows uniformly")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="output CSV path (default <function>.csv)")
    p_gen.set_defaults(func=_cmd_generate)

    p_score = sub.add_parser("score", help="run the repeated-subsampling protocol")
    p_score.add_argument("data", help="input CSV")
    p_score.add_argument("--methods", type=_method_list, default=[MethodId.ARI])
    p_score.add_argument("--reps", type=int, default=10)
    p_score.add_argument("--fraction", type=float, default=None,
                         help="subsample fraction in (0,1] (default 1/3)")
    p_score.add_argument("--absolute", type=int, default=None, help="subsample row count")
    p_score.add_argument("--seed", type=int, default=0)
    p_score.add_argument("--no-normalize", action="store_true")
    p_score.add_argument("--out", help="structured JSON report path")
    p_score.set_defaults(func=_cmd_score)

    p_eval = sub.add_parser("eval", help="cross-validate top-k features per method")
    p_eval.add_argument("data", help="input CSV")
    p_eval.add_argument("--methods", type=_method_list, default=[MethodId.ARI])
    p_eval.add_argument("--k", type=int, default=4, help="feature budget (default 4)")
    p_eval.add_argument("--folds", type=int, default=10)
    p_eval.add_argument("--reps", type=int, default=10)
    p_eval.add_argument("--fraction", type=float, default=None,
                        help="scoring subsample fraction (default 1/3)")
    p_eval.add_argument("--absolute", type=int, default=None)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--no-stratify", action="store_true")
    p_eval.add_argument("--out", help="structured JSON report path")
    p_eval.set_defaults(func=_cmd_eval)

    p_sweep = sub.add_parser("sweep", help="sentinel prevalence across universe/sample sizes")
    p_sweep.add_argument("--function", required=True, choices=FUNCTION_IDS)
    p_sweep.add_argument("--dims", type=_int_list, default=[10])
    p_sweep.add_argument("--ranges", type=_int_list, default=[2])
    p_sweep.add_argument("--sizes", type=_int_list, required=True)
    p_sweep.add_argument("--reps", type=int, default=10)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--normalize", action="store_true",
                         help="sum-normalize scores (off by default: tiny samples "
                         "may flag every feature)")
    p_sweep.add_argument("--out", help="structured JSON report path")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AriSelectError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
