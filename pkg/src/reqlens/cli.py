"""Command-line entry points.

Subcommands: train, evaluate, explain, aggregate, ablate, serve. Usage
errors exit 2 (argparse), data errors exit 1 with a machine-readable JSON
error line on stderr. All randomness is controlled by --seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .analysis import aggregate, map_subclasses, partition, top_k, word_report_rows
from .corpus import load_dataset, split
from .errors import ReqlensError
from .experiment import ablation_matrix, format_matrix, matrix_to_dict
from .forest import ForestParams
from .lime import LimeConfig, explain_document, explanation_to_dict
from .pipeline import (
    dump_json,
    evaluate_pipeline,
    load_pipeline,
    pipeline_to_dict,
    train_pipeline,
)
from .preprocess import PreprocessConfig, default_stopwords, make_profile, preprocess, read_word_list


def _add_data_arg(parser):
    parser.add_argument("--data", required=True, help="PROMISE-style CSV dataset path")


def _add_profile_args(parser):
    parser.add_argument(
        "--removal-profile",
        default="A",
        choices=["A", "A-M", "A-M-C"],
        help="word removal profile (default A)",
    )
    parser.add_argument(
        "--extra-remove",
        help="file with extra words to remove (one per line, '#' comments)",
    )


def _add_forest_args(parser):
    parser.add_argument("--trees", type=int, default=100)
    parser.add_argument("--max-depth", type=int, default=None)
    parser.add_argument("--min-samples-split", type=int, default=2)


def _pp_config(args) -> PreprocessConfig:
    extra = read_word_list(args.extra_remove) if getattr(args, "extra_remove", None) else ()
    return PreprocessConfig(
        stopwords=default_stopwords(),
        profile=make_profile(args.removal_profile, extra),
    )


def _forest_params(args, seed) -> ForestParams:
    return ForestParams(
        n_trees=args.trees,
        max_depth=args.max_depth,
        min_samples_split=args.min_samples_split,
        seed=seed,
    )


def cmd_train(args):
    dataset = load_dataset(args.data)
    ds = split(dataset, args.test_fraction, args.seed)
    pipeline = train_pipeline(ds.train, _pp_config(args), _forest_params(args, args.seed))
    metrics = evaluate_pipeline(pipeline, ds.test)
    dump_json(pipeline_to_dict(pipeline), args.out)
    print(json.dumps({"metrics": metrics.as_dict(), "model": str(args.out)}, sort_keys=True))
    return 0


def cmd_evaluate(args):
    dataset = load_dataset(args.data)
    pipeline = load_pipeline(args.model)
    if args.seed is not None:
        dataset = split(dataset, args.test_fraction, args.seed).test
    metrics = evaluate_pipeline(pipeline, dataset)
    print(json.dumps({"metrics": metrics.as_dict(), "n_requirements": len(dataset)}, sort_keys=True))
    return 0


def cmd_explain(args):
    dataset = load_dataset(args.data)
    pipeline = load_pipeline(args.model)
    by_id = {r.id: r for r in dataset}
    if args.id not in by_id:
        raise ReqlensError(f"requirement id {args.id} not in dataset")
    cfg = LimeConfig(
        n_samples=args.samples,
        sigma=args.sigma,
        ridge_lambda=args.ridge_lambda,
        top_k=args.topk,
        seed=args.seed,
    )
    doc = preprocess(by_id[args.id], pipeline.pp_config)
    explanation = explain_document(pipeline.model, doc, cfg)
    body = explanation_to_dict(explanation)
    body["text"] = by_id[args.id].text
    print(dump_json(body), end="")
    return 0


def cmd_aggregate(args):
    dataset = load_dataset(args.data)
    pipeline = load_pipeline(args.model)
    test = split(dataset, args.test_fraction, args.seed).test
    cfg = LimeConfig(
        n_samples=args.samples,
        sigma=args.sigma,
        ridge_lambda=args.ridge_lambda,
        top_k=args.topk,
        seed=args.seed,
    )
    explanations = []
    for req in test:
        doc = preprocess(req, pipeline.pp_config)
        if not doc.stems:
            continue
        explanations.append(explain_document(pipeline.model, doc, cfg))
    stats = aggregate(explanations)
    parts = partition(stats)
    subclasses = map_subclasses(explanations, {r.id: r for r in dataset})
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    report = {
        "n_explanations": len(explanations),
        "supportive": {
            "total": stats.n_supportive,
            "counts": dict(sorted(stats.supportive_counts.items())),
            "top30": [{"stem": s, "percentage": p} for s, p in top_k(stats.supportive_counts, 30)]
            if stats.n_supportive
            else [],
        },
        "distractive": {
            "total": stats.n_distractive,
            "counts": dict(sorted(stats.distractive_counts.items())),
            "top30": [{"stem": s, "percentage": p} for s, p in top_k(stats.distractive_counts, 30)]
            if stats.n_distractive
            else [],
        },
        "sets": {
            "A": sorted(parts.distractive_only),
            "B": sorted(parts.supportive_only),
            "C": sorted(parts.common),
        },
        "subclasses": dict(sorted(subclasses.items())),
    }
    dump_json(report, out_dir / "word_report.json")

    rows = word_report_rows(stats, parts, subclasses)
    with open(out_dir / "word_report.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["word", "side", "count", "percentage", "set", "subclass"],
            lineterminator="\n",
        )
        writer.writeheader()
        writer.writerows(rows)

    # plot-ready top-30 occurrence percentages, one file per side
    for side, counts, total in (
        ("supportive", stats.supportive_counts, stats.n_supportive),
        ("distractive", stats.distractive_counts, stats.n_distractive),
    ):
        with open(out_dir / f"top30_{side}.csv", "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["stem", "percentage"])
            if total:
                writer.writerows(top_k(counts, 30))
    print(json.dumps({"out": str(out_dir), "n_explanations": len(explanations)}, sort_keys=True))
    return 0


def cmd_ablate(args):
    dataset = load_dataset(args.data)
    matrix = ablation_matrix(
        dataset,
        n_runs=args.runs,
        base_seed=args.seed,
        alpha=args.alpha,
        params=_forest_params(args, args.seed),
        test_fraction=args.test_fraction,
    )
    if args.out:
        dump_json(matrix_to_dict(matrix), args.out)
    print(format_matrix(matrix))
    return 0


def cmd_serve(args):
    import uvicorn

    from .lime import LimeConfig as _LimeConfig
    from .service import create_app
    from .session import SessionState

    dataset = load_dataset(args.data)
    extra = read_word_list(args.extra_remove) if args.extra_remove else ()
    session = SessionState(
        dataset,
        profile_name=args.removal_profile,
        extra_stems=extra,
        seed=args.seed,
        test_fraction=args.test_fraction,
        params=_forest_params(args, args.seed),
        lime_defaults=_LimeConfig(n_samples=args.samples, seed=args.seed),
    )
    static_dir = args.static_dir
    if static_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "explorer" / "dist"
        static_dir = bundled if bundled.is_dir() else None
    app = create_app(session, static_dir=static_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reqlens")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model on a seeded 80/20 split")
    _add_data_arg(p)
    _add_profile_args(p)
    _add_forest_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--out", required=True, help="model JSON output path")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="evaluate a saved model")
    _add_data_arg(p)
    p.add_argument("--model", required=True)
    p.add_argument("--seed", type=int, default=None, help="evaluate on this seed's test split")
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("explain", help="explain one requirement")
    _add_data_arg(p)
    p.add_argument("--model", required=True)
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--sigma", type=float, default=LimeConfig().sigma)
    p.add_argument("--ridge-lambda", type=float, default=1.0)
    p.add_argument("--topk", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("aggregate", help="aggregate explanations over the test split")
    _add_data_arg(p)
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True, help="report directory")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--sigma", type=float, default=LimeConfig().sigma)
    p.add_argument("--ridge-lambda", type=float, default=1.0)
    p.add_argument("--topk", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("ablate", help="A / A-M / A-M-C significance matrix")
    _add_data_arg(p)
    _add_forest_args(p)
    p.add_argument("--runs", type=int, default=30)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--out", help="matrix JSON output path")
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("serve", help="run the HTTP service")
    _add_data_arg(p)
    _add_profile_args(p)
    _add_forest_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static-dir", default=None, help="explorer assets directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ReqlensError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1
    except FileNotFoundError as exc:
        print(json.dumps({"error": "FileNotFound", "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
