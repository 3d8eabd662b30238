"""Command-line interface: repos, build, stats, prune, xsbt, baseline,
evaluate, bench.

Exit codes: 0 success, 1 operational error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from filelock import FileLock

from . import bench, corpus, cst, linearize, metrics, mpiedit, predictor
from .errors import MpiAssistError


def _load_config(path):
    """Key=value config file; '#' starts a comment, blank lines ignored."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise MpiAssistError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = _coerce(value.strip().strip('"'))
    return values


def _coerce(value):
    if value.lower() in ("true", "false"):
        return value.lower() == "true"
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def _locked_write(path, text):
    with FileLock(str(path) + ".lock"):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_source(path):
    with open(path, "rb") as fh:
        return cst.decode_source(fh.read())


def build_parser(defaults=None):
    """defaults: config-file values applied to every subcommand; explicit
    flags still override them (subparsers parse into fresh namespaces, so
    top-level set_defaults alone would be ignored)."""
    parser = argparse.ArgumentParser(
        prog="mpiassist",
        description="Corpus construction and evaluation toolkit for MPI "
        "parallelization assistance.",
    )
    parser.add_argument("--config", help="key=value config file; flags override")
    parser.add_argument("--pretty", action="store_true",
                        help="print human-readable tables to stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repos", help="fetch candidate repository clone URLs")
    p.add_argument("--query", default="MPI language:C")
    p.add_argument("--out", required=True)
    p.add_argument("--per-page", type=int, default=100)
    p.add_argument("--max-pages", type=int, default=10)

    p = sub.add_parser("build", help="scan a source tree and build the dataset")
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--token-limit", type=int, default=320)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ratios", default="0.8,0.1,0.1")

    p = sub.add_parser("stats", help="corpus statistics for a source tree")
    p.add_argument("--root", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("prune", help="strip MPI calls from one file")
    p.add_argument("file")
    p.add_argument("--out")

    p = sub.add_parser("xsbt", help="X-SBT token stream for one file")
    p.add_argument("file")
    p.add_argument("--out")

    p = sub.add_parser("baseline", help="run the heuristic baseline predictor")
    p.add_argument("--dataset", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--split", default="test",
                   choices=["train", "valid", "test", "all"])

    p = sub.add_parser("evaluate", help="score a predictions file")
    p.add_argument("--dataset", required=True)
    p.add_argument("--predictions", required=True)
    p.add_argument("--tolerance", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--split", default="test",
                   choices=["train", "valid", "test", "all"])
    p.add_argument("--detail")

    p = sub.add_parser("bench", help="scoring harness on the 11 MPI programs")
    p.add_argument("--out", required=True)
    p.add_argument("--tolerance", type=int, default=1)
    p.add_argument("--mpicc-path")
    p.add_argument("--mpirun-path")
    p.add_argument("--nranks", default="1,2,4")
    p.add_argument("--skip-execution", action="store_true")

    if defaults:
        parser.set_defaults(**defaults)
        for action in parser._subparsers._group_actions:
            for sub_parser in action.choices.values():
                known = {a.dest for a in sub_parser._actions}
                sub_parser.set_defaults(
                    **{k: v for k, v in defaults.items() if k in known}
                )
    return parser


def cmd_repos(args):
    token = os.environ.get(corpus.GH_TOKEN_ENV)
    urls = corpus.fetch_repo_list_with_retry(
        args.query, auth=token, per_page=args.per_page, max_pages=args.max_pages
    )
    _locked_write(args.out, "".join(u + "\n" for u in urls))
    if args.pretty:
        print(f"{len(urls)} repositories -> {args.out}")
    return 0


def cmd_build(args):
    ratios = tuple(float(r) for r in args.ratios.split(","))
    if len(ratios) != 3 or abs(sum(ratios) - 1.0) > 1e-9:
        raise MpiAssistError(f"ratios must be three values summing to 1: {args.ratios}")
    config = corpus.CorpusConfig(
        token_limit=args.token_limit, seed=args.seed, ratios=ratios
    )
    units = corpus.scan(args.root)
    examples, manifest = corpus.build_dataset(units, config)
    with FileLock(str(args.out) + ".lock"):
        corpus.write_dataset(args.out, examples)
        with open(str(args.out) + ".manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.pretty:
        print(f"included {manifest['included']}  splits {manifest['splits']}")
    return 0


def cmd_stats(args):
    from . import stats as stats_mod

    units = list(corpus.scan(args.root))
    ratio_hist, contributing = stats_mod.init_finalize_ratio(units)
    payload = {
        "function_file_counts": stats_mod.function_file_counts(units),
        "length_histogram": stats_mod.length_histogram(units),
        "init_finalize_ratio": {str(k): v for k, v in ratio_hist.items()},
        "init_finalize_contributing": contributing,
        "n_files": len(units),
    }
    _locked_write(args.out, json.dumps(payload, indent=2) + "\n")
    if args.pretty:
        for name, count in payload["function_file_counts"].items():
            print(f"{name} {count}")
    return 0


def cmd_prune(args):
    text = _read_source(args.file)
    unit = cst.parse_unit(args.file, cst.standardize(text))
    result = mpiedit.prune(unit)
    payload = json.dumps(
        {
            "pruned_code": result.pruned_text,
            "removed": [
                {"name": c.name, "line": c.line} for c in result.removed
            ],
        },
        ensure_ascii=False,
    ) + "\n"
    if args.out:
        _locked_write(args.out, payload)
    else:
        sys.stdout.write(payload)
    if args.pretty:
        print(result.pruned_text)
    return 0


def cmd_xsbt(args):
    text = _read_source(args.file)
    stream = linearize.xsbt_text(cst.parse(text)) + "\n"
    if args.out:
        _locked_write(args.out, stream)
    else:
        sys.stdout.write(stream)
    return 0


def _select_split(examples, split):
    if split == "all":
        return examples
    return [ex for ex in examples if ex.split == split]


def cmd_baseline(args):
    examples = _select_split(corpus.load_dataset(args.dataset), args.split)
    records = []
    for ex in examples:
        records.append(
            predictor.PredictionRecord(ex.id, predictor.baseline_predict(ex.input_code))
        )
    with FileLock(str(args.out) + ".lock"):
        predictor.write_predictions(args.out, records)
    if args.pretty:
        print(f"{len(records)} predictions -> {args.out}")
    return 0


def cmd_evaluate(args):
    report, _ = metrics.evaluate(
        args.dataset,
        args.predictions,
        tolerance=args.tolerance,
        split=args.split,
        detail_path=args.detail,
    )
    _locked_write(args.out, json.dumps(report.to_dict(), indent=2) + "\n")
    if args.pretty:
        print(report.to_table())
    return 0


def cmd_bench(args):
    rows, totals = bench.run_benchmark(
        lambda name, pruned: predictor.baseline_predict(pruned),
        tolerance=args.tolerance,
    )
    csv = bench.report_csv(rows, totals)
    if not args.skip_execution:
        mpicc, mpirun = bench.find_toolchain(args.mpicc_path, args.mpirun_path)
        if not mpicc:
            print("notice: no MPI toolchain found; skipping execution",
                  file=sys.stderr)
        else:
            nranks_list = tuple(int(n) for n in args.nranks.split(","))
            for program in bench.load_programs():
                result = bench.validate_program(
                    program, nranks_list, mpicc, mpirun
                )
                status = "ok" if result["ok"] else f"INVALID: {result['detail']}"
                print(f"{program.name}: {status}", file=sys.stderr)
                if not result["ok"]:
                    raise MpiAssistError(f"{program.name} failed validation")
    _locked_write(args.out, csv)
    if args.pretty:
        print(csv, end="")
    return 0


COMMANDS = {
    "repos": cmd_repos,
    "build": cmd_build,
    "stats": cmd_stats,
    "prune": cmd_prune,
    "xsbt": cmd_xsbt,
    "baseline": cmd_baseline,
    "evaluate": cmd_evaluate,
    "bench": cmd_bench,
}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    # first pass: honor --config as defaults, letting explicit flags win
    defaults = None
    try:
        if "--config" in argv:
            config_path = argv[argv.index("--config") + 1]
            defaults = _load_config(config_path)
    except (IndexError, OSError, MpiAssistError) as exc:
        print(f"mpiassist: {exc}", file=sys.stderr)
        return 1
    parser = build_parser(defaults)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except MpiAssistError as exc:
        print(f"mpiassist: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"mpiassist: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
