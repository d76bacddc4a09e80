"""Command line entry points: benchmark runs and the session server."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harness import (
    IS_CHOICES,
    PS_CHOICES,
    VariantConfig,
    bundled_suite,
    load_suite,
    run_suite,
)


def _bench_run(args) -> int:
    if args.suite is None:
        scenarios = bundled_suite()
    else:
        scenarios, errors = load_suite(args.suite)
        for line in errors:
            print(f"skipping {line}", file=sys.stderr)
    if not scenarios:
        print("no scenarios to run", file=sys.stderr)
        return 1
    variants = []
    for ps in args.ps.split(","):
        ps = ps.strip()
        if ps == "baseline":
            variants.append(VariantConfig(
                ps="baseline", seed=args.seed, timeout_seconds=args.timeout,
                max_iterations=args.max_iters))
            continue
        for mode in args.input_sampling.split(","):
            variants.append(VariantConfig(
                ps=ps, input_sampling=mode.strip(), k=args.k, r=args.random,
                candidates=args.candidates, seed=args.seed,
                timeout_seconds=args.timeout, max_iterations=args.max_iters))
    report = run_suite(scenarios, variants)
    print(report.format_table())
    if args.out:
        Path(args.out).write_text(report.to_csv())
        print(f"wrote {args.out}")
    return 0


def _serve(args) -> int:
    import uvicorn

    from .engine import ActiveConfig
    from .service import create_app

    config = ActiveConfig(top=args.top, random=args.random, seed=args.seed,
                          input_sampling=args.input_sampling,
                          candidates=args.candidates)
    app = create_app(config, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="activefill")
    commands = parser.add_subparsers(dest="command", required=True)

    bench = commands.add_parser("bench", help="benchmark tooling")
    bench_commands = bench.add_subparsers(dest="bench_command", required=True)
    run = bench_commands.add_parser("run", help="run scenarios and report metrics")
    run.add_argument("--suite", default=None,
                     help="directory of scenario JSON files (default: bundled suite)")
    run.add_argument("--ps", default="topk-randomk",
                     help=f"comma-separated program sampling variants {PS_CHOICES}")
    run.add_argument("--is", "--input-sampling", dest="input_sampling", default="random",
                     help=f"comma-separated input sampling variants {IS_CHOICES}")
    run.add_argument("--k", type=int, default=3, help="top-ranked programs per belief")
    run.add_argument("--random", type=int, default=7, help="random programs per belief")
    run.add_argument("--candidates", type=int, default=100, help="candidate inputs per round")
    run.add_argument("--seed", type=int, default=17)
    run.add_argument("--timeout", type=float, default=60.0, help="per-scenario seconds")
    run.add_argument("--max-iters", type=int, default=32)
    run.add_argument("--out", default=None, help="write the report as CSV")
    run.set_defaults(func=_bench_run)

    serve = commands.add_parser("serve", help="serve the session API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--top", type=int, default=3)
    serve.add_argument("--random", type=int, default=7)
    serve.add_argument("--seed", type=int, default=17)
    serve.add_argument("--is", "--input-sampling", dest="input_sampling", default="output",
                       help=f"input sampling mode {IS_CHOICES}")
    serve.add_argument("--candidates", type=int, default=100)
    serve.add_argument("--ui", default=None, help="directory of static UI assets to mount")
    serve.set_defaults(func=_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
