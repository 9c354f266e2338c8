"""Command-line harness: generate corpora, run the pipeline, sweep
experiments, query the brute-force oracles, and verify certificates.

Exit codes: 0 success / valid certificate, 1 invalid certificate, 2 usage
error, 3 algorithmic failure (retry or budget exhaustion). All randomness
flows from ``--seed`` through the documented mixer, so identical
invocations produce byte-identical stdout and files; wall-clock timings go
to stderr only.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import generators, oracle
from .graph import degree_profile, is_induced_matching, read_edge_list, write_edge_list
from .pipeline import (
    EmptyMatchingError,
    InducedMatchingResult,
    PipelineConfig,
    prepare_pipeline,
    run_prepared,
)
from .seeds import mix64
from .sparsify import RetriesExhausted, TriangleBudgetExceeded

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_ALGORITHM = 3

# Frozen stats schema. ratio_ln uses the natural logarithm:
# size / ((n/d) * ln d), blank when max degree < 2. q holds the family
# parameter (q for the finite-geometry families, n for random-regular).
CSV_HEADER = (
    "family,q,n,d,match_size,gm_n,gm_triangles,gm_budget,attempts,"
    "im_size,ratio_ln,seed,status"
)


def _fmt_ratio(ratio: float | None) -> str:
    return "" if ratio is None else f"{ratio:.6f}"


def _stats_row(
    family: str,
    param: str,
    n: int,
    d: int,
    seed: int,
    result: InducedMatchingResult | None,
    status: str,
) -> str:
    if result is None:
        return f"{family},{param},{n},{d},,,,,,,,{seed},{status}"
    s = result.stats
    return (
        f"{family},{param},{n},{d},{s.match_size},{s.contracted_n},"
        f"{s.contracted_triangles},{s.budget:.3f},{s.attempts},{result.size},"
        f"{_fmt_ratio(s.ratio)},{seed},{status}"
    )


def _pipeline_config(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig(
        B=args.B,
        epsilon=args.epsilon,
        degree_cutoff=args.d0,
        max_retries=args.max_retries,
        seed=args.seed,
        verify=args.verify,
        greedy_fallback=args.greedy_fallback,
    )


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--B", type=int, default=2, help="forbidden K_{B,B} parameter")
    parser.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="triangle-budget exponent; default derives 1/(2B)",
    )
    parser.add_argument("--d0", type=int, default=16, help="degree cutoff that skips sampling")
    parser.add_argument("--max-retries", type=int, default=50)
    parser.add_argument("--greedy-fallback", action="store_true")
    parser.add_argument(
        "--verify",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="certify the output (on by default)",
    )


def cmd_generate(args: argparse.Namespace) -> int:
    spec = generators.GeneratorSpec(
        family=args.family,
        q=args.q,
        n=args.n,
        d=args.d,
        seed=args.seed,
        fixture_name=args.name,
    )
    graph = generators.build_graph(spec)
    write_edge_list(graph, args.out)
    lo, hi, regular = degree_profile(graph)
    print(
        f"n={graph.n} m={graph.m} min_degree={lo} max_degree={hi} "
        f"regular={'true' if regular else 'false'}"
    )
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    graph = read_edge_list(args.graph)
    config = _pipeline_config(args)
    start = time.monotonic()
    prep = prepare_pipeline(graph, config)
    result = run_prepared(prep, config.seed)
    elapsed = time.monotonic() - start
    lines = [f"{u} {v}" for u, v in result.matching]
    for line in lines:
        print(line)
    _, dmax, _ = degree_profile(graph)
    status = "ok" if result.certificate is not False else "invalid"
    print(CSV_HEADER)
    print(_stats_row("file", "", graph.n, dmax, config.seed, result, status))
    print(f"# wall_seconds={elapsed:.3f}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text("".join(f"{l}\n" for l in lines), encoding="utf-8")
    if config.verify and not result.certificate:
        return EXIT_INVALID
    return EXIT_OK


def _experiment_graph(family: str, param: int, degree: int, master_seed: int):
    if family == "projective":
        return generators.projective_incidence_graph(param)
    if family == "polarity":
        return generators.polarity_graph(param)
    if family == "random-regular":
        graph_seed = mix64(master_seed, family, param, "graph")
        return generators.random_regular(param, degree, graph_seed)
    raise ValueError(f"unsupported experiment family {family!r}")


def cmd_experiment(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise ValueError(f"trials must be >= 1, got {args.trials}")
    params = [int(tok) for tok in args.q.split(",") if tok.strip()] if args.q else []
    if not params:
        raise ValueError("parameter list is empty; pass --q like 3,5,7")
    degree = args.d if args.d is not None else 3
    config = _pipeline_config(args)

    rows = [CSV_HEADER]
    summaries = []
    sweep_ratios: list[float] = []
    for param in params:
        ratios = []
        ok = 0
        try:
            graph = _experiment_graph(args.family, param, degree, args.seed)
            prep = prepare_pipeline(graph, config)
            prep_error = None
        except (TriangleBudgetExceeded, ValueError, generators.GenerationError) as exc:
            graph = None
            prep = None
            prep_error = _status_of(exc)
        for trial in range(args.trials):
            seed = mix64(args.seed, args.family, param, trial)
            if prep is None:
                rows.append(
                    _stats_row(args.family, str(param), 0, 0, seed, None, prep_error)
                )
                continue
            start = time.monotonic()
            try:
                result = run_prepared(prep, seed)
            except RetriesExhausted:
                result = None
            print(
                f"# timing param={param} trial={trial} "
                f"seconds={time.monotonic() - start:.3f}",
                file=sys.stderr,
            )
            dmax = degree_profile(graph)[1]
            if result is None:
                rows.append(
                    _stats_row(args.family, str(param), graph.n, dmax, seed, None, "retries")
                )
                continue
            status = "ok" if result.certificate is not False else "invalid"
            ok += 1
            if result.stats.ratio is not None:
                ratios.append(result.stats.ratio)
            rows.append(
                _stats_row(args.family, str(param), graph.n, dmax, seed, result, status)
            )
        if ratios:
            sweep_ratios.extend(ratios)
            summary = (
                f"# summary family={args.family} q={param} trials={args.trials} "
                f"ok={ok} min_ratio={min(ratios):.6f} "
                f"median_ratio={statistics.median(ratios):.6f}"
            )
        else:
            summary = (
                f"# summary family={args.family} q={param} trials={args.trials} "
                f"ok={ok} min_ratio= median_ratio="
            )
        summaries.append(summary)

    if args.floor is not None:
        passed = bool(sweep_ratios) and min(sweep_ratios) >= args.floor
        summaries.append(f"# floor={args.floor:.6f} verdict={'PASS' if passed else 'FAIL'}")

    text = "".join(f"{line}\n" for line in rows + summaries)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        for line in summaries:
            print(line)
    else:
        print(text, end="")
    return EXIT_OK


def _status_of(exc: Exception) -> str:
    if isinstance(exc, EmptyMatchingError):
        return "empty-matching"
    if isinstance(exc, TriangleBudgetExceeded):
        return "triangle-budget"
    if isinstance(exc, RetriesExhausted):
        return "retries"
    if isinstance(exc, generators.GenerationError):
        return "generation"
    return "error"


def cmd_oracle(args: argparse.Namespace) -> int:
    graph = read_edge_list(args.graph)
    limit = args.limit
    if args.op == "count-triangles":
        print(f"triangles={oracle.count_triangles_bf(graph, limit=limit)}")
    elif args.op == "max-independent-set":
        size, witness = oracle.max_independent_set_bf(graph, limit=limit)
        print(f"size={size}")
        print("witness=" + " ".join(str(v) for v in sorted(witness)))
    elif args.op == "max-induced-matching":
        size, witness = oracle.max_induced_matching_bf(graph, limit=limit)
        print(f"size={size}")
        print("witness=" + " ".join(f"{u}-{v}" for u, v in witness))
    elif args.op == "contains-kbb":
        found = oracle.contains_kbb_bf(graph, args.B, limit=limit)
        print(f"contains_k{args.B}{args.B}={'true' if found else 'false'}")
    elif args.op == "c4-free":
        print(f"c4_free={'true' if oracle.is_c4_free_bf(graph, limit=limit) else 'false'}")
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown op {args.op!r}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph = read_edge_list(args.graph)
    edges = []
    text = Path(args.certificate).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != 2:
            print(f"line {lineno}: expected two integers", file=sys.stderr)
            return EXIT_USAGE
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            print(f"line {lineno}: expected two integers", file=sys.stderr)
            return EXIT_USAGE
        edges.append((u, v))
    try:
        valid = is_induced_matching(graph, edges)
    except ValueError as exc:
        print(f"invalid certificate: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not valid:
        print("invalid certificate: not an induced matching", file=sys.stderr)
        return EXIT_INVALID
    print("valid")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indmatch",
        description="Certified induced matchings via matching contraction "
        "and triangle-sparse independent sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a graph in edge-list format")
    gen.add_argument(
        "--family",
        required=True,
        choices=["projective", "polarity", "random-regular", "fixture"],
    )
    gen.add_argument("--q", type=int, default=None, help="prime field order")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--d", type=int, default=None)
    gen.add_argument("--name", default=None, help="fixture name")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    run = sub.add_parser("run", help="run the pipeline on an edge-list file")
    run.add_argument("graph")
    _add_pipeline_flags(run)
    run.add_argument("--out", default=None, help="write the certificate (edges only) here")
    run.set_defaults(func=cmd_run)

    exp = sub.add_parser("experiment", help="sweep a family and emit CSV stats")
    exp.add_argument("--family", required=True, choices=["projective", "polarity", "random-regular"])
    exp.add_argument("--q", required=True, help="comma-separated parameter list (q, or n for random-regular)")
    exp.add_argument("--trials", type=int, required=True)
    exp.add_argument("--d", type=int, default=None, help="degree for random-regular sweeps (default 3)")
    _add_pipeline_flags(exp)
    exp.add_argument("--out", default=None)
    exp.add_argument("--floor", type=float, default=None, help="flag PASS/FAIL against this min-ratio floor")
    exp.set_defaults(func=cmd_experiment)

    orc = sub.add_parser("oracle", help="brute-force spot checks (small graphs)")
    orc.add_argument(
        "--op",
        required=True,
        choices=[
            "count-triangles",
            "max-independent-set",
            "max-induced-matching",
            "contains-kbb",
            "c4-free",
        ],
    )
    orc.add_argument("graph")
    orc.add_argument("--B", type=int, default=2)
    orc.add_argument("--limit", type=int, default=None)
    orc.set_defaults(func=cmd_oracle)

    ver = sub.add_parser("verify", help="check a certificate file against a graph")
    ver.add_argument("graph")
    ver.add_argument("certificate")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RetriesExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("attempt,sampled,triangles,edges,outcome", file=sys.stderr)
        for a in exc.attempts:
            print(
                f"{a.index},{a.sampled},{a.triangles},{a.edges},{a.outcome}",
                file=sys.stderr,
            )
        return EXIT_ALGORITHM
    except (TriangleBudgetExceeded, EmptyMatchingError, generators.GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
