"""Command line interface: ``minecc {solve,stats,verify,gen,bench}``."""

from __future__ import annotations

import argparse
import glob
import json
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor

from .hypergraph import (
    DEFAULT_PAIR_CAP,
    FormatError,
    GuardError,
    compute_stats,
    generate_random,
    load_hypergraph,
    serialize_hypergraph,
)
from .report import (
    ALGORITHMS,
    build_report,
    peak_memory,
    run_solver,
    solve_with_exact,
    verify_report,
)

EXIT_INPUT = 2
EXIT_GUARD = 3


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tsv(rows: list[dict], columns: list[str]) -> str:
    lines = ["\t".join(columns)]
    for row in rows:
        lines.append("\t".join("" if row.get(c) is None else str(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _flat(report: dict) -> dict:
    row = {k: v for k, v in report.items() if not isinstance(v, (list, dict))}
    for key in ("lower_bound", "ratio", "ratio_vs_exact"):
        if report.get(key):
            row[key] = f"{report[key]['num']}/{report[key]['den']}"
    row["deleted_edge_ids"] = ",".join(map(str, report["deleted_edge_ids"]))
    return row


def cmd_solve(args) -> int:
    H = load_hypergraph(args.input)
    result = run_solver(H, args.alg, pair_cap=args.pair_cap, time_limit_s=args.time_limit)
    if args.memory:
        result.peak_mem_estimate = peak_memory(H, args.alg, pair_cap=args.pair_cap)
    exact_value = None
    if args.with_exact:
        exact_value = result.objective if args.alg == "exact" else solve_with_exact(H)
    report = build_report(H, result, exact_value=exact_value, seed=args.seed)
    if args.format == "json":
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    else:
        row = _flat(report)
        _emit(_tsv([row], list(row)), args.output)
    return 0


def cmd_stats(args) -> int:
    H = load_hypergraph(args.input)
    stats = compute_stats(H, count_pairs=args.bad_pairs, cap=args.pair_cap).as_dict()
    if not args.bad_pairs:
        stats.pop("bad_pairs")
        stats.pop("lp_vc_constraints")
    if args.format == "json":
        _emit(json.dumps(stats, indent=2) + "\n", args.output)
    else:
        _emit(_tsv([stats], list(stats)), args.output)
    return 0


def cmd_verify(args) -> int:
    H = load_hypergraph(args.input)
    try:
        with open(args.solution, encoding="utf-8") as fh:
            report = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"solution is not valid JSON: {exc}") from None
    checks = verify_report(H, report)
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}\t{name}\t{detail}")
    failed = [name for name, ok, _ in checks if not ok]
    return 1 if failed else 0


def cmd_gen(args) -> int:
    H = generate_random(args.nodes, args.edges, args.colors, args.max_size,
                        args.max_weight, args.seed)
    _emit(serialize_hypergraph(H), args.output)
    return 0


def _bench_cell(path: str, alg: str, time_limit: float | None, pair_cap: int) -> dict:
    try:
        H = load_hypergraph(path)
        result = run_solver(H, alg, pair_cap=pair_cap, time_limit_s=time_limit)
    except GuardError as exc:
        status = "timed out" if "time limit" in str(exc) else "guard"
        return {"status": status, "error": str(exc)}
    except Exception as exc:  # a broken cell must not stop the run
        return {"status": "error", "error": f"{type(exc).__name__}: {exc}"}
    return {
        "status": "ok",
        "runtime_ms": result.runtime_ms,
        "objective": result.objective,
        "lower_bound": result.lower_bound,
        "ratio": result.ratio,
    }


def _bench_memory(path: str, alg: str, pair_cap: int) -> int | None:
    try:
        return peak_memory(load_hypergraph(path), alg, pair_cap=pair_cap)
    except Exception:
        return None


def run_bench(paths: list[str], algs: list[str], repeats: int, time_limit: float | None = None,
              parallel: int = 1, pair_cap: int = DEFAULT_PAIR_CAP, memory: bool = True) -> list[dict]:
    cells = [(p, a, i) for p in paths for a in algs for i in range(repeats)]
    jobs = [(p, a, time_limit, pair_cap) for p, a, _ in cells]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            outcomes = list(pool.map(_bench_cell, *zip(*jobs)))
    else:
        outcomes = [_bench_cell(*job) for job in jobs]
    rows = []
    for path in paths:
        for alg in algs:
            runs = [o for (p, a, _), o in zip(cells, outcomes) if p == path and a == alg]
            row = {"dataset": path, "algorithm": alg, "repeats": len(runs)}
            failed = next((o for o in runs if o["status"] != "ok"), None)
            if failed:
                row.update(status=failed["status"], error=failed["error"])
                rows.append(row)
                continue
            times = [o["runtime_ms"] for o in runs]
            first = runs[0]
            row.update(
                status="ok",
                runtime_ms_mean=round(statistics.fmean(times), 3),
                runtime_ms_std=round(statistics.pstdev(times), 3) if len(times) > 1 else 0.0,
                objective=first["objective"],
                objectives_agree=all(o["objective"] == first["objective"] for o in runs),
                lower_bound=None if first["lower_bound"] is None else str(first["lower_bound"]),
                ratio=None if first["ratio"] is None else round(float(first["ratio"]), 3),
            )
            if memory:
                row["peak_mem_estimate_bytes"] = _bench_memory(path, alg, pair_cap)
            rows.append(row)
    return rows


BENCH_COLUMNS = [
    "dataset", "algorithm", "status", "repeats", "runtime_ms_mean", "runtime_ms_std",
    "objective", "lower_bound", "ratio", "peak_mem_estimate_bytes",
]


def cmd_bench(args) -> int:
    paths = sorted({p for pattern in args.inputs for p in glob.glob(pattern)})
    if not paths:
        raise FormatError(f"no input files match {args.inputs}")
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    for a in algs:
        if a not in ALGORITHMS:
            raise FormatError(f"unknown algorithm {a!r}")
    rows = run_bench(paths, algs, args.repeats, args.time_limit, args.parallel,
                     args.pair_cap, memory=not args.no_memory)
    display = []
    for row in rows:
        shown = dict(row)
        if row["status"] != "ok":
            for c in BENCH_COLUMNS[4:]:
                shown[c] = row["status"]
        display.append(shown)
    _emit(_tsv(display, BENCH_COLUMNS), args.output)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"schema": 1, "rows": rows}, fh, indent=2)
            fh.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minecc", description="Edge-colored clustering solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("--alg", choices=ALGORITHMS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int)
    p.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--with-exact", action="store_true", help="also report the exact optimum")
    p.add_argument("--memory", action="store_true", help="measure peak memory in an extra run")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("stats", help="hypergraph and LP size statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--bad-pairs", action="store_true")
    p.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="check a solve report against its instance")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time algorithms over several instances")
    p.add_argument("--inputs", nargs="+", required=True, help="glob pattern(s)")
    p.add_argument("--algs", default="colorpair,localratio")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--pair-cap", type=int, default=DEFAULT_PAIR_CAP)
    p.add_argument("--no-memory", action="store_true")
    p.add_argument("--output", help="TSV destination (default stdout)")
    p.add_argument("--json", help="also write rows as JSON")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(json.dumps({"error": "guard", "message": str(exc)}), file=sys.stderr)
        return EXIT_GUARD
    except (FormatError, ValueError, OSError) as exc:
        print(json.dumps({"error": "input", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
