"""Solver dispatch, JSON reports and report verification."""

from __future__ import annotations

import signal
import threading
import tracemalloc
from contextlib import contextmanager
from fractions import Fraction

from .colorpair import colorpair_flow
from .exact import brute_force_minecc, exact
from .hypergraph import (
    DEFAULT_PAIR_CAP,
    ColoredHypergraph,
    GuardError,
    is_conflict_free,
    unsatisfied_weight,
)
from .localratio import local_ratio
from .result import SolveResult, ratio
from .vcflow import vc_flow

SCHEMA = 1
ALGORITHMS = ("colorpair", "vcflow", "localratio", "exact")


class TimeLimitExceeded(GuardError):
    pass


@contextmanager
def time_limit(seconds: float | None):
    """Raise :class:`TimeLimitExceeded` after ``seconds`` of wall-clock time.

    Uses SIGALRM, so the limit only applies in the main thread on POSIX.
    """
    usable = (
        seconds is not None and seconds > 0 and hasattr(signal, "setitimer")
        and threading.current_thread() is threading.main_thread()
    )
    if not usable:
        yield
        return

    def handler(signum, frame):
        raise TimeLimitExceeded(f"time limit of {seconds}s exceeded")

    previous = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def run_solver(H: ColoredHypergraph, algorithm: str, pair_cap: int | None = DEFAULT_PAIR_CAP,
               time_limit_s: float | None = None) -> SolveResult:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    with time_limit(time_limit_s):
        if algorithm == "colorpair":
            return colorpair_flow(H)
        if algorithm == "vcflow":
            return vc_flow(H, pair_cap)
        if algorithm == "localratio":
            return local_ratio(H)
        return exact(H)


def peak_memory(H: ColoredHypergraph, algorithm: str, **kwargs) -> int:
    """Peak bytes allocated by one solver run, as seen by tracemalloc."""
    already = tracemalloc.is_tracing()
    if not already:
        tracemalloc.start()
    tracemalloc.reset_peak()
    before = tracemalloc.get_traced_memory()[0]
    try:
        run_solver(H, algorithm, **kwargs)
        return tracemalloc.get_traced_memory()[1] - before
    finally:
        if not already:
            tracemalloc.stop()


def _fraction(value: Fraction | None) -> dict | None:
    if value is None:
        return None
    return {"num": value.numerator, "den": value.denominator, "decimal": round(float(value), 3)}


def build_report(H: ColoredHypergraph, result: SolveResult, exact_value: int | None = None,
                 seed: int | None = None) -> dict:
    report = {
        "schema": SCHEMA,
        "algorithm": result.algorithm,
        "n": H.node_count,
        "m": H.m,
        "k": H.color_count,
        "k_present": result.k_present,
        "r": H.r,
        "mu": H.mu,
        "objective": result.objective,
        "coloring_objective": unsatisfied_weight(H, result.coloring),
        "deleted_edge_ids": sorted(result.deleted),
        "coloring": list(result.coloring),
        "runtime_ms": round(result.runtime_ms, 3),
        "peak_mem_estimate_bytes": result.peak_mem_estimate,
        "work_counters": result.counters,
    }
    if seed is not None:
        report["seed"] = seed
    if result.lower_bound is not None:
        report["lower_bound"] = _fraction(result.lower_bound)
        report["ratio"] = _fraction(result.ratio)
    if exact_value is not None:
        report["exact"] = exact_value
        report["ratio_vs_exact"] = _fraction(ratio(result.objective, exact_value))
    return report


def solve_with_exact(H: ColoredHypergraph) -> int:
    return brute_force_minecc(H)[1]


def verify_report(H: ColoredHypergraph, report: dict) -> list[tuple[str, bool, str]]:
    """Recompute each claim in a solve report; one ``(name, ok, detail)`` per check."""
    checks = []
    deleted = report.get("deleted_edge_ids", [])
    coloring = report.get("coloring", [])

    unknown = [i for i in deleted if i not in H.position]
    checks.append(("deleted ids", not unknown, f"unknown edge ids {unknown[:5]}" if unknown else "ok"))
    if unknown:
        return checks

    ok = is_conflict_free(H, deleted)
    checks.append(("conflict-free", ok, "ok" if ok else "surviving edges conflict"))

    weight = H.weight_of(deleted)
    ok = report.get("objective") == weight
    checks.append((
        "objective", ok,
        "ok" if ok else f"objective mismatch: report {report.get('objective')}, deleted weight {weight}",
    ))

    shape_ok = (
        len(coloring) == H.node_count
        and all(isinstance(c, int) and 1 <= c <= max(H.color_count, 1) for c in coloring)
    )
    if not shape_ok:
        checks.append(("coloring", False, "coloring must give every node a color in 1..k"))
        return checks
    gone = set(deleted)
    violated = [
        e.id for e in H.edges
        if e.id not in gone and any(coloring[u - 1] != e.color for u in e.nodes)
    ]
    checks.append((
        "coloring consistency", not violated,
        "ok" if not violated else f"deleted-set/coloring inconsistency: edges {violated[:5]} unsatisfied",
    ))
    actual = unsatisfied_weight(H, coloring)
    claimed = report.get("coloring_objective", actual)
    ok = claimed == actual and actual <= weight
    checks.append((
        "coloring objective", ok,
        "ok" if ok else f"coloring objective mismatch: report {claimed}, recomputed {actual}",
    ))
    return checks
