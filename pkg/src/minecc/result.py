from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class HalfIntegralSolution:
    """LP_VC solution with every value in {0, 1/2, 1}.

    ``halves[p]`` is twice the value of the edge at canonical position ``p``.
    """

    halves: tuple[int, ...]

    def __post_init__(self):
        if any(h not in (0, 1, 2) for h in self.halves):
            raise ValueError("half-integral values must be 0, 1/2 or 1")

    def value(self, H) -> Fraction:
        return Fraction(sum(e.weight * h for e, h in zip(H.edges, self.halves)), 2)

    def satisfies(self, pairs) -> bool:
        """Check ``x_e + x_f >= 1`` for ``(p, q)`` position pairs."""
        return all(self.halves[p] + self.halves[q] >= 2 for p, q in pairs)


@dataclass
class SolveResult:
    algorithm: str
    deleted: frozenset[int]
    coloring: tuple[int, ...]
    objective: int
    lower_bound: Fraction | None = None
    runtime_ms: float = 0.0
    peak_mem_estimate: int | None = None
    counters: dict[str, Any] = field(default_factory=dict)
    x: HalfIntegralSolution | None = None
    k_present: int = 0

    @property
    def ratio(self) -> Fraction | None:
        return ratio(self.objective, self.lower_bound)


def ratio(objective, bound) -> Fraction | None:
    """objective / bound, 1 when both vanish, None when undefined."""
    if bound is None:
        return None
    if bound == 0:
        return Fraction(1) if objective == 0 else None
    return Fraction(objective) / Fraction(bound)
