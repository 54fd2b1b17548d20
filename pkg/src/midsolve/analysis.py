"""Weighted search-tree analysis for the branching rules.

Free vertices are weighted by their free-degree (w0=0, w1, w2, and 1 from
degree 3 up); the measure of an instance is the weight sum over the free
vertices.  Each branching rule guarantees a minimum measure decrease per
child, recorded in a data-file catalog; the branching factor of a rule is
the unique tau > 1 with sum(tau**-delta_i) == 1, and the running-time base
is the maximum factor over the catalog.  Weight optimization is a nested
grid search over the small admissible (w1, w2) region.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence

#: Asymptotic growth rate of the lower-bound leaf recurrence
#: L[k] = L[k-3] + L[k-4] + L[k-5]: the real root of x^5 = x^2 + x + 1.
LB_GROWTH_RATE = 1.3247179572


class AnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class WeightVector:
    """Degree weights (w1, w2); w0 = 0 and w_i = 1 for i >= 3 are fixed."""

    w1: float
    w2: float

    def is_admissible(self) -> bool:
        # 0 <= w1 <= w2 <= 1 and decreasing increments:
        # w1 - w0 >= w2 - w1 >= 1 - w2
        return (0.0 <= self.w1 <= self.w2 <= 1.0
                and self.w1 >= self.w2 - self.w1 >= 1.0 - self.w2)

    def for_degree(self, d: int) -> float:
        if d <= 0:
            return 0.0
        if d == 1:
            return self.w1
        if d == 2:
            return self.w2
        return 1.0


REFERENCE_WEIGHTS = WeightVector(0.8482, 0.9685)

#: Worst-case rules under the optimized weights.
TIGHT_LABELS = ("8.1b", "9.3(b)ii", "11(|N2|=4)", "13")


@dataclass(frozen=True)
class Recurrence:
    """One branching rule: per-child measure decreases as (a, b, c) meaning
    a*w1 + b*w2 + c*w3; ``multiplicity`` marks the uniform L*P[k-c] shape."""

    label: str
    branches: tuple[tuple[int, int, int], ...]
    multiplicity: Optional[int] = None

    def deltas(self, w: WeightVector) -> list[float]:
        return [a * w.w1 + b * w.w2 + c * 1.0 for a, b, c in self.branches]


def measure(g, w: WeightVector = REFERENCE_WEIGHTS) -> float:
    """Weight sum over the free vertices; marked vertices contribute 0."""
    return sum(w.for_degree(g.f_degree(v)) for v in g.free)


@dataclass(frozen=True)
class DegreeHistogram:
    n0: int
    n1: int
    n2: int
    n3plus: int


def degree_histogram(g) -> DegreeHistogram:
    counts = [0, 0, 0, 0]
    for v in g.free:
        counts[min(g.f_degree(v), 3)] += 1
    return DegreeHistogram(*counts)


# ---------------------------------------------------------------------------
# Branching factors


def branching_factor(r: Recurrence, w: WeightVector, tol: float = 1e-9) -> float:
    """The unique tau > 1 with sum(tau**-delta) == 1.

    All deltas must be strictly positive.  The left side is strictly
    decreasing in tau, so bisection on [1, 64] is safe.
    """
    deltas = r.deltas(w)
    for (a, b, c), d in zip(r.branches, deltas):
        if d <= 0:
            raise AnalysisError(
                f"recurrence {r.label}: branch ({a},{b},{c}) has nonpositive "
                f"measure decrease {d:.6f}")
    if r.multiplicity is not None:
        return r.multiplicity ** (1.0 / deltas[0])
    if len(deltas) == 1:
        return 1.0
    lo, hi = 1.0 + 1e-12, 64.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if sum(mid ** -d for d in deltas) > 1.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


_RECORD_RE = re.compile(
    r"^(?P<label>[^;]+);\s*(?P<count>\d+)\s*;\s*(?P<deltas>[^;]+?)\s*(?:;\s*mult=(?P<mult>\d+)\s*)?$")
_DELTA_RE = re.compile(r"\((-?\d+),(-?\d+),(-?\d+)\)")


def recurrence_catalog() -> list[Recurrence]:
    """The full catalog, parsed from the packaged data file."""
    text = resources.files("midsolve.data").joinpath("recurrences.txt").read_text()
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = _RECORD_RE.match(line)
        if m is None:
            raise AnalysisError(f"recurrences.txt:{lineno}: unparseable record")
        deltas = tuple((int(a), int(b), int(c))
                       for a, b, c in _DELTA_RE.findall(m.group("deltas")))
        if len(deltas) != int(m.group("count")):
            raise AnalysisError(
                f"recurrences.txt:{lineno}: branch count mismatch")
        mult = int(m.group("mult")) if m.group("mult") else None
        out.append(Recurrence(m.group("label").strip(), deltas, mult))
    return out


def audit_weights(w: WeightVector,
                  catalog: Optional[Sequence[Recurrence]] = None
                  ) -> tuple[float, tuple[str, ...]]:
    """Maximum branching factor over the catalog and its argmax labels."""
    if catalog is None:
        catalog = recurrence_catalog()
    factors = [(branching_factor(r, w), r.label) for r in catalog]
    max_factor = max(f for f, _ in factors)
    worst = tuple(label for f, label in factors if f >= max_factor - 1e-9)
    return max_factor, worst


def _grid(lo: float, hi: float, step: float) -> Iterable[float]:
    n = int(round((hi - lo) / step))
    return (lo + i * step for i in range(n + 1))


def optimize_weights(catalog: Optional[Sequence[Recurrence]] = None,
                     steps: Sequence[float] = (1e-2, 1e-3, 1e-4)) -> WeightVector:
    """Best admissible weights by nested grid refinement.

    Ties go to the lexicographically smallest (w1, w2) pair so the result is
    deterministic.
    """
    if catalog is None:
        catalog = recurrence_catalog()

    def objective(w: WeightVector) -> float:
        if not w.is_admissible():
            return float("inf")
        try:
            return audit_weights(w, catalog)[0]
        except AnalysisError:
            return float("inf")

    best_w = None
    best_f = float("inf")
    lo1, hi1, lo2, hi2 = 0.0, 1.0, 2.0 / 3.0, 1.0
    for step in steps:
        for w2 in _grid(lo2, hi2, step):
            for w1 in _grid(max(lo1, w2 / 2), min(hi1, w2), step):
                w = WeightVector(round(w1, 6), round(w2, 6))
                f = objective(w)
                if f < best_f - 1e-12 or (abs(f - best_f) <= 1e-12
                                          and (best_w is None or (w.w1, w.w2) < (best_w.w1, best_w.w2))):
                    best_f, best_w = f, w
        # refine around the incumbent
        lo1, hi1 = best_w.w1 - 2 * step, best_w.w1 + 2 * step
        lo2, hi2 = max(2.0 / 3.0, best_w.w2 - 2 * step), min(1.0, best_w.w2 + 2 * step)
    if best_w is None:
        raise AnalysisError("no admissible weight vector found")
    return best_w


# ---------------------------------------------------------------------------
# Lower-bound leaf recurrence


def lb_recurrence_predict(k: int, base: Sequence[int] = (1, 1, 1, 1, 1)) -> int:
    """Value of L[k] = L[k-3] + L[k-4] + L[k-5] with caller-supplied
    L[0..4]; the ratio L[k]/L[k-1] tends to LB_GROWTH_RATE."""
    if len(base) != 5:
        raise AnalysisError("need exactly the five base values L[0..4]")
    if k < 0:
        raise AnalysisError("k must be nonnegative")
    vals = list(base)
    if k < 5:
        return vals[k]
    for i in range(5, k + 1):
        vals.append(vals[i - 3] + vals[i - 4] + vals[i - 5])
    return vals[k]
