"""Branch-and-reduce solver for minimum independent dominating sets on
marked graphs.

The recursion dispatches the first applicable rule of an ordered list of 18
cases; the terminal states are the empty graph, an undominatable marked
vertex, and the clique-union endgame which is delegated to the CSP encoding.
All tie-breaks (rule candidates, neighbor orderings) use ascending vertex
identifiers, so two runs on the same input produce identical search trees.

Input contract: every marked vertex has at most 4 free neighbors.  Entering
from a plain graph (no marked vertices) satisfies this trivially, and the
branching rules preserve it.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from . import csp
from .analysis import REFERENCE_WEIGHTS, WeightVector, measure
from .graph import GraphError, MarkedGraph
from .solution import INFEASIBLE, Solution, better

CaseId = Union[int, str]

CSP_ENDGAME: CaseId = "csp_endgame"
EMPTY: CaseId = "empty"

#: Cases that make two or more recursive calls.
BRANCHING_CASES = frozenset({2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18})


class SolverError(ValueError):
    """Input contract or internal invariant violation."""


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    case_counts: dict = field(default_factory=dict)

    def count(self, case: CaseId) -> None:
        self.case_counts[case] = self.case_counts.get(case, 0) + 1


# ---------------------------------------------------------------------------
# Case dispatch


def _choose_branch_vertex(g: MarkedGraph) -> int:
    """Vertex selection for Cases (8)-(18).

    (a) skip vertices whose free component is a clique, (b) minimum
    F-degree, (c) prefer vertices with a free neighbor of maximum F-degree;
    remaining ties broken by smallest identifier.
    """
    eligible: set[int] = set()
    for comp in g.free_components():
        if g.classify_component(comp)[0] != "clique":
            eligible |= comp
    if not eligible:
        raise SolverError("no non-clique free component to branch on")
    dmin = min(g.f_degree(v) for v in eligible)
    min_deg = [v for v in sorted(eligible) if g.f_degree(v) == dmin]
    dmax = max(g.f_degree(w) for v in min_deg for w in g.free_neighbors(v))
    cands = [v for v in min_deg
             if any(g.f_degree(w) == dmax for w in g.free_neighbors(v))]
    return min(cands)


def case9_candidates(g: MarkedGraph) -> list[int]:
    """All vertices tied under criteria (a)-(c), ascending by identifier."""
    eligible: set[int] = set()
    for comp in g.free_components():
        if g.classify_component(comp)[0] != "clique":
            eligible |= comp
    if not eligible:
        return []
    dmin = min(g.f_degree(v) for v in eligible)
    min_deg = [v for v in sorted(eligible) if g.f_degree(v) == dmin]
    dmax = max(g.f_degree(w) for v in min_deg for w in g.free_neighbors(v))
    return [v for v in min_deg
            if any(g.f_degree(w) == dmax for w in g.free_neighbors(v))]


def _find_case7_triangle(g: MarkedGraph) -> Optional[int]:
    """First free triangle (lexicographic vertex triple) with exactly one
    vertex of F-degree >= 3; returns that vertex."""
    free_sorted = sorted(g.free)
    for a in free_sorted:
        na = sorted(v for v in g.free_neighbors(a) if v > a)
        for i, b in enumerate(na):
            nb = g.free_neighbors(b)
            for c in na[i + 1:]:
                if c not in nb:
                    continue
                big = [v for v in (a, b, c) if g.f_degree(v) >= 3]
                if len(big) == 1:
                    return big[0]
    return None


def case11_select(g: MarkedGraph, u: int) -> int:
    """Vertex of N_F[u] whose free neighborhood spans at most one edge."""
    for v in sorted(g.free_neighbors(u) | {u}):
        nf = sorted(g.free_neighbors(v))
        span = sum(1 for i in range(len(nf)) for j in range(i + 1, len(nf))
                   if nf[j] in g.neighbors(nf[i]))
        if span <= 1:
            return v
    raise SolverError(f"no sparse-neighborhood vertex around {u}")  # unreachable in Case 11


def _dispatch(g: MarkedGraph):
    """First applicable rule in listing order; returns (case, payload)."""
    if not g.free and not g.marked:
        return EMPTY, None
    dead = [u for u in sorted(g.marked) if g.f_degree(u) == 0]
    if dead:
        return 1, dead[0]

    comps = g.free_components()
    classes = [g.classify_component(c) for c in comps]
    if all(cl[0] == "clique" for cl in classes):
        u5 = min((u for u in g.free if g.f_degree(u) >= 5), default=None)
        if u5 is not None:
            return 2, u5
        u4 = min((u for u in g.free if g.f_degree(u) == 4), default=None)
        if u4 is not None:
            return 3, u4
        return CSP_ENDGAME, None

    m1 = min((u for u in sorted(g.marked) if g.f_degree(u) == 1), default=None)
    if m1 is not None:
        return 5, m1

    for comp, cl in zip(comps, classes):
        if cl[0] == "complete_bipartite" and len(comp) > 2:
            return 6, (comp, cl[1], cl[2])

    v7 = _find_case7_triangle(g)
    if v7 is not None:
        return 7, v7

    u = _choose_branch_vertex(g)
    d = g.f_degree(u)
    nbrs = sorted(g.free_neighbors(u), key=lambda v: (g.f_degree(v), v))
    if d == 1:
        return 8, u
    if d == 2:
        if g.f_degree(nbrs[0]) <= 4:
            return 9, u
        return 10, u
    if d == 3:
        if all(g.f_degree(v) == 3 for v in nbrs):
            return 11, (u, case11_select(g, u))
        v4 = min((v for v in nbrs if g.f_degree(v) == 4), default=None)
        if v4 is not None:
            return 12, (u, v4)
        v5 = min((v for v in nbrs if g.f_degree(v) == 5), default=None)
        if v5 is not None:
            return 13, (u, v5)
        if sum(1 for v in nbrs if g.f_degree(v) == 3) >= 2:
            if g.is_clique(g.free_neighbors(u)):
                deg_sorted = sorted(nbrs, key=lambda v: (-g.f_degree(v), v))
                return 14, (u, deg_sorted[0])
            return 15, u
        return 16, u
    if d == 4:
        return 17, u
    return 18, u


def dispatch_case(g: MarkedGraph) -> CaseId:
    """The rule of the algorithm listing that applies to g."""
    return _dispatch(g)[0]


# ---------------------------------------------------------------------------
# Reductions (rules (1) and (5) iterated to a fixpoint)


def apply_reductions(g: MarkedGraph):
    """Repeatedly force the unique dominator of single-neighbor marked
    vertices and detect undominatable ones.

    Returns ``(graph, forced_vertices)`` at the fixpoint, or ``None`` when
    some marked vertex cannot be dominated.
    """
    forced: set[int] = set()
    while True:
        if any(g.f_degree(u) == 0 for u in g.marked):
            return None
        m1 = min((u for u in sorted(g.marked) if g.f_degree(u) == 1), default=None)
        if m1 is None:
            return g, frozenset(forced)
        v = min(g.free_neighbors(m1))
        forced.add(v)
        g = _take(g, v)


# ---------------------------------------------------------------------------
# Child construction


def _take(g: MarkedGraph, v: int) -> MarkedGraph:
    """Instance after committing free vertex v: N[v] leaves the graph."""
    return g.induced(g.free - g.neighbors(v) - {v}, g.marked - g.neighbors(v))


def _take_set(g: MarkedGraph, vs: frozenset) -> MarkedGraph:
    nbrs = frozenset().union(*(g.neighbors(v) for v in vs)) if vs else frozenset()
    return g.induced(g.free - nbrs - vs, g.marked - nbrs)


class _Search:
    def __init__(self, assert_mode: bool, weights: WeightVector,
                 on_node: Optional[Callable]):
        self.stats = SearchStats()
        self.assert_mode = assert_mode
        self.weights = weights
        self.on_node = on_node

    # -- node bookkeeping -------------------------------------------------

    def _enter(self, g: MarkedGraph, depth: int):
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        case, payload = _dispatch(g)
        self.stats.count(case)
        if self.on_node is not None:
            self.on_node(depth, g, case)
        if self.assert_mode:
            bad = [u for u in g.marked if g.f_degree(u) > 4]
            if bad:
                raise SolverError(f"marked vertex {min(bad)} has F-degree > 4")
        return case, payload

    def _recurse(self, parent: MarkedGraph, child: MarkedGraph, depth: int,
                 branching: bool) -> Solution:
        if self.assert_mode:
            if len(child.free) >= len(parent.free):
                raise SolverError("child does not shrink the free vertex set")
            if branching:
                drop = measure(parent, self.weights) - measure(child, self.weights)
                if drop <= 1e-12:
                    raise SolverError(f"measure did not decrease (drop={drop})")
        return self._solve(child, depth + 1)

    # -- branching procedures ---------------------------------------------

    def branch_all(self, g: MarkedGraph, u: int, depth: int) -> Solution:
        best: Optional[Solution] = None
        for v in [u] + sorted(g.free_neighbors(u)):
            sub = self._recurse(g, _take(g, v), depth, True)
            best = better(best, sub.plus({v}))
        return best

    def branch_mark(self, g: MarkedGraph, u: int, depth: int) -> Solution:
        nbrs = sorted(g.free_neighbors(u), key=lambda v: (g.f_degree(v), v))
        best = self._recurse(g, _take(g, u), depth, True).plus({u})
        for i, v in enumerate(nbrs):
            earlier = frozenset(nbrs[:i])
            child = g.induced(
                g.free - g.neighbors(v) - {v} - earlier,
                (g.marked | earlier) - g.neighbors(v))
            sub = self._recurse(g, child, depth, True)
            best = better(best, sub.plus({v}))
        return best

    def branch_one(self, g: MarkedGraph, u: int, depth: int) -> Solution:
        taken = self._recurse(g, _take(g, u), depth, True).plus({u})
        marked = self._recurse(
            g, g.induced(g.free - {u}, g.marked | {u}), depth, True)
        return better(taken, marked)

    # -- main recursion ----------------------------------------------------

    def _solve(self, g: MarkedGraph, depth: int) -> Solution:
        case, payload = self._enter(g, depth)

        if case == EMPTY:
            self.stats.leaves += 1
            return Solution.found(0, ())
        if case == 1:
            self.stats.leaves += 1
            return INFEASIBLE
        if case == CSP_ENDGAME:
            self.stats.leaves += 1
            return csp.solve_clique_union(g)

        if case == 2:
            return self.branch_all(g, payload, depth)
        if case == 3:
            return self.branch_one(g, payload, depth)
        if case == 5:
            v = min(g.free_neighbors(payload))
            return self._recurse(g, _take(g, v), depth, False).plus({v})
        if case == 6:
            comp, x, y = payload
            best = self._recurse(g, _take_set(g, x), depth, True).plus(x)
            return better(best, self._recurse(g, _take_set(g, y), depth, True).plus(y))
        if case in (7, 14):
            v = payload if case == 7 else payload[1]
            taken = self._recurse(g, _take(g, v), depth, True).plus({v})
            # v is deleted but not marked: a clique in its neighborhood
            # guarantees a dominator in every child solution
            dropped = self._recurse(g, g.induced(g.free - {v}, g.marked), depth, True)
            return better(taken, dropped)
        if case in (8, 10, 16, 18):
            return self.branch_all(g, payload, depth)
        if case in (9, 15):
            return self.branch_mark(g, payload, depth)
        if case in (11, 12):
            return self.branch_one(g, payload[1], depth)
        if case == 13:
            u, v = payload
            best = self._recurse(g, _take(g, u), depth, True).plus({u})
            best = better(best, self._recurse(g, _take(g, v), depth, True).plus({v}))
            both = g.induced(g.free - {u, v}, g.marked | {u, v})
            return better(best, self._recurse(g, both, depth, True))
        if case == 17:
            return self.branch_one(g, payload, depth)
        raise SolverError(f"unhandled case {case}")  # pragma: no cover


def solve(g: MarkedGraph, *, assert_mode: bool = False,
          weights: WeightVector = REFERENCE_WEIGHTS,
          on_node: Optional[Callable] = None) -> tuple[Solution, SearchStats]:
    """Minimum independent dominating set of a marked graph.

    Returns the solution (witness vertices refer to the original input) and
    the statistics of the executed search tree.  ``assert_mode`` re-checks
    the marked-degree invariant and the measure decrease at every node.
    ``on_node(depth, graph, case)`` is invoked on every node in DFS
    pre-order.
    """
    bad = [u for u in g.marked if g.f_degree(u) > 4]
    if bad:
        raise SolverError(
            f"input contract violated: marked vertex {min(bad)} has F-degree > 4")
    needed = 60 * (len(g.free) + len(g.marked)) + 2000
    old_limit = sys.getrecursionlimit()
    if needed > old_limit:
        sys.setrecursionlimit(needed)
    try:
        search = _Search(assert_mode, weights, on_node)
        sol = search._solve(g, 0)
    finally:
        if needed > old_limit:
            sys.setrecursionlimit(old_limit)
    return sol, search.stats


# Public wrappers for the individual branching procedures; each runs its
# own sub-search so it can be exercised in isolation.

def branch_all(g: MarkedGraph, u: int) -> Solution:
    if u not in g.free:
        raise SolverError(f"{u} is not a free vertex")
    search = _Search(False, REFERENCE_WEIGHTS, None)
    return search.branch_all(g, u, 0)


def branch_mark(g: MarkedGraph, u: int) -> Solution:
    if u not in g.free:
        raise SolverError(f"{u} is not a free vertex")
    search = _Search(False, REFERENCE_WEIGHTS, None)
    return search.branch_mark(g, u, 0)


def branch_one(g: MarkedGraph, u: int) -> Solution:
    if u not in g.free:
        raise SolverError(f"{u} is not a free vertex")
    search = _Search(False, REFERENCE_WEIGHTS, None)
    return search.branch_one(g, u, 0)
