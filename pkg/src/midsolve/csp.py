"""Clique-union endgame via constraint satisfaction.

When the free subgraph is a disjoint union of cliques of size at most 4 and
every marked vertex has at most 4 free neighbors, a solution must pick
exactly one vertex per clique.  This becomes a CSP with one variable per
clique (values = positions within the clique) and, per marked vertex, one
"at least one of these (variable, value) literals holds" constraint.

Domains of size 3 and 4 are split down to binary domains (halving, with
singleton propagation for the odd value), and the resulting binary-domain
instances are solved by chronological backtracking with unit propagation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import MarkedGraph
from .solution import INFEASIBLE, Solution


class CspError(ValueError):
    """Precondition violation in the CSP encoding."""


Literal = tuple[int, int]  # (variable index, value)


@dataclass(frozen=True)
class CspInstance:
    """Finite-domain variables with disjunctive literal constraints.

    ``domains[i]`` is the ordered tuple of values variable i may take; each
    constraint is a set of literals of which at least one must hold.  A
    constraint with no literals is unsatisfiable.
    """

    domains: tuple[tuple[int, ...], ...]
    constraints: tuple[frozenset, ...]

    def __post_init__(self):
        for i, dom in enumerate(self.domains):
            if not dom:
                raise CspError(f"variable {i} has an empty domain")
        for c in self.constraints:
            scope = {var for var, _ in c}
            if len(scope) > 4:
                raise CspError(f"constraint scope {sorted(scope)} exceeds 4 variables")

    @property
    def n_vars(self) -> int:
        return len(self.domains)


@dataclass(frozen=True)
class CliqueEncoding:
    """Decoder: value j of variable i is the j-th vertex of clique i."""

    clique_of: tuple[tuple[int, ...], ...]

    def decode(self, assignment: dict) -> frozenset:
        return frozenset(self.clique_of[i][assignment[i] - 1]
                         for i in range(len(self.clique_of)))


def encode(g: MarkedGraph) -> tuple[CspInstance, CliqueEncoding]:
    """CSP instance for a clique-union marked graph.

    Cliques are numbered by smallest member; positions within a clique are
    ascending vertex identifiers, values 1..|K|.
    """
    comps = g.free_components()
    for comp in comps:
        if g.classify_component(comp)[0] != "clique":
            raise CspError(f"free component {sorted(comp)} is not a clique")
        if len(comp) > 4:
            raise CspError(f"free clique {sorted(comp)} larger than 4")
    for u in g.marked:
        if g.f_degree(u) > 4:
            raise CspError(f"marked vertex {u} has more than 4 free neighbors")

    cliques = [tuple(sorted(comp)) for comp in comps]
    position = {v: (i, j + 1) for i, cl in enumerate(cliques)
                for j, v in enumerate(cl)}
    constraints = []
    for u in sorted(g.marked):
        lits = frozenset(position[v] for v in g.free_neighbors(u))
        constraints.append(lits)
    inst = CspInstance(tuple(tuple(range(1, len(cl) + 1)) for cl in cliques),
                       tuple(constraints))
    return inst, CliqueEncoding(tuple(cliques))


# ---------------------------------------------------------------------------
# Domain splitting


def _restrict(inst: CspInstance, var: int, values: tuple[int, ...]) -> CspInstance:
    """Instance with var's domain narrowed; literals outside the new domain
    are removed, and a now-fixed variable satisfies or sheds its literals."""
    domains = list(inst.domains)
    domains[var] = values
    fixed = values[0] if len(values) == 1 else None
    constraints = []
    for c in inst.constraints:
        if fixed is not None and (var, fixed) in c:
            continue  # satisfied outright
        kept = frozenset(lit for lit in c
                         if lit[0] != var or lit[1] in values)
        if fixed is not None:
            kept = frozenset(lit for lit in kept if lit[0] != var)
        constraints.append(kept)
    return CspInstance(tuple(domains), tuple(constraints))


def split_to_binary(inst: CspInstance) -> list[CspInstance]:
    """Equivalent family of instances with all domains of size <= 2.

    A size-4 domain halves into two binary branches; a size-3 domain yields
    one binary branch and one fixed-value branch whose assignment is
    propagated into the constraints.  The union of the families' solution
    sets equals the input's.
    """
    out: list[CspInstance] = []
    stack = [inst]
    while stack:
        cur = stack.pop()
        var = next((i for i, d in enumerate(cur.domains) if len(d) > 2), None)
        if var is None:
            out.append(cur)
            continue
        dom = cur.domains[var]
        halves = [dom[:2], dom[2:]]  # size 3 leaves a singleton second half
        # push in reverse so the first half is explored (and reported) first
        for values in reversed(halves):
            stack.append(_restrict(cur, var, values))
    return out


# ---------------------------------------------------------------------------
# Binary-domain backtracking


def solve_binary(inst: CspInstance) -> Optional[dict]:
    """Satisfying assignment of a binary-domain instance, or None.

    Chronological backtracking over variables in ascending order, values in
    domain order, with unit propagation on almost-falsified constraints.
    """
    for dom in inst.domains:
        if len(dom) > 2:
            raise CspError("solve_binary requires domains of size <= 2")

    n = inst.n_vars
    assignment: dict = {}

    def literal_state(lit: Literal) -> Optional[bool]:
        var, val = lit
        if var in assignment:
            return assignment[var] == val
        return None if val in inst.domains[var] else False

    def propagate(trail: list) -> bool:
        """Assign forced literals until fixpoint; False on a wipeout."""
        changed = True
        while changed:
            changed = False
            for c in inst.constraints:
                open_lits = []
                satisfied = False
                for lit in c:
                    st = literal_state(lit)
                    if st is True:
                        satisfied = True
                        break
                    if st is None:
                        open_lits.append(lit)
                if satisfied:
                    continue
                if not open_lits:
                    return False
                if len(open_lits) == 1:
                    var, val = open_lits[0]
                    assignment[var] = val
                    trail.append(var)
                    changed = True
        return True

    def backtrack() -> bool:
        trail: list = []
        if not propagate(trail):
            for var in trail:
                del assignment[var]
            return False
        var = next((i for i in range(n) if i not in assignment), None)
        if var is None:
            return True
        for val in inst.domains[var]:
            assignment[var] = val
            if backtrack():
                return True
            del assignment[var]
        for var_ in trail:
            del assignment[var_]
        return False

    return dict(assignment) if backtrack() else None


def solve_clique_union(g: MarkedGraph) -> Solution:
    """Exact solution on a clique-union marked graph.

    Every free clique contributes exactly one solution vertex, so any
    feasible solution has size equal to the number of cliques; the CSP
    decides whether the marked vertices can all be dominated.
    """
    inst, enc = encode(g)
    for sub in split_to_binary(inst):
        assignment = solve_binary(sub)
        if assignment is not None:
            witness = enc.decode(assignment)
            return Solution.found(len(witness), witness)
    return INFEASIBLE
