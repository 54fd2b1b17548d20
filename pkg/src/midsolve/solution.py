"""Result type shared by the branch-and-reduce solver and the oracles.

A marked graph may have no independent dominating set at all (e.g. a marked
vertex with no free neighbor), so results are either a witness set with its
size or the explicit ``INFEASIBLE`` value.  Using an explicit variant instead
of a large sentinel number keeps minimum computations honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class Solution:
    size: Optional[int]
    witness: Optional[frozenset]

    @property
    def feasible(self) -> bool:
        return self.size is not None

    @staticmethod
    def found(size: int, witness: Iterable[int]) -> "Solution":
        w = frozenset(witness)
        if len(w) != size:
            raise ValueError(f"witness size {len(w)} != reported size {size}")
        return Solution(size, w)

    def plus(self, extra: Iterable[int]) -> "Solution":
        """Add committed vertices on the way out of a branch.

        Adding to an infeasible result stays infeasible.
        """
        if not self.feasible:
            return INFEASIBLE
        extra = frozenset(extra)
        return Solution(self.size + len(extra), self.witness | extra)

    def __repr__(self) -> str:
        if not self.feasible:
            return "Infeasible"
        return f"Found({self.size}, {sorted(self.witness)})"


INFEASIBLE = Solution(None, None)


def better(current: Optional[Solution], challenger: Solution) -> Solution:
    """Minimum by size; infeasible is the identity.  Ties keep ``current``,
    so iterating branches in a fixed order yields a deterministic witness."""
    if current is None or not current.feasible:
        return challenger
    if challenger.feasible and challenger.size < current.size:
        return challenger
    return current
