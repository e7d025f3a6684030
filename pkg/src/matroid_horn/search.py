"""Exact minimum hitting set by iterative deepening branch and bound.

Every constraint is an int bitmask of the elements that satisfy it; a
solution is a set of elements meeting every constraint.  Used for minimum
covering systems and for minimum circuit / circuit-clause representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .bits import members
from .errors import InvalidInput

BoundFn = Callable[[list[int]], int]


@dataclass(frozen=True)
class HittingSetResult:
    size: int
    witness: tuple[int, ...]
    unique: bool | None
    nodes: int


def _drop_dominated(constraints: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Remove constraints whose option set contains another constraint's options."""
    kept: list[tuple[int, int]] = []
    for key, opts in sorted(set(constraints), key=lambda c: (c[1].bit_count(), c[1], c[0])):
        if not any(k_opts & ~opts == 0 for _, k_opts in kept):
            kept.append((key, opts))
    return kept


class _Search:
    def __init__(self, constraints, bound_fn, count_limit):
        self.constraints = constraints
        self.bound_fn = bound_fn
        self.count_limit = count_limit
        self.solutions: list[int] = []
        self.nodes = 0

    def lower_bound(self, uncovered: list[tuple[int, int]], allowed: int) -> int:
        # disjoint option sets each need their own element
        used = 0
        packing = 0
        for _, opts in uncovered:
            opts &= allowed
            if opts & used == 0:
                used |= opts
                packing += 1
        best = packing
        if self.bound_fn is not None:
            best = max(best, self.bound_fn([key for key, _ in uncovered]))
        return best

    def run(self, chosen: int, forbidden: int, budget: int) -> bool:
        """Depth-first search; returns True once ``count_limit`` solutions are found."""
        self.nodes += 1
        uncovered = [c for c in self.constraints if not c[1] & chosen]
        if not uncovered:
            self.solutions.append(chosen)
            return len(self.solutions) >= self.count_limit
        if budget == 0:
            return False
        allowed = ~forbidden
        if any(opts & allowed == 0 for _, opts in uncovered):
            return False
        if self.lower_bound(uncovered, allowed) > budget:
            return False
        _, opts = min(uncovered, key=lambda c: ((c[1] & allowed).bit_count(), c[1]))
        branch_forbid = forbidden
        for e in members(opts & allowed):
            bit = 1 << e
            if self.run(chosen | bit, branch_forbid, budget - 1):
                return True
            branch_forbid |= bit
        return False


def min_hitting_set(
    constraints: Sequence[tuple[int, int]] | Sequence[int],
    lower: int = 0,
    upper: int | None = None,
    bound_fn: BoundFn | None = None,
    check_unique: bool = True,
) -> HittingSetResult:
    """Smallest set of elements meeting every constraint.

    ``constraints`` holds option masks, or ``(key, options)`` pairs when a
    ``bound_fn`` needs to see which constraints are still open.  Sizes are
    tried upward from ``lower``; at the optimum the search continues far
    enough to decide whether the optimal solution is unique.
    """
    pairs = [c if isinstance(c, tuple) else (i, c) for i, c in enumerate(constraints)]
    for key, opts in pairs:
        if opts == 0:
            raise InvalidInput(f"constraint {key} has no options; no hitting set exists")
    reduced = _drop_dominated(pairs)
    all_elems = 0
    for _, opts in reduced:
        all_elems |= opts
    limit = all_elems.bit_count() if upper is None else upper
    nodes = 0
    size = max(lower, 0)
    while size <= limit:
        search = _Search(reduced, bound_fn, 2 if check_unique else 1)
        search.run(0, 0, size)
        nodes += search.nodes
        if search.solutions:
            witness = tuple(members(search.solutions[0]))
            unique = (len(search.solutions) == 1) if check_unique else None
            return HittingSetResult(len(witness), witness, unique, nodes)
        size += 1
    raise InvalidInput(f"no hitting set of size <= {limit}")
