"""Set families over [n] and the hypergraph operators c, d, intersection and union closure.

Families are immutable and stored in canonical order (size, then lexicographic on
members), so two families are equal exactly when they hold the same sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bits import check_ground, fmt, full, is_subset, members, sort_key, vset
from .errors import EmptyHyperedge, NotSperner, ParseError, check_budget


@dataclass(frozen=True)
class SetFamily:
    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        check_ground(self.n)
        if self.n < 1:
            raise ValueError("ground set must have at least one element")
        universe = full(self.n)
        for s in self.sets:
            if s & ~universe:
                raise ValueError(f"set {fmt(s)} not contained in [{self.n}]")
        canon = tuple(sorted(set(self.sets), key=sort_key))
        object.__setattr__(self, "sets", canon)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        return cls(n, tuple(masks))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, tuple(vset(s) for s in sets))

    @property
    def ground(self) -> int:
        return full(self.n)

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, mask) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.sets)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def as_lists(self) -> list[list[int]]:
        return [members(s) for s in self.sets]

    def with_sets(self, masks: Iterable[int]) -> "SetFamily":
        return SetFamily(self.n, tuple(masks))

    def __repr__(self):
        body = ", ".join(fmt(s) for s in self.sets)
        return f"SetFamily(n={self.n}, [{body}])"


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a collection of masks."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a collection of masks."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def is_sperner(f: SetFamily) -> bool:
    sets = f.sets
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            # canonical order puts smaller sets first, so only a ⊂ b is possible
            if is_subset(a, b):
                return False
    return True


def complement_family(f: SetFamily) -> SetFamily:
    """The family {V \\ H | H in f}."""
    universe = f.ground
    return f.with_sets(universe ^ s for s in f.sets)


def minimal_transversals(f: SetFamily, budget: int | None = None) -> SetFamily:
    """Minimal transversals by incremental Berge multiplication.

    Conventions for the degenerate inputs: the empty family has the single
    transversal ∅, and the family {∅} has none.
    """
    if 0 in f:
        if len(f) == 1:
            return f.with_sets(())
        raise EmptyHyperedge("a family containing the empty set has no transversal")
    transversals = [0]
    for edge in minimal_sets(f.sets):
        edge_elems = members(edge)
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | (1 << v) for v in edge_elems)
        check_budget(len(grown), "minimal_transversals", budget)
        transversals = minimal_sets(grown)
    return f.with_sets(transversals)


def intersection_closure(f: SetFamily, budget: int | None = None) -> SetFamily:
    """All intersections of subfamilies; the empty subfamily contributes V."""
    closed = {f.ground}
    for s in f.sets:
        closed |= {c & s for c in closed}
        check_budget(len(closed), "intersection_closure", budget)
    return f.with_sets(closed)


def union_closure(f: SetFamily, budget: int | None = None) -> SetFamily:
    """All unions of subfamilies; the empty subfamily contributes ∅."""
    closed = {0}
    for s in f.sets:
        closed |= {c | s for c in closed}
        check_budget(len(closed), "union_closure", budget)
    return f.with_sets(closed)


def _require_sperner(f: SetFamily) -> None:
    if not is_sperner(f):
        raise NotSperner(f"family {f!r} is not Sperner")


def bases_of(circuits: SetFamily, budget: int | None = None) -> SetFamily:
    """Maximal independent sets, C^{dc}."""
    _require_sperner(circuits)
    return complement_family(minimal_transversals(circuits, budget))


def circuits_of(bases: SetFamily, budget: int | None = None) -> SetFamily:
    """Minimal sets contained in no basis, B^{cd}."""
    _require_sperner(bases)
    return minimal_transversals(complement_family(bases), budget)


def is_independent(x: int, circuits: SetFamily) -> bool:
    return not any(c & ~x == 0 for c in circuits.sets)


def parse_hypergraph(text: str) -> SetFamily:
    """Parse the hypergraph text format.

    The first non-comment line is ``n <N>``; every later line is one hyperedge
    given as space separated 0-based indices, a blank line being the empty set.
    ``#`` starts a comment and whole-line comments are skipped.
    """
    n = None
    masks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.lstrip()
        if stripped.startswith("#"):
            continue
        line = raw.split("#", 1)[0].strip()
        if n is None:
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected 'n <N>' header, got {line!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad ground set size {parts[1]!r}", lineno) from None
            if not 1 <= n <= 64:
                raise ParseError(f"ground set size {n} outside 1..64", lineno)
            continue
        try:
            elems = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        for e in elems:
            if not 0 <= e < n:
                raise ParseError(f"vertex {e} outside 0..{n - 1}", lineno)
        masks.append(vset(elems))
    if n is None:
        raise ParseError("missing 'n <N>' header")
    return SetFamily(n, tuple(masks))


def format_hypergraph(f: SetFamily, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {f.n}")
    lines.extend(" ".join(map(str, members(s))) for s in f.sets)
    return "\n".join(lines) + "\n"
