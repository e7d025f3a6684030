"""Minimum representations of matroids and matroid Horn functions.

Three objectives are covered: the fewest circuits generating the whole
circuit family (G), the fewest circuits whose circular CNF represents the
matroid Horn function (C), and the fewest circuit clauses doing the same (K).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Union

import numpy as np

from .bits import full, k_subsets, members, sort_key
from .designs import DesignSpec, implication_constraints, verify
from .errors import (
    BadInput,
    BadParams,
    MethodMismatch,
    NotCoveringSystem,
    NotSimpleBinary,
    SubsetViolation,
    check_budget,
)
from .horn import BoolFn, DefiniteCNF, circular_cnf, closure
from .matroid import Matroid, canonical_cnf, is_simple
from .search import min_hitting_set
from .set_family import SetFamily


@dataclass(frozen=True)
class RepresentationCost:
    objective: str  # "G", "C" or "K"
    value: int
    witness: Union[SetFamily, DefiniteCNF]
    exact: bool
    unique: bool | None = None
    method: str = ""
    seconds: float = 0.0


# --- circuit generation ---------------------------------------------------


def _require_subfamily(g: SetFamily, f: SetFamily) -> None:
    if g.n != f.n or not set(g.sets) <= set(f.sets):
        raise SubsetViolation("generator family must be a subfamily of the circuit family")


def _generate_step(current: set[int], fresh: set[int], universe: frozenset) -> set[int]:
    """Members of ``universe`` produced by one step using at least one fresh set."""
    out = set()
    cur = list(current)
    for a in fresh:
        for b in cur:
            if a == b:
                continue
            common = a & b
            if not common:
                continue
            union = a | b
            for v in members(common):
                x = union & ~(1 << v)
                if x in universe and x not in current:
                    out.add(x)
    return out


def generate_one_step(g: SetFamily, f: SetFamily) -> SetFamily:
    """g together with every X in f of the form (X1 ∪ X2) - v, X1 ≠ X2 in g, v in X1 ∩ X2."""
    _require_subfamily(g, f)
    current = set(g.sets)
    return f.with_sets(current | _generate_step(current, current, frozenset(f.sets)))


def generate_closure(g: SetFamily, f: SetFamily) -> tuple[SetFamily, int]:
    """Least fixed point of the one-step operator and the number of productive rounds."""
    _require_subfamily(g, f)
    return _closure_sets(set(g.sets), frozenset(f.sets), f)


def _closure_sets(start: set[int], universe: frozenset, f: SetFamily) -> tuple[SetFamily, int]:
    current = set(start)
    fresh = set(start)
    rounds = 0
    while fresh:
        new = _generate_step(current, fresh, universe)
        if not new:
            break
        rounds += 1
        current |= new
        fresh = new
    return f.with_sets(current), rounds


def _generates(start, universe: frozenset) -> bool:
    current = set(start)
    fresh = set(start)
    while fresh and len(current) < len(universe):
        fresh = _generate_step(current, fresh, universe)
        current |= fresh
    return len(current) == len(universe)


# --- chordless circuits ---------------------------------------------------


def chordless_circuits(m: Matroid) -> SetFamily:
    """Circuits C with no circuit C' such that |C' \\ C| = 1 and |C'| < |C|."""
    if not is_simple(m):
        raise NotSimpleBinary("chordless circuits are defined for simple binary matroids")
    circuits = m.circuits.sets
    keep = []
    for c in circuits:
        size = c.bit_count()
        if not any(d.bit_count() < size and (d & ~c).bit_count() == 1 for d in circuits):
            keep.append(c)
    return m.circuits.with_sets(keep)


def _require_simple(m: Matroid, binary: bool) -> None:
    if not binary:
        raise NotSimpleBinary("chordless method needs a binary matroid (pass binary=True)")
    if not is_simple(m):
        raise NotSimpleBinary("chordless method needs a simple matroid")


# --- objective G ----------------------------------------------------------


def _forced_generators(circuits: list[int], universe: frozenset) -> list[int]:
    """Circuits that no generator can omit: those not generated by all the others."""
    forced = []
    for c in circuits:
        others = universe - {c}
        if not _generates_member(others, c, universe):
            forced.append(c)
    return forced


def _generates_member(start, target: int, universe: frozenset) -> bool:
    current = set(start)
    fresh = set(start)
    while fresh:
        fresh = _generate_step(current, fresh, universe)
        if target in fresh:
            return True
        current |= fresh
    return False


def min_generator(m: Matroid, method: str = "exact", binary: bool = False, max_circuits: int = 40) -> RepresentationCost:
    """Minimum generator of the circuit family.

    ``exact`` enumerates subfamilies by increasing size after fixing the
    forced circuits; ``chordless`` returns the chordless circuits of a simple
    binary matroid and certifies them as forced and generating.
    """
    started = time.perf_counter()
    circuits = list(m.circuits.sets)
    universe = frozenset(circuits)
    if method == "chordless":
        _require_simple(m, binary)
        chordless = chordless_circuits(m)
        forced = set(_forced_generators(circuits, universe))
        generating = _generates(chordless.sets, universe)
        certified = generating and forced == set(chordless.sets)
        return RepresentationCost(
            "G", len(chordless), chordless, certified, certified if certified else None,
            "chordless", time.perf_counter() - started,
        )
    if method != "exact":
        raise MethodMismatch(f"objective G supports exact|chordless, not {method!r}")
    if len(circuits) > max_circuits:
        check_budget(2 ** len(circuits), "min_generator", max_circuits)
    forced = _forced_generators(circuits, universe)
    rest = [c for c in circuits if c not in set(forced)]
    ground_needed = 0
    for c in circuits:
        ground_needed |= c
    for extra in range(len(rest) + 1):
        found = []
        for combo in combinations(rest, extra):
            start = forced + list(combo)
            covered = 0
            for c in start:
                covered |= c
            # generation never introduces new elements
            if covered != ground_needed:
                continue
            if _generates(start, universe):
                found.append(start)
                if len(found) == 2:
                    break
        if found:
            witness = m.circuits.with_sets(found[0])
            return RepresentationCost(
                "G", len(witness), witness, True, len(found) == 1, "exact",
                time.perf_counter() - started,
            )
    raise AssertionError("the full circuit family always generates itself")


# --- objectives C and K ---------------------------------------------------


def _false_sets(m: Matroid, budget: int | None = None) -> list[int]:
    truth = BoolFn.from_cnf(canonical_cnf(m), budget).truth
    return [int(x) for x in np.flatnonzero(~truth)]


def represents(m: Matroid, phi: DefiniteCNF) -> bool:
    """Whether a CNF built from circuit clauses of m is equivalent to the canonical CNF.

    Such a CNF is always implied by h_M, so it suffices that every circuit
    clause of m is an implicate of it.
    """
    for c in m.circuits.sets:
        for v in members(c):
            if not closure(phi, c & ~(1 << v)) >> v & 1:
                return False
    return True


def _forced_elements(constraints: list[tuple[int, int]]) -> int:
    """Elements that are the only option of some constraint."""
    forced = 0
    for _, opts in constraints:
        if opts.bit_count() == 1:
            forced |= opts
    return forced


def _chordless_certificate(constraints, chosen_mask: int) -> bool:
    """``chosen_mask`` is feasible and every member is forced, hence the unique optimum."""
    feasible = all(opts & chosen_mask for _, opts in constraints)
    return feasible and _forced_elements(constraints) & chosen_mask == chosen_mask


def min_circuit_subsystem(m: Matroid, method: str = "exact", binary: bool = False, budget: int | None = None) -> RepresentationCost:
    """Fewest circuits D ⊆ C with Φ_D equivalent to Φ_C."""
    started = time.perf_counter()
    circuits = list(m.circuits.sets)
    constraints = implication_constraints(m.n, circuits, _false_sets(m, budget))
    if method == "chordless":
        _require_simple(m, binary)
        chordless = chordless_circuits(m)
        chosen = sum(1 << circuits.index(c) for c in chordless.sets)
        certified = _chordless_certificate(constraints, chosen)
        return RepresentationCost(
            "C", len(chordless), chordless, certified, certified if certified else None,
            "chordless", time.perf_counter() - started,
        )
    if method != "exact":
        raise MethodMismatch(f"objective C supports exact|chordless, not {method!r}")
    result = min_hitting_set(constraints)
    witness = m.circuits.with_sets(circuits[i] for i in result.witness)
    if not represents(m, circular_cnf(witness)):
        raise AssertionError("hitting set witness does not represent the matroid")
    return RepresentationCost(
        "C", result.size, witness, True, result.unique, "exact", time.perf_counter() - started
    )


def circuit_clause_pool(m: Matroid) -> list[tuple[int, int]]:
    """All circuit clauses (C - v) -> v in canonical clause order."""
    pool = [(c & ~(1 << v), v) for c in m.circuits.sets for v in members(c)]
    check_budget(len(pool), "circuit clause pool")
    return sorted(pool, key=lambda cl: (cl[1], sort_key(cl[0])))


def min_circuit_clauses(m: Matroid, method: str = "exact", binary: bool = False, budget: int | None = None) -> RepresentationCost:
    """Fewest circuit clauses representing the matroid Horn function."""
    started = time.perf_counter()
    if method == "uniform":
        n, r = m.n, m.rank_of_ground
        if m.circuits.sets != tuple(k_subsets(n, r + 1)):
            raise MethodMismatch("uniform method needs a uniform matroid")
        phi = uniform_clause_representation(n, r)
        if not represents(m, phi):
            raise AssertionError("uniform clause construction does not represent U(n, r)")
        # r-sets are false sets whose only usable clauses are the ones with
        # exactly that body, so they form a packing certifying the lower bound
        lower = sum(1 for x in k_subsets(n, r) if any(b == x for b, _ in circuit_clause_pool(m)))
        return RepresentationCost(
            "K", len(phi), phi, lower == len(phi), None, "uniform", time.perf_counter() - started
        )
    pool = circuit_clause_pool(m)
    constraints = []
    for x in _false_sets(m, budget):
        opts = 0
        for i, (body, head) in enumerate(pool):
            if body & ~x == 0 and not x >> head & 1:
                opts |= 1 << i
        constraints.append((x, opts))
    if method == "chordless":
        _require_simple(m, binary)
        chordless = chordless_circuits(m)
        phi = circular_cnf(chordless)
        chosen = sum(1 << pool.index(cl) for cl in phi.clauses)
        certified = _chordless_certificate(constraints, chosen)
        return RepresentationCost(
            "K", len(phi), phi, certified, certified if certified else None,
            "chordless", time.perf_counter() - started,
        )
    if method != "exact":
        raise MethodMismatch(f"objective K supports exact|chordless|uniform, not {method!r}")
    result = min_hitting_set(constraints)
    phi = DefiniteCNF(m.n, tuple(pool[i] for i in result.witness))
    if not represents(m, phi):
        raise AssertionError("hitting set witness does not represent the matroid")
    return RepresentationCost("K", result.size, phi, True, result.unique, "exact", time.perf_counter() - started)


# --- uniform matroid constructions ----------------------------------------


def _check_uniform_params(n: int, r: int) -> None:
    if not 1 <= r < n:
        raise BadParams(f"need 1 <= r < n, got n={n}, r={r}")


def uniform_interval_generator(n: int, r: int) -> SetFamily:
    """The n - r consecutive (r+1)-intervals {i, ..., i+r}."""
    _check_uniform_params(n, r)
    return SetFamily(n, tuple(full(r + 1) << i for i in range(n - r)))


def uniform_star_representation(n: int, r: int, v: int = 0) -> SetFamily:
    """All circuits through v: {X + v | X ⊆ V - v, |X| = r}."""
    if not (1 <= r and r + 2 <= n and 0 <= v < n):
        raise BadParams(f"star needs r + 2 <= n and v in [n], got n={n}, r={r}, v={v}")
    others = [u for u in range(n) if u != v]
    sets = [sum(1 << u for u in combo) | (1 << v) for combo in combinations(others, r)]
    return SetFamily(n, tuple(sets))


def cyclic_intervals(t: int, n: int) -> list[tuple[int, int]]:
    """Maximal cyclic runs of t as (start, length), ordered by start index."""
    if t == full(n):
        return [(0, n)]
    runs = []
    for s in members(t):
        if not t >> ((s - 1) % n) & 1:
            length = 0
            while t >> ((s + length) % n) & 1:
                length += 1
            runs.append((s, length))
    return runs


def longest_interval(t: int, n: int) -> int:
    return max((length for _, length in cyclic_intervals(t, n)), default=0)


def _run_mask(start: int, length: int, n: int) -> int:
    return sum(1 << ((start + i) % n) for i in range(length))


def phi_shift(t: int, n: int) -> int:
    """Shift map on proper nonempty subsets of the cycle 0, 1, ..., n-1.

    A single interval moves one step clockwise.  Otherwise the longest
    interval (smallest start on ties) grows by its clockwise successor and
    the next interval in cyclic order loses its clockwise-last element.
    """
    if t == 0 or t == full(n):
        raise BadInput("phi_shift needs a nonempty proper subset")
    runs = cyclic_intervals(t, n)
    if len(runs) == 1:
        return sum(1 << ((x + 1) % n) for x in members(t))
    idx = max(range(len(runs)), key=lambda i: (runs[i][1], -runs[i][0]))
    start, length = runs[idx]
    grow = (start + length) % n
    nxt_start, nxt_len = runs[(idx + 1) % len(runs)]
    drop = (nxt_start + nxt_len - 1) % n
    return (t | (1 << grow)) & ~(1 << drop)


def covering_doubling_representation(n: int, r: int, cover: SetFamily) -> SetFamily:
    """cover ∪ phi(cover) for a covering (n, r+1, r)-system."""
    _check_uniform_params(n, r)
    if cover.n != n:
        raise NotCoveringSystem(f"cover lives on {cover.n} points, expected {n}")
    try:
        report = verify(DesignSpec("covering", n, r + 1, r), cover)
    except Exception as exc:
        raise NotCoveringSystem(str(exc)) from exc
    if not report:
        raise NotCoveringSystem(report.reason)
    return cover.with_sets(set(cover.sets) | {phi_shift(t, n) for t in cover.sets})


def rank2_params(n: int) -> tuple[int, int]:
    """(p, b): p groups of five plus a residual of size b, with p ≡ 3 (mod 6)."""
    if n < 46:
        raise BadParams(f"rank-2 group construction needs n >= 46, got {n}")
    res = n % 30
    b = res - 15 if res >= 17 else res + 15
    return (n - b) // 5, b


def rank2_group_representation(n: int) -> tuple[SetFamily, int, int]:
    """Implication (n, 3, 2)-system of size n²/5 + O(n) from groups of five.

    Groups are A_i = {5i, ..., 5i+4} for i < p and the residual is the last b
    points.  Triples within a group pair plus a residual point and residual
    pairs plus any other point make every pair inside A_i ∪ B close to V; for
    each triple {x, y, z} of a Steiner triple system on the groups, 30
    triples make every cross pair reach two points of one group.
    """
    from .designs import steiner_triple_bose

    p, b = rank2_params(n)
    residual = list(range(5 * p, n))

    def a(group: int, i: int) -> int:
        return 1 << (5 * group + i % 5)

    c1 = set()
    for g in range(p):
        for u, v in combinations(range(5), 2):
            for w in residual:
                c1.add(a(g, u) | a(g, v) | (1 << w))
    for u, v in combinations(residual, 2):
        for w in range(5 * p):
            c1.add((1 << u) | (1 << v) | (1 << w))
    c2 = set()
    for triple in steiner_triple_bose(p).sets:
        x, y, z = members(triple)
        for first, second, third in ((x, y, z), (y, z, x), (x, z, y)):
            for i in range(5):
                pair = a(first, i) | a(second, i)
                c2.add(pair | a(third, i + 1))
                c2.add(pair | a(third, i + 2))
    return SetFamily(n, tuple(c1 | c2)), p, b


def rank2_expected_size(n: int) -> int:
    """|C1| + |C2| from the construction's counting formulas."""
    p, b = rank2_params(n)
    return p * comb(5, 2) * b + (n - b) * comb(b, 2) + 30 * p * (p - 1) // 6


def uniform_clause_representation(n: int, r: int) -> DefiniteCNF:
    """One clause X -> v_X per r-set X, v_X the successor of X's first cyclic interval."""
    _check_uniform_params(n, r)
    clauses = []
    for x in k_subsets(n, r):
        start, length = cyclic_intervals(x, n)[0]
        clauses.append((x, (start + length) % n))
    return DefiniteCNF(n, tuple(clauses))
