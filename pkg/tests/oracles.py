"""Slow reference implementations over frozensets.

Nothing here imports the package; each function works straight from the
definitions so it can judge the bitmask code independently.
"""

from __future__ import annotations

from itertools import chain, combinations

Fam = set[frozenset]


def powerset(n: int):
    items = range(n)
    return (frozenset(s) for s in chain.from_iterable(combinations(items, k) for k in range(n + 1)))


def to_fs(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def to_mask(s) -> int:
    return sum(1 << i for i in s)


def fam_of(f) -> Fam:
    """SetFamily (or iterable of masks) to a set of frozensets."""
    sets = f.sets if hasattr(f, "sets") else f
    return {to_fs(x) for x in sets}


def minimal(fam: Fam) -> Fam:
    return {a for a in fam if not any(b < a for b in fam)}


def maximal(fam: Fam) -> Fam:
    return {a for a in fam if not any(a < b for b in fam)}


def transversals(n: int, fam: Fam) -> Fam:
    hits = [s for s in powerset(n) if all(s & e for e in fam)]
    return minimal(set(hits))


def complement(n: int, fam: Fam) -> Fam:
    v = frozenset(range(n))
    return {v - s for s in fam}


def independent(x: frozenset, circuits: Fam) -> bool:
    return not any(c <= x for c in circuits)


def rank(x: frozenset, circuits: Fam) -> int:
    return max(len(s) for s in powerset_of(x) if independent(s, circuits))


def powerset_of(x: frozenset):
    items = sorted(x)
    return (frozenset(s) for s in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1)))


def bases(n: int, circuits: Fam) -> Fam:
    return maximal({s for s in powerset(n) if independent(s, circuits)})


def matroid_closure(n: int, x: frozenset, circuits: Fam) -> frozenset:
    r = rank(x, circuits)
    return frozenset(e for e in range(n) if rank(x | {e}, circuits) == r)


def flats(n: int, circuits: Fam) -> Fam:
    return {x for x in powerset(n) if matroid_closure(n, x, circuits) == x}


def hyperplanes(n: int, circuits: Fam) -> Fam:
    full_rank = rank(frozenset(range(n)), circuits)
    return {f for f in flats(n, circuits) if rank(f, circuits) == full_rank - 1}


def circuit_axioms_hold(fam: Fam) -> bool:
    if frozenset() in fam:
        return False
    for a in fam:
        for b in fam:
            if a != b and a <= b:
                return False
    for a in fam:
        for b in fam:
            if a == b:
                continue
            for u in a & b:
                rest = (a | b) - {u}
                if not any(c <= rest for c in fam):
                    return False
    return True


# --- Horn side -------------------------------------------------------------

Clause = tuple[frozenset, int]


def circular(fam: Fam) -> list[Clause]:
    return [(h - {v}, v) for h in fam for v in h]


def horn_closure(clauses: list[Clause], z: frozenset) -> frozenset:
    cur = set(z)
    changed = True
    while changed:
        changed = False
        for body, head in clauses:
            if body <= cur and head not in cur:
                cur.add(head)
                changed = True
    return frozenset(cur)


def models(n: int, clauses: list[Clause]) -> Fam:
    return {s for s in powerset(n) if all(not body <= s or head in s for body, head in clauses)}


def implies(n: int, clauses: list[Clause], body: frozenset, head: int) -> bool:
    return head in horn_closure(clauses, body)


def prime_implicates(n: int, clauses: list[Clause]) -> set[Clause]:
    out = set()
    for body in powerset(n):
        cl = horn_closure(clauses, body)
        for v in cl - body:
            if not any(v in horn_closure(clauses, body - {u}) for u in body):
                out.add((body, v))
    return out


def minimal_keys(n: int, clauses: list[Clause]) -> Fam:
    v = frozenset(range(n))
    return minimal({s for s in powerset(n) if horn_closure(clauses, s) == v})


def implicate_sets(n: int, true: Fam) -> Fam:
    """I with (I - v) -> v implied for every v in I, judged on the true sets."""
    out = set()
    for i in powerset(n):
        if all(not (i - {v}) <= t or v in t for v in i for t in true):
            out.add(i)
    return out


# --- minimum representations -----------------------------------------------


def generated(start: Fam, limit: Fam) -> Fam:
    """Close ``start`` under (X1 ∪ X2) - v for v in X1 ∩ X2, keeping members of ``limit``."""
    cur = set(start)
    while True:
        new = set()
        for a in cur:
            for b in cur:
                for v in a & b:
                    x = (a | b) - {v}
                    if x in limit and x not in cur:
                        new.add(x)
        if not new:
            return cur
        cur |= new


def min_generator_size(circuits: Fam) -> tuple[int, list[Fam]]:
    items = sorted(circuits, key=lambda s: (len(s), sorted(s)))
    for k in range(1, len(items) + 1):
        hits = [set(c) for c in combinations(items, k) if generated(set(c), circuits) == circuits]
        if hits:
            return k, hits
    raise AssertionError


def min_circuit_subsystem_size(n: int, circuits: Fam) -> tuple[int, list[Fam]]:
    want = models(n, circular(circuits))
    items = sorted(circuits, key=lambda s: (len(s), sorted(s)))
    for k in range(1, len(items) + 1):
        hits = [set(c) for c in combinations(items, k) if models(n, circular(set(c))) == want]
        if hits:
            return k, hits
    raise AssertionError


def min_circuit_clauses_size(n: int, circuits: Fam) -> tuple[int, list[set[Clause]]]:
    pool = sorted(set(circular(circuits)), key=lambda c: (c[1], len(c[0]), sorted(c[0])))
    want = models(n, pool)
    for k in range(1, len(pool) + 1):
        hits = [set(c) for c in combinations(pool, k) if models(n, list(c)) == want]
        if hits:
            return k, hits
    raise AssertionError


def min_circuit_clauses_branching(n: int, circuits: Fam) -> tuple[int, list[set[Clause]]]:
    """Same answer as min_circuit_clauses_size, by branching on the first false set still satisfied.

    Every clause of the pool is an implicate, so a subset represents the
    function exactly when each false set violates one of its clauses.
    """
    pool = sorted(set(circular(circuits)), key=lambda c: (c[1], len(c[0]), sorted(c[0])))
    false = [s for s in powerset(n) if s not in models(n, pool)]
    kills = [[c for c in pool if c[0] <= x and c[1] not in x] for x in false]

    def search(chosen: frozenset, depth: int, found: set):
        open_ = next((i for i, x in enumerate(false) if not any(c[0] <= x and c[1] not in x for c in chosen)), None)
        if open_ is None:
            found.add(chosen)
            return
        if depth == 0:
            return
        for c in kills[open_]:
            search(chosen | {c}, depth - 1, found)

    for k in range(1, len(pool) + 1):
        found: set = set()
        search(frozenset(), k, found)
        hits = [set(s) for s in found if len(s) == k]
        if hits:
            return k, hits
    raise AssertionError


def gf2_circuits(columns: list[int]) -> Fam:
    """Minimal column sets with zero GF(2) sum."""
    dep = set()
    for k in range(1, len(columns) + 1):
        for combo in combinations(range(len(columns)), k):
            acc = 0
            for i in combo:
                acc ^= columns[i]
            if acc == 0:
                dep.add(frozenset(combo))
    return minimal(dep)


def covering_number(n: int, q: int, r: int) -> int:
    blocks = [frozenset(b) for b in combinations(range(n), q)]
    targets = [frozenset(t) for t in combinations(range(n), r)]
    for k in range(1, len(blocks) + 1):
        for combo in combinations(blocks, k):
            if all(any(t <= b for b in combo) for t in targets):
                return k
    raise AssertionError


def is_implication_system(n: int, r: int, fam: Fam) -> bool:
    v = frozenset(range(n))
    clauses = circular(fam)
    return all(horn_closure(clauses, frozenset(x)) == v for x in combinations(range(n), r))


def implication_number(n: int, r: int) -> int:
    blocks = [frozenset(b) for b in combinations(range(n), r + 1)]
    for k in range(1, len(blocks) + 1):
        for combo in combinations(blocks, k):
            if is_implication_system(n, r, set(combo)):
                return k
    raise AssertionError
