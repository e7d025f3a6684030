"""Covering, Turán, Steiner and implication set systems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb

from .bits import fmt, full, k_subsets, members, vset
from .errors import (
    BadParams,
    BadResidue,
    InvalidInput,
    NonUniformFamily,
    check_budget,
)
from .search import min_hitting_set
from .set_family import SetFamily, complement_family, parse_hypergraph

KINDS = ("covering", "steiner", "implication", "turan")


@dataclass(frozen=True)
class DesignSpec:
    """Parameters of a design.

    For covering / steiner / implication systems ``block`` is q and ``target``
    is r (every r-set is handled by q-sets).  For Turán systems ``block`` is k
    and ``target`` is t (every t-set contains a k-set block).
    """

    kind: str
    n: int
    block: int
    target: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"unknown design kind {self.kind!r}")
        if self.kind == "turan":
            ok = self.n >= self.target > self.block >= 1
        else:
            ok = self.n >= self.block > self.target >= 1
        if not ok:
            raise BadParams(f"inconsistent parameters for {self}")
        if self.kind == "implication" and self.block != self.target + 1:
            raise BadParams("implication systems have block size r+1")

    def header(self) -> str:
        if self.kind == "turan":
            return f"design turan n={self.n} t={self.target} k={self.block}"
        return f"design {self.kind} n={self.n} q={self.block} r={self.target}"


@dataclass(frozen=True)
class DesignReport:
    spec: DesignSpec
    family: SetFamily
    valid: bool
    witness: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.valid


def _implication_closure(edges_by_subset: dict[int, list[int]], start: int, r: int, done: set[int], universe: int) -> int:
    """Closure of ``start`` under the circular CNF of an (r+1)-uniform family.

    Stops early when the closure contains an r-set already known to close to V.
    """
    z = start
    queue = members(start)
    seen_subsets = set()
    while queue:
        v = queue.pop()
        # r-subsets of z that contain v are new candidate bodies
        others = members(z & ~(1 << v))
        for rest in combinations(others, r - 1):
            body = vset(rest) | (1 << v)
            if body in seen_subsets:
                continue
            seen_subsets.add(body)
            if body != start and body in done:
                return universe
            for w in edges_by_subset.get(body, ()):
                if not z >> w & 1:
                    z |= 1 << w
                    queue.append(w)
        if z == universe:
            return z
    return z


def verify(spec: DesignSpec, f: SetFamily) -> DesignReport:
    """Decide whether ``f`` is a design of the given kind.

    Implication systems are checked on r-sets only: if every r-set closes to V
    then so does every larger set.
    """
    if f.n != spec.n:
        raise InvalidInput(f"family has ground size {f.n}, spec wants {spec.n}")
    if any(s.bit_count() != spec.block for s in f.sets):
        bad = next(s for s in f.sets if s.bit_count() != spec.block)
        raise NonUniformFamily(f"block {fmt(bad)} does not have size {spec.block}")
    n = spec.n
    if spec.kind == "turan":
        t = spec.target
        check_budget(comb(n, t), "verify turan")
        for x in k_subsets(n, t):
            if not any(b & ~x == 0 for b in f.sets):
                return DesignReport(spec, f, False, x, f"{t}-set {fmt(x)} contains no block")
        return DesignReport(spec, f, True)
    r = spec.target
    check_budget(comb(n, r), f"verify {spec.kind}")
    if spec.kind in ("covering", "steiner"):
        counts: dict[int, int] = {}
        for b in f.sets:
            for sub in combinations(members(b), r):
                key = vset(sub)
                counts[key] = counts.get(key, 0) + 1
        for x in k_subsets(n, r):
            c = counts.get(x, 0)
            if c == 0:
                return DesignReport(spec, f, False, x, f"{r}-set {fmt(x)} is uncovered")
            if spec.kind == "steiner" and c > 1:
                return DesignReport(spec, f, False, x, f"{r}-set {fmt(x)} is covered {c} times")
        return DesignReport(spec, f, True)
    universe = full(n)
    edges_by_subset: dict[int, list[int]] = {}
    for b in f.sets:
        for v in members(b):
            edges_by_subset.setdefault(b & ~(1 << v), []).append(v)
    done: set[int] = set()
    for x in k_subsets(n, r):
        reach = _implication_closure(edges_by_subset, x, r, done, universe)
        if reach != universe:
            return DesignReport(spec, f, False, x, f"{r}-set {fmt(x)} closes only to {fmt(reach)}")
        done.add(x)
    return DesignReport(spec, f, True)


def schonheim_bound(n: int, q: int, r: int) -> int:
    """Nested ceiling ⌈n/q ⌈(n-1)/(q-1) ⌈ ... ⌈(n-r+1)/(q-r+1)⌉ ... ⌉⌉⌉."""
    if not n >= q >= r >= 1:
        raise BadParams(f"need n >= q >= r >= 1, got ({n}, {q}, {r})")
    value = 1
    for i in range(r - 1, -1, -1):
        # exact integer ceiling of (n-i)/(q-i) * value
        value = -(-(n - i) * value // (q - i))
    return value


def fort_hedlund(n: int) -> int:
    """Closed form of c(n, 3, 2) by residue of n mod 6."""
    if n < 3:
        raise BadParams(f"fort_hedlund needs n >= 3, got {n}")
    res = n % 6
    if res == 0:
        return n * n // 6
    if res in (1, 3):
        return (n * n - n) // 6
    if res in (2, 4):
        return (n * n + 2) // 6
    return (n * n - n + 4) // 6


def _point_bound(n: int, q: int, r: int):
    """Lower bound on blocks still needed, counted point by point."""
    per_point = comb(q - 1, r - 1)

    def bound(uncovered: list[int]) -> int:
        counts = [0] * n
        for x in uncovered:
            for v in members(x):
                counts[v] += 1
        return ceil(sum(ceil(c / per_point) for c in counts) / q)

    return bound


def covering_number_bruteforce(n: int, q: int, r: int, lower: int | None = None) -> tuple[int, SetFamily]:
    """Exact c(n, q, r) with a witness.

    Sizes are searched upward from ``lower``, which defaults to the Schönheim
    bound; pass ``lower=0`` for a search that does not trust it.
    """
    if not n >= q >= r >= 1:
        raise BadParams(f"need n >= q >= r >= 1, got ({n}, {q}, {r})")
    check_budget(comb(n, q) * comb(n, r), "covering_number_bruteforce")
    blocks = list(k_subsets(n, q))
    constraints = []
    for x in k_subsets(n, r):
        opts = 0
        for i, b in enumerate(blocks):
            if x & ~b == 0:
                opts |= 1 << i
        constraints.append((x, opts))
    result = min_hitting_set(
        constraints,
        lower=schonheim_bound(n, q, r) if lower is None else lower,
        bound_fn=_point_bound(n, q, r),
        check_unique=False,
    )
    return result.size, SetFamily(n, tuple(blocks[i] for i in result.witness))


def implication_constraints(n: int, circuits: list[int], false_sets) -> list[tuple[int, int]]:
    """(false set, mask of circuits C with |C \\ X| = 1) for each false set X."""
    out = []
    for x in false_sets:
        opts = 0
        for i, c in enumerate(circuits):
            if (c & ~x).bit_count() == 1:
                opts |= 1 << i
        out.append((x, opts))
    return out


def implication_number_bruteforce(n: int, r: int) -> tuple[int, SetFamily]:
    """Exact b(n, r+1, r): the smallest implication (n, r+1, r)-system."""
    if not 1 <= r < n:
        raise BadParams(f"need 1 <= r < n, got n={n}, r={r}")
    check_budget(comb(n, r + 1) * 2**n, "implication_number_bruteforce")
    circuits = list(k_subsets(n, r + 1))
    universe = full(n)
    false_sets = [x for x in range(1 << n) if r <= x.bit_count() and x != universe]
    lower = ceil(comb(n, r) / (r + 0.5)) if n >= r + 2 else 1
    result = min_hitting_set(
        implication_constraints(n, circuits, false_sets), lower=lower, check_unique=False
    )
    return result.size, SetFamily(n, tuple(circuits[i] for i in result.witness))


def steiner_number_bruteforce(n: int, q: int, r: int) -> tuple[int, SetFamily] | None:
    """Size and witness of a Steiner (n, q, r)-system, or None when none exists."""
    if not n >= q > r >= 1:
        raise BadParams(f"need n >= q > r >= 1, got ({n}, {q}, {r})")
    total = comb(n, r)
    if total % comb(q, r):
        return None
    target = total // comb(q, r)
    check_budget(comb(n, q) * total, "steiner_number_bruteforce")
    blocks = list(k_subsets(n, q))
    shadows = [{vset(s) for s in combinations(members(b), r)} for b in blocks]

    def extend(chosen: list[int], covered: set[int]) -> list[int] | None:
        if len(chosen) == target:
            return chosen
        # the least uncovered r-set must be covered by some later block
        first = next(x for x in k_subsets(n, r) if x not in covered)
        for i in range(len(blocks)):
            if first & ~blocks[i] == 0 and not (shadows[i] & covered):
                got = extend(chosen + [i], covered | shadows[i])
                if got is not None:
                    return got
        return None

    found = extend([], set())
    if found is None:
        return None
    return target, SetFamily(n, tuple(blocks[i] for i in found))


def steiner_triple_bose(p: int) -> SetFamily:
    """Bose construction of a Steiner triple system on p ≡ 3 (mod 6) points.

    Points are (i, j) in Z_m x Z_3 with m = p/3, labelled 3i + j.
    """
    if p < 3 or p % 6 != 3:
        raise BadResidue(f"Bose construction needs p ≡ 3 (mod 6), got {p}")
    m = p // 3
    half = (m + 1) // 2  # inverse of 2 modulo odd m

    def point(i: int, j: int) -> int:
        return 3 * i + j

    triples = [vset(point(i, j) for j in range(3)) for i in range(m)]
    for i, l in combinations(range(m), 2):
        mid = (i + l) * half % m
        for j in range(3):
            triples.append(vset((point(i, j), point(l, j), point(mid, (j + 1) % 3))))
    return SetFamily(p, tuple(triples))


def turan_covering_complement(f: SetFamily, spec: DesignSpec) -> tuple[SetFamily, DesignSpec]:
    """Complement a Turán (n,t,k)-system into a covering (n,n-k,n-t)-system, or back."""
    report = verify(spec, f)
    if not report:
        raise InvalidInput(f"family is not a valid {spec.kind} system: {report.reason}")
    n = spec.n
    if spec.kind == "turan":
        other = DesignSpec("covering", n, n - spec.block, n - spec.target)
    elif spec.kind == "covering":
        other = DesignSpec("turan", n, n - spec.block, n - spec.target)
    else:
        raise BadParams("complement correspondence is defined for turan and covering systems")
    return complement_family(f), other


def greedy_covering(n: int, q: int, r: int) -> SetFamily:
    """Covering (n, q, r)-system built greedily, ties broken lexicographically."""
    if not n >= q >= r >= 1:
        raise BadParams(f"need n >= q >= r >= 1, got ({n}, {q}, {r})")
    check_budget(comb(n, q) * comb(q, r), "greedy_covering")
    blocks = list(k_subsets(n, q))
    shadows = [{vset(s) for s in combinations(members(b), r)} for b in blocks]
    uncovered = set(k_subsets(n, r))
    chosen = []
    while uncovered:
        best = max(range(len(blocks)), key=lambda i: (len(shadows[i] & uncovered), -i))
        chosen.append(blocks[best])
        uncovered -= shadows[best]
    return SetFamily(n, tuple(chosen))


def parse_design(text: str) -> SetFamily:
    """Design files are hypergraph files; the ``# design`` header is a comment."""
    return parse_hypergraph(text)
