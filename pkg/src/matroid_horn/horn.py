"""Definite Horn CNFs, forward chaining, and truth-table level Boolean functions.

Clauses are ``(body, head)`` pairs with ``body`` a bitmask and ``head`` an index.
A set X is a true set of a definite Horn CNF iff forward chaining from X adds
nothing, so every truth table here is computed from fixed points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from .bits import check_ground, fmt, full, members, sort_key, vset
from .errors import BadInput, ParseError, check_budget
from .set_family import SetFamily

Clause = tuple[int, int]


@dataclass(frozen=True)
class DefiniteCNF:
    n: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        check_ground(self.n)
        universe = full(self.n)
        for body, head in self.clauses:
            if not 0 <= head < self.n or body & ~universe:
                raise ValueError(f"clause {fmt(body)}->{head} outside [{self.n}]")
            if body >> head & 1:
                raise ValueError(f"head {head} occurs in body {fmt(body)}")
        canon = tuple(sorted(set(self.clauses), key=lambda c: (c[1], sort_key(c[0]))))
        object.__setattr__(self, "clauses", canon)

    @classmethod
    def from_rules(cls, n: int, rules: Iterable[tuple[Iterable[int], int]]) -> "DefiniteCNF":
        return cls(n, tuple((vset(body), head) for body, head in rules))

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def _index(self):
        cached = self.__dict__.get("_watch")
        if cached is None:
            watch: list[list[int]] = [[] for _ in range(self.n)]
            for idx, (body, _) in enumerate(self.clauses):
                for v in members(body):
                    watch[v].append(idx)
            cached = watch
            object.__setattr__(self, "_watch", cached)
        return cached

    def __repr__(self):
        body = ", ".join(f"{fmt(b)}->{h}" for b, h in self.clauses)
        return f"DefiniteCNF(n={self.n}, [{body}])"


def forward_chain(phi: DefiniteCNF, z: int) -> tuple[int, int]:
    """Closure of ``z`` under ``phi`` and the number of rounds needed.

    Each round fires every clause whose body lies in the current set, so the
    round count is the smallest i with T^i(z) = T^{i+1}(z).
    """
    clauses = phi.clauses
    watch = phi._index()
    missing = [(body & ~z).bit_count() for body, _ in clauses]
    ready = [i for i, m in enumerate(missing) if m == 0]
    steps = 0
    while True:
        new = 0
        for i in ready:
            head = clauses[i][1]
            if not z >> head & 1:
                new |= 1 << head
        if not new:
            return z, steps
        steps += 1
        z |= new
        ready = []
        for v in members(new):
            for i in watch[v]:
                missing[i] -= 1
                if missing[i] == 0:
                    ready.append(i)


def closure(phi: DefiniteCNF, z: int) -> int:
    return forward_chain(phi, z)[0]


def forward_chain_one_step(phi: DefiniteCNF, z: int) -> int:
    """z together with the heads of all clauses whose bodies lie in z."""
    out = z
    for body, head in phi.clauses:
        if body & ~z == 0:
            out |= 1 << head
    return out


def is_implicate(phi: DefiniteCNF, body: int, head: int) -> bool:
    if body >> head & 1:
        raise BadInput(f"head {head} lies in body {fmt(body)}")
    return bool(closure(phi, body) >> head & 1)


def circular_cnf(h: SetFamily) -> DefiniteCNF:
    """Φ_H: the clause (H - v) -> v for every hyperedge H and every v in H.

    A singleton hyperedge {v} yields the empty-body clause ∅ -> v.
    """
    clauses = [(edge & ~(1 << v), v) for edge in h.sets for v in members(edge)]
    return DefiniteCNF(h.n, tuple(clauses))


# --- truth tables ---------------------------------------------------------


def _masks(n: int, budget: int | None) -> np.ndarray:
    check_budget(2**n, "truth table", budget)
    return np.arange(1 << n, dtype=np.int64)


def all_closures(phi: DefiniteCNF, budget: int | None = None) -> np.ndarray:
    """Array mapping every subset mask X to the closure of X."""
    z = _masks(phi.n, budget)
    by_head: dict[int, list[int]] = {}
    for body, head in phi.clauses:
        by_head.setdefault(head, []).append(body)
    while True:
        nxt = z.copy()
        for head, bodies in by_head.items():
            fired = np.zeros(z.shape, dtype=bool)
            for body in bodies:
                fired |= (z & body) == body
            nxt |= fired.astype(np.int64) << head
        if np.array_equal(nxt, z):
            return z
        z = nxt


def _superset_or(arr: np.ndarray, n: int) -> np.ndarray:
    """out[X] = OR of arr[Y] over all Y ⊇ X."""
    out = arr.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] |= view[:, 1, :]
    return out


def _subset_or(arr: np.ndarray, n: int) -> np.ndarray:
    """out[X] = OR of arr[Y] over all Y ⊆ X."""
    out = arr.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return out


class BoolFn:
    """A Boolean function on 2^[n] materialised as a truth table indexed by mask."""

    __slots__ = ("n", "truth")

    def __init__(self, n: int, truth):
        check_ground(n)
        truth = np.asarray(truth, dtype=bool)
        if truth.shape != (1 << n,):
            raise ValueError(f"truth table must have 2^{n} entries")
        truth.setflags(write=False)
        self.n = n
        self.truth = truth

    @classmethod
    def from_cnf(cls, phi: DefiniteCNF, budget: int | None = None) -> "BoolFn":
        masks = _masks(phi.n, budget)
        truth = np.ones(masks.shape, dtype=bool)
        for body, head in phi.clauses:
            truth &= ~(((masks & body) == body) & ((masks >> head) & 1 == 0))
        return cls(phi.n, truth)

    @classmethod
    def from_true_sets(cls, family: SetFamily, budget: int | None = None) -> "BoolFn":
        check_budget(2**family.n, "truth table", budget)
        truth = np.zeros(1 << family.n, dtype=bool)
        truth[list(family.sets)] = True
        return cls(family.n, truth)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], bool], budget: int | None = None) -> "BoolFn":
        check_budget(2**n, "truth table", budget)
        return cls(n, [bool(fn(x)) for x in range(1 << n)])

    def __call__(self, x: int) -> bool:
        return bool(self.truth[x])

    def true_sets(self) -> SetFamily:
        return SetFamily(self.n, tuple(int(x) for x in np.flatnonzero(self.truth)))

    def false_sets(self) -> SetFamily:
        return SetFamily(self.n, tuple(int(x) for x in np.flatnonzero(~self.truth)))

    def __le__(self, other: "BoolFn") -> bool:
        return self.n == other.n and not np.any(self.truth & ~other.truth)

    def __eq__(self, other):
        if not isinstance(other, BoolFn):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.truth, other.truth)

    def __hash__(self):
        return hash((self.n, self.truth.tobytes()))

    def __repr__(self):
        return f"BoolFn(n={self.n}, true={int(self.truth.sum())}/{1 << self.n})"


HornLike = Union[DefiniteCNF, BoolFn]


def as_boolfn(f: HornLike, budget: int | None = None) -> BoolFn:
    return f if isinstance(f, BoolFn) else BoolFn.from_cnf(f, budget)


def true_sets(phi: HornLike, budget: int | None = None) -> SetFamily:
    return as_boolfn(phi, budget).true_sets()


def equivalent(a: HornLike, b: HornLike, budget: int | None = None) -> bool:
    """Truth-table equality of two CNFs or functions on the same ground set."""
    if a.n != b.n:
        raise BadInput(f"ground sets differ: {a.n} vs {b.n}")
    return as_boolfn(a, budget) == as_boolfn(b, budget)


# --- implicates, keys, true sets ------------------------------------------


def prime_implicates(phi: DefiniteCNF, budget: int | None = None) -> DefiniteCNF:
    """The complete CNF: every prime implicate B -> v of the represented function.

    Implicate-hood is monotone in the body, so B -> v is prime exactly when no
    B - u (u in B) still implies v.
    """
    n = phi.n
    masks = _masks(n, budget)
    closed = all_closures(phi, budget)
    out = []
    for v in range(n):
        bit = 1 << v
        implied = ((closed & bit) != 0) & ((masks & bit) == 0)
        prime = implied.copy()
        for u in range(n):
            if u == v:
                continue
            has_u = (masks >> u) & 1 == 1
            prime &= ~(has_u & implied[masks & ~(1 << u)])
        out.extend((int(b), v) for b in np.flatnonzero(prime))
    return DefiniteCNF(n, tuple(out))


complete_cnf = prime_implicates


def _key_table(phi: DefiniteCNF, budget) -> np.ndarray:
    return all_closures(phi, budget) == full(phi.n)


def minimal_keys(phi: DefiniteCNF, budget: int | None = None) -> SetFamily:
    """Inclusion-minimal K whose closure is V."""
    n = phi.n
    masks = _masks(n, budget)
    key = _key_table(phi, budget)
    minimal = key.copy()
    for u in range(n):
        has_u = (masks >> u) & 1 == 1
        minimal &= ~(has_u & key[masks & ~(1 << u)])
    return SetFamily(n, tuple(int(x) for x in np.flatnonzero(minimal)))


def max_nontrivial_true_sets(phi: DefiniteCNF, budget: int | None = None) -> SetFamily:
    """Maximal true sets other than V.

    T is maximal iff adding any single outside element closes to V.
    """
    n = phi.n
    masks = _masks(n, budget)
    key = _key_table(phi, budget)
    truth = BoolFn.from_cnf(phi, budget).truth
    maximal = truth & (masks != full(n))
    for v in range(n):
        lacks_v = (masks >> v) & 1 == 0
        maximal &= ~lacks_v | key[masks | (1 << v)]
    return SetFamily(n, tuple(int(x) for x in np.flatnonzero(maximal)))


def core_implicate_set(phi: DefiniteCNF, x: int) -> int:
    """The largest implicate set inside ``x``, found by peeling.

    Any v in Y with (Y - v) not implying v lies in no implicate set inside Y,
    so repeatedly deleting such elements leaves the unique maximal one.
    """
    y = x
    changed = True
    while changed:
        changed = False
        for v in members(y):
            rest = y & ~(1 << v)
            if not closure(phi, rest) >> v & 1:
                y = rest
                changed = True
    return y


# --- implicate sets and duality -------------------------------------------


def _implicate_tables(f: BoolFn) -> list[np.ndarray]:
    """tables[v][B] is True iff B -> v majorates f (meaningful for v not in B)."""
    n = f.n
    masks = np.arange(1 << n, dtype=np.int64)
    tables = []
    for v in range(n):
        witness = f.truth & ((masks >> v) & 1 == 0)
        tables.append(~_superset_or(witness, n))
    return tables


def _implicate_set_table(f: BoolFn) -> np.ndarray:
    n = f.n
    masks = np.arange(1 << n, dtype=np.int64)
    tables = _implicate_tables(f)
    is_set = np.ones(1 << n, dtype=bool)
    for v in range(n):
        has_v = (masks >> v) & 1 == 1
        is_set &= ~has_v | tables[v][masks & ~(1 << v)]
    return is_set


def implicate_sets(f: HornLike, budget: int | None = None) -> SetFamily:
    """All I such that (I - v) -> v is an implicate of f for every v in I."""
    table = _implicate_set_table(as_boolfn(f, budget))
    return SetFamily(f.n, tuple(int(x) for x in np.flatnonzero(table)))


def is_hypergraph_horn(phi: HornLike, budget: int | None = None) -> bool:
    """Every false set F admits an implicate set I with |I \\ F| = 1."""
    f = as_boolfn(phi, budget)
    n = f.n
    masks = np.arange(1 << n, dtype=np.int64)
    is_set = _implicate_set_table(f)
    covered = np.zeros(1 << n, dtype=bool)
    for v in range(n):
        lacks_v = (masks >> v) & 1 == 0
        seeds = lacks_v & is_set[masks | (1 << v)]
        covered |= _subset_or(seeds, n) & lacks_v
    return bool(np.all(f.truth | covered))


def hypergraph_horn_majorant(f: HornLike, budget: int | None = None) -> DefiniteCNF:
    """Φ over the implicate-set family of f, the least hypergraph Horn majorant."""
    return circular_cnf(implicate_sets(f, budget))


def implicate_dual(f: HornLike, budget: int | None = None) -> BoolFn:
    """The function whose true sets are the complements of the implicate sets of f."""
    g = as_boolfn(f, budget)
    table = _implicate_set_table(g)
    masks = np.arange(1 << g.n, dtype=np.int64)
    return BoolFn(g.n, table[full(g.n) ^ masks])


# --- text format ----------------------------------------------------------


def parse_cnf(text: str) -> DefiniteCNF:
    """Parse ``n <N>`` followed by clause lines ``b1 b2 ... -> h``."""
    n = None
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
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
        if "->" not in line:
            raise ParseError(f"clause without '->': {line!r}", lineno)
        lhs, rhs = line.split("->", 1)
        try:
            body = [int(t) for t in lhs.split()]
            heads = [int(t) for t in rhs.split()]
        except ValueError:
            raise ParseError(f"non-integer variable in {line!r}", lineno) from None
        if len(heads) != 1:
            raise ParseError(f"clause needs exactly one head: {line!r}", lineno)
        head = heads[0]
        for e in body + [head]:
            if not 0 <= e < n:
                raise ParseError(f"variable {e} outside 0..{n - 1}", lineno)
        if head in body:
            raise ParseError(f"head {head} occurs in its body", lineno)
        rules.append((body, head))
    if n is None:
        raise ParseError("missing 'n <N>' header")
    return DefiniteCNF.from_rules(n, rules)


def format_cnf(phi: DefiniteCNF, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {phi.n}")
    for body, head in phi.clauses:
        lhs = " ".join(map(str, members(body)))
        lines.append(f"{lhs} -> {head}" if lhs else f"-> {head}")
    return "\n".join(lines) + "\n"
