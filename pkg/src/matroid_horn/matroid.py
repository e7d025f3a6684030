"""Matroids given by circuits, binary and uniform constructors, and the
characterization suite relating circuit families to their circular Horn CNFs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Union

import numpy as np

from .bits import fmt, k_subsets, members, sort_key, vset
from .errors import BadInput, BadParams, InvalidInput, NotSperner, ParseError, check_budget
from .horn import (
    DefiniteCNF,
    all_closures,
    circular_cnf,
    core_implicate_set,
    forward_chain_one_step,
    max_nontrivial_true_sets,
    minimal_keys,
    prime_implicates,
    true_sets,
)
from .set_family import (
    SetFamily,
    bases_of,
    complement_family,
    intersection_closure,
    is_sperner,
    minimal_transversals,
)


@dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "circuit axioms C1-C3 hold"
        if self.axiom == "C1":
            return "C1 fails: the empty set is a circuit"
        if self.axiom == "C2":
            a, b = self.witness
            return f"C2 fails: {fmt(a)} is contained in {fmt(b)}"
        c1, c2, u = self.witness
        return f"C3 fails: C1={fmt(c1)}, C2={fmt(c2)}, u={u}: (C1∪C2)-u contains no circuit"


def check_circuit_axioms(c: SetFamily) -> AxiomCheck:
    """First violated circuit axiom, scanning pairs in canonical order."""
    if 0 in c:
        return AxiomCheck(False, "C1", (0,))
    sets = c.sets
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & ~b == 0:
                return AxiomCheck(False, "C2", (a, b))
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            for u in members(a & b):
                rest = (a | b) & ~(1 << u)
                if not any(x & ~rest == 0 for x in sets):
                    return AxiomCheck(False, "C3", (a, b, u))
    return AxiomCheck(True)


@dataclass(frozen=True)
class Matroid:
    """A matroid on [n] given by a validated circuit family."""

    circuits: SetFamily

    def __post_init__(self):
        check = check_circuit_axioms(self.circuits)
        if not check:
            raise InvalidInput(check.describe())

    @property
    def n(self) -> int:
        return self.circuits.n

    @cached_property
    def bases(self) -> SetFamily:
        return bases_of(self.circuits)

    @cached_property
    def rank_of_ground(self) -> int:
        return self.bases.sets[0].bit_count()

    @cached_property
    def rank_table(self) -> np.ndarray:
        return rank_table(self.bases)

    def rank(self, x: int) -> int:
        return max((b & x).bit_count() for b in self.bases.sets)

    def __repr__(self):
        return f"Matroid(n={self.n}, circuits={len(self.circuits)}, rank={self.rank_of_ground})"


CircuitsLike = Union[Matroid, SetFamily]


def _bases(m: CircuitsLike) -> SetFamily:
    if isinstance(m, Matroid):
        return m.bases
    return bases_of(m)


def rank(m: CircuitsLike, x: int) -> int:
    """max over bases B of |B ∩ X|; raises NotSperner for non-Sperner circuit families."""
    return max((b & x).bit_count() for b in _bases(m).sets)


def rank_table(bases: SetFamily, budget: int | None = None) -> np.ndarray:
    """rank of every subset mask, from a family of bases."""
    check_budget(2**bases.n, "rank table", budget)
    masks = np.arange(1 << bases.n, dtype=np.int64)
    table = np.zeros(masks.shape, dtype=np.int64)
    for b in bases.sets:
        np.maximum(table, np.bitwise_count(masks & b).astype(np.int64), out=table)
    return table


def matroid_closure(m: Matroid, x: int) -> int:
    """{v | rank(X + v) = rank(X)}."""
    base = m.rank(x)
    out = 0
    for v in range(m.n):
        if m.rank(x | (1 << v)) == base:
            out |= 1 << v
    return out


def hyperplanes(m: CircuitsLike) -> SetFamily:
    """C^{dcdc}: maximal non-spanning sets."""
    return complement_family(minimal_transversals(_bases(m)))


def flats(m: Matroid, budget: int | None = None) -> SetFamily:
    """All closed sets, by scanning every subset."""
    table = rank_table(m.bases, budget)
    n = m.n
    masks = np.arange(1 << n, dtype=np.int64)
    closed = np.ones(masks.shape, dtype=bool)
    for v in range(n):
        lacks_v = (masks >> v) & 1 == 0
        closed &= ~lacks_v | (table[masks | (1 << v)] > table)
    return SetFamily(n, tuple(int(x) for x in np.flatnonzero(closed)))


def dual_circuits(m: CircuitsLike) -> SetFamily:
    """C^{dcd}, the circuits of the dual matroid (the cocircuits)."""
    return minimal_transversals(_bases(m))


def dual(m: Matroid) -> Matroid:
    return Matroid(dual_circuits(m))


def canonical_cnf(m: CircuitsLike) -> DefiniteCNF:
    return circular_cnf(m.circuits if isinstance(m, Matroid) else m)


def is_simple(m: CircuitsLike) -> bool:
    """No loops and no parallel pairs."""
    circuits = m.circuits if isinstance(m, Matroid) else m
    return all(c.bit_count() >= 3 for c in circuits.sets)


def uniform_matroid(n: int, r: int) -> Matroid:
    """U(r, n): every (r+1)-subset of [n] is a circuit."""
    if not 1 <= r < n:
        raise BadParams(f"uniform matroid needs 1 <= r < n, got n={n}, r={r}")
    return Matroid(SetFamily(n, tuple(k_subsets(n, r + 1))))


# --- binary matroids ------------------------------------------------------


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.bits) != self.rows or any(len(r) != self.cols for r in self.bits):
            raise BadInput(f"matrix shape does not match {self.rows}x{self.cols}")
        if any(b not in (0, 1) for r in self.bits for b in r):
            raise BadInput("matrix entries must be 0 or 1")
        if self.cols < 1:
            raise BadInput("matrix needs at least one column")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        bits = tuple(tuple(int(b) for b in r) for r in rows)
        return cls(len(bits), len(bits[0]) if bits else 0, bits)

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Each column as an int whose bit i is row i."""
        return tuple(
            sum(self.bits[i][j] << i for i in range(self.rows)) for j in range(self.cols)
        )


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of int-encoded vectors, via a leading-bit xor basis."""
    basis: dict[int, int] = {}
    for vec in vectors:
        while vec:
            lead = vec.bit_length() - 1
            if lead not in basis:
                basis[lead] = vec
                break
            vec ^= basis[lead]
    return len(basis)


def circuits_from_binary(mat: BinaryMatrix, max_cols: int = 16) -> Matroid:
    """Minimal GF(2)-dependent column sets, enumerated by increasing size."""
    if mat.cols > max_cols:
        check_budget(2**mat.cols, "circuits_from_binary", max_cols)
    cols = mat.columns
    found: list[int] = []
    for k in range(1, min(mat.cols, mat.rows + 1) + 1):
        for combo in combinations(range(mat.cols), k):
            mask = vset(combo)
            if any(c & ~mask == 0 for c in found):
                continue
            if gf2_rank(cols[j] for j in combo) < k:
                found.append(mask)
    return Matroid(SetFamily(mat.cols, tuple(found)))


def incidence_matrix(n_vertices: int, edges: Iterable[tuple[int, int]]) -> BinaryMatrix:
    """Vertex-edge incidence matrix; its binary matroid is the graphic matroid."""
    edges = list(edges)
    rows = [[0] * len(edges) for _ in range(n_vertices)]
    for j, (a, b) in enumerate(edges):
        if a == b:
            raise BadInput(f"self-loop at vertex {a}")
        rows[a][j] = 1
        rows[b][j] = 1
    return BinaryMatrix.from_rows(rows)


def graphic_matroid(n_vertices: int, edges: Iterable[tuple[int, int]]) -> Matroid:
    return circuits_from_binary(incidence_matrix(n_vertices, edges))


def complete_graph_edges(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


def complete_bipartite_edges(a: int, b: int) -> list[tuple[int, int]]:
    return [(i, a + j) for i in range(a) for j in range(b)]


def parse_matrix(text: str) -> BinaryMatrix:
    """``rows cols`` header, then ``rows`` lines of ``cols`` 0/1 digits."""
    lines = [
        (no, raw.split("#", 1)[0].strip())
        for no, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise ParseError("empty matrix file")
    no, header = lines[0]
    try:
        rows, cols = (int(t) for t in header.split())
    except ValueError:
        raise ParseError(f"expected 'rows cols' header, got {header!r}", no) from None
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} matrix rows, found {len(body)}", no)
    bits = []
    for no, line in body:
        toks = line.split()
        if len(toks) != cols or any(t not in ("0", "1") for t in toks):
            raise ParseError(f"expected {cols} entries of 0/1, got {line!r}", no)
        bits.append(tuple(int(t) for t in toks))
    return BinaryMatrix(rows, cols, tuple(bits))


def format_matrix(mat: BinaryMatrix) -> str:
    lines = [f"{mat.rows} {mat.cols}"]
    lines.extend(" ".join(map(str, r)) for r in mat.bits)
    return "\n".join(lines) + "\n"


# --- characterizations ----------------------------------------------------

CRITERIA = (
    "circuit_elimination",
    "keys_are_bases",
    "max_true_sets_are_hyperplanes",
    "true_sets_are_flats",
    "rank_step_matches_near_circuits",
    "closure_keeps_rank",
    "closure_by_rank",
    "one_step_closure",
    "core_implicate_set_by_rank",
    "no_circuit_near_hyperplane",
    "complete_cnf_is_circular",
)


@dataclass
class CharacterizationReport:
    circuits: SetFamily
    criteria: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        """All criteria agree, since they are equivalent for Sperner families."""
        return len(set(self.criteria.values())) <= 1

    @property
    def is_matroid(self) -> bool:
        return all(self.criteria.values())

    def lines(self) -> list[str]:
        out = []
        for name in CRITERIA:
            value = self.criteria[name]
            line = f"{name}: {str(value).lower()}"
            if not value and name in self.witnesses:
                line += f"  witness={self.witnesses[name]}"
            out.append(line)
        return out


def _first(masks: Iterable[int]):
    masks = list(masks)
    return min(masks, key=sort_key) if masks else None


def _family_diff(got: SetFamily, want: SetFamily):
    return _first(set(got.sets) ^ set(want.sets))


def require_nontrivial_sperner(c: SetFamily) -> None:
    if not is_sperner(c):
        raise NotSperner(f"{c!r} is not Sperner")
    if len(c) == 0 or 0 in c or c.sets == (c.ground,):
        raise BadInput("circuit family must be nonempty, avoid ∅ and differ from {V}")


def characterization_report(c: SetFamily, budget: int | None = None) -> CharacterizationReport:
    """Evaluate every matroid characterization of ``c`` independently.

    Each entry is computed from its own definition (axiom scan, key
    enumeration, rank table, forward chaining, ...) so that agreement
    between entries is a genuine check of the equivalences.
    """
    require_nontrivial_sperner(c)
    n = c.n
    report = CharacterizationReport(c)
    crit, wit = report.criteria, report.witnesses
    h = circular_cnf(c)
    bases = bases_of(c, budget)
    hyper = complement_family(minimal_transversals(bases, budget))
    masks = np.arange(1 << n, dtype=np.int64)
    ranks = rank_table(bases, budget)
    closed = all_closures(h, budget)

    axioms = check_circuit_axioms(c)
    crit["circuit_elimination"] = axioms.ok
    if not axioms.ok:
        a, b, u = axioms.witness
        wit["circuit_elimination"] = f"C1={fmt(a)} C2={fmt(b)} u={u}"

    for name, got, want in (
        ("keys_are_bases", lambda: minimal_keys(h, budget), lambda: bases),
        ("max_true_sets_are_hyperplanes", lambda: max_nontrivial_true_sets(h, budget), lambda: hyper),
        ("true_sets_are_flats", lambda: true_sets(h, budget), lambda: intersection_closure(hyper, budget)),
    ):
        diff = _family_diff(got(), want())
        crit[name] = diff is None
        if diff is not None:
            wit[name] = fmt(diff)

    # sets X with some circuit C having C \ X = {v}, recorded as the union of such v
    near = np.zeros(masks.shape, dtype=np.int64)
    for circ in c.sets:
        diff = circ & ~masks
        single = (diff != 0) & ((diff & (diff - 1)) == 0)
        near |= np.where(single, diff, 0)
    bad_ii = []
    bad_iv = []
    for x in range(1 << n):
        rx = ranks[x]
        same_rank = 0
        for v in range(n):
            if ranks[x | (1 << v)] == rx:
                same_rank |= 1 << v
        outside_same = same_rank & ~x
        if outside_same != near[x]:
            bad_ii.append(x)
        if closed[x] != same_rank:
            bad_iv.append(x)
    for name, bad in (("rank_step_matches_near_circuits", bad_ii), ("closure_by_rank", bad_iv)):
        crit[name] = not bad
        if bad:
            wit[name] = fmt(_first(bad))

    bad_iii = np.flatnonzero(ranks[closed] != ranks)
    crit["closure_keeps_rank"] = bad_iii.size == 0
    if bad_iii.size:
        wit["closure_keeps_rank"] = fmt(_first(int(x) for x in bad_iii))

    bad_v = [x for x in range(1 << n) if forward_chain_one_step(h, x) != closed[x]]
    crit["one_step_closure"] = not bad_v
    if bad_v:
        wit["one_step_closure"] = fmt(_first(bad_v))

    bad_vi = []
    for x in range(1 << n):
        by_rank = 0
        for v in members(x):
            if ranks[x & ~(1 << v)] == ranks[x]:
                by_rank |= 1 << v
        if core_implicate_set(h, x) != by_rank:
            bad_vi.append(x)
    crit["core_implicate_set_by_rank"] = not bad_vi
    if bad_vi:
        wit["core_implicate_set_by_rank"] = fmt(_first(bad_vi))

    near_hit = None
    for circ in c.sets:
        for t in hyper.sets:
            if (circ & ~t).bit_count() == 1:
                near_hit = f"C={fmt(circ)} T={fmt(t)}"
                break
        if near_hit:
            break
    crit["no_circuit_near_hyperplane"] = near_hit is None
    if near_hit:
        wit["no_circuit_near_hyperplane"] = near_hit

    complete = prime_implicates(h, budget)
    extra = set(complete.clauses) ^ set(h.clauses)
    crit["complete_cnf_is_circular"] = not extra
    if extra:
        body, head = min(extra, key=lambda cl: (sort_key(cl[0] | 1 << cl[1]), cl[1]))
        wit["complete_cnf_is_circular"] = f"{fmt(body)}->{head}"
    return report


@dataclass(frozen=True)
class MatroidHornResult:
    value: bool
    circuits: SetFamily | None = None
    reason: str = ""

    def __bool__(self):
        return self.value


def is_matroid_horn(phi: DefiniteCNF, budget: int | None = None) -> MatroidHornResult:
    """Decide whether the complete CNF of ``phi`` is the circular CNF of a circuit family."""
    complete = prime_implicates(phi, budget)
    if not complete.clauses:
        return MatroidHornResult(False, None, "constant-true: complete CNF is empty")
    groups: dict[int, set[int]] = {}
    for body, head in complete.clauses:
        groups.setdefault(body | (1 << head), set()).add(head)
    for whole, heads in sorted(groups.items(), key=lambda kv: sort_key(kv[0])):
        missing = set(members(whole)) - heads
        if missing:
            v = min(missing)
            return MatroidHornResult(
                False, None,
                f"not circular: {fmt(whole & ~(1 << v))}->{v} is not a prime implicate",
            )
    circuits = SetFamily(phi.n, tuple(groups))
    if not is_sperner(circuits):
        return MatroidHornResult(False, None, "clause sets are not Sperner")
    check = check_circuit_axioms(circuits)
    if not check:
        raise AssertionError(f"circular complete CNF violates axioms: {check.describe()}")
    return MatroidHornResult(True, circuits, "complete CNF is circular")
