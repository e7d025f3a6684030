from itertools import combinations

import numpy as np
import pytest

import oracles
from matroid_horn.bits import full, vset
from matroid_horn.errors import BadInput, BadParams, InvalidInput, NotSperner, ParseError
from matroid_horn.horn import (
    DefiniteCNF,
    circular_cnf,
    forward_chain,
    max_nontrivial_true_sets,
    minimal_keys,
    true_sets,
)
from matroid_horn.matroid import (
    CRITERIA,
    BinaryMatrix,
    Matroid,
    canonical_cnf,
    characterization_report,
    check_circuit_axioms,
    circuits_from_binary,
    dual,
    dual_circuits,
    flats,
    format_matrix,
    gf2_rank,
    hyperplanes,
    is_matroid_horn,
    is_simple,
    matroid_closure,
    parse_matrix,
    rank,
    uniform_matroid,
)
from matroid_horn.set_family import SetFamily, complement_family, minimal_transversals
from matroid_horn.zoo import (
    closure_zoo,
    k4,
    random_binary_matroid,
    random_sperner,
    two_blocks_chain,
    two_blocks_circuits,
    wheel_triangles,
)


def test_axioms_examples():
    assert check_circuit_axioms(uniform_matroid(6, 3).circuits)
    bad = check_circuit_axioms(wheel_triangles())
    assert not bad and bad.axiom == "C3"
    c1, c2, u = bad.witness
    rest = (c1 | c2) & ~(1 << u)
    assert u in oracles.to_fs(c1 & c2)
    assert not any(c & ~rest == 0 for c in wheel_triangles().sets)
    assert check_circuit_axioms(two_blocks_circuits())


def test_axioms_other_failures():
    assert check_circuit_axioms(SetFamily(3, (0, 0b11))).axiom == "C1"
    chk = check_circuit_axioms(SetFamily(3, (0b1, 0b11)))
    assert chk.axiom == "C2" and "contained in" in chk.describe()


def test_axioms_against_oracle():
    rng = np.random.default_rng(99)
    for _ in range(300):
        n = int(rng.integers(2, 7))
        f = random_sperner(rng, n, 5)
        assert bool(check_circuit_axioms(f)) == oracles.circuit_axioms_hold(oracles.fam_of(f))


def test_matroid_rejects_non_matroid():
    with pytest.raises(InvalidInput):
        Matroid(wheel_triangles())


def test_rank_examples():
    assert rank(k4(), 0) == 0
    assert k4().rank(full(6)) == 3
    u = uniform_matroid(6, 3)
    for x in range(64):
        assert u.rank(x) == min(x.bit_count(), 3)
    with pytest.raises(NotSperner):
        rank(SetFamily(3, (0b1, 0b11)), 0b111)


def test_rank_against_oracle():
    for _, m in closure_zoo():
        cs = oracles.fam_of(m.circuits)
        for x in range(0, 1 << m.n, 5):
            assert m.rank(x) == oracles.rank(oracles.to_fs(x), cs)
            assert m.rank_table[x] == m.rank(x)


def test_closure_examples():
    u = uniform_matroid(4, 2)
    assert matroid_closure(u, full(4)) == full(4)
    assert matroid_closure(u, 0b11) == full(4)
    assert matroid_closure(u, 0b1) == 0b1


def test_closure_matches_oracle_and_forward_chain():
    for _, m in closure_zoo()[:12]:
        cs = oracles.fam_of(m.circuits)
        phi = canonical_cnf(m)
        for x in range(1 << m.n):
            cl = matroid_closure(m, x)
            assert cl == oracles.to_mask(oracles.matroid_closure(m.n, oracles.to_fs(x), cs))
            assert cl == forward_chain(phi, x)[0]


def test_closure_axioms():
    for _, m in closure_zoo():
        if m.n > 7:
            continue
        cl = [matroid_closure(m, x) for x in range(1 << m.n)]
        for x in range(1 << m.n):
            assert x & ~cl[x] == 0
            assert cl[cl[x]] == cl[x]
            for v in range(m.n):
                assert cl[x] & ~cl[x | 1 << v] == 0
                if cl[x] >> v & 1:
                    continue
                for u in range(m.n):
                    if cl[x | 1 << v] >> u & 1 and not cl[x] >> u & 1:
                        # Mac Lane-Steinitz exchange
                        assert cl[x | 1 << u] >> v & 1


def test_hyperplanes_and_flats_examples():
    u = uniform_matroid(4, 2)
    assert hyperplanes(u) == SetFamily.from_sets(4, [(i,) for i in range(4)])
    assert flats(u) == SetFamily.from_sets(4, [()] + [(i,) for i in range(4)] + [(0, 1, 2, 3)])
    m = k4()
    assert oracles.fam_of(hyperplanes(m)) == oracles.hyperplanes(6, oracles.fam_of(m.circuits))
    assert oracles.fam_of(flats(m)) == oracles.flats(6, oracles.fam_of(m.circuits))


def test_dual_examples():
    # rank 2 on four points is self-dual: both circuit families are all 3-subsets
    u = uniform_matroid(4, 2)
    assert dual_circuits(u) == u.circuits
    assert dual_circuits(uniform_matroid(5, 2)) == uniform_matroid(5, 3).circuits
    for _, m in closure_zoo():
        d = dual(m)
        assert check_circuit_axioms(d.circuits)
        assert dual_circuits(d) == m.circuits
        assert d.bases == complement_family(m.bases)


def test_binary_examples():
    ident = BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert len(circuits_from_binary(ident).circuits) == 0
    m = k4()
    assert len(m.circuits) == 7
    assert sorted(len(c) for c in m.circuits.as_lists()) == [3, 3, 3, 3, 4, 4, 4]
    loop = BinaryMatrix.from_rows([[1, 0], [0, 0]])
    assert circuits_from_binary(loop).circuits.sets == (0b10,)
    assert gf2_rank([0b011, 0b101, 0b110]) == 2


def test_binary_circuits_against_oracle():
    for seed in range(20):
        mat, m = random_binary_matroid(seed, rows=4, cols=7)
        assert oracles.fam_of(m.circuits) == oracles.gf2_circuits(list(mat.columns))


def test_binary_unique_completion():
    # the "at most one v" statement identifies v with a column vector, so it
    # needs distinct columns; equal columns give two such v
    for seed in range(10):
        _, m = random_binary_matroid(seed, rows=4, cols=7, simple=True)
        circuits = set(m.circuits.sets)
        for x in range(1 << m.n):
            if any(c & ~x == 0 for c in circuits):
                continue
            assert sum(1 for v in range(m.n) if not x >> v & 1 and x | 1 << v in circuits) <= 1
        if is_simple(m):
            for a in circuits:
                for b in circuits:
                    if (a & ~b).bit_count() == 1:
                        assert a.bit_count() < b.bit_count()


def test_uniform_examples():
    assert len(uniform_matroid(4, 2).circuits) == 4
    assert uniform_matroid(6, 2).bases == SetFamily(6, tuple(vset(p) for p in combinations(range(6), 2)))
    assert len(canonical_cnf(uniform_matroid(5, 2))) == 30
    with pytest.raises(BadParams):
        uniform_matroid(4, 4)


def test_is_simple():
    assert is_simple(uniform_matroid(5, 2))
    assert not is_simple(Matroid(SetFamily.from_sets(3, [(0, 1)])))
    assert is_simple(k4())


def test_table_correspondence():
    for _, m in closure_zoo():
        phi = canonical_cnf(m)
        assert minimal_keys(phi) == m.bases
        assert max_nontrivial_true_sets(phi) == hyperplanes(m)
        assert true_sets(phi) == flats(m)


def test_characterization_examples():
    rep = characterization_report(uniform_matroid(5, 2).circuits)
    assert rep.is_matroid and rep.consistent and set(rep.criteria) == set(CRITERIA)
    rep = characterization_report(wheel_triangles())
    assert rep.consistent and not any(rep.criteria.values())
    assert "no_circuit_near_hyperplane" in rep.witnesses
    rep = characterization_report(two_blocks_chain())
    assert rep.consistent and not any(rep.criteria.values())


def test_characterization_rejects_trivial():
    with pytest.raises(BadInput):
        characterization_report(SetFamily(3, ()))
    with pytest.raises(BadInput):
        characterization_report(SetFamily(3, (0b111,)))
    with pytest.raises(NotSperner):
        characterization_report(SetFamily(3, (0b1, 0b11)))


def test_two_blocks_keys_match_matroid():
    h = circular_cnf(two_blocks_chain())
    c = two_blocks_circuits()
    assert minimal_transversals(complement_family(minimal_keys(h))) == c
    assert minimal_keys(canonical_cnf(c)) == minimal_keys(h)
    assert not is_matroid_horn(h)


def test_is_matroid_horn_examples():
    for _, m in closure_zoo():
        if not m.circuits.sets:
            continue
        res = is_matroid_horn(canonical_cnf(m))
        assert res and res.circuits == m.circuits
    assert not is_matroid_horn(circular_cnf(wheel_triangles()))
    empty = is_matroid_horn(DefiniteCNF(2, ()))
    assert not empty and "constant-true" in empty.reason


def test_matrix_format():
    mat = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert parse_matrix(format_matrix(mat)) == mat
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix("2 3\n1 0 1\n0 2 1\n")


def test_parallel_columns_break_unique_completion():
    mat = BinaryMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 1]])
    circuits = set(circuits_from_binary(mat).circuits.sets)
    assert {0b0111, 0b1011} <= circuits
