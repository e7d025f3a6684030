"""Acceptance suite: one test per criterion, each printing a PASS or FAIL line.

Run alone with ``pytest -v tests/test_acceptance.py`` or as a script with
``python3 tests/test_acceptance.py``.
"""

import sys
from math import ceil, comb
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from matroid_horn.bits import full  # noqa: E402
from matroid_horn.designs import (  # noqa: E402
    DesignSpec,
    covering_number_bruteforce,
    fort_hedlund,
    schonheim_bound,
    verify,
)
from matroid_horn.horn import (  # noqa: E402
    BoolFn,
    circular_cnf,
    forward_chain,
    implicate_dual,
    is_hypergraph_horn,
    max_nontrivial_true_sets,
    minimal_keys,
    true_sets,
)
from matroid_horn.matroid import (  # noqa: E402
    canonical_cnf,
    characterization_report,
    check_circuit_axioms,
    flats,
    hyperplanes,
    is_matroid_horn,
    matroid_closure,
)
from matroid_horn.minrep import (  # noqa: E402
    chordless_circuits,
    covering_doubling_representation,
    min_circuit_clauses,
    min_circuit_subsystem,
    min_generator,
    rank2_expected_size,
    rank2_group_representation,
)
from matroid_horn.set_family import (  # noqa: E402
    SetFamily,
    complement_family,
    intersection_closure,
    minimal_transversals,
)
from matroid_horn.zoo import (  # noqa: E402
    closure_zoo,
    k4,
    random_simple_binary,
    random_sperner,
    small_uniforms,
    two_blocks_chain,
    two_blocks_circuits,
    wheel_edges,
    wheel_max_independent,
    wheel_triangles,
)

TITLES = {
    1: "characterization criteria agree",
    2: "closure, keys, hyperplanes and flats agree",
    3: "implicate dual matches matroid duality",
    4: "worked examples reproduce",
    5: "chordless circuits are the unique binary optimum",
    6: "uniform matroid formulas",
    7: "covering doubling construction",
    8: "rank-2 group construction",
    9: "Fort-Hedlund and Schonheim against brute force",
    10: "property suites",
}


def _line(number: int, ok: bool, detail: str = "") -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {TITLES[number]}"
    return f"{line} ({detail})" if detail else line


@pytest.fixture
def report(capsys):
    def check(number: int, problems: list[str], detail: str = ""):
        with capsys.disabled():
            print("\n" + _line(number, not problems, detail if not problems else "; ".join(problems[:3])), flush=True)
        assert not problems, problems

    return check


def _nontrivial(f: SetFamily) -> bool:
    return bool(f.sets) and 0 not in f.sets and f.sets != (f.ground,)


def test_criterion_1(report):
    rng = np.random.default_rng(2024)
    problems = []
    counts = {True: 0, False: 0}
    families = [m.circuits for _, m in closure_zoo() if m.n <= 7 and _nontrivial(m.circuits)]
    while len(families) < 600:
        n = int(rng.integers(2, 8))
        f = random_sperner(rng, n, int(rng.integers(1, 7)))
        if _nontrivial(f):
            families.append(f)
    for f in families:
        rep = characterization_report(f)
        counts[rep.is_matroid] += 1
        if not rep.consistent:
            problems.append(f"disagreement on {f!r}: {rep.criteria}")
        elif rep.is_matroid != oracles.circuit_axioms_hold(oracles.fam_of(f)):
            problems.append(f"oracle disagrees on {f!r}")
    report(1, problems, f"{len(families)} families, {counts[True]} matroids, {counts[False]} not")


def test_criterion_2(report):
    problems = []
    zoo = closure_zoo()
    for name, m in zoo:
        phi = canonical_cnf(m)
        if any(matroid_closure(m, x) != forward_chain(phi, x)[0] for x in range(1 << m.n)):
            problems.append(f"{name}: closure")
        if minimal_keys(phi) != m.bases:
            problems.append(f"{name}: keys")
        if max_nontrivial_true_sets(phi) != hyperplanes(m):
            problems.append(f"{name}: hyperplanes")
        if true_sets(phi) != flats(m):
            problems.append(f"{name}: flats")
    report(2, problems, f"{len(zoo)} matroids")


def _keys_of(f: BoolFn) -> SetFamily:
    """Minimal sets contained in no true set except V."""
    trues = f.true_sets().sets
    top = full(f.n)
    keys = [x for x in range(1 << f.n) if not any(x & ~t == 0 for t in trues if t != top)]
    return SetFamily.from_masks(f.n, [k for k in keys if not any(j != k and j & ~k == 0 for j in keys)])


def _max_nontrivial(f: BoolFn) -> SetFamily:
    top = full(f.n)
    trues = [t for t in f.true_sets().sets if t != top]
    return SetFamily(f.n, tuple(t for t in trues if not any(u != t and t & ~u == 0 for u in trues)))


def test_criterion_3(report):
    problems = []
    zoo = closure_zoo()
    for name, m in zoo:
        c = m.circuits
        cd = minimal_transversals(c)
        cdcd = minimal_transversals(complement_family(cd))
        hi = implicate_dual(circular_cnf(c))
        if hi != BoolFn.from_cnf(circular_cnf(cdcd)):
            problems.append(f"{name}: truth table")
        if _keys_of(hi) != cd:
            problems.append(f"{name}: keys")
        cc = complement_family(c)
        if _max_nontrivial(hi) != cc:
            problems.append(f"{name}: maximal true sets")
        if hi.true_sets() != intersection_closure(cc):
            problems.append(f"{name}: true sets")
    report(3, problems, f"{len(zoo)} matroids")


def test_criterion_4(report):
    problems = []
    h = circular_cnf(wheel_triangles())
    if minimal_keys(h) != wheel_edges() or len(wheel_edges()) != 10:
        problems.append("example 1 keys")
    if max_nontrivial_true_sets(h) != wheel_max_independent():
        problems.append("example 1 maximal true sets")
    if is_matroid_horn(h) or not is_hypergraph_horn(h):
        problems.append("example 1 classification")
    hh = circular_cnf(two_blocks_chain())
    c = two_blocks_circuits()
    if not check_circuit_axioms(c):
        problems.append("example 2 circuits fail the axioms")
    if minimal_keys(hh) != minimal_keys(circular_cnf(c)):
        problems.append("example 2 keys differ")
    if is_matroid_horn(hh):
        problems.append("example 2 reported matroid Horn")
    report(4, problems)


def test_criterion_5(report):
    problems = []
    cases = [("K4", k4())] + [(f"binary seed {s}", random_simple_binary(s)[1]) for s in (2, 3)]
    for name, m in cases:
        chordless = chordless_circuits(m)
        circuits = oracles.fam_of(m.circuits)
        ch = oracles.fam_of(chordless)
        brute = {
            "G": oracles.min_generator_size(circuits),
            "C": oracles.min_circuit_subsystem_size(m.n, circuits),
            "K": oracles.min_circuit_clauses_branching(m.n, circuits),
        }
        wanted = {"G": [ch], "C": [ch], "K": [set(oracles.circular(ch))]}
        for objective, fn in (("G", min_generator), ("C", min_circuit_subsystem), ("K", min_circuit_clauses)):
            size, hits = brute[objective]
            res = fn(m, "exact")
            if hits != wanted[objective]:
                problems.append(f"{name} {objective}: brute force optimum is not the chordless set")
            if res.value != size or not res.unique:
                problems.append(f"{name} {objective}: search gave {res.value} unique={res.unique}")
        if name == "K4" and (brute["G"][0], brute["C"][0], brute["K"][0]) != (4, 4, 12):
            problems.append(f"K4 values {brute['G'][0]}, {brute['C'][0]}, {brute['K'][0]}")
    report(5, problems, "K4 gives G=4, C=4, K=12")


def test_criterion_6(report):
    problems = []
    count = 0
    for (n, r), m in small_uniforms(7):
        count += 1
        g = min_generator(m)
        k = min_circuit_clauses(m)
        c = min_circuit_subsystem(m)
        cover = covering_number_bruteforce(n, r + 1, r)[0]
        if not (g.exact and g.value == n - r):
            problems.append(f"U({n},{r}) G={g.value}")
        if not (k.exact and k.value == comb(n, r)):
            problems.append(f"U({n},{r}) K={k.value}")
        low = ceil(comb(n, r) / (r + 0.5))
        if not (c.exact and low <= c.value <= comb(n, r) and cover <= c.value <= 2 * cover):
            problems.append(f"U({n},{r}) C={c.value} c={cover}")
    report(6, problems, f"{count} uniform matroids")


def test_criterion_7(report):
    problems = []
    for n, r in ((4, 2), (5, 2), (6, 2), (7, 2), (6, 3)):
        size, cover = covering_number_bruteforce(n, r + 1, r)
        rep = covering_doubling_representation(n, r, cover)
        if not verify(DesignSpec("implication", n, r + 1, r), rep):
            problems.append(f"({n},{r}) not an implication system")
        if not oracles.is_implication_system(n, r, oracles.fam_of(rep)):
            problems.append(f"({n},{r}) oracle rejects")
        if len(rep) > 2 * size:
            problems.append(f"({n},{r}) size {len(rep)} > 2c = {2 * size}")
    report(7, problems)


def test_criterion_8(report):
    problems = []
    ratios = []
    for n in (46, 47, 51, 61):
        fam, _, _ = rank2_group_representation(n)
        if not verify(DesignSpec("implication", n, 3, 2), fam):
            problems.append(f"n={n} not an implication system")
        if len(fam) != rank2_expected_size(n):
            problems.append(f"n={n} size {len(fam)} != {rank2_expected_size(n)}")
        ratio = len(fam) / (n * n / 5)
        ratios.append(f"n={n}: {len(fam)} sets, ratio {ratio:.2f}")
        if ratio >= 5:
            problems.append(f"n={n} size/(n^2/5) = {ratio:.2f} is not below 5")
    for n, want in ((46, 7935), (47, 585)):
        if rank2_expected_size(n) != want:
            problems.append(f"n={n} closed form {rank2_expected_size(n)} != {want}")
    report(8, problems, "; ".join(ratios))


def test_criterion_9(report):
    problems = []
    for n in range(3, 10):
        brute = covering_number_bruteforce(n, 3, 2)[0]
        if fort_hedlund(n) != brute:
            problems.append(f"n={n}: formula {fort_hedlund(n)} vs {brute}")
    tested = 0
    for n in range(3, 10):
        for q in range(2, n + 1):
            for r in range(1, q):
                if comb(n, q) * comb(n, r) > 3200:
                    continue
                tested += 1
                # searching up from zero keeps the bound out of its own check
                brute = covering_number_bruteforce(n, q, r, lower=0)[0]
                if schonheim_bound(n, q, r) > brute:
                    problems.append(f"Schonheim({n},{q},{r}) > {brute}")
    report(9, problems, f"{tested} parameter triples")


def test_criterion_10(report):
    problems = []
    here = Path(__file__).parent
    code = pytest.main(["-q", "-p", "no:cacheprovider", str(here / "test_properties.py")])
    if code != 0:
        problems.append(f"property suite exit code {int(code)}")
    report(10, problems)


if __name__ == "__main__":
    sys.exit(pytest.main(["-q", __file__]))
