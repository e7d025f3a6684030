"""Small representations of uniform matroids and the rank-2 group construction."""

from math import comb

from matroid_horn import DesignSpec, verify
from matroid_horn.designs import covering_number_bruteforce
from matroid_horn.matroid import uniform_matroid
from matroid_horn.minrep import (
    covering_doubling_representation,
    min_circuit_subsystem,
    rank2_expected_size,
    rank2_group_representation,
    uniform_interval_generator,
)

for n, r in ((5, 2), (6, 2), (7, 2), (6, 3)):
    c, cover = covering_number_bruteforce(n, r + 1, r)
    doubled = covering_doubling_representation(n, r, cover)
    best = min_circuit_subsystem(uniform_matroid(n, r)).value
    print(f"U({n},{r}): {comb(n, r + 1)} circuits, generator {len(uniform_interval_generator(n, r))},"
          f" optimum {best}, cover {c}, doubled cover {len(doubled)}")

for n in (46, 47, 51, 61):
    fam, p, b = rank2_group_representation(n)
    ok = verify(DesignSpec("implication", n, 3, 2), fam).valid
    print(f"n={n}: p={p} b={b} size={len(fam)} formula={rank2_expected_size(n)} valid={ok}"
          f" ratio to n^2/5 = {len(fam) / (n * n / 5):.2f}")
