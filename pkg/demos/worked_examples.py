"""Two circuit-like families that are not matroids, and how the Horn view exposes them."""

from matroid_horn import characterization_report, check_circuit_axioms, circular_cnf, is_matroid_horn
from matroid_horn.horn import max_nontrivial_true_sets, minimal_keys
from matroid_horn.zoo import two_blocks_chain, two_blocks_circuits, wheel_triangles

wheel = wheel_triangles()
h = circular_cnf(wheel)
print("wheel triangles:", wheel.as_lists())
print("axiom check:", check_circuit_axioms(wheel).describe())
print("minimal keys:", minimal_keys(h).as_lists())
print("maximal proper true sets:", max_nontrivial_true_sets(h).as_lists())
for line in characterization_report(wheel).lines():
    print("  ", line)

chain = two_blocks_chain()
print("\nchain of blocks:", chain.as_lists())
print("same keys as a genuine matroid:", minimal_keys(circular_cnf(chain)) == minimal_keys(circular_cnf(two_blocks_circuits())))
print("matroid Horn?", bool(is_matroid_horn(circular_cnf(chain))))
