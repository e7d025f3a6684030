"""Chordless circuits of K4 as the smallest representation under three cost measures."""

from matroid_horn import chordless_circuits, min_circuit_clauses, min_circuit_subsystem, min_generator
from matroid_horn.zoo import k4

m = k4()
print("circuits of K4:", m.circuits.as_lists())
print("chordless:", chordless_circuits(m).as_lists())
for fn in (min_generator, min_circuit_subsystem, min_circuit_clauses):
    exact = fn(m, "exact")
    fast = fn(m, "chordless", binary=True)
    print(f"{exact.objective}: exact search {exact.value} (unique={exact.unique}), chordless shortcut {fast.value}")
