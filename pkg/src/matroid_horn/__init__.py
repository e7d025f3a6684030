"""Hypergraph and matroid Horn functions over int-bitmask subsets of [n]."""

from .errors import (
    BadInput,
    BadParams,
    BadResidue,
    BudgetExceeded,
    EmptyHyperedge,
    InvalidInput,
    MatroidHornError,
    MethodMismatch,
    NonUniformFamily,
    NotCoveringSystem,
    NotSimpleBinary,
    NotSperner,
    ParseError,
    SubsetViolation,
    get_budget,
    set_budget,
)
from .set_family import (
    SetFamily,
    bases_of,
    circuits_of,
    complement_family,
    format_hypergraph,
    intersection_closure,
    is_sperner,
    maximal_sets,
    minimal_sets,
    minimal_transversals,
    parse_hypergraph,
    union_closure,
)
from .horn import (
    BoolFn,
    DefiniteCNF,
    circular_cnf,
    closure,
    core_implicate_set,
    equivalent,
    format_cnf,
    forward_chain,
    forward_chain_one_step,
    hypergraph_horn_majorant,
    implicate_dual,
    implicate_sets,
    is_hypergraph_horn,
    is_implicate,
    max_nontrivial_true_sets,
    minimal_keys,
    parse_cnf,
    prime_implicates,
    true_sets,
)
from .matroid import (
    AxiomCheck,
    BinaryMatrix,
    CharacterizationReport,
    Matroid,
    canonical_cnf,
    characterization_report,
    check_circuit_axioms,
    circuits_from_binary,
    dual,
    flats,
    graphic_matroid,
    hyperplanes,
    is_matroid_horn,
    matroid_closure,
    rank,
    uniform_matroid,
)
from .minrep import (
    RepresentationCost,
    chordless_circuits,
    covering_doubling_representation,
    generate_closure,
    min_circuit_clauses,
    min_circuit_subsystem,
    min_generator,
    phi_shift,
    rank2_group_representation,
    uniform_clause_representation,
    uniform_interval_generator,
    uniform_star_representation,
)
from .designs import (
    DesignReport,
    DesignSpec,
    covering_number_bruteforce,
    fort_hedlund,
    greedy_covering,
    implication_number_bruteforce,
    schonheim_bound,
    steiner_triple_bose,
    turan_covering_complement,
    verify,
)

__version__ = "0.1.0"
