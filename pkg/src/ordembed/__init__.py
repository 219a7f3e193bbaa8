"""Order embeddings over finite ground sets and finite topologies.

The package turns preference relations, given as boolean incidence matrices
over labeled ground sets, into verified numerical representations: realizers
of partial orders, continuous multi-utility embeddings, Pareto
representations, and a numerical lab for the explicit threshold family on
the real line.
"""

from .embedding import (
    EXISTENTIAL,
    PARETO,
    HasseDiagram,
    MultiUtility,
    build_multi_embedding,
    debreu_utility,
    hasse_projection,
    verify_existential_embedding,
)
from .errors import (
    AcyclicityViolation,
    EmptyFamily,
    GroundSetMismatch,
    InternalContractViolation,
    LengthMismatch,
    NonpositiveEpsilon,
    NotCompleteTransitive,
    NotContinuous,
    NotPartialOrder,
    NotStrictPartialOrder,
    OrdembedError,
    RelationPropertyError,
    SearchBudgetExceeded,
    ToleranceViolation,
    ValidationError,
    VerificationError,
)
from .pareto import (
    DecompositionFailure,
    ProbeReport,
    build_pareto_representation,
    continuous_pareto_probe,
    decomposition_check,
    decomposition_failures,
    pareto_dominates,
    probe_from_document,
    verify_pareto_embedding,
)
from .realizer import (
    LinearOrder,
    Realizer,
    all_linear_extensions,
    build_realizer,
    linear_extension,
    open_order_dimension,
    order_dimension,
    verify_realizer,
)
from .relation import (
    GroundSet,
    LoadedRelation,
    PropertyReport,
    Relation,
    complement,
    difference,
    dual,
    ground_from,
    identity,
    intersection,
    load_relation_file,
    parse_relation_document,
    polar,
    properties,
    relation_to_doc,
    strict_part,
    transitive_closure,
    union,
)
from .semiorder import (
    GridSpec,
    GridVerificationReport,
    SemiorderFamily,
    boundary_witnesses,
    countable_failure_witness,
    f_eval,
    has_witness_in,
    semiorder_pair,
    v_alpha,
    v_alpha_array,
    verify_family_on_grid,
    witness_alpha,
)
from .topology import (
    FiniteTopology,
    TopologyReport,
    build_topology,
    closure_in_product,
    discrete_topology,
    indiscrete_topology,
    interior_in_product,
    is_continuous_map,
    load_topology_file,
    parse_topology_document,
    relation_topology_report,
)

__version__ = "0.1.0"

__all__ = [
    "AcyclicityViolation",
    "DecompositionFailure",
    "EXISTENTIAL",
    "EmptyFamily",
    "FiniteTopology",
    "GridSpec",
    "GridVerificationReport",
    "GroundSet",
    "GroundSetMismatch",
    "HasseDiagram",
    "InternalContractViolation",
    "LengthMismatch",
    "LinearOrder",
    "LoadedRelation",
    "MultiUtility",
    "NonpositiveEpsilon",
    "NotCompleteTransitive",
    "NotContinuous",
    "NotPartialOrder",
    "NotStrictPartialOrder",
    "OrdembedError",
    "PARETO",
    "ProbeReport",
    "PropertyReport",
    "Realizer",
    "Relation",
    "RelationPropertyError",
    "SearchBudgetExceeded",
    "SemiorderFamily",
    "ToleranceViolation",
    "TopologyReport",
    "ValidationError",
    "VerificationError",
    "all_linear_extensions",
    "boundary_witnesses",
    "build_multi_embedding",
    "build_pareto_representation",
    "build_realizer",
    "build_topology",
    "closure_in_product",
    "complement",
    "continuous_pareto_probe",
    "countable_failure_witness",
    "debreu_utility",
    "decomposition_check",
    "decomposition_failures",
    "difference",
    "discrete_topology",
    "dual",
    "f_eval",
    "ground_from",
    "has_witness_in",
    "hasse_projection",
    "identity",
    "indiscrete_topology",
    "interior_in_product",
    "intersection",
    "is_continuous_map",
    "linear_extension",
    "load_relation_file",
    "load_topology_file",
    "open_order_dimension",
    "order_dimension",
    "pareto_dominates",
    "parse_relation_document",
    "parse_topology_document",
    "polar",
    "probe_from_document",
    "properties",
    "relation_to_doc",
    "relation_topology_report",
    "semiorder_pair",
    "strict_part",
    "transitive_closure",
    "union",
    "v_alpha",
    "v_alpha_array",
    "verify_existential_embedding",
    "verify_family_on_grid",
    "verify_pareto_embedding",
    "verify_realizer",
    "witness_alpha",
]
