"""Presentations, representation type, and exact representation theory
of nodal algebras built from gluing and blow-up data on a quiver."""

from .classify import (
    FINITE,
    NON_WILD_UNRESOLVED,
    TAME,
    WILD,
    CyclicQuiver,
    Detection,
    ExceptionalParams,
    GentleReport,
    NotTypeA,
    RepType,
    UnknownPair,
    classify,
    detect_exceptional,
    detect_super_exceptional,
    exceptional_type,
    gabriel_type,
    is_gentle_presentation,
    is_inessential,
    is_quasi_gentle,
    strip_inessential,
    tits_witness,
)
from .construct import (
    GluedVertexMap,
    InvalidDatum,
    NodalDatum,
    NonNilpotentCycle,
    ValidationReport,
    blow_presentation,
    build_presentation,
    dimension,
    glue_presentation,
    merged_vertex_id,
    validate,
)
from .dsl import (
    DatumSemanticError,
    DatumSyntaxError,
    emit_presentation,
    parse_datum,
    presentation_from_json,
    relation_strings,
    serialize_datum,
)
from .linalg import GF, QQ, Matrix, SUPPORTED_PRIMES
from .quiver import (
    Arrow,
    Commutation,
    MonomialZero,
    Path,
    Presentation,
    Quiver,
    compose,
    empty_path,
    hereditary,
    underlying_shape,
)
from .reps import (
    BudgetExceeded,
    EnumerationResult,
    HomSpace,
    Morphism,
    Representation,
    SearchSpaceTooLarge,
    ShapeMismatch,
    blow_induce,
    check_relations,
    combine_morphisms,
    compose_morphisms,
    decompose,
    direct_sum,
    enumerate_indecomposables,
    glue_induce,
    glue_induce_inessential,
    glue_restrict_inessential,
    has_simple_summand_at,
    has_summand,
    hom_space,
    identity_morphism,
    is_indecomposable,
    is_isomorphic,
    make_representation,
    path_matrix,
    random_representation,
    simple_representation,
    simple_summand_multiplicity,
    split_summand,
    strip_simple_summands,
    zero_representation,
)

__version__ = "0.1.0"
