"""Clifford algebras of simple graphs: exact symbolic arithmetic, structure
classification, canonical reduction with checkable witnesses, and a census
of small graphs."""

from .algebra import (
    AlgebraElement,
    CenterBasis,
    GaussianRational,
    SignedMonomial,
    center_basis,
    central_idempotent,
    is_central_monomial,
    mask_from_vertices,
    masks_commute,
    monomial_mul,
    monomial_vertices,
    render_monomial,
    signed_mul,
)
from .census import (
    CanonicalForm,
    CensusTable,
    ClassProfile,
    HierarchyReport,
    canonical_form,
    census_table,
    class_profiles,
    cliff_counts,
    enumerate_classes,
    hierarchy_check,
    sequence,
    sequence_terms,
)
from .errors import (
    AmbientMismatchError,
    CapacityError,
    CliffGraphError,
    Graph6Error,
    ParameterError,
)
from .gf2 import (
    BitMatrix,
    Gf2Kernel,
    basic_replacement,
    det_integer,
    det_parity,
    nullspace_gf2,
    rank_gf2,
)
from .graphs import (
    FamilySpec,
    Graph,
    build_family,
    complete,
    cycle,
    dynkin_a,
    dynkin_d,
    dynkin_e,
    edgeless,
    emit_graph6,
    from_edges,
    gkm,
    is_mating,
    parse_family,
    parse_graph6,
    path,
    relabel,
    star,
    union,
)
from .structure import (
    DynkinRow,
    IsomorphismWitness,
    StructureReport,
    WitnessReport,
    apply_witness,
    classify,
    dynkin_table,
    named_isomorphism,
    reduce_to_canonical,
    same_class,
    validate_witness,
)

__version__ = "0.1.0"
