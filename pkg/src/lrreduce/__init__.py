"""Exact reduction rules for tensor product multiplicities of semisimple groups."""
from .rootsys import (
    InversionSet,
    RootCoords,
    RootSystem,
    Weight,
    WeylElement,
    act,
    affine_zero_action,
    build_root_system,
    from_root_basis,
    inversion_set,
    is_minimal_coset_rep,
    length,
    longest_element,
    min_coset_rep,
    to_root_basis,
)
from .reps import (
    Character,
    ResourceLimitError,
    WeightMultTable,
    character_product_oracle,
    multi_tensor_multiplicity,
    tensor_decompose,
    weight_multiplicity,
    weyl_dim,
)
from .schubert import (
    PolynomialRep,
    SchubertExpr,
    disjoint_inversion_check,
    divided_difference,
    intersection_number,
    schubert_product,
)
from .reduce import (
    FaceDatum,
    MultiplicityProblem,
    ReducedProblem,
    check_face_conditions,
    face_codimension,
    factor_rule,
    generate_rules,
    in_span_I,
    on_face,
    random_on_face,
    reduce_or_bound,
    restrict_problem,
    verify_reduction,
)

__version__ = "0.1.0"
