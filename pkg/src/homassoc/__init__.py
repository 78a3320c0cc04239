"""Exact computation with Hom-associative algebras and their relatives.

Rota-Baxter systems, Hom-Yang-Baxter pairs and covariant Hom-bialgebras over
the rationals or GF(p), with basis-complete checkers that report witnesses.
"""

__version__ = "0.1.0"

from .errors import (
    DimMismatch,
    DivisionByZero,
    FieldMismatch,
    FractionInPrimeField,
    HomAlgebraError,
    InvalidInput,
    InvalidSystem,
    MissingCompanion,
    MissingSection,
    NotAssociative,
    NotInvariant,
    NotMorphism,
    NotPseudotwistor,
    NotWeightedRB,
    NotYBPair,
    ParseError,
    PostconditionError,
    SchemaError,
    ShapeError,
    SpaceTooLarge,
    UnknownName,
    UnsupportedDim,
    WitnessedError,
)
from .field import GF, QQ, FieldScalar, FieldSpec, format_scalar, parse_scalar, scalar_arith
from .tensor import (
    BilinearMap,
    Coproduct,
    LinearMap,
    Tensor2,
    Tensor3,
    TwistorMap,
    apply_linear,
    apply_twistor,
    basis_vector,
    bilinear_eval,
    coproduct_eval,
    map_tensor2,
    map_tensor3,
    vector,
)
from .structures import (
    CheckReport,
    HomAlgebra,
    HomCoalgebra,
    Witness,
    check_algebra_morphism,
    check_associative,
    check_hom_algebra,
    check_hom_coalgebra,
    check_infinitesimal_compat,
    induce_algebra_by_composition,
)
from .rota_baxter import (
    HomDendriform,
    HomPreLie,
    RotaBaxterSystem,
    check_hom_dendriform,
    check_hom_prelie,
    check_rb_system,
    check_weak_pseudotwistor,
    check_weighted_rb,
    dendriform_from_rbs,
    prelie_from_dendriform,
    product_from_twistor,
    pseudotwistor_from_rbs,
    rbs_from_weighted_operator,
    star_product,
)
from .yang_baxter import (
    AlphaNRBSystem,
    YangBaxterPair,
    check_alpha_n_rbs,
    check_invariant,
    check_yb_pair,
    dendriform_from_alpha_n_rbs,
    rbs_from_ybp,
    triple_product,
    ybp_induced_structures,
)
from .covariant import (
    BimoduleActions,
    CovariantHomBialgebra,
    DualCovariantHomBialgebra,
    build_quasitriangular,
    characterization,
    check_bimodule,
    check_coderivation,
    check_covariant_coderivation,
    check_covariant_derivation,
    check_covariant_hom_bialgebra,
    check_derivation,
    check_perturbation,
    check_quasitriangular_condition,
    coassoc_defect,
    dualize,
    induce_covariant_by_composition,
    lr_tensor_products,
    mixed_triple_product,
    quasitriangular_maps,
    tensor_power_bimodule,
)
from .search import CatalogInstance, SearchTask, catalog, enumerate_solutions, random_instance
from .bundle import Bundle, load_bundle, save_bundle

__all__ = [
    "AlphaNRBSystem",
    "BilinearMap",
    "BimoduleActions",
    "Bundle",
    "CatalogInstance",
    "CheckReport",
    "Coproduct",
    "CovariantHomBialgebra",
    "DimMismatch",
    "DivisionByZero",
    "DualCovariantHomBialgebra",
    "FieldMismatch",
    "FieldScalar",
    "FieldSpec",
    "FractionInPrimeField",
    "GF",
    "HomAlgebra",
    "HomAlgebraError",
    "HomCoalgebra",
    "HomDendriform",
    "HomPreLie",
    "InvalidInput",
    "InvalidSystem",
    "LinearMap",
    "MissingCompanion",
    "MissingSection",
    "NotAssociative",
    "NotInvariant",
    "NotMorphism",
    "NotPseudotwistor",
    "NotWeightedRB",
    "NotYBPair",
    "ParseError",
    "PostconditionError",
    "QQ",
    "RotaBaxterSystem",
    "SchemaError",
    "SearchTask",
    "ShapeError",
    "SpaceTooLarge",
    "Tensor2",
    "Tensor3",
    "TwistorMap",
    "UnknownName",
    "UnsupportedDim",
    "Witness",
    "WitnessedError",
    "YangBaxterPair",
    "apply_linear",
    "apply_twistor",
    "basis_vector",
    "bilinear_eval",
    "build_quasitriangular",
    "catalog",
    "characterization",
    "check_algebra_morphism",
    "check_alpha_n_rbs",
    "check_associative",
    "check_bimodule",
    "check_coderivation",
    "check_covariant_coderivation",
    "check_covariant_derivation",
    "check_covariant_hom_bialgebra",
    "check_derivation",
    "check_hom_algebra",
    "check_hom_coalgebra",
    "check_hom_dendriform",
    "check_hom_prelie",
    "check_infinitesimal_compat",
    "check_invariant",
    "check_perturbation",
    "check_quasitriangular_condition",
    "check_rb_system",
    "check_weak_pseudotwistor",
    "check_weighted_rb",
    "check_yb_pair",
    "coassoc_defect",
    "coproduct_eval",
    "dendriform_from_alpha_n_rbs",
    "dendriform_from_rbs",
    "dualize",
    "enumerate_solutions",
    "format_scalar",
    "induce_algebra_by_composition",
    "induce_covariant_by_composition",
    "load_bundle",
    "lr_tensor_products",
    "map_tensor2",
    "map_tensor3",
    "mixed_triple_product",
    "parse_scalar",
    "prelie_from_dendriform",
    "product_from_twistor",
    "pseudotwistor_from_rbs",
    "quasitriangular_maps",
    "random_instance",
    "rbs_from_weighted_operator",
    "rbs_from_ybp",
    "save_bundle",
    "scalar_arith",
    "star_product",
    "tensor_power_bimodule",
    "triple_product",
    "vector",
    "ybp_induced_structures",
]
