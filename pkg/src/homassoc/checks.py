"""Named checks on bundles, shared by bundle validation and the CLI."""

from __future__ import annotations

from typing import Callable

from .covariant import (
    CovariantHomBialgebra,
    DualCovariantHomBialgebra,
    check_covariant_derivation,
    check_covariant_hom_bialgebra,
    check_derivation,
    check_dual_covariant_hom_bialgebra,
    check_infinitesimal_hom_bialgebra,
    check_quasitriangular_condition,
    check_tensor_square_bicomodule,
)
from .errors import UnknownName
from .rota_baxter import (
    HomDendriform,
    HomPreLie,
    check_hom_dendriform,
    check_hom_prelie,
    check_rb_system,
    check_weak_pseudotwistor,
    check_weighted_rb,
)
from .structures import (
    CheckReport,
    check_associative,
    check_hom_algebra,
    check_hom_coalgebra,
    check_multiplicative,
    compare,
    hom_associativity_sides,
)
from .tensor import LinearMap
from .yang_baxter import check_alpha_n_rbs, check_invariant, check_yb_pair


def _hom_assoc(b):
    A = b.algebra()
    return CheckReport("hom-assoc", A.field, compare("hom-associativity", *hom_associativity_sides(A.mu, A.alpha), 3))


def _invariant(b):
    A = b.algebra()
    return CheckReport.combine("invariant", A.field, [
        check_invariant(A, b.tensor("r"), "r-invariance"),
        check_invariant(A, b.tensor("s"), "s-invariance"),
    ])


def _alpha_n(b):
    b.require("n_power")
    return check_alpha_n_rbs(b.algebra(), b.linear("R"), b.linear("S"), b.n_power)


def _dendriform(b):
    return check_hom_dendriform(HomDendriform(b.field, b.linear("alpha"), b.bilinear("prec"), b.bilinear("succ")))


def _prelie(b):
    return check_hom_prelie(HomPreLie(b.field, b.linear("alpha"), b.bilinear("diamond")))


def covariant_from_bundle(b) -> CovariantHomBialgebra:
    return CovariantHomBialgebra(b.algebra(), b.coproduct_map(), b.coproduct_map("delta1"), b.coproduct_map("delta2"))


def dual_from_bundle(b) -> DualCovariantHomBialgebra:
    f = b.field
    return DualCovariantHomBialgebra(f, LinearMap(f, b.alpha, trusted=True), b.bilinear("mul"),
                                     b.coproduct_map(), b.bilinear("partial1"), b.bilinear("partial2"))


CHECKS: dict[str, Callable] = {
    "hom-assoc": _hom_assoc,
    "multiplicative": lambda b: check_multiplicative(b.bilinear("mul"), b.linear("alpha")),
    "hom-algebra": lambda b: check_hom_algebra(b.algebra()),
    "associative": lambda b: check_associative(b.bilinear("mul")),
    "rb-system": lambda b: check_rb_system(b.algebra(), b.linear("R"), b.linear("S")),
    "weighted-rb": lambda b: (b.require("lambda"), check_weighted_rb(b.algebra(), b.linear("R"), b.lam))[1],
    "alpha-n-rbs": _alpha_n,
    "hom-dendriform": _dendriform,
    "hom-prelie": _prelie,
    "weak-pseudotwistor": lambda b: check_weak_pseudotwistor(b.algebra(), b.twistor()),
    "invariant": _invariant,
    "yb-pair": lambda b: check_yb_pair(b.algebra(), b.tensor("r"), b.tensor("s")),
    "quasitriangular-condition": lambda b: check_quasitriangular_condition(b.algebra(), b.tensor("r"), b.tensor("s")),
    "hom-coalgebra": lambda b: check_hom_coalgebra(b.coalgebra()),
    "infinitesimal": lambda b: check_infinitesimal_hom_bialgebra(b.algebra(), b.coproduct_map()),
    "delta1-derivation": lambda b: check_derivation(b.algebra(), b.coproduct_map("delta1"), "delta1-derivation"),
    "delta2-derivation": lambda b: check_derivation(b.algebra(), b.coproduct_map("delta2"), "delta2-derivation"),
    "covariant-derivation": lambda b: check_covariant_derivation(
        b.algebra(), b.coproduct_map(), b.coproduct_map("delta1"), b.coproduct_map("delta2")),
    "covariant-bialgebra": lambda b: check_covariant_hom_bialgebra(covariant_from_bundle(b)),
    "tensor-square-bicomodule": lambda b: check_tensor_square_bicomodule(b.coalgebra()),
    "dual-covariant-bialgebra": lambda b: check_dual_covariant_hom_bialgebra(dual_from_bundle(b)),
}


def run_check(name: str, bundle) -> CheckReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownName(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}") from None
    report = fn(bundle)
    if report.name != name:
        report = CheckReport.combine(name, report.field, [report])
    return report
