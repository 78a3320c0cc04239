"""Theorems as executable implications over a bundle.

Each theorem checks its hypotheses first.  If any hypothesis fails the result
is *vacuous*; otherwise the conclusions are checked and the implication holds
iff they all pass.  Conclusions are evaluated with the checkers directly (not
the raising constructors) so a failure carries witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .checks import covariant_from_bundle, run_check
from .covariant import (
    CovariantHomBialgebra,
    _compose_after,
    characterization,
    check_coalgebra_map,
    check_covariant_hom_bialgebra,
    check_dual_covariant_hom_bialgebra,
    check_perturbation,
    check_quasitriangular_condition,
    coassoc_defect,
    dual_coproduct,
    dual_product,
    quasitriangular_maps,
    quasitriangular_sides,
    DualCovariantHomBialgebra,
)
from .errors import MissingSection, PostconditionError, UnknownName
from .rota_baxter import (
    HomDendriform,
    HomPreLie,
    _split_products,
    check_hom_dendriform,
    check_hom_prelie,
    check_weak_pseudotwistor,
    pseudotwistor_from_rbs,
    RotaBaxterSystem,
)
from .structures import (
    CheckReport,
    HomAlgebra,
    Witness,
    check_algebra_morphism,
    check_associative,
    check_hom_algebra,
    compare,
)
from .tensor import BilinearMap, LinearMap, ein
from .yang_baxter import _sandwich, check_alpha_n_rbs

THEOREMS = (
    "rbs-dendriform",
    "dend-prelie",
    "pseudotwistor",
    "ybp-to-a2rbs",
    "quasitriangular",
    "characterization",
    "perturbation",
    "dualization",
    "induced-composition",
)


@dataclass
class TheoremResult:
    name: str
    hypotheses: list[CheckReport]
    conclusions: list[CheckReport] = dc_field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return not all(h.passed for h in self.hypotheses)

    @property
    def holds(self) -> bool:
        return self.vacuous or all(c.passed for c in self.conclusions)


def _verdict_report(name: str, field, pairs) -> CheckReport:
    """A report whose witnesses are the labels where two boolean verdicts differ."""
    witnesses = [Witness(name, at, (a,), (b,)) for at, a, b in pairs if a != b]
    return CheckReport(name, field, witnesses)


def _covariant_or_zero(b) -> CovariantHomBialgebra:
    if b.coproduct is None and b.delta1 is None and b.delta2 is None:
        return CovariantHomBialgebra.zero(b.algebra())
    return covariant_from_bundle(b)


def _rb_hyps(b):
    return [run_check("hom-algebra", b), run_check("rb-system", b)]


def _rbs_dendriform(b, **_):
    result = TheoremResult("rbs-dendriform", _rb_hyps(b))
    if result.vacuous:
        return result
    A = b.algebra()
    prec, succ = _split_products(A.mu, b.linear("R"), b.linear("S"), LinearMap.identity(A.field, A.dim))
    D = HomDendriform(A.field, A.alpha, prec, succ)
    result.conclusions = [check_hom_dendriform(D), _named("star-hom-algebra", check_hom_algebra(A.with_product(D.total())))]
    return result


def _named(name, report):
    return CheckReport.combine(name, report.field, [report])


def _dend_prelie(b, convention="direct", **_):
    if b.prec is not None and b.succ is not None:
        result = TheoremResult("dend-prelie", [run_check("hom-dendriform", b)])
        D = HomDendriform(b.field, b.linear("alpha"), b.bilinear("prec"), b.bilinear("succ"))
    else:
        result = TheoremResult("dend-prelie", _rb_hyps(b))
        if result.vacuous:
            return result
        A = b.algebra()
        prec, succ = _split_products(A.mu, b.linear("R"), b.linear("S"), LinearMap.identity(A.field, A.dim))
        D = HomDendriform(A.field, A.alpha, prec, succ)
        result.hypotheses.append(check_hom_dendriform(D))
    if result.vacuous:
        return result
    result.conclusions = [_named(f"hom-prelie-{convention}", check_hom_prelie(HomPreLie(D.field, D.alpha, D.diamond(convention))))]
    return result


def _pseudotwistor(b, **_):
    result = TheoremResult("pseudotwistor", _rb_hyps(b))
    if result.vacuous:
        return result
    A = b.algebra()
    f, n = A.field, A.dim
    T = pseudotwistor_from_rbs(RotaBaxterSystem(A, b.linear("R"), b.linear("S")))
    twisted = BilinearMap(f, ein(f, "abo,abij->ijo", A.mu.c, T.T.reshape(n, n, n, n)), trusted=True)
    prec, succ = _split_products(A.mu, b.linear("R"), b.linear("S"), LinearMap.identity(f, n))
    star = (prec + succ).c
    result.conclusions = [
        check_weak_pseudotwistor(A, T),
        _named("twisted-product-hom-algebra", check_hom_algebra(A.with_product(twisted))),
        CheckReport("twisted-product-equals-star", f, compare("twisted-product-equals-star", twisted.c, star, 2)),
    ]
    return result


def _yb_hyps(b):
    return [run_check("hom-algebra", b), run_check("yb-pair", b)]


def _ybp_to_a2rbs(b, **_):
    result = TheoremResult("ybp-to-a2rbs", _yb_hyps(b))
    if result.vacuous:
        return result
    A = b.algebra()
    f = A.field
    maps, conclusions = [], []
    for label in ("r", "s"):
        first, second = _sandwich(A, b.tensor(label))
        conclusions.append(CheckReport(f"{label}-sandwich-forms", f,
                                       compare(f"{label}-sandwich-forms", first.T, second.T, 1)))
        maps.append(LinearMap(f, first, trusted=True))
    R, S = maps
    conclusions.append(check_alpha_n_rbs(A, R, S, 2))
    shift = A.alpha.power(2)
    prec, succ = _split_products(A.mu, R, S, shift)
    conclusions.append(check_hom_dendriform(HomDendriform(f, A.alpha.power(3), prec, succ)))
    result.conclusions = conclusions
    return result


def _defect_identity(A, r, s) -> CheckReport:
    """``coassoc_defect(Delta') = a.(sum_r) - (sum_s).a`` as a report."""
    f = A.field
    lhs, rhs = quasitriangular_sides(A, r, s)
    dp, _, _ = quasitriangular_maps(A, r, s)
    return CheckReport("defect-identity", f,
                       compare("defect-identity", coassoc_defect(A.alpha, dp), f.reduce(lhs - rhs), 1))


def _quasitriangular(b, **_):
    result = TheoremResult("quasitriangular", _yb_hyps(b))
    if result.vacuous:
        return result
    A = b.algebra()
    r, s = b.tensor("r"), b.tensor("s")
    B = CovariantHomBialgebra(A, *quasitriangular_maps(A, r, s))
    result.conclusions = [
        check_covariant_hom_bialgebra(B),
        _defect_identity(A, r, s),
        CheckReport.combine("quasitriangular-condition", A.field, [_condition(A, r, s)]),
    ]
    return result


def _condition(A, r, s) -> CheckReport:
    try:
        return check_quasitriangular_condition(A, r, s)
    except PostconditionError as exc:
        return exc.report


def _characterization(b, **_):
    result = TheoremResult("characterization", [run_check("hom-algebra", b), run_check("invariant", b)])
    if result.vacuous:
        return result
    A = b.algebra()
    ch = characterization(A, b.tensor("r"), b.tensor("s"), strict=False)
    i, ii, iii = ch.verdicts
    result.conclusions = [
        _verdict_report("yb-pair-iff-tensor-form", A.field, [((), i, ii)]),
        _verdict_report("yb-pair-iff-diagrams", A.field, [((), i, iii)]),
    ]
    return result


def _perturbation(b, form="stated", **_):
    B = _covariant_or_zero(b)
    result = TheoremResult("perturbation", [
        run_check("hom-algebra", b),
        run_check("invariant", b),
        _named("base-covariant-bialgebra", check_covariant_hom_bialgebra(B)),
    ])
    if result.vacuous:
        return result
    rep = check_perturbation(B, b.tensor("r"), b.tensor("s"))
    condition = rep.condition if form == "stated" else rep.corrected
    result.conclusions = [
        _verdict_report(f"{form}-condition-iff-axioms", b.field, [((), condition.passed, rep.direct.passed)]),
    ]
    return result


def _dualization(b, **_):
    B = _covariant_or_zero(b)
    result = TheoremResult("dualization", [_named("covariant-bialgebra", check_covariant_hom_bialgebra(B))])
    if result.vacuous:
        return result
    A = B.base
    f = A.field
    D = DualCovariantHomBialgebra(f, A.alpha.transpose(), dual_product(B.delta), dual_coproduct(A.mu),
                                  dual_product(B.delta1), dual_product(B.delta2))
    back_mu = D.comul.d.transpose(1, 2, 0)
    back_delta = D.product.c.transpose(2, 0, 1)
    result.conclusions = [
        check_dual_covariant_hom_bialgebra(D),
        CheckReport("double-transpose-product", f, compare("double-transpose-product", back_mu, A.mu.c, 3)),
        CheckReport("double-transpose-coproduct", f,
                    compare("double-transpose-coproduct", back_delta, B.delta.d, 1)),
    ]
    return result


def _induced_composition(b, **_):
    f = b.field
    mu = b.bilinear("mul")
    phi = b.linear("alpha")
    ident = LinearMap.identity(f, b.dim)
    hyps = [check_associative(mu), check_algebra_morphism(mu, phi)]
    covariant = b.coproduct is not None
    if covariant:
        base = CovariantHomBialgebra(HomAlgebra(f, mu, ident, b.basis), b.coproduct_map(),
                                     b.coproduct_map("delta1"), b.coproduct_map("delta2"))
        hyps.append(_named("untwisted-covariant-bialgebra", check_covariant_hom_bialgebra(base)))
        for label, X in (("coproduct", base.delta), ("delta1", base.delta1), ("delta2", base.delta2)):
            hyps.append(check_coalgebra_map(X, phi, f"{label}-morphism"))
    result = TheoremResult("induced-composition", hyps)
    if result.vacuous:
        return result
    composed = BilinearMap(f, ein(f, "ijm,om->ijo", mu.c, phi.m), trusted=True)
    A = HomAlgebra(f, composed, phi, b.basis)
    result.conclusions = [_named("induced-hom-algebra", check_hom_algebra(A))]
    if covariant:
        induced = CovariantHomBialgebra(A, _compose_after(base.delta, phi), _compose_after(base.delta1, phi),
                                        _compose_after(base.delta2, phi))
        result.conclusions.append(_named("induced-covariant-bialgebra", check_covariant_hom_bialgebra(induced)))
    return result


_RUNNERS = {
    "rbs-dendriform": _rbs_dendriform,
    "dend-prelie": _dend_prelie,
    "pseudotwistor": _pseudotwistor,
    "ybp-to-a2rbs": _ybp_to_a2rbs,
    "quasitriangular": _quasitriangular,
    "characterization": _characterization,
    "perturbation": _perturbation,
    "dualization": _dualization,
    "induced-composition": _induced_composition,
}


def verify_theorem(name: str, bundle, convention: str = "direct", form: str = "stated") -> TheoremResult:
    """Run one theorem; ``convention`` applies to dend-prelie, ``form`` to perturbation."""
    if form not in ("stated", "corrected"):
        raise ValueError(f"unknown perturbation form {form!r}")
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise UnknownName(f"unknown theorem {name!r}; expected one of {THEOREMS}") from None
    try:
        return runner(bundle, convention=convention, form=form)
    except MissingSection as exc:
        missing = CheckReport("required-sections", bundle.field,
                              [Witness("required-sections", (), (exc.path,), ())])
        return TheoremResult(name, [missing])
