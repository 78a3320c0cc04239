"""Rota-Baxter systems and the structures they induce.

From a Rota-Baxter system (R, S) on a Hom-associative algebra we build the
Hom-dendriform pair ``a < b = a.S(b)``, ``a > b = R(a).b``, a Hom-preLie
difference product, the star product, and the weak
pseudotwistor ``T(a (x) b) = R(a) (x) b + a (x) S(b)``.  Each construction
re-checks its output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, InvalidInput, MissingCompanion, NotPseudotwistor, NotWeightedRB, PostconditionError
from .field import FieldSpec
from .structures import (
    CheckReport,
    HomAlgebra,
    _same_dim,
    check_hom_algebra,
    check_multiplicative,
    compare,
)
from .tensor import BilinearMap, LinearMap, TwistorMap, ein, kron, left_nested, right_nested


@dataclass(eq=False)
class RotaBaxterSystem:
    base: HomAlgebra
    R: LinearMap
    S: LinearMap

    def __post_init__(self):
        _same_dim(self.base.mu, self.R, self.S)


@dataclass(eq=False)
class HomDendriform:
    field: FieldSpec
    alpha: LinearMap
    prec: BilinearMap
    succ: BilinearMap

    def __post_init__(self):
        _same_dim(self.alpha, self.prec, self.succ)

    @property
    def dim(self) -> int:
        return self.alpha.dim

    def total(self) -> BilinearMap:
        """The associated product ``a * b = a < b + a > b``."""
        return self.prec + self.succ

    def diamond(self, convention: str = "direct") -> BilinearMap:
        """``a > b - a < b`` ("direct") or ``a > b - b < a`` ("transposed")."""
        if convention == "direct":
            return self.succ - self.prec
        if convention == "transposed":
            swapped = BilinearMap(self.field, self.prec.c.transpose(1, 0, 2).copy(), trusted=True)
            return self.succ - swapped
        raise ValueError(f"unknown diamond convention {convention!r}; expected 'direct' or 'transposed'")


@dataclass(eq=False)
class HomPreLie:
    field: FieldSpec
    alpha: LinearMap
    diamond: BilinearMap

    def __post_init__(self):
        _same_dim(self.alpha, self.diamond)

    @property
    def dim(self) -> int:
        return self.alpha.dim


def check_commutes(alpha: LinearMap, f: LinearMap, name: str) -> CheckReport:
    """``alpha o f = f o alpha``, one witness per basis vector."""
    _same_dim(alpha, f)
    lhs = (alpha @ f).m.T
    rhs = (f @ alpha).m.T
    return CheckReport(name, alpha.field, compare(name, lhs, rhs, 1))


def _apply_cols(f: LinearMap, arr: np.ndarray) -> np.ndarray:
    """Apply f to the last axis of a [.., o] coordinate array."""
    return ein(f.field, "...m,om->...o", arr, f.m)


def rb_equation_sides(mu: BilinearMap, R: LinearMap, S: LinearMap, target: LinearMap):
    """``target(a).target(b)`` and ``target(R(a).b + a.S(b))`` on basis pairs."""
    f = mu.field
    lhs = ein(f, "ai,bj,abo->ijo", target.m, target.m, mu.c)
    inner = f.reduce(ein(f, "ai,ajm->ijm", R.m, mu.c) + ein(f, "bj,ibm->ijm", S.m, mu.c))
    return lhs, _apply_cols(target, inner)


def check_rb_system(A: HomAlgebra, R: LinearMap, S: LinearMap) -> CheckReport:
    _same_dim(A.mu, R, S)
    parts = [
        check_commutes(A.alpha, R, "alpha-commutes-R"),
        check_commutes(A.alpha, S, "alpha-commutes-S"),
    ]
    for name, target in (("rbs1", R), ("rbs2", S)):
        lhs, rhs = rb_equation_sides(A.mu, R, S, target)
        parts.append(CheckReport(name, A.field, compare(name, lhs, rhs, 2)))
    return CheckReport.combine("rb-system", A.field, parts)


def check_weighted_rb(A: HomAlgebra, R: LinearMap, lam) -> CheckReport:
    """Rota-Baxter operator of weight lam: ``R(a)R(b) = R(R(a)b + aR(b) + lam ab)``."""
    f = A.field
    lam = f.coerce(lam)
    _same_dim(A.mu, R)
    lhs = ein(f, "ai,bj,abo->ijo", R.m, R.m, A.mu.c)
    inner = f.reduce(
        ein(f, "ai,ajm->ijm", R.m, A.mu.c) + ein(f, "bj,ibm->ijm", R.m, A.mu.c) + A.mu.c * lam
    )
    rhs = _apply_cols(R, inner)
    parts = [
        check_commutes(A.alpha, R, "alpha-commutes-R"),
        CheckReport("weighted-rb", f, compare("weighted-rb", lhs, rhs, 2)),
    ]
    return CheckReport.combine("weighted-rb-operator", f, parts)


def rbs_from_weighted_operator(A: HomAlgebra, R: LinearMap, lam) -> RotaBaxterSystem:
    """``(R, R + lam id)`` from a weight-lam Rota-Baxter operator R."""
    report = check_weighted_rb(A, R, lam)
    if not report.passed:
        raise NotWeightedRB(f"not a Rota-Baxter operator of weight {A.field.format_raw(lam)}", report)
    S = R + LinearMap.identity(A.field, A.dim).scale(lam)
    post = check_rb_system(A, R, S)
    if not post.passed:
        raise PostconditionError("(R, R + lam id) failed the Rota-Baxter system check", post)
    return RotaBaxterSystem(A, R, S)


# -- dendriform / preLie ---------------------------------------------------------


def check_hom_dendriform(D: HomDendriform) -> CheckReport:
    prec, succ, alpha = D.prec, D.succ, D.alpha
    both = prec + succ
    parts = [
        check_multiplicative(prec, alpha, "alpha-distributes-prec"),
        check_multiplicative(succ, alpha, "alpha-distributes-succ"),
    ]
    identities = (
        ("dendriform-1", left_nested(prec, prec, alpha), right_nested(prec, both, alpha)),
        ("dendriform-2", left_nested(prec, succ, alpha), right_nested(succ, prec, alpha)),
        ("dendriform-3", left_nested(succ, both, alpha), right_nested(succ, succ, alpha)),
    )
    for name, lhs, rhs in identities:
        parts.append(CheckReport(name, D.field, compare(name, lhs, rhs, 3)))
    return CheckReport.combine("hom-dendriform", D.field, parts)


def check_hom_prelie(P: HomPreLie) -> CheckReport:
    f = P.field
    d, alpha = P.diamond, P.alpha
    assoc = f.reduce(left_nested(d, d, alpha) - right_nested(d, d, alpha))
    swapped = assoc.transpose(1, 0, 2, 3)
    parts = [
        check_multiplicative(d, alpha, "alpha-distributes-diamond"),
        CheckReport("prelie", f, compare("prelie", assoc, swapped, 3)),
    ]
    return CheckReport.combine("hom-prelie", f, parts)


def _split_products(mu: BilinearMap, R: LinearMap, S: LinearMap, shift: LinearMap):
    """``a < b = shift(a).S(b)`` and ``a > b = R(a).shift(b)``."""
    f = mu.field
    prec = BilinearMap(f, ein(f, "ai,bj,abo->ijo", shift.m, S.m, mu.c), trusted=True)
    succ = BilinearMap(f, ein(f, "ai,bj,abo->ijo", R.m, shift.m, mu.c), trusted=True)
    return prec, succ


def dendriform_from_rbs(sys: RotaBaxterSystem) -> HomDendriform:
    A = sys.base
    prec, succ = _split_products(A.mu, sys.R, sys.S, LinearMap.identity(A.field, A.dim))
    D = HomDendriform(A.field, A.alpha, prec, succ)
    post = check_hom_dendriform(D)
    if not post.passed:
        raise PostconditionError("Rota-Baxter system did not give a Hom-dendriform algebra", post)
    return D


PRELIE_CONVENTIONS = ("direct", "transposed")


def prelie_from_dendriform(D: HomDendriform, convention: str = "direct") -> HomPreLie:
    """The difference product of a Hom-dendriform algebra, checked to be Hom-preLie.

    ``convention="direct"`` uses ``a > b - a < b``, which is not Hom-preLie for
    every dendriform algebra; the failure is raised, never hidden.
    ``"transposed"`` uses ``a > b - b < a``, which always is.
    """
    P = HomPreLie(D.field, D.alpha, D.diamond(convention))
    post = check_hom_prelie(P)
    if not post.passed:
        raise PostconditionError(f"{convention} difference product is not Hom-preLie", post)
    return P


def star_product(sys: RotaBaxterSystem) -> HomAlgebra:
    """``a * b = a.S(b) + R(a).b`` on the same Hom-vector space."""
    A = sys.base
    prec, succ = _split_products(A.mu, sys.R, sys.S, LinearMap.identity(A.field, A.dim))
    out = A.with_product(prec + succ)
    post = check_hom_algebra(out)
    if not post.passed:
        raise PostconditionError("star product is not Hom-associative", post)
    return out


# -- weak pseudotwistors ---------------------------------------------------------


def pseudotwistor_from_rbs(sys: RotaBaxterSystem) -> TwistorMap:
    """T = R(x)id + id(x)S with companion R(x)R(x)id + R(x)id(x)S + id(x)S(x)S."""
    f = sys.base.field
    I = f.eye(sys.base.dim)
    R, S = sys.R.m, sys.S.m
    T = f.reduce(kron(f, R, I) + kron(f, I, S))
    tau = f.reduce(kron(f, R, R, I) + kron(f, R, I, S) + kron(f, I, S, S))
    return TwistorMap(f, T, tau)


def _product_alpha_matrices(A: HomAlgebra):
    """Matrices of ``mu (x) alpha`` and ``alpha (x) mu`` from A(x)A(x)A to A(x)A."""
    n = A.dim
    f = A.field
    mu_alpha = ein(f, "ija,bk->abijk", A.mu.c, A.alpha.m).reshape(n * n, n**3)
    alpha_mu = ein(f, "ai,jkb->abijk", A.alpha.m, A.mu.c).reshape(n * n, n**3)
    return mu_alpha, alpha_mu


def check_weak_pseudotwistor(A: HomAlgebra, T: TwistorMap) -> CheckReport:
    """Twist compatibility of T and tau, and both pentagon legs, on basis triples."""
    if T.tau is None:
        raise MissingCompanion("a weak pseudotwistor check needs the companion tau")
    n, f = A.dim, A.field
    if T.dim != n or T.field != f:
        raise DimMismatch(f"twistor on dim {T.dim} over {T.field}, algebra dim {n} over {f}")
    I = f.eye(n)
    a2 = kron(f, A.alpha.m, A.alpha.m)
    a3 = kron(f, A.alpha.m, A.alpha.m, A.alpha.m)
    mu_alpha, alpha_mu = _product_alpha_matrices(A)

    def cols(mat, k):
        # column j of the matrix becomes the entry for basis tuple j
        return mat.T.reshape((n,) * k + (mat.shape[0],))

    parts = []
    lhs, rhs = ein(f, "ab,bc->ac", a2, T.T), ein(f, "ab,bc->ac", T.T, a2)
    parts.append(CheckReport("twist-commutes-T", f, compare("twist-commutes-T", cols(lhs, 2), cols(rhs, 2), 2)))
    lhs, rhs = ein(f, "ab,bc->ac", a3, T.tau), ein(f, "ab,bc->ac", T.tau, a3)
    parts.append(CheckReport("twist-commutes-tau", f, compare("twist-commutes-tau", cols(lhs, 3), cols(rhs, 3), 3)))

    T_id = kron(f, T.T, I)
    id_T = kron(f, I, T.T)
    lhs = ein(f, "ab,bc,cd->ad", T.T, mu_alpha, T_id)
    rhs = ein(f, "ab,bc->ac", mu_alpha, T.tau)
    parts.append(CheckReport("pentagon-right", f, compare("pentagon-right", cols(lhs, 3), cols(rhs, 3), 3)))
    lhs = ein(f, "ab,bc,cd->ad", T.T, alpha_mu, id_T)
    rhs = ein(f, "ab,bc->ac", alpha_mu, T.tau)
    parts.append(CheckReport("pentagon-left", f, compare("pentagon-left", cols(lhs, 3), cols(rhs, 3), 3)))
    return CheckReport.combine("weak-pseudotwistor", f, parts)


def product_from_twistor(A: HomAlgebra, T: TwistorMap) -> HomAlgebra:
    """The Hom-associative algebra (A, alpha, mu o T)."""
    report = check_weak_pseudotwistor(A, T)
    if not report.passed:
        raise NotPseudotwistor("T is not a weak pseudotwistor with the given companion", report)
    n, f = A.dim, A.field
    twisted = ein(f, "abo,abij->ijo", A.mu.c, T.T.reshape(n, n, n, n))
    out = A.with_product(BilinearMap(f, twisted, trusted=True))
    post = check_hom_algebra(out)
    if not post.passed:
        raise PostconditionError("mu o T is not Hom-associative", post)
    return out


def require_rb_system(sys: RotaBaxterSystem) -> None:
    report = check_rb_system(sys.base, sys.R, sys.S)
    if not report.passed:
        raise InvalidInput("not a Rota-Baxter system")
