"""Covariant Hom-bialgebras, their duals, and the quasitriangular theory.

Coproduct-like maps ``X : A -> A(x)A`` are rank-3 arrays ``X[i, p, q]``; the
tensors on A(x)A(x)A that appear in the Yang-Baxter calculus are rank-3
arrays ``t[x, y, z]``.  Dual objects are stored as transposed coefficient
arrays in the dual basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import InvalidInput, NotMorphism, NotYBPair, PostconditionError
from .field import FieldSpec
from .structures import (
    CheckReport,
    HomAlgebra,
    HomCoalgebra,
    _same_dim,
    check_algebra_morphism,
    check_hom_algebra,
    check_hom_coalgebra,
    check_infinitesimal_compat,
    check_twist_commutes,
    compare,
    hom_coassociativity_sides,
)
from .tensor import (
    BilinearMap,
    Coproduct,
    LinearMap,
    Tensor2,
    Tensor3,
    coproduct_after_product,
    ein,
    kron,
    left_twisted_term,
    right_twisted_term,
)
from .yang_baxter import YangBaxterPair, check_yb_pair, require_invariant, yb_expressions

# -- bimodules -----------------------------------------------------------------


@dataclass(eq=False)
class BimoduleActions:
    """An A-bimodule (M, beta) by structure constants.

    ``left[i, u, w]``: coefficient of m_w in ``e_i . m_u``;
    ``right[u, i, w]``: coefficient of m_w in ``m_u . e_i``;
    ``beta`` is an m x m matrix in the column convention.
    """

    field: FieldSpec
    beta: np.ndarray
    left: np.ndarray
    right: np.ndarray

    @property
    def dim(self) -> int:
        return self.beta.shape[0]


def _power_action(A: HomAlgebra, k: int, side: str) -> np.ndarray:
    f, n = A.field, A.dim
    c, al = A.mu.c, A.alpha.m
    m = n**k
    out = f.zeros((n, m, m))
    for i in range(n):
        if k == 1:
            # adjoint bimodule: plain left/right multiplication
            F = c[i].T.copy() if side == "left" else c[:, i, :].T.copy()
        elif side == "left":
            # a . (b1 (x) ... (x) bk) = alpha(a) b1 (x) alpha(b2) (x) ... (x) alpha(bk)
            F = kron(f, ein(f, "l,lbo->ob", al[:, i], c), *([al] * (k - 1)))
        else:
            # (b1 (x) ... (x) bk) . a = alpha(b1) (x) ... (x) alpha(b_{k-1}) (x) bk alpha(a)
            F = kron(f, *([al] * (k - 1)), ein(f, "l,blo->ob", al[:, i], c))
        out[i] = F.T  # out[i, u, w] = F[w, u]
    return out


def tensor_power_bimodule(A: HomAlgebra, k: int) -> BimoduleActions:
    """A^{(x)k} as an A-bimodule with beta = alpha^{(x)k} (k = 1: the adjoint bimodule)."""
    if k < 1:
        raise ValueError("tensor power must be at least 1")
    f = A.field
    beta = kron(f, *([A.alpha.m] * k))
    left = _power_action(A, k, "left")
    right = _power_action(A, k, "right").transpose(1, 0, 2).copy()
    return BimoduleActions(f, beta, left, right)


def check_bimodule(A: HomAlgebra, M: BimoduleActions) -> CheckReport:
    """beta-compatibility of both actions and the three bimodule identities."""
    f = A.field
    c, al, beta, L, R = A.mu.c, A.alpha.m, M.beta, M.left, M.right
    parts = []

    def add(name, lhs, rhs, nargs):
        parts.append(CheckReport(name, f, compare(name, lhs, rhs, nargs)))

    # beta(a . m) = alpha(a) . beta(m), indexed [i, u, w]
    add("beta-left", ein(f, "iuv,wv->iuw", L, beta), ein(f, "ai,vu,avw->iuw", al, beta, L), 2)
    add("beta-right", ein(f, "uiv,wv->uiw", R, beta), ein(f, "vu,ai,vaw->uiw", beta, al, R), 2)
    # (a b) . beta(m) = alpha(a) . (b . m), indexed [i, j, u, w]
    add("bimodule-left",
        ein(f, "ijm,vu,mvw->ijuw", c, beta, L),
        ein(f, "ai,juv,avw->ijuw", al, L, L), 3)
    # (a . m) . alpha(b) = alpha(a) . (m . b), indexed [i, u, j, w]
    add("bimodule-middle",
        ein(f, "iuv,bj,vbw->iujw", L, al, R),
        ein(f, "ai,ujv,avw->iujw", al, R, L), 3)
    # (m . a) . alpha(b) = beta(m) . (a b), indexed [u, i, j, w]
    add("bimodule-right",
        ein(f, "uiv,bj,vbw->uijw", R, al, R),
        ein(f, "vu,ijm,vmw->uijw", beta, c, R), 3)
    return CheckReport.combine("bimodule", f, parts)


def act_left(M: BimoduleActions, a: np.ndarray, t: np.ndarray) -> np.ndarray:
    """``a . t`` for a coordinate vector a and an element t of M (any tensor shape)."""
    f = M.field
    flat = ein(f, "i,u,iuw->w", a, t.reshape(-1), M.left)
    return flat.reshape(t.shape)


def act_right(M: BimoduleActions, t: np.ndarray, a: np.ndarray) -> np.ndarray:
    f = M.field
    flat = ein(f, "u,i,uiw->w", t.reshape(-1), a, M.right)
    return flat.reshape(t.shape)


def act_left_all(M: BimoduleActions, t: np.ndarray) -> np.ndarray:
    """``e_a . t`` for every basis vector, stacked on a new leading axis."""
    out = ein(M.field, "u,iuw->iw", t.reshape(-1), M.left)
    return out.reshape((M.left.shape[0],) + t.shape)


def act_right_all(M: BimoduleActions, t: np.ndarray) -> np.ndarray:
    out = ein(M.field, "u,uiw->iw", t.reshape(-1), M.right)
    return out.reshape((M.right.shape[1],) + t.shape)


# -- derivations ---------------------------------------------------------------


def check_derivation(A: HomAlgebra, d: Coproduct, name: str = "derivation") -> CheckReport:
    """``alpha^{(x)2} d = d alpha`` and ``d mu = (mu (x) alpha)(alpha (x) d) + (alpha (x) mu)(d (x) alpha)``."""
    _same_dim(A.mu, d)
    f = A.field
    lhs = coproduct_after_product(A.mu, d)
    rhs = f.reduce(left_twisted_term(A.mu, A.alpha, d) + right_twisted_term(A.mu, A.alpha, d))
    parts = [
        check_twist_commutes(d, A.alpha, f"{name}-commutes-alpha"),
        CheckReport(f"{name}-rule", f, compare(f"{name}-rule", lhs, rhs, 2)),
    ]
    return CheckReport.combine(name, f, parts)


def check_covariant_derivation(A: HomAlgebra, D: Coproduct, delta1: Coproduct, delta2: Coproduct) -> CheckReport:
    _same_dim(A.mu, D, delta1, delta2)
    f = A.field
    lhs = coproduct_after_product(A.mu, D)
    eq1 = f.reduce(left_twisted_term(A.mu, A.alpha, delta1) + right_twisted_term(A.mu, A.alpha, D))
    eq2 = f.reduce(left_twisted_term(A.mu, A.alpha, D) + right_twisted_term(A.mu, A.alpha, delta2))
    parts = [
        check_twist_commutes(D, A.alpha, "covariant-commutes-alpha"),
        CheckReport("covariant-1", f, compare("covariant-1", lhs, eq1, 2)),
        CheckReport("covariant-2", f, compare("covariant-2", lhs, eq2, 2)),
    ]
    return CheckReport.combine("covariant-derivation", f, parts)


# -- covariant Hom-bialgebras ---------------------------------------------------


@dataclass(eq=False)
class CovariantHomBialgebra:
    base: HomAlgebra
    delta: Coproduct
    delta1: Coproduct
    delta2: Coproduct

    def __post_init__(self):
        _same_dim(self.base.mu, self.delta, self.delta1, self.delta2)

    @property
    def field(self) -> FieldSpec:
        return self.base.field

    @property
    def dim(self) -> int:
        return self.base.dim

    @classmethod
    def zero(cls, A: HomAlgebra) -> CovariantHomBialgebra:
        z = Coproduct.zero(A.field, A.dim)
        return cls(A, z, z, z)


def check_covariant_hom_bialgebra(B: CovariantHomBialgebra, multiplicative: bool = True) -> CheckReport:
    """Items (i)-(iv), each reported as a separate part."""
    A = B.base
    f = A.field
    items = [
        CheckReport.combine("item-i-hom-algebra", f, [check_hom_algebra(A, multiplicative)]),
        CheckReport.combine("item-ii-hom-coalgebra", f,
                            [check_hom_coalgebra(HomCoalgebra(f, B.delta, A.alpha), multiplicative)]),
        CheckReport.combine("item-iii-derivations", f, [
            check_derivation(A, B.delta1, "delta1-derivation"),
            check_derivation(A, B.delta2, "delta2-derivation"),
        ]),
        CheckReport.combine("item-iv-covariant", f,
                            [check_covariant_derivation(A, B.delta, B.delta1, B.delta2)]),
    ]
    return CheckReport.combine("covariant-hom-bialgebra", f, items)


def _compose_after(X: Coproduct, phi: LinearMap) -> Coproduct:
    """``X o phi`` as a coproduct array."""
    return Coproduct(X.field, ein(X.field, "ji,jpq->ipq", phi.m, X.d), trusted=True)


def check_coalgebra_map(X: Coproduct, phi: LinearMap, name: str) -> CheckReport:
    """``(phi (x) phi) o X = X o phi`` on basis vectors."""
    return check_twist_commutes(X, phi, name)


def induce_covariant_by_composition(B: CovariantHomBialgebra, phi: LinearMap) -> CovariantHomBialgebra:
    """``(A, phi, phi mu, Delta phi, delta1 phi, delta2 phi)`` from a covariant bialgebra (alpha = id)."""
    A = B.base
    f = A.field
    _same_dim(A.mu, phi)
    if not A.alpha.is_identity():
        raise InvalidInput("induction by composition needs a covariant bialgebra with alpha = id")
    base_report = check_covariant_hom_bialgebra(B)
    if not base_report.passed:
        raise InvalidInput("input is not a covariant bialgebra")
    morph = check_algebra_morphism(A.mu, phi)
    if not morph.passed:
        raise NotMorphism(f"phi is not an algebra morphism at basis pair {morph.first.at}", morph)
    for label, X in (("coproduct", B.delta), ("delta1", B.delta1), ("delta2", B.delta2)):
        rep = check_coalgebra_map(X, phi, f"{label}-morphism")
        if not rep.passed:
            raise NotMorphism(f"(phi (x) phi) o {label} != {label} o phi at basis vector {rep.first.at}", rep)
    mu = BilinearMap(f, ein(f, "ijm,om->ijo", A.mu.c, phi.m), trusted=True)
    out = CovariantHomBialgebra(
        HomAlgebra(f, mu, phi, A.basis),
        _compose_after(B.delta, phi),
        _compose_after(B.delta1, phi),
        _compose_after(B.delta2, phi),
    )
    post = check_covariant_hom_bialgebra(out)
    if not post.passed:
        raise PostconditionError("induced tuple is not a covariant Hom-bialgebra", post)
    return out


# -- quasitriangular construction ---------------------------------------------


def _ar_all(A: HomAlgebra, t: Tensor2) -> np.ndarray:
    """``e_i t = e_i t(1) (x) alpha(t(2))`` for every basis vector, as [i, p, q]."""
    return ein(A.field, "jk,ijp,qk->ipq", t.t, A.mu.c, A.alpha.m)


def _ra_all(A: HomAlgebra, t: Tensor2) -> np.ndarray:
    """``t e_i = alpha(t(1)) (x) t(2) e_i`` for every basis vector, as [i, p, q]."""
    return ein(A.field, "jk,pj,kiq->ipq", t.t, A.alpha.m, A.mu.c)


def lr_tensor_products(a, t: Tensor2, A: HomAlgebra) -> tuple[Tensor2, Tensor2]:
    """``(a t, t a)`` for a coordinate vector a."""
    f = A.field
    a = f.array(a)
    _same_dim(A.mu, t)
    if a.shape != (A.dim,):
        raise InvalidInput(f"vector of length {A.dim} expected")
    at = ein(f, "i,ipq->pq", a, _ar_all(A, t))
    ta = ein(f, "i,ipq->pq", a, _ra_all(A, t))
    return Tensor2(f, at, trusted=True), Tensor2(f, ta, trusted=True)


def quasitriangular_maps(A: HomAlgebra, r: Tensor2, s: Tensor2) -> tuple[Coproduct, Coproduct, Coproduct]:
    """``Delta'(a) = ar - sa``, ``delta_r(a) = ar - ra``, ``delta_s(a) = as - sa``."""
    require_invariant(A, r=r, s=s)
    f = A.field
    ar, ra = _ar_all(A, r), _ra_all(A, r)
    as_, sa = _ar_all(A, s), _ra_all(A, s)

    def cop(x):
        return Coproduct(f, f.reduce(x), trusted=True)

    maps = cop(ar - sa), cop(ar - ra), cop(as_ - sa)
    for label, d in zip(("delta_r", "delta_s"), maps[1:]):
        post = check_derivation(A, d, label)
        if not post.passed:
            raise PostconditionError(f"{label} is not a derivation", post)
    return maps


def coassoc_defect(alpha: LinearMap, delta: Coproduct) -> np.ndarray:
    """``(Delta (x) alpha) Delta (a) - (alpha (x) Delta) Delta (a)`` per basis vector, [a, x, y, z]."""
    _same_dim(alpha, delta)
    lhs, rhs = hom_coassociativity_sides(delta, alpha)
    return alpha.field.reduce(lhs - rhs)


def quasitriangular_sides(A: HomAlgebra, r: Tensor2, s: Tensor2) -> tuple[np.ndarray, np.ndarray]:
    """``a . (sum_r)`` and ``(sum_s) . a`` for every basis vector a, via the A^{(x)3} actions."""
    M3 = tensor_power_bimodule(A, 3)
    sigma_r, sigma_s = yb_expressions(A, r, s)
    return act_left_all(M3, sigma_r.t), act_right_all(M3, sigma_s.t)


def check_quasitriangular_condition(A: HomAlgebra, r: Tensor2, s: Tensor2) -> CheckReport:
    """The coassociativity criterion for Delta', plus the unconditional defect identity."""
    require_invariant(A, r=r, s=s)
    f = A.field
    lhs, rhs = quasitriangular_sides(A, r, s)
    delta_p, _, _ = quasitriangular_maps(A, r, s)
    defect = coassoc_defect(A.alpha, delta_p)
    identity = compare("defect-identity", defect, f.reduce(lhs - rhs), 1)
    if identity:
        raise PostconditionError(
            "coassociativity defect differs from a.(sum_r) - (sum_s).a",
            CheckReport("defect-identity", f, identity),
        )
    return CheckReport("quasitriangular-condition", f, compare("quasitriangular-condition", lhs, rhs, 1))


def build_quasitriangular(pair: YangBaxterPair) -> CovariantHomBialgebra:
    A = pair.base
    report = check_yb_pair(A, pair.r, pair.s)
    if not report.passed:
        raise NotYBPair("(r, s) is not a Hom-Yang-Baxter pair", report)
    B = CovariantHomBialgebra(A, *quasitriangular_maps(A, pair.r, pair.s))
    post = check_covariant_hom_bialgebra(B)
    if not post.passed:
        raise PostconditionError("quasitriangular tuple is not a covariant Hom-bialgebra", post)
    return B


# -- characterization ------------------------------------------------------------


@dataclass
class Characterization:
    yb_pair: CheckReport
    tensor_form: CheckReport
    diagrams: CheckReport

    @property
    def verdicts(self) -> tuple[bool, bool, bool]:
        return self.yb_pair.passed, self.tensor_form.passed, self.diagrams.passed

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts)) == 1


def alpha_delta_tensor(alpha: LinearMap, delta: Coproduct, t: Tensor2) -> np.ndarray:
    """``(alpha (x) Delta)(t)`` in A(x)A(x)A."""
    return ein(alpha.field, "ij,xi,jyz->xyz", t.t, alpha.m, delta.d)


def delta_alpha_tensor(alpha: LinearMap, delta: Coproduct, t: Tensor2) -> np.ndarray:
    """``(Delta (x) alpha)(t)`` in A(x)A(x)A."""
    return ein(alpha.field, "ij,ixy,zj->xyz", t.t, delta.d, alpha.m)


def characterization(A: HomAlgebra, r: Tensor2, s: Tensor2, strict: bool = True) -> Characterization:
    """The three equivalent conditions, each evaluated independently.

    With ``strict`` a disagreement between them raises PostconditionError.
    """
    require_invariant(A, r=r, s=s)
    f = A.field
    al = A.alpha.m
    c = A.mu.c
    delta_p, _, _ = quasitriangular_maps(A, r, s)

    first = check_yb_pair(A, r, s)

    from .yang_baxter import triple_product

    r13r12 = triple_product("r13_s12", r, r, A).t
    s23s13 = triple_product("r23_s13", s, s, A).t
    second = CheckReport.combine("tensor-form", f, [
        CheckReport("alpha-delta-r", f,
                    compare("alpha-delta-r", alpha_delta_tensor(A.alpha, delta_p, r), r13r12, 3)),
        CheckReport("delta-alpha-s", f,
                    compare("delta-alpha-s", delta_alpha_tensor(A.alpha, delta_p, s), f.reduce(-s23s13), 3)),
    ])

    # maps A* -> A as matrices [output basis, dual basis index]
    rho1 = ein(f, "ij,pj->ip", r.t, al)  # r(1) <phi, alpha(r(2))>
    rho2 = ein(f, "oi,iq->oq", al, r.t)  # alpha(r(1)) <phi, r(2)>
    lam1 = ein(f, "ij,pi->jp", s.t, al)  # <phi, alpha(s(1))> s(2)
    lam2 = ein(f, "oj,pj->op", al, s.t)  # <phi, s(1)> alpha(s(2))
    # evaluated on e^p (x) e^q, indexed [p, q, o]; mu^op(x (x) y) = y x
    d1_lhs = ein(f, "xq,yp,xyo->pqo", rho1, rho1, c)
    d1_rhs = ein(f, "apq,oa->pqo", delta_p.d, rho2)
    d2_lhs = f.reduce(-ein(f, "xq,yp,xyo->pqo", lam1, lam1, c))
    d2_rhs = ein(f, "apq,oa->pqo", delta_p.d, lam2)
    third = CheckReport.combine("dual-diagrams", f, [
        CheckReport("diagram-rho", f, compare("diagram-rho", d1_lhs, d1_rhs, 2)),
        CheckReport("diagram-lambda", f, compare("diagram-lambda", d2_lhs, d2_rhs, 2)),
    ])
    out = Characterization(first, second, third)
    if strict and not out.consistent:
        raise PostconditionError(f"characterization verdicts disagree: {out.verdicts}")
    return out


# -- coalgebra side and duality -------------------------------------------------


def _coder_terms(C: HomCoalgebra, X: BilinearMap) -> tuple[np.ndarray, np.ndarray]:
    """``(alpha (x) X)(Delta (x) alpha)`` and ``(X (x) alpha)(alpha (x) Delta)`` on basis pairs."""
    f = C.field
    d, al = C.delta.d, C.alpha.m
    first = ein(f, "iuv,xu,lj,vly->ijxy", d, al, al, X.c)
    second = ein(f, "li,juv,lux,yv->ijxy", al, d, X.c, al)
    return first, second


def check_coderivation(C: HomCoalgebra, partial: BilinearMap, name: str = "coderivation") -> CheckReport:
    _same_dim(C.delta, partial)
    f = C.field
    lhs = ein(f, "ijm,mxy->ijxy", partial.c, C.delta.d)
    first, second = _coder_terms(C, partial)
    commute_l = ein(f, "ijm,om->ijo", partial.c, C.alpha.m)
    commute_r = ein(f, "ai,bj,abo->ijo", C.alpha.m, C.alpha.m, partial.c)
    parts = [
        CheckReport(f"{name}-commutes-alpha", f, compare(f"{name}-commutes-alpha", commute_l, commute_r, 2)),
        CheckReport(f"{name}-rule", f, compare(f"{name}-rule", lhs, f.reduce(first + second), 2)),
    ]
    return CheckReport.combine(name, f, parts)


def check_covariant_coderivation(C: HomCoalgebra, mu: BilinearMap, partial1: BilinearMap,
                                 partial2: BilinearMap) -> CheckReport:
    _same_dim(C.delta, mu, partial1, partial2)
    f = C.field
    lhs = ein(f, "ijm,mxy->ijxy", mu.c, C.delta.d)
    p1_first, _ = _coder_terms(C, partial1)
    _, p2_second = _coder_terms(C, partial2)
    mu_first, mu_second = _coder_terms(C, mu)
    parts = [
        CheckReport("covariant-co-1", f, compare("covariant-co-1", lhs, f.reduce(p1_first + mu_second), 2)),
        CheckReport("covariant-co-2", f, compare("covariant-co-2", lhs, f.reduce(mu_first + p2_second), 2)),
    ]
    return CheckReport.combine("covariant-coderivation", f, parts)


def tensor_square_coactions(C: HomCoalgebra) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """beta, left and right coactions of the bicomodule C(x)C.

    ``left[m, x, w]``: coefficient of e_x (x) m_w in the left coaction of m;
    ``right[m, w, z]``: coefficient of m_w (x) e_z in the right coaction of m.
    """
    f, n = C.field, C.dim
    d, al = C.delta.d, C.alpha.m
    beta = kron(f, al, al)
    # left(b (x) c) = alpha(b(1)) (x) b(2) (x) alpha(c)
    left = ein(f, "buv,xu,zc->bcxvz", d, al, al).reshape(n * n, n, n * n)
    # right(b (x) c) = alpha(b) (x) c(1) (x) alpha(c(2))
    right = ein(f, "yb,cuw,zw->bcyuz", al, d, al).reshape(n * n, n * n, n)
    return beta, left, right


def check_bicomodule(C: HomCoalgebra, beta: np.ndarray, left: np.ndarray, right: np.ndarray,
                     name: str = "bicomodule") -> CheckReport:
    """The two compatibility conditions and three coassociativity axioms of a bicomodule."""
    f = C.field
    d, al = C.delta.d, C.alpha.m
    parts = []

    def add(label, lhs, rhs):
        parts.append(CheckReport(label, f, compare(label, lhs, rhs, 1)))

    # (alpha (x) beta) left = left beta
    add("left-compat", ein(f, "mxw,ax,bw->mab", left, al, beta), ein(f, "km,kab->mab", beta, left))
    add("right-compat", ein(f, "mwz,aw,bz->mab", right, beta, al), ein(f, "km,kab->mab", beta, right))
    # (alpha (x) left) left = (Delta (x) beta) left
    add("left-coassoc",
        ein(f, "mxw,ax,wyv->mayv", left, al, left),
        ein(f, "mxw,xay,vw->mayv", left, d, beta))
    # (alpha (x) right) left = (left (x) alpha) right
    add("middle-coassoc",
        ein(f, "mxw,ax,wvz->mavz", left, al, right),
        ein(f, "mwz,wav,bz->mavb", right, left, al))
    # (beta (x) Delta) right = (right (x) alpha) right
    add("right-coassoc",
        ein(f, "mwz,vw,zab->mvab", right, beta, d),
        ein(f, "mwz,wva,bz->mvab", right, right, al))
    return CheckReport.combine(name, f, parts)


def check_tensor_square_bicomodule(C: HomCoalgebra) -> CheckReport:
    return check_bicomodule(C, *tensor_square_coactions(C), name="tensor-square-bicomodule")


@dataclass(eq=False)
class DualCovariantHomBialgebra:
    """``(A*, alpha*, Delta*, mu*, delta1*, delta2*)`` in the dual basis."""

    field: FieldSpec
    alpha: LinearMap
    product: BilinearMap  # Delta*
    comul: Coproduct  # mu*
    partial1: BilinearMap  # delta1*
    partial2: BilinearMap  # delta2*

    @property
    def dim(self) -> int:
        return self.alpha.dim

    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.field, self.product, self.alpha)

    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.field, self.comul, self.alpha)


def dual_product(X: Coproduct) -> BilinearMap:
    """``<X*(phi (x) psi), a> = <phi (x) psi, X(a)>``: c*[i, j, k] = X[k, i, j]."""
    return BilinearMap(X.field, X.d.transpose(1, 2, 0).copy(), trusted=True)


def dual_coproduct(mu: BilinearMap) -> Coproduct:
    """``<mu*(phi), a (x) b> = <phi, a b>``: d*[i, j, k] = c[j, k, i]."""
    return Coproduct(mu.field, mu.c.transpose(2, 0, 1).copy(), trusted=True)


def check_dual_covariant_hom_bialgebra(D: DualCovariantHomBialgebra, multiplicative: bool = True) -> CheckReport:
    f = D.field
    C = D.coalgebra()
    parts = [
        CheckReport.combine("dual-hom-algebra", f, [check_hom_algebra(D.algebra(), multiplicative)]),
        CheckReport.combine("dual-hom-coalgebra", f, [check_hom_coalgebra(C, multiplicative)]),
        check_tensor_square_bicomodule(C),
        check_coderivation(C, D.partial1, "partial1-coderivation"),
        check_coderivation(C, D.partial2, "partial2-coderivation"),
        check_covariant_coderivation(C, D.product, D.partial1, D.partial2),
    ]
    return CheckReport.combine("dual-covariant-hom-bialgebra", f, parts)


def dualize(B: CovariantHomBialgebra) -> DualCovariantHomBialgebra:
    A = B.base
    report = check_covariant_hom_bialgebra(B)
    if not report.passed:
        raise InvalidInput("dualization needs a valid covariant Hom-bialgebra")
    f = A.field
    D = DualCovariantHomBialgebra(
        f,
        A.alpha.transpose(),
        dual_product(B.delta),
        dual_coproduct(A.mu),
        dual_product(B.delta1),
        dual_product(B.delta2),
    )
    post = check_dual_covariant_hom_bialgebra(D)
    if not post.passed:
        raise PostconditionError("dual tuple is not a dual covariant Hom-bialgebra", post)
    return D


def undualize(D: DualCovariantHomBialgebra, basis=()) -> CovariantHomBialgebra:
    """Transpose the index data back; the inverse of :func:`dualize` on coefficient arrays."""
    f = D.field
    mu = BilinearMap(f, D.comul.d.transpose(1, 2, 0).copy(), trusted=True)

    def back(P):
        return Coproduct(f, P.c.transpose(2, 0, 1).copy(), trusted=True)

    A = HomAlgebra(f, mu, D.alpha.transpose(), tuple(basis))
    return CovariantHomBialgebra(A, back(D.product), back(D.partial1), back(D.partial2))


# -- perturbation --------------------------------------------------------------

MIXED_KINDS = ("d12_r23", "s12_d23", "s23_d13", "d13_r12")

_MIXED_SUBSCRIPTS = {
    # alpha(e_u) (x) (e_v e_p) (x) alpha(e_q)
    "d12_r23": "uv,pq,xu,vpy,zq->xyz",
    # alpha(e_p) (x) (e_q e_u) (x) alpha(e_v)
    "s12_d23": "uv,pq,xp,quy,zv->xyz",
    # alpha(e_u) (x) alpha(e_p) (x) (e_q e_v)
    "s23_d13": "uv,pq,xu,yp,qvz->xyz",
    # (e_u e_p) (x) alpha(e_q) (x) alpha(e_v)
    "d13_r12": "uv,pq,upx,yq,zv->xyz",
}


def _mixed_operands(kind, dval, t, A):
    al, c = A.alpha.m, A.mu.c
    return {
        "d12_r23": (dval, t, al, c, al),
        "s12_d23": (dval, t, al, c, al),
        "s23_d13": (dval, t, al, al, c),
        "d13_r12": (dval, t, c, al, al),
    }[kind]


def mixed_triple_product(kind: str, dval: Tensor2, t: Tensor2, A: HomAlgebra) -> Tensor3:
    if kind not in _MIXED_SUBSCRIPTS:
        raise ValueError(f"unknown mixed product {kind!r}; expected one of {MIXED_KINDS}")
    _same_dim(A.mu, dval, t)
    f = A.field
    arr = ein(f, _MIXED_SUBSCRIPTS[kind], *_mixed_operands(kind, dval.t, t.t, A))
    return Tensor3(f, arr, trusted=True)


def _mixed_all(kind: str, X: Coproduct, t: Tensor2, A: HomAlgebra) -> np.ndarray:
    """The mixed product with dval = X(e_a) for every basis vector a, as [a, x, y, z]."""
    subs = _MIXED_SUBSCRIPTS[kind]
    ins, out = subs.split("->")
    first, rest = ins.split(",", 1)
    f = A.field
    return ein(f, f"a{first},{rest}->a{out}", X.d, *_mixed_operands(kind, None, t.t, A)[1:])


def alpha_delta_minus(alpha: LinearMap, delta: Coproduct, t: Tensor2) -> np.ndarray:
    """``(alpha (x) Delta)^-(t) = (alpha (x) Delta)(t) - (Delta (x) alpha)(t)``."""
    return alpha.field.reduce(alpha_delta_tensor(alpha, delta, t) - delta_alpha_tensor(alpha, delta, t))


@dataclass
class PerturbationReport:
    """Verdicts about perturbing B by (r, s).

    ``condition``: the stated criterion per basis vector; ``direct``: the full
    axiom check of the perturbed tuple; ``corrected``: the criterion with the
    two extra terms that vanish when Delta = delta1 = delta2.
    """

    condition: CheckReport
    direct: CheckReport
    corrected: CheckReport
    perturbed: CovariantHomBialgebra = dc_field(repr=False)

    @property
    def name(self) -> str:
        return "perturbation"

    @property
    def passed(self) -> bool:
        return self.condition.passed

    @property
    def witnesses(self):
        return self.condition.witnesses

    @property
    def agree(self) -> bool:
        return self.condition.passed == self.direct.passed

    @property
    def corrected_agree(self) -> bool:
        return self.corrected.passed == self.direct.passed


def perturb(B: CovariantHomBialgebra, r: Tensor2, s: Tensor2) -> CovariantHomBialgebra:
    """``(A, alpha, mu, Delta + Delta', delta1 + delta_r, delta2 + delta_s)``."""
    dp, dr, ds = quasitriangular_maps(B.base, r, s)
    return CovariantHomBialgebra(B.base, B.delta + dp, B.delta1 + dr, B.delta2 + ds)


def check_perturbation(B: CovariantHomBialgebra, r: Tensor2, s: Tensor2) -> PerturbationReport:
    A = B.base
    require_invariant(A, r=r, s=s)
    f = A.field
    M3 = tensor_power_bimodule(A, 3)
    sigma_r, sigma_s = yb_expressions(A, r, s)
    x_r = f.reduce(alpha_delta_minus(A.alpha, B.delta, r) - sigma_r.t)
    x_s = f.reduce(alpha_delta_minus(A.alpha, B.delta, s) - sigma_s.t)
    lhs = f.reduce(act_left_all(M3, x_r) - act_right_all(M3, x_s))
    rhs = f.reduce(_mixed_all("s23_d13", B.delta, s, A) + _mixed_all("d13_r12", B.delta, r, A))
    condition = CheckReport("perturbation-condition", f, compare("perturbation-condition", lhs, rhs, 1))

    # the two terms that cancel only when Delta coincides with delta1 and delta2
    gap1 = Coproduct(f, f.reduce(B.delta.d - B.delta1.d), trusted=True)
    gap2 = Coproduct(f, f.reduce(B.delta.d - B.delta2.d), trusted=True)
    rhs_fixed = f.reduce(rhs - _mixed_all("s12_d23", gap1, s, A) - _mixed_all("d12_r23", gap2, r, A))
    corrected = CheckReport("perturbation-corrected", f, compare("perturbation-corrected", lhs, rhs_fixed, 1))

    P = perturb(B, r, s)
    direct = check_covariant_hom_bialgebra(P)
    return PerturbationReport(condition, direct, corrected, P)


def check_infinitesimal_hom_bialgebra(A: HomAlgebra, delta: Coproduct) -> CheckReport:
    """Hom-algebra, Hom-coalgebra and the infinitesimal compatibility together."""
    f = A.field
    return CheckReport.combine("infinitesimal-hom-bialgebra", f, [
        check_hom_algebra(A),
        check_hom_coalgebra(HomCoalgebra(f, delta, A.alpha)),
        check_infinitesimal_compat(A, delta),
    ])
