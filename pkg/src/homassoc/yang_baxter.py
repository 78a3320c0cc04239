"""Hom-Yang-Baxter pairs and (alpha^n)-Rota-Baxter systems.

Tensors r, s in A(x)A are coefficient arrays; the suppressed Sweedler sums
``r = r(1) (x) r(2)`` become sums over all index pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSystem, NotInvariant, NotYBPair, PostconditionError
from .rota_baxter import (
    HomDendriform,
    HomPreLie,
    _split_products,
    check_commutes,
    check_hom_dendriform,
    check_hom_prelie,
)
from .structures import CheckReport, HomAlgebra, _same_dim, check_hom_algebra, compare, compare_zero
from .tensor import LinearMap, Tensor2, Tensor3, ein

TRIPLE_KINDS = ("r13_s12", "r12_s23", "r23_s13")

# u = sum u^{ij} e_i (x) e_j, v = sum v^{kl} e_k (x) e_l; output indexed [a, b, c]
_TRIPLE_SUBSCRIPTS = {
    # (e_i . e_k) (x) alpha(e_l) (x) alpha(e_j)
    "r13_s12": ("ij,kl,ika,bl,cj->abc", ("u", "v", "c", "alpha", "alpha")),
    # alpha(e_i) (x) (e_j . e_k) (x) alpha(e_l)
    "r12_s23": ("ij,kl,ai,jkb,cl->abc", ("u", "v", "alpha", "c", "alpha")),
    # alpha(e_k) (x) alpha(e_i) (x) (e_j . e_l)
    "r23_s13": ("ij,kl,ak,bi,jlc->abc", ("u", "v", "alpha", "alpha", "c")),
}


@dataclass(eq=False)
class YangBaxterPair:
    base: HomAlgebra
    r: Tensor2
    s: Tensor2

    def __post_init__(self):
        _same_dim(self.base.mu, self.r, self.s)


@dataclass(eq=False)
class AlphaNRBSystem:
    base: HomAlgebra
    R: LinearMap
    S: LinearMap
    n: int

    def __post_init__(self):
        _same_dim(self.base.mu, self.R, self.S)
        if self.n < 0:
            raise ValueError("n must be non-negative")


def triple_product(kind: str, u: Tensor2, v: Tensor2, A: HomAlgebra) -> Tensor3:
    """One of the three triple products, by its explicit coordinate formula."""
    try:
        subs, roles = _TRIPLE_SUBSCRIPTS[kind]
    except KeyError:
        raise ValueError(f"unknown triple product {kind!r}; expected one of {TRIPLE_KINDS}") from None
    _same_dim(A.mu, u, v)
    data = {"u": u.t, "v": v.t, "c": A.mu.c, "alpha": A.alpha.m}
    return Tensor3(A.field, ein(A.field, subs, *(data[k] for k in roles)), trusted=True)


def yb_expressions(A: HomAlgebra, r: Tensor2, s: Tensor2) -> tuple[Tensor3, Tensor3]:
    """``r13r12 - r12r23 + s23r13`` and ``s13r12 - s12s23 + s23s13``."""
    sigma_r = (
        triple_product("r13_s12", r, r, A)
        - triple_product("r12_s23", r, r, A)
        + triple_product("r23_s13", s, r, A)
    )
    sigma_s = (
        triple_product("r13_s12", s, r, A)
        - triple_product("r12_s23", s, s, A)
        + triple_product("r23_s13", s, s, A)
    )
    return sigma_r, sigma_s


def check_invariant(A: HomAlgebra, t: Tensor2, name: str) -> CheckReport:
    """``(alpha (x) alpha)(t) = t``; witnesses are coordinate positions."""
    _same_dim(A.alpha, t)
    image = ein(A.field, "ai,bj,ij->ab", A.alpha.m, A.alpha.m, t.t)
    return CheckReport(name, A.field, compare(name, image, t.t, 2))


def require_invariant(A: HomAlgebra, **tensors: Tensor2) -> None:
    for label, t in tensors.items():
        report = check_invariant(A, t, f"{label}-invariance")
        if not report.passed:
            raise NotInvariant(f"{label} is not alpha-invariant at coordinate {report.first.at}", report)


def check_yb_pair(A: HomAlgebra, r: Tensor2, s: Tensor2) -> CheckReport:
    _same_dim(A.mu, r, s)
    sigma_r, sigma_s = yb_expressions(A, r, s)
    parts = [
        check_invariant(A, r, "r-invariance"),
        check_invariant(A, s, "s-invariance"),
        CheckReport("yb-equation-r", A.field, compare_zero("yb-equation-r", sigma_r.t, A.field)),
        CheckReport("yb-equation-s", A.field, compare_zero("yb-equation-s", sigma_s.t, A.field)),
    ]
    return CheckReport.combine("yb-pair", A.field, parts)


def check_alpha_n_rbs(A: HomAlgebra, R: LinearMap, S: LinearMap, n: int) -> CheckReport:
    """``R(a^n x) R(a^n y) = R(R(x) a^n(y) + a^n(x) S(y))`` and the S-analogue.

    Evaluated from the images of basis vectors, independently of
    :func:`homassoc.rota_baxter.check_rb_system`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _same_dim(A.mu, R, S)
    f = A.field
    an = A.alpha.power(n).m
    mul = A.mu.c
    # images of basis vectors, rows indexed by the basis vector
    Rm, Sm = R.m.T, S.m.T
    Ran, San = ein(f, "ji,kj->ik", an, R.m), ein(f, "ji,kj->ik", an, S.m)
    an_rows = an.T
    # products of image rows: X[i] . Y[j]
    def prod(X, Y):
        return ein(f, "ia,jb,abo->ijo", X, Y, mul)

    inner = f.reduce(prod(Rm, an_rows) + prod(an_rows, Sm))
    parts = [
        check_commutes(A.alpha, R, "alpha-commutes-R"),
        check_commutes(A.alpha, S, "alpha-commutes-S"),
    ]
    for name, X, Xan in (("alpha-n-rbs1", R, Ran), ("alpha-n-rbs2", S, San)):
        lhs = prod(Xan, Xan)
        rhs = ein(f, "ijm,om->ijo", inner, X.m)
        parts.append(CheckReport(name, f, compare(name, lhs, rhs, 2)))
    return CheckReport.combine(f"alpha{n}-rb-system", f, parts)


def _sandwich(A: HomAlgebra, t: Tensor2) -> tuple[np.ndarray, np.ndarray]:
    """``a -> (t(1) a) alpha(t(2))`` and ``a -> alpha(t(1)) (a t(2))`` as matrices."""
    f = A.field
    c, al = A.mu.c, A.alpha.m
    first = ein(f, "ij,iam,lj,mlo->oa", t.t, c, al, c)
    second = ein(f, "ij,li,ajm,lmo->oa", t.t, al, c, c)
    return first, second


def rbs_from_ybp(pair: YangBaxterPair) -> AlphaNRBSystem:
    """``R(a) = (r(1) a) alpha(r(2))``, ``S(a) = (s(1) a) alpha(s(2))``: an (alpha^2)-RB system."""
    A = pair.base
    report = check_yb_pair(A, pair.r, pair.s)
    if not report.passed:
        raise NotYBPair("(r, s) is not a Hom-Yang-Baxter pair", report)
    maps = []
    for label, t in (("r", pair.r), ("s", pair.s)):
        first, second = _sandwich(A, t)
        forms = compare(f"{label}-sandwich-forms", first.T, second.T, 1)
        if forms:
            raise PostconditionError(f"the two forms of the map built from {label} differ",
                                     CheckReport(f"{label}-sandwich-forms", A.field, forms))
        maps.append(LinearMap(A.field, first, trusted=True))
    sys = AlphaNRBSystem(A, maps[0], maps[1], 2)
    post = check_alpha_n_rbs(A, sys.R, sys.S, 2)
    if not post.passed:
        raise PostconditionError("Yang-Baxter pair did not give an (alpha^2)-Rota-Baxter system", post)
    return sys


def dendriform_from_alpha_n_rbs(sys: AlphaNRBSystem) -> HomDendriform:
    """``(A, alpha^{n+1}, <, >)`` with ``a < b = a^n(a) S(b)`` and ``a > b = R(a) a^n(b)``."""
    A = sys.base
    report = check_alpha_n_rbs(A, sys.R, sys.S, sys.n)
    if not report.passed:
        raise InvalidSystem(f"not an (alpha^{sys.n})-Rota-Baxter system", report)
    shift = A.alpha.power(sys.n)
    prec, succ = _split_products(A.mu, sys.R, sys.S, shift)
    D = HomDendriform(A.field, A.alpha.power(sys.n + 1), prec, succ)
    post = check_hom_dendriform(D)
    if not post.passed:
        raise PostconditionError(f"(alpha^{sys.n})-Rota-Baxter system did not give a Hom-dendriform algebra", post)
    return D


def ybp_induced_structures(pair: YangBaxterPair, convention: str = "direct") -> tuple[HomDendriform, HomAlgebra, HomPreLie]:
    """Dendriform, associative and preLie structures with twist alpha^3."""
    D = dendriform_from_alpha_n_rbs(rbs_from_ybp(pair))
    star = HomAlgebra(D.field, D.total(), D.alpha, pair.base.basis)
    post = check_hom_algebra(star)
    if not post.passed:
        raise PostconditionError("induced product is not Hom-associative", post)
    P = HomPreLie(D.field, D.alpha, D.diamond(convention))
    post = check_hom_prelie(P)
    if not post.passed:
        raise PostconditionError(f"induced {convention} difference product is not Hom-preLie", post)
    return D, star, P
