"""Hom-associative algebras, Hom-coassociative coalgebras and their checkers.

Every identity here is multilinear, so checking it on all tuples of basis
vectors decides it on the whole space.  Checkers evaluate both sides as one
array indexed by the basis tuple and report every mismatching tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import DimMismatch, FieldMismatch, NotAssociative, NotMorphism, PostconditionError
from .field import FieldSpec
from .tensor import (
    BilinearMap,
    Coproduct,
    LinearMap,
    coproduct_after_product,
    ein,
    left_nested,
    left_twisted_term,
    right_nested,
    right_twisted_term,
)


@dataclass(frozen=True)
class Witness:
    """A basis tuple at which an identity fails, with both sides' coordinates."""

    identity: str
    at: tuple[int, ...]
    lhs: tuple
    rhs: tuple


@dataclass
class CheckReport:
    name: str
    field: FieldSpec
    witnesses: list[Witness] = dc_field(default_factory=list)
    parts: list[CheckReport] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.passed

    @property
    def first(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def failed_identities(self) -> list[str]:
        seen = []
        for w in self.witnesses:
            if w.identity not in seen:
                seen.append(w.identity)
        return seen

    @classmethod
    def combine(cls, name: str, field: FieldSpec, parts: list[CheckReport]) -> CheckReport:
        witnesses = []
        for part in parts:
            witnesses.extend(part.witnesses)
        return cls(name, field, witnesses, list(parts))

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL x{len(self.witnesses)}"
        return f"CheckReport({self.name!r}, {state})"


def compare(identity: str, lhs: np.ndarray, rhs: np.ndarray, nargs: int) -> list[Witness]:
    """Witnesses for every basis tuple (first ``nargs`` axes) where the sides differ.

    ``np.argwhere`` walks in row-major order, which is lexicographic order on
    basis tuples.
    """
    if lhs.shape != rhs.shape:
        raise DimMismatch(f"{identity}: sides have shapes {lhs.shape} and {rhs.shape}")
    diff = lhs != rhs
    if diff.ndim > nargs:
        diff = diff.reshape(diff.shape[:nargs] + (-1,)).any(axis=-1)
    out = []
    for idx in np.argwhere(diff):
        at = tuple(int(i) for i in idx)
        out.append(Witness(identity, at, tuple(np.ravel(lhs[at])), tuple(np.ravel(rhs[at]))))
    return out


def compare_zero(identity: str, value: np.ndarray, field: FieldSpec) -> list[Witness]:
    """Witnesses at every nonzero coordinate of ``value`` (an equation ``value = 0``)."""
    return compare(identity, value, field.zeros(value.shape), value.ndim)


@dataclass(eq=False)
class HomAlgebra:
    """The triple (A, alpha, mu) given by structure constants.

    Construction does not validate; use :func:`check_hom_algebra`.
    """

    field: FieldSpec
    mu: BilinearMap
    alpha: LinearMap
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        if self.mu.field != self.field or self.alpha.field != self.field:
            raise FieldMismatch("algebra data over different fields")
        if self.mu.dim != self.alpha.dim:
            raise DimMismatch(f"product on dim {self.mu.dim}, twist on dim {self.alpha.dim}")
        if not self.basis:
            self.basis = tuple(f"e{i + 1}" for i in range(self.dim))
        self.basis = tuple(self.basis)
        if len(self.basis) != self.dim:
            raise DimMismatch(f"{len(self.basis)} basis labels for dimension {self.dim}")

    @property
    def dim(self) -> int:
        return self.mu.dim

    @classmethod
    def from_arrays(cls, field: FieldSpec, mul, alpha=None, basis=()) -> HomAlgebra:
        mu = BilinearMap(field, mul)
        a = LinearMap.identity(field, mu.dim) if alpha is None else LinearMap(field, alpha)
        return cls(field, mu, a, tuple(basis))

    def with_product(self, mu: BilinearMap, alpha: LinearMap | None = None) -> HomAlgebra:
        return HomAlgebra(self.field, mu, self.alpha if alpha is None else alpha, self.basis)

    def mul(self, x, y) -> np.ndarray:
        return ein(self.field, "i,j,ijk->k", self.field.array(x), self.field.array(y), self.mu.c)

    def twist(self, x) -> np.ndarray:
        return ein(self.field, "ij,j->i", self.alpha.m, self.field.array(x))

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return self.field == other.field and self.mu == other.mu and self.alpha == other.alpha


@dataclass(eq=False)
class HomCoalgebra:
    field: FieldSpec
    delta: Coproduct
    alpha: LinearMap
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        if self.delta.dim != self.alpha.dim:
            raise DimMismatch(f"coproduct on dim {self.delta.dim}, twist on dim {self.alpha.dim}")

    @property
    def dim(self) -> int:
        return self.delta.dim


def _same_dim(*objs):
    dims = {o.dim for o in objs}
    if len(dims) > 1:
        raise DimMismatch(f"inconsistent dimensions {sorted(dims)}")


# -- algebra-side identities -------------------------------------------------


def hom_associativity_sides(mu: BilinearMap, alpha: LinearMap):
    """``(e_i e_j) alpha(e_k)`` and ``alpha(e_i) (e_j e_k)``, indexed [i, j, k, o]."""
    return left_nested(mu, mu, alpha), right_nested(mu, mu, alpha)


def multiplicativity_sides(mu: BilinearMap, alpha: LinearMap):
    f = mu.field
    lhs = ein(f, "ijm,om->ijo", mu.c, alpha.m)
    rhs = ein(f, "ai,bj,abo->ijo", alpha.m, alpha.m, mu.c)
    return lhs, rhs


def check_multiplicative(mu: BilinearMap, alpha: LinearMap, name="multiplicativity") -> CheckReport:
    _same_dim(mu, alpha)
    return CheckReport(name, mu.field, compare(name, *multiplicativity_sides(mu, alpha), 2))


def check_hom_algebra(A: HomAlgebra, multiplicative: bool = True) -> CheckReport:
    """Hom-associativity on all basis triples, then multiplicativity on basis pairs."""
    _same_dim(A.mu, A.alpha)
    parts = [CheckReport("hom-associativity", A.field,
                         compare("hom-associativity", *hom_associativity_sides(A.mu, A.alpha), 3))]
    if multiplicative:
        parts.append(check_multiplicative(A.mu, A.alpha))
    return CheckReport.combine("hom-algebra", A.field, parts)


def check_associative(mu: BilinearMap) -> CheckReport:
    """Plain associativity ``(xy)z = x(yz)``, evaluated directly."""
    f = mu.field
    lhs = ein(f, "ijm,mko->ijko", mu.c, mu.c)
    rhs = ein(f, "jkm,imo->ijko", mu.c, mu.c)
    return CheckReport("associativity", f, compare("associativity", lhs, rhs, 3))


def check_algebra_morphism(mu: BilinearMap, phi: LinearMap, name="algebra-morphism") -> CheckReport:
    """``phi(e_i e_j) = phi(e_i) phi(e_j)`` on basis pairs."""
    return check_multiplicative(mu, phi, name)


def induce_algebra_by_composition(A: HomAlgebra, phi: LinearMap) -> HomAlgebra:
    """(A, phi, phi o mu) from an associative algebra and an algebra endomorphism."""
    _same_dim(A.mu, phi)
    assoc = check_hom_algebra(A.with_product(A.mu, LinearMap.identity(A.field, A.dim)))
    if not A.alpha.is_identity() or not assoc.passed:
        if A.alpha.is_identity():
            raise NotAssociative("input algebra is not associative", assoc)
        raise NotAssociative("input must be an associative algebra (twist = identity)", assoc)
    morph = check_algebra_morphism(A.mu, phi)
    if not morph.passed:
        raise NotMorphism(f"phi is not an algebra morphism at basis pair {morph.first.at}", morph)
    composed = BilinearMap(A.field, ein(A.field, "ijm,om->ijo", A.mu.c, phi.m), trusted=True)
    out = A.with_product(composed, phi)
    post = check_hom_algebra(out)
    if not post.passed:
        raise PostconditionError("induced algebra is not Hom-associative", post)
    return out


# -- coalgebra-side identities -----------------------------------------------


def hom_coassociativity_sides(delta: Coproduct, alpha: LinearMap):
    """``(Delta (x) alpha) Delta`` and ``(alpha (x) Delta) Delta``, indexed [i, a, b, c]."""
    f = delta.field
    lhs = ein(f, "ijk,jab,ck->iabc", delta.d, delta.d, alpha.m)
    rhs = ein(f, "ijk,aj,kbc->iabc", delta.d, alpha.m, delta.d)
    return lhs, rhs


def comultiplicativity_sides(delta: Coproduct, alpha: LinearMap):
    f = delta.field
    lhs = ein(f, "ijk,aj,bk->iab", delta.d, alpha.m, alpha.m)
    rhs = ein(f, "li,lab->iab", alpha.m, delta.d)
    return lhs, rhs


def check_twist_commutes(delta: Coproduct, alpha: LinearMap, name: str) -> CheckReport:
    """``(alpha (x) alpha) o X = X o alpha`` for an A(x)A-valued map X."""
    return CheckReport(name, delta.field, compare(name, *comultiplicativity_sides(delta, alpha), 1))


def check_hom_coalgebra(C: HomCoalgebra, multiplicative: bool = True) -> CheckReport:
    _same_dim(C.delta, C.alpha)
    parts = [CheckReport("hom-coassociativity", C.field,
                         compare("hom-coassociativity", *hom_coassociativity_sides(C.delta, C.alpha), 1))]
    if multiplicative:
        parts.append(check_twist_commutes(C.delta, C.alpha, "comultiplicativity"))
    return CheckReport.combine("hom-coalgebra", C.field, parts)


def check_infinitesimal_compat(A: HomAlgebra, delta: Coproduct) -> CheckReport:
    """``Delta o mu = (mu (x) alpha)(alpha (x) Delta) + (alpha (x) mu)(Delta (x) alpha)``."""
    _same_dim(A.mu, delta)
    lhs = coproduct_after_product(A.mu, delta)
    rhs = A.field.reduce(left_twisted_term(A.mu, A.alpha, delta) + right_twisted_term(A.mu, A.alpha, delta))
    name = "infinitesimal-compatibility"
    return CheckReport(name, A.field, compare(name, lhs, rhs, 2))
