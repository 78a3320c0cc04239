"""Search oracle: exhaustive/sampled enumeration, random instances, catalog.

Enumeration works in coordinates of the linear subspace every solution must
lie in (the commutant of alpha for Rota-Baxter problems, the alpha-invariant
tensors for Yang-Baxter pairs).  The defining equations are polynomials of
degree at most two in those coordinates, so their residual at any integer
point is a fixed combination of the residuals at ``0``, ``e_a``, ``2 e_a``
and ``e_a + e_b`` (Newton forward differences).  That lets a whole batch of
candidates be screened with int64 arithmetic; every survivor is then
re-checked by the public checker, which is the acceptance predicate.
"""

from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import InvalidInput, PostconditionError, SpaceTooLarge, UnknownName, UnsupportedDim
from .field import FieldSpec, QQ, GF
from .rota_baxter import check_rb_system, check_weighted_rb, rb_equation_sides
from .structures import HomAlgebra, check_associative, induce_algebra_by_composition
from .tensor import BilinearMap, LinearMap, Tensor2, ein, inverse, kron, nullspace
from .yang_baxter import check_yb_pair, yb_expressions

EXHAUSTIVE_LIMIT = 2**24
TARGETS = ("rb_systems", "yb_pairs", "weighted_rb")
_BATCH = 1 << 15
_INT64_PRIME_LIMIT = 2**20


# -- linear subspaces ----------------------------------------------------------


def commutant_basis(alpha: LinearMap) -> list[np.ndarray]:
    """Basis of ``{X : alpha X = X alpha}`` as n x n arrays."""
    f, n = alpha.field, alpha.dim
    I = f.eye(n)
    # vec(alpha X - X alpha) with row-major vec: (alpha (x) I - I (x) alpha^T) vec(X)
    system = f.reduce(kron(f, alpha.m, I) - kron(f, I, alpha.m.T))
    return [v.reshape(n, n) for v in nullspace(f, system)]


def invariant_basis(alpha: LinearMap) -> list[np.ndarray]:
    """Basis of the alpha-invariant tensors ``{t : (alpha (x) alpha) t = t}``."""
    f, n = alpha.field, alpha.dim
    system = f.reduce(kron(f, alpha.m, alpha.m) - f.eye(n * n))
    return [v.reshape(n, n) for v in nullspace(f, system)]


def _combine(field: FieldSpec, basis: list[np.ndarray], coords) -> np.ndarray:
    out = field.zeros(basis[0].shape) if basis else None
    for x, b in zip(coords, basis):
        if x:
            out = out + b * x
    return field.reduce(out)


# -- search tasks --------------------------------------------------------------


@dataclass
class SearchTask:
    target: str
    algebra: HomAlgebra
    exhaustive: bool = True
    seed: int | None = None
    samples: int = 2000
    max_candidates: int = EXHAUSTIVE_LIMIT
    weight: object = 0
    restrict_to_subspace: bool = True

    def __post_init__(self):
        if self.target not in TARGETS:
            raise UnknownName(f"unknown search target {self.target!r}; expected one of {TARGETS}")
        if not self.algebra.field.is_prime:
            raise ValueError("search runs over a prime field GF(p)")


@dataclass
class SearchSpace:
    """Coordinates ``z`` in ``GF(p)^k`` and the map from ``z`` to a candidate."""

    blocks: list[list[np.ndarray]]  # one basis per unknown (R and S, or r and s)

    @property
    def nvars(self) -> int:
        return sum(len(b) for b in self.blocks)


def full_space_size(task: SearchTask) -> int:
    n, p = task.algebra.dim, task.algebra.field.p
    unknowns = 1 if task.target == "weighted_rb" else 2
    return p ** (unknowns * n * n)


def search_space(task: SearchTask) -> SearchSpace:
    A = task.algebra
    n, f = A.dim, A.field
    if task.restrict_to_subspace:
        sub = commutant_basis(A.alpha) if task.target != "yb_pairs" else invariant_basis(A.alpha)
    else:
        sub = []
        for i, j in itertools.product(range(n), repeat=2):
            e = f.zeros((n, n))
            e[i, j] = f.one
            sub.append(e)
    unknowns = 1 if task.target == "weighted_rb" else 2
    return SearchSpace([sub] * unknowns)


def space_size(task: SearchTask) -> int:
    return task.algebra.field.p ** search_space(task).nvars


def _candidate(task: SearchTask, space: SearchSpace, z) -> tuple:
    f = task.algebra.field
    out, pos = [], 0
    for block in space.blocks:
        k = len(block)
        coords = [int(x) for x in z[pos:pos + k]]
        pos += k
        n = task.algebra.dim
        arr = _combine(f, block, coords) if block else f.zeros((n, n))
        if task.target == "yb_pairs":
            out.append(Tensor2(f, arr, trusted=True))
        else:
            out.append(LinearMap(f, arr, trusted=True))
    return tuple(out)


def accepts(task: SearchTask, candidate: tuple) -> bool:
    """The acceptance predicate: exactly the public checker."""
    A = task.algebra
    if task.target == "rb_systems":
        return check_rb_system(A, *candidate).passed
    if task.target == "yb_pairs":
        return check_yb_pair(A, *candidate).passed
    return check_weighted_rb(A, candidate[0], task.weight).passed


def _residual(task: SearchTask, candidate: tuple) -> np.ndarray:
    """Flat vector of ``lhs - rhs`` of every defining equation (degree <= 2)."""
    A = task.algebra
    f = A.field
    if task.target == "yb_pairs":
        r, s = candidate
        sr, ss = yb_expressions(A, r, s)
        parts = [sr.t, ss.t]
    elif task.target == "rb_systems":
        R, S = candidate
        parts = []
        for target in (R, S):
            lhs, rhs = rb_equation_sides(A.mu, R, S, target)
            parts.append(lhs - rhs)
    else:
        (R,) = candidate
        lam = f.coerce(task.weight)
        lhs = ein(f, "ai,bj,abo->ijo", R.m, R.m, A.mu.c)
        inner = f.reduce(ein(f, "ai,ajm->ijm", R.m, A.mu.c) + ein(f, "bj,ibm->ijm", R.m, A.mu.c) + A.mu.c * lam)
        parts = [lhs - ein(f, "ijm,om->ijo", inner, R.m)]
    return f.reduce(np.concatenate([np.ravel(x) for x in parts]))


def _difference_tables(task: SearchTask, space: SearchSpace):
    """Residual coefficients: F(z) = F0 + sum z_a D_a + sum C(z_a,2) G_a + sum_{a<b} z_a z_b M_ab."""
    p = task.algebra.field.p
    k = space.nvars

    def F(z):
        return _residual(task, _candidate(task, space, z)).astype(np.int64)

    zero = np.zeros(k, dtype=np.int64)
    F0 = F(zero)
    units = np.eye(k, dtype=np.int64)
    Fe = np.array([F(units[a]) for a in range(k)]).reshape(k, -1)
    F2e = np.array([F(2 * units[a]) for a in range(k)]).reshape(k, -1)
    D = (Fe - F0) % p
    G = (F2e - 2 * Fe + F0) % p
    M = np.zeros((k, k, F0.size), dtype=np.int64)
    for a, b in itertools.combinations(range(k), 2):
        M[a, b] = (F(units[a] + units[b]) - Fe[a] - Fe[b] + F0) % p
    return F0 % p, D, G, M


def _batches(p: int, k: int):
    """All of GF(p)^k in lexicographic order, in int64 blocks."""
    total = p**k
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
        digits = np.empty((idx.size, k), dtype=np.int64)
        for pos in range(k - 1, -1, -1):
            digits[:, pos] = idx % p
            idx //= p
        yield digits


def _screen(tables, z: np.ndarray, p: int) -> np.ndarray:
    F0, D, G, M = tables
    # keep every factor below p before multiplying so int64 never overflows
    val = (F0[None, :] + z @ D) % p
    val = (val + (((z * (z - 1)) // 2) % p) @ G) % p
    k = z.shape[1]
    for a in range(k - 1):
        if np.any(M[a]):
            val = (val + ((z[:, a:a + 1] * z[:, a + 1:]) % p) @ M[a, a + 1:]) % p
    return ~np.any(val, axis=1)


def _sort_key(candidate: tuple):
    return tuple(int(x) for c in candidate for x in np.ravel(c.data))


def enumerate_solutions(task: SearchTask, on_solution: Callable | None = None) -> list[tuple]:
    """All solutions (exhaustive) or those among seeded samples; sorted lexicographically."""
    f = task.algebra.field
    p = f.p
    space = search_space(task)
    k = space.nvars
    found = []
    if task.exhaustive:
        size = p**k
        if size > task.max_candidates:
            raise SpaceTooLarge(
                f"{size} candidates ({p}^{k}) exceed the exhaustive bound {task.max_candidates}; "
                "use sampled mode with a seed"
            )
        if p < _INT64_PRIME_LIMIT and k > 0:
            tables = _difference_tables(task, space)
            for z in _batches(p, k):
                for row in z[_screen(tables, z, p)]:
                    cand = _candidate(task, space, row)
                    if accepts(task, cand):
                        found.append(cand)
        else:
            for row in itertools.product(range(p), repeat=k):
                cand = _candidate(task, space, row)
                if accepts(task, cand):
                    found.append(cand)
    else:
        if task.seed is None:
            raise ValueError("sampled search needs a seed")
        rng = np.random.default_rng(task.seed)
        seen = set()
        for _ in range(task.samples):
            z = rng.integers(0, p, size=k)
            key = tuple(int(x) for x in z)
            if key in seen:
                continue
            seen.add(key)
            cand = _candidate(task, space, z)
            if accepts(task, cand):
                found.append(cand)
    found.sort(key=_sort_key)
    if on_solution is not None:
        for cand in found:
            on_solution(cand)
    return found


# `enumerate` is the public name; the builtin stays reachable as builtins.enumerate
enumerate = enumerate_solutions  # noqa: A001


# -- associative algebra library -----------------------------------------------


def _mul_table(n: int, entries: dict) -> list:
    """Structure constants from ``{(i, j): {k: coeff}}``."""
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), out in entries.items():
        for k, v in out.items():
            c[i][j][k] = v
    return c


LIBRARY = {
    # name: (dim, basis labels, {(i, j): {k: coeff}})
    "k1": (1, ("e",), {(0, 0): {0: 1}}),
    "zero1": (1, ("a",), {}),
    "zero2": (2, ("a", "b"), {}),
    "dual": (2, ("1", "x"), {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}),
    "split2": (2, ("e", "f"), {(0, 0): {0: 1}, (1, 1): {1: 1}}),
    "nil2": (2, ("a", "b"), {(0, 0): {1: 1}}),
    "idem-zero": (2, ("e", "z"), {(0, 0): {0: 1}}),
    "left-unit": (2, ("e", "f"), {(0, 0): {0: 1}, (0, 1): {1: 1}}),
    "trunc3": (3, ("1", "x", "x2"), {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}, (1, 1): {2: 1},
    }),
    "nil3": (3, ("x", "x2", "x3"), {(0, 0): {1: 1}, (0, 1): {2: 1}, (1, 0): {2: 1}}),
    "split-dual": (3, ("e", "1", "y"), {(0, 0): {0: 1}, (1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}}),
    "upper2": (3, ("E11", "E12", "E22"), {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1},
    }),
    "zero3": (3, ("a", "b", "c"), {}),
    "square-zero3": (3, ("1", "x", "y"), {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1},
    }),
    "mat2": (4, ("E11", "E12", "E21", "E22"), {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {0: 1}, (1, 3): {1: 1},
        (2, 0): {2: 1}, (2, 1): {3: 1}, (3, 2): {2: 1}, (3, 3): {3: 1},
    }),
    "zero4": (4, ("a", "b", "c", "d"), {}),
}


def library_algebra(name: str, field: FieldSpec) -> HomAlgebra:
    try:
        n, basis, entries = LIBRARY[name]
    except KeyError:
        raise UnknownName(f"unknown library algebra {name!r}") from None
    return HomAlgebra.from_arrays(field, _mul_table(n, entries), None, basis)


_DIM2 = tuple(k for k, v in LIBRARY.items() if v[0] == 2)


def _morphisms_dim2(name: str, p: int) -> list[np.ndarray]:
    """All algebra endomorphisms of a 2-dimensional library algebra over GF(p)."""
    return [m.copy() for m in _morphisms_dim2_cached(name, p)]


@lru_cache(maxsize=None)
def _morphisms_dim2_cached(name: str, p: int) -> tuple:
    A = library_algebra(name, FieldSpec.prime(p))
    c = A.mu.c.astype(np.int64)
    digits = next(_batches_all(p, 4))
    phis = digits.reshape(-1, 2, 2)
    lhs = np.einsum("ijm,zom->zijo", c, phis) % p
    rhs = np.einsum("zai,zbj,abo->zijo", phis, phis, c) % p
    ok = np.all((lhs == rhs).reshape(len(phis), -1), axis=1)
    return tuple(phis[ok])


def _batches_all(p: int, k: int):
    idx = np.arange(p**k, dtype=np.int64)
    digits = np.empty((idx.size, k), dtype=np.int64)
    for pos in range(k - 1, -1, -1):
        digits[:, pos] = idx % p
        idx //= p
    yield digits


def _morphism_family(name: str, p: int, rng: np.random.Generator) -> np.ndarray:
    """A random member of a known family of endomorphisms (matrix, column convention)."""
    a, b, c = (int(x) for x in rng.integers(0, p, size=3))
    if name == "trunc3":
        # 1 -> 1, x -> a x + b x^2, x^2 -> a^2 x^2
        m = [[1, 0, 0], [0, a, 0], [0, b, a * a]]
    elif name == "nil3":
        # x -> a x + b x2 + c x3
        m = [[a, 0, 0], [b, a * a, 0], [c, 2 * a * b, a**3]]
    elif name == "split-dual":
        # e -> e, 1 -> 1, y -> a y; or the projection killing the second factor
        m = [[1, 0, 0], [0, 1, 0], [0, 0, a]] if b % 2 == 0 else [[1, 0, 0], [0, 0, 0], [0, 0, 0]]
    elif name == "upper2":
        # conjugation by diag(1, t) scales E12
        m = [[1, 0, 0], [0, a, 0], [0, 0, 1]] if b % 3 else [[1, 0, 0], [0, 0, 0], [0, 0, 0]]
    elif name in ("zero1", "zero3", "zero4"):
        k = LIBRARY[name][0]
        m = rng.integers(0, p, size=(k, k)).tolist()
    elif name == "k1":
        m = [[int(a % 2)]]
    elif name == "mat2":
        # conjugation X -> g X g^{-1} by g = [[1, a], [0, 1]]
        g = np.array([[1, a], [0, 1]], dtype=object)
        gi = np.array([[1, -a], [0, 1]], dtype=object)
        cols = []
        for i, j in itertools.product(range(2), repeat=2):
            E = np.zeros((2, 2), dtype=object)
            E[i, j] = 1
            cols.append(np.ravel(g.dot(E).dot(gi)))
        m = np.array(cols, dtype=object).T.tolist()
    elif name == "square-zero3":
        # unital, any linear map on span(x, y)
        blk = rng.integers(0, p, size=(2, 2)).tolist()
        m = [[1, 0, 0], [0, blk[0][0], blk[0][1]], [0, blk[1][0], blk[1][1]]]
    else:
        raise UnknownName(f"no morphism family for {name!r}")
    return np.array(m, dtype=object) % p


def random_invertible(field: FieldSpec, n: int, rng: np.random.Generator) -> LinearMap:
    while True:
        P = LinearMap(field, field.random_array(rng, (n, n)))
        try:
            inverse(P)
            return P
        except ValueError:
            continue


def change_basis(A: HomAlgebra, P: LinearMap, phi: LinearMap | None = None):
    """Structure constants of A (and a map phi) in the basis ``f_i = sum_k P[k, i] e_k``."""
    f = A.field
    Pinv = inverse(P)
    c = ein(f, "ai,bj,abm,om->ijo", P.m, P.m, A.mu.c, Pinv.m)
    alpha = Pinv @ A.alpha @ P
    B = HomAlgebra(f, BilinearMap(f, c, trusted=True), alpha, A.basis)
    if phi is None:
        return B
    return B, Pinv @ phi @ P


def random_hom_algebra(field: FieldSpec, n: int, rng: np.random.Generator,
                       names: tuple[str, ...] | None = None, identity_ratio: float = 0.15) -> HomAlgebra:
    """Induced-by-composition Hom-algebra from a library algebra, in a random basis."""
    if not field.is_prime:
        raise InvalidInput("random Hom-algebras are drawn over GF(p)")
    pool = names or tuple(k for k, v in LIBRARY.items() if v[0] == n)
    if not pool:
        raise UnsupportedDim(f"no library algebras of dimension {n}")
    name = pool[int(rng.integers(len(pool)))]
    base = library_algebra(name, field)
    if rng.random() < identity_ratio:
        phi = LinearMap.identity(field, n)
    elif n == 2 and name in _DIM2:
        morphs = _morphisms_dim2(name, field.p)
        phi = LinearMap(field, morphs[int(rng.integers(len(morphs)))].tolist())
    else:
        phi = LinearMap(field, _morphism_family(name, field.p, rng))
    P = random_invertible(field, n, rng)
    B, phi = change_basis(base, P, phi)
    return induce_algebra_by_composition(B, phi)


def random_invariant_tensor(A: HomAlgebra, rng: np.random.Generator) -> Tensor2:
    basis = invariant_basis(A.alpha)
    f = A.field
    if not basis:
        return Tensor2.zero(f, A.dim)
    coords = rng.integers(0, f.p, size=len(basis))
    return Tensor2(f, _combine(f, basis, coords), trusted=True)


def random_commuting_map(A: HomAlgebra, rng: np.random.Generator) -> LinearMap:
    basis = commutant_basis(A.alpha)
    f = A.field
    coords = rng.integers(0, f.p, size=len(basis))
    return LinearMap(f, _combine(f, basis, coords), trusted=True)


def random_associative_algebra(field: FieldSpec, n: int, rng: np.random.Generator, tries: int = 2000) -> HomAlgebra:
    """Rejection sampling of random structure constants until associative.

    Uniform candidates are almost never associative beyond dimension 2, so
    after ``tries`` misses a library algebra in a random basis is drawn
    instead; either way the result is re-checked.
    """
    for _ in range(tries):
        A = HomAlgebra.from_arrays(field, field.random_array(rng, (n, n, n)))
        if check_associative(A.mu).passed:
            return A
    pool = tuple(k for k, v in LIBRARY.items() if v[0] == n)
    if not pool:
        raise UnsupportedDim(f"no library algebras of dimension {n}")
    base = library_algebra(pool[int(rng.integers(len(pool)))], field)
    A = change_basis(base, random_invertible(field, n, rng))
    if not check_associative(A.mu).passed:
        raise PostconditionError("change of basis broke associativity")
    return A


def solutions_or_sample(task: SearchTask, rng: np.random.Generator, exhaustive_cap: int = 4000):
    """Exhaustive solutions when the reduced space is small, else a seeded sample."""
    if space_size(task) <= exhaustive_cap:
        return enumerate_solutions(task)
    sampled = SearchTask(task.target, task.algebra, exhaustive=False,
                         seed=int(rng.integers(2**31)), samples=400, weight=task.weight)
    return enumerate_solutions(sampled)


# -- catalog -------------------------------------------------------------------


@dataclass
class CatalogInstance:
    name: str
    bundle: object  # homassoc.bundle.Bundle
    provenance: str


def _catalog_data(name: str):
    """(field, basis, mul, alpha, extra sections, declared checks, provenance)."""
    D_mul = _mul_table(2, LIBRARY["dual"][2])
    Z_mul = _mul_table(2, {})
    ident = [[1, 0], [0, 1]]
    if name == "z2":
        return QQ, ("a", "b"), Z_mul, ident, {}, ("hom-algebra", "associative"), \
            "zero-product algebra on two generators, twist id"
    if name == "dual-numbers":
        return QQ, ("1", "x"), D_mul, ident, {"R": [[0, 0], [1, 0]], "S": [[0, 0], [1, 0]], "lam": 0}, \
            ("hom-algebra", "associative", "rb-system", "weighted-rb"), \
            "dual numbers k[x]/(x^2), twist id, R = S = right multiplication by x"
    if name == "dual-numbers-gf5-alpha2":
        # (1 (x) 1, 0) is a Yang-Baxter pair found by exhaustive search
        mul = [[[1, 0], [0, 2]], [[0, 2], [0, 0]]]
        return GF(5), ("1", "x"), mul, [[1, 0], [0, 2]], {"r": [[1, 0], [0, 0]], "s": [[0, 0], [0, 0]]}, \
            ("hom-algebra", "yb-pair"), \
            "dual numbers over GF(5) induced by the morphism 1 -> 1, x -> 2x"
    if name == "n2-nonassoc":
        mul = [[[0, 1], [1, 0]], [[0, 0], [0, 0]]]
        return QQ, ("a", "b"), mul, ident, {}, ("multiplicative",), \
            "a.a = b, a.b = a, twist id; not Hom-associative (negative fixture)"
    if name == "paper-nilpotent-pair":
        return QQ, ("a", "b"), Z_mul, ident, {"r": [[1, 0], [0, 0]], "s": [[0, 0], [0, 1]]}, \
            ("hom-algebra", "yb-pair"), \
            "a^2 = b^2 = ab = ba = 0 with r = a (x) a, s = b (x) b"
    if name == "paper-unital-pair":
        x_right = [[0, 0], [1, 0]]
        return QQ, ("1", "x"), D_mul, ident, \
            {"r": [[0, 1], [0, 0]], "s": [[0, 1], [0, 0]], "R": x_right, "S": x_right}, \
            ("hom-algebra", "yb-pair", "rb-system"), \
            "unital dual numbers with a = b = x: r = s = 1 (x) x"
    raise UnknownName(f"unknown catalog instance {name!r}; expected one of {CATALOG_NAMES}")


CATALOG_NAMES = (
    "z2",
    "dual-numbers",
    "dual-numbers-gf5-alpha2",
    "n2-nonassoc",
    "paper-nilpotent-pair",
    "paper-unital-pair",
)


def catalog(name: str, field: FieldSpec | None = None) -> CatalogInstance:
    """A pre-verified catalog bundle; ``field`` reinterprets its integer data."""
    from .bundle import Bundle, validate_declared
    from .covariant import quasitriangular_maps

    base_field, basis, mul, alpha, extra, declared, provenance = _catalog_data(name)
    bundle = Bundle(base_field, len(basis), mul, alpha, basis, name=name, provenance=provenance, **extra)
    if field is not None and field != base_field:
        bundle = bundle.with_field(field)
    if bundle.r is not None:
        A = bundle.algebra()
        dp, dr, ds = quasitriangular_maps(A, bundle.tensor("r"), bundle.tensor("s"))
        bundle = bundle.replace(coproduct=dp.d, delta1=dr.d, delta2=ds.d)
        declared = declared + ("covariant-bialgebra",)
    bundle = bundle.replace(declared=declared)
    validate_declared(bundle)
    return CatalogInstance(name, bundle, provenance)


RANDOM_KINDS = (
    "tensor2",
    "alpha-invariant-tensor2",
    "linear-map",
    "commuting-map",
    "associative-algebra",
    "hom-algebra",
)


def random_instance(kind: str, field: FieldSpec, dim: int, seed: int):
    """A deterministic pseudo-random bundle of the given kind."""
    from .bundle import Bundle

    if kind not in RANDOM_KINDS:
        raise UnknownName(f"unknown random kind {kind!r}; expected one of {RANDOM_KINDS}")
    if not 1 <= dim <= 4:
        raise UnsupportedDim(f"random instances need 1 <= dim <= 4, got {dim}")
    key = [int(seed) % 2**63, zlib.crc32(kind.encode()), dim, field.p or 0]
    rng = np.random.default_rng(key)
    n = dim
    ident = field.eye(n)
    zero_mul = field.zeros((n, n, n))
    if kind in ("tensor2", "linear-map"):
        arr = field.random_array(rng, (n, n))
        section = {"r": arr} if kind == "tensor2" else {"R": arr}
        return Bundle(field, n, zero_mul, ident, name=f"random-{kind}", **section)
    if not field.is_prime:
        raise InvalidInput(f"random {kind} instances are drawn over GF(p)")
    if kind == "associative-algebra":
        A = random_associative_algebra(field, n, rng)
        return Bundle(field, n, A.mu.c, ident, name=f"random-{kind}", declared=("associative",))
    A = random_hom_algebra(field, n, rng)
    extra = {}
    declared = ["hom-algebra"]
    if kind == "alpha-invariant-tensor2":
        extra = {"r": random_invariant_tensor(A, rng).t, "s": random_invariant_tensor(A, rng).t}
        declared.append("invariant")
    elif kind == "commuting-map":
        extra = {"R": random_commuting_map(A, rng).m}
    return Bundle(field, n, A.mu.c, A.alpha.m, name=f"random-{kind}", declared=tuple(declared), **extra)


__all__ = [
    "CATALOG_NAMES",
    "CatalogInstance",
    "RANDOM_KINDS",
    "catalog",
    "random_instance",
    "EXHAUSTIVE_LIMIT",
    "TARGETS",
    "SearchTask",
    "LIBRARY",
    "accepts",
    "change_basis",
    "commutant_basis",
    "enumerate",
    "enumerate_solutions",
    "full_space_size",
    "invariant_basis",
    "library_algebra",
    "random_associative_algebra",
    "random_commuting_map",
    "random_hom_algebra",
    "random_invariant_tensor",
    "random_invertible",
    "search_space",
    "solutions_or_sample",
    "space_size",
]
