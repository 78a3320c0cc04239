"""Dense exact multilinear algebra over a :class:`FieldSpec`.

Index conventions (used by every other module):

* ``LinearMap.m[i, j]``     coefficient of ``e_i`` in ``f(e_j)`` (column convention)
* ``BilinearMap.c[i, j, k]`` coefficient of ``e_k`` in ``mu(e_i, e_j)``
* ``Tensor2.t[i, j]``       coefficient of ``e_i (x) e_j``
* ``Tensor3.t[i, j, k]``    coefficient of ``e_i (x) e_j (x) e_k``
* ``Coproduct.d[i, j, k]``  coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``
* ``TwistorMap.T``          matrix on A(x)A with row-major pair index ``i*n + j``

All arrays are numpy ``object`` arrays of canonical raw field values and are
frozen after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold

import numpy as np

from .errors import DimMismatch, FieldMismatch, MissingCompanion
from .field import FieldScalar, FieldSpec


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def ein(field: FieldSpec, subscripts: str, *operands) -> np.ndarray:
    """``np.einsum`` on object arrays followed by canonical reduction."""
    return field.reduce(np.einsum(subscripts, *operands))


class _Coeffs:
    """Shared behaviour of the coefficient-array types."""

    rank = 0
    attr = "data"

    def __init__(self, field: FieldSpec, data, *, trusted: bool = False):
        # trusted: data is already a canonical object array (internal results)
        arr = data.copy() if trusted else field.array(data)
        if arr.ndim != self.rank or len(set(arr.shape)) > 1:
            raise DimMismatch(
                f"{type(self).__name__} needs a cubical rank-{self.rank} array, "
                f"got shape {arr.shape}"
            )
        self.field = field
        self._data = _freeze(arr)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    @classmethod
    def zero(cls, field: FieldSpec, n: int):
        return cls(field, field.zeros((n,) * cls.rank))

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.dim != self.dim:
            raise DimMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.field, self.field.reduce(self._data + other._data), trusted=True)

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.field, self.field.reduce(self._data - other._data), trusted=True)

    def __neg__(self):
        return type(self)(self.field, self.field.reduce(-self._data), trusted=True)

    def scale(self, c):
        c = self.field.coerce(c)
        return type(self)(self.field, self.field.reduce(self._data * c), trusted=True)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.field == other.field
            and self._data.shape == other._data.shape
            and bool(np.all(self._data == other._data))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not bool(np.any(self._data != 0))

    def tolist(self):
        return self._data.tolist()

    def __repr__(self):
        body = np.vectorize(self.field.format_raw, otypes=[object])(self._data)
        return f"{type(self).__name__}({self.field}, {body.tolist()})"


class LinearMap(_Coeffs):
    rank = 2

    @property
    def m(self) -> np.ndarray:
        return self._data

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> LinearMap:
        return cls(field, field.eye(n))

    @classmethod
    def diag(cls, field: FieldSpec, entries) -> LinearMap:
        n = len(entries)
        m = field.zeros((n, n))
        for i, x in enumerate(entries):
            m[i, i] = field.coerce(x)
        return cls(field, m)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition ``self o other``."""
        self._check(other)
        return LinearMap(self.field, ein(self.field, "ij,jk->ik", self.m, other.m), trusted=True)

    def power(self, k: int) -> LinearMap:
        if k < 0:
            raise ValueError("negative power")
        out = LinearMap.identity(self.field, self.dim)
        for _ in range(k):
            out = self @ out
        return out

    def transpose(self) -> LinearMap:
        return LinearMap(self.field, self.m.T.copy())

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.field, self.dim)


class BilinearMap(_Coeffs):
    rank = 3

    @property
    def c(self) -> np.ndarray:
        return self._data


class Tensor2(_Coeffs):
    rank = 2

    @property
    def t(self) -> np.ndarray:
        return self._data

    @classmethod
    def basis(cls, field: FieldSpec, n: int, i: int, j: int) -> Tensor2:
        t = field.zeros((n, n))
        t[i, j] = field.one
        return cls(field, t)


class Tensor3(_Coeffs):
    rank = 3

    @property
    def t(self) -> np.ndarray:
        return self._data


class Coproduct(_Coeffs):
    rank = 3

    @property
    def d(self) -> np.ndarray:
        return self._data


@dataclass(frozen=True, eq=False)
class TwistorMap:
    """A linear map T on A(x)A, optionally with a companion tau on A(x)A(x)A."""

    field: FieldSpec
    T: np.ndarray
    tau: np.ndarray | None = None

    def __post_init__(self):
        T = self.field.array(self.T)
        n2 = T.shape[0]
        n = int(round(n2**0.5))
        if T.ndim != 2 or T.shape != (n2, n2) or n * n != n2:
            raise DimMismatch(f"twistor matrix must be n^2 x n^2, got {T.shape}")
        object.__setattr__(self, "T", _freeze(T))
        if self.tau is not None:
            tau = self.field.array(self.tau)
            if tau.shape != (n**3, n**3):
                raise DimMismatch(f"companion must be n^3 x n^3, got {tau.shape}")
            object.__setattr__(self, "tau", _freeze(tau))

    @property
    def dim(self) -> int:
        return int(round(self.T.shape[0] ** 0.5))

    @classmethod
    def zero(cls, field: FieldSpec, n: int, with_companion: bool = True) -> TwistorMap:
        tau = field.zeros((n**3, n**3)) if with_companion else None
        return cls(field, field.zeros((n * n, n * n)), tau)


def vector(field: FieldSpec, coords) -> np.ndarray:
    v = field.array(coords)
    if v.ndim != 1:
        raise DimMismatch("coordinate vector must be one-dimensional")
    return v


def basis_vector(field: FieldSpec, n: int, i: int) -> np.ndarray:
    v = field.zeros(n)
    v[i] = field.one
    return v


def _need(n: int, *dims: int):
    for d in dims:
        if d != n:
            raise DimMismatch(f"dimension {d} does not match {n}")


def _same_field(*objs):
    fields = {o.field for o in objs}
    if len(fields) > 1:
        raise FieldMismatch(" vs ".join(sorted(map(str, fields))))


def _coords(field: FieldSpec, v) -> np.ndarray:
    return field.array(v)


def apply_linear(f: LinearMap, v) -> np.ndarray:
    v = _coords(f.field, v)
    _need(f.dim, len(v))
    return ein(f.field, "ij,j->i", f.m, v)


def bilinear_eval(mu: BilinearMap, x, y) -> np.ndarray:
    x, y = _coords(mu.field, x), _coords(mu.field, y)
    _need(mu.dim, len(x), len(y))
    return ein(mu.field, "i,j,ijk->k", x, y, mu.c)


def map_tensor2(f: LinearMap, g: LinearMap, t: Tensor2) -> Tensor2:
    _same_field(f, g, t)
    _need(t.dim, f.dim, g.dim)
    return Tensor2(t.field, ein(t.field, "ai,bj,ij->ab", f.m, g.m, t.t), trusted=True)


def map_tensor3(f: LinearMap, g: LinearMap, h: LinearMap, t: Tensor3) -> Tensor3:
    _same_field(f, g, h, t)
    _need(t.dim, f.dim, g.dim, h.dim)
    return Tensor3(t.field, ein(t.field, "ai,bj,ck,ijk->abc", f.m, g.m, h.m, t.t), trusted=True)


def coproduct_eval(delta: Coproduct, a) -> Tensor2:
    a = _coords(delta.field, a)
    _need(delta.dim, len(a))
    return Tensor2(delta.field, ein(delta.field, "i,ijk->jk", a, delta.d), trusted=True)


def apply_twistor(T: TwistorMap, t):
    """Apply T to a Tensor2, or its companion tau to a Tensor3."""
    _same_field(T, t)
    n = T.dim
    _need(n, t.dim)
    if isinstance(t, Tensor2):
        out = ein(T.field, "ab,b->a", T.T, t.t.reshape(n * n))
        return Tensor2(T.field, out.reshape(n, n), trusted=True)
    if isinstance(t, Tensor3):
        if T.tau is None:
            raise MissingCompanion("twistor has no companion to act on A(x)A(x)A")
        out = ein(T.field, "ab,b->a", T.tau, t.t.reshape(n**3))
        return Tensor3(T.field, out.reshape(n, n, n), trusted=True)
    raise TypeError(f"cannot twist a {type(t).__name__}")


def kron(field: FieldSpec, *mats: np.ndarray) -> np.ndarray:
    """Kronecker product with row-major index flattening."""
    return field.reduce(_fold(np.kron, mats))


# -- composite operators on A(x)A valued maps ------------------------------
#
# Both helpers return arrays indexed [i, j, a, b]: the coefficient of
# e_a (x) e_b in the image of the basis pair (e_i, e_j).


def left_twisted_term(mu: BilinearMap, alpha: LinearMap, X: Coproduct) -> np.ndarray:
    """``(mu (x) alpha) o (alpha (x) X)`` i.e. ``a . X(b)``-type term."""
    return ein(mu.field, "li,jpq,lpa,bq->ijab", alpha.m, X.d, mu.c, alpha.m)


def right_twisted_term(mu: BilinearMap, alpha: LinearMap, X: Coproduct) -> np.ndarray:
    """``(alpha (x) mu) o (X (x) alpha)`` i.e. ``X(a) . b``-type term."""
    return ein(mu.field, "ipq,ap,lj,qlb->ijab", X.d, alpha.m, alpha.m, mu.c)


def coproduct_after_product(mu: BilinearMap, X: Coproduct) -> np.ndarray:
    """``X o mu`` on basis pairs, indexed [i, j, a, b]."""
    return ein(mu.field, "ijm,mab->ijab", mu.c, X.d)


def left_nested(outer: BilinearMap, inner: BilinearMap, alpha: LinearMap) -> np.ndarray:
    """``(x inner y) outer alpha(z)`` on basis triples, indexed [i, j, k, o]."""
    return ein(outer.field, "ijm,lk,mlo->ijko", inner.c, alpha.m, outer.c)


def right_nested(outer: BilinearMap, inner: BilinearMap, alpha: LinearMap) -> np.ndarray:
    """``alpha(x) outer (y inner z)`` on basis triples, indexed [i, j, k, o]."""
    return ein(outer.field, "li,jkm,lmo->ijko", alpha.m, inner.c, outer.c)


# -- exact linear algebra ----------------------------------------------------


def row_reduce(field: FieldSpec, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, by exact Gauss-Jordan."""
    a = field.array(m).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = field.inverse(a[r, c])
        a[r] = field.reduce(a[r] * inv)
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = field.reduce(a[i] - a[i, c] * a[r])
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(field: FieldSpec, m: np.ndarray) -> list[np.ndarray]:
    """A basis of ``{x : m x = 0}``, one vector per free column, in column order."""
    rref, pivots = row_reduce(field, m)
    cols = rref.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = field.zeros(cols)
        v[f] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.reduce(np.array([-rref[r, f]], dtype=object))[0]
        basis.append(v)
    return basis


def rank(field: FieldSpec, m: np.ndarray) -> int:
    return len(row_reduce(field, m)[1])


def inverse(f: LinearMap) -> LinearMap:
    n = f.dim
    aug = np.concatenate([f.m, f.field.eye(n)], axis=1)
    rref, pivots = row_reduce(f.field, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("linear map is not invertible")
    return LinearMap(f.field, rref[:, n:].copy())


def scalar(field: FieldSpec, x) -> FieldScalar:
    return FieldScalar(x, field)
