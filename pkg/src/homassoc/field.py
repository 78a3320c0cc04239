"""Exact scalar fields: the rationals and prime fields GF(p).

Scalars are kept in canonical form at all times.  Inside arrays we store the
raw canonical value (``Fraction`` for Q, ``int`` in ``[0, p)`` for GF(p)) and
let :meth:`FieldSpec.reduce` restore canonical form after numpy arithmetic on
object arrays.  :class:`FieldScalar` is the boxed, operator-overloaded scalar
used at the API surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DivisionByZero, FieldMismatch, FractionInPrimeField, ParseError

MAX_PRIME = 2**31

_INT = r"[+-]?\d+"
_SCALAR_RE = re.compile(rf"^\s*({_INT})\s*(?:/\s*({_INT}))?\s*$")
_FIELD_RE = re.compile(r"^\s*(?:GF|F)\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no characteristic")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not 2 <= self.p < MAX_PRIME:
                raise ValueError(f"prime field needs 2 <= p < 2^31, got {self.p!r}")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``Q``/``QQ``/``rational`` and ``GF(p)``."""
        t = str(text).strip()
        if t.upper() in ("Q", "QQ", "RATIONAL"):
            return cls.rational()
        m = _FIELD_RE.match(t)
        if m is None:
            raise ParseError(f"unrecognised field {text!r}")
        try:
            return cls.prime(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __str__(self):
        return "Q" if self.kind == "rational" else f"GF({self.p})"

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    # raw canonical values -------------------------------------------------

    def coerce(self, value):
        """Canonical raw value for an int, Fraction or FieldScalar."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatch(f"scalar from {value.field} used in {self}")
            return value.value
        if isinstance(value, (bool, np.bool_)):
            value = int(value)
        if isinstance(value, np.integer):
            value = int(value)
        if self.is_prime:
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return value.numerator % self.p
                return value.numerator * self.inverse(value.denominator % self.p) % self.p
            if isinstance(value, int):
                return value % self.p
        else:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def inverse(self, x):
        x = self.coerce(x)
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.is_prime:
            return pow(x, -1, self.p)
        return 1 / x

    def parse_raw(self, text: str):
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string, got {type(text).__name__}")
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ParseError(f"malformed scalar {text!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and self.is_prime:
            raise FractionInPrimeField(f"fraction syntax {text!r} is not allowed in {self}")
        if den is None:
            return self.coerce(int(num))
        if int(den) == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))

    def format_raw(self, x) -> str:
        x = self.coerce(x)
        if self.is_prime:
            return str(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    # arrays -------------------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Object array of canonical raw values."""
        arr = np.array(data, dtype=object)
        if arr.size == 0:
            return arr
        return np.asarray(np.frompyfunc(self.coerce, 1, 1)(arr), dtype=object)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Restore canonical form after object-array arithmetic."""
        arr = np.asarray(arr, dtype=object)
        if arr.size == 0:
            return arr.copy()
        if self.is_prime:
            return np.asarray(arr % self.p, dtype=object)
        return np.asarray(_to_fraction(arr), dtype=object)

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def elements(self):
        """All field elements (prime fields only), in increasing order."""
        if not self.is_prime:
            raise ValueError("Q is infinite")
        return range(self.p)

    def random_array(self, rng: np.random.Generator, shape, bound: int = 3) -> np.ndarray:
        """Uniform over GF(p); small integers in [-bound, bound] over Q."""
        if self.is_prime:
            vals = rng.integers(0, self.p, size=shape)
        else:
            vals = rng.integers(-bound, bound + 1, size=shape)
        return self.array(vals.tolist() if np.ndim(vals) else int(vals))


_to_fraction = np.frompyfunc(Fraction, 1, 1)


@dataclass(frozen=True, eq=False)
class FieldScalar:
    """An exact field element bound to its field."""

    value: object
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, raw):
        return FieldScalar(raw, self.field)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inverse(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * self.field.inverse(self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format_raw(self.value)

    def __repr__(self):
        return f"FieldScalar({self}, {self.field})"


def scalar_arith(a: FieldScalar, b: FieldScalar, op: str) -> FieldScalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def parse_scalar(text: str, spec: FieldSpec) -> FieldScalar:
    return FieldScalar(spec.parse_raw(text), spec)


def format_scalar(x: FieldScalar) -> str:
    return str(x)


QQ = FieldSpec.rational()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)
