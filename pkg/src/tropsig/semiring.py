"""Exact integer min-plus arithmetic on one-variable tropical polynomials.

Coefficients are integers or ``EPS`` (the additive identity, +infinity).
Polynomials are dense, immutable coefficient vectors indexed by degree and
compared formally: ``0 ⊕ 0x`` and the constant ``0`` are different objects.

Internally a polynomial is an ``int64`` array in which ``EPS`` is stored as a
sentinel well above any admissible finite value, so that sums involving it
stay recognisable without ever overflowing 64 bits.
"""

from __future__ import annotations

import math
from typing import Iterable, Union

import numpy as np

__all__ = [
    "EPS",
    "MAX_ABS_COEFF",
    "TropicalError",
    "NoDegreeError",
    "ArithmeticRangeError",
    "TropicalPoly",
    "coeff_oplus",
    "coeff_otimes",
    "oplus",
    "otimes",
    "scalar_otimes",
    "degree",
    "constant_offset",
    "is_constant_multiple",
    "residual_quotient",
]

#: The tropical zero: neutral for ⊕, absorbing for ⊗.
EPS = math.inf

#: Largest admissible magnitude of a finite coefficient.
MAX_ABS_COEFF = 2**59 - 1

_SENTINEL = 2**61
# A finite+finite sum stays strictly below this; anything touching the
# sentinel stays at or above it.
_EPS_THRESHOLD = 2**60

Coeff = Union[int, float]


class TropicalError(Exception):
    """Base class for errors raised by tropical arithmetic."""


class NoDegreeError(TropicalError, ValueError):
    """The ε-polynomial has no degree."""


class ArithmeticRangeError(TropicalError, OverflowError):
    """A finite coefficient left the admissible integer window."""


def _check_finite(value: int) -> int:
    if abs(value) > MAX_ABS_COEFF:
        raise ArithmeticRangeError(f"coefficient {value} exceeds the admissible window")
    return value


def coeff_oplus(a: Coeff, b: Coeff) -> Coeff:
    """Tropical sum of two coefficients (integer minimum)."""
    return min(a, b)


def coeff_otimes(a: Coeff, b: Coeff) -> Coeff:
    """Tropical product of two coefficients (integer sum, ``EPS`` absorbing)."""
    if a == EPS or b == EPS:
        return EPS
    return _check_finite(int(a) + int(b))


def _to_internal(value) -> int:
    if value is None or value == EPS:
        return _SENTINEL
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not tropical coefficients")
    if isinstance(value, (float, np.floating)):
        if not float(value).is_integer():
            raise TypeError(f"non-integer coefficient {value!r}")
        value = int(value)
    return _check_finite(int(value))


class TropicalPoly:
    """A one-variable tropical polynomial in canonical dense form.

    ``coeffs[i]`` is the coefficient of ``x^⊗i``; ``EPS`` (or ``None``) marks
    an absent monomial. Trailing ``EPS`` entries are dropped, so the last
    stored coefficient is always finite unless the polynomial is ε.

    ``p + q`` is ⊕, ``p * q`` is ⊗, and ``c * p`` for an integer ``c`` shifts
    every finite coefficient by ``c``.
    """

    __slots__ = ("_a",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        arr = np.array([_to_internal(c) for c in coeffs], dtype=np.int64)
        self._a = _canonical(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TropicalPoly":
        p = cls.__new__(cls)
        p._a = _canonical(arr)
        return p

    @classmethod
    def from_array(cls, arr) -> "TropicalPoly":
        """Build from an integer array of finite coefficients (no ``EPS``)."""
        arr = np.asarray(arr)
        if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
            raise TypeError("expected a one-dimensional integer array")
        arr = arr.astype(np.int64)
        if arr.size and int(np.abs(arr).max()) > MAX_ABS_COEFF:
            raise ArithmeticRangeError("coefficient exceeds the admissible window")
        return cls._wrap(arr.copy())

    @classmethod
    def eps(cls) -> "TropicalPoly":
        return cls._wrap(np.empty(0, dtype=np.int64))

    @classmethod
    def constant(cls, c: int) -> "TropicalPoly":
        return cls([c])

    @classmethod
    def monomial(cls, c: int, deg: int) -> "TropicalPoly":
        """``c ⊗ x^⊗deg``."""
        return cls([EPS] * deg + [c])

    # -- inspection -------------------------------------------------------

    @property
    def is_eps(self) -> bool:
        return self._a.size == 0

    @property
    def degree(self) -> int:
        if self._a.size == 0:
            raise NoDegreeError("the ε-polynomial has no degree")
        return self._a.size - 1

    @property
    def coeffs(self) -> tuple:
        return tuple(EPS if v >= _EPS_THRESHOLD else int(v) for v in self._a)

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the internal vector (``EPS`` is a large sentinel)."""
        v = self._a.view()
        v.flags.writeable = False
        return v

    def finite_mask(self) -> np.ndarray:
        return self._a < _EPS_THRESHOLD

    @property
    def all_finite(self) -> bool:
        return bool(self.finite_mask().all())

    def in_range(self, lo: int, hi: int) -> bool:
        """True when every coefficient is finite and inside ``[lo, hi]``."""
        a = self._a
        return bool(a.size) and bool(((a >= lo) & (a <= hi)).all())

    def __len__(self) -> int:
        return self._a.size

    def __getitem__(self, i: int) -> Coeff:
        if i < 0:
            raise IndexError("negative degree")
        if i >= self._a.size:
            return EPS
        v = int(self._a[i])
        return EPS if v >= _EPS_THRESHOLD else v

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalPoly):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash(self._a.tobytes())

    def __repr__(self) -> str:
        body = ", ".join("EPS" if c == EPS else str(c) for c in self.coeffs)
        return f"TropicalPoly([{body}])"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == EPS:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}⊗x")
            else:
                terms.append(f"{c}⊗x^{i}")
        return " ⊕ ".join(terms) if terms else "ε"

    # -- operators --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TropicalPoly):
            return NotImplemented
        return oplus(self, other)

    def __mul__(self, other):
        if isinstance(other, TropicalPoly):
            return otimes(self, other)
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return scalar_otimes(int(other), self)
        return NotImplemented

    __rmul__ = __mul__


def _canonical(arr: np.ndarray) -> np.ndarray:
    arr[arr >= _EPS_THRESHOLD] = _SENTINEL
    finite = np.flatnonzero(arr < _EPS_THRESHOLD)
    arr = arr[: finite[-1] + 1] if finite.size else arr[:0]
    if arr.size:
        lo, hi = int(arr.min()), int(arr[arr < _EPS_THRESHOLD].max())
        if lo < -MAX_ABS_COEFF or hi > MAX_ABS_COEFF:
            raise ArithmeticRangeError("coefficient exceeds the admissible window")
    arr.flags.writeable = False
    return arr


def _padded(a: np.ndarray, n: int) -> np.ndarray:
    out = np.full(n, _SENTINEL, dtype=np.int64)
    out[: a.size] = a
    return out


def oplus(a: TropicalPoly, b: TropicalPoly) -> TropicalPoly:
    """Coefficientwise minimum; missing degrees count as ``EPS``."""
    n = max(a._a.size, b._a.size)
    return TropicalPoly._wrap(np.minimum(_padded(a._a, n), _padded(b._a, n)))


def otimes(a: TropicalPoly, b: TropicalPoly) -> TropicalPoly:
    """Min-plus convolution: ``(a ⊗ b)_m = min_{i+j=m} (a_i + b_j)``.

    Raises :class:`ArithmeticRangeError` if a finite result coefficient
    leaves the admissible window.
    """
    x, y = a._a, b._a
    if x.size == 0 or y.size == 0:
        return TropicalPoly.eps()
    if x.size > y.size:
        x, y = y, x
    ny = y.size
    out = np.full(x.size + ny - 1, _SENTINEL, dtype=np.int64)
    for i, xi in enumerate(x.tolist()):
        if xi >= _EPS_THRESHOLD:
            continue
        seg = out[i : i + ny]
        np.minimum(seg, y + xi, out=seg)
    return TropicalPoly._wrap(out)


def scalar_otimes(c: int, p: TropicalPoly) -> TropicalPoly:
    """Add the finite scalar ``c`` to every finite coefficient of ``p``."""
    if c == EPS:
        raise ValueError("scalar must be finite")
    c = _check_finite(int(c))
    a = p._a
    return TropicalPoly._wrap(np.where(a < _EPS_THRESHOLD, a + c, a))


def degree(p: TropicalPoly) -> int:
    return p.degree


def constant_offset(r: TropicalPoly, s: TropicalPoly):
    """Return ``c`` with ``r = c ⊗ s``, or ``None`` if no such integer exists.

    Both polynomials being ε gives ``0``.
    """
    x, y = r._a, s._a
    if x.size != y.size:
        return None
    if x.size == 0:
        return 0
    fx, fy = x < _EPS_THRESHOLD, y < _EPS_THRESHOLD
    if not np.array_equal(fx, fy):
        return None
    diff = x[fx] - y[fy]
    c = int(diff[0])
    return c if bool((diff == c).all()) else None


def is_constant_multiple(r: TropicalPoly, s: TropicalPoly) -> bool:
    """True iff ``r = c ⊗ s`` for a single integer ``c``."""
    return constant_offset(r, s) is not None


def residual_quotient(c: TropicalPoly, a: TropicalPoly) -> TropicalPoly:
    """Largest-residual tropical quotient of ``c`` by ``a``.

    Returns ``q`` of degree ``deg c - deg a`` with
    ``q_j = max_i (c_{i+j} - a_i)`` over finite ``a_i``. This is the least
    ``q`` with ``a ⊗ q >= c`` coefficientwise; when ``c = a ⊗ b`` it
    satisfies ``a ⊗ q = c`` and ``q <= b``.
    """
    if a.is_eps:
        raise ValueError("cannot divide by the ε-polynomial")
    if c.is_eps or c.degree < a.degree:
        raise ValueError("dividend degree must be at least the divisor degree")
    x, y = c._a, a._a
    da, nq = y.size - 1, x.size - y.size + 1
    q = x[da : da + nq] - y[da]
    for i, ai in enumerate(y[:da].tolist()):
        if ai >= _EPS_THRESHOLD:
            continue
        np.maximum(q, x[i : i + nq] - ai, out=q)
    return TropicalPoly._wrap(q)
