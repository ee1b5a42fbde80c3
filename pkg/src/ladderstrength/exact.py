"""Exact rationals and truncated power series in the coupling ratio ``u = v/E``.

Rationals are :class:`fractions.Fraction` (arbitrary precision, always kept in
lowest terms with a positive denominator).  :class:`USeries` is an immutable
polynomial in ``u`` truncated at a fixed order.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

DEFAULT_ORDER_CAP = 12

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` as a canonical fraction.

    >>> rat(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ValueError("rational with zero denominator")
    return Fraction(int(num), int(den))


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"`` (always with the slash, e.g. ``"1/1"``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return rat(int(num))
    return rat(int(num), int(den))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class USeries:
    """Truncated power series ``c0 + c1 u + ... + c_cap u^cap`` with exact coefficients.

    Instances are immutable and hashable.  Arithmetic between two series
    requires equal ``order_cap``; plain ints and fractions are promoted to
    constant series.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (), order_cap: int = DEFAULT_ORDER_CAP):
        if order_cap < 0:
            raise ValueError("order_cap must be nonnegative")
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > order_cap + 1:
            cs = cs[: order_cap + 1]
        cs.extend([Fraction(0)] * (order_cap + 1 - len(cs)))
        self._coeffs = tuple(cs)

    # construction helpers
    @classmethod
    def zero(cls, order_cap: int = DEFAULT_ORDER_CAP) -> "USeries":
        return cls((), order_cap)

    @classmethod
    def one(cls, order_cap: int = DEFAULT_ORDER_CAP) -> "USeries":
        return cls((1,), order_cap)

    @classmethod
    def monomial(cls, coeff, power: int, order_cap: int = DEFAULT_ORDER_CAP) -> "USeries":
        if power < 0:
            raise ValueError("negative power")
        cs = [Fraction(0)] * (order_cap + 1)
        if power <= order_cap:
            cs[power] = _as_fraction(coeff)
        return cls(cs, order_cap)

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def order_cap(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, USeries):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == self._promote(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = [f"{format_rational(c)}*u^{k}" for k, c in enumerate(self._coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"USeries({body}; cap={self.order_cap})"

    def _promote(self, other) -> "USeries":
        if isinstance(other, USeries):
            if other.order_cap != self.order_cap:
                raise ValueError(
                    f"order_cap mismatch: {self.order_cap} vs {other.order_cap}"
                )
            return other
        return USeries((_as_fraction(other),), self.order_cap)

    # ring operations
    def __add__(self, other) -> "USeries":
        try:
            o = self._promote(other)
        except TypeError:
            return NotImplemented
        return USeries((a + b for a, b in zip(self._coeffs, o._coeffs)), self.order_cap)

    __radd__ = __add__

    def __neg__(self) -> "USeries":
        return USeries((-c for c in self._coeffs), self.order_cap)

    def __sub__(self, other) -> "USeries":
        try:
            o = self._promote(other)
        except TypeError:
            return NotImplemented
        return USeries((a - b for a, b in zip(self._coeffs, o._coeffs)), self.order_cap)

    def __rsub__(self, other) -> "USeries":
        return (-self) + other

    def __mul__(self, other) -> "USeries":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return USeries((c * a for a in self._coeffs), self.order_cap)
        if not isinstance(other, USeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def shift(self, power: int = 1) -> "USeries":
        """Multiply by ``u**power`` (truncating)."""
        if power < 0:
            raise ValueError("negative shift")
        return USeries((Fraction(0),) * power + self._coeffs, self.order_cap)

    def with_cap(self, order_cap: int) -> "USeries":
        return USeries(self._coeffs, order_cap)

    # queries
    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, or ``None`` for the zero series."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def leading(self) -> tuple[int | None, Fraction]:
        k = self.valuation()
        return (None, Fraction(0)) if k is None else (k, self._coeffs[k])

    def flip_odd(self) -> "USeries":
        """The series in ``-u``: odd coefficients change sign."""
        return USeries(
            (-c if k % 2 else c for k, c in enumerate(self._coeffs)), self.order_cap
        )

    def __call__(self, u: float) -> float:
        return series_eval(self, u)

    def inv_sqrt(self) -> "USeries":
        """Formal ``self**(-1/2)``; needs a constant term of exactly 1."""
        if self._coeffs[0] != 1:
            raise ValueError("inv_sqrt needs constant term 1")
        x = self - 1
        result = USeries.one(self.order_cap)
        term = USeries.one(self.order_cap)
        binom = Fraction(1)
        for j in range(1, self.order_cap + 1):
            # binom(-1/2, j) recursively
            binom *= Fraction(-1, 2) - (j - 1)
            binom /= j
            term = term * x
            if term.is_zero():
                break
            result = result + binom * term
        return result

    # serialization
    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str], order_cap: int | None = None) -> "USeries":
        cs = [parse_rational(s) for s in items]
        return cls(cs, len(cs) - 1 if order_cap is None else order_cap)


def series_mul(a: USeries, b: USeries) -> USeries:
    """Truncated Cauchy product of two series with equal ``order_cap``."""
    if not isinstance(a, USeries) or not isinstance(b, USeries):
        raise TypeError("series_mul expects two USeries")
    if a.order_cap != b.order_cap:
        raise ValueError(f"order_cap mismatch: {a.order_cap} vs {b.order_cap}")
    cap = a.order_cap
    ac, bc = a.coefficients, b.coefficients
    out = [Fraction(0)] * (cap + 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(cap + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return USeries(out, cap)


def series_eval(s: USeries, u: float) -> float:
    """Horner evaluation in binary64."""
    acc = 0.0
    for c in reversed(s.coefficients):
        acc = acc * u + float(c)
    return acc
