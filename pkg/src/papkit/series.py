"""Truncated formal power series over exact rationals.

A :class:`Series` holds coefficients c_0..c_N of a power series truncated at
order N; all arithmetic is exact through the truncation.  Operations on series
of different orders truncate to the smaller order.  Square roots and divisions
use the direct coefficient recurrences; exp uses the derivative recurrence;
composition requires a zero constant term in the inner series.

The module also carries exact dense polynomials in a single marker u
(plain tuples of Fractions) with just the operations the bivariate generating
function needs, including exact division by (1-u)^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DivisibilityFailure,
    DivisionBySeriesWithZeroConstant,
    NonSquareConstantTerm,
    NonZeroConstantTerm,
)

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)


@dataclass(frozen=True)
class Series:
    """Coefficients (c_0, ..., c_N) of an exactly truncated power series."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in self.coeffs))

    # --- constructors ---

    @staticmethod
    def zero(order: int) -> "Series":
        return Series((_ZERO,) * (order + 1))

    @staticmethod
    def constant(value: Scalar, order: int) -> "Series":
        return Series((_coerce(value),) + (_ZERO,) * order)

    @staticmethod
    def x(order: int) -> "Series":
        return Series((_ZERO, _ONE) + (_ZERO,) * (order - 1))

    @staticmethod
    def from_coeffs(values: Iterable[Scalar]) -> "Series":
        return Series(tuple(_coerce(v) for v in values))

    # --- structure ---

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coeffs[: order + 1])

    def egf_value(self, n: int) -> Fraction:
        """n! * c_n: the counting value when the series is exponential."""
        return self.coeffs[n] * math.factorial(n)

    def even_part(self) -> "Series":
        return Series(tuple(c if n % 2 == 0 else _ZERO for n, c in enumerate(self.coeffs)))

    def odd_part(self) -> "Series":
        return Series(tuple(c if n % 2 else _ZERO for n, c in enumerate(self.coeffs)))

    # --- ring operations ---

    def __add__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            coeffs = list(self.coeffs)
            coeffs[0] += _coerce(other)
            return Series(tuple(coeffs))
        order = min(self.order, other.order)
        return Series(tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1)))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Series", Scalar]) -> "Series":
        return self + (-other if isinstance(other, Series) else -_coerce(other))

    def __rsub__(self, other: Scalar) -> "Series":
        return (-self) + _coerce(other)

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            scalar = _coerce(other)
            return Series(tuple(c * scalar for c in self.coeffs))
        order = min(self.order, other.order)
        coeffs = []
        for n in range(order + 1):
            coeffs.append(sum((self.coeffs[i] * other.coeffs[n - i] for i in range(n + 1)), _ZERO))
        return Series(tuple(coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            scalar = _coerce(other)
            return Series(tuple(c / scalar for c in self.coeffs))
        if other.coeffs[0] == 0:
            raise DivisionBySeriesWithZeroConstant("divisor has zero constant term")
        order = min(self.order, other.order)
        inv0 = 1 / other.coeffs[0]
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = self.coeffs[n]
            for i in range(n):
                acc -= out[i] * other.coeffs[n - i]
            out.append(acc * inv0)
        return Series(tuple(out))

    def __rtruediv__(self, other: Scalar) -> "Series":
        return Series.constant(other, self.order) / self

    def __pow__(self, exponent: int) -> "Series":
        result = Series.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    # --- calculus and functions ---

    def differentiate(self) -> "Series":
        """Termwise derivative; the order drops by one."""
        if self.order == 0:
            return Series.zero(0)
        return Series(tuple((n + 1) * self.coeffs[n + 1] for n in range(self.order)))

    def integrate(self) -> "Series":
        """Termwise antiderivative with zero constant term, same order."""
        return Series(
            (_ZERO,) + tuple(self.coeffs[n] / (n + 1) for n in range(self.order))
        )

    def exp(self) -> "Series":
        """exp of a series with zero constant term, via b' = a' b."""
        if self.coeffs[0] != 0:
            raise NonZeroConstantTerm("exp needs a zero constant term")
        out = [_ONE]
        for n in range(self.order):
            acc = _ZERO
            for k in range(n + 1):
                acc += (k + 1) * self.coeffs[k + 1] * out[n - k]
            out.append(acc / (n + 1))
        return Series(tuple(out))

    def sqrt(self) -> "Series":
        """Square root with b_0 the rational root of c_0, via 2 b_0 b_n = ..."""
        root = _rational_sqrt(self.coeffs[0])
        if root is None or root == 0:
            raise NonSquareConstantTerm(
                f"constant term {self.coeffs[0]} has no nonzero rational square root"
            )
        out = [root]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc -= out[i] * out[n - i]
            out.append(acc / (2 * root))
        return Series(tuple(out))

    def compose(self, inner: "Series") -> "Series":
        """self(inner) by Horner's scheme; inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise NonZeroConstantTerm("composition needs a zero inner constant term")
        order = min(self.order, inner.order)
        result = Series.constant(self.coeffs[order], order)
        for n in range(order - 1, -1, -1):
            result = result * inner.truncate(order) + self.coeffs[n]
        return result

    def arcsin(self) -> "Series":
        """arcsin of a series with zero constant term."""
        order = self.order
        one = Series.constant(1, order)
        base = (one / (one - Series.x(order) ** 2).sqrt()).integrate()
        return base.compose(self)

    # --- presentation ---

    def dump_lines(self) -> list[str]:
        """One line per coefficient: "n numerator/denominator n!*c_n"."""
        lines = []
        for n, c in enumerate(self.coeffs):
            lines.append(f"{n} {c.numerator}/{c.denominator} {c * math.factorial(n)}")
        return lines


def geometric(order: int) -> Series:
    """1/(1-x)."""
    return Series((_ONE,) * (order + 1))


def exp_series(order: int, scale: Scalar = 1) -> Series:
    """exp(scale * x)."""
    return (Series.x(order) * scale).exp()


# ---------------------------------------------------------------------------
# dense u-polynomials
# ---------------------------------------------------------------------------

UPoly = tuple[Fraction, ...]


def poly_trim(p: Sequence[Fraction]) -> UPoly:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    size = max(len(p), len(q))
    return poly_trim(
        tuple(
            (p[i] if i < len(p) else _ZERO) + (q[i] if i < len(q) else _ZERO)
            for i in range(size)
        )
    )


def poly_scale(p: Sequence[Fraction], scalar: Scalar) -> UPoly:
    s = _coerce(scalar)
    return poly_trim(tuple(c * s for c in p))


def poly_eval(p: Sequence[Fraction], at: Scalar) -> Fraction:
    value = _ZERO
    for c in reversed(p):
        value = value * at + c
    return value


def _divide_by_one_minus_u(p: Sequence[Fraction]) -> UPoly:
    """Exact quotient p(u) / (1-u); remainder p(1) must vanish."""
    if poly_eval(p, 1) != 0:
        raise DivisibilityFailure(f"{tuple(p)} is not divisible by (1-u)")
    out: list[Fraction] = []
    carry = _ZERO
    for c in p[:-1] if p else []:
        carry = carry + c
        out.append(carry)
    return poly_trim(out)


def poly_divide_by_one_minus_u_squared(p: Sequence[Fraction]) -> UPoly:
    """Exact quotient p(u) / (1-u)^2, raising DivisibilityFailure otherwise."""
    return _divide_by_one_minus_u(_divide_by_one_minus_u(p))


def poly_text(p: Sequence[Fraction]) -> str:
    """Compact display like "u^2 - 2*u^3 + u^4" (zero polynomial prints "0")."""
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and k > 0) else str(mag)
        if k == 1:
            body += ("" if body == "" else "*") + "u"
        elif k > 1:
            body += ("" if body == "" else "*") + f"u^{k}"
        terms.append(("-" if c < 0 else "+", body or "0"))
    if not terms:
        return "0"
    sign, body = terms[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class UPolySeries:
    """Series in x whose coefficients are exact polynomials in the marker u."""

    coeffs: tuple[UPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> UPoly:
        return self.coeffs[n]

    def egf_poly(self, n: int) -> UPoly:
        """n! times the x^n coefficient polynomial."""
        return poly_scale(self.coeffs[n], math.factorial(n))
