"""Exponential generating functions, built exactly and checked against counts.

Every builder returns a truncated exact series and raises AssertionError with
the first mismatching index if its coefficients disagree with the counting
module, so a successfully returned series is already cross-validated.  The
arccos piece of the PAP series is never expanded directly (its argument has a
nonzero constant term); two independent constructions are used instead:
2*arcsin(x/2) by composition, and termwise integration of (1-x^2/4)^(-1/2),
which is its derivative.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .sequences import (
    derangement_count,
    derangement_parity_counts,
    pad_parity_difference,
    pap_count,
    pap_parity_counts,
    signed_pad_excedance_diff,
)
from .series import (
    Series,
    UPoly,
    UPolySeries,
    exp_series,
    geometric,
    poly_divide_by_one_minus_u_squared,
    poly_trim,
)


def _assert_counts(series: Series, counts, name: str, start: int = 0) -> None:
    for n in range(start, series.order + 1):
        expected = counts(n)
        got = series.egf_value(n)
        if got != expected:
            raise AssertionError(f"{name}: n!*c_n mismatch at n={n}: {got} != {expected}")


def pap_egf(order: int) -> Series:
    """EGF of the PAP counts: 2/(2-x) + arccos(1-x^2/2) / ((2-x) sqrt(1-x^2/4)).

    Built via arccos(1-x^2/2) = 2 arcsin(x/2) and cross-checked against the
    equivalent form (2 sqrt(4-x^2) + 2 arccos(1-x^2/2)) / ((2-x) sqrt(4-x^2))
    with the arccos expanded by integration instead of composition.
    """
    x = Series.x(order)
    arc_by_composition = 2 * (x / 2).arcsin()
    arc_by_integration = (1 / (1 - x ** 2 / 4).sqrt()).integrate()
    if arc_by_composition != arc_by_integration:
        raise AssertionError("the two arccos(1-x^2/2) constructions disagree")
    series = 2 / (2 - x) + arc_by_composition / ((2 - x) * (1 - x ** 2 / 4).sqrt())
    alt = (2 * (4 - x ** 2).sqrt() + 2 * arc_by_integration) / ((2 - x) * (4 - x ** 2).sqrt())
    if series != alt:
        raise AssertionError("the two PAP EGF constructions disagree")
    _assert_counts(series, pap_count, "pap egf")
    return series


def pap_parity_egfs(order: int) -> tuple[Series, Series]:
    """(even, odd) PAP EGFs: (P(x) +- (x^2/2 + x + 1)) / 2."""
    p = pap_egf(order)
    x = Series.x(order)
    shift = x ** 2 / 2 + x + 1
    even = (p + shift) / 2
    odd = (p - shift) / 2
    _assert_counts(even, lambda n: pap_parity_counts(n)[0], "pap even egf")
    _assert_counts(odd, lambda n: pap_parity_counts(n)[1], "pap odd egf")
    if even + odd != p:
        raise AssertionError("parity parts do not sum back to the PAP EGF")
    return even, odd


def check_pap_functional_equations(order: int) -> None:
    """The even/odd parts satisfy E = (x/2) O + 1 and O = (x/2) E + (1/2) int E."""
    p = pap_egf(order)
    even, odd = p.even_part(), p.odd_part()
    x = Series.x(order)
    if even != (x / 2) * odd + 1:
        raise AssertionError("even-part functional equation fails")
    if odd != (x / 2) * even + even.integrate() / 2:
        raise AssertionError("odd-part functional equation fails")


def check_pap_even_ode(order: int) -> None:
    """The even part E satisfies 2x (1 - x^2/4) E' = (x^2 + 2) E - 2.

    Checked termwise through order - 2 (differentiation costs one order and
    the multiplication by x realigns the comparison window).
    """
    even = pap_egf(order).even_part()
    x = Series.x(order)
    lhs = 2 * x.truncate(order - 1) * (1 - x.truncate(order - 1) ** 2 / 4) * even.differentiate()
    rhs = (x ** 2 + 2) * even - 2
    limit = order - 2
    for n in range(limit + 1):
        if lhs[n] != rhs[n]:
            raise AssertionError(f"even-part ODE fails at order {n}: {lhs[n]} != {rhs[n]}")


def fdiff_egf(order: int) -> Series:
    """EGF of the signed PAD census: e^x/8 + e^{-x} (2x^2 + 6x + 7)/8."""
    x = Series.x(order)
    series = exp_series(order) / 8 + exp_series(order, -1) * (2 * x ** 2 + 6 * x + 7) / 8
    _assert_counts(series, pad_parity_difference, "signed census egf")
    return series


def reference_egfs(order: int) -> dict[str, Series]:
    """The six reference EGFs: permutations and derangements, total and by sign."""
    x = Series.x(order)
    inv = geometric(order)
    exp_neg = exp_series(order, -1)

    def perm_even_count(n: int) -> int:
        return 1 if n < 2 else math.factorial(n) // 2

    def perm_odd_count(n: int) -> int:
        return 0 if n < 2 else math.factorial(n) // 2

    out = {
        "perm": inv,
        "perm-even": (2 - x ** 2) / (2 - 2 * x),
        "perm-odd": (x ** 2) / (2 - 2 * x),
        "derangement": exp_neg * inv,
        "der-even": (2 - x ** 2) * exp_neg / (2 * (1 - x)),
        "der-odd": (x ** 2) * exp_neg / (2 * (1 - x)),
    }
    _assert_counts(out["perm"], math.factorial, "perm egf")
    _assert_counts(out["perm-even"], perm_even_count, "even perm egf")
    _assert_counts(out["perm-odd"], perm_odd_count, "odd perm egf")
    _assert_counts(out["derangement"], derangement_count, "derangement egf")
    _assert_counts(out["der-even"], lambda n: derangement_parity_counts(n)[0], "even derangement egf")
    _assert_counts(out["der-odd"], lambda n: derangement_parity_counts(n)[1], "odd derangement egf")
    return out


def _bivariate_numerator(n: int) -> UPoly:
    """n! times the x^n coefficient of the bivariate numerator, as a u-polynomial.

    u-exponents are tracked in half units so the sqrt(u) factors stay symbolic;
    only even half-exponents may survive the assembly.
    """
    half: dict[int, Fraction] = {}

    def add(half_exponent: int, value: Fraction) -> None:
        half[half_exponent] = half.get(half_exponent, Fraction(0)) + value

    sign = -1 if n % 2 else 1
    add(4, Fraction(sign))              # u^2 e^{-x}
    add(2 * n, Fraction(sign))          # e^{-ux}
    if n % 2 == 0:
        add(n + 2, Fraction(-2))        # -2u cosh(sqrt(u) x) at x^{2m}: -2 u^{m+1}
    else:
        add(n + 1, Fraction(1))         # (u + u^2)/sqrt(u) * sinh(sqrt(u) x)
        add(n + 3, Fraction(1))         #   at x^{2m+1}: u^{m+1} + u^{m+2}
    if n == 0:
        add(0, Fraction(-1))            # -(1-u)^2
        add(2, Fraction(2))
        add(4, Fraction(-1))
    stray = {h: v for h, v in half.items() if v != 0 and h % 2}
    if stray:
        raise AssertionError(f"half-integer u-powers survive at n={n}: {stray}")
    degree = max((h // 2 for h, v in half.items() if v != 0), default=0)
    return poly_trim(tuple(half.get(2 * k, Fraction(0)) for k in range(degree + 1)))


def bivariate_diff_egf(order: int) -> UPolySeries:
    """The bivariate EGF of the signed excedance differences.

    For each n the assembled numerator polynomial is divided exactly by
    (1-u)^2; the quotient must be zero for n < 4 and equal to
    sum_k diff(n,k) u^k afterwards.
    """
    coeffs: list[UPoly] = []
    for n in range(order + 1):
        numerator = _bivariate_numerator(n)
        quotient = poly_divide_by_one_minus_u_squared(numerator)
        if n < 4:
            expected: UPoly = ()
        else:
            expected = poly_trim(
                tuple(
                    Fraction(signed_pad_excedance_diff(n, k)) if 2 <= k <= n - 2 else Fraction(0)
                    for k in range(n - 1)
                )
            )
        if quotient != expected:
            raise AssertionError(
                f"bivariate quotient mismatch at n={n}: {quotient} != {expected}"
            )
        factor = Fraction(1, math.factorial(n))
        coeffs.append(poly_trim(tuple(c * factor for c in quotient)))
    return UPolySeries(tuple(coeffs))


EGF_BUILDERS = {
    "pap": pap_egf,
    "pap-even": lambda order: pap_parity_egfs(order)[0],
    "pap-odd": lambda order: pap_parity_egfs(order)[1],
    "diff": fdiff_egf,
    "perm": lambda order: reference_egfs(order)["perm"],
    "perm-even": lambda order: reference_egfs(order)["perm-even"],
    "perm-odd": lambda order: reference_egfs(order)["perm-odd"],
    "derangement": lambda order: reference_egfs(order)["derangement"],
    "der-even": lambda order: reference_egfs(order)["der-even"],
    "der-odd": lambda order: reference_egfs(order)["der-odd"],
}
