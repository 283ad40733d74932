"""Rational approximants for exp(-x^2) and the residual-series erf expansions.

g_n comes from differentiating the order-n spline approximant and solving for
e^(-x^2); h_n is the earlier even/even rational form built from the same
quadrature weights. The erf series attach a truncated Taylor tail of the
residual derivative to f_n; tail coefficients are regenerated by term-wise
integration rather than transcribed, since the printed nested-product
denominators are ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .exact import (
    RationalPolynomial,
    ZERO_POLY,
    hermite_at_zero,
    hermite_table,
    spline_coeff,
)
from .oracle import CTX34, PrecisionContext, sqrt_pi
from .spline import SplineApproximant, build_spline, residual_diagnostics, residual_scale


@dataclass(frozen=True)
class RationalFunctionApproximant:
    """Even rational function with value 1 at the origin."""

    order: int
    numerator: RationalPolynomial
    denominator: RationalPolynomial

    def value(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            xm = mp.mpf(x)
            return self.numerator.eval_mpf(xm) / self.denominator.eval_mpf(xm)


def gauss_g_parts(n: int) -> tuple:
    """Raw numerator/denominator of the derivative identity (before normalizing).

    numerator  = sum_k c_{n,k}(k+1) x^k p(k,0)
    denominator = 1 + sum_k c_{n,k}(-1)^(k+1) x^k [(k+1-2x^2) p(k,x) + x p'(k,x)]
    """
    table = hermite_table(n)
    num = ZERO_POLY
    den = RationalPolynomial([1])
    for k in range(n + 1):
        c = spline_coeff(n, k)
        pk0 = hermite_at_zero(k)
        if pk0:
            num = num + RationalPolynomial([c * (k + 1) * pk0]).mul_x_power(k)
        pk = table[k]
        bracket = RationalPolynomial([k + 1, 0, -2]) * pk + pk.derivative().mul_x_power(1)
        sign = 1 if k % 2 else -1  # (-1)^(k+1)
        den = den + (sign * c) * bracket.mul_x_power(k)
    return num, den


def build_gauss_g(n: int) -> RationalFunctionApproximant:
    """g_n for exp(-x^2), normalized so both constant terms are 1."""
    num, den = gauss_g_parts(n)
    scale = 1 / num.coeff(0)
    if den.coeff(0) != num.coeff(0):
        raise AssertionError("g_n parts must share the constant term 1/2")
    return RationalFunctionApproximant(n, scale * num, scale * den)


def build_gauss_h(n: int) -> RationalFunctionApproximant:
    """h_n: numerator 1 - c_{n,0}x^2 + c_{n,1}x^4 - ..., denominator all-plus."""
    num = [Fraction(0)] * (2 * n + 3)
    den = [Fraction(0)] * (2 * n + 3)
    num[0] = den[0] = Fraction(1)
    for k in range(n + 1):
        c = spline_coeff(n, k)
        num[2 * k + 2] = c * (-1) ** (k + 1)
        den[2 * k + 2] = c
    return RationalFunctionApproximant(n, RationalPolynomial(num), RationalPolynomial(den))


@dataclass(frozen=True)
class ErfSeriesApproximant:
    """f_n plus a truncated odd-power tail for the residual; tail is sqrt(pi)-scaled."""

    base_order: int
    base: SplineApproximant
    tail_terms: int
    tail: RationalPolynomial

    def value(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            xm = mp.mpf(x)
            if xm < 0:
                return -self.value(-xm, ctx)
            return (self.base.form.eval_raw(xm) + self.tail.eval_mpf(xm)) / sqrt_pi()


def build_erf_series(n: int, tail_terms: int) -> ErfSeriesApproximant:
    """Series erf = f_n + integral of the Taylor-expanded residual derivative.

    The tail coefficient of x^(2n+3+2k) is g-series coefficient k divided by
    (2n+3+2k) and by x_{n,0}; adding terms never changes earlier coefficients.
    """
    if tail_terms < 1:
        raise ValueError("tail_terms must be >= 1")
    diag = residual_diagnostics(n, tail_terms)
    coeffs = [Fraction(0)] * (2 * n + 3 + 2 * (tail_terms - 1) + 1)
    for k, s in enumerate(diag.g_series):
        power = 2 * n + 3 + 2 * k
        coeffs[power] = s / (power * diag.x_n0)
    return ErfSeriesApproximant(n, build_spline(n), tail_terms, RationalPolynomial(coeffs))


def series_tail_coefficient(n: int, k: int) -> Fraction:
    """Exact coefficient of x^(2n+3+2k)/sqrt(pi) in the residual series."""
    diag = residual_diagnostics(n, k + 1)
    power = 2 * n + 3 + 2 * k
    return diag.g_series[k] / (power * residual_scale(n))
