"""Square-root-form approximants from the modulated-feedback differential equation.

Driving y' + g y = g with g(t) = (4/sqrt(pi)) e^(-t^2) f(t) turns any odd
poly-exp approximant f into y = 1 - exp(-S) with S available in closed form;
sqrt(S) then approximates erf with an error bounded on all of [0, inf).
Coefficients are rational multiples of 1/pi, so the radicand is stored
pi-scaled and stays exact; pi enters only at evaluation.

Two independent construction routes are kept: the descending coefficient
recurrences (alpha_coeffs / beta_coeffs) and term-wise exact integration of
the driving signal (sqrt_transform). Their agreement is asserted in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .exact import (
    PolyExpSum,
    RationalPolynomial,
    fraction_to_mpf,
    hermite_table,
    integrate_odd,
    spline_coeff,
)
from .oracle import CTX34, PrecisionContext, sqrt_pi
from .spline import build_spline


@dataclass(frozen=True)
class SqrtForm:
    """Approximant sqrt(q0 + sum_i q_i(x) e^(-k_i x^2)) / sqrt(pi), all pi-scaled.

    q0 and the q_i coefficients are pi times the true radicand constants, so
    they are exact rationals; q0 -> pi as the base order grows. The radicand
    vanishes exactly at x = 0.
    """

    base_order: int
    q0: Fraction
    terms: tuple  # (rate, RationalPolynomial), pi-scaled

    def radicand(self) -> PolyExpSum:
        return PolyExpSum(((Fraction(0), RationalPolynomial([self.q0])),) + self.terms)

    def limit_value(self, ctx: PrecisionContext = CTX34):
        """Value approached as x -> inf: sqrt(q0/pi)."""
        with ctx.workdps():
            return mp.sqrt(fraction_to_mpf(self.q0) / mp.pi)

    def radicand_value(self, x, ctx: PrecisionContext = CTX34):
        """pi-scaled radicand at x (may be a rounding hair below zero near 0)."""
        with ctx.workdps():
            xm = mp.mpf(x)
            u = xm * xm
            acc = fraction_to_mpf(self.q0)
            for rate, poly in self.terms:
                acc += poly.eval_mpf(xm) * mp.exp(-fraction_to_mpf(rate) * u)
            return acc

    def value(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            xm = mp.mpf(x)
            if xm < 0:
                return -self.value(-xm, ctx)
            r = self.radicand_value(xm, ctx)
            if r < 0:
                if r < -(mp.mpf(10) ** (-(ctx.working_digits - 2))):
                    raise ArithmeticError(
                        "radicand significantly negative at x=%s: %s"
                        % (mp.nstr(xm, 8), mp.nstr(r, 5))
                    )
                r = mp.mpf(0)
            return mp.sqrt(r) / sqrt_pi()


def _hermite_coeff(table, k: int, j: int) -> Fraction:
    return table[k].coeff(j)


def alpha_coeffs(n: int) -> list:
    """pi-scaled coefficients of the e^(-x^2) polynomial, descending recurrence.

    Length m+1 with m = n for even n, n-1 for odd n; odd entries are zero.
    """
    table = hermite_table(n)
    m = n if n % 2 == 0 else n - 1
    alpha = [Fraction(0)] * (m + 1)
    if m == 0:
        alpha[0] = -4 * spline_coeff(n, 0) * _hermite_coeff(table, 0, 0)
        return alpha
    alpha[m] = -4 * spline_coeff(n, m) * _hermite_coeff(table, m, 0)
    for i in range(1, m // 2):
        j = m - 2 * i
        alpha[j] = Fraction(j + 2, 2) * alpha[j + 2] - 4 * spline_coeff(n, j) * _hermite_coeff(
            table, j, 0
        )
    alpha[0] = alpha[2] - 4 * spline_coeff(n, 0) * _hermite_coeff(table, 0, 0)
    return alpha


def beta_coeffs(n: int) -> list:
    """pi-scaled coefficients of the e^(-2x^2) polynomial, length 2n+1."""
    table = hermite_table(n)
    beta = [Fraction(0)] * (2 * n + 1)
    sign_n = -1 if n % 2 else 1
    beta[2 * n] = -2 * sign_n * spline_coeff(n, n) * _hermite_coeff(table, n, n)
    if n == 0:
        return beta
    for i in range(1, n):
        j = 2 * n - 2 * i
        total = Fraction(0)
        for k in range(n - i, min(2 * n - 2 * i, n) + 1):
            sign = -1 if k % 2 else 1
            total += sign * spline_coeff(n, k) * _hermite_coeff(table, k, 2 * (n - i) - k)
        beta[j] = Fraction(j + 2, 4) * beta[j + 2] - 2 * total
    beta[0] = beta[2] / 2 - 2 * spline_coeff(n, 0) * _hermite_coeff(table, 0, 0)
    return beta


def build_sqrt(n: int) -> SqrtForm:
    """Assemble the order-n sqrt form from the coefficient recurrences."""
    alpha = alpha_coeffs(n)
    beta = beta_coeffs(n)
    q0 = -(alpha[0] + beta[0])
    return SqrtForm(
        base_order=n,
        q0=q0,
        terms=(
            (Fraction(1), RationalPolynomial(alpha)),
            (Fraction(2), RationalPolynomial(beta)),
        ),
    )


def sqrt_transform(base: PolyExpSum, base_order: int = -1) -> SqrtForm:
    """Sqrt form for any odd sqrt(pi)-scaled poly-exp base approximant.

    The pi-scaled radicand S satisfies S'(x) = 4 e^(-x^2) base(x) with
    S(0) = 0; each odd monomial integrates in closed form, which is exactly
    the mechanism that makes the feedback differential equation solvable.
    Applied to build_spline(n).form this must reproduce build_sqrt(n).
    """
    for rate, poly in base.terms:
        if not poly.is_odd_poly():
            raise ValueError("sqrt_transform needs all-odd polynomials in the base")
    shifted = PolyExpSum([(rate + 1, 4 * poly) for rate, poly in base.terms])
    radicand = integrate_odd(shifted)
    q0 = radicand.poly_at(0).coeff(0)
    if radicand.poly_at(0).degree > 0:
        raise AssertionError("radicand polynomial part must be constant")
    terms = tuple((r, p) for r, p in radicand.terms if r != 0)
    return SqrtForm(base_order=base_order, q0=q0, terms=terms)


def pi_constant_sequence(max_order: int) -> list:
    """Exact rationals pi * p_{n,0} for n = 0..max_order; converges to pi."""
    return [build_sqrt(n).q0 for n in range(max_order + 1)]


@dataclass(frozen=True)
class ComplementaryDemarcation:
    """e_C with e_C^2 + erf^2 = 1, realized from an order-n radicand."""

    base_order: int
    form: SqrtForm

    def value(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            xm = mp.mpf(x)
            r = 1 - self.form.radicand_value(xm, ctx) / mp.pi
            if r < 0:
                r = mp.mpf(0)
            return mp.sqrt(r)

    def crossing(self, ctx: PrecisionContext = CTX34):
        """x where e_C meets the erf approximant, i.e. radicand = pi/2."""
        with ctx.workdps():
            target = mp.pi / 2

            def gap(x):
                return self.form.radicand_value(x, ctx) - target

            return mp.findroot(gap, mp.mpf("0.75"))


def complementary_demarcation(n: int) -> ComplementaryDemarcation:
    return ComplementaryDemarcation(n, build_sqrt(n))


def sqrt_of_spline(n: int) -> SqrtForm:
    """Sqrt form driven by the order-n single-interval spline (same as build_sqrt)."""
    return sqrt_transform(build_spline(n).form, base_order=n)
