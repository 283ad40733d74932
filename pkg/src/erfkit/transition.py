"""Relative-error sweeps, piecewise improved approximants and bound envelopes.

Sweeps use the deterministic grid x_i = a + i(b-a)/N for i = 1..N; the left
endpoint is excluded so x = 0 (where every approximant and erf both vanish)
never reaches the relative-error quotient. Reference values are cached per
(interval, N, digits) because table reproduction reuses the same grids many
times.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .exact import RationalPolynomial, as_mpf
from .oracle import CTX34, PrecisionContext, erf_ref, sqrt_pi

_REF_GRID_CACHE: dict = {}


def _as_callable(approx):
    return approx.value if hasattr(approx, "value") else approx


def reference_grid(interval, n_points: int, ctx: PrecisionContext):
    """Grid points and cached erf references for a sweep specification."""
    a, b = interval
    key = (str(a), str(b), n_points, ctx.working_digits, ctx.guard_digits)
    hit = _REF_GRID_CACHE.get(key)
    if hit is not None:
        return hit
    with ctx.workdps():
        am, bm = as_mpf(a), as_mpf(b)
        step = (bm - am) / n_points
        xs = tuple(am + i * step for i in range(1, n_points + 1))
        refs = tuple(erf_ref(x, ctx) for x in xs)
    _REF_GRID_CACHE[key] = (xs, refs)
    return xs, refs


@dataclass(frozen=True)
class SweepReport:
    """Certification record: grid spec, signed per-point errors, bound, argmax."""

    interval: tuple
    n_points: int
    digits: int
    xs: tuple
    re: tuple
    re_b: object
    argmax_x: object
    argmax_index: int

    def rows(self):
        for x, r in zip(self.xs, self.re):
            yield x, r, abs(r)

    def summary(self) -> dict:
        return {
            "schema": "erfkit-sweep/1",
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "points": self.n_points,
            "digits": self.digits,
            "re_b": mp.nstr(self.re_b, 6),
            "argmax_x": mp.nstr(self.argmax_x, 12),
            "argmax_index": self.argmax_index,
        }


def sweep(approx, interval, n_points: int, ctx: PrecisionContext = CTX34) -> SweepReport:
    """Relative-error sweep of an approximant against the erf oracle."""
    if n_points < 2:
        raise ValueError("sweep needs at least 2 points")
    fn = _as_callable(approx)
    xs, refs = reference_grid(interval, n_points, ctx)
    with ctx.workdps():
        res = []
        best = mp.mpf(-1)
        best_i = 0
        for i, (x, ref) in enumerate(zip(xs, refs)):
            r = 1 - fn(x, ctx) / ref
            res.append(r)
            if abs(r) > best:
                best = abs(r)
                best_i = i
    return SweepReport(
        interval=(interval[0], interval[1]),
        n_points=n_points,
        digits=ctx.working_digits,
        xs=xs,
        re=tuple(res),
        re_b=best,
        argmax_x=xs[best_i],
        argmax_index=best_i,
    )


@dataclass(frozen=True)
class PiecewiseApproximant:
    """Inner approximant switched to the constant 1 beyond x_o (odd overall)."""

    inner: object
    x_o: object

    def value(self, x, ctx: PrecisionContext = CTX34):
        xm = mp.mpf(x)
        if xm < 0:
            return -self.value(-xm, ctx)
        if xm <= self.x_o:
            return _as_callable(self.inner)(xm, ctx)
        return mp.mpf(1)


@dataclass(frozen=True)
class TransitionResult:
    x_o: object
    re_b: object
    tail_never_better: bool

    @property
    def pair(self):
        return self.x_o, self.re_b


def optimize_transition(
    inner, interval, n_points: int, ctx: PrecisionContext = CTX34
) -> TransitionResult:
    """Transition point for switching to the constant-1 tail, plus the bound.

    x_o is the first grid point where |1 - f_n/erf| has risen to meet
    |1 - 1/erf| (the crossing of the two error curves); when the inner error
    has interior humps the assembled bound is flat around the crossing, so
    this choice also minimizes the piecewise re_B up to grid quantization.
    The smallest qualifying grid point is taken; the returned re_B is the
    max of the inner errors up to x_o and the tail errors beyond it.

    When the inner curve never reaches the tail curve, the sweep is reported
    with x_o at the last grid point and tail_never_better set.
    """
    fn = _as_callable(inner)
    xs, refs = reference_grid(interval, n_points, ctx)
    n = len(xs)
    with ctx.workdps():
        one = mp.mpf(1)
        inner_abs = [abs(1 - fn(x, ctx) / ref) for x, ref in zip(xs, refs)]
        tail_abs = [abs(1 - one / ref) for ref in refs]
        cross = None
        for j in range(n):
            if inner_abs[j] >= tail_abs[j]:
                cross = j
                break
        if cross is None:
            return TransitionResult(xs[-1], max(inner_abs), tail_never_better=True)
        bound = max(inner_abs[: cross + 1])
        if cross + 1 < n:
            bound = max(bound, max(tail_abs[cross + 1 :]))
    return TransitionResult(xs[cross], bound, tail_never_better=False)


def improved(inner, interval, n_points: int, ctx: PrecisionContext = CTX34):
    """Convenience: optimize the transition and return the piecewise approximant."""
    result = optimize_transition(inner, interval, n_points, ctx)
    return PiecewiseApproximant(inner, result.x_o), result


@dataclass(frozen=True)
class TaylorApproximant:
    """Odd-order Taylor partial sum; ``poly`` is sqrt(pi) * T_n."""

    order: int
    poly: RationalPolynomial

    def value(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            return self.poly.eval_mpf(mp.mpf(x)) / sqrt_pi()


def taylor(n: int) -> TaylorApproximant:
    """T_n(x) = (2/sqrt(pi)) sum_k (-1)^k x^(2k+1) / ((2k+1) k!), k <= (n-1)/2."""
    if n < 1 or n % 2 == 0:
        raise ValueError("Taylor order must be odd and >= 1, got %r" % n)
    import math

    coeffs = [Fraction(0)] * (n + 1)
    for k in range((n - 1) // 2 + 1):
        coeffs[2 * k + 1] = Fraction(2 * (-1) ** k, (2 * k + 1) * math.factorial(k))
    return TaylorApproximant(n, RationalPolynomial(coeffs))


@dataclass(frozen=True)
class EnvelopePair:
    """Certified lower/upper bracketing functions f_A/(1 +- eps_B)."""

    base: object
    eps_b: object

    def __post_init__(self):
        e = mp.mpf(self.eps_b)
        if not 0 < e < 1:
            raise ValueError("envelope requires 0 < eps_B < 1")

    def lower(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            return _as_callable(self.base)(x, ctx) / (1 + mp.mpf(self.eps_b))

    def upper(self, x, ctx: PrecisionContext = CTX34):
        with ctx.workdps():
            return _as_callable(self.base)(x, ctx) / (1 - mp.mpf(self.eps_b))

    def bound_errors(self):
        """Worst-case relative errors (lower, upper): 2e/(1+e), 2e/(1-e)."""
        e = mp.mpf(self.eps_b)
        return 2 * e / (1 + e), 2 * e / (1 - e)


def envelope(base, eps_b) -> EnvelopePair:
    return EnvelopePair(base, eps_b)


def published_bounds(x, which: str, ctx: PrecisionContext = CTX34, p=1, q=None):
    """Literature lower/upper bounds for erf: 'chu', 'neuman' or 'yang'.

    Chu defaults to p = 1 and the smallest admissible q = 4/pi.
    """
    with ctx.workdps():
        xm = mp.mpf(x)
        if xm <= 0:
            raise ValueError("published bounds are stated for x > 0")
        u = xm * xm
        if which == "chu":
            qv = 4 / mp.pi if q is None else mp.mpf(q)
            return mp.sqrt(1 - mp.exp(-p * u)), mp.sqrt(1 - mp.exp(-qv * u))
        if which == "neuman":
            lower = 2 * xm / sqrt_pi() * mp.exp(-u / 3)
            upper = 4 * xm / (3 * sqrt_pi()) * (1 + mp.exp(-u) / 2)
            return lower, upper
        if which == "yang":
            pi = mp.pi
            lower = mp.sqrt(
                1
                - (20 / (3 * pi)) * (1 - pi / 4) * mp.exp(-8 * u / 5)
                - (mp.mpf(8) / 3) * (1 - 5 / (2 * pi)) * mp.exp(-u)
            )
            p0 = (21 * pi - 60 + mp.sqrt(3 * (147 * pi**2 - 920 * pi + 1440))) / (
                30 * (pi - 3)
            )
            lam = 4 * (7 * pi - 20 - 5 * (pi - 3) * p0) / (pi * (15 * p0**2 - 40 * p0 + 28))
            mu = 4 * (5 * p0 - 7) / (5 * (3 * p0 - 4))
            upper = mp.sqrt(1 - lam * mp.exp(-p0 * u) - (1 - lam) * mp.exp(-mu * u))
            return lower, upper
        raise ValueError("unknown bound family %r" % which)
