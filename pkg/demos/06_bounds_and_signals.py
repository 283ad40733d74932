"""Certified envelopes and the two signal-processing applications.

A certified bound eps_B turns any approximant into strict lower/upper
bracketing functions. The closed-form output power and harmonic levels of an
erf limiter are checked against periodic-trapezoid quadrature, and the step
response of a double-pole filter against its exact form.
"""

from fractions import Fraction as F

import mpmath as mp

from erfkit import CTX34, build_subinterval, envelope, erf_ref, published_bounds
from erfkit.apps import (
    FilterModel,
    arbitrate_harmonics,
    filter_response_approx,
    filter_response_exact,
    output_power,
    output_power_quadrature,
)
from erfkit.spline import build_spline
from erfkit.transition import improved

print("Envelope from the improved f_{1,4} (certified bound 7.21e-5):")
piece, res = improved(build_subinterval(1, 4), (0, 8), 4000, CTX34)
with CTX34.workdps():
    env = envelope(piece, res.re_b * (1 + mp.mpf("1e-12")))
    lo_err, hi_err = env.bound_errors()
    print("  bound errors: lower %s, upper %s" % (mp.nstr(lo_err, 3), mp.nstr(hi_err, 3)))
    x = mp.mpf("1.5")
    print(
        "  at x=1.5: %s < erf = %s < %s"
        % (mp.nstr(env.lower(x, CTX34), 10), mp.nstr(erf_ref(x, CTX34), 10), mp.nstr(env.upper(x, CTX34), 10))
    )

print("\nLiterature bounds at x = 1 for comparison:")
with CTX34.workdps():
    ref = erf_ref(1, CTX34)
    for which in ("chu", "neuman", "yang"):
        lo, hi = published_bounds(1, which, CTX34)
        print("  %-7s %s < %s < %s" % (which, mp.nstr(lo, 8), mp.nstr(ref, 8), mp.nstr(hi, 8)))

print("\nOutput power of an erf limiter driven by a*sin:")
with CTX34.workdps():
    for a in ("0.5", "1", "2"):
        p = output_power(mp.mpf(a), CTX34)
        q = output_power_quadrature(mp.mpf(a), CTX34)
        print("  a=%s: closed %s, quadrature %s" % (a, mp.nstr(p, 8), mp.nstr(q, 8)))

print("\nHarmonic levels at a = 2 (closed forms arbitrated by quadrature):")
rep = arbitrate_harmonics(2, CTX34)
for k in (1, 3, 5, 7):
    closed, quad, dev, flagged = rep[k]
    tag = "FLAGGED - quadrature governs" if flagged else "ok"
    print("  k=%d: quadrature %-12s deviation %-9s %s" % (k, mp.nstr(quad, 6), mp.nstr(dev, 2), tag))

print("\nFiltered erf step (gamma = 1/2, double pole at f_p = 1):")
model = FilterModel(F(1, 2), 1)
piece6, _ = improved(build_spline(6), (0, 5), 4000, CTX34)
with CTX34.workdps():
    for t in ("0.5", "1", "2"):
        y = filter_response_exact(model, t, CTX34)
        y6 = filter_response_approx(model, piece6, t, CTX34)
        print("  t=%s: y = %s, order-6 approx = %s" % (t, mp.nstr(y, 10), mp.nstr(y6, 10)))
