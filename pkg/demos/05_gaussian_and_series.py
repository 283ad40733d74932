"""Spin-offs: rational Gaussian approximants and new erf series.

Differentiating the spline identity and solving for e^(-x^2) produces even
rational approximants g_n; the residual derivative, Taylor-expanded and
integrated term by term, yields erf series whose early terms never change
as more are added.
"""

import mpmath as mp

from erfkit import CTX34, build_erf_series, build_gauss_g, build_gauss_h, erf_ref
from erfkit.render import poly_str
from erfkit.tables import gauss_sweep

g2 = build_gauss_g(2)
print("g_2(x) = (%s) / (%s)" % (poly_str(g2.numerator), poly_str(g2.denominator)))

print("\nBounds over the three-sigma interval [0, 3/sqrt(2)]:")
with CTX34.workdps():
    b = 3 / mp.sqrt(2)
for n in (4, 7, 12):
    gb = gauss_sweep(build_gauss_g(n), (0, b), 2000, CTX34)
    hb = gauss_sweep(build_gauss_h(n), (0, b), 2000, CTX34)
    print("  n=%2d: g bound %-10s h bound %s" % (n, mp.nstr(gb, 3), mp.nstr(hb, 3)))

print("\nResidual series on top of f_1 (early coefficients are stable):")
for terms in (1, 2, 4):
    s = build_erf_series(1, terms)
    print("  %d terms: tail = %s" % (terms, poly_str(s.tail)))

print("\nAccuracy near the origin improves two powers per term:")
with CTX34.workdps():
    x = mp.mpf("0.25")
    ref = erf_ref(x, CTX34)
    for terms in (1, 2, 3, 4):
        s = build_erf_series(1, terms)
        print("  %d terms: |erf - series|(0.25) = %s" % (terms, mp.nstr(abs(ref - s.value(x, CTX34)), 2)))
