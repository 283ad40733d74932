"""Walk through the basic spline-based erf approximants.

Generates the first few orders with exact rational coefficients, prints them
in the familiar closed form, and compares their accuracy against Taylor
partial sums of matching cost.
"""

import mpmath as mp

from erfkit import CTX34, build_spline, erf_ref, taylor
from erfkit.render import polyexp_str

print("Closed forms (all coefficients exact rationals):")
for n in range(4):
    f = build_spline(n)
    print("  f_%d(x) = (%s)/sqrt(pi)" % (n, polyexp_str(f.form)))

print("\nAccuracy at x = 1 (erf(1) = %s...):" % mp.nstr(erf_ref(1, CTX34), 12))
with CTX34.workdps():
    ref = erf_ref(1, CTX34)
    for n in range(0, 11, 2):
        err = abs(ref - build_spline(n).value(1, CTX34))
        print("  order %2d spline: |error| = %s" % (n, mp.nstr(err, 3)))

print("\nSame-order-of-work Taylor sums for contrast at x = 2:")
with CTX34.workdps():
    ref = erf_ref(2, CTX34)
    for n in (5, 9, 15):
        err_t = abs(ref - taylor(n).value(2, CTX34))
        err_s = abs(ref - build_spline((n - 1) // 2).value(2, CTX34))
        print(
            "  Taylor n=%2d: %s   spline n=%d: %s"
            % (n, mp.nstr(err_t, 3), (n - 1) // 2, mp.nstr(err_s, 3))
        )

print("\nThe residual derivative is known in closed form; its leading")
print("coefficient fixes the small-x error scale x^(2n+2)/x_{n,0}:")
from erfkit import residual_diagnostics

for n in range(4):
    d = residual_diagnostics(n, 3)
    print("  n=%d: x_{n,0} = %d, series starts %s" % (n, d.x_n0, [str(c) for c in d.g_series]))
