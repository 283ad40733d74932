"""Square-root forms from a modulated feedback system.

Feeding (4/sqrt(pi)) e^(-t^2) f_n(t) through y' + g y = g turns each base
approximant into sqrt(radicand)/sqrt(pi) with a bounded relative error on
the whole positive axis: no transition point needed. The radicand constants
times pi form a sequence of rationals converging to pi.
"""

import mpmath as mp

from erfkit import CTX34, build_sqrt, build_subinterval, complementary_demarcation, sqrt_transform
from erfkit.render import polyexp_str
from erfkit.tables import sqrt_family_bound

print("Order-0 form:", "sqrt(%s)/sqrt(pi)" % polyexp_str(build_sqrt(0).radicand()))

print("\npi * p_{n,0} converges to pi:")
with CTX34.workdps():
    for n in range(7):
        q0 = build_sqrt(n).q0
        val = mp.mpf(q0.numerator) / q0.denominator
        print("  n=%d: %-16s = %s (gap %s)" % (n, q0, mp.nstr(val, 10), mp.nstr(abs(val - mp.pi), 2)))

print("\nBounded relative error on (0, inf):")
for n in (0, 4, 8, 16):
    print("  order %2d: re_B = %s" % (n, mp.nstr(sqrt_family_bound(build_sqrt(n), CTX34, 800), 3)))

print("\nThe same transform applied to a four-sub-interval base does better:")
ext = sqrt_transform(build_subinterval(1, 4).form, 1)
print("  base f_{1,4}: re_B = %s (constant %s)" % (
    mp.nstr(sqrt_family_bound(ext, CTX34, 800), 3), ext.q0))

print("\nComplementary demarcation e_C with e_C^2 + erf^2 = 1:")
ec = complementary_demarcation(6)
with CTX34.workdps():
    print("  e_C(0) =", ec.value(0, CTX34))
    print("  crossing e_C = erf-approx at x =", mp.nstr(ec.crossing(CTX34), 12))
    print("  (erf hits 1/sqrt(2) at 0.74373198514677)")
