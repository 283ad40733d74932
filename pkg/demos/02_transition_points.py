"""Optimal switching to the large-argument approximation erf ~ 1.

The relative error of a truncated approximant grows with x while the error
of the constant 1 shrinks; swapping at the crossing gives a bound valid on
all of [0, inf). This reproduces a slice of the transition-point table.
"""

import mpmath as mp

from erfkit import CTX34, build_spline, optimize_transition, sweep, taylor
from erfkit.transition import PiecewiseApproximant

print("order   x_o       re_B over [0, inf)")
for n in (0, 2, 4, 8, 12, 16):
    res = optimize_transition(build_spline(n), (0, 5), 10000, CTX34)
    print("  %2d    %-8s  %s" % (n, mp.nstr(res.x_o, 6), mp.nstr(res.re_b, 3)))

print("\nTaylor series improved the same way stay far behind:")
for n in (9, 21, 61):
    res = optimize_transition(taylor(n), (0, 4), 10000, CTX34)
    print("  T_%2d  %-8s  %s" % (n, mp.nstr(res.x_o, 6), mp.nstr(res.re_b, 3)))

print("\nAssembled piecewise approximant behaves like its best half everywhere:")
inner = build_spline(8)
res = optimize_transition(inner, (0, 5), 10000, CTX34)
piece = PiecewiseApproximant(inner, res.x_o)
rep = sweep(piece, (0, 5), 10000, CTX34)
print(
    "  n=8: transition %s, swept bound %s (argmax at x = %s)"
    % (mp.nstr(res.x_o, 6), mp.nstr(rep.re_b, 3), mp.nstr(rep.argmax_x, 6))
)
