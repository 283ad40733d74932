"""The two generalizations: equal sub-intervals and tabulated grid constants.

Splitting [0, x] into m pieces turns the two-rate form into an (m+1)-rate
poly-exp sum whose accuracy improves dramatically with m; tabulating erf on
a fixed grid and splining only the final partial cell does the same with a
small table.
"""

from fractions import Fraction as F

import mpmath as mp

from erfkit import (
    CTX34,
    GridApproximant,
    build_grid_table,
    build_subinterval,
    optimize_transition,
    sweep,
)

print("First-order rule, m sub-intervals, improved with the erf~1 tail:")
for m in (1, 4, 8, 16):
    res = optimize_transition(build_subinterval(1, m), (0, 8), 4000, CTX34)
    print("  m=%2d: x_o = %-7s re_B = %s" % (m, mp.nstr(res.x_o, 5), mp.nstr(res.re_b, 3)))

print("\nFourth-order rule over four sub-intervals reaches 1e-7 territory:")
res = optimize_transition(build_subinterval(4, 4), (0, 8), 10000, CTX34)
print("  n=4, m=4: x_o = %s, re_B = %s" % (mp.nstr(res.x_o, 6), mp.nstr(res.re_b, 3)))

print("\nGrid tables: erf increments c_k at resolution 1/2:")
table = build_grid_table(F(1, 2), 12, CTX34)
for k in (1, 2, 6, 12):
    print("  c_%-2d = %s" % (k, mp.nstr(table.c[k], 10)))

print("\nDynamic-constant-plus-spline bounds over (0, 8]:")
wide = build_grid_table(F(1, 2), 18, CTX34)
for n in (2, 4, 6):
    rep = sweep(GridApproximant(n, wide), (0, 8), 4000, CTX34)
    print("  order %d at resolution 1/2: re_B = %s" % (n, mp.nstr(rep.re_b, 3)))

print("\nHalving the resolution at fixed order keeps shrinking the bound:")
for delta in (F(1), F(1, 2), F(1, 4)):
    t = build_grid_table(delta, int(8 / delta) + 2, CTX34)
    rep = sweep(GridApproximant(2, t), (0, 8), 4000, CTX34)
    print("  resolution %s: re_B = %s" % (delta, mp.nstr(rep.re_b, 3)))
