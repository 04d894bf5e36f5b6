#!/usr/bin/env python3
"""Tour of the closed-form guarantee machinery.

Prints the worst-case constants, the per-k error curves with their
crossing point, and samples of the two lower-bound curves. The `modkit
bounds --figure {1,2,3,4}` subcommand emits the same data as CSV for
plotting.
"""

import numpy as np

from modkit import bounds
from modkit.bounds import CONSTANTS

print("worst-case constants")
print(f"  full scheme : {CONSTANTS.full_worst_error:.10f}  (< 0.42084)")
print(f"  cut scheme  : {CONSTANTS.cut_worst_error:.10f}  (< 0.16598)")
print(f"  chord slope alpha = {CONSTANTS.cut_alpha:.7f}, tangency beta = "
      f"{CONSTANTS.cut_beta:.7f}")

x = CONSTANTS.full_crossover
print(f"\nper-k error curves cross at x = {x:.6f}:")
for k in range(1, 6):
    marker = " <- ties for the minimum" if k in (2, 3) else ""
    print(f"  g_{k}({x:.4f}) = {bounds.g_k(x, k):.9f}{marker}")

print("\nguaranteed expected score vs. optimum (full scheme, mass bound 1):")
for opt in (0.0, 0.3, x, 0.9, 0.99, 0.99900):
    print(f"  opt = {opt:<7.5f} -> floor = {bounds.full_lower_bound_curve(opt):.5f}")
print("  (near-perfect instances are recovered near-perfectly)")

print("\nguaranteed expected score vs. bipartition optimum:")
for opt_cut in (0.0, 0.2, CONSTANTS.cut_threshold, 0.45, 0.5):
    print(f"  opt_cut = {opt_cut:<8.6f} -> floor = "
          f"{bounds.cut_error_curve(opt_cut):.5f}")

print("\nenvelope sanity on a grid:")
xs = np.linspace(-1.0, 1.0, 100001)
prob = 1.0 - np.arccos(xs) / np.pi
plus, minus = bounds.cut_envelopes(xs)
print(f"  max(p_plus_lce - prob)  = {np.max(plus - prob):.2e}  (<= 0 expected)")
print(f"  max(p_minus_lce + prob) = {np.max(minus + prob):.2e}  (<= 0 expected)")

report = bounds.verify_auxiliary_bounds([2, 3, 4, 8, 64, 1024], grid=1000)
print(f"\nauxiliary checks: k-cap={report['k_cap']}, jordan={report['jordan']}, "
      f"l_k={report['l_k']}")
print(f"largest minimizing k per n: {report['worst_argmin']}")
