"""Both counterexample constructions at desk scale.

Construction 1: an atomic measure that embeds M^2 but not M^1 - the squared
norms of the normalized monomial images are summable while the L^1 witness
norms grow without bound.

Construction 2: for q = 1 > r = 1/2, an embedding whose singular values lie
in l^q but not l^r, certified by two-sided norm bounds and the off-diagonal
Hilbert-Schmidt test of the normalized image Gramian.
"""

import math

import numpy as np

from muntzlab import (build_example1, build_example2, verify_example1,
                      verify_example2)

print("=== construction 1 (n_max = 8) ===")
build = build_example1(8)
print("exponents:", np.array2string(build.sequence.values, precision=3))
report = verify_example1(build)
print(f"fitted constant in ||g_n||^2 <= C ln(n)/n^2: C = {report.c_fit:.4f}")
print(f"{'n':>3} {'||g_n||^2':>12} {'partial sum':>12} {'L1 witness':>12} "
      f"{'own term / ln n':>16}")
for i in range(8):
    ratio = report.witness_ratios[i - 1] if i >= 1 else float("nan")
    print(f"{i + 1:>3} {report.g_norms_sq[i]:>12.6f} "
          f"{report.partial_sums[i]:>12.6f} {report.l1_witnesses[i]:>12.6f} "
          f"{ratio:>16.6f}")
print("L2 side: partial sums settle; op norms across truncations:",
      ", ".join(f"({n}, {v:.6f})" for n, v in report.op_norms))
print("L1 side: witnesses strictly increasing:", report.witnesses_increasing)

print("\n=== construction 2 (q = 1, r = 1/2, n_max = 8) ===")
build2 = build_example2(1.0, 0.5, 8)
print(f"theta = {build2.theta}, lacunarity ratio >= 2 enforced")
report2 = verify_example2(build2)
print(f"{'n':>3} {'alpha_n^2/e':>12} {'||i g_n||^2':>12} {'1.5 alpha_n^2':>14}")
for i in range(8):
    print(f"{i + 1:>3} {report2.lower_bounds[i]:>12.6f} "
          f"{report2.norms_sq[i]:>12.6f} {report2.upper_bounds[i]:>14.6f}")
print(f"off-diagonal HS sum of the image Gramian: "
      f"{report2.offdiag_hs_sq:.6f} < e/4 = {math.e / 4:.6f} "
      f"-> Riesz sequence: {report2.gram_invertible}")
print("l^q partial sums:", np.array2string(report2.lq_partial_sums, precision=4))
print("l^r partial sums:", np.array2string(report2.lr_partial_sums, precision=4))
print("Schatten cross-check (N, S_q):",
      ", ".join(f"({n}, {v:.5f})" for n, v in report2.schatten_trend_q))
print("Schatten cross-check (N, S_r):",
      ", ".join(f"({n}, {v:.5f})" for n, v in report2.schatten_trend_r))
