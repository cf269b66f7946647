"""General-p norms, empirical embedding constants, and the interpolation
inequality checked per function.

The endpoint constants entering the interpolation product are certified
upper bounds (bounded-density measures); the per-function form avoids any
circular use of estimated operator norms.
"""

import numpy as np

from muntzlab import (PiecewiseDensityMeasure, PowerTailMeasure, ScaledMeasure,
                      empirical_embedding_constant, interpolation_check,
                      l1_unboundedness_witness, lebesgue, make_geometric,
                      point_mass)

seq = make_geometric(2, 2, 6)

print("=== empirical embedding constants (lower bounds at truncation) ===")
for name, mu in [("lebesgue", lebesgue()),
                 ("2 x lebesgue", ScaledMeasure(2.0, lebesgue())),
                 ("delta at 1/2", point_mass(0.5)),
                 ("power tail alpha=2", PowerTailMeasure(1.0, 2.0))]:
    row = []
    for p in (1.0, 2.0, 3.0):
        row.append(f"p={p:g}: {empirical_embedding_constant(seq, mu, p, 5, 8, seed=4):.5f}")
    print(f"  {name:20s} " + "  ".join(row))

print("\n=== interpolation inequality, p0 = 1, p1 = 2 ===")
battery = [("lebesgue", lebesgue()),
           ("2 x lebesgue", ScaledMeasure(2.0, lebesgue())),
           ("piecewise density", PiecewiseDensityMeasure(
               np.array([0.0, 0.5, 1.0]), np.array([0.5, 2.0])))]
for name, mu in battery:
    for t in (0.25, 0.5, 0.75):
        rep = interpolation_check(seq, mu, 1.0, 2.0, t, n=5, samples=50)
        print(f"  {name:18s} t = {t:4.2f}: p_t = {rep.p_t:.4f}, certified "
              f"C0 = {rep.c0:.4f}, C1 = {rep.c1:.4f}, violations = "
              f"{len(rep.violations)}, max slack = {rep.max_slack:.2e}")

rep = interpolation_check(seq, point_mass(0.5), 1.0, 2.0, 0.5, samples=5)
print(f"  atomic measure: inconclusive = {rep.inconclusive} "
      "(no certified endpoint constants; not a failure)")

print("\n=== L^1 witnesses: bounded for Lebesgue ===")
for n, v in l1_unboundedness_witness(seq, lebesgue()):
    print(f"  n = {n}: ||lambda_n x^lambda_n||_L1(mu) = {v:.6f} "
          f"(L1(m) norm is lambda/(lambda+1) < 1)")
