"""Exponent sequences, lacunarity, block structure, and the distances d_n.

The distance from x**lambda_n to the span of the other monomials controls
the coefficient functionals of the system; we compute it by the stable
Cauchy product formula and cross-check against a 200-bit determinant-ratio
oracle.
"""

from muntzlab import (classify, distances, find_blocks, make_explicit,
                      make_geometric, make_power)
from muntzlab.highprec import distance_oracle

print("=== classification ===")
for name, seq in [("2^n", make_geometric(2, 2, 10)),
                  ("n^2", make_power(2, 10)),
                  ("3^n/2", make_geometric(0.5, 3, 10))]:
    rep = classify(seq)
    print(f"{name:6s}: min ratio {rep.min_ratio:.4f}, max ratio "
          f"{rep.max_ratio:.4f}, truncated Muntz sum {rep.muntz_sum:.6f}, "
          f"lacunary(gamma=2): {rep.is_lacunary(2.0)}")

print("\n=== greedy block decomposition (gamma = 2) ===")
seq = make_explicit([1, 1.1, 1.2, 2.4, 2.5, 5.0])
blocks = find_blocks(seq, 2.0)
print(f"values {seq.values.tolist()} -> block starts {blocks.starts}, "
      f"block bound {blocks.block_bound}")

print("\n=== distances: product formula vs extended-precision oracle ===")
seq = make_geometric(2, 2, 8)
table = distances(seq)
print(f"{'n':>3} {'lambda_n':>10} {'d_n':>14} {'gamma_n':>10} {'oracle':>14}")
for n in range(1, len(seq) + 1):
    oracle = distance_oracle(seq.values, n)
    print(f"{n:>3} {table.lambdas[n-1]:>10.1f} {table.d[n-1]:>14.6e} "
          f"{table.gamma[n-1]:>10.6f} {oracle:>14.6e}")

print("\nexact rank-1 case: d = 1/sqrt(3) =",
      distances(make_explicit([1.0])).d[0])
print("exact (1,2) case: d_1 = 1/(4 sqrt(3)) =",
      distances(make_explicit([1.0, 2.0])).d[0])

print("\ndistances shrink as the truncation grows (more competitors):")
for count in (4, 8, 12):
    d1 = distances(make_geometric(2, 2, count)).d[0]
    print(f"  N = {count:2d}: d_1 = {d1:.8f}")

out = "/tmp/muntzlab_distances.csv"
table.to_csv(out)
print(f"\ndistance table exported to {out}")
