#!/usr/bin/env python3
"""Exact Hamming-ball eigenvalues: the level reduction at work.

The Perron vector of a ball is uniform on each level, so the whole
eigenproblem collapses to an (i+1)-point tridiagonal system solved here
by Sturm bisection.  Two closed-form landmarks:

* radius d/2 - 1 gives eigenvalue d - 2 with level weights 1 - 2j/d;
* radius d/2 - sqrt(d)/2 - 1 gives eigenvalue d - 4, from the parabolic
  weight profile (j - d/2)^2 - d/4, which vanishes exactly one level up.
  (At radius d/2 - sqrt(d) the eigenvalue sits strictly below d - 4:
  try it below.)
"""

from math import isqrt, sqrt

from cubespectra import hamming_ball, hamming_lambda1_exact, lambda1, limit_constant

print("radius d/2 - 1 (expect d - 2):")
for d in (6, 10, 16, 20):
    res = hamming_lambda1_exact(d, d // 2 - 1)
    print(f"  d={d:2d}: lambda1 = {res.lambda1:.12f}")

print("\nradius d/2 - sqrt(d)/2 - 1 (expect d - 4) "
      "vs radius d/2 - sqrt(d):")
for d in (16, 36, 64):
    s = isqrt(d)
    good = hamming_lambda1_exact(d, d // 2 - s // 2 - 1).lambda1
    low = hamming_lambda1_exact(d, d // 2 - s).lambda1
    print(f"  d={d:2d}: {good:.9f} at the parabolic radius, "
          f"{low:.9f} one regime lower")

# cross-check the reduction against raw power iteration on the graph
d, i = 10, 3
exact = hamming_lambda1_exact(d, i).lambda1
power = lambda1(hamming_ball(d, i), tol=1e-9).lambda1
print(f"\nreduction vs power iteration at d={d}, i={i}: "
      f"{exact:.10f} vs {power:.10f}")

# fixed radius, growing dimension: lambda1 / sqrt(d) approaches a
# constant depending only on the radius
print("\nlimit constants:")
for i in (1, 2, 3, 4):
    lam = limit_constant(i)
    at_10k = hamming_lambda1_exact(10**4, i).lambda1 / sqrt(10**4)
    print(f"  radius {i}: limit {lam:.10f}, at d=10^4 already {at_10k:.10f}")
