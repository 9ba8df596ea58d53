#!/usr/bin/env python3
"""Counting subcubes: exact values, the recursion, and its relaxations.

Initial segments of the binary order maximize the number of k-subcubes
among families of the same size.  Their counts satisfy a three-term
recursion over the binary digits; two closed forms cap them from above,
with equality at powers of two.
"""

from cubespectra import (
    count_subcubes,
    fully_compress,
    initial_count,
    initial_segment,
    subcube_bound_integer,
    subcube_bound_smooth,
    VertexFamily,
)

# edges (1-subcubes) of the first six subsets: the recursion unrolls as
# T(6) = T(4) + T(2) + T'(2) = 4 + 1 + 2
seg = initial_segment(6, 3)
print("edges of the 6-vertex initial segment:",
      count_subcubes(seg, 1).count, "= recursion value",
      initial_count(6, 1).count)

print(f"{'n':>4} {'exact':>7} {'smooth':>9} {'coarse':>9}   (1-subcubes)")
for n in (4, 6, 8, 12, 20, 32, 48):
    exact = initial_count(n, 1).count
    print(f"{n:>4} {exact:>7} {subcube_bound_smooth(n, 1):>9.3f} "
          f"{subcube_bound_integer(n, 1):>9.3f}")

# arbitrary families never beat the initial segment of their size, and
# compressing a family never destroys subcubes
fam = VertexFamily(4, frozenset([0b1010, 0b1000, 0b0010, 0b0000, 0b0110, 0b0100]))
compressed, _ = fully_compress(fam)
for dp in (1, 2):
    a = count_subcubes(fam, dp).count
    b = count_subcubes(compressed, dp).count
    cap = initial_count(len(fam), dp).count
    print(f"dim-{dp} subcubes: scattered {a} <= compressed {b} <= segment {cap}")
