#!/usr/bin/env python3
"""Tour of the vertex encoding, the binary order, and canonical families.

Vertices of the d-cube are subsets of {1..d}, stored as bitmasks with
element j on bit j-1.  The punchline of the encoding: the binary order
(S < T iff the top element of the symmetric difference lies in T) is
plain integer order on the masks.
"""

from cubespectra import (
    binary_compare,
    degree_profile,
    hamming_ball,
    induced_edges,
    initial_segment,
    vertex_of,
    vertex_str,
)

# The binary order identifies subsets with binary integers.
pairs = [((), (1,)), ((1, 2), (3,)), ((1, 3), (2, 3))]
for a, b in pairs:
    sign = binary_compare(vertex_of(a), vertex_of(b))
    rel = {-1: "<", 0: "=", 1: ">"}[sign]
    print(f"{vertex_str(vertex_of(a)):>8} {rel} {vertex_str(vertex_of(b))}")

# Initial segments are the n smallest subsets in that order; they are
# down-closed and left-shifted, i.e. already compressed.
seg = initial_segment(6, 3)
print("\nfirst six subsets of {1,2,3}:",
      ", ".join(vertex_str(v) for v in seg))

# Hamming balls collect everything up to a given size.
ball = hamming_ball(6, 2)
print(f"\nball of radius 2 in the 6-cube: {len(ball)} vertices,"
      f" {len(induced_edges(ball))} induced edges")

# Degree structure of the star K_{1,4} (the radius-1 ball):
star = hamming_ball(4, 1)
profile = degree_profile(star)
print(f"star in the 4-cube: max degree {profile.max_degree}, "
      f"max neighbourhood degree sum {profile.max_neighbor_degree_sum}")
