"""Hypercube vertices, families, and induced subgraphs.

A vertex of the d-dimensional hypercube is a subset of the coordinate
indices {1..d}.  We encode it as a machine integer: element j is bit j-1.
This makes membership, symmetric difference, union, and max-element cheap,
and it identifies the *binary order* on subsets (S < T iff the largest
element of the symmetric difference lies in T) with plain integer order.

Coordinate indices are 1-based throughout.  Dimensions are capped at 64 so
every set operation stays a single-word bit operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

MAX_DIM = 64


def vertex_of(elements) -> int:
    """Encode an iterable of 1-based coordinate indices as a bitmask."""
    mask = 0
    for j in elements:
        if j < 1 or j > MAX_DIM:
            raise ValueError(f"coordinate index {j} outside 1..{MAX_DIM}")
        mask |= 1 << (j - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Decode a bitmask into its sorted 1-based coordinate indices."""
    out = []
    j = 1
    m = mask
    while m:
        if m & 1:
            out.append(j)
        m >>= 1
        j += 1
    return tuple(out)


def vertex_str(mask: int) -> str:
    """Print a vertex as a sorted element list; the empty set prints as {}."""
    return "{" + ",".join(str(j) for j in elements_of(mask)) + "}"


def binary_compare(s: int, t: int) -> int:
    """Return -1/0/1 ordering S against T in the binary order.

    S < T iff max(S symdiff T) is an element of T, which the bitmask
    encoding turns into integer comparison.
    """
    if s == t:
        return 0
    return -1 if s < t else 1


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class VertexFamily:
    """A set of vertices inside Q_d: the vertex set of an induced subgraph.

    Treat instances as immutable values; `members` is a frozenset of
    bitmasks, every member a subset of {1..d}.
    """

    d: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not 1 <= self.d <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.d}")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        full = (1 << self.d) - 1
        for v in self.members:
            if v & ~full:
                raise ValueError(
                    f"vertex {vertex_str(v)} has elements outside 1..{self.d}"
                )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __iter__(self):
        return iter(self.sorted_members())

    def sorted_members(self) -> tuple[int, ...]:
        """Members in binary order (ascending bitmask value)."""
        return tuple(sorted(self.members))

    def max_set_size(self) -> int:
        return max((popcount(v) for v in self.members), default=0)

    def __str__(self) -> str:
        inner = ", ".join(vertex_str(v) for v in self.sorted_members())
        return f"Q{self.d}[{inner}]"


def initial_segment(n: int, d: int) -> VertexFamily:
    """The n smallest vertices of Q_d in binary order."""
    if not 0 <= n <= 2**d:
        raise ValueError(f"n={n} out of range 0..2^{d}")
    return VertexFamily(d, frozenset(range(n)))


def hamming_ball(d: int, i: int) -> VertexFamily:
    """All vertices with at most i elements; size sum_{j<=i} C(d,j)."""
    if not 0 <= i <= d:
        raise ValueError(f"radius i={i} out of range 0..{d}")
    members = [m for m in range(1 << d) if m.bit_count() <= i]
    return VertexFamily(d, frozenset(members))


def hamming_ball_size(d: int, i: int) -> int:
    return sum(comb(d, j) for j in range(i + 1))


def star_family(d: int, leaves: int) -> VertexFamily:
    """K_{1,m} embedded as the empty set plus m singletons (m <= d)."""
    if not 0 <= leaves <= d:
        raise ValueError(f"star with {leaves} leaves does not fit in Q_{d}")
    return VertexFamily(d, frozenset([0] + [1 << j for j in range(leaves)]))


def induced_edges(fam: VertexFamily) -> tuple[tuple[int, int], ...]:
    """All pairs of members at Hamming distance 1, each once, smaller first."""
    members = fam.members
    out = []
    for v in members:
        for b in range(fam.d):
            u = v ^ (1 << b)
            if u > v and u in members:
                out.append((v, u))
    out.sort()
    return tuple(out)


def adjacency_lists(fam: VertexFamily) -> dict[int, tuple[int, ...]]:
    """Neighbour lists inside the induced subgraph, keyed by vertex mask."""
    members = fam.members
    adj: dict[int, list[int]] = {v: [] for v in members}
    for v, u in induced_edges(fam):
        adj[v].append(u)
        adj[u].append(v)
    return {v: tuple(sorted(ns)) for v, ns in adj.items()}


@dataclass(frozen=True)
class DegreeProfile:
    degrees: dict[int, int]
    max_degree: int
    max_neighbor_degree_sum: int


def degree_profile(fam: VertexFamily) -> DegreeProfile:
    """Per-vertex degrees, the maximum degree, and the largest sum of
    degrees over one vertex's neighbourhood."""
    adj = adjacency_lists(fam)
    degrees = {v: len(ns) for v, ns in adj.items()}
    max_deg = max(degrees.values(), default=0)
    s = 0
    for v, ns in adj.items():
        s = max(s, sum(degrees[u] for u in ns))
    return DegreeProfile(degrees, max_deg, s)


def subsets_of(mask: int):
    """All subsets of a bitmask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_vertices(d: int):
    return range(1 << d)


def masks_of_size(d: int, k: int):
    for combo in combinations(range(d), k):
        m = 0
        for b in combo:
            m |= 1 << b
        yield m


# ---------------------------------------------------------------------------
# Family file format: first line "d=<int>", then one vertex per line as a
# binary string of length d, character j (1-indexed, left to right) = '1'
# iff j is an element.  '#' starts a comment; duplicate vertices are errors.


def mask_to_binary_string(mask: int, d: int) -> str:
    return "".join("1" if mask >> j & 1 else "0" for j in range(d))


def binary_string_to_mask(line: str, d: int) -> int:
    if len(line) != d:
        raise ValueError(f"vertex line {line!r} is not {d} characters long")
    mask = 0
    for j, ch in enumerate(line):
        if ch == "1":
            mask |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid character {ch!r} in vertex line {line!r}")
    return mask


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_family(text: str) -> VertexFamily:
    lines = [s for s in (_strip_comment(l) for l in text.splitlines()) if s]
    if not lines or not lines[0].startswith("d="):
        raise ValueError("family file must start with a 'd=<int>' line")
    d = int(lines[0][2:])
    members: set[int] = set()
    for line in lines[1:]:
        mask = binary_string_to_mask(line, d)
        if mask in members:
            raise ValueError(f"duplicate vertex line {line!r}")
        members.add(mask)
    return VertexFamily(d, frozenset(members))


def format_family(fam: VertexFamily) -> str:
    lines = [f"d={fam.d}"]
    lines += [mask_to_binary_string(v, fam.d) for v in fam.sorted_members()]
    return "\n".join(lines) + "\n"


def read_family(path) -> VertexFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def write_family(fam: VertexFamily, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_family(fam))
