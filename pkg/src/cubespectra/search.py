"""Exhaustive extremal search over compressed families, and the
heavy-vertex partition certificates.

The compression reduction says the maximum of lambda1 over all n-vertex
induced subgraphs of Q_d is attained on a compressed family, so the
search enumerates exactly those.  A compressed family listed in binary
order has every prefix compressed (removing the binary-maximal member
preserves down-closure and shift-stability), so the enumeration is an
orderly DFS: grow the family one vertex at a time, in increasing binary
order, keeping only extensions whose lower shadow and left-shifts are
already present.  Members of a compressed n-family use elements at most
n-1 and have size at most log2 n, which bounds the candidate pool.

The partition machinery decomposes a compressed family into blocks of
small internal degree plus disjoint star-ball neighbourhoods around
"heavy" centers, where heaviness is measured by surviving iterated
epsilon*d-degree cores.  `verify_partition` re-checks every finite
assertion of that construction and reports witnesses for failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log, sqrt

from .compress import is_compressed
from .core import VertexFamily, adjacency_lists, induced_edges, popcount, vertex_str
from .spectral import SpectralResult, lambda1

TIE_EPS = 1e-9


# ---------------------------------------------------------------------------
# Enumeration of compressed families.


def _valid_extension(v: int, members: set[int]) -> bool:
    """The local conditions a new binary-maximal member must satisfy."""
    m = v
    while m:                        # lower shadow present
        bit = m & -m
        if v ^ bit not in members:
            return False
        m ^= bit
    hi_bits = v
    while hi_bits:                  # left-shifts present
        hi = hi_bits & -hi_bits
        lo = hi >> 1
        while lo:
            if not v & lo and (v ^ hi) | lo not in members:
                return False
            lo >>= 1
        hi_bits ^= hi
    return True


def enumerate_compressed(n: int, cap_dim: int):
    """Yield every compressed family of size n with elements <= cap_dim,
    each exactly once, in a canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if cap_dim < 1 or n > 2**cap_dim:
        raise ValueError(
            f"cap_dim={cap_dim} too small for a compressed family of size {n}"
        )
    cap = min(cap_dim, max(n - 1, 1))
    members: set[int] = {0}

    def rec(last: int):
        if len(members) == n:
            yield VertexFamily(cap_dim, frozenset(members))
            return
        cands = set()
        for s in members:
            for e in range(cap):
                t = s | (1 << e)
                if t > last and t not in members:
                    cands.add(t)
        for v in sorted(cands):
            if _valid_extension(v, members):
                members.add(v)
                yield from rec(v)
                members.remove(v)

    yield from rec(0)


# ---------------------------------------------------------------------------
# Extremal search.


@dataclass(frozen=True)
class SearchResult:
    n: int
    d: int
    best_lambda1: float
    maximizers: tuple[VertexFamily, ...]
    runner_ups: tuple[tuple[float, VertexFamily], ...]
    search_space_size: int
    restricted: bool
    complete: bool

    @property
    def maximizer(self) -> VertexFamily:
        return self.maximizers[0]


def max_lambda1(n: int, d: int, tol: float = 1e-10, top_k: int = 3,
                max_families: int | None = None) -> SearchResult:
    """Maximize lambda1 over compressed n-families inside Q_d.

    By the compression reduction this equals the maximum over all
    n-subsets of Q_d.  When d < n-1 some compressed families of size n
    do not fit in Q_d and the result is flagged `restricted` (it is
    still the exact maximum for Q_d itself).
    """
    if n > 2**d:
        raise ValueError(f"no family of size {n} fits in Q_{d}")
    restricted = d < n - 1
    evaluated: list[tuple[float, tuple[int, ...]]] = []
    visited = 0
    complete = True
    for fam in enumerate_compressed(n, min(d, max(n - 1, 1))):
        if max_families is not None and visited >= max_families:
            complete = False
            break
        visited += 1
        value = lambda1(fam, tol).lambda1
        evaluated.append((value, fam.sorted_members()))
    if not evaluated:
        raise ValueError("search yielded no families")
    evaluated.sort(key=lambda pair: (-pair[0], pair[1]))
    best = evaluated[0][0]
    maximizers = tuple(
        VertexFamily(d, frozenset(ms))
        for v, ms in evaluated if v >= best - TIE_EPS
    )
    runner_ups = tuple(
        (v, VertexFamily(d, frozenset(ms)))
        for v, ms in evaluated[len(maximizers):len(maximizers) + top_k]
    )
    return SearchResult(n, d, best, maximizers, runner_ups, visited,
                        restricted, complete)


def verify_star_regime(n_range, d: int) -> list[dict]:
    """Compare the compressed-search maximum to the star value sqrt(n-1)
    for each n; records the crossover rather than asserting it."""
    rows = []
    for n in n_range:
        if n > d:
            raise ValueError(f"star regime needs n <= d, got n={n}, d={d}")
        res = max_lambda1(n, d)
        star = sqrt(n - 1)
        star_members = frozenset([0] + [1 << j for j in range(n - 1)])
        star_is_max = any(f.members == star_members for f in res.maximizers)
        rows.append({
            "n": n,
            "best_lambda1": res.best_lambda1,
            "star_value": star,
            "star_is_maximizer": star_is_max,
            "star_unique_maximizer": star_is_max and len(res.maximizers) == 1,
            "num_maximizers": len(res.maximizers),
            "winner": res.maximizer.sorted_members(),
        })
    return rows


# ---------------------------------------------------------------------------
# Heavy-vertex partition certificates.


def epsilon_preset_sqrt(d: int, n: int) -> float:
    """sqrt(2 (n/d) / d) = sqrt(2n)/d: the single-round heavy-vertex
    threshold; its square times d^2/2 dominates n, so core iteration
    must die out."""
    return sqrt(2.0 * n) / d


def epsilon_preset_log_ratio(d: int, i: int, alpha: float = 1.0) -> float:
    """alpha / log(d/i): the threshold used when the radius grows."""
    if not 0 < i < d:
        raise ValueError("need 0 < i < d")
    return alpha / log(d / i)


def epsilon_preset_fixed_radius(d: int, i: int) -> float:
    """2 i d^(-1/(i+1)): the threshold for constant radius."""
    if i < 1:
        raise ValueError("need i >= 1")
    return 2.0 * i * d ** (-1.0 / (i + 1))


@dataclass
class PartitionCertificate:
    """The block-and-star-ball decomposition of a compressed family.

    cores[k] is the k-times-iterated heavy set (vertices that keep at
    least epsilon*d neighbours among survivors), caps[k] the element
    ceiling of round k, index_pools[k] the witness indices defining it,
    shells[k] the vertices swept in as neighbours of earlier blocks,
    centers[k] the fresh ball centers, covered[k] everything placed so
    far.  star_balls[(k, S)] collects S with its shell neighbours at
    each later round.  `degenerate` marks inputs where the core chain
    stabilizes without emptying, in which case a trivial single block is
    returned and the partition-degree guarantee is void.
    """

    d: int
    epsilon: float
    depth: int
    degenerate: bool
    cores: tuple[frozenset[int], ...]
    index_pools: tuple[frozenset[int], ...]
    caps: tuple[int, ...]
    shells: tuple[frozenset[int], ...]
    centers: tuple[frozenset[int], ...]
    covered: tuple[frozenset[int], ...]
    star_balls: dict[tuple[int, int], frozenset[int]]
    assertion_flags: tuple[bool, bool, bool, bool] | None = None

    def blocks(self) -> list[frozenset[int]]:
        return [self.shells[k] | self.centers[k] for k in range(self.depth + 1)]


def _members_within(members, cap_elements: int) -> frozenset[int]:
    allowed = (1 << cap_elements) - 1
    return frozenset(s for s in members if s & ~allowed == 0)


def build_partition(fam: VertexFamily, epsilon: float) -> PartitionCertificate:
    """Construct the heavy-vertex partition of a compressed family."""
    ok, violation = is_compressed(fam)
    if not ok:
        raise ValueError(f"family is not compressed: violates {violation.describe()}")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    d = fam.d
    members = fam.members
    adj = adjacency_lists(fam)
    threshold = epsilon * d

    cores = [frozenset(members)]
    degenerate = len(members) == 0
    while cores[-1]:
        prev = cores[-1]
        survivors = frozenset(
            s for s in prev if sum(1 for u in adj[s] if u in prev) >= threshold
        )
        if survivors == prev:
            # self-sustaining heavy core: the chain never empties, the
            # construction's hypotheses fail; fall back to one block
            degenerate = True
            break
        if not survivors:
            break
        cores.append(survivors)

    if degenerate:
        cores = cores[:1]
    depth = len(cores) - 1

    deepest = cores[depth] if cores[depth] else members
    pool0 = frozenset(
        {t for t in range(1, d + 1) if (1 << (t - 1)) in deepest} | {1}
    )
    caps = [max(pool0)]
    index_pools = [pool0]
    shells = [frozenset()]
    centers = [_members_within(members, caps[0])]
    covered = [centers[0]]

    for k in range(1, depth + 1):
        probe = 0
        for j in range(k):
            probe |= 1 << caps[j]        # element m_j + 1
        core = cores[depth - k]
        pool = {caps[k - 1] + 1}
        for t in range(caps[k - 1] + 2, d + 1):
            if probe | (1 << (t - 1)) in core:
                pool.add(t)
        index_pools.append(frozenset(pool))
        caps.append(max(pool))

        prev_block = shells[k - 1] | centers[k - 1]
        shell = set()
        for s in prev_block:
            for t in range(caps[k - 1] + 1, d + 1):
                bit = 1 << (t - 1)
                if not s & bit and s | bit in members:
                    shell.add(s | bit)
        shells.append(frozenset(shell))
        center = _members_within(members, caps[k]) - covered[-1] - shells[k]
        centers.append(frozenset(center))
        covered.append(covered[-1] | shells[k] | centers[k])

    star_balls: dict[tuple[int, int], frozenset[int]] = {}
    for k in range(depth):
        for s in centers[k]:
            ball = {s}
            for j in range(1, depth - k + 1):
                for t in shells[k + j]:
                    if popcount(s ^ t) == j:
                        ball.add(t)
            star_balls[(k, s)] = frozenset(ball)

    return PartitionCertificate(
        d, epsilon, depth, degenerate, tuple(cores), tuple(index_pools),
        tuple(caps), tuple(shells), tuple(centers), tuple(covered), star_balls,
    )


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class PartitionReport:
    parts: tuple[CheckOutcome, ...]       # Proposition parts 1-4
    assertions: tuple[CheckOutcome, ...]  # the seven finite assertions

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.parts) and all(
            c.passed for c in self.assertions
        )

    def failures(self) -> list[CheckOutcome]:
        return [c for c in list(self.parts) + list(self.assertions) if not c.passed]


def _induced_degree(members: frozenset[int], adj) -> int:
    best = 0
    for s in members:
        best = max(best, sum(1 for u in adj[s] if u in members))
    return best


def _block_edges(members: frozenset[int], adj) -> set[tuple[int, int]]:
    out = set()
    for s in members:
        for u in adj[s]:
            if u in members and u > s:
                out.add((s, u))
    return out


def _unique_representation(s: int, k: int, cert: PartitionCertificate):
    """Count decompositions S = T + extras with T a center of round j and
    the extras assignable above the caps m_j..m_{k-1}."""
    hits = []
    for j in range(k + 1):
        for t in cert.centers[j]:
            if t & ~s:
                continue
            extras = sorted(e + 1 for e in range(cert.d) if (s ^ t) >> e & 1)
            if len(extras) != k - j:
                continue
            if all(extras[idx] > cert.caps[j + idx] for idx in range(len(extras))):
                hits.append((j, t))
    return hits


def verify_partition(cert: PartitionCertificate, fam: VertexFamily) -> PartitionReport:
    """Re-check every finite assertion of the partition construction.

    Proposition parts: (1) star balls pairwise disjoint, (2) the blocks
    C_k + D_k are the defining partition of the vertex set, (3) block
    edges and star-ball edges cover E(G) exactly, (4) every block has
    maximum degree at most epsilon*d.  The seven construction assertions
    are checked alongside.  Part 2 re-derives the shells and centers
    from the certificate's own caps, so a vertex moved between blocks is
    caught with a witness.
    """
    members = fam.members
    adj = adjacency_lists(fam)
    d, depth = cert.d, cert.depth

    # part 1 / assertion 7: star balls pairwise disjoint
    part1 = CheckOutcome("star_balls_disjoint", True)
    seen: dict[int, tuple[int, int]] = {}
    for key, ball in sorted(cert.star_balls.items()):
        for v in ball:
            if v in seen and seen[v] != key:
                part1 = CheckOutcome(
                    "star_balls_disjoint", False,
                    f"{vertex_str(v)} lies in balls {seen[v]} and {key}")
                break
            seen[v] = key
        if not part1.passed:
            break

    # part 2: the blocks tile V(G) and match their defining equations
    part2 = CheckOutcome("blocks_partition_vertices", True)
    placed: dict[int, int] = {}
    for k, block in enumerate(cert.blocks()):
        for v in sorted(block):
            if v in placed:
                part2 = CheckOutcome(
                    "blocks_partition_vertices", False,
                    f"{vertex_str(v)} lies in blocks {placed[v]} and {k}")
            placed[v] = k
    if part2.passed and set(placed) != set(members):
        missing = sorted(set(members) - set(placed) | set(placed) - set(members))
        part2 = CheckOutcome("blocks_partition_vertices", False,
                             f"block union mismatch at {vertex_str(missing[0])}")
    if part2.passed:
        if cert.shells[0]:
            part2 = CheckOutcome("blocks_partition_vertices", False,
                                 "round 0 has a nonempty shell")
        elif cert.centers[0] != _members_within(members, cert.caps[0]):
            part2 = CheckOutcome("blocks_partition_vertices", False,
                                 "round 0 centers are not the low-element vertices")
    if part2.passed:
        for k in range(1, depth + 1):
            prev_block = cert.shells[k - 1] | cert.centers[k - 1]
            shell = set()
            for s in prev_block:
                for t in range(cert.caps[k - 1] + 1, d + 1):
                    bit = 1 << (t - 1)
                    if not s & bit and s | bit in members:
                        shell.add(s | bit)
            center = (_members_within(members, cert.caps[k])
                      - cert.covered[k - 1] - frozenset(shell))
            if frozenset(shell) != cert.shells[k]:
                bad = sorted(frozenset(shell) ^ cert.shells[k])[0]
                part2 = CheckOutcome(
                    "blocks_partition_vertices", False,
                    f"round {k} shell mismatch at {vertex_str(bad)}")
                break
            if center != cert.centers[k]:
                bad = sorted(center ^ cert.centers[k])[0]
                part2 = CheckOutcome(
                    "blocks_partition_vertices", False,
                    f"round {k} centers mismatch at {vertex_str(bad)}")
                break

    # part 3: exact edge cover
    all_edges = set(induced_edges(fam))
    covered_edges = set()
    for block in cert.blocks():
        covered_edges |= _block_edges(block, adj)
    for ball in cert.star_balls.values():
        covered_edges |= _block_edges(ball, adj)
    part3 = CheckOutcome("edges_covered_exactly", covered_edges == all_edges)
    if not part3.passed:
        diff = sorted(all_edges ^ covered_edges)[0]
        part3 = CheckOutcome(
            "edges_covered_exactly", False,
            f"edge {vertex_str(diff[0])}-{vertex_str(diff[1])} mismatch")

    # part 4: small degree inside every block
    part4 = CheckOutcome("block_degree_bounded", True)
    for k, block in enumerate(cert.blocks()):
        deg = _induced_degree(block, adj)
        if deg > cert.epsilon * d:
            part4 = CheckOutcome(
                "block_degree_bounded", False,
                f"block {k} has internal degree {deg} > {cert.epsilon * d:.3f}")
            break

    assertions = []

    out = CheckOutcome("unique_representation", True)
    for k in range(depth + 1):
        for s in sorted(cert.shells[k] | cert.centers[k]):
            hits = _unique_representation(s, k, cert)
            if len(hits) != 1:
                out = CheckOutcome(
                    "unique_representation", False,
                    f"{vertex_str(s)} in round {k} has {len(hits)} decompositions")
                break
        if not out.passed:
            break
    assertions.append(out)

    out = CheckOutcome("covered_sets_compressed", True)
    for k in range(depth + 1):
        ok, violation = is_compressed(VertexFamily(d, cert.covered[k]))
        if not ok:
            out = CheckOutcome(
                "covered_sets_compressed", False,
                f"covered[{k}] violates {violation.describe()}")
            break
    assertions.append(out)

    out = CheckOutcome("no_edges_to_later_rounds", True)
    for k in range(depth + 1):
        later = set()
        if k + 1 <= depth:
            later |= cert.centers[k + 1]
        if k + 2 <= depth:
            later |= cert.shells[k + 2] | cert.centers[k + 2]
        for s in cert.covered[k]:
            for u in adj[s]:
                if u in later:
                    out = CheckOutcome(
                        "no_edges_to_later_rounds", False,
                        f"edge {vertex_str(s)}-{vertex_str(u)} leaves covered[{k}]")
                    break
            if not out.passed:
                break
        if not out.passed:
            break
    assertions.append(out)

    out = CheckOutcome("blocks_avoid_earlier_rounds", True)
    for k in range(1, depth + 1):
        overlap = (cert.shells[k] | cert.centers[k]) & cert.covered[k - 1]
        if overlap:
            out = CheckOutcome(
                "blocks_avoid_earlier_rounds", False,
                f"{vertex_str(sorted(overlap)[0])} in round {k} and covered[{k-1}]")
            break
    assertions.append(out)

    out = CheckOutcome("caps_bound_degree", True)
    for k, block in enumerate(cert.blocks()):
        deg = _induced_degree(block, adj)
        if not (deg <= cert.caps[k] and cert.caps[k] <= cert.epsilon * d):
            out = CheckOutcome(
                "caps_bound_degree", False,
                f"round {k}: degree {deg}, cap {cert.caps[k]}, "
                f"threshold {cert.epsilon * d:.3f}")
            break
    assertions.append(out)

    out = CheckOutcome("cores_covered", True)
    for k in range(depth + 1):
        stray = cert.cores[depth - k] - cert.covered[k]
        if stray:
            out = CheckOutcome(
                "cores_covered", False,
                f"core {depth - k} vertex {vertex_str(sorted(stray)[0])} "
                f"not covered by round {k}")
            break
    if out.passed and cert.covered[depth] != members:
        out = CheckOutcome("cores_covered", False,
                           "final covered set is not all of V(G)")
    assertions.append(out)

    assertions.append(CheckOutcome("star_balls_disjoint", part1.passed,
                                   part1.witness))

    report = PartitionReport((part1, part2, part3, part4), tuple(assertions))
    cert.assertion_flags = tuple(c.passed for c in report.parts)
    return report
