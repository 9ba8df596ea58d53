"""Largest-eigenvalue computation and bounds for induced cube subgraphs.

Three solvers live here:

* `lambda1` -- shifted power iteration on the induced adjacency matrix.
  Cube subgraphs are bipartite, so plain power iteration oscillates with
  period 2; iterating on A + I and subtracting 1 keeps the Perron vector
  and restores dominance.  The returned interval is certified: the
  Rayleigh quotient bounds the top eigenvalue from below, and the
  Collatz-Wielandt ratio max_u (Bx)_u / x_u (valid for any strictly
  positive x and nonnegative B) bounds it from above.

* `hamming_lambda1_exact` -- the Hamming ball's Perron vector is uniform
  on each level, which collapses the eigenproblem to an (i+1)x(i+1)
  tridiagonal system with sub-diagonal j and super-diagonal d-j.  A
  diagonal similarity makes it symmetric with off-diagonals
  sqrt(j(d-j+1)); the top eigenvalue is then isolated by bisection on
  the Sturm negative-pivot count, which is unconditionally stable.

* `limit_constant` -- the d -> infinity limit system (Ay)_j = j y_{j-1}
  + y_{j+1}, whose top eigenvalue times sqrt(d) approximates the ball's
  eigenvalue with O(1/d) error.

The remaining operations are closed-form or exact-integer bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from .compress import WeightVector
from .core import VertexFamily, adjacency_lists, degree_profile, induced_edges

DEFAULT_TOL = 1e-10
MAX_POWER_ITERATIONS = 10**6


@dataclass(frozen=True)
class SpectralResult:
    lambda1: float
    error_bound: float
    eigenvector: WeightVector | None
    iterations: int
    method: str
    converged: bool = True
    level_weights: tuple[float, ...] | None = None

    def interval(self) -> tuple[float, float]:
        return (self.lambda1, self.lambda1 + self.error_bound)


def _csr_parts(fam: VertexFamily):
    verts = sorted(fam.members)
    index = {v: k for k, v in enumerate(verts)}
    rows, cols = [], []
    for v, u in induced_edges(fam):
        rows.append(index[v])
        cols.append(index[u])
        rows.append(index[u])
        cols.append(index[v])
    return verts, rows, cols


def lambda1(fam: VertexFamily, tol: float = DEFAULT_TOL,
            max_iterations: int = MAX_POWER_ITERATIONS) -> SpectralResult:
    """Largest adjacency eigenvalue of the induced subgraph, by power
    iteration on A + I with a certified two-sided error bound."""
    if len(fam) == 0:
        raise ValueError("family is empty")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = len(fam)
    verts, rows, cols = _csr_parts(fam)

    if n == 1:
        vec = WeightVector(fam.d, {verts[0]: 1.0})
        return SpectralResult(0.0, 0.0, vec, 0, "dense-small")

    if n <= 64:
        mat = np.zeros((n, n))
        mat[rows, cols] = 1.0
        mat += np.eye(n)
        matvec = mat.dot
    else:
        from scipy.sparse import csr_matrix, identity

        data = np.ones(len(rows))
        mat = csr_matrix((data, (rows, cols)), shape=(n, n)) + identity(
            n, format="csr"
        )
        matvec = mat.dot

    x = np.full(n, 1.0 / sqrt(n))
    rho_prev = None
    iterations = 0
    converged = False
    while iterations < max_iterations:
        y = matvec(x)
        rho = float(x.dot(y))          # Rayleigh quotient of A+I at unit x
        residual = y - rho * x
        res_inf = float(np.max(np.abs(residual)))
        if rho_prev is not None and abs(rho - rho_prev) < tol / 4 and res_inf < tol:
            converged = True
            break
        rho_prev = rho
        x = y / np.linalg.norm(y)
        iterations += 1
    else:
        y = matvec(x)
        rho = float(x.dot(y))
        res_inf = float(np.max(np.abs(y - rho * x)))

    # x stays strictly positive (it starts positive and A+I has unit
    # diagonal), so the Collatz-Wielandt ratio certifies an upper bound.
    cw_upper = float(np.max(y / x))
    error = max(cw_upper - rho, res_inf)
    vec = WeightVector(fam.d, {v: float(w) for v, w in zip(verts, x)})
    return SpectralResult(rho - 1.0, error, vec, iterations, "power", converged)


# ---------------------------------------------------------------------------
# Exact Hamming-ball solver via the level reduction.


@dataclass(frozen=True)
class ReducedLevelSystem:
    """Tridiagonal level system for the ball of radius i in Q_d:
    row j reads  lambda x_j = j x_{j-1} + (d-j) x_{j+1}  (ends truncated)."""

    d: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i <= self.d:
            raise ValueError(f"radius {self.i} out of range 0..{self.d}")

    def symmetric_offdiagonal(self) -> list[float]:
        # entry j couples levels j-1 and j; similarity scaling gives
        # sqrt(j * (d - j + 1))
        return [sqrt(j * (self.d - j + 1)) for j in range(1, self.i + 1)]


@dataclass(frozen=True)
class LimitConstantSystem:
    """The d -> infinity tridiagonal: sub-diagonal j, super-diagonal 1."""

    i: int

    def __post_init__(self):
        if self.i < 1:
            raise ValueError("radius must be >= 1")

    def symmetric_offdiagonal(self) -> list[float]:
        return [sqrt(j) for j in range(1, self.i + 1)]


def _sturm_count_below(off: list[float], x: float) -> int:
    """Number of eigenvalues below x of the symmetric tridiagonal with
    zero diagonal and the given off-diagonal entries (negative-pivot
    count of the shifted LDL^T recurrence)."""
    count = 0
    q = -x
    if q < 0:
        count += 1
    tiny = 1e-300
    for b in off:
        if q == 0.0:
            q = -tiny
        q = -x - (b * b) / q
        if q < 0:
            count += 1
    return count


def _top_eigenvalue_bisect(off: list[float], tol: float) -> tuple[float, float]:
    """Largest eigenvalue of the zero-diagonal symmetric tridiagonal,
    bracketed by Sturm-count bisection; returns (value, half-width)."""
    size = len(off) + 1
    if size == 1:
        return 0.0, 0.0
    hi = 0.0
    for j in range(size):
        row = (off[j - 1] if j > 0 else 0.0) + (off[j] if j < size - 1 else 0.0)
        hi = max(hi, row)
    hi += 1.0   # start strictly above the Gershgorin bound
    lo = 0.0
    # invariant: count_below(hi) == size, some eigenvalue >= lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break   # interval narrower than float spacing
        if _sturm_count_below(off, mid) == size:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi), 0.5 * (hi - lo)


def hamming_lambda1_exact(d: int, i: int, tol: float = 1e-12) -> SpectralResult:
    """Exact top eigenvalue of the Hamming ball H_d^i via the level
    reduction, plus the per-level weights of its Perron vector."""
    system = ReducedLevelSystem(d, i)
    if i == 0:
        return SpectralResult(0.0, 0.0, None, 0, "reduced-tridiagonal",
                              level_weights=(1.0,))
    off = system.symmetric_offdiagonal()
    lam, halfw = _top_eigenvalue_bisect(off, tol)

    # level weights from the unsymmetrized recurrence, x_0 = 1
    x = [1.0, lam / d]
    for j in range(1, i):
        x.append((lam * x[j] - j * x[j - 1]) / (d - j))
    scale = max(abs(w) for w in x)
    residuals = []
    for j in range(i + 1):
        below = j * x[j - 1] if j > 0 else 0.0
        above = (d - j) * x[j + 1] if j < i else 0.0
        residuals.append(abs(lam * x[j] - below - above) / scale)
    error = max(halfw, max(residuals))
    return SpectralResult(lam, error, None, 0, "reduced-tridiagonal",
                          level_weights=tuple(x))


def limit_constant(i: int, tol: float = 1e-13) -> float:
    """The limit of lambda1(H_d^i)/sqrt(d) as d grows, radius i fixed."""
    system = LimitConstantSystem(i)
    lam, _ = _top_eigenvalue_bisect(system.symmetric_offdiagonal(), tol)
    return lam


# ---------------------------------------------------------------------------
# Bounds.


def level_bound(fam: VertexFamily) -> float:
    """2 sqrt(t d) for max set size t <= d/2: an upper bound on lambda1
    obtained by slicing the graph into consecutive-level bipartite bands."""
    t = fam.max_set_size()
    if 2 * t > fam.d:
        raise ValueError(
            f"level bound needs max set size {t} <= d/2 = {fam.d / 2}"
        )
    return 2.0 * sqrt(t * fam.d)


def hamming_upper_bound(d: int, i: int) -> float:
    """2 sqrt(i (d+1-i)): the band bound with the ball's true maximum
    degree d - i + 1 in place of d."""
    if not 1 <= 2 * i <= d:
        raise ValueError(f"need 1 <= i <= d/2, got i={i}, d={d}")
    return 2.0 * sqrt(i * (d + 1 - i))


def hamming_walk_lower_bound(d: int, i: int, k: int) -> float:
    """Certified lower bound on lambda1(H_d^i) from Catalan-counted
    down-up closed walks of length 2k started on level i."""
    if not 1 <= k < i or 2 * i > d:
        raise ValueError(f"need 1 <= k < i <= d/2, got k={k}, i={i}, d={d}")
    catalan = comb(2 * k, k) // (k + 1)
    walks = catalan * ((i - k) * (d + 1 - (i - k))) ** k
    return _root_of_int(walks, 2 * k)


def default_walk_depth(i: int) -> int:
    """The walk depth sqrt(i log i) used to balance the lower bound,
    clamped to the valid range."""
    if i < 2:
        raise ValueError("need i >= 2 for a valid walk depth")
    k = int(math.sqrt(i * math.log(max(i, 2))))
    return max(1, min(k, i - 1))


def _root_of_int(value: int, r: int) -> float:
    """value ** (1/r) for a positive big integer, overflow-safe."""
    if value <= 0:
        return 0.0
    if value.bit_length() < 512:
        return float(value) ** (1.0 / r)
    shift = value.bit_length() - 512
    scaled = value >> shift
    return math.exp((math.log(scaled) + shift * math.log(2.0)) / r)


def walk_trace_bound(fam: VertexFamily, k: int) -> float:
    """(half the number of closed 2k-walks) ** (1/2k) >= lambda1.

    Walk counts are exact integers (Python's arbitrary precision makes
    the big-count fallback automatic).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(fam) == 0:
        raise ValueError("family is empty")
    verts = sorted(fam.members)
    index = {v: j for j, v in enumerate(verts)}
    nbrs = [
        [index[u] for u in adjacency_lists(fam)[v]]
        for v in verts
    ]
    total = 0
    for start in range(len(verts)):
        counts = [0] * len(verts)
        counts[start] = 1
        for _ in range(2 * k):
            nxt = [0] * len(verts)
            for v, c in enumerate(counts):
                if c:
                    for u in nbrs[v]:
                        nxt[u] += c
            counts = nxt
        total += counts[start]
    assert total % 2 == 0, "closed-walk count of a bipartite graph is even"
    return _root_of_int(total // 2, 2 * k)


@dataclass(frozen=True)
class PairCycleCounts:
    """Exact path-of-length-2 and 4-cycle counts, with the K_{2,3}-free
    bipartite bounds they must satisfy inside the cube."""

    p2: int
    c4: int
    edges: int
    side_large: int
    side_small: int
    c4_bound: int
    edge_bound: int
    c4_bound_holds: bool
    edge_bound_holds: bool

    def __iter__(self):
        yield self.p2
        yield self.c4


def count_p2_c4(fam: VertexFamily) -> PairCycleCounts:
    verts = sorted(fam.members)
    index = {v: j for j, v in enumerate(verts)}
    nbr_bits = [0] * len(verts)
    edges = 0
    for v, u in induced_edges(fam):
        nbr_bits[index[v]] |= 1 << index[u]
        nbr_bits[index[u]] |= 1 << index[v]
        edges += 1
    p2 = sum(comb(bits.bit_count(), 2) for bits in nbr_bits)
    diag = 0
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            codeg = (nbr_bits[a] & nbr_bits[b]).bit_count()
            diag += comb(codeg, 2)
    assert diag % 2 == 0
    c4 = diag // 2
    even = sum(1 for v in verts if v.bit_count() % 2 == 0)
    odd = len(verts) - even
    large, small = max(even, odd), min(even, odd)
    c4_bound = comb(small, 2)
    edge_bound = 2 * comb(small, 2) + large
    return PairCycleCounts(
        p2, c4, edges, large, small, c4_bound, edge_bound,
        c4 <= c4_bound, edges <= edge_bound,
    )


def classic_bounds(fam: VertexFamily) -> dict[str, float]:
    """The classical upper bounds on lambda1 from edge count and local
    degree structure; cube subgraphs are triangle-free, so the sqrt(m)
    bound always applies."""
    m = len(induced_edges(fam))
    profile = degree_profile(fam)
    k = 1
    while comb(k, 2) < m:
        k += 1
    return {
        "brualdi_hoffman": float(k - 1),
        "stanley": 0.5 * (-1.0 + sqrt(8.0 * m + 1.0)),
        "fms": sqrt(profile.max_neighbor_degree_sum),
        "nosal": sqrt(m),
    }


def star_value(n: int) -> float:
    """lambda1 of the n-vertex star: sqrt(n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sqrt(n - 1)
