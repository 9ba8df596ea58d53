"""Compression operators on weight vectors and vertex families.

A (U,V)-compression conditionally swaps the weights of partner vertices
S and S xor (U|V): the side containing V receives the larger weight, the
side containing U the smaller.  The weight multiset, support size, and
norm are all preserved; the induced-subgraph Rayleigh quotient never
decreases for the steps used here (singleton down-steps and single-swap
steps toward smaller indices).

A vector or family is *compressed* when it is a fixpoint of every
down-step (U={i}, V=empty) and every swap step (U={hi}, V={lo}, lo < hi).
`fully_compress` iterates a deterministic schedule of exactly these
steps until nothing moves.  The per-coordinate binary rearrangement is
a separate operation: compressed objects (Hamming balls, say) need not
be fixpoints of it, so it cannot join the fixpoint schedule.

Termination is certified by an explicit potential: sum over vertices of
(bitmask value) * (rank of the weight held there).  Every changing step
strictly decreases it; the implementation asserts this per step whenever
the potential is cheap to materialize (d <= POTENTIAL_CHECK_MAX_D).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import VertexFamily, vertex_str

POTENTIAL_CHECK_MAX_D = 12


@dataclass(frozen=True)
class WeightVector:
    """A real weight per vertex of Q_d, sparse: absent vertices weigh 0.

    Exact zeros are dropped at construction, so `support()` is the set of
    vertices carrying nonzero weight.  Treat instances as immutable.
    """

    d: int
    weights: dict[int, float]

    def __post_init__(self):
        if not 1 <= self.d <= 64:
            raise ValueError(f"dimension must be in 1..64, got {self.d}")
        full = (1 << self.d) - 1
        clean = {}
        for v, w in self.weights.items():
            if v & ~full:
                raise ValueError(f"vertex {vertex_str(v)} outside Q_{self.d}")
            if w != 0.0:
                clean[v] = float(w)
        object.__setattr__(self, "weights", clean)

    def weight(self, mask: int) -> float:
        return self.weights.get(mask, 0.0)

    def support(self) -> frozenset[int]:
        return frozenset(self.weights)

    def support_size(self) -> int:
        return len(self.weights)

    def sorted_weights(self) -> tuple[float, ...]:
        return tuple(sorted(self.weights.values()))

    def norm_squared(self) -> float:
        return sum(w * w for w in self.weights.values())

    def items(self):
        return sorted(self.weights.items())


@dataclass(frozen=True)
class CompressionStep:
    """One applied step: kind 'uv' carries the masks U and V, kind
    'binary' carries the rearranged coordinate; `target` records whether
    the step acted on a set or a vector."""

    kind: str
    u: int | None = None
    v: int | None = None
    coord: int | None = None
    target: str = ""

    def describe(self) -> str:
        if self.kind == "uv":
            return f"C_{{{vertex_str(self.u)},{vertex_str(self.v)}}}"
        return f"binary C_{self.coord}"

    def to_json(self) -> dict:
        if self.kind == "uv":
            record = {"kind": "uv", "U": vertex_str(self.u),
                      "V": vertex_str(self.v)}
        else:
            record = {"kind": "binary", "coord": self.coord}
        if self.target:
            record["target"] = self.target
        return record


def _swap_pairs(support, uv_union: int, v_mask: int, u_mask: int):
    """Yield (max_side, min_side) partner pairs touching the support.

    max_side vertices contain V and avoid U; their partners (xor by U|V)
    contain U and avoid V.
    """
    seen = set()
    for s in support:
        if s & v_mask == v_mask and s & u_mask == 0:
            hi, lo = s, s ^ uv_union
        elif s & u_mask == u_mask and s & v_mask == 0:
            hi, lo = s ^ uv_union, s
        else:
            continue
        if hi in seen:
            continue
        seen.add(hi)
        yield hi, lo


def compress_vector_uv(vec: WeightVector, u: int, v: int) -> WeightVector:
    """Apply the (U,V)-compression to a weight vector.

    Requires U and V disjoint.  Ties are left in place, which makes the
    operator idempotent and keeps the termination potential strict.
    """
    if u & v:
        raise ValueError("U and V must be disjoint")
    union = u | v
    if union == 0:
        return vec
    new = dict(vec.weights)
    for hi, lo in _swap_pairs(vec.weights, union, v, u):
        w_hi = new.get(hi, 0.0)
        w_lo = new.get(lo, 0.0)
        if w_lo > w_hi:
            new[hi] = w_lo
            new[lo] = w_hi
    return WeightVector(vec.d, new)


def compress_family_uv(fam: VertexFamily, u: int, v: int) -> VertexFamily:
    """The same map on the indicator vector, read back as a set."""
    if u & v:
        raise ValueError("U and V must be disjoint")
    union = u | v
    if union == 0:
        return fam
    members = set(fam.members)
    for s in fam.members:
        if s & u == u and s & v == 0:
            partner = s ^ union
            if partner not in members:
                members.discard(s)
                members.add(partner)
    return VertexFamily(fam.d, frozenset(members))


def _half_slot(rank: int, coord_bit: int, with_coord: bool) -> int:
    """The rank-th smallest mask (binary order) of one half of the cube.

    The half is {S : coord in S} or its complement; ranks spread over the
    d-1 free bit positions around the fixed coordinate bit.
    """
    low = rank & (coord_bit - 1)
    high = (rank & ~(coord_bit - 1)) << 1
    mask = high | low
    if with_coord:
        mask |= coord_bit
    return mask


def _rearrange_half(weights: dict[int, float], d: int, coord_bit: int,
                    with_coord: bool) -> dict[int, float]:
    vals = [w for s, w in weights.items()
            if bool(s & coord_bit) == with_coord]
    vals.sort(reverse=True)
    positives = [w for w in vals if w > 0]
    negatives = [w for w in vals if w < 0]
    out = {}
    for r, w in enumerate(positives):
        out[_half_slot(r, coord_bit, with_coord)] = w
    half_size = 1 << (d - 1)
    # negatives fill the tail of the half, still decreasing in binary order
    for t, w in enumerate(negatives):
        r = half_size - len(negatives) + t
        out[_half_slot(r, coord_bit, with_coord)] = w
    return out


def binary_compression(vec: WeightVector, i: int) -> WeightVector:
    """Rearrange weights to be decreasing in binary order within each of
    the two halves {S : i in S} and {S : i not in S}."""
    if not 1 <= i <= vec.d:
        raise ValueError(f"coordinate {i} out of range 1..{vec.d}")
    bit = 1 << (i - 1)
    new = _rearrange_half(vec.weights, vec.d, bit, True)
    new.update(_rearrange_half(vec.weights, vec.d, bit, False))
    return WeightVector(vec.d, new)


def binary_compression_family(fam: VertexFamily, i: int) -> VertexFamily:
    """Binary rearrangement of an indicator: each half's members become an
    initial segment of that half."""
    if not 1 <= i <= fam.d:
        raise ValueError(f"coordinate {i} out of range 1..{fam.d}")
    bit = 1 << (i - 1)
    members = set()
    for with_coord in (True, False):
        count = sum(1 for s in fam.members if bool(s & bit) == with_coord)
        for r in range(count):
            members.add(_half_slot(r, bit, with_coord))
    return VertexFamily(fam.d, frozenset(members))


def rayleigh(vec: WeightVector) -> float:
    """<A(Q_d) w, w>: twice the sum of weight products over cube edges."""
    total = 0.0
    weights = vec.weights
    for s, w in weights.items():
        for b in range(vec.d):
            t = s | (1 << b)
            if t != s and t in weights:
                total += 2.0 * w * weights[t]
    return total


def _uv_steps(d: int):
    """The fixpoint step set: all singleton down-steps, then all swap
    steps toward the smaller index, in a fixed deterministic order."""
    for i in range(1, d + 1):
        yield 1 << (i - 1), 0
    for lo in range(1, d + 1):
        for hi in range(lo + 1, d + 1):
            yield 1 << (hi - 1), 1 << (lo - 1)


def is_compressed(x) -> tuple[bool, CompressionStep | None]:
    """True iff x is a fixpoint of every down-step and swap step.

    On False, also returns one violating step.
    """
    if isinstance(x, VertexFamily):
        apply = compress_family_uv
        same = lambda a, b: a.members == b.members
        target = "family"
    elif isinstance(x, WeightVector):
        apply = compress_vector_uv
        same = lambda a, b: a.weights == b.weights
        target = "vector"
    else:
        raise TypeError(f"expected VertexFamily or WeightVector, got {type(x)}")
    # swap steps first so a shift violation like {{2}} reports C_{2,1}
    steps = sorted(_uv_steps(x.d), key=lambda uv: uv[1] == 0)
    for u, v in steps:
        if not same(apply(x, u, v), x):
            return False, CompressionStep("uv", u=u, v=v, target=target)
    return True, None


def _vector_potential(vec: WeightVector) -> int:
    """Potential over the materialized cube: sum of mask * weight-rank.

    Ranks are computed over all 2^d slots (absent vertices weigh 0), so
    any conditional swap that moves a strictly larger weight to a smaller
    mask strictly lowers the potential.
    """
    full = 1 << vec.d
    values = sorted({0.0} | set(vec.weights.values()))
    rank = {w: r for r, w in enumerate(values)}
    zero_rank = rank[0.0]
    total = zero_rank * (full * (full - 1) // 2)
    for s, w in vec.weights.items():
        total += s * (rank[w] - zero_rank)
    return total


def _family_potential(fam: VertexFamily) -> int:
    return sum(fam.members)


def fully_compress(x, check_potential: bool = True):
    """Iterate every down-step and swap step to a joint fixpoint.

    Returns (compressed object, list of steps that changed it).  The
    schedule sweeps singleton down-steps in increasing coordinate, then
    swap steps in lexicographic order, repeating until a full sweep is
    silent.  A strictly decreasing integer potential certifies
    termination; it is asserted per changing step while affordable.
    """
    if isinstance(x, VertexFamily):
        apply_uv = compress_family_uv
        same = lambda a, b: a.members == b.members
        potential = _family_potential
        do_check = check_potential
        target = "family"
    elif isinstance(x, WeightVector):
        apply_uv = compress_vector_uv
        same = lambda a, b: a.weights == b.weights
        potential = _vector_potential
        do_check = check_potential and x.d <= POTENTIAL_CHECK_MAX_D
        target = "vector"
    else:
        raise TypeError(f"expected VertexFamily or WeightVector, got {type(x)}")

    log: list[CompressionStep] = []
    current = x
    pot = potential(current) if do_check else None
    while True:
        changed = False
        for u, v in _uv_steps(current.d):
            nxt = apply_uv(current, u, v)
            if not same(nxt, current):
                log.append(CompressionStep("uv", u=u, v=v, target=target))
                if do_check:
                    npot = potential(nxt)
                    assert npot < pot, "compression potential failed to drop"
                    pot = npot
                current = nxt
                changed = True
        if not changed:
            return current, log


def is_down_closed(fam: VertexFamily) -> bool:
    """Closed under removing single elements (hence under subsets)."""
    members = fam.members
    for s in members:
        m = s
        while m:
            bit = m & -m
            if s ^ bit not in members:
                return False
            m ^= bit
    return True


# ---------------------------------------------------------------------------
# Vector file format: first line "d=<int>", then "<binary-string> <weight>".


def parse_vector(text: str) -> WeightVector:
    from .core import binary_string_to_mask

    lines = [s for s in (l.split("#", 1)[0].strip() for l in text.splitlines()) if s]
    if not lines or not lines[0].startswith("d="):
        raise ValueError("vector file must start with a 'd=<int>' line")
    d = int(lines[0][2:])
    weights: dict[int, float] = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected '<binary> <weight>', got {line!r}")
        mask = binary_string_to_mask(parts[0], d)
        if mask in weights:
            raise ValueError(f"duplicate vertex line {line!r}")
        weights[mask] = float(parts[1])
    return WeightVector(d, weights)


def format_vector(vec: WeightVector) -> str:
    from .core import mask_to_binary_string

    lines = [f"d={vec.d}"]
    lines += [f"{mask_to_binary_string(s, vec.d)} {w!r}" for s, w in vec.items()]
    return "\n".join(lines) + "\n"


def read_vector(path) -> WeightVector:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_vector(fh.read())


def write_vector(vec: WeightVector, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_vector(vec))
