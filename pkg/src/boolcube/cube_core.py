"""Boolean n-cube fundamentals: vertex indexing, bitset sets, Hamming metric,
balls, faces, and the basic density / neighbor-count statistics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

N_MAX = 24           # hard cap on cube dimension (bitset storage)
SPECTRUM_N_MAX = 20  # cap for operations materializing a full 2^n spectrum


def vertex_index(v: str) -> int:
    """Index of a vertex string; coordinate 1 is the most significant bit."""
    return int(v, 2)


def index_to_vertex(i: int, n: int) -> str:
    return format(i, "0%db" % n)


def _check_vertex(v: str, n: int) -> None:
    if len(v) != n or any(ch not in "01" for ch in v):
        raise ValueError("malformed vertex %r for dimension %d" % (v, n))


def _check_dimension(n: int) -> None:
    if not 1 <= n <= N_MAX:
        raise ValueError("dimension %r out of range [1, %d]" % (n, N_MAX))


@dataclass(frozen=True)
class VertexSet:
    """A subset S of E^n stored as a 2^n-bit membership mask.

    Bit i of `mask` is set iff the vertex with index i belongs to S.
    Immutable; safe to share across workers.
    """
    n: int
    mask: int

    def __post_init__(self):
        _check_dimension(self.n)
        if not 0 <= self.mask < (1 << (1 << self.n)):
            raise ValueError("mask does not fit dimension %d" % self.n)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def contains(self, v: str) -> bool:
        _check_vertex(v, self.n)
        return bool((self.mask >> vertex_index(v)) & 1)

    def members(self) -> list[str]:
        return [index_to_vertex(i, self.n) for i in self.member_indices()]

    def member_indices(self) -> list[int]:
        m, out = self.mask, []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def translate(self, t: str) -> "VertexSet":
        """XOR-translate every element by the vertex t."""
        _check_vertex(t, self.n)
        ti = vertex_index(t)
        mask = 0
        for i in self.member_indices():
            mask |= 1 << (i ^ ti)
        return VertexSet(self.n, mask)


@dataclass(frozen=True)
class Face:
    """The face {x : [x,y] = [z,y]}: coordinates selected by y are pinned to z."""
    y: str
    z: str

    def __post_init__(self):
        n = len(self.y)
        _check_vertex(self.y, n)
        _check_vertex(self.z, n)


@dataclass(frozen=True)
class CubeStats:
    size: int
    density: Fraction
    neighbor_sum: int
    nei: Fraction


def make_set(n: int, vertices) -> VertexSet:
    _check_dimension(n)
    mask = 0
    for v in vertices:
        _check_vertex(v, n)
        mask |= 1 << vertex_index(v)
    return VertexSet(n, mask)


def full_set(n: int) -> VertexSet:
    _check_dimension(n)
    return VertexSet(n, (1 << (1 << n)) - 1)


def hamming_distance(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %r vs %r" % (x, y))
    _check_vertex(x, len(x))
    _check_vertex(y, len(y))
    return (vertex_index(x) ^ vertex_index(y)).bit_count()


def ball(x: str) -> set[str]:
    """x together with its n neighbors (the radius-1 ball)."""
    n = len(x)
    _check_vertex(x, n)
    xi = vertex_index(x)
    return {x} | {index_to_vertex(xi ^ (1 << k), n) for k in range(n)}


def face_vertices(f: Face) -> set[str]:
    n = len(f.y)
    ymask = vertex_index(f.y)
    anchor = vertex_index(f.z) & ymask
    free = [k for k in range(n) if not (ymask >> k) & 1]
    out = set()
    for bits in range(1 << len(free)):
        i = anchor
        for pos, k in enumerate(free):
            if (bits >> pos) & 1:
                i |= 1 << k
        out.add(index_to_vertex(i, n))
    return out


def _low_bit_pattern(n: int, k: int) -> int:
    """Bitmask over 2^n positions selecting indices whose bit k is 0."""
    p = (1 << (1 << k)) - 1
    span = 1 << (k + 1)
    total = 1 << n
    while span < total:
        p |= p << span
        span <<= 1
    return p


def distance_one_pairs(S: VertexSet) -> int:
    """N_1: ordered pairs of S-elements at Hamming distance 1."""
    pairs = 0
    for k in range(S.n):
        p = _low_bit_pattern(S.n, k)
        pairs += (S.mask & (S.mask >> (1 << k)) & p).bit_count()
    return 2 * pairs


def stats(S: VertexSet) -> CubeStats:
    size = S.size
    if size == 0:
        raise ValueError("stats undefined for the empty set")
    neighbor_sum = size + distance_one_pairs(S)
    return CubeStats(
        size=size,
        density=Fraction(size, 1 << S.n),
        neighbor_sum=neighbor_sum,
        nei=Fraction(neighbor_sum, size) - 1,
    )


def complement(S: VertexSet) -> VertexSet:
    return VertexSet(S.n, S.mask ^ ((1 << (1 << S.n)) - 1))
