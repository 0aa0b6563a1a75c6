"""Distance distribution, Krawtchouk polynomials and the MacWilliams
transform, all in exact integer/rational arithmetic.

Integer carriers: N_i are ordered pair counts, D_k are per-weight sums of
squared Walsh coefficients.  The rationals B_i = N_i/|S| and B'_k = D_k/|S|^2
are derived on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .cube_core import VertexSet
from .spectral import Spectrum, transform, weight_table

PAIRWISE_LIMIT = 1 << 12  # |S| above this uses the spectral route


@dataclass(frozen=True)
class KrawtchoukTable:
    n: int
    values: tuple  # values[k][i] = P_k(i)


@dataclass(frozen=True)
class DistanceDistribution:
    n: int
    size: int
    counts: tuple  # N_0 .. N_n, ordered pairs

    @property
    def B(self) -> tuple:
        return tuple(Fraction(c, self.size) for c in self.counts)


@dataclass(frozen=True)
class DualDistribution:
    n: int
    size: int
    duals: tuple  # D_0 .. D_n

    @property
    def Bprime(self) -> tuple:
        sq = self.size * self.size
        return tuple(Fraction(d, sq) for d in self.duals)


@lru_cache(maxsize=None)
def krawtchouk(n: int) -> KrawtchoukTable:
    """P_k(i) = sum_j (-1)^j C(i,j) C(n-i, k-j); satisfies P_1(i) = n - 2i."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    values = tuple(
        tuple(sum((-1) ** j * comb(i, j) * comb(n - i, k - j)
                  for j in range(k + 1))
              for i in range(n + 1))
        for k in range(n + 1)
    )
    return KrawtchoukTable(n, values)


@lru_cache(maxsize=None)
def _popcount16() -> np.ndarray:
    t = np.arange(1 << 16, dtype=np.int64)
    out = np.zeros(1 << 16, dtype=np.int64)
    for k in range(16):
        out += (t >> k) & 1
    out.setflags(write=False)
    return out


def _pairwise_counts(members: list[int], n: int) -> list[int]:
    pc = _popcount16()
    idxs = np.asarray(members, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    chunk = max(1, (1 << 22) // max(1, len(idxs)))
    for lo in range(0, len(idxs), chunk):
        x = idxs[lo:lo + chunk, None] ^ idxs[None, :]
        d = pc[x & 0xFFFF] + pc[x >> 16]
        counts += np.bincount(d.ravel(), minlength=n + 1)[:n + 1]
    return [int(c) for c in counts]


def distance_distribution(S: VertexSet) -> DistanceDistribution:
    """Exact ordered-pair counts N_i; pairwise scan for small S, spectral
    route for large S (both routes agree wherever both run)."""
    size = S.size
    if size == 0:
        raise ValueError("distance distribution undefined for the empty set")
    if size <= PAIRWISE_LIMIT:
        counts = _pairwise_counts(S.member_indices(), S.n)
    else:
        dual = macwilliams_from_spectrum(transform(S), size)
        counts = list(inverse_macwilliams(dual, size, krawtchouk(S.n)).counts)
    return DistanceDistribution(S.n, size, tuple(counts))


def macwilliams_from_spectrum(sp: Spectrum, size: int) -> DualDistribution:
    """D_k = sum over weight-k vectors of a_hat(v)^2."""
    if size == 0:
        raise ValueError("dual distribution undefined for |S| = 0")
    wt = weight_table(sp.n)
    sq = sp.coeffs.astype(np.int64) ** 2
    duals = tuple(int(sq[wt == k].sum()) for k in range(sp.n + 1))
    return DualDistribution(sp.n, size, duals)


def macwilliams_from_distances(d: DistanceDistribution,
                               k: KrawtchoukTable) -> DualDistribution:
    """Krawtchouk route: D_k = sum_i N_i P_k(i)."""
    if d.n != k.n:
        raise ValueError("dimension mismatch: %d vs %d" % (d.n, k.n))
    duals = tuple(sum(d.counts[i] * k.values[kk][i] for i in range(d.n + 1))
                  for kk in range(d.n + 1))
    return DualDistribution(d.n, d.size, duals)


def inverse_macwilliams(dual: DualDistribution, size: int,
                        k: KrawtchoukTable) -> DistanceDistribution:
    """Recover N_k = (1/2^n) sum_i D_i P_k(i); exact, the division is whole."""
    if dual.n != k.n:
        raise ValueError("dimension mismatch: %d vs %d" % (dual.n, k.n))
    total = 1 << dual.n
    counts = []
    for kk in range(dual.n + 1):
        num = sum(dual.duals[i] * k.values[kk][i] for i in range(dual.n + 1))
        if num % total:
            raise ValueError("dual distribution is not realizable: "
                             "N_%d would be %s/%d" % (kk, num, total))
        counts.append(num // total)
    return DistanceDistribution(dual.n, size, tuple(counts))
