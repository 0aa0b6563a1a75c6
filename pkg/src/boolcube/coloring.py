"""Perfect 2-coloring detection and parameter extraction.

Color 1 is membership in S.  A perfect coloring is summarized by the matrix

    ((n-b, b), (c, n-c))

where b is the number of out-of-S neighbors of every S-vertex and c is the
number of in-S neighbors of every non-S vertex (first row = the S color).
The cross-edge balance is b*|S| = c*(2^n - |S|), hence rho(S) = c/(b+c);
a perfect code has (b, c) = (n, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cube_core import VertexSet, index_to_vertex
from .spectral import _membership_array, cor_order, transform, weight_table


@dataclass(frozen=True)
class ParameterMatrix:
    n: int
    b: int
    c: int

    @property
    def rows(self) -> tuple:
        return ((self.n - self.b, self.b), (self.c, self.n - self.c))


@dataclass(frozen=True)
class ColoringVerdict:
    is_perfect: bool
    matrix: Optional[ParameterMatrix]
    witness: Optional[tuple]  # (vertex string, observed in-S neighbor count)


def _neighbor_counts(S: VertexSet) -> tuple[np.ndarray, np.ndarray]:
    """(membership array, per-vertex count of in-S neighbors), over all of E^n."""
    arr = _membership_array(S)
    size = 1 << S.n
    idx = np.arange(size, dtype=np.int64)
    cnt = np.zeros(size, dtype=np.int64)
    for k in range(S.n):
        cnt += arr[idx ^ (1 << k)]
    return arr, cnt


def check_perfect(S: VertexSet) -> ColoringVerdict:
    """Direct per-vertex scan; the ground-truth decider.

    The witness, when regularity fails, is the smallest-index vertex whose
    in-S neighbor count differs from the count of the smallest-index vertex
    of the same color.
    """
    size = S.size
    if size == 0 or size == (1 << S.n):
        raise ValueError("constant colorings have no parameter matrix")
    arr, cnt = _neighbor_counts(S)
    in_idx = np.flatnonzero(arr == 1)
    out_idx = np.flatnonzero(arr == 0)
    ref_in = cnt[in_idx[0]]
    ref_out = cnt[out_idx[0]]
    bad = (cnt != np.where(arr == 1, ref_in, ref_out))
    if bad.any():
        w = int(np.flatnonzero(bad)[0])
        return ColoringVerdict(False, None,
                               (index_to_vertex(w, S.n), int(cnt[w])))
    matrix = ParameterMatrix(S.n, b=S.n - int(ref_in), c=int(ref_out))
    return ColoringVerdict(True, matrix, None)


def cor_from_matrix(m: ParameterMatrix) -> int:
    """cor = (b+c)/2 - 1 for a genuine perfect coloring."""
    bc = m.b + m.c
    if bc < 2 or bc % 2:
        raise ValueError("invalid parameter pair b=%d c=%d" % (m.b, m.c))
    return bc // 2 - 1


def spectral_support(S: VertexSet) -> set[int]:
    """Weights carrying nonzero Walsh coefficients; {0, k} iff S is perfect."""
    if S.size == 0 or S.size == (1 << S.n):
        raise ValueError("spectral support check rejects constant colorings")
    sp = transform(S)
    wt = weight_table(S.n)
    return {int(w) for w in np.unique(wt[sp.coeffs != 0])}


def is_perfect_code(S: VertexSet) -> bool:
    if S.size == 0 or S.size == (1 << S.n):
        return False
    v = check_perfect(S)
    return v.is_perfect and v.matrix.b == S.n and v.matrix.c == 1


def matrix_cor_consistent(S: VertexSet) -> bool:
    """Cross-check helper: matrix-derived cor equals the spectral cor."""
    v = check_perfect(S)
    if not v.is_perfect:
        return True
    return cor_from_matrix(v.matrix) == cor_order(S)
