"""Exact verification of the main inequality

    nei(S) + 2(cor(S)+1)(1 - rho(S)) <= n

with equality exactly on perfect 2-colorings, plus the two prior bounds
(Fon-Der-Flaass; Bierbrauer-Friedman) and the perfect-code rigidity check.

Everything is decided in integer-cleared form (multiplied through by
|S| * 2^n); no floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .cube_core import VertexSet, complement, stats
from .spectral import cor_order, weight_table
from .coloring import ParameterMatrix, check_perfect


@dataclass(frozen=True)
class TheoremReport:
    n: int
    size: int
    rho: Fraction
    cor: int
    nei: Fraction
    lhs: Fraction
    slack: Fraction
    is_perfect: bool
    matrix: Optional[ParameterMatrix]
    fdf_bound_ok: bool
    bf_bound_ok: bool
    complemented: bool


def _normalize(S: VertexSet, allow_complement: bool) -> tuple[VertexSet, bool]:
    size = S.size
    total = 1 << S.n
    if size == 0 or size == total:
        raise ValueError("constant sets are rejected")
    if 2 * size > total:
        if not allow_complement:
            raise ValueError("density above 1/2; pass allow_complement=True "
                             "to analyze the complement")
        return complement(S), True
    return S, False


def verify(S: VertexSet, allow_complement: bool = True) -> TheoremReport:
    T, swapped = _normalize(S, allow_complement)
    st = stats(T)
    cor = cor_order(T)
    lhs = st.nei + 2 * (cor + 1) * (1 - st.density)
    slack = T.n - lhs
    verdict = check_perfect(T)
    return TheoremReport(
        n=T.n,
        size=st.size,
        rho=st.density,
        cor=cor,
        nei=st.nei,
        lhs=lhs,
        slack=slack,
        is_perfect=verdict.is_perfect,
        matrix=verdict.matrix,
        fdf_bound_ok=fdf_bound(T),
        bf_bound_ok=bf_bound(T),
        complemented=swapped,
    )


def equality_form(S: VertexSet, allow_complement: bool = True) -> bool:
    """nei = rho*n + (n - 2(cor+1))(1 - rho), exactly; same as slack = 0."""
    T, _ = _normalize(S, allow_complement)
    st = stats(T)
    cor = cor_order(T)
    return st.nei == st.density * T.n + (T.n - 2 * (cor + 1)) * (1 - st.density)


def fdf_bound(S: VertexSet) -> bool:
    """cor <= 2n/3 - 1 for unbalanced functions (balanced ones are exempt)."""
    st = stats(S)
    if st.density == Fraction(1, 2):
        return True
    return 3 * (cor_order(S) + 1) <= 2 * S.n


def bf_bound(S: VertexSet) -> bool:
    """rho >= 1 - n / (2(cor+1)), exact rational comparison."""
    st = stats(S)
    cor = cor_order(S)
    return st.density >= 1 - Fraction(S.n, 2 * (cor + 1))


def code_rigidity(S: VertexSet, reference_n: int) -> bool:
    """If cor and rho match the perfect-code values for this dimension, the
    set must itself be a perfect code; vacuously true otherwise."""
    if S.n != reference_n:
        raise ValueError("set dimension %d differs from reference %d"
                         % (S.n, reference_n))
    m = (reference_n + 1).bit_length() - 1
    if (1 << m) - 1 != reference_n:
        raise ValueError("n=%d is not of the form 2^m - 1" % reference_n)
    if S.size == 0 or S.size == (1 << S.n):
        return True
    rho = Fraction(S.size, 1 << S.n)
    if rho != Fraction(1, reference_n + 1) or cor_order(S) != (reference_n - 1) // 2:
        return True
    from .coloring import is_perfect_code
    return is_perfect_code(S)


@dataclass(frozen=True)
class SweepSummary:
    n: int
    checked: int
    equality_cases: int
    perfect_count: int
    violations: tuple  # masks failing any of the checks (expected empty)
    bf_equality_cases: int


def sweep(n: int) -> SweepSummary:
    """Exhaustive validation over every non-constant subset of E^n (n <= 4).

    For each subset (complemented when rho > 1/2) it checks, in exact integer
    arithmetic: slack >= 0, slack = 0 iff the independent per-vertex scan
    certifies a perfect coloring, both prior bounds, and that every
    Bierbrauer-Friedman equality case is perfect.

    The two routes are independent: cor comes from the Walsh spectra, the
    perfect verdict from direct neighbor counting.
    """
    if not 2 <= n <= 4:
        raise ValueError("exhaustive sweep supports 2 <= n <= 4")
    size = 1 << n
    nmasks = 1 << size
    masks = np.arange(nmasks, dtype=np.int64)
    vid = np.arange(size, dtype=np.int64)
    # membership matrix: A[m, u] = (m >> u) & 1
    A = ((masks[:, None] >> vid[None, :]) & 1).astype(np.int64)
    s = A.sum(axis=1)

    # spectral route: spectra = A @ W, W[u, v] = (-1)^popcount(u & v)
    W = 1 - 2 * (weight_table(n)[vid[:, None] & vid[None, :]] & 1)
    spectra = A @ W
    wt = weight_table(n)
    nzw = np.where((spectra != 0) & (wt[None, :] > 0), wt[None, :], n + 2)
    cor = nzw.min(axis=1) - 1  # meaningful for non-constant masks only

    # direct route: per-vertex in-S neighbor counts
    adj = (weight_table(n)[vid[:, None] ^ vid[None, :]] == 1).astype(np.int64)
    C = A @ adj
    n1 = (A * C).sum(axis=1)
    in_min = np.where(A == 1, C, size + 1).min(axis=1)
    in_max = np.where(A == 1, C, -1).max(axis=1)
    out_min = np.where(A == 0, C, size + 1).min(axis=1)
    out_max = np.where(A == 0, C, -1).max(axis=1)
    nonconst = (s > 0) & (s < size)
    perfect = nonconst & (in_min == in_max) & (out_min == out_max)

    # complement when rho > 1/2 (cor is complement-invariant; perfect too)
    eff = np.where(2 * s > size, masks ^ (nmasks - 1), masks)
    s_e, n1_e, perf_e = s[eff], n1[eff], perfect[eff]

    # slack * |S| * 2^n = n*s*2^n - N1*2^n - 2(cor+1) s (2^n - s)
    slack_int = n * s_e * size - n1_e * size - 2 * (cor + 1) * s_e * (size - s_e)

    ok_a = slack_int >= 0
    ok_b = (slack_int == 0) == perf_e
    balanced = 2 * s == size
    ok_fdf = balanced | (3 * (cor + 1) <= 2 * n)
    bf_lhs = 2 * (cor + 1) * s + n * size
    bf_rhs = 2 * (cor + 1) * size
    ok_bf = bf_lhs >= bf_rhs
    bf_eq = nonconst & (bf_lhs == bf_rhs)
    ok_bf_eq = ~bf_eq | perfect

    bad = nonconst & ~(ok_a & ok_b & ok_fdf & ok_bf & ok_bf_eq)
    return SweepSummary(
        n=n,
        checked=int(nonconst.sum()),
        equality_cases=int((nonconst & (slack_int == 0)).sum()),
        perfect_count=int(perfect.sum()),
        violations=tuple(int(m) for m in masks[bad][:16]),
        bf_equality_cases=int(bf_eq.sum()),
    )
