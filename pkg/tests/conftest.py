import random

import pytest

from boolcube import VertexSet, make_set

# Codewords of the kernel of the parity-check matrix with columns 1..7,
# computed once by the defining syndrome condition and frozen.
HAMMING7_WORDS = [
    "0000000", "0001111", "0010110", "0011001",
    "0100101", "0101010", "0110011", "0111100",
    "1000011", "1001100", "1010101", "1011010",
    "1100110", "1101001", "1110000", "1111111",
]

# {x in E^3 : x1 xor x2 = 0}
PARITY12_E3 = ["000", "001", "110", "111"]


@pytest.fixture
def hamming7() -> VertexSet:
    return make_set(7, HAMMING7_WORDS)


@pytest.fixture
def parity12_e3() -> VertexSet:
    return make_set(3, PARITY12_E3)


def random_set(rng: random.Random, n: int, nonconstant: bool = True) -> VertexSet:
    while True:
        mask = rng.getrandbits(1 << n)
        if not nonconstant or 0 < mask.bit_count() < (1 << n):
            return VertexSet(n, mask)


def naive_transform(S: VertexSet) -> list:
    """O(4^n) direct double sum: the independent oracle for the butterfly."""
    size = 1 << S.n
    members = set(S.member_indices())
    out = []
    for v in range(size):
        acc = 0
        for u in members:
            acc += -1 if (u & v).bit_count() % 2 else 1
        out.append(acc)
    return out


def pairwise_distance_counts(S: VertexSet) -> list:
    """O(|S|^2) ordered-pair scan: the oracle for distance distributions."""
    members = S.member_indices()
    counts = [0] * (S.n + 1)
    for u in members:
        for v in members:
            counts[(u ^ v).bit_count()] += 1
    return counts
