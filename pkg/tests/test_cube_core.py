import random
from fractions import Fraction

import pytest

from boolcube import (Face, VertexSet, ball, complement, face_vertices,
                      full_set, hamming_distance, make_set, stats)
from boolcube.cube_core import distance_one_pairs, index_to_vertex, vertex_index

from conftest import random_set


def test_make_set_basic():
    S = make_set(3, ["000", "001", "110", "111"])
    assert S.size == 4
    assert S.contains("110") and not S.contains("010")


def test_make_set_empty():
    assert make_set(3, []).size == 0


def test_make_set_collapses_duplicates():
    assert make_set(2, ["00", "00", "11"]).size == 2


def test_make_set_rejects_bad_input():
    with pytest.raises(ValueError):
        make_set(0, [])
    with pytest.raises(ValueError):
        make_set(25, [])
    with pytest.raises(ValueError):
        make_set(3, ["0102"])
    with pytest.raises(ValueError):
        make_set(3, ["01"])


def test_hamming_distance():
    assert hamming_distance("0110", "0110") == 0
    assert hamming_distance("000", "111") == 3
    assert hamming_distance("0110", "1110") == 1
    with pytest.raises(ValueError):
        hamming_distance("01", "011")


def test_ball():
    assert ball("00") == {"00", "01", "10"}
    assert ball("0") == {"0", "1"}
    assert len(ball("0000000")) == 8


def test_face_vertices():
    assert face_vertices(Face("110", "100")) == {"100", "101"}
    assert face_vertices(Face("000", "010")) == {index_to_vertex(i, 3)
                                                 for i in range(8)}
    assert face_vertices(Face("111", "011")) == {"011"}


def test_face_cardinality():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 6)
        y = index_to_vertex(rng.getrandbits(n), n)
        z = index_to_vertex(rng.getrandbits(n), n)
        fv = face_vertices(Face(y, z))
        assert len(fv) == 1 << (n - y.count("1"))


def test_index_round_trip_exhaustive():
    for n in range(1, 11):
        for i in range(1 << n):
            assert vertex_index(index_to_vertex(i, n)) == i


def test_index_convention_is_big_endian():
    # coordinate 1 is the most significant bit
    assert vertex_index("100") == 4
    assert vertex_index("001") == 1


def test_stats_hamming(hamming7):
    st = stats(hamming7)
    assert st.nei == 0  # min distance 3: no distance-1 pairs
    assert st.density == Fraction(1, 8)


def test_stats_parity(parity12_e3):
    st = stats(parity12_e3)
    assert st.nei == 1
    assert st.density == Fraction(1, 2)


def test_stats_singleton():
    st = stats(make_set(3, ["000"]))
    assert st.nei == 0
    assert st.density == Fraction(1, 8)


def test_stats_empty_rejected():
    with pytest.raises(ValueError):
        stats(make_set(3, []))


def test_neighbor_sum_matches_pair_scan():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 8)
        S = random_set(rng, n)
        members = S.member_indices()
        n1 = sum((u ^ v).bit_count() == 1 for u in members for v in members)
        assert distance_one_pairs(S) == n1
        assert stats(S).neighbor_sum == S.size + n1


def test_nei_translation_invariant():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 8)
        S = random_set(rng, n)
        t = index_to_vertex(rng.getrandbits(n), n)
        st, st2 = stats(S), stats(S.translate(t))
        assert st.nei == st2.nei and st.density == st2.density


def test_complement():
    assert complement(make_set(3, [])).size == 8
    S = make_set(3, ["010", "111"])
    assert complement(complement(S)) == S
    half = make_set(2, ["00", "01"])
    assert complement(half) == make_set(2, ["10", "11"])


def test_full_set():
    assert full_set(3).size == 8
