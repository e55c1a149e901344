import pytest
from hypothesis import given
from hypothesis import strategies as st

from qschur.tableaux import (
    Box,
    Partition,
    SemiStandardTableau,
    StandardTableau,
    content_count,
    covers,
    enumerate_ssyt,
    enumerate_syt,
    from_shapes,
    is_horizontal_strip,
    partitions,
    residue,
    axial_distance,
    restrict,
    row_axial_distances,
    skew,
)

from oracles import brute_ssyt, brute_syt

T = SemiStandardTableau.from_text


def test_partition_validation():
    assert Partition((3, 1, 0)) == (3, 1)
    assert Partition(()).size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_covers():
    assert covers((2, 1), (2, 1, 1))
    assert not covers((2, 1), (3, 2))
    assert not covers((1,), (1,))
    assert not covers((2,), (1, 1, 1))


def test_horizontal_strip():
    assert is_horizontal_strip(skew((3, 1), (1,)))
    assert not is_horizontal_strip(skew((2, 2), (1,)))
    assert is_horizontal_strip(skew((1,), ()))
    with pytest.raises(ValueError):
        skew((1,), (2,))


def test_residue_and_axial_distance():
    assert residue(Box(1, 3)) == 2
    assert residue(Box(2, 2)) == 0
    assert residue(Box(4, 1)) == -3
    t = StandardTableau.from_text("1,2,3/4,5/6")
    b3, b4 = t.box_of(3), t.box_of(4)
    assert axial_distance(b3, b4) == 3
    assert axial_distance(b4, b3) == -3
    assert axial_distance(b3, b3) == 0


def test_row_axial_distances():
    assert row_axial_distances(skew((6, 4, 1), (4, 1))) == {(1, 2): 3, (2, 3): 4, (1, 3): 7}
    assert row_axial_distances((5,)) == {}
    assert row_axial_distances((2, 1)) == {(1, 2): 2}


@pytest.mark.parametrize("lam", [p for n in range(3, 8) for p in partitions(n) if len(p) >= 3])
def test_axial_distances_add(lam):
    a = row_axial_distances(lam)
    for i in range(1, len(lam) + 1):
        for j in range(i + 1, len(lam) + 1):
            for k in range(j + 1, len(lam) + 1):
                assert a[(i, j)] + a[(j, k)] == a[(i, k)]


def test_restrict_and_content():
    t = T("1,1,2/3")
    assert restrict(t, 2) == T("1,1,2")
    assert restrict(t, 1) == T("1,1")
    assert restrict(t, 9) == t
    u = T("1,1,2/2,3")
    assert content_count(u, 2) == 2 and content_count(u, 1) == 2 and content_count(u, 7) == 0


def test_tableau_validation():
    with pytest.raises(ValueError):
        T("2,1")
    with pytest.raises(ValueError):
        T("1,2/1")
    with pytest.raises(ValueError):
        StandardTableau.from_text("1,3/2,2")
    with pytest.raises(ValueError):
        T("1/2,3")


def test_text_round_trip():
    t = T("1,1,2/2,3")
    assert t.to_text() == "1,1,2/2,3"
    assert T("") == SemiStandardTableau(())
    assert Partition.from_text("[3,2,1]") == (3, 2, 1)
    assert Partition((3, 2, 1)).to_text() == "[3,2,1]"
    assert Partition.from_text("[]") == ()


def test_enumeration_examples():
    assert len(enumerate_ssyt((2, 1), 2)) == 2
    assert enumerate_syt((2, 1)) == (StandardTableau.from_text("1,2/3"), StandardTableau.from_text("1,3/2"))
    assert enumerate_ssyt((4,), 1) == (T("1,1,1,1"),)
    with pytest.raises(ValueError):
        enumerate_ssyt((1, 1, 1), 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_brute_force(n):
    for lam in partitions(n):
        assert [tuple(t) for t in enumerate_syt(lam)] == sorted(brute_syt(lam), key=lambda t: sum(t, ()))
        for d in range(len(lam), 4):
            got = [tuple(t) for t in enumerate_ssyt(lam, d)]
            assert got == sorted(brute_ssyt(lam, d), key=lambda t: sum(t, ()))


def test_partition_order_is_descending_lex():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(7) for d in range(1, 4)])
def test_dimension_count(n, d):
    total = sum(len(enumerate_ssyt(lam, d)) * len(enumerate_syt(lam)) for lam in partitions(n, d))
    assert total == d**n


@given(st.integers(0, 6), st.integers(1, 4), st.data())
def test_restriction_strips(n, d, data):
    lams = partitions(n, d)
    lam = data.draw(st.sampled_from(lams))
    t = data.draw(st.sampled_from(enumerate_ssyt(lam, d)))
    for k in range(1, d + 1):
        assert is_horizontal_strip(t.strip(k))
    assert from_shapes([t.shape_at(k) for k in range(1, d + 1)]) == t
