import pytest

from cominuscule.rootsys import (
    InvalidSystemError,
    NotARootError,
    build_root_system,
    coefficient,
    negative,
    root_sum,
)


COUNTS = [
    ("A", 1, 1),
    ("A", 3, 6),
    ("A", 7, 28),
    ("B", 2, 4),
    ("B", 5, 25),
    ("C", 2, 4),
    ("C", 5, 25),
    ("D", 3, 6),
    ("D", 6, 30),
    ("E6", 6, 36),
    ("E7", 7, 63),
]


@pytest.mark.parametrize("kind,rank,count", COUNTS)
def test_positive_root_counts(kind, rank, count):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == count


@pytest.mark.parametrize("kind,rank", [(k, r) for k, r, _ in COUNTS])
def test_reflections_permute_roots(kind, rank):
    rs = build_root_system(kind, rank)
    for alpha in rs.positive_roots:
        for j in range(1, rs.rank + 1):
            image = rs.reflect(alpha, j)
            assert rs.is_root(image), (alpha, j, image)


@pytest.mark.parametrize("kind,rank", [(k, r) for k, r, _ in COUNTS])
def test_highest_root_dominates(kind, rank):
    rs = build_root_system(kind, rank)
    top = rs.highest_root
    for alpha in rs.positive_roots:
        assert all(t >= a for t, a in zip(top, alpha))


def test_highest_roots():
    assert build_root_system("E7", 7).highest_root == (2, 2, 3, 4, 3, 2, 1)
    assert build_root_system("E6", 6).highest_root == (1, 2, 2, 3, 2, 1)
    assert build_root_system("A", 4).highest_root == (1, 1, 1, 1)
    assert build_root_system("B", 3).highest_root == (1, 2, 2)
    assert build_root_system("C", 4).highest_root == (2, 2, 2, 1)
    assert build_root_system("D", 5).highest_root == (1, 2, 2, 1, 1)


def test_root_table_deterministic_order():
    rs = build_root_system("A", 3)
    heights = [sum(r) for r in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.positive_roots[:3] == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_root_sum_adjacent_and_non_adjacent():
    rs = build_root_system("A", 3)
    a1, a2, a3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert root_sum(rs, a1, a2) == (1, 1, 0)
    assert root_sum(rs, a1, a3) is None
    assert root_sum(rs, a1, negative(a1)) is None


def test_root_sum_c2_table_lookup():
    rs = build_root_system("C", 2)
    a1, a2 = (1, 0), (0, 1)
    a12 = root_sum(rs, a1, a2)
    assert a12 == (1, 1)
    assert root_sum(rs, a1, a12) == (2, 1)  # the long root
    assert root_sum(rs, a2, a12) is None


def test_root_sum_rejects_non_roots():
    rs = build_root_system("A", 3)
    with pytest.raises(NotARootError):
        root_sum(rs, (1, 0, 1), (0, 1, 0))


def test_coefficient_reads():
    assert coefficient((1, 1, 0), 2) == 1
    assert coefficient((0, 0, 0, 0, 1, 0), 3) == 0
    assert coefficient(build_root_system("E7", 7).highest_root, 7) == 1
    with pytest.raises(ValueError):
        coefficient((1, 0), 3)


@pytest.mark.parametrize(
    "kind,rank",
    [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E6", 7), ("E7", 6), ("E8", 8)],
)
def test_invalid_systems_rejected(kind, rank):
    with pytest.raises(InvalidSystemError):
        build_root_system(kind, rank)
