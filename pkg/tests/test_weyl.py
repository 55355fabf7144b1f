import pytest

from cominuscule.grading import NotCominusculeError, g1_roots
from cominuscule.rootsys import build_root_system
from cominuscule.schubert import aj_of
from cominuscule.weyl import (
    bruhat_leq,
    get_diagram,
    identity_element,
    inversion_set,
    is_closed,
    levi_weyl_order,
    reduced_word,
    weyl_group_order,
    word_element,
)


def test_inversion_set_identity_empty():
    rs = build_root_system("E6", 6)
    assert inversion_set(rs, identity_element(6)) == frozenset()


def test_inversion_set_simple_reflection():
    rs = build_root_system("E6", 6)
    w = word_element(rs, (6,))
    assert inversion_set(rs, w) == {rs.simple_root(6)}


def test_word_convention_regression():
    # Pins the application order: the two-letter word (6, 5) must invert
    # exactly alpha_6 and alpha_5 + alpha_6.
    rs = build_root_system("E6", 6)
    w = word_element(rs, (6, 5))
    assert inversion_set(rs, w) == {
        (0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 1, 1),
    }


@pytest.mark.parametrize(
    "kind,rank,node,count",
    [
        ("A", 3, 2, 6),
        ("A", 7, 3, 56),
        ("B", 4, 1, 8),
        ("C", 4, 4, 16),
        ("D", 5, 1, 10),
        ("D", 5, 5, 16),
        ("E6", 6, 6, 27),
        ("E7", 7, 7, 56),
    ],
)
def test_class_counts(kind, rank, node, count):
    diagram = get_diagram(kind, rank, node)
    assert len(diagram.classes) == count
    rs = build_root_system(kind, rank)
    assert count == weyl_group_order(kind, rank) // levi_weyl_order(rs, node)


def test_non_cominuscule_node_rejected():
    with pytest.raises(NotCominusculeError):
        get_diagram("E6", 6, 4)


def test_bfs_matches_direct_inversion_sets():
    rs = build_root_system("E6", 6)
    diagram = get_diagram("E6", 6, 6)
    for mask in diagram.classes:
        w = diagram.element_of(mask)
        assert inversion_set(rs, w) == diagram.roots_of(mask)
        assert len(w.word) == diagram.dim_of(mask)


def test_complements_are_closed():
    rs = build_root_system("E6", 6)
    diagram = get_diagram("E6", 6, 6)
    positive = set(rs.positive_roots)
    for mask in diagram.classes:
        assert is_closed(rs, positive - diagram.roots_of(mask))


def test_non_ideal_complement_not_closed():
    # {alpha_5 + alpha_6} without alpha_6 is not an inversion set.
    rs = build_root_system("E6", 6)
    bad = {(0, 0, 0, 0, 1, 1)}
    assert not is_closed(rs, set(rs.positive_roots) - bad)


def test_cover_edges_graded_by_dimension():
    diagram = get_diagram("E7", 7, 7)
    for lower, upper in diagram.cover_edges:
        assert diagram.dim_of(upper) == diagram.dim_of(lower) + 1
        assert diagram.leq(lower, upper)


def test_bruhat_leq():
    diagram = get_diagram("E6", 6, 6)
    rs = build_root_system("E6", 6)
    empty = 0
    for mask in diagram.classes:
        assert bruhat_leq(diagram, empty, mask)
    small = diagram.mask_of([(0, 0, 0, 0, 0, 1)])
    bigger = diagram.mask_of([(0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 1)])
    assert bruhat_leq(diagram, small, bigger)
    assert not bruhat_leq(diagram, bigger, small)


def test_dim4_classes_incomparable():
    # The two dimension-4 classes (labels 0:3 and 0:12) are not related.
    diagram = get_diagram("E6", 6, 6)
    dim4 = [m for m in diagram.classes if diagram.dim_of(m) == 4]
    assert len(dim4) == 2
    a, b = dim4
    assert not diagram.leq(a, b) and not diagram.leq(b, a)
    assert (a, b) not in diagram.cover_edges and (b, a) not in diagram.cover_edges


def test_reduced_words_are_reduced_and_reproduce_ideals():
    rs = build_root_system("E7", 7)
    diagram = get_diagram("E7", 7, 7)
    for mask in diagram.classes:
        word = reduced_word(diagram, mask)
        assert len(word) == diagram.dim_of(mask)
        assert inversion_set(rs, word_element(rs, word)) == diagram.roots_of(mask)


def test_table_words():
    diagram = get_diagram("E6", 6, 6)
    rs = build_root_system("E6", 6)
    by_label = {}
    for mask in diagram.classes:
        aj = aj_of(rs, 6, diagram.roots_of(mask))
        by_label[getattr(aj, "value", None) or f"{aj.a}:{''.join(map(str, aj.J))}"] = mask
    assert reduced_word(diagram, by_label["0:5"]) == (6,)
    assert reduced_word(diagram, by_label["1:123"]) == (6, 5, 4, 3, 2)
    d7 = get_diagram("E7", 7, 7)
    rs7 = build_root_system("E7", 7)
    for mask in d7.classes:
        aj = aj_of(rs7, 7, d7.roots_of(mask))
        if not hasattr(aj, "value") and (aj.a, aj.J) == (3, (1, 4, 5)):
            assert reduced_word(d7, mask) == (7, 6, 5, 4, 3, 2, 4, 5, 1, 3)
            break
    else:
        pytest.fail("E7 class 3:145 not found")


@pytest.mark.parametrize(
    "kind,rank,node",
    [("A", 4, 2), ("B", 3, 1), ("C", 3, 3), ("D", 4, 4), ("E6", 6, 1)],
)
def test_ideal_count_equals_coset_count(kind, rank, node):
    diagram = get_diagram(kind, rank, node)
    rs = build_root_system(kind, rank)
    expected = weyl_group_order(kind, rank) // levi_weyl_order(rs, node)
    assert len(diagram.classes) == expected


def test_classes_are_ideals_of_g1():
    diagram = get_diagram("C", 4, 4)
    n = len(g1_roots(build_root_system("C", 4), 4))
    for mask in diagram.classes:
        assert diagram.is_ideal(mask)
        assert 0 <= mask < (1 << n)


def test_enumerate_wp_alias_and_second_e6_node():
    from cominuscule.weyl import enumerate_Wp

    rs = build_root_system("E6", 6)
    diagram = enumerate_Wp(rs, 1)  # the other extreme node gives the dual space
    assert len(diagram.classes) == 27
    assert len(diagram.cover_edges) == 36
