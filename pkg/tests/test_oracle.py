import pytest

from cominuscule.oracle import (
    component_count_by_graph,
    default_suite,
    maximal_deficient_subideals,
    verify_space,
)
from cominuscule.rootsys import build_root_system
from cominuscule.schubert import AJ, aj_of, context_for, ideal_of_aj
from cominuscule.singloc import sing_components
from cominuscule.weyl import get_diagram


def test_maximal_deficient_empty_for_smooth():
    rs = build_root_system("E6", 6)
    diagram = get_diagram("E6", 6, 6)
    aj = AJ(0, (4,))
    ctx = context_for(rs, 6, aj)
    mask = diagram.mask_of(ideal_of_aj(rs, 6, aj))
    assert maximal_deficient_subideals(diagram, mask, ctx) == set()


def test_maximal_deficient_gr511():
    rs = build_root_system("A", 10)
    diagram = get_diagram("A", 10, 5)
    aj = AJ(2, (2, 3, 6, 8, 10))
    ctx = context_for(rs, 5, aj)
    ideal = ideal_of_aj(rs, 5, aj)
    expected = {
        diagram.mask_of(c.ideal) for c in sing_components(ctx, ideal).components
    }
    assert maximal_deficient_subideals(diagram, diagram.mask_of(ideal), ctx) == expected
    assert len(expected) == 2


def test_maximal_deficient_e6_dim9():
    rs = build_root_system("E6", 6)
    diagram = get_diagram("E6", 6, 6)
    aj = AJ(3, (1, 4, 5))
    ctx = context_for(rs, 6, aj)
    mask = diagram.mask_of(ideal_of_aj(rs, 6, aj))
    subideals = maximal_deficient_subideals(diagram, mask, ctx)
    assert len(subideals) == 1
    (sub,) = subideals
    assert aj_of(rs, 6, diagram.roots_of(sub)) == AJ(1, (2, 3))


def test_component_count_by_graph():
    rs = build_root_system("A", 10)
    ctx = context_for(rs, 5, AJ(2, (2, 3, 6, 8, 10)))
    assert component_count_by_graph(ctx) == 2
    ctx0 = context_for(rs, 5, AJ(0, (3, 10)))
    assert component_count_by_graph(ctx0) == 0
    rs7 = build_root_system("E7", 7)
    assert component_count_by_graph(context_for(rs7, 7, AJ(5, (1, 3, 5, 6)))) == 2


@pytest.mark.parametrize(
    "kind,rank,node",
    [("E6", 6, 6), ("A", 7, 3), ("D", 6, 6), ("B", 5, 1), ("C", 5, 5), ("D", 6, 1)],
)
def test_verify_space_clean(kind, rank, node):
    report = verify_space(kind, rank, node)
    assert report.ok, report.violations
    assert report.class_count == len(get_diagram(kind, rank, node).classes)
    assert report.checks > report.class_count


def test_verify_e6_shape():
    report = verify_space("E6", 6, 6)
    assert report.ok
    assert report.class_count == 27
    assert report.notes == []


def test_spinor_notes_reported_not_raised():
    report = verify_space("D", 6, 6)
    assert report.ok  # stated-formula deviations are notes, not violations
    assert len(report.notes) == 4
    assert all("published minimal-codimension" in n for n in report.notes)


def test_default_suite_contents():
    suite = default_suite()
    assert ("E6", 6, 6) in suite and ("E7", 7, 7) in suite
    assert ("A", 7, 3) in suite and ("B", 5, 1) in suite
    assert ("C", 5, 5) in suite and ("D", 6, 6) in suite and ("D", 6, 1) in suite
    assert all(k != "A" or r <= 7 for k, r, _ in suite)
