"""Brute-force cross-checks of the component computation.

The singular-locus components of a class must coincide with the subideals
that are maximal among those whose complement in the class leaves the top
J-level, and their number must equal the number of connected components of
the level-(a-1) root graph.  Violations are collected as report content,
never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dictionaries import (
    grassmann_aj_to_partition,
    grassmann_partition_to_aj,
    lagrangian_aj_to_partition,
    lagrangian_partition_to_aj,
    quadric_admissible,
    quadric_descriptor,
    spinor_aj_to_partition,
    spinor_partition_to_aj,
)
from .grading import GradingContext, bigraded_roots, g1_roots, zw_level
from .rootsys import build_root_system
from .schubert import AJ, Marker, aj_of, context_for
from .singloc import (
    g00_positive,
    min_codim_analysis,
    sing_components,
    spinor_equality_stated,
    stabilizer_root_set,
)
from .weyl import HasseDiagram, get_diagram, is_closed, levi_weyl_order, weyl_group_order


def maximal_deficient_subideals(
    diagram: HasseDiagram, mask: int, ctx: GradingContext
) -> set[int]:
    """Subideals maximal among those missing a root below the top level.

    The sweep runs over every class of the diagram, so it depends only on
    the ideal predicate and the level data, not on the component formula.
    """
    top_level = ctx.a
    g1 = diagram.g1
    level_a_mask = 0
    for t, root in enumerate(g1):
        if zw_level(ctx, root) == top_level:
            level_a_mask |= 1 << t
    deficient = []
    for sub in diagram.classes:
        if sub == mask or sub & ~mask:
            continue
        if (mask & ~sub) & ~level_a_mask:
            deficient.append(sub)
    return {
        sub
        for sub in deficient
        if not any(other != sub and sub & ~other == 0 for other in deficient)
    }


def component_count_by_graph(ctx: GradingContext) -> int:
    """Connected components of the level-(a-1) roots under Levi-root steps."""
    if ctx.a == 0:
        return 0
    vertices = [
        r for r in g1_roots(ctx.rs, ctx.node) if zw_level(ctx, r) == ctx.a - 1
    ]
    steps = g00_positive(ctx)
    index = {v: t for t, v in enumerate(vertices)}
    parent = list(range(len(vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in vertices:
        for sigma in steps:
            for sign in (1, -1):
                w = tuple(a + sign * b for a, b in zip(v, sigma))
                t = index.get(w)
                if t is not None:
                    ra, rb = find(index[v]), find(t)
                    if ra != rb:
                        parent[ra] = rb
    return len({find(t) for t in range(len(vertices))})


@dataclass(frozen=True)
class Violation:
    space: str
    label: str
    check: str
    detail: str


@dataclass
class SpaceReport:
    kind: str
    rank: int
    node: int
    class_count: int = 0
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def space(self) -> str:
        base = self.kind if self.kind.startswith("E") else f"{self.kind}{self.rank}"
        return f"{base}/P{self.node}"

    @property
    def ok(self) -> bool:
        return not self.violations


def _fmt_aj(aj) -> str:
    if isinstance(aj, Marker):
        return aj.value
    return f"{aj.a}:{','.join(map(str, aj.J))}"


def verify_space(kind: str, rank: int, node: int) -> SpaceReport:
    """Run every cross-check on every class of one space."""
    report = SpaceReport(kind, rank, node)
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    report.class_count = len(diagram.classes)

    def flag(label: str, check: str, detail: str) -> None:
        report.violations.append(Violation(report.space, label, check, detail))

    def check(label: str, name: str, ok: bool, detail: str = "") -> None:
        report.checks += 1
        if not ok:
            flag(label, name, detail)

    expected = weyl_group_order(kind, rank) // levi_weyl_order(rs, node)
    check("-", "class-count", report.class_count == expected,
          f"{report.class_count} classes, |W|/|W_p| = {expected}")

    seen_aj: dict = {}
    for mask in diagram.classes:
        roots = diagram.roots_of(mask)
        try:
            aj = aj_of(rs, node, roots, verify=True)
        except AssertionError as exc:
            flag(hex(mask), "aj-characterization", str(exc))
            continue
        label = _fmt_aj(aj)
        check(label, "aj-bijectivity", aj not in seen_aj,
              f"duplicate of {seen_aj.get(aj)}")
        seen_aj[aj] = mask
        check(label, "complement-closed",
              is_closed(rs, set(rs.positive_roots) - roots),
              "complement of the inversion set is not closed")
        if isinstance(aj, Marker):
            continue

        ctx = context_for(rs, node, aj)
        expected_sing = maximal_deficient_subideals(diagram, mask, ctx)
        try:
            sing = sing_components(ctx, roots)
        except (AssertionError, ValueError) as exc:
            flag(label, "component-construction", str(exc))
            continue
        got = {diagram.mask_of(c.ideal) for c in sing.components}
        check(label, "components-vs-maximal-deficient", got == expected_sing,
              f"theorem {sorted(map(hex, got))} oracle "
              f"{sorted(map(hex, expected_sing))}")
        graph_count = component_count_by_graph(ctx)
        check(label, "components-vs-graph-count",
              len(sing.components) == graph_count,
              f"{len(sing.components)} components, graph count {graph_count}")
        if sing.predicted_count is not None:
            check(label, "components-vs-closed-form",
                  len(sing.components) == sing.predicted_count,
                  f"{len(sing.components)} components, "
                  f"formula {sing.predicted_count}")
        check(label, "smooth-iff-a-zero",
              (aj.a == 0) == (not sing.components),
              f"a={aj.a} with {len(sing.components)} components")
        if aj.a == 1:
            check(label, "a-one-single-component", len(sing.components) == 1,
                  f"{len(sing.components)} components")
        mca = min_codim_analysis(ctx, sing)
        check(label, "codim-bounds", mca.consistent,
              f"min codim {mca.min_codim}, bound {mca.bound}, "
              f"equality predicted {mca.equality_expected}")
        if kind == "D" and node == rank and sing.components:
            stated = spinor_equality_stated(rs, aj)
            actual = mca.min_codim == mca.bound
            report.checks += 1
            if stated != actual:
                report.notes.append(
                    f"{label}: published minimal-codimension case split says "
                    f"{stated}, computed min codim is {mca.min_codim}"
                )
        try:
            stabilizer_root_set(ctx, roots)
            report.checks += 1
        except AssertionError as exc:
            flag(label, "stabilizer-descriptions", str(exc))
        for level in range(1, ctx.a + 2):
            check(label, "bigrade-vanishing",
                  not bigraded_roots(ctx, 1, -level)
                  and not bigraded_roots(ctx, -1, level),
                  f"nonempty mixed-sign bigrade at level {level}")

    _verify_dictionaries(report, diagram, seen_aj, check)
    return report


def _verify_dictionaries(report, diagram, seen_aj, check) -> None:
    kind, rank, node = report.kind, report.rank, report.node
    proper = {aj for aj in seen_aj if isinstance(aj, AJ)}
    if kind == "A":
        partitions = set()
        for aj in seen_aj:
            label = _fmt_aj(aj)
            parts = grassmann_aj_to_partition(rank, node, aj)
            partitions.add(parts)
            back = grassmann_partition_to_aj(rank, node, parts)
            check(label, "dict-round-trip", back == aj, f"{parts} -> {back}")
        check("-", "dict-bijection", len(partitions) == len(seen_aj), "")
        smooth = sum(1 for aj in proper if aj.a == 0)
        subdiagrams = node * (rank + 1 - node) - 1
        check("-", "smooth-count", smooth == subdiagrams,
              f"{smooth} smooth proper classes, {subdiagrams} subdiagrams")
    elif kind == "C" and node == rank:
        partitions = set()
        for aj in seen_aj:
            label = _fmt_aj(aj)
            parts = lagrangian_aj_to_partition(rank, aj)
            partitions.add(parts)
            back = lagrangian_partition_to_aj(rank, parts)
            check(label, "dict-round-trip", back == aj, f"{parts} -> {back}")
        check("-", "dict-bijection", len(partitions) == len(seen_aj), "")
    elif kind == "D" and node == rank:
        partitions = set()
        for aj in seen_aj:
            label = _fmt_aj(aj)
            parts = spinor_aj_to_partition(rank, aj)
            partitions.add(parts)
            back = spinor_partition_to_aj(rank, parts)
            check(label, "dict-round-trip", back == aj, f"{parts} -> {back}")
        check("-", "dict-bijection", len(partitions) == len(seen_aj), "")
    elif node == 1 and kind in ("B", "D"):
        parity = "odd" if kind == "B" else "even"
        admissible = set(quadric_admissible(parity, rank))
        check("-", "quadric-admissible-list", admissible == proper,
              f"list {sorted(map(_fmt_aj, admissible))} classes "
              f"{sorted(map(_fmt_aj, proper))}")
        for aj in sorted(proper):
            quadric_descriptor(parity, rank, aj)  # raises if inadmissible
            report.checks += 1


def default_suite() -> list[tuple[str, int, int]]:
    """Every desk-scale space the verification sweep covers."""
    spaces: list[tuple[str, int, int]] = []
    for rank in range(1, 8):
        for node in range(1, rank + 1):
            spaces.append(("A", rank, node))
    for rank in range(2, 6):
        spaces.append(("B", rank, 1))
    for rank in range(2, 6):
        spaces.append(("C", rank, rank))
    for rank in range(3, 7):
        spaces.append(("D", rank, 1))
        spaces.append(("D", rank, rank))
    spaces.append(("E6", 6, 6))
    spaces.append(("E7", 7, 7))
    return spaces


def verify_all() -> list[SpaceReport]:
    return [verify_space(*space) for space in default_suite()]
