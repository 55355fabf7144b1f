"""The (a, J) characterization of Schubert classes.

A proper class is determined by a nonnegative integer a and a node set J
disjoint from the marked node: its inversion set is exactly the set of
i-level-1 roots whose J-level is at most a.  The two endpoint classes (the
point and the whole space) carry explicit markers instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .grading import GradingContext, g1_roots, make_context, zw_level
from .rootsys import Root, RootSystem, build_root_system
from .weyl import HasseDiagram


class Marker(enum.Enum):
    BOTTOM = "o"
    TOP = "X"


@dataclass(frozen=True, order=True)
class AJ:
    a: int
    J: tuple[int, ...]

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"a must be nonnegative, got {self.a}")
        if tuple(sorted(set(self.J))) != self.J:
            raise ValueError(f"J must be sorted and duplicate-free, got {self.J}")


class NotAnIdealError(ValueError):
    """A root set that is not the inversion set of any class."""


class UnrealizedAJError(ValueError):
    """An (a, J) pair whose level filter is not a class of the space."""


def _is_ideal(rs: RootSystem, node: int, roots: frozenset[Root], g1set) -> bool:
    for root in roots:
        for j in range(1, rs.rank + 1):
            if root[j - 1] == 0:
                continue
            down = list(root)
            down[j - 1] -= 1
            d = tuple(down)
            if d in g1set and d not in roots:
                return False
    return True


def aj_of(
    rs: RootSystem,
    node: int,
    roots,
    *,
    verify: bool = False,
) -> AJ | Marker:
    """(a, J) of an inversion set; markers for the empty and full ideals.

    J collects the nodes j whose negative simple root space moves the class
    line: some member of the set jumps out of it when j is added.  a is the
    largest J-level inside the set.  The level-filter identity is asserted,
    never assumed; with ``verify`` a brute-force sweep over all candidate
    (a, J) pairs re-derives the answer independently.
    """
    g1 = g1_roots(rs, node)
    g1set = frozenset(g1)
    roots = frozenset(roots)
    if not roots <= g1set:
        raise NotAnIdealError("set is not contained in the i-level-1 roots")
    if not roots:
        return Marker.BOTTOM
    if roots == g1set:
        return Marker.TOP
    if not _is_ideal(rs, node, roots, g1set):
        raise NotAnIdealError(f"{sorted(roots)} is not downward closed")

    J = []
    for j in range(1, rs.rank + 1):
        if j == node:
            continue
        for alpha in roots:
            up = list(alpha)
            up[j - 1] += 1
            u = tuple(up)
            if u in g1set and u not in roots:
                J.append(j)
                break
    ctx = make_context(rs, node, 0, tuple(J))
    a = max(zw_level(ctx, alpha) for alpha in roots)
    aj = AJ(a, tuple(J))

    filtered = frozenset(r for r in g1 if zw_level(ctx, r) <= a)
    if filtered != roots:
        raise AssertionError(
            f"level filter for {aj} does not reproduce the inversion set"
        )
    if verify:
        _verify_aj_brute_force(rs, node, roots, aj)
    return aj


def _candidate_filters(rs: RootSystem, node: int):
    """All (a, J) level filters of the space, keyed by the resulting set."""
    g1 = g1_roots(rs, node)
    nodes = [j for j in range(1, rs.rank + 1) if j != node]
    table: dict[frozenset[Root], list[AJ]] = {}
    for size in range(1, len(nodes) + 1):
        for J in combinations(nodes, size):
            levels = [sum(r[j - 1] for j in J) for r in g1]
            for a in range(max(levels) + 1):
                key = frozenset(r for r, l in zip(g1, levels) if l <= a)
                table.setdefault(key, []).append(AJ(a, J))
    return table


@lru_cache(maxsize=None)
def _candidate_filters_cached(kind: str, rank: int, node: int):
    return _candidate_filters(build_root_system(kind, rank), node)


def _verify_aj_brute_force(rs, node, roots, aj: AJ) -> None:
    table = _candidate_filters_cached(rs.kind, rs.rank, node)
    solutions = table.get(frozenset(roots), [])
    if aj not in solutions:
        raise AssertionError(f"{aj} not among brute-force solutions")
    common = set(solutions[0].J)
    for s in solutions[1:]:
        common &= set(s.J)
    if tuple(sorted(common)) != aj.J:
        raise AssertionError(f"J {aj.J} is not the minimal solution {common}")
    min_a = min(s.a for s in solutions if s.J == aj.J)
    if min_a != aj.a:
        raise AssertionError(f"a {aj.a} is not minimal for J {aj.J}")


def context_for(rs: RootSystem, node: int, aj: AJ) -> GradingContext:
    return make_context(rs, node, aj.a, aj.J)


def ideal_of_aj(rs: RootSystem, node: int, aj: AJ) -> frozenset[Root]:
    """The level filter of (a, J); raises UnrealizedAJError when it is not a
    class of the space (a legal query, flagged rather than silently wrong)."""
    if not aj.J:
        raise ValueError("J must be nonempty for a proper class")
    ctx = context_for(rs, node, aj)
    g1 = g1_roots(rs, node)
    roots = frozenset(r for r in g1 if zw_level(ctx, r) <= aj.a)
    if not roots or roots == frozenset(g1):
        raise UnrealizedAJError(f"{aj} does not cut out a proper class")
    if not _is_ideal(rs, node, roots, frozenset(g1)):
        raise UnrealizedAJError(f"{aj} is not realized by any class")
    back = aj_of(rs, node, roots)
    if back != aj:
        raise UnrealizedAJError(f"{aj} is not canonical; class carries {back}")
    return roots


@dataclass(frozen=True)
class ClassRecord:
    dim: int
    word: tuple[int, ...]
    aj: AJ | Marker


def class_table(diagram: HasseDiagram) -> list[ClassRecord]:
    """One record per class, in diagram order (dimension, then word)."""
    out = []
    for mask in diagram.classes:
        aj = aj_of(diagram.rs, diagram.node, diagram.roots_of(mask))
        out.append(ClassRecord(diagram.dim_of(mask), diagram.word_of(mask), aj))
    return out


def aj_index(diagram: HasseDiagram) -> dict[AJ | Marker, int]:
    """Map from each class's (a, J) data (or marker) to its ideal mask."""
    out: dict[AJ | Marker, int] = {}
    for mask in diagram.classes:
        aj = aj_of(diagram.rs, diagram.node, diagram.roots_of(mask))
        if aj in out:
            raise AssertionError(f"duplicate characterization {aj}")
        out[aj] = mask
    return out
