"""Grading elements and the induced (bi)graded root decompositions.

A marked node i with highest-root coefficient 1 splits the roots into levels
-1/0/1 (the coefficient at i).  A second marking J and an integer a refine
this: the J-level of a root is the sum of its coefficients over J, and the
shifted level subtracts a times the i-level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Root, RootSystem, all_roots, build_root_system, coefficient


class NotCominusculeError(ValueError):
    """The marked node does not have highest-root coefficient 1."""


def cominuscule_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes whose coefficient in the highest root is 1."""
    return tuple(
        j for j in range(1, rs.rank + 1) if coefficient(rs.highest_root, j) == 1
    )


@dataclass(frozen=True)
class GradingContext:
    """A root system with a marked node i, a disjoint node set J and a shift a."""

    rs: RootSystem
    node: int
    J: tuple[int, ...] = ()
    a: int = 0


def make_context(rs: RootSystem, node: int, a: int = 0, J=()) -> GradingContext:
    if node not in cominuscule_nodes(rs):
        raise NotCominusculeError(f"node {node} of {rs} is not cominuscule")
    J = tuple(sorted(J))
    if node in J:
        raise ValueError(f"J {J} must not contain the marked node {node}")
    for j in J:
        if not 1 <= j <= rs.rank:
            raise ValueError(f"node {j} in J out of range 1..{rs.rank}")
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    return GradingContext(rs, node, J, a)


def zi_level(ctx: GradingContext, alpha: Root) -> int:
    """Level of a root for the marked node; always -1, 0 or 1."""
    return alpha[ctx.node - 1]


def zw_level(ctx: GradingContext, alpha: Root) -> int:
    return sum(alpha[j - 1] for j in ctx.J)


def tilde_level(ctx: GradingContext, alpha: Root) -> int:
    """J-level shifted by a at the marked node."""
    return zw_level(ctx, alpha) - ctx.a * zi_level(ctx, alpha)


def bigraded_roots(ctx: GradingContext, k: int, level: int) -> tuple[Root, ...]:
    """All roots (both signs) with i-level k and J-level ``level``."""
    return tuple(
        alpha
        for alpha in all_roots(ctx.rs)
        if zi_level(ctx, alpha) == k and zw_level(ctx, alpha) == level
    )


@lru_cache(maxsize=None)
def _g1_cached(rs_key: tuple[str, int], node: int) -> tuple[Root, ...]:
    rs = build_root_system(*rs_key)
    return tuple(r for r in rs.positive_roots if r[node - 1] == 1)


def g1_roots(rs: RootSystem, node: int) -> tuple[Root, ...]:
    """The i-level-1 roots, in root-table order."""
    if node not in cominuscule_nodes(rs):
        raise NotCominusculeError(f"node {node} of {rs} is not cominuscule")
    return _g1_cached((rs.kind, rs.rank), node)
