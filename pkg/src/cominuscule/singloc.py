"""Irreducible components of Schubert singular loci.

For a proper class with data (a, J), the components correspond to the
i-level-1 roots of J-level a-1 that no positive (0,0)-bigraded root can be
added to.  Excising the witness set of such a root from the inversion set
yields the component's class; the codimension is the size of the excision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import (
    GradingContext,
    bigraded_roots,
    g1_roots,
    tilde_level,
    zi_level,
    zw_level,
)
from .rootsys import Root, RootSystem, all_roots, negative
from .schubert import AJ, Marker, aj_of, context_for


def g00_positive(ctx: GradingContext) -> frozenset[Root]:
    """Positive roots with both levels zero (the Levi of the Levi)."""
    return frozenset(
        alpha
        for alpha in ctx.rs.positive_roots
        if zi_level(ctx, alpha) == 0 and zw_level(ctx, alpha) == 0
    )


def pi_set(ctx: GradingContext) -> tuple[Root, ...]:
    """Highest-weight roots of the (1, a-1) bigraded piece, sorted."""
    if ctx.a == 0:
        return ()
    stable = g00_positive(ctx)
    out = []
    for eps in g1_roots(ctx.rs, ctx.node):
        if zw_level(ctx, eps) != ctx.a - 1:
            continue
        if all(
            not ctx.rs.is_root(tuple(e + s for e, s in zip(eps, sigma)))
            for sigma in stable
        ):
            out.append(eps)
    return tuple(sorted(out))


def delta_w_eps(ctx: GradingContext, eps: Root) -> frozenset[Root]:
    """The excision set of eps: eps plus its level-(a) neighbors."""
    if eps not in pi_set(ctx):
        raise ValueError(f"{eps} is not a highest-weight root for this class")
    members = {eps}
    for delta in bigraded_roots(ctx, 0, 1):
        cand = tuple(e + d for e, d in zip(eps, delta))
        if ctx.rs.is_root(cand):
            members.add(cand)
    return frozenset(members)


@dataclass(frozen=True)
class SingComponent:
    epsilon: Root
    excised: tuple[Root, ...]
    ideal: frozenset[Root]
    aj: AJ | Marker
    codim: int


@dataclass(frozen=True)
class SingReport:
    aj: AJ | Marker
    components: tuple[SingComponent, ...]
    predicted_count: int | None
    min_codim: int | None


def sing_components(ctx: GradingContext, ideal) -> SingReport:
    """Component report for a proper class; deterministic ordering."""
    ideal = frozenset(ideal)
    aj = aj_of(ctx.rs, ctx.node, ideal)
    if isinstance(aj, Marker):
        raise ValueError("singular locus reports are for proper classes only")
    if (aj.a, aj.J) != (ctx.a, ctx.J):
        raise ValueError(f"context {ctx.a}:{ctx.J} does not match class {aj}")

    components = []
    for eps in pi_set(ctx):
        excised = delta_w_eps(ctx, eps)
        if not excised <= ideal:
            raise AssertionError(f"excision of {eps} leaves the inversion set")
        rest = ideal - excised
        rest_aj = aj_of(ctx.rs, ctx.node, rest)  # raises if not an ideal
        components.append(
            SingComponent(eps, tuple(sorted(excised)), rest, rest_aj, len(excised))
        )
    components.sort(key=lambda c: (c.codim, c.epsilon))
    report = SingReport(
        aj,
        tuple(components),
        predicted_component_count(ctx),
        min(c.codim for c in components) if components else None,
    )
    return report


def sing_report(rs: RootSystem, node: int, ideal) -> SingReport:
    """Report for any class; endpoints get an empty report."""
    aj = aj_of(rs, node, ideal)
    if isinstance(aj, Marker):
        return SingReport(aj, (), None, None)
    return sing_components(context_for(rs, node, aj), ideal)


# -- closed-form component counts (classical spaces) ----------------------


def _descending_j(aj: AJ) -> list[int]:
    # j_1 > j_2 > ... > j_p, with j_0 implied by the space.
    return sorted(aj.J, reverse=True)


def spinor_r(rs: RootSystem, aj: AJ) -> int:
    """The half-count invariant for maximal-node type-D classes."""
    shift = 1 if rs.rank - 1 in aj.J else 0
    return -((aj.a + shift) // -2)  # ceil


def predicted_component_count(ctx: GradingContext) -> int | None:
    """Closed-form component count where one exists; None otherwise."""
    rs, node, a = ctx.rs, ctx.node, ctx.a
    if rs.kind == "A":
        return a
    if rs.kind == "C" and node == rs.rank:
        return -(a // -2)
    if rs.kind == "D" and node == rs.rank:
        if a == 0:
            return 0
        if a == 1:
            return 1
        aj = AJ(a, ctx.J)
        shift = 1 if rs.rank - 1 in aj.J else 0
        r = spinor_r(rs, aj)
        js = _descending_j(aj)
        j_seq = [rs.rank] + js + [0]  # j_0, j_1, ..., j_p, j_{p+1}
        if j_seq[r - 1] - j_seq[r] == 1:
            return (a + shift) // 2
        return r
    return None


# -- minimal codimension bounds and equality predicates -------------------


@dataclass(frozen=True)
class MinCodimRecord:
    min_codim: int | None
    bound: int | None
    equality_expected: bool | None
    consistent: bool


def _grassmann_equality(rs: RootSystem, node: int, aj: AJ) -> bool:
    lows = sorted((j for j in aj.J if j < node), reverse=True)
    highs = sorted(j for j in aj.J if j > node)
    j_seq = [node] + lows + [0]
    k_seq = [node] + highs + [rs.rank + 1]
    p, q = len(lows), len(highs)
    for ell in range(1, p + 1):
        m = aj.a + 1 - ell
        if not 0 < m <= q:
            continue
        if j_seq[ell] - j_seq[ell + 1] == 1 and k_seq[m + 1] - k_seq[m] == 1:
            return True
    return False


def _lagrangian_equality(rs: RootSystem, aj: AJ) -> bool:
    if aj.a % 2 == 0 or aj.a == 0:
        return False
    ell = (aj.a + 1) // 2
    j_seq = [rs.rank] + sorted(aj.J, reverse=True) + [0]
    return j_seq[ell] - j_seq[ell + 1] == 1


def _spinor_equality(rs: RootSystem, aj: AJ) -> bool:
    # Uniform reading of the minimal-codimension criterion: a witness pair
    # 0 < ell < m summing to a + 1 + (level of alpha_{n-1}) with gap 1 + [ell
    # is the half-count] at ell and gap 1 at m.  Exhaustively checked against
    # computed codimensions for n <= 8; the published case split deviates on
    # boundary classes (see spinor_equality_stated).
    n = rs.rank
    js = _descending_j(aj)
    j_seq = [n] + js + [0]
    shift = 1 if n - 1 in aj.J else 0
    r = spinor_r(rs, aj)
    p = len(js)
    for ell in range(1, p + 1):
        m = aj.a + 1 + shift - ell
        if not ell < m <= p:
            continue
        need_l = 1 + (1 if ell == r else 0)
        if j_seq[ell] - j_seq[ell + 1] == need_l and j_seq[m] - j_seq[m + 1] == 1:
            return True
    return False


def spinor_equality_stated(rs: RootSystem, aj: AJ) -> bool:
    """The published criterion verbatim, including its special cases.

    Kept for comparison: on classes with n-1 marked and a in {1, 2} it
    disagrees with computed codimensions (the verification sweep reports
    every such class).
    """
    n = rs.rank
    js = _descending_j(aj)
    j_seq = [n] + js + [0]
    shift = 1 if n - 1 in aj.J else 0
    if js and js[0] == n - 1 and aj.a == 1:
        return len(js) >= 2 and js[1] == n - 3
    if js and js[0] == n - 1 and aj.a == 2:
        return len(js) >= 3 and js[1] == n - 2 and js[2] == n - 4
    r = spinor_r(rs, aj)
    p = len(js)
    for ell in range(shift + 1, p + 1):
        m = aj.a + 1 + shift - ell
        if not ell < m <= p:
            continue
        need_l = 1 + (1 if ell == r else 0)
        if j_seq[ell] - j_seq[ell + 1] == need_l and j_seq[m] - j_seq[m + 1] == 1:
            return True
    return False


def codim_bound(rs: RootSystem, node: int) -> int | None:
    if rs.kind == "A":
        return 3
    if rs.kind == "C" and node == rs.rank:
        return 2
    if rs.kind == "D" and node == rs.rank:
        return 3
    if rs.kind in ("E6", "E7"):
        return 3
    return None  # quadrics: no stated bound


def min_codim_analysis(ctx: GradingContext, report: SingReport) -> MinCodimRecord:
    """Minimal component codimension versus the space's bound.

    ``consistent`` is True when all components respect the bound and, where
    an equality predicate exists, the predicate holds exactly when the bound
    is attained.  Classes with no components are vacuously consistent.
    """
    rs, node = ctx.rs, ctx.node
    bound = codim_bound(rs, node)
    mc = report.min_codim
    expected: bool | None = None
    if isinstance(report.aj, AJ) and report.components:
        if rs.kind == "A":
            expected = _grassmann_equality(rs, node, report.aj)
        elif rs.kind == "C" and node == rs.rank:
            expected = _lagrangian_equality(rs, report.aj)
        elif rs.kind == "D" and node == rs.rank:
            expected = _spinor_equality(rs, report.aj)
    consistent = True
    if mc is not None and bound is not None:
        if mc < bound:
            consistent = False
        if expected is not None and (mc == bound) != expected:
            consistent = False
    return MinCodimRecord(mc, bound, expected, consistent)


# -- stabilizer content ----------------------------------------------------


@dataclass(frozen=True)
class StabilizerSplit:
    negative: frozenset[Root]
    levi: frozenset[Root]
    positive: frozenset[Root]

    def all(self) -> frozenset[Root]:
        return self.negative | self.levi | self.positive


def stabilizer_root_set(ctx: GradingContext, ideal) -> StabilizerSplit:
    """Root content of the class stabilizer, split by i-level.

    Two descriptions must agree: minus the inversion set, plus the
    nonnegative-J-level part of the Levi, plus the at-least-a part of the
    open cell; and the set of roots with nonnegative shifted level.
    """
    ideal = frozenset(ideal)
    neg = frozenset(negative(r) for r in ideal)
    levi = frozenset(
        alpha
        for alpha in all_roots(ctx.rs)
        if zi_level(ctx, alpha) == 0 and zw_level(ctx, alpha) >= 0
    )
    pos = frozenset(
        alpha for alpha in g1_roots(ctx.rs, ctx.node) if zw_level(ctx, alpha) >= ctx.a
    )
    split = StabilizerSplit(neg, levi, pos)
    by_tilde = frozenset(
        alpha for alpha in all_roots(ctx.rs) if tilde_level(ctx, alpha) >= 0
    )
    if split.all() != by_tilde:
        raise AssertionError("stabilizer descriptions disagree")
    return split
