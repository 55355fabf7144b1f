"""Weyl group elements, minimal coset representatives and their Hasse diagram.

Elements act on the root lattice in simple-root coordinates.  A word
``(j1, j2, ..., jk)`` denotes the product s_{j1} s_{j2} ... s_{jk}; applied to
a vector, the rightmost letter acts first.  Extending a word on the right by
j multiplies on the right by s_j and, when the length grows, adds the single
root w(alpha_j) to the inversion set.  The convention is pinned by a
regression test: in E6 with marked node 6 the word (6, 5) has inversion set
{alpha_6, alpha_5 + alpha_6}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .grading import NotCominusculeError, cominuscule_nodes, g1_roots
from .rootsys import Root, RootSystem, build_root_system, negative


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[Root, ...]  # column j-1 = image of alpha_j
    inverse: tuple[Root, ...]  # columns of the inverse element
    word: tuple[int, ...]


def identity_element(rank: int) -> WeylElement:
    cols = tuple(tuple(1 if t == j else 0 for t in range(rank)) for j in range(rank))
    return WeylElement(cols, cols, ())


def act(w: WeylElement, v: Root) -> Root:
    rank = len(v)
    out = [0] * rank
    for j, c in enumerate(v):
        if c:
            col = w.matrix[j]
            for t in range(rank):
                out[t] += c * col[t]
    return tuple(out)


def act_inverse(w: WeylElement, v: Root) -> Root:
    rank = len(v)
    out = [0] * rank
    for j, c in enumerate(v):
        if c:
            col = w.inverse[j]
            for t in range(rank):
                out[t] += c * col[t]
    return tuple(out)


def extend(rs: RootSystem, w: WeylElement, j: int) -> WeylElement:
    """Right multiplication by the simple reflection s_j."""
    rank = rs.rank
    row = rs.cartan[j - 1]
    wj = w.matrix[j - 1]
    cols = []
    for k in range(rank):
        c = row[k]
        if c == 0:
            cols.append(w.matrix[k])
        else:
            cols.append(tuple(x - c * y for x, y in zip(w.matrix[k], wj)))
    inv_cols = []
    for k in range(rank):
        v = w.inverse[k]
        p = rs.pair(v, j)
        if p == 0:
            inv_cols.append(v)
        else:
            out = list(v)
            out[j - 1] -= p
            inv_cols.append(tuple(out))
    return WeylElement(tuple(cols), tuple(inv_cols), w.word + (j,))


def word_element(rs: RootSystem, word) -> WeylElement:
    w = identity_element(rs.rank)
    for j in word:
        w = extend(rs, w, j)
    return w


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset[Root]:
    """{w(beta) : beta negative} intersected with the positive roots."""
    out = []
    for gamma in rs.positive_roots:
        img = act(w, negative(gamma))
        if rs.is_positive_root(img):
            out.append(img)
    return frozenset(out)


def is_closed(rs: RootSystem, roots) -> bool:
    """Whether a root set is closed under addition within the system."""
    pool = list(roots)
    members = set(pool)
    for x in range(len(pool)):
        for y in range(x + 1, len(pool)):
            s = tuple(a + b for a, b in zip(pool[x], pool[y]))
            if rs.is_root(s) and s not in members:
                return False
    return True


class HasseDiagram:
    """All minimal coset representatives for a cominuscule marked node.

    Classes are stored as bitmasks over ``g1`` (the i-level-1 roots in table
    order).  Two independent enumerations are run and compared: a breadth
    first walk of the Weyl group filtered by inversion sets staying inside
    g1, and a direct walk of the lower order ideals of g1.  Immutable after
    construction.
    """

    def __init__(self, rs: RootSystem, node: int):
        if node not in cominuscule_nodes(rs):
            raise NotCominusculeError(f"node {node} of {rs} is not cominuscule")
        self.rs = rs
        self.node = node
        self.g1 = g1_roots(rs, node)
        self.g1_index = {r: t for t, r in enumerate(self.g1)}
        self._full_mask = (1 << len(self.g1)) - 1

        elements = self._enumerate_weyl()
        ideals = self._enumerate_ideals()
        if set(elements) != ideals:
            raise RuntimeError(
                "Weyl walk and ideal enumeration disagree for "
                f"{rs.kind}{rs.rank}/P{node}"
            )
        self._element = elements
        self._word = self._canonical_words()
        self.classes = tuple(
            sorted(elements, key=lambda m: (m.bit_count(), self._word[m]))
        )
        self.cover_edges = self._covers()

    # -- enumeration ----------------------------------------------------

    def _enumerate_weyl(self) -> dict[int, WeylElement]:
        rs = self.rs
        found = {0: identity_element(rs.rank)}
        frontier = [0]
        while frontier:
            nxt = []
            for mask in frontier:
                w = found[mask]
                for j in range(1, rs.rank + 1):
                    img = act(w, rs.simple_root(j))
                    t = self.g1_index.get(img)
                    if t is None:
                        continue
                    new_mask = mask | (1 << t)
                    if new_mask == mask:
                        continue
                    cand = extend(rs, w, j)
                    prev = found.get(new_mask)
                    if prev is None:
                        found[new_mask] = cand
                        nxt.append(new_mask)
                    elif prev.matrix != cand.matrix:
                        raise RuntimeError("distinct elements share an inversion set")
            frontier = nxt
        return found

    def _enumerate_ideals(self) -> set[int]:
        ideals = {0}
        frontier = [0]
        n = len(self.g1)
        while frontier:
            nxt = []
            for mask in frontier:
                for t in range(n):
                    bit = 1 << t
                    if mask & bit:
                        continue
                    cand = mask | bit
                    if cand not in ideals and self.is_ideal(cand):
                        ideals.add(cand)
                        nxt.append(cand)
            frontier = nxt
        return ideals

    def is_ideal(self, mask: int) -> bool:
        """Downward closed under subtracting simple roots within g1."""
        rank = self.rs.rank
        m = mask
        while m:
            t = (m & -m).bit_length() - 1
            m &= m - 1
            root = self.g1[t]
            for j in range(1, rank + 1):
                if root[j - 1] == 0:
                    continue
                down = list(root)
                down[j - 1] -= 1
                s = self.g1_index.get(tuple(down))
                if s is not None and not mask & (1 << s):
                    return False
        return True

    # -- words -----------------------------------------------------------

    def _canonical_words(self) -> dict[int, tuple[int, ...]]:
        # Among all reduced words of a class, emit the one whose reversal is
        # lexicographically smallest: when several maximal roots could be
        # deleted last, prefer the smallest closing letter, recursively.
        # This reproduces the word column of the reference tables
        # (regression-tested against all 79 rows).
        words: dict[int, tuple[int, ...]] = {0: ()}
        for mask in sorted(self._element, key=int.bit_count):
            if mask == 0:
                continue
            best = None
            best_key = None
            m = mask
            while m:
                t = (m & -m).bit_length() - 1
                m &= m - 1
                parent = mask & ~(1 << t)
                if not self.is_ideal(parent):
                    continue
                wp = self._element[parent]
                v = act_inverse(wp, self.g1[t])
                if sum(v) != 1 or min(v) < 0:
                    raise RuntimeError("cover letter is not a simple reflection")
                j = v.index(1) + 1
                cand = words[parent] + (j,)
                key = cand[::-1]
                if best_key is None or key < best_key:
                    best, best_key = cand, key
            assert best is not None
            words[mask] = best
        return words

    def _covers(self) -> tuple[tuple[int, int], ...]:
        order = {m: t for t, m in enumerate(self.classes)}
        edges = []
        for mask in self.classes:
            for t in range(len(self.g1)):
                bit = 1 << t
                if mask & bit:
                    continue
                upper = mask | bit
                if self.is_ideal(upper):
                    edges.append((mask, upper))
        edges.sort(key=lambda e: (order[e[0]], order[e[1]]))
        return tuple(edges)

    # -- queries ----------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return self._full_mask

    def dim_of(self, mask: int) -> int:
        return mask.bit_count()

    def roots_of(self, mask: int) -> frozenset[Root]:
        return frozenset(self.g1[t] for t in range(len(self.g1)) if mask & (1 << t))

    def mask_of(self, roots) -> int:
        mask = 0
        for r in roots:
            t = self.g1_index.get(r)
            if t is None:
                raise ValueError(f"{r} is not an i-level-1 root of this space")
            mask |= 1 << t
        return mask

    def element_of(self, mask: int) -> WeylElement:
        return self._element[mask]

    def word_of(self, mask: int) -> tuple[int, ...]:
        return self._word[mask]

    def leq(self, lower: int, upper: int) -> bool:
        return lower & ~upper == 0


def enumerate_Wp(rs: RootSystem, node: int) -> HasseDiagram:
    return HasseDiagram(rs, node)


@lru_cache(maxsize=None)
def get_diagram(kind: str, rank: int, node: int) -> HasseDiagram:
    """Cached diagram for a space given by (kind, rank, marked node)."""
    return HasseDiagram(build_root_system(kind, rank), node)


def bruhat_leq(diagram: HasseDiagram, lower, upper) -> bool:
    """Order by containment of inversion sets; accepts masks or root sets."""
    ml = lower if isinstance(lower, int) else diagram.mask_of(lower)
    mu = upper if isinstance(upper, int) else diagram.mask_of(upper)
    return diagram.leq(ml, mu)


def reduced_word(diagram: HasseDiagram, ideal) -> tuple[int, ...]:
    mask = ideal if isinstance(ideal, int) else diagram.mask_of(ideal)
    return diagram.word_of(mask)


# -- Weyl group orders, used to cross-check |W^p| -------------------------


def weyl_group_order(kind: str, rank: int) -> int:
    if kind == "A":
        return math.factorial(rank + 1)
    if kind in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if kind == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if kind == "E6":
        return 51840
    if kind == "E7":
        return 2903040
    raise ValueError(f"unknown kind {kind!r}")


def levi_weyl_order(rs: RootSystem, node: int) -> int:
    """Order of the Weyl group of the subdiagram with ``node`` deleted."""
    rank = rs.rank
    nodes = [j for j in range(1, rank + 1) if j != node]
    adj = {j: set() for j in nodes}
    for x in nodes:
        for y in nodes:
            if x < y and rs.cartan[x - 1][y - 1] != 0:
                adj[x].add(y)
                adj[y].add(x)
    seen: set[int] = set()
    order = 1
    for start in nodes:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        order *= _component_weyl_order(rs, comp, adj)
    return order


def _component_weyl_order(rs: RootSystem, comp: set[int], adj) -> int:
    k = len(comp)
    branch = [u for u in comp if len(adj[u] & comp) == 3]
    if branch:
        b = branch[0]
        arms = sorted(_arm_lengths(comp, adj, b))
        if arms == [1, 1, k - 3]:
            return 2 ** (k - 1) * math.factorial(k)  # D_k
        if arms == [1, 2, 2]:
            return 51840  # E6
        if arms == [1, 2, 3]:
            return 2903040  # E7
        raise ValueError(f"unrecognized branched subdiagram {sorted(comp)}")
    double = any(
        rs.cartan[x - 1][y - 1] * rs.cartan[y - 1][x - 1] == 2
        for x in comp
        for y in comp
        if x != y
    )
    if double:
        return 2**k * math.factorial(k)  # B_k / C_k
    return math.factorial(k + 1)  # A_k


def _arm_lengths(comp: set[int], adj, b: int) -> list[int]:
    lengths = []
    for first in adj[b] & comp:
        count = 0
        prev, cur = b, first
        while cur is not None:
            count += 1
            nxt = [v for v in adj[cur] & comp if v != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        lengths.append(count)
    return lengths
