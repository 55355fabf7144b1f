"""Finite root systems of types A, B, C, D, E6, E7 in simple-root coordinates.

Every root is an integer coefficient vector over the simple roots
``alpha_1 .. alpha_r`` (Bourbaki node numbering).  All gradings computed
elsewhere in the package are coefficient reads, so this representation is
lossless and exact.
"""

from __future__ import annotations

from functools import lru_cache

Root = tuple[int, ...]

SUPPORTED_KINDS = ("A", "B", "C", "D", "E6", "E7")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E6": 6, "E7": 7}
_MAX_RANK = {"E6": 6, "E7": 7}


class InvalidSystemError(ValueError):
    """Unsupported (kind, rank) combination."""


class NotARootError(ValueError):
    """An argument vector is not a root of the system."""


def _dynkin_edges(kind: str, rank: int) -> list[tuple[int, int]]:
    if kind in ("A", "B", "C"):
        return [(j, j + 1) for j in range(1, rank)]
    if kind == "D":
        edges = [(j, j + 1) for j in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return edges
    if kind == "E6":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if kind == "E7":
        return [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]
    raise InvalidSystemError(f"unknown kind {kind!r}")


def _cartan_matrix(kind: str, rank: int) -> tuple[tuple[int, ...], ...]:
    # cartan[i-1][j-1] = <alpha_j, alpha_i^vee>
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    for i, j in _dynkin_edges(kind, rank):
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    if kind == "B":  # alpha_rank is short
        c[rank - 1][rank - 2] = -2
    if kind == "C":  # alpha_rank is long
        c[rank - 2][rank - 1] = -2
    return tuple(tuple(row) for row in c)


def _height(root: Root) -> int:
    return sum(root)


class RootSystem:
    """Immutable after construction; safe to share across threads.

    ``positive_roots`` is ordered by height then lexicographically, so all
    derived tables and files are deterministic.
    """

    def __init__(self, kind: str, rank: int):
        if kind not in SUPPORTED_KINDS:
            raise InvalidSystemError(f"unsupported type {kind!r}")
        if rank < _MIN_RANK[kind] or rank > _MAX_RANK.get(kind, rank):
            raise InvalidSystemError(f"rank {rank} invalid for type {kind}")
        self.kind = kind
        self.rank = rank
        self.cartan = _cartan_matrix(kind, rank)
        self.positive_roots = self._generate_positive_roots()
        self._positive_set = frozenset(self.positive_roots)
        self.index = {r: t for t, r in enumerate(self.positive_roots)}
        self.highest_root = self.positive_roots[-1]
        top_height = _height(self.highest_root)
        if sum(1 for r in self.positive_roots if _height(r) == top_height) != 1:
            raise InvalidSystemError(f"no unique highest root for {kind}{rank}")

    def __repr__(self) -> str:
        return f"RootSystem({self.kind}, {self.rank})"

    def simple_root(self, j: int) -> Root:
        self._check_node(j)
        return tuple(1 if t == j - 1 else 0 for t in range(self.rank))

    def _check_node(self, j: int) -> None:
        if not 1 <= j <= self.rank:
            raise ValueError(f"node index {j} out of range 1..{self.rank}")

    def pair(self, beta: Root, i: int) -> int:
        """<beta, alpha_i^vee>, the coroot pairing used by reflections."""
        row = self.cartan[i - 1]
        return sum(b * c for b, c in zip(beta, row))

    def reflect(self, beta: Root, i: int) -> Root:
        p = self.pair(beta, i)
        if p == 0:
            return beta
        out = list(beta)
        out[i - 1] -= p
        return tuple(out)

    def is_positive_root(self, v: Root) -> bool:
        return v in self._positive_set

    def is_root(self, v: Root) -> bool:
        return v in self._positive_set or tuple(-x for x in v) in self._positive_set

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        # Close the simple roots under root-string addition.  For a root beta
        # and simple alpha_i, beta + alpha_i is a root iff q >= 1 where
        # q = p - <beta, alpha_i^vee> and p is the depth of the i-string below.
        rank = self.rank
        simple = [tuple(1 if t == j else 0 for t in range(rank)) for j in range(rank)]
        found: set[Root] = set(simple)
        layer: set[Root] = set(simple)
        while layer:
            nxt: set[Root] = set()
            for beta in layer:
                for i in range(1, rank + 1):
                    down = list(beta)
                    down[i - 1] -= 1
                    p = 0
                    probe = tuple(down)
                    while probe in found:
                        p += 1
                        down[i - 1] -= 1
                        probe = tuple(down)
                    if p - self.pair(beta, i) >= 1:
                        up = list(beta)
                        up[i - 1] += 1
                        root = tuple(up)
                        if root not in found:
                            nxt.add(root)
            found |= nxt
            layer = nxt
        return tuple(sorted(found, key=lambda r: (_height(r), r)))


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system for a (kind, rank) pair."""
    return RootSystem(kind, rank)


def root_sum(rs: RootSystem, alpha: Root, beta: Root) -> Root | None:
    """alpha + beta if it is a root of rs, else None."""
    for v in (alpha, beta):
        if not rs.is_root(v):
            raise NotARootError(f"{v} is not a root of {rs}")
    total = tuple(a + b for a, b in zip(alpha, beta))
    return total if rs.is_root(total) else None


def coefficient(alpha: Root, j: int) -> int:
    """The alpha_j-coefficient of a root; equals its level for Z_j."""
    if not 1 <= j <= len(alpha):
        raise ValueError(f"node index {j} out of range 1..{len(alpha)}")
    return alpha[j - 1]


def negative(alpha: Root) -> Root:
    return tuple(-x for x in alpha)


def all_roots(rs: RootSystem) -> tuple[Root, ...]:
    """Positive roots followed by their negatives, in table order."""
    return rs.positive_roots + tuple(negative(r) for r in rs.positive_roots)
