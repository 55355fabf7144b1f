"""Dictionaries between (a, J) data and classical partition descriptions.

Covered spaces: Grassmannians (type A, any node), Lagrangian Grassmannians
(type C, last node), spinor varieties (type D, last node) and both quadrics
(types B and D, first node).  Partitions are strictly increasing tuples; the
endpoint classes translate to markers, not partitions with fabricated data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schubert import AJ, Marker

GRASSMANN = "grassmann"
LAGRANGIAN = "lagrangian"
SPINOR = "spinor"


class InvalidPartitionError(ValueError):
    pass


class InvalidAJError(ValueError):
    pass


# -- validation -------------------------------------------------------------


def validate_partition(flavor: str, n: int, node: int, parts) -> tuple[int, ...]:
    """Checks the flavor's shape constraints; returns the normalized tuple.

    For the Grassmannian flavor, n is the rank (ambient dimension n+1) and
    node the marked node; for the isotropic flavors node is ignored and the
    parts live in 1..2n.
    """
    parts = tuple(parts)
    if any(parts[t] >= parts[t + 1] for t in range(len(parts) - 1)):
        raise InvalidPartitionError(f"{parts} is not strictly increasing")
    if flavor == GRASSMANN:
        if len(parts) != node:
            raise InvalidPartitionError(f"{parts} must have length {node}")
        if not parts or parts[0] < 1 or parts[-1] > n + 1:
            raise InvalidPartitionError(f"{parts} must lie in 1..{n + 1}")
        return parts
    if flavor not in (LAGRANGIAN, SPINOR):
        raise ValueError(f"unknown flavor {flavor!r}")
    if len(parts) != n:
        raise InvalidPartitionError(f"{parts} must have length {n}")
    if parts[0] < 1 or parts[-1] > 2 * n:
        raise InvalidPartitionError(f"{parts} must lie in 1..{2 * n}")
    members = set(parts)
    for x in parts:
        if 2 * n + 1 - x in members:
            raise InvalidPartitionError(f"{parts} contains both {x} and {2*n+1-x}")
    if flavor == SPINOR and sum(1 for x in parts if x > n) % 2 != 0:
        raise InvalidPartitionError(f"{parts} has an odd number of parts above {n}")
    return parts


def _blocks(parts, consecutive) -> list[list[int]]:
    blocks: list[list[int]] = [[parts[0]]]
    for x in parts[1:]:
        if consecutive(blocks[-1][-1], x):
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return blocks


# -- Grassmannian Gr(node, n+1) = A_n / P_node -------------------------------


def grassmann_partition_to_aj(n: int, node: int, parts) -> AJ | Marker:
    parts = validate_partition(GRASSMANN, n, node, parts)
    if parts == tuple(range(1, node + 1)):
        return Marker.BOTTOM
    if parts == tuple(range(n + 2 - node, n + 2)):
        return Marker.TOP
    blocks = _blocks(parts, lambda x, y: y == x + 1)
    p = len(blocks) - 1
    # blocks[0] is the leftmost; cumulative lengths from the left give the
    # below-node markers, block ends shifted give the above-node markers.
    cumulative = []
    total = 0
    for b in blocks:
        total += len(b)
        cumulative.append(total)
    lows = [cumulative[t] for t in range(p)]  # j_p, ..., j_1 (ascending)
    highs = set()
    for t, b in enumerate(blocks):
        highs.add(node - cumulative[t] + b[-1])
    highs -= {node, n + 1}
    a = p if parts[0] > 1 else p - 1
    a_check = len(highs) if parts[-1] == n + 1 else len(highs) - 1
    if a != a_check:
        raise AssertionError(f"inconsistent a for {parts}: {a} vs {a_check}")
    return AJ(a, tuple(sorted(set(lows) | highs)))


def grassmann_aj_to_partition(n: int, node: int, aj: AJ | Marker) -> tuple[int, ...]:
    if aj is Marker.BOTTOM:
        return tuple(range(1, node + 1))
    if aj is Marker.TOP:
        return tuple(range(n + 2 - node, n + 2))
    lows = sorted((j for j in aj.J if j < node), reverse=True)
    highs = sorted(j for j in aj.J if j > node)
    if node in aj.J or any(j > n for j in aj.J):
        raise InvalidAJError(f"J {aj.J} invalid for node {node} of rank {n}")
    p, q = len(lows), len(highs)
    if p not in (aj.a, aj.a + 1) or q not in (aj.a, aj.a + 1):
        raise InvalidAJError(f"{aj} violates the split-size constraint at {node}")
    j_seq = [node] + lows + [0]  # j_0 .. j_{p+1}
    k_seq = [node] + highs + [n + 1]  # k_0 .. k_{q+1}
    parts: list[int] = []
    for ell in range(p, -1, -1):
        m = aj.a + 1 - ell
        if not 0 <= m <= q + 1:
            raise InvalidAJError(f"{aj} has no block decomposition")
        start = j_seq[ell + 1] + k_seq[m] - node + 1
        stop = j_seq[ell] + k_seq[m] - node
        parts.extend(range(start, stop + 1))
    return validate_partition(GRASSMANN, n, node, parts)


# -- Lagrangian Grassmannian LG(n, 2n) = C_n / P_n ---------------------------


def lagrangian_partition_to_aj(n: int, parts) -> AJ | Marker:
    parts = validate_partition(LAGRANGIAN, n, n, parts)
    if parts == tuple(range(1, n + 1)):
        return Marker.BOTTOM
    if parts == tuple(range(n + 1, 2 * n + 1)):
        return Marker.TOP
    blocks = _blocks(parts, lambda x, y: y == x + 1)
    p = len(blocks) - 1
    cumulative = []
    total = 0
    for b in blocks:
        total += len(b)
        cumulative.append(total)
    J = tuple(sorted(cumulative[t] for t in range(p)))
    a = p - 1 if parts[0] == 1 else p
    return AJ(a, J)


def _isotropic_blocks_from_aj(n: int, aj: AJ, shift: int) -> list[int]:
    js = sorted(aj.J, reverse=True)
    p = len(js)
    if any(not 1 <= j <= n - 1 for j in aj.J):
        raise InvalidAJError(f"J {aj.J} must lie in 1..{n - 1}")
    if p - shift not in (aj.a, aj.a + 1):
        raise InvalidAJError(f"{aj} violates the size constraint")
    j_seq = [n] + js + [0]  # j_0 .. j_{p+1}
    parts: list[int] = []
    for ell in range(p, -1, -1):
        m = aj.a + 1 + shift - ell
        if not 0 <= m <= p + 1:
            raise InvalidAJError(f"{aj} has no block decomposition")
        start = n + 1 + j_seq[ell + 1] - j_seq[m]
        stop = n + j_seq[ell] - j_seq[m]
        parts.extend(range(start, stop + 1))
    return parts


def lagrangian_aj_to_partition(n: int, aj: AJ | Marker) -> tuple[int, ...]:
    if aj is Marker.BOTTOM:
        return tuple(range(1, n + 1))
    if aj is Marker.TOP:
        return tuple(range(n + 1, 2 * n + 1))
    parts = _isotropic_blocks_from_aj(n, aj, 0)
    return validate_partition(LAGRANGIAN, n, n, parts)


# -- spinor variety S_n = D_n / P_n ------------------------------------------


def _spinor_consecutive(n: int):
    # n-1 with n+1 and n with n+2 count as consecutive inside a block.
    def consecutive(x: int, y: int) -> bool:
        if y == x + 1:
            return True
        return (x, y) in ((n - 1, n + 1), (n, n + 2))

    return consecutive


def spinor_top_partition(n: int) -> tuple[int, ...]:
    # The largest admissible partition; for odd n the evenness constraint
    # replaces n+1 by n.
    if n % 2 == 0:
        return tuple(range(n + 1, 2 * n + 1))
    return (n,) + tuple(range(n + 2, 2 * n + 1))


def spinor_partition_to_aj(n: int, parts) -> AJ | Marker:
    parts = validate_partition(SPINOR, n, n, parts)
    if parts == tuple(range(1, n + 1)):
        return Marker.BOTTOM
    if parts == spinor_top_partition(n):
        return Marker.TOP
    blocks = _blocks(parts, _spinor_consecutive(n))
    p = len(blocks) - 1
    cumulative = []
    total = 0
    for b in blocks:
        total += len(b)
        cumulative.append(total)
    J = tuple(sorted(cumulative[t] for t in range(p)))
    tail_gap = parts[-1] - parts[-2] > 1
    if parts[0] == 1 and tail_gap:
        a = p - 2
    elif parts[0] > 1 and not tail_gap:
        a = p
    else:
        a = p - 1
    if a < 0:
        raise InvalidPartitionError(f"{parts} does not describe a proper class")
    return AJ(a, J)


def spinor_aj_to_partition(n: int, aj: AJ | Marker) -> tuple[int, ...]:
    if aj is Marker.BOTTOM:
        return tuple(range(1, n + 1))
    if aj is Marker.TOP:
        return spinor_top_partition(n)
    shift = 1 if n - 1 in aj.J else 0
    parts = _isotropic_blocks_from_aj(n, aj, shift)
    if sum(1 for x in parts if x > n) % 2 != 0:
        # parity repair: exactly one of n, n+1 is present; swap it.
        members = set(parts)
        present = members & {n, n + 1}
        if len(present) != 1:
            raise AssertionError(f"parity repair impossible for {parts}")
        old = present.pop()
        new = n if old == n + 1 else n + 1
        parts = sorted(members - {old} | {new})
    return validate_partition(SPINOR, n, n, parts)


# -- quadrics ----------------------------------------------------------------


@dataclass(frozen=True)
class QuadricClassDescriptor:
    parity: str  # "odd" for B_n/P_1, "even" for D_n/P_1
    rank: int
    a: int
    J: tuple[int, ...]
    geometry: str  # "projective" or "quadric_section"
    dim: int | None  # projective-space dimension when geometry == projective
    span: tuple[int, ...] | None  # basis indices when geometry == quadric_section

    @property
    def tag(self) -> str:
        if self.geometry == "projective":
            return f"P^{self.dim}"
        m = 2 * self.rank - 1 if self.parity == "odd" else 2 * self.rank - 2
        return f"Q^{m} ∩ P<{','.join(f'e{t}' for t in self.span)}>"


def quadric_admissible(parity: str, n: int) -> tuple[AJ, ...]:
    """All (a, J) pairs realized by proper classes of the quadric."""
    if parity == "odd":
        return tuple(AJ(a, (j,)) for a in (0, 1) for j in range(2, n + 1))
    if parity == "even":
        zero = [AJ(0, (j,)) for j in range(2, n + 1)] + [AJ(0, (n - 1, n))]
        one = [AJ(1, (j,)) for j in range(2, n - 1)] + [AJ(1, (n - 1, n))]
        return tuple(zero + one)
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def quadric_descriptor(parity: str, n: int, aj: AJ) -> QuadricClassDescriptor:
    if aj not in quadric_admissible(parity, n):
        raise InvalidAJError(f"{aj} is not a class of the {parity} quadric, n={n}")
    J = aj.J
    if parity == "odd":
        j = J[0]
        if aj.a == 0:
            return QuadricClassDescriptor(parity, n, 0, J, "projective", j - 1, None)
        span = tuple(range(1, n + 2)) + tuple(range(n + j + 1, 2 * n + 2))
        return QuadricClassDescriptor(parity, n, 1, J, "quadric_section", None, span)
    if aj.a == 0:
        if J == (n - 1, n):
            dim = n - 2
        elif J[0] in (n - 1, n):
            dim = n - 1
        else:
            dim = J[0] - 1
        return QuadricClassDescriptor(parity, n, 0, J, "projective", dim, None)
    if J == (n - 1, n):
        span = tuple(range(1, n + 2)) + (2 * n,)
    else:
        span = tuple(range(1, n + 2)) + tuple(range(n + J[0] + 1, 2 * n + 1))
    return QuadricClassDescriptor(parity, n, 1, J, "quadric_section", None, span)
