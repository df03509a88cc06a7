"""Lower-bound colourings of K_{p-1} with no colour-j-avoiding P_{l_j}.

Every construction here is a block colouring: vertices are split into
consecutive blocks A_1, ..., A_t and an edge between A_i and A_j (i <= j)
gets colour j.  Only the block sizes depend on the branch.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .coloring import EdgeColoring, coloring_from_function
from .errors import PreconditionError
from .formula import LengthsLike, as_targets, p, s_value


class PartitionBranch(str, enum.Enum):
    EXPLICIT = "Explicit"
    RECURSE_FEWER_COLORS = "RecurseFewerColors"
    GEN_EQUALITY_RESTRICT = "GenEqualityRestrict"
    TWO_COLOR_BASE = "TwoColorBase"


@dataclass(frozen=True)
class PartitionSpec:
    sizes: tuple[int, ...]
    s: int
    S: int
    branch: PartitionBranch

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def to_json(self) -> dict:
        return {"sizes": list(self.sizes), "s": self.s, "branch": self.branch.value}


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def partition_sizes(lengths: LengthsLike) -> PartitionSpec:
    """Block sizes of the explicit construction (t >= 3, l_t < p(prefix), s >= l_t)."""
    ls = as_targets(lengths).lengths
    t = len(ls)
    if t < 3:
        raise PreconditionError("explicit partition needs t >= 3")
    if ls[-1] >= p(ls[:-1]):
        raise PreconditionError("l_t >= p(prefix): route to the fewer-colours branch")
    s = s_value(ls)
    if s < ls[-1]:
        raise PreconditionError("s < l_t: route to the restriction branch")

    a = [0] * (t + 1)  # 1-based
    a[t] = s - ls[t - 1]
    for i in range(t - 1, 2, -1):
        a[i] = 2 * a[i + 1] + ls[i] - ls[i - 1]
    S = sum(a[3:])
    l1, l2 = ls[0], ls[1]
    a[1] = _ceil_div(2 * s - 2 * S + l2 - l1 - 1, 3)
    a[2] = (s - S + l1 - l2 - 2) // 3
    sizes = tuple(a[1:])
    if sizes[0] < 1 or min(sizes) < 0:
        raise AssertionError(f"negative block size {sizes} for {ls}")
    spec = PartitionSpec(sizes, s, S, PartitionBranch.EXPLICIT)
    failed = [row for row in constraint_rows(ls, sizes, s) if not row[-1]]
    if failed:
        raise AssertionError(f"constraint system violated for {ls}: {failed}")
    return spec


def constraint_rows(ls, sizes, s) -> list[tuple[str, int, str, int, bool]]:
    """Rows of the explicit-branch constraint system as (name, lhs, op, rhs, holds)."""
    ls = tuple(ls)
    t = len(ls)
    a = (0,) + tuple(sizes)
    S = sum(a[3:])
    rows = []

    def add(name, lhs, op, rhs):
        holds = lhs <= rhs if op == "<=" else lhs == rhs
        rows.append((name, lhs, op, rhs, holds))

    add("row1", 2 * a[2] + 2 * S + 1, "<=", ls[0] - 1)
    add("row2", a[1] + 2 * S, "<=", ls[1] - 1)
    for m in range(3, t):
        lhs = sum(a[1:m]) + 2 * sum(a[m + 1:])
        add(f"row{m}", lhs, "==", ls[m - 1] - 1)
    add(f"row{t}", sum(a[1:t]), "==", ls[t - 1] - 1)
    add("sum", sum(a[1:]), "==", s - 1)
    return rows


def _sizes(ls: tuple[int, ...]) -> PartitionSpec:
    t = len(ls)
    pv = p(ls)
    if t == 2:
        sizes = (ls[1] - 1, ls[0] // 2 - 1)
        return PartitionSpec(sizes, pv, 0, PartitionBranch.TWO_COLOR_BASE)
    prefix_p = p(ls[:-1])
    if ls[-1] >= prefix_p:
        inner = _sizes(ls[:-1])
        sizes = inner.sizes + (0,)
        return PartitionSpec(sizes, pv, sum(sizes[2:]), PartitionBranch.RECURSE_FEWER_COLORS)
    s = s_value(ls)
    if s < ls[-1]:
        inner = _sizes(ls[:-1])
        keep = s - 1
        sizes = []
        for size in inner.sizes:
            take = min(size, keep)
            sizes.append(take)
            keep -= take
        sizes = tuple(sizes) + (0,)
        return PartitionSpec(sizes, pv, sum(sizes[2:]), PartitionBranch.GEN_EQUALITY_RESTRICT)
    return partition_sizes(ls)


def block_of(spec: PartitionSpec, vertex: int) -> int:
    if not 0 <= vertex < spec.n:
        raise ValueError(f"vertex {vertex} outside 0..{spec.n - 1}")
    start = 0
    for j, size in enumerate(spec.sizes, start=1):
        start += size
        if vertex < start:
            return j
    raise AssertionError("unreachable")


def block_coloring(sizes, colors=None) -> EdgeColoring:
    """Colour edge {u, v} by the larger block index among its ends.

    ``colors[k]`` relabels block k+1; defaults to the identity.
    """
    t = len(sizes)
    colors = tuple(colors) if colors else tuple(range(1, t + 1))
    block = [j for j, size in enumerate(sizes) for _ in range(size)]
    n = len(block)
    if n == 0:
        raise ValueError("construction has no vertices")
    return coloring_from_function(n, t, lambda u, v: colors[max(block[u], block[v])])


def construct_extremal(lengths: LengthsLike) -> tuple[EdgeColoring, PartitionSpec]:
    """A t-colouring of K_{p-1} with no colour-j-avoiding path of order l_j for any j.

    Blocks follow sorted slot order; colours are the caller's colour labels.
    """
    tl = as_targets(lengths)
    spec = _sizes(tl.lengths)
    if spec.n != spec.s - 1:
        raise AssertionError(f"construction has {spec.n} vertices, expected {spec.s - 1}")
    return block_coloring(spec.sizes, tl.colors), spec


def structural_bound(spec: PartitionSpec, j: int) -> int:
    """max(1, |A|) + 2|C| with A the blocks before j and C the blocks after j."""
    a = sum(spec.sizes[: j - 1])
    c = sum(spec.sizes[j:])
    return max(1, a) + 2 * c
