"""Exact values of the (t-1)-chromatic path Ramsey numbers.

All quantities are integers computed with integer arithmetic only.  Target
tuples may be given in any order; they are sorted internally and the
sorted-slot to colour permutation is kept in :class:`TargetLengths`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

# Weighted sums are kept within signed 64-bit range so that every value can be
# handed to the compiled search kernels and to JSON consumers unchanged.
INT_LIMIT = 2**63 - 1


class Branch(str, enum.Enum):
    TWO_COLOR_BASE = "TwoColorBase"
    GEN_EQUALITY = "GenEquality"
    MAIN_FORMULA = "MainFormula"


@dataclass(frozen=True)
class TargetLengths:
    """Path orders sorted nondecreasingly.

    ``colors[k]`` is the (1-based) colour whose target sits in sorted slot
    ``k``.  Ties are broken by colour label.
    """

    lengths: tuple[int, ...]
    colors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.colors:
            object.__setattr__(self, "colors", tuple(range(1, len(self.lengths) + 1)))
        if len(self.colors) != len(self.lengths):
            raise ValueError("colors and lengths differ in size")
        if sorted(self.colors) != list(range(1, len(self.lengths) + 1)):
            raise ValueError(f"colors must be a permutation of 1..t, got {self.colors}")
        if any(int(x) != x for x in self.lengths):
            raise ValueError("target lengths must be integers")
        if any(x < 2 for x in self.lengths):
            raise ValueError(f"every target length must be >= 2, got {self.lengths}")
        if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise ValueError(f"lengths must be sorted, got {self.lengths}")

    @classmethod
    def from_colors(cls, per_color: Iterable[int]) -> "TargetLengths":
        """Build from targets listed by colour (entry k is the target of colour k+1)."""
        per_color = [int(x) for x in per_color]
        order = sorted(range(len(per_color)), key=lambda k: (per_color[k], k))
        return cls(tuple(per_color[k] for k in order), tuple(k + 1 for k in order))

    @property
    def t(self) -> int:
        return len(self.lengths)

    def per_color(self) -> tuple[int, ...]:
        out = [0] * self.t
        for length, color in zip(self.lengths, self.colors):
            out[color - 1] = length
        return tuple(out)

    def prefix(self, k: int) -> "TargetLengths":
        """The first ``k`` sorted slots, relabelled as colours 1..k in slot order."""
        return TargetLengths(self.lengths[:k])

    def __len__(self):
        return self.t

    def __iter__(self):
        return iter(self.lengths)


LengthsLike = Union[TargetLengths, Sequence[int]]


def as_targets(lengths: LengthsLike) -> TargetLengths:
    if isinstance(lengths, TargetLengths):
        return lengths
    return TargetLengths.from_colors(lengths)


@dataclass(frozen=True)
class BranchTrace:
    branch: Branch
    prefix_p: Optional[int] = None
    s: Optional[int] = None

    def to_json(self) -> dict:
        return {"branch": self.branch.value, "prefix_p": self.prefix_p, "s": self.s}


def _check_width(lengths: Sequence[int]) -> None:
    k = len(lengths)
    weighted = sum(x << i for i, x in enumerate(lengths))
    if weighted > INT_LIMIT or (1 << k) > INT_LIMIT:
        raise OverflowError(
            f"weighted sum for t={k} exceeds the signed 64-bit range; inputs rejected"
        )


def s_value(lengths: LengthsLike) -> int:
    """floor((l1 + 2 l2 + ... + 2^(k-1) lk - 2) / (2^k - 2)) over the sorted tuple."""
    tl = as_targets(lengths)
    k = tl.t
    if k < 2:
        raise ValueError("s_value needs at least two lengths")
    _check_width(tl.lengths)
    weighted = sum(x << i for i, x in enumerate(tl.lengths))
    return (weighted - 2) // ((1 << k) - 2)


def p_value(lengths: LengthsLike) -> tuple[int, BranchTrace]:
    """Least n such that every t-colouring of K_n has, for some colour i, a
    path of order l_i avoiding colour i."""
    tl = as_targets(lengths)
    ls = tl.lengths
    t = len(ls)
    if t < 2:
        raise ValueError("p_value needs at least two lengths")
    _check_width(ls)
    if t == 2:
        return ls[1] + ls[0] // 2 - 1, BranchTrace(Branch.TWO_COLOR_BASE)
    prefix_p = _p(ls[:-1])
    if ls[-1] >= prefix_p:
        return prefix_p, BranchTrace(Branch.GEN_EQUALITY, prefix_p=prefix_p)
    s = s_value(tl)
    return s, BranchTrace(Branch.MAIN_FORMULA, prefix_p=prefix_p, s=s)


def _p(sorted_lengths: Sequence[int]) -> int:
    # iterative form of p_value over growing prefixes
    value = sorted_lengths[1] + sorted_lengths[0] // 2 - 1
    for k in range(3, len(sorted_lengths) + 1):
        if sorted_lengths[k - 1] < value:
            weighted = sum(x << i for i, x in enumerate(sorted_lengths[:k]))
            value = (weighted - 2) // ((1 << k) - 2)
    return value


def p(lengths: LengthsLike) -> int:
    """Shorthand for ``p_value(lengths)[0]``."""
    return p_value(lengths)[0]


def r_value(length: int, t: int) -> int:
    """Symmetric closed form: l + floor((l - 2) / (2^t - 2))."""
    if length < 2 or t < 2:
        raise ValueError(f"need length >= 2 and t >= 2, got ({length}, {t})")
    if t >= 63:
        raise OverflowError("t too large for 64-bit arithmetic")
    return length + (length - 2) // ((1 << t) - 2)
