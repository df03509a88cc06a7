import itertools

import pytest

from pathramsey.errors import PreconditionError
from pathramsey.extremal import (
    PartitionBranch,
    block_of,
    constraint_rows,
    construct_extremal,
    partition_sizes,
    structural_bound,
)
from pathramsey.formula import p
from pathramsey.oracle import is_valid_lower_witness, longest_avoiding_path


def test_partition_examples():
    spec = partition_sizes((8, 8, 8))
    assert (spec.sizes, spec.s, spec.S) == ((5, 2, 1), 9, 1)
    spec = partition_sizes((16, 16, 16, 16))
    assert (spec.sizes, spec.s, spec.S) == ((9, 4, 2, 1), 17, 3)


def test_partition_rows_by_hand():
    # (8,8,8): 2*2+2*1+1 = 7 <= 7, 5+2 = 7 <= 7, 5+2 = 7 = l3-1, sum 8 = s-1
    rows = {r[0]: r[1:] for r in constraint_rows((8, 8, 8), (5, 2, 1), 9)}
    assert rows["row1"] == (7, "<=", 7, True)
    assert rows["row2"] == (7, "<=", 7, True)
    assert rows["row3"] == (7, "==", 7, True)
    assert rows["sum"] == (8, "==", 8, True)
    rows = {r[0]: r[1:] for r in constraint_rows((16,) * 4, (9, 4, 2, 1), 17)}
    assert rows["row1"][:3] == (15, "<=", 15)
    assert rows["row2"][:3] == (15, "<=", 15)
    assert rows["row3"][:3] == (15, "==", 15)
    assert rows["row4"][:3] == (15, "==", 15)
    assert rows["sum"][:3] == (16, "==", 16)


@pytest.mark.parametrize("k", range(2, 12))
def test_two_color_blocks(k):
    c, spec = construct_extremal((2 * k, 2 * k))
    assert spec.branch is PartitionBranch.TWO_COLOR_BASE
    assert spec.sizes == (2 * k - 1, k - 1)


@pytest.mark.parametrize("bad", [(8, 8), (3, 4, 5), (2, 2, 3)])
def test_partition_precondition(bad):
    with pytest.raises(PreconditionError):
        partition_sizes(bad)


def test_construct_888_spot_check():
    c, spec = construct_extremal((8, 8, 8))
    assert c.n == 8 and spec.sizes == (5, 2, 1)
    assert all(c.color(u, v) == 1 for u in range(5) for v in range(u + 1, 5))
    assert all(c.color(7, u) == 3 for u in range(7))
    assert c.color(5, 6) == 2 and c.color(0, 5) == 2


def test_construct_small_cases():
    c, spec = construct_extremal((2, 2))
    assert c.n == 1 and c.edges == ()
    c, spec = construct_extremal((3, 4, 5))
    assert spec.branch is PartitionBranch.RECURSE_FEWER_COLORS
    assert c.n == 3 and spec.sizes == (3, 0, 0)
    assert c.t == 3 and set(c.edges) == {1}
    assert is_valid_lower_witness(c, (3, 4, 5))


def test_restrict_branch_never_needed():
    # l_t <= s whenever l_t < p(prefix), so the restriction route stays dormant
    for t, top in ((3, 25), (4, 14), (5, 9)):
        for tg in itertools.combinations_with_replacement(range(2, top), t):
            assert construct_extremal(tg)[1].branch is not PartitionBranch.GEN_EQUALITY_RESTRICT


def test_block_of():
    spec = partition_sizes((8, 8, 8))
    assert [block_of(spec, v) for v in (0, 5, 7)] == [1, 2, 3]
    with pytest.raises(ValueError):
        block_of(spec, 8)


def test_unsorted_input_relabels_colours():
    c, spec = construct_extremal((8, 4, 6))
    assert is_valid_lower_witness(c, (8, 4, 6))
    assert c.n == p((4, 6, 8)) - 1


def _grid(lmax3=12, lmax4=10):
    yield from itertools.combinations_with_replacement(range(2, lmax3 + 1), 3)
    yield from itertools.combinations_with_replacement(range(2, lmax4 + 1), 4)
    yield from itertools.combinations_with_replacement(range(2, 8), 5)


def test_color_rule_and_arithmetic():
    for tg in _grid():
        c, spec = construct_extremal(tg)
        assert c.n == spec.s - 1 == p(tg) - 1
        assert min(spec.sizes) >= 0
        blocks = [block_of(spec, v) for v in range(c.n)]
        for u in range(c.n):
            for v in range(u + 1, c.n):
                assert c.color(u, v) == max(blocks[u], blocks[v])
        if spec.branch is PartitionBranch.EXPLICIT:
            a = spec.sizes
            assert a[0] >= 1
            assert a[0] + a[1] + spec.S == spec.s - 1
            assert all(row[-1] for row in constraint_rows(tg, a, spec.s))


def test_structural_bound_on_explicit_constructions():
    for tg in itertools.combinations_with_replacement(range(4, 13), 3):
        c, spec = construct_extremal(tg)
        if spec.branch is not PartitionBranch.EXPLICIT:
            continue
        for j in range(1, 4):
            longest = longest_avoiding_path(c, j).order
            assert longest <= structural_bound(spec, j) <= tg[j - 1] - 1
