import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_longest, colorings
from pathramsey.coloring import ColorMergeMap, EdgeColoring, build_coloring, coloring_from_function, merge_colors
from pathramsey.errors import CapabilityError
from pathramsey.extremal import construct_extremal
from pathramsey.oracle import (
    Verdict,
    _dfs_search,
    chunk_bounds,
    decode_coloring,
    exhaustive_verify_upper,
    is_valid_lower_witness,
    longest_avoiding_path,
    random_coloring,
)


def _is_path(c, vertices, avoided):
    return len(set(vertices)) == len(vertices) and all(
        c.color(a, b) != avoided for a, b in zip(vertices, vertices[1:])
    )


def test_monochromatic_triangle():
    tri = build_coloring(3, 2, [1, 1, 1])
    assert longest_avoiding_path(tri, 1).order == 1
    res = longest_avoiding_path(tri, 2)
    assert res.order == 3 and _is_path(tri, res.vertices, 2)


def test_extremal_k8_orders():
    c, _ = construct_extremal((8, 8, 8))
    for j in (1, 2, 3):
        assert longest_avoiding_path(c, j).order <= 7


def test_single_vertex():
    c = EdgeColoring(1, 2, ())
    assert longest_avoiding_path(c, 1) == (1, (0,))


@given(colorings(max_n=7, max_t=3, min_n=1, min_t=1), st.data())
def test_dp_matches_brute_force(c, data):
    j = data.draw(st.integers(1, c.t))
    res = longest_avoiding_path(c, j)
    assert res.order == brute_longest(c, j)
    assert len(res.vertices) == res.order and _is_path(c, res.vertices, j)


@given(colorings(max_n=12, max_t=3, min_n=1, min_t=2), st.data())
def test_dfs_fallback_matches_dp(c, data):
    j = data.draw(st.integers(1, c.t))
    adj = c.avoiding_adjacency(j)
    dfs = _dfs_search(adj, c.n, c.n)
    assert dfs.order == longest_avoiding_path(c, j).order
    assert _is_path(c, dfs.vertices, j)


@given(colorings(max_n=10, max_t=3, min_n=2, min_t=2), st.randoms(use_true_random=False), st.data())
def test_relabelling_invariant(c, rnd, data):
    j = data.draw(st.integers(1, c.t))
    pi = list(range(c.n))
    rnd.shuffle(pi)
    relabelled = coloring_from_function(c.n, c.t, lambda u, v: c.color(pi[u], pi[v]))
    assert longest_avoiding_path(relabelled, j).order == longest_avoiding_path(c, j).order


@given(colorings(max_n=10, max_t=4, min_n=2, min_t=3))
def test_merged_class_no_longer_than_preimage(c):
    cmap = ColorMergeMap.merging(c.t, {c.t - 1, c.t})
    merged = merge_colors(c, cmap)
    cls = cmap.mapping[c.t - 1]
    for pre in cmap.preimage(cls):
        assert longest_avoiding_path(merged, cls).order <= longest_avoiding_path(c, pre).order


@given(colorings(max_n=11, max_t=3, min_n=2, min_t=2), st.data())
def test_stop_at_preserves_decision(c, data):
    j = data.draw(st.integers(1, c.t))
    k = data.draw(st.integers(1, c.n + 1))
    full = longest_avoiding_path(c, j).order
    early = longest_avoiding_path(c, j, stop_at=k)
    assert (early.order >= k) == (full >= k)
    assert _is_path(c, early.vertices, j) and len(early.vertices) == early.order


def test_dfs_range_and_capability():
    c = random_coloring(21, 3, 4)
    res = longest_avoiding_path(c, 1, stop_at=21)
    assert res.order == 21 and _is_path(c, res.vertices, 1)
    with pytest.raises(CapabilityError):
        longest_avoiding_path(random_coloring(25, 2, 0), 1)
    with pytest.raises(ValueError):
        longest_avoiding_path(random_coloring(4, 2, 0), 3)


def test_lower_witness_examples():
    c, _ = construct_extremal((8, 8, 8))
    assert is_valid_lower_witness(c, (8, 8, 8))
    for colour in (1, 2):
        assert not is_valid_lower_witness(build_coloring(2, 2, [colour]), (2, 2))
    assert not is_valid_lower_witness(build_coloring(5, 2, [1] * 10), (4, 4))


@pytest.mark.parametrize(
    "n, lengths, verdict, examined",
    [
        (4, (4, 4, 4), Verdict.ALL_CONTAIN_WITNESS, 3**6),
        (3, (4, 4, 4), Verdict.COUNTEREXAMPLE_FOUND, None),
        (5, (4, 4), Verdict.ALL_CONTAIN_WITNESS, 2**10),
        (4, (4, 4), Verdict.COUNTEREXAMPLE_FOUND, None),
    ],
)
def test_exhaustive_examples(n, lengths, verdict, examined):
    report = exhaustive_verify_upper(n, lengths)
    assert report.verdict is verdict
    if examined is not None:
        assert report.colorings_examined == examined
    else:
        assert is_valid_lower_witness(report.counterexample, lengths)
    doc = report.to_json()
    assert doc["verdict"] == verdict.value


def test_exhaustive_first_counterexample_is_lexicographic():
    report = exhaustive_verify_upper(4, (4, 4))
    idx = report.colorings_examined - 1
    assert decode_coloring(4, 2, idx) == report.counterexample
    for k in range(idx):
        assert not is_valid_lower_witness(decode_coloring(4, 2, k), (4, 4))


def test_symmetry_pruning():
    report = exhaustive_verify_upper(4, (4, 4, 4), prune_color_symmetry=True)
    assert report.color_symmetry_pruned
    assert report.colorings_examined == 3**5 and report.colorings_covered == 3**6
    # asymmetric targets: pruning is not sound and is left off
    report = exhaustive_verify_upper(5, (3, 5), prune_color_symmetry=True)
    assert not report.color_symmetry_pruned and report.verdict is Verdict.ALL_CONTAIN_WITNESS


def test_budget():
    with pytest.raises(CapabilityError, match="1073741824"):
        exhaustive_verify_upper(6, (5, 5, 5, 5), budget=1000)


def test_chunked_parallel_verdicts_agree():
    for n, lengths in [(5, (4, 4)), (4, (4, 4)), (4, (4, 4, 4))]:
        a = exhaustive_verify_upper(n, lengths)
        b = exhaustive_verify_upper(n, lengths, chunks=7)
        c = exhaustive_verify_upper(n, lengths, jobs=2)
        assert a.verdict is b.verdict is c.verdict


def test_chunk_bounds_cover():
    for total, chunks in [(10, 3), (1, 4), (729, 8)]:
        bounds = chunk_bounds(total, chunks)
        assert bounds[0][0] == 0 and bounds[-1][1] == total
        assert all(a[1] == b[0] for a, b in zip(bounds, bounds[1:]))


def test_random_coloring_determinism():
    assert random_coloring(2, 1, 123).edges == (1,)
    assert random_coloring(9, 4, 7) == random_coloring(9, 4, 7)
    assert random_coloring(9, 4, 7) != random_coloring(9, 4, 8)


def test_random_coloring_uniform():
    counts = np.zeros(3)
    for seed in range(1, 1001):
        counts += np.bincount(random_coloring(10, 3, seed).edges, minlength=4)[1:]
    total = counts.sum()
    sd = np.sqrt(total * (1 / 3) * (2 / 3))
    assert np.all(np.abs(counts - total / 3) < 5 * sd)
