"""Exact ground truth: longest colour-avoiding paths and exhaustive search.

The longest-path oracle is a subset dynamic program over (vertex set,
endpoint) states for n <= DP_MAX_N, with a depth-first branch-and-bound
fallback up to DFS_MAX_N.  Larger inputs raise CapabilityError.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .coloring import EdgeColoring, num_edges
from .errors import CapabilityError
from .formula import LengthsLike, TargetLengths, as_targets

DP_MAX_N = 20
DFS_MAX_N = 24
DEFAULT_BUDGET = 10**8


class PathResult(NamedTuple):
    order: int
    vertices: tuple[int, ...]


def _reconstruct(dp, adj, mask: int, end: int) -> list[int]:
    path = [end]
    while mask & (mask - 1):
        prev = mask ^ (1 << end)
        ends = int(dp[prev])
        cand = ends & adj[end]
        u = (cand & -cand).bit_length() - 1
        path.append(u)
        mask, end = prev, u
    return path


def _dp_search(adj: list[int], n: int, stop_at: int) -> PathResult:
    dp = np.zeros(1 << n, dtype=np.int64)
    order, mask, end = _kernels.longest_path_dp(np.asarray(adj, dtype=np.int64), n, stop_at, dp)
    return PathResult(int(order), tuple(_reconstruct(dp, adj, int(mask), int(end))))


def _dfs_search(adj: list[int], n: int, stop_at: int) -> PathResult:
    best: list[int] = [0]
    best_path: list[int] = []

    def reachable(start: int, visited: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            nxt &= ~visited & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def grow(path: list[int], visited: int) -> bool:
        if len(path) > best[0]:
            best[0] = len(path)
            best_path[:] = path
            if best[0] >= stop_at:
                return True
        end = path[-1]
        bound = len(path) - 1 + bin(reachable(end, visited & ~(1 << end))).count("1")
        if bound <= best[0]:
            return False
        nb = adj[end] & ~visited
        while nb:
            low = nb & -nb
            nb ^= low
            u = low.bit_length() - 1
            path.append(u)
            if grow(path, visited | low):
                return True
            path.pop()
        return False

    for v in range(n):
        if grow([v], 1 << v) or best[0] == n:
            break
    return PathResult(best[0], tuple(best_path))


def longest_avoiding_path(c: EdgeColoring, avoided: int, stop_at: Optional[int] = None) -> PathResult:
    """Exact maximum order of a path using no edge of colour ``avoided``.

    With ``stop_at`` the search may return as soon as a path of that order is
    found; the result then has order >= stop_at.
    """
    if not 1 <= avoided <= c.t:
        raise ValueError(f"avoided colour {avoided} outside 1..{c.t}")
    n = c.n
    if n > DFS_MAX_N:
        raise CapabilityError(f"exact longest path limited to n <= {DFS_MAX_N}, got n={n}")
    limit = n if stop_at is None else min(int(stop_at), n)
    adj = c.avoiding_adjacency(avoided)
    if n > DP_MAX_N:
        return _dfs_search(adj, n, limit)
    return _dp_search(adj, n, limit)


def is_valid_lower_witness(c: EdgeColoring, lengths: LengthsLike) -> bool:
    """True iff, for every colour j, no path of order l_j avoids colour j.

    ``lengths`` lists targets by colour (or is a TargetLengths).
    """
    per_color = as_targets(lengths).per_color()
    if len(per_color) != c.t:
        raise ValueError(f"{len(per_color)} targets for a {c.t}-colouring")
    for j, target in enumerate(per_color, start=1):
        if longest_avoiding_path(c, j, stop_at=target).order >= target:
            return False
    return True


def random_coloring(n: int, t: int, seed) -> EdgeColoring:
    rng = np.random.default_rng(seed)
    edges = rng.integers(1, t + 1, size=num_edges(n))
    return EdgeColoring(n, t, tuple(int(e) for e in edges))


class Verdict(str, enum.Enum):
    ALL_CONTAIN_WITNESS = "AllColoringsContainWitness"
    COUNTEREXAMPLE_FOUND = "CounterexampleFound"


@dataclass
class SearchReport:
    n: int
    t: int
    targets: tuple[int, ...]
    verdict: Verdict
    counterexample: Optional[EdgeColoring] = None
    colorings_examined: int = 0
    colorings_covered: int = 0
    elapsed: float = 0.0
    color_symmetry_pruned: bool = False
    chunks: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "targets": list(self.targets),
            "verdict": self.verdict.value,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "colorings_examined": self.colorings_examined,
            "colorings_covered": self.colorings_covered,
            "elapsed": self.elapsed,
            "color_symmetry_pruned": self.color_symmetry_pruned,
        }


def decode_coloring(n: int, t: int, index: int) -> EdgeColoring:
    """Colouring with the given lexicographic index (edge 0 most significant)."""
    m = num_edges(n)
    digits = [0] * m
    for k in range(m - 1, -1, -1):
        index, digits[k] = divmod(index, t)
    return EdgeColoring(n, t, tuple(d + 1 for d in digits))


def chunk_bounds(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    out, lo = [], 0
    for k in range(chunks):
        hi = lo + step + (1 if k < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def _scan_chunk(n: int, targets: tuple[int, ...], lo: int, hi: int) -> tuple[int, int]:
    t = len(targets)
    eu = np.array([u for v in range(1, n) for u in range(v)], dtype=np.int64)
    ev = np.array([v for v in range(1, n) for u in range(v)], dtype=np.int64)
    found, examined = _kernels.scan_colorings(
        n, t, np.asarray(targets, dtype=np.int64), eu, ev, lo, hi
    )
    return int(found), int(examined)


def exhaustive_verify_upper(
    n: int,
    lengths: LengthsLike,
    *,
    budget: int = DEFAULT_BUDGET,
    prune_color_symmetry: bool = False,
    jobs: int = 1,
    chunks: Optional[int] = None,
) -> SearchReport:
    """Decide whether every t-colouring of K_n has a colour-j-avoiding P_{l_j} for some j.

    ``lengths`` lists targets by colour.
    """
    tl = as_targets(lengths)
    targets = tl.per_color()
    t = tl.t
    if n < 1:
        raise ValueError("n must be >= 1")
    m = num_edges(n)
    total = t**m
    pruned = bool(prune_color_symmetry and len(set(targets)) == 1 and m >= 1)
    space = total // t if pruned else total
    if space > budget:
        raise CapabilityError(f"{space} colourings required, budget is {budget}")
    if n > DP_MAX_N:
        raise CapabilityError(f"exhaustive search limited to n <= {DP_MAX_N}")

    start = time.perf_counter()
    bounds = chunk_bounds(space, chunks or max(1, 4 * jobs))
    found: list[int] = []
    examined = 0
    if jobs <= 1:
        for lo, hi in bounds:
            idx, count = _scan_chunk(n, targets, lo, hi)
            examined += count
            if idx >= 0:
                found.append(idx)
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending = {pool.submit(_scan_chunk, n, targets, lo, hi) for lo, hi in bounds}
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    idx, count = fut.result()
                    examined += count
                    if idx >= 0:
                        found.append(idx)
                if found:
                    for fut in pending:
                        fut.cancel()
                    break
    elapsed = time.perf_counter() - start

    report = SearchReport(
        n=n,
        t=t,
        targets=targets,
        verdict=Verdict.ALL_CONTAIN_WITNESS,
        colorings_examined=examined,
        colorings_covered=examined * t if pruned else examined,
        elapsed=elapsed,
        color_symmetry_pruned=pruned,
        chunks=bounds,
    )
    if found:
        witness = decode_coloring(n, t, min(found))
        if not is_valid_lower_witness(witness, TargetLengths.from_colors(targets)):
            raise AssertionError("enumeration reported a counterexample the oracle rejects")
        report.verdict = Verdict.COUNTEREXAMPLE_FOUND
        report.counterexample = witness
    return report
