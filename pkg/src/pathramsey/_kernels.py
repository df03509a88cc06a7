"""Compiled inner loops for the exact path oracle and coloring enumeration."""
import numpy as np
from numba import njit


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def longest_path_dp(adj, n, stop_at, dp):
    """Subset DP: bit v of dp[mask] is set iff some path visits exactly ``mask``
    and ends at v.  Returns (order, mask, end) of the longest path found; stops
    early once a path of order >= stop_at is seen."""
    for v in range(n):
        dp[1 << v] = 1 << v
    best, best_mask, best_end = 1, 1, 0
    if stop_at <= 1:
        return best, best_mask, best_end
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if ends == 0:
            continue
        c = _popcount(mask)
        if c > best:
            best = c
            best_mask = mask
            low = ends & -ends
            e = 0
            while (low >> e) != 1:
                e += 1
            best_end = e
            if best >= stop_at:
                return best, best_mask, best_end
        reach = 0
        for v in range(n):
            if (ends >> v) & 1:
                reach |= adj[v]
        reach &= ~mask
        while reach:
            lb = reach & -reach
            reach ^= lb
            dp[mask | lb] |= lb
    return best, best_mask, best_end


@njit(cache=True)
def _has_avoiding_path(adj, n, order, dp):
    dp[:] = 0
    best, _, _ = longest_path_dp(adj, n, order, dp)
    return best >= order


@njit(cache=True)
def scan_colorings(n, t, targets, eu, ev, lo, hi):
    """Scan colourings with lexicographic indices in [lo, hi).

    Digit k (most significant first) of the base-t index is colour-1 of edge k.
    Returns (index of first colouring with no colour-j-avoiding path of order
    targets[j-1] for every j, or -1; number of colourings examined).
    """
    m = eu.shape[0]
    digits = np.zeros(m, np.int64)
    x = lo
    for k in range(m - 1, -1, -1):
        digits[k] = x % t
        x //= t
    dp = np.zeros(1 << n, np.int64)
    adj = np.zeros(n, np.int64)
    for idx in range(lo, hi):
        counter = True
        for j in range(t):
            adj[:] = 0
            for k in range(m):
                if digits[k] != j:
                    adj[eu[k]] |= 1 << ev[k]
                    adj[ev[k]] |= 1 << eu[k]
            if _has_avoiding_path(adj, n, targets[j], dp):
                counter = False
                break
        if counter:
            return idx, idx - lo + 1
        k = m - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < t:
                break
            digits[k] = 0
            k -= 1
    return -1, hi - lo
