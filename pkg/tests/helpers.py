"""Independent brute-force oracles used only by the tests."""
import itertools

from hypothesis import strategies as st

from pathramsey.coloring import EdgeColoring, num_edges


def brute_longest(c: EdgeColoring, avoided: int) -> int:
    """Longest colour-avoiding path by plain exhaustive DFS (no pruning, no bitsets)."""
    m = c.matrix
    best = 1 if c.n else 0

    def grow(path, seen):
        nonlocal best
        best = max(best, len(path))
        for u in range(c.n):
            if u not in seen and m[path[-1]][u] != avoided:
                seen.add(u)
                path.append(u)
                grow(path, seen)
                path.pop()
                seen.discard(u)

    for v in range(c.n):
        grow([v], {v})
    return best


def brute_has_path_by_permutation(c: EdgeColoring, avoided: int, order: int) -> bool:
    m = c.matrix
    for seq in itertools.permutations(range(c.n), order):
        if all(m[a][b] != avoided for a, b in zip(seq, seq[1:])):
            return True
    return False


def brute_every_coloring_has_witness(n: int, per_color) -> bool:
    t = len(per_color)
    for edges in itertools.product(range(1, t + 1), repeat=num_edges(n)):
        c = EdgeColoring(n, t, edges)
        if not any(brute_longest(c, j) >= per_color[j - 1] for j in range(1, t + 1)):
            return False
    return True


@st.composite
def colorings(draw, max_n=8, max_t=4, min_n=1, min_t=1):
    n = draw(st.integers(min_n, max_n))
    t = draw(st.integers(min_t, max_t))
    edges = draw(st.lists(st.integers(1, t), min_size=num_edges(n), max_size=num_edges(n)))
    return EdgeColoring(n, t, tuple(edges))


def cycle_instance(targets, j, rnd):
    """K_s with a colour-j-free cycle on vertices 0..l_j-2 and every edge
    from the cycle to the rest coloured j.  Returns (colouring, cycle)."""
    from pathramsey.coloring import coloring_from_function
    from pathramsey.formula import p

    s, t, L = p(targets), len(targets), targets[j - 1] - 1
    nonj = [c for c in range(1, t + 1) if c != j]
    weights = [rnd.random() ** 3 + 1e-3 for _ in range(t)]

    def colour(u, v):
        if v < L:
            if v == u + 1 or (u == 0 and v == L - 1):
                return rnd.choice(nonj)
            return rnd.randrange(1, t + 1)
        if u < L:
            return j
        return rnd.choices(range(1, t + 1), weights)[0]

    return coloring_from_function(s, t, colour), list(range(L))


def extremal_plus_vertex(targets, rnd, flips=0):
    """Extremal K_{p-1} for sorted ``targets`` plus one random vertex, with
    optional random edge flips and a random relabelling."""
    from pathramsey.coloring import EdgeColoring, coloring_from_function
    from pathramsey.extremal import construct_extremal
    from pathramsey.formula import p

    n, t = p(targets), len(targets)
    base, _ = construct_extremal(targets)
    m = base.matrix
    edges = [m[u][v] if v < base.n else rnd.randrange(1, t + 1) for v in range(1, n) for u in range(v)]
    for _ in range(flips):
        edges[rnd.randrange(len(edges))] = rnd.randrange(1, t + 1)
    mm = EdgeColoring(n, t, tuple(edges)).matrix
    pi = list(range(n))
    rnd.shuffle(pi)
    return coloring_from_function(n, t, lambda u, v: mm[pi[u]][pi[v]])
