"""Constructive upper bound: find a colour-avoiding path in any large colouring.

Given a t-colouring of K_n with n >= p(l_1, ..., l_t), :func:`extract`
returns a path of order l_j whose edges avoid colour j, for some j.  The
recursion follows the induction of the upper-bound argument: colour merging
when the largest target is slack, a two-colour base, a max-colour-degree
pivot with paths grown in G - x, and the cycle/rotation case analysis that
turns a slightly short path into a full witness.

Every recursive call re-checks numerically that its sub-instance is large
enough, and every returned witness is validated before it leaves a level.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coloring import (
    ColorMergeMap,
    EdgeColoring,
    WitnessPath,
    induced_subgraph,
    merge_colors,
    validate_witness,
)
from .errors import CapabilityError, InternalInvariantError, PreconditionError
from .formula import Branch, LengthsLike, TargetLengths, p, p_value
from .oracle import DFS_MAX_N, longest_avoiding_path


@dataclass
class ExtractionStats:
    """Trace and branch counters shared by all levels of one or more extractions."""

    trace: list = field(default_factory=list)
    counters: Counter = field(default_factory=Counter)
    record_trace: bool = True

    def log(self, **step):
        self.counters[step["branch"]] += 1
        if self.record_trace:
            step["step"] = len(self.trace)
            self.trace.append(step)


@dataclass
class ExtractionContext:
    coloring: EdgeColoring  # working graph, exactly s vertices
    targets: tuple[int, ...]  # target order per colour
    s: int
    depth: int
    stats: ExtractionStats

    @property
    def sorted_targets(self) -> TargetLengths:
        return TargetLengths.from_colors(self.targets)

    def target(self, color: int) -> int:
        return self.targets[color - 1]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InternalInvariantError(message)


def _contradiction(ctx: ExtractionContext, where: str):
    ctx.stats.counters["contradiction"] += 1
    raise InternalInvariantError(f"maximality contradiction reached in {where}")


def max_degree_pivot(c: EdgeColoring) -> tuple[int, int]:
    """(x, i) maximising the colour-i degree of x; ties go to the lowest x, then i."""
    if c.n < 2:
        raise ValueError("pivot needs at least two vertices")
    deg = c.color_degrees()
    best = (-1, 0, 0)
    for x in range(c.n):
        for i in range(c.t):
            if deg[x][i] > best[0]:
                best = (deg[x][i], x, i + 1)
    return best[1], best[2]


def alternate_extend(
    c: EdgeColoring,
    path: Sequence[int],
    spare_near: Sequence[int],
    spare_far: Sequence[int],
    cross_color: int,
    avoided: Optional[int] = None,
) -> list[int]:
    """Extend ``path`` by zig-zagging near, far, near, far, ... from its last vertex.

    The last vertex of ``path`` sits on the far side; every edge between the
    near side and the far side (tail included) must have ``cross_color``.
    Adds 2 * min(len(spare_near), len(spare_far)) vertices.
    """
    path = list(path)
    k = min(len(spare_near), len(spare_far))
    if k == 0:
        return path
    if avoided is not None and cross_color == avoided:
        raise PreconditionError("cross colour equals the avoided colour")
    used = set(path)
    near, far = list(spare_near[:k]), list(spare_far[:k])
    if used & set(near) or used & set(far) or set(near) & set(far):
        raise PreconditionError("spare vertices must be disjoint from the path and each other")
    m = c.matrix
    for a in near:
        for b in far + path[-1:]:
            if m[a][b] != cross_color:
                raise PreconditionError(f"edge {a}-{b} does not carry the cross colour")
    for a, b in zip(near, far):
        path += [a, b]
    return path


def _pick_rotation_extension(adj: list[set], n: int, target: int, tries: int, rng: random.Random):
    """Greedy path growth with Posa rotations; returns a path of order >= target or None."""
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    starts = order[: min(n, tries)]
    for attempt in range(tries):
        start = starts[attempt % len(starts)] if attempt < len(starts) else rng.randrange(n)
        path = [start]
        on = {start}
        rotations = 0
        flipped = False
        while len(path) < target:
            end = path[-1]
            free = [u for u in adj[end] if u not in on]
            if free:
                u = min(free, key=lambda w: (sum(1 for z in adj[w] if z not in on), rng.random()))
                path.append(u)
                on.add(u)
                flipped = False
                continue
            if rotations > 4 * n:
                break
            pivots = [k for k in range(len(path) - 2) if path[k] in adj[end]]
            rng.shuffle(pivots)
            useful = [k for k in pivots if any(u not in on for u in adj[path[k + 1]])]
            if useful or pivots:
                k = (useful or pivots)[0]
                path[k + 1:] = path[k + 1:][::-1]
                rotations += 1
                continue
            if flipped:
                break
            path.reverse()
            flipped = True
        if len(path) >= target:
            return path
    return None


def base_two_color(c: EdgeColoring, l1: int, l2: int, *, tries: int = 8, seed: int = 0) -> WitnessPath:
    """A path of order l1 avoiding class 1 or of order l2 avoiding class 2.

    Existence for n >= p(l1, l2) is the classical two-colour path Ramsey
    theorem.  Tries rotation-extension first, then the exact oracle.
    """
    if c.t != 2:
        raise ValueError("base_two_color needs a 2-class colouring")
    if c.n < p((l1, l2)):
        raise PreconditionError(f"n={c.n} is below p({l1}, {l2})")
    rng = random.Random(seed)
    m = c.matrix
    targets = {1: l1, 2: l2}
    for avoided in (1, 2):
        adj = [{u for u in range(c.n) if u != v and m[v][u] != avoided} for v in range(c.n)]
        path = _pick_rotation_extension(adj, c.n, targets[avoided], tries, rng)
        if path is not None:
            return WitnessPath(avoided, tuple(path[: targets[avoided]]))
    if c.n > DFS_MAX_N:
        raise CapabilityError(
            f"rotation-extension failed and n={c.n} exceeds the exact oracle bound {DFS_MAX_N}"
        )
    for avoided in (1, 2):
        res = longest_avoiding_path(c, avoided, stop_at=targets[avoided])
        if res.order >= targets[avoided]:
            return WitnessPath(avoided, res.vertices[: targets[avoided]])
    raise InternalInvariantError(f"no two-colour witness for ({l1}, {l2}) on n={c.n}")


class _Extractor:
    def __init__(self, stats: ExtractionStats, max_depth: int):
        self.stats = stats
        self.max_depth = max_depth

    def solve(self, c: EdgeColoring, targets: tuple[int, ...], depth: int) -> WitnessPath:
        _require(depth <= self.max_depth, f"recursion depth {depth} exceeds {self.max_depth}")
        _require(len(targets) == c.t and c.t >= 2, f"bad sub-instance t={c.t}, targets={targets}")
        _require(min(targets) >= 2, f"target below 2 in {targets}")
        tl = TargetLengths.from_colors(targets)
        s, bt = p_value(tl)
        _require(c.n >= s, f"sub-instance has {c.n} vertices, needs p={s} for {targets}")
        if c.n > s:
            c = induced_subgraph(c, range(s))[0]
        ctx = ExtractionContext(c, tuple(targets), s, depth, self.stats)
        ls = tl.lengths

        if c.t == 2:
            self.stats.log(branch="TwoColorBase", depth=depth, n=s, targets=list(targets))
            w = base_two_color(c, targets[0], targets[1])
        elif bt.branch is Branch.GEN_EQUALITY:
            # slot t joins slot t-1; the merged class keeps the smaller target
            self.stats.log(branch="GenEquality", depth=depth, n=s, targets=list(targets))
            live = {col: ctx.target(col) for col in tl.colors[:-1]}
            w = self._recurse(ctx, range(s), live, merge_into=tl.colors[-2])
        elif ls[0] <= 3:
            self.stats.log(branch="SmallFirst", depth=depth, n=s, targets=list(targets))
            live = {col: ctx.target(col) for col in tl.colors[:2]}
            w = self._recurse(ctx, range(s), live, merge_into=tl.colors[1])
        else:
            w = self._main(ctx)

        need = ctx.target(w.avoided_color)
        _require(validate_witness(c, w, need), f"invalid witness {w} at depth {depth}")
        return w.truncated(need)

    def _recurse(self, ctx, vertices, live: dict, merge_into: Optional[int]) -> WitnessPath:
        """Solve on the induced subgraph with targets ``live``; colours without a
        target are merged into ``merge_into``."""
        sub, labels = induced_subgraph(ctx.coloring, vertices)
        t = ctx.coloring.t
        dropped = [col for col in range(1, t + 1) if col not in live]
        if dropped:
            _require(merge_into in live, "merge partner must carry a target")
            cmap = ColorMergeMap.merging(t, dropped + [merge_into])
            sub = merge_colors(sub, cmap)
            back = {}
            for cls in range(1, cmap.merged_t + 1):
                kept = [col for col in cmap.preimage(cls) if col in live]
                _require(len(kept) == 1, "each class needs exactly one live colour")
                back[cls] = kept[0]
        else:
            back = {col: col for col in range(1, t + 1)}
        sub_targets = tuple(live[back[cls]] for cls in range(1, sub.t + 1))
        _require(
            sub.n >= p(sub_targets),
            f"recursion on {sub.n} vertices but p{sub_targets}={p(sub_targets)}",
        )
        w = self.solve(sub, sub_targets, ctx.depth + 1)
        return WitnessPath(back[w.avoided_color], tuple(labels[v] for v in w.vertices))

    def _main(self, ctx: ExtractionContext) -> WitnessPath:
        c, s = ctx.coloring, ctx.s
        ls = ctx.sorted_targets.lengths
        _require(ls[-1] <= s, f"largest target {ls[-1]} exceeds s={s}")
        x, i = max_degree_pivot(c)
        rest = [v for v in range(s) if v != x]
        reduced = {col: ctx.target(col) - (0 if col == i else 2) for col in range(1, c.t + 1)}
        if p(tuple(reduced[col] for col in range(1, c.t + 1))) <= s - 1:
            self.stats.log(branch="MainRemoval", depth=ctx.depth, n=s, targets=list(ctx.targets),
                           pivot=[x, i], recursion_targets=list(reduced.values()))
            w = self._recurse(ctx, rest, reduced, merge_into=None)
            if w.avoided_color == i:
                return w
        else:
            _require(ctx.target(i) == ls[-1] == s, "removal bound failed outside l_i = l_t = s")
            live = {col: ctx.target(col) - 2 for col in range(1, c.t + 1) if col != i}
            partner = max(live, key=lambda col: (live[col], -col))
            self.stats.log(branch="MainDropPivotColor", depth=ctx.depth, n=s, targets=list(ctx.targets),
                           pivot=[x, i], recursion_targets=list(live.values()))
            w = self._recurse(ctx, rest, live, merge_into=partner)
        return self.lemmaxdegree_resolve(ctx, list(w.vertices), x, i, w.avoided_color)

    def lemmaxdegree_resolve(self, ctx, P: list, x: int, i: int, j: int) -> WitnessPath:
        m = ctx.coloring.matrix
        _require(j != i, "short path must avoid a colour other than the pivot colour")
        _require(len(P) == ctx.target(j) - 2 and x not in P, "short path has the wrong shape")
        y, z = P[0], P[-1]
        yj, zj = m[x][y] == j, m[x][z] == j
        if not yj and not zj:
            self.stats.log(branch="MaxDegreeCloseCycle", depth=ctx.depth)
            return self.lemcycle_resolve(ctx, P + [x], j)
        if yj and zj:
            return self._maxdeg_case2(ctx, P, x, i, j)
        if yj:
            P = P[::-1]
        return self._maxdeg_case1(ctx, P, x, i, j)

    def _maxdeg_case1(self, ctx, P, x, i, j) -> WitnessPath:
        # xy avoids j, xz has colour j
        m = ctx.coloring.matrix
        y, z = P[0], P[-1]
        on = set(P)
        outside = [a for a in range(ctx.s) if a != x and a not in on]
        for a in outside:
            if m[x][a] == i:
                self.stats.log(branch="MaxDegreeCase1Extend", depth=ctx.depth)
                return WitnessPath(j, tuple(P[::-1] + [x, a]))
        for k in range(1, len(P)):
            w = P[k]
            if m[x][w] == i and m[P[k - 1]][z] != j:
                self.stats.log(branch="MaxDegreeCase1Rotate", depth=ctx.depth)
                return self.lemcycle_resolve(ctx, [x] + P[:k] + P[k:][::-1], j)
        for a in outside:
            if m[z][a] != j:
                self.stats.log(branch="MaxDegreeCase1Outside", depth=ctx.depth)
                return WitnessPath(j, tuple([x] + P + [a]))
        _contradiction(ctx, "lemmaxdegree case 1")

    def _maxdeg_case2(self, ctx, P, x, i, j) -> WitnessPath:
        # xy and xz both have colour j
        m = ctx.coloring.matrix
        z = P[-1]
        for k in range(1, len(P)):
            if m[x][P[k]] == i and m[z][P[k - 1]] != j:
                self.stats.log(branch="MaxDegreeCase2Rotate", depth=ctx.depth)
                rotated = P[:k] + P[k:][::-1]
                return self._maxdeg_case1(ctx, rotated[::-1], x, i, j)
        on = set(P)
        for a in range(ctx.s):
            if a != x and a not in on and m[x][a] == i and m[z][a] != j:
                self.stats.log(branch="MaxDegreeCase2Outside", depth=ctx.depth)
                return WitnessPath(j, tuple(P + [a, x]))
        _contradiction(ctx, "lemmaxdegree case 2")

    def lemcycle_resolve(self, ctx, C: list, j: int) -> WitnessPath:
        c, s = ctx.coloring, ctx.s
        m = c.matrix
        L = len(C)
        _require(L == ctx.target(j) - 1, f"cycle length {L} != l_j - 1")
        _require(all(m[a][b] != j for a, b in zip(C, C[1:] + C[:1])), "cycle uses colour j")
        in_c = set(C)
        Q = [v for v in range(s) if v not in in_c]
        q = len(Q)
        _require(q == s - L, "cycle and complement do not cover the working graph")

        for k, v in enumerate(C):
            for a in Q:
                if m[v][a] != j:
                    self.stats.log(branch="CycleExtend", depth=ctx.depth, cycle_length=L)
                    return WitnessPath(j, tuple(C[k + 1:] + C[:k + 1] + [a]))

        others = {col: ctx.target(col) for col in range(1, c.t + 1) if col != j}

        def colour_j_path(order: int, first, second) -> Optional[WitnessPath]:
            fits = [col for col in others if others[col] <= order]
            if not fits:
                return None
            jp = min(fits, key=lambda col: (others[col], col))
            zig = [v for pair in zip(first, second) for v in pair]
            if len(first) > len(second):
                zig.append(first[len(second)])
            _require(len(zig) >= others[jp], "zig-zag path shorter than claimed")
            return WitnessPath(jp, tuple(zig[: others[jp]]))

        if L == q:
            self.stats.log(branch="CycleHamilton", depth=ctx.depth, cycle_length=L)
            w = colour_j_path(2 * q, C, Q)
            _require(w is not None, "Hamilton path in colour j serves no other colour")
            return w

        if L < q:
            w = colour_j_path(2 * L + 1, Q, C)
            if w is not None:
                self.stats.log(branch="CycleCase1Direct", depth=ctx.depth, cycle_length=L)
                return w
            l1 = ctx.target(j)
            _require(all(v >= 2 * l1 for v in others.values()), "case 1 needs l_2 >= 2 l_1")
            sub = {j: l1}
            sub.update({col: v - 2 * (l1 - 1) for col, v in others.items()})
            self.stats.log(branch="CycleCase1Recurse", depth=ctx.depth, cycle_length=L,
                           recursion_targets=[sub[col] for col in sorted(sub)])
            w = self._recurse(ctx, Q, sub, merge_into=None)
            if w.avoided_color == j:
                return w
            used = set(w.vertices)
            unused = [a for a in Q if a not in used]
            _require(len(unused) >= l1 - 1, "too few spare vertices in Q")
            ext = alternate_extend(c, w.vertices, C, unused[: l1 - 1], j, w.avoided_color)
            return WitnessPath(w.avoided_color, tuple(ext))

        w = colour_j_path(2 * q + 1, C, Q)
        if w is not None:
            self.stats.log(branch="CycleCase2Direct", depth=ctx.depth, cycle_length=L)
            return w
        _require(all(v >= 2 * q + 2 for v in others.values()), "case 2 needs l_i >= 2q + 2")
        live = {col: v - 2 * q for col, v in others.items()}
        partner = max(live, key=lambda col: (live[col], -col))
        self.stats.log(branch="CycleCase2Recurse", depth=ctx.depth, cycle_length=L,
                       recursion_targets=list(live.values()))
        w = self._recurse(ctx, C, live, merge_into=partner)
        used = set(w.vertices)
        unused = [v for v in C if v not in used]
        _require(len(unused) >= q, "too few spare vertices in C")
        ext = alternate_extend(c, w.vertices, Q, unused[:q], j, w.avoided_color)
        return WitnessPath(w.avoided_color, tuple(ext))


def extract(c: EdgeColoring, lengths: LengthsLike, stats: Optional[ExtractionStats] = None) -> WitnessPath:
    """A path of order l_j avoiding colour j, for some j, in ``c``.

    ``lengths`` lists one target per colour.  Requires c.n >= p(lengths).
    Raises InternalInvariantError if a proof-contradiction branch is reached.
    """
    per_color = lengths.per_color() if isinstance(lengths, TargetLengths) else tuple(int(x) for x in lengths)
    if len(per_color) != c.t:
        raise PreconditionError(f"{len(per_color)} targets given for a {c.t}-colouring")
    if c.t < 2 or min(per_color) < 2:
        raise PreconditionError("need t >= 2 colours and every target >= 2")
    need = p(per_color)
    if c.n < need:
        raise PreconditionError(f"n={c.n} is below p{per_color}={need}")
    stats = stats if stats is not None else ExtractionStats()
    w = _Extractor(stats, max_depth=sum(per_color)).solve(c, per_color, 0)
    if not validate_witness(c, w, per_color[w.avoided_color - 1]):
        raise InternalInvariantError(f"extracted witness {w} fails validation")
    return w
