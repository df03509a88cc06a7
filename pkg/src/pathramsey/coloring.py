"""Edge colourings of complete graphs and colour-avoiding path witnesses.

Edges are stored in canonical order: for v = 1..n-1, for u = 0..v-1, the
colour of {u, v}.  Colours are 1-based.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


def edge_index(u: int, v: int) -> int:
    """Position of edge {u, v} in the canonical edge list."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class EdgeColoring:
    n: int
    t: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a colouring needs at least one vertex")
        if self.t < 1:
            raise ValueError("a colouring needs at least one colour")
        edges = tuple(int(e) for e in self.edges)
        if len(edges) != num_edges(self.n):
            raise ValueError(
                f"expected {num_edges(self.n)} edge colours for n={self.n}, got {len(edges)}"
            )
        bad = [e for e in edges if not 1 <= e <= self.t]
        if bad:
            raise ValueError(f"colour {bad[0]} out of range 1..{self.t}")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def matrix(self) -> list[list[int]]:
        """Symmetric n x n colour table; diagonal entries are 0."""
        m = [[0] * self.n for _ in range(self.n)]
        k = 0
        for v in range(1, self.n):
            row = m[v]
            for u in range(v):
                c = self.edges[k]
                row[u] = c
                m[u][v] = c
                k += 1
        return m

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no loop edges in a complete graph")
        return self.edges[edge_index(u, v)]

    def avoiding_adjacency(self, avoided: int) -> list[int]:
        """Bitmask adjacency of the graph of edges whose colour is not ``avoided``."""
        adj = [0] * self.n
        k = 0
        for v in range(1, self.n):
            for u in range(v):
                if self.edges[k] != avoided:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                k += 1
        return adj

    def color_degrees(self) -> list[list[int]]:
        """``deg[x][c-1]`` is the number of colour-c edges at vertex x."""
        deg = [[0] * self.t for _ in range(self.n)]
        k = 0
        for v in range(1, self.n):
            for u in range(v):
                c = self.edges[k] - 1
                deg[u][c] += 1
                deg[v][c] += 1
                k += 1
        return deg

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "edges": list(self.edges)}

    @classmethod
    def from_json(cls, doc: Mapping) -> "EdgeColoring":
        try:
            return cls(int(doc["n"]), int(doc["t"]), tuple(doc["edges"]))
        except KeyError as exc:
            raise ValueError(f"colouring document lacks field {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "EdgeColoring":
        return cls.from_json(json.loads(text))


def build_coloring(n: int, t: int, edge_colors: Sequence[int]) -> EdgeColoring:
    return EdgeColoring(n, t, tuple(edge_colors))


def coloring_from_function(n: int, t: int, color_of) -> EdgeColoring:
    """Build from a callable ``color_of(u, v)`` with u < v."""
    return EdgeColoring(n, t, tuple(color_of(u, v) for v in range(1, n) for u in range(v)))


@dataclass(frozen=True)
class WitnessPath:
    avoided_color: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def truncated(self, order: int) -> "WitnessPath":
        return WitnessPath(self.avoided_color, self.vertices[:order])

    def to_json(self) -> dict:
        return {"avoided_color": self.avoided_color, "vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, doc: Mapping) -> "WitnessPath":
        return cls(int(doc["avoided_color"]), tuple(doc["vertices"]))


def validate_witness(c: EdgeColoring, w: WitnessPath, required_order: int) -> bool:
    vs = w.vertices
    if len(vs) < required_order:
        return False
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < c.n for v in vs):
        return False
    m = c.matrix
    return all(m[a][b] != w.avoided_color for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class ColorMergeMap:
    """Surjection of colours 1..t onto classes 1..t'.

    Classes are numbered in order of their least colour, so unmerged colours
    keep their relative order.
    """

    mapping: tuple[int, ...]  # mapping[c-1] = class of colour c

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if not mapping:
            raise ValueError("empty merge map")
        classes = set(mapping)
        if classes != set(range(1, len(classes) + 1)):
            raise ValueError(f"merge map must be onto 1..t', got {mapping}")
        firsts = [mapping.index(k) for k in range(1, len(classes) + 1)]
        if firsts != sorted(firsts):
            raise ValueError("classes must be numbered in order of their least colour")

    @property
    def t(self) -> int:
        return len(self.mapping)

    @property
    def merged_t(self) -> int:
        return max(self.mapping)

    def preimage(self, cls: int) -> tuple[int, ...]:
        return tuple(c + 1 for c, k in enumerate(self.mapping) if k == cls)

    @classmethod
    def merging(cls, t: int, group: Iterable[int]) -> "ColorMergeMap":
        """Merge the colours in ``group``; classes are numbered by their least colour."""
        group = set(group)
        if not group or any(not 1 <= g <= t for g in group):
            raise ValueError(f"invalid merge group {sorted(group)} for t={t}")
        rep = min(group)
        heads = [c for c in range(1, t + 1) if c not in group or c == rep]
        label = {c: k + 1 for k, c in enumerate(heads)}
        return cls(tuple(label[rep] if c in group else label[c] for c in range(1, t + 1)))


def merge_colors(c: EdgeColoring, cmap: ColorMergeMap) -> EdgeColoring:
    if cmap.t != c.t:
        raise ValueError(f"merge map is for t={cmap.t}, colouring has t={c.t}")
    m = cmap.mapping
    return EdgeColoring(c.n, cmap.merged_t, tuple(m[e - 1] for e in c.edges))


def induced_subgraph(c: EdgeColoring, vertices: Iterable[int]) -> tuple[EdgeColoring, tuple[int, ...]]:
    """Restrict to ``vertices`` (relabelled 0..k-1 in the given order).

    Returns the sub-colouring and the back-map from new to original labels.
    """
    labels = tuple(int(v) for v in vertices)
    if not labels:
        raise ValueError("vertex subset must be nonempty")
    if any(not 0 <= v < c.n for v in labels):
        raise ValueError(f"vertex out of range 0..{c.n - 1}")
    if len(set(labels)) != len(labels):
        raise ValueError("repeated vertex in subset")
    m = c.matrix
    edges = tuple(m[labels[u]][labels[v]] for v in range(1, len(labels)) for u in range(v))
    return EdgeColoring(len(labels), c.t, edges), labels
