"""Finite simple graphs with printable vertex labels.

A :class:`Graph` is an immutable pair of a label tuple and a dense symmetric
boolean adjacency matrix.  Dense storage keeps every desk-scale family (up
to a few thousand vertices) cheap to build with numpy and lets the search
kernels read adjacency directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable finite simple graph.

    Parameters
    ----------
    labels:
        Unique printable vertex labels, in vertex-index order.
    adjacency:
        Square array-like; must be symmetric with a zero diagonal.
    """

    def __init__(self, labels: Sequence[str], adjacency) -> None:
        labels = tuple(str(x) for x in labels)
        adj = np.array(adjacency, dtype=bool, copy=True)
        n = len(labels)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} labels")
        if len(set(labels)) != n:
            raise ValueError("vertex labels must be unique")
        if any(not lab or any(ch.isspace() for ch in lab) for lab in labels):
            raise ValueError("vertex labels must be non-empty and free of whitespace")
        if n and adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        self.labels = labels
        self.adj = adj

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        n = len(labels)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(labels, adj)

    @classmethod
    def from_relation(cls, labels: Sequence[str], related) -> "Graph":
        """Build a graph from a symmetric predicate on vertex indices."""
        n = len(labels)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in combinations(range(n), 2):
            if related(u, v):
                adj[u, v] = adj[v, u] = True
        return cls(labels, adj)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.labels, self.adj.tobytes()))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def num_edges(self) -> int:
        return int(self.adj.sum()) // 2

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def adj_u8(self) -> np.ndarray:
        a = np.ascontiguousarray(self.adj, dtype=np.uint8)
        a.setflags(write=False)
        return a

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adj[v]).tolist()

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def complement(self) -> "Graph":
        comp = ~self.adj
        np.fill_diagonal(comp, False)
        return Graph(self.labels, comp)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        idx = list(vertices)
        return Graph([self.labels[i] for i in idx], self.adj[np.ix_(idx, idx)])

    def is_independent(self, vertices: Iterable[int]) -> bool:
        idx = list(vertices)
        return not self.adj[np.ix_(idx, idx)].any()

    def is_clique(self, vertices: Iterable[int]) -> bool:
        idx = list(vertices)
        sub = self.adj[np.ix_(idx, idx)]
        return bool(sub.sum() == len(idx) * (len(idx) - 1))

    # -- DIMACS ---------------------------------------------------------

    def to_dimacs(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines.extend(f"c {line}" for line in comment.splitlines())
        lines.append(f"p edge {self.n} {self.num_edges}")
        lines.extend(f"c label {i + 1} {lab}" for i, lab in enumerate(self.labels))
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dimacs(cls, text: str) -> "Graph":
        n = None
        declared = None
        labels: dict[int, str] = {}
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "c":
                if len(parts) >= 4 and parts[1] == "label":
                    labels[int(parts[2])] = parts[3]
                continue
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ValueError(f"line {lineno}: malformed problem line {raw!r}")
                n, declared = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None:
                    raise ValueError(f"line {lineno}: edge before problem line")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ValueError(f"line {lineno}: vertex id out of range")
                edges.append((u - 1, v - 1))
            else:
                raise ValueError(f"line {lineno}: unknown line type {parts[0]!r}")
        if n is None:
            raise ValueError("missing problem line")
        names = [labels.get(i + 1, str(i + 1)) for i in range(n)]
        g = cls.from_edges(names, edges)
        if g.num_edges != declared:
            raise ValueError(f"problem line declares {declared} edges, found {g.num_edges}")
        return g


@dataclass(frozen=True)
class Coloring:
    """Total vertex coloring; ``colors[v]`` is a small natural number."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ValueError("colors must be natural numbers")

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset[int]]:
        """Color classes, ordered by smallest member."""
        by_color: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            by_color.setdefault(c, set()).add(v)
        return sorted((frozenset(s) for s in by_color.values()), key=min)

    def same_partition(self, other: "Coloring") -> bool:
        """True iff the colorings agree up to a bijection of color ids."""
        return set(self.classes()) == set(other.classes())

    def to_json(self, graph: Graph) -> str:
        if len(self) != graph.n:
            raise ValueError("coloring does not match the graph")
        payload = {
            "palette_size": self.palette_size,
            "colors": {lab: c for lab, c in zip(graph.labels, self.colors)},
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str, graph: Graph) -> "Coloring":
        data = json.loads(text)
        colors = data["colors"]
        missing = [lab for lab in graph.labels if lab not in colors]
        if missing:
            raise ValueError(f"coloring not total; missing {missing[:5]}")
        col = cls(tuple(colors[lab] for lab in graph.labels))
        if "palette_size" in data and data["palette_size"] != col.palette_size:
            raise ValueError("palette_size does not match the colors")
        return col


def complete_graph(n: int) -> Graph:
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph([str(i + 1) for i in range(n)], adj)


def empty_graph(n: int) -> Graph:
    return Graph([str(i + 1) for i in range(n)], np.zeros((n, n), dtype=bool))


def path_graph(n: int) -> Graph:
    return Graph.from_edges([str(i + 1) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([str(i + 1) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def triangle_strip(t: int) -> Graph:
    """``t`` triangles glued edge to edge: vertices 0..t+1, triangles (i, i+1, i+2)."""
    n = t + 2
    edges = set()
    for i in range(t):
        edges.update({(i, i + 1), (i + 1, i + 2), (i, i + 2)})
    return Graph.from_edges([str(i) for i in range(n)], sorted(edges))
