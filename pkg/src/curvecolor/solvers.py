"""Exact solvers and enumerators on :class:`~curvecolor.graph.Graph`.

Every search takes an explicit node budget and raises
:class:`BudgetExhausted` instead of returning a truncated answer.
"""

from __future__ import annotations

import sys
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _backend
from .graph import Coloring, Graph

DEFAULT_BUDGET = 10**8


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before finishing."""

    def __init__(self, operation: str, budget: int):
        super().__init__(f"{operation}: budget exhausted after {budget} nodes")
        self.operation = operation
        self.budget = budget


class PropagationFailure(Exception):
    """Unique-coloring propagation could not certify a coloring.

    ``obstruction`` is one of ``"impure"``, ``"disconnected"`` or
    ``"contradiction"``; ``witness`` names the offending clique(s).
    """

    def __init__(self, obstruction: str, witness, message: str):
        super().__init__(message)
        self.obstruction = obstruction
        self.witness = witness


@contextmanager
def _deep_recursion(depth: int):
    # the pure-Python kernels recurse once per vertex
    old = sys.getrecursionlimit()
    if depth + 200 > old:
        sys.setrecursionlimit(depth + 200)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _check(status: int, operation: str, budget: int) -> None:
    if status != 0:
        raise BudgetExhausted(operation, budget)


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """Size of a maximum clique, with a witness (sorted vertex indices)."""
    if g.n == 0:
        return 0, []
    with _deep_recursion(g.n):
        status, clique, _ = _backend.kernels.max_clique_search(g.adj_u8, budget)
    _check(status, "clique_number", budget)
    assert g.is_clique(clique)
    return len(clique), clique


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with a proper witness using exactly that many colors.

    DSATUR branch and bound; a maximum clique is pre-colored to fix the
    symmetry and supply the lower bound.
    """
    if g.n == 0:
        return 0, Coloring(())
    omega, clique = clique_number(g, budget)
    with _deep_recursion(g.n):
        status, k, colors, _ = _backend.kernels.dsatur_search(g.adj_u8, clique, omega, budget)
    _check(status, "chromatic_number", budget)
    witness = Coloring(colors)
    assert is_proper(g, witness) and witness.palette_size == k
    return k, witness


def maximal_cliques(g: Graph, budget: int = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """All maximal cliques, sorted by their sorted member tuples."""
    if g.n == 0:
        return [frozenset()]
    with _deep_recursion(g.n):
        status, cliques, _ = _backend.kernels.maximal_cliques(g.adj_u8, budget)
    _check(status, "maximal_cliques", budget)
    return [frozenset(c) for c in sorted(cliques)]


def maximal_independent_sets(g: Graph, budget: int = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """All maximal independent sets (Bron-Kerbosch on the complement)."""
    return maximal_cliques(g.complement(), budget)


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge of ``g`` is monochromatic."""
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for {g.n} vertices")
    col = np.asarray(c.colors)
    us, vs = np.nonzero(np.triu(g.adj, 1))
    return not bool(np.any(col[us] == col[vs]))


def _branch_order(g: Graph) -> list[int]:
    """Order vertices so each has as many earlier neighbours as possible."""
    n = g.n
    placed = np.zeros(n, dtype=bool)
    back = np.zeros(n, dtype=np.int64)
    deg = g.degrees
    order = []
    for _ in range(n):
        free = np.flatnonzero(~placed)
        key = back[free] * (n + 1) + deg[free]
        v = int(free[np.argmax(key)])
        order.append(v)
        placed[v] = True
        back += g.adj[v]
    return order


def homomorphisms(g: Graph, h: Graph, *, injective: bool = False, limit: int = -1,
                  budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Enumerate homomorphisms ``g -> h`` as image tuples (``image[v]``)."""
    with _deep_recursion(g.n):
        status, maps, _ = _backend.kernels.homomorphism_search(
            g.adj_u8, h.adj_u8, _branch_order(g), injective, False, limit, budget)
    _check(status, "homomorphisms", budget)
    return [tuple(m) for m in maps]


def endomorphisms(g: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    return homomorphisms(g, g, budget=budget)


def is_automorphism(g: Graph, image) -> bool:
    if sorted(image) != list(range(g.n)):
        return False
    perm = np.asarray(image)
    return np.array_equal(g.adj[np.ix_(perm, perm)], g.adj)


def is_core(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every endomorphism of ``g`` is an automorphism."""
    return all(is_automorphism(g, f) for f in endomorphisms(g, budget))


def find_isomorphism(g1: Graph, g2: Graph, budget: int = DEFAULT_BUDGET) -> dict[int, int] | None:
    """A vertex bijection preserving adjacency both ways, or ``None``."""
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(g1.degrees.tolist()) != sorted(g2.degrees.tolist()):
        return None
    with _deep_recursion(g1.n):
        status, maps, _ = _backend.kernels.homomorphism_search(
            g1.adj_u8, g2.adj_u8, _branch_order(g1), True, True, 1, budget)
    _check(status, "find_isomorphism", budget)
    if not maps:
        return None
    mapping = dict(enumerate(maps[0]))
    for u, v in combinations(range(g1.n), 2):
        if g1.adj[u, v] != g2.adj[mapping[u], mapping[v]]:
            raise AssertionError("isomorphism search returned an invalid map")
    return mapping


@dataclass(frozen=True)
class MaxCliqueGraph:
    """Maximal cliques of a parent graph; adjacent when they share all but one vertex."""

    cliques: tuple[frozenset[int], ...]
    adjacency: frozenset[tuple[int, int]]

    def neighbors(self, i: int) -> list[int]:
        return sorted({b for a, b in self.adjacency if a == i} | {a for a, b in self.adjacency if b == i})

    def is_connected(self) -> bool:
        if not self.cliques:
            return True
        return len(_bfs(self, 0)) == len(self.cliques)


def _bfs(k: MaxCliqueGraph, start: int) -> dict[int, int | None]:
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(k.cliques))}
    for a, b in sorted(k.adjacency):
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent: dict[int, int | None] = {start: None}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    return parent


def max_clique_graph(g: Graph, budget: int = DEFAULT_BUDGET) -> MaxCliqueGraph:
    cliques = tuple(maximal_cliques(g, budget))
    adjacency = set()
    for i, j in combinations(range(len(cliques)), 2):
        a, b = cliques[i], cliques[j]
        if len(a) == len(b) and len(a & b) == len(a) - 1:
            adjacency.add((i, j))
    return MaxCliqueGraph(cliques, frozenset(adjacency))


def propagate_unique_coloring(g: Graph, k: int, seed, budget: int = DEFAULT_BUDGET) -> Coloring:
    """Propagate a coloring of the seed clique across the maximal clique graph.

    The seed's vertices get colors 0..k-1 in increasing index order.  When a
    walk crosses from clique A to an adjacent clique B, the vertex entering
    B inherits the color of the vertex leaving A.  Succeeds with the unique
    proper k-coloring when the flag complex is pure of dimension k-1, its
    maximal clique graph is connected and no contradiction arises; raises
    :class:`PropagationFailure` naming the obstruction otherwise.
    """
    seed = frozenset(int(v) for v in seed)
    if len(seed) != k or not g.is_clique(seed):
        raise ValueError(f"seed {sorted(seed)} is not a {k}-clique")
    outside = [v for v in range(g.n) if v not in seed]
    if any(g.adj[v, list(seed)].all() for v in outside):
        raise ValueError(f"seed {sorted(seed)} is not a maximal clique")

    kg = max_clique_graph(g, budget)
    for c in kg.cliques:
        if len(c) != k:
            raise PropagationFailure(
                "impure", sorted(c),
                f"maximal clique {sorted(c)} has {len(c)} vertices, expected {k}")
    start = kg.cliques.index(seed)
    parent = _bfs(kg, start)
    if len(parent) != len(kg.cliques):
        stray = next(i for i in range(len(kg.cliques)) if i not in parent)
        raise PropagationFailure(
            "disconnected", sorted(kg.cliques[stray]),
            f"maximal clique {sorted(kg.cliques[stray])} is unreachable from the seed")

    color: dict[int, int] = {v: i for i, v in enumerate(sorted(seed))}
    nbrs: dict[int, list[int]] = {i: [] for i in range(len(kg.cliques))}
    for a, b in sorted(kg.adjacency):
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in nbrs[a]:
            ca, cb = kg.cliques[a], kg.cliques[b]
            (leaving,) = ca - cb
            (entering,) = cb - ca
            want = color[leaving]
            have = color.get(entering)
            if have is None:
                color[entering] = want
            elif have != want:
                raise PropagationFailure(
                    "contradiction", (sorted(ca), sorted(cb)),
                    f"vertex {entering} needs color {want} crossing from {sorted(ca)} "
                    f"to {sorted(cb)} but already has {have}")
            if b not in seen:
                seen.add(b)
                queue.append(b)
    result = Coloring(tuple(color[v] for v in range(g.n)))
    if not is_proper(g, result):
        raise PropagationFailure("contradiction", None, "propagated coloring is not proper")
    return result
