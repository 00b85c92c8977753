"""Kneser, cyclic interval, total Kneser and total cyclic interval graphs.

Subsets of ``{1..n}`` are handled as bitmasks (bit ``i-1`` for element
``i``) while building adjacency; labels use set notation ``{1,3,4}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Coloring, Graph


def set_label(elements) -> str:
    return "{" + ",".join(str(x) for x in sorted(elements)) + "}"


def parse_set_label(label: str) -> frozenset[int]:
    body = label.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"not a set label: {label!r}")
    body = body[1:-1]
    return frozenset(int(x) for x in body.split(",")) if body else frozenset()


def _mask(elements) -> int:
    m = 0
    for x in elements:
        m |= 1 << (x - 1)
    return m


def _elements(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@dataclass(frozen=True, order=True)
class PartitionVertex:
    """Unordered partition of ``{1..n}`` into two non-empty parts.

    Stored by its smaller part; when both parts have ``n/2`` elements the
    part containing 1 is kept.
    """

    n: int
    part: frozenset[int]

    def __post_init__(self):
        part = frozenset(self.part)
        object.__setattr__(self, "part", part)
        full = set(range(1, self.n + 1))
        if not part or not part <= full or part == full:
            raise ValueError(f"{set_label(part)} is not a proper non-empty subset of 1..{self.n}")
        if 2 * len(part) > self.n:
            raise ValueError(f"{set_label(part)} is the larger part; use PartitionVertex.of")
        if 2 * len(part) == self.n and 1 not in part:
            raise ValueError(f"middle-layer part {set_label(part)} must contain 1")

    @classmethod
    def of(cls, n: int, subset) -> "PartitionVertex":
        """Canonical vertex for the partition ``(subset, complement)``."""
        a = frozenset(subset)
        b = frozenset(range(1, n + 1)) - a
        if len(b) < len(a) or (len(a) == len(b) and 1 not in a):
            a = b
        return cls(n, a)

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.part

    @property
    def mask(self) -> int:
        return _mask(self.part)

    @property
    def label(self) -> str:
        return set_label(self.part)

    def nested_with(self, other: "PartitionVertex") -> bool:
        a, b = self.part, self.complement
        c, d = other.part, other.complement
        return not (a & c and a & d and b & c and b & d)


@dataclass(frozen=True, order=True)
class CyclicLabel:
    """Label ``(i, j)`` of a cyclic-interval partition: the minimal elements of its parts."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i},{self.j})")

    @property
    def label(self) -> str:
        return f"({self.i},{self.j})"

    def partition(self, n: int) -> PartitionVertex:
        if self.j > n:
            raise ValueError(f"label {self.label} out of range for n={n}")
        return PartitionVertex.of(n, range(self.i, self.j))

    def linked(self, other: "CyclicLabel") -> bool:
        i, j, k, l = self.i, self.j, other.i, other.j
        return i < k < j < l or k < i < l < j

    @classmethod
    def of(cls, v: PartitionVertex) -> "CyclicLabel":
        """Label of a partition whose parts are cyclic intervals."""
        n = v.n
        mins = []
        for part in (v.part, v.complement):
            starts = [x for x in part if (x - 2) % n + 1 not in part]
            if len(starts) != 1:
                raise ValueError(f"{v.label} is not a cyclic-interval partition")
            mins.append(starts[0])
        return cls(min(mins), max(mins))


def _check_nk(n: int, k: int) -> None:
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k >= 2, got n={n}, k={k}")


def _disjointness_graph(labels, masks) -> Graph:
    m = np.asarray(masks, dtype=np.int64)
    adj = (m[:, None] & m[None, :]) == 0
    return Graph(labels, adj)


def build_kg(n: int, k: int) -> Graph:
    """Kneser graph KG(n,k): k-subsets, adjacent when disjoint."""
    _check_nk(n, k)
    subsets = list(combinations(range(1, n + 1), k))
    return _disjointness_graph([set_label(s) for s in subsets], [_mask(s) for s in subsets])


def cyclic_interval(n: int, start: int, k: int) -> frozenset[int]:
    return frozenset((start - 1 + t) % n + 1 for t in range(k))


def build_cg(n: int, k: int) -> Graph:
    """Cyclic interval graph CG(n,k), induced on the n cyclic shifts of {1..k}."""
    _check_nk(n, k)
    intervals = [cyclic_interval(n, s, k) for s in range(1, n + 1)]
    return _disjointness_graph([set_label(s) for s in intervals], [_mask(s) for s in intervals])


def partition_vertices(n: int) -> list[PartitionVertex]:
    """All 2^(n-1) - 1 vertices of KG(n), ordered by part size then lexicographically."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    verts = []
    for size in range(1, n // 2 + 1):
        for part in combinations(range(1, n + 1), size):
            if 2 * size == n and part[0] != 1:
                continue
            verts.append(PartitionVertex(n, frozenset(part)))
    return verts


def nested_matrix(n: int, masks_a, masks_b, chunk: int = 512) -> np.ndarray:
    """Boolean matrix of nestedness between two lists of subsets of {1..n}."""
    full = (1 << n) - 1
    a = np.asarray(masks_a, dtype=np.int64)
    c = np.asarray(masks_b, dtype=np.int64)[None, :]
    d = full ^ c
    out = np.empty((len(a), c.shape[1]), dtype=bool)
    for lo in range(0, len(a), chunk):
        aa = a[lo:lo + chunk, None]
        bb = full ^ aa
        out[lo:lo + chunk] = ((aa & c) == 0) | ((aa & d) == 0) | ((bb & c) == 0) | ((bb & d) == 0)
    return out


def build_total_kg(n: int) -> Graph:
    """Total Kneser graph KG(n): two-part partitions, adjacent when distinct and nested."""
    verts = partition_vertices(n)
    masks = [v.mask for v in verts]
    adj = nested_matrix(n, masks, masks)
    np.fill_diagonal(adj, False)
    return Graph([v.label for v in verts], adj)


def cyclic_labels(n: int) -> list[CyclicLabel]:
    return [CyclicLabel(i, j) for i, j in combinations(range(1, n + 1), 2)]


def build_total_cg(n: int) -> Graph:
    """Total cyclic interval graph CG(n) on labels (i,j); edges join unlinked labels."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    labels = cyclic_labels(n)
    return Graph.from_relation([x.label for x in labels],
                               lambda u, v: not labels[u].linked(labels[v]))


@dataclass(frozen=True)
class TotalColor:
    """Color ``(k, a)`` of the logarithmic coloring of KG(n).

    ``middle`` marks the single extra color given to the whole middle layer
    when n is a power of 2; ``k`` and ``a`` are then ``None``.
    """

    k: int | None
    a: int | None
    middle: bool = False

    def __str__(self) -> str:
        return "mid" if self.middle else f"({self.k},{self.a})"


def total_coloring(n: int, v: PartitionVertex) -> TotalColor:
    """Color of a vertex of KG(n): write |A| = 2^(k+1) - l with 1 <= l <= 2^k and
    take a = the l-th largest element of A."""
    if v.n != n:
        raise ValueError(f"vertex belongs to KG({v.n}), not KG({n})")
    size = len(v.part)
    if _is_power_of_two(n) and 2 * size == n:
        return TotalColor(None, None, middle=True)
    k = size.bit_length() - 1
    l = (1 << (k + 1)) - size
    a = sorted(v.part, reverse=True)[l - 1]
    return TotalColor(k, a)


def total_color_count(n: int) -> int:
    """n * ceil(log2(n/2)), plus one when n is a power of 2."""
    ceil_log = (n - 1).bit_length() - 1
    return n * ceil_log + (1 if _is_power_of_two(n) else 0)


def total_palette(n: int) -> list[TotalColor]:
    """Every color the (k, a) rule can assign on KG(n).

    ``k`` runs over the levels reachable by part sizes outside the special
    middle layer and ``a`` over 1..n.  Some pairs are never hit (for n=5 no
    2-subset has second largest element 5), so the colors actually used can
    be fewer than the palette.
    """
    middle = _is_power_of_two(n) and n >= 2
    largest = n // 2 - (1 if middle else 0)
    levels = largest.bit_length()
    palette = [TotalColor(k, a) for k in range(levels) for a in range(1, n + 1)]
    if middle:
        palette.append(TotalColor(None, None, middle=True))
    return palette


def total_kg_coloring(n: int, graph: Graph | None = None) -> Coloring:
    """The (k, a) coloring of KG(n) as a :class:`Coloring` (ids in sorted color order)."""
    if graph is None:
        verts = partition_vertices(n)
    else:
        verts = [PartitionVertex.of(n, parse_set_label(lab)) for lab in graph.labels]
    colors = [total_coloring(n, v) for v in verts]
    key = lambda c: (1, 0, 0) if c.middle else (0, c.k, c.a)  # noqa: E731
    ids = {c: i for i, c in enumerate(sorted(set(colors), key=key))}
    return Coloring(tuple(ids[c] for c in colors))


def classical_kneser_coloring(n: int, k: int, subset) -> int:
    """Kneser's coloring of KG(n,k) with colors 1..n-2k+2.

    A subset gets its least element when that is at most n-2k+1; the rest
    live inside {n-2k+2..n}, a (2k-1)-set with no two disjoint k-subsets,
    and share the top color.
    """
    _check_nk(n, k)
    subset = frozenset(subset)
    if len(subset) != k or not subset <= set(range(1, n + 1)):
        raise ValueError(f"{set_label(subset)} is not a {k}-subset of 1..{n}")
    least = min(subset)
    return least if least <= n - 2 * k + 1 else n - 2 * k + 2


def classical_coloring(n: int, k: int, graph: Graph | None = None) -> Coloring:
    g = graph if graph is not None else build_kg(n, k)
    return Coloring(tuple(classical_kneser_coloring(n, k, parse_set_label(lab)) - 1
                          for lab in g.labels))


def harmonic(m: int) -> Fraction:
    """m-th harmonic number as an exact rational; H_0 = 0."""
    if m < 0:
        raise ValueError("harmonic number needs m >= 0")
    return sum((Fraction(1, j) for j in range(1, m + 1)), Fraction(0))


def total_fractional_value(n: int) -> Fraction:
    """n * H_floor((n-1)/2) + (1 - p(n)), p(n) the parity of n."""
    return n * harmonic((n - 1) // 2) + (1 - n % 2)
