"""Symplectic, octahedron and Farey graphs.

* ``Sp(2g)``: nonzero vectors of F_2^{2g}, adjacent when distinct and
  orthogonal for the standard symplectic form.
* ``N`` and ``C``: the 12 edges of the octahedron under disjointness, and
  the same graph with 4 extra "circle" vertices.
* Farey graphs ``F`` / ``F'``: primitive lines of Z^2 joined at
  determinant 1 (resp. 1 or 2), truncated by a coordinate bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from itertools import combinations

import numpy as np

from .graph import Coloring, Graph
from .kneser import set_label


# -- Sp(2g) -------------------------------------------------------------

def _bits(x: int, width: int) -> str:
    return "".join(str(x >> i & 1) for i in range(width))


def symplectic_form(x: int, y: int, two_g: int) -> int:
    """sum over i of x_{2i-1} y_{2i} + x_{2i} y_{2i-1} (mod 2); bit 0 holds x_1."""
    total = 0
    for i in range(0, two_g, 2):
        total += (x >> i & 1) * (y >> (i + 1) & 1) + (x >> (i + 1) & 1) * (y >> i & 1)
    return total & 1


def build_sp(two_g: int) -> Graph:
    if two_g < 2 or two_g % 2:
        raise ValueError(f"Sp needs an even dimension >= 2, got {two_g}")
    vecs = np.arange(1, 1 << two_g, dtype=np.int64)
    form = np.zeros((len(vecs), len(vecs)), dtype=np.int64)
    for i in range(0, two_g, 2):
        lo = vecs >> i & 1
        hi = vecs >> (i + 1) & 1
        form += lo[:, None] * hi[None, :] + hi[:, None] * lo[None, :]
    adj = form % 2 == 0
    np.fill_diagonal(adj, False)
    return Graph([_bits(int(v), two_g) for v in vecs], adj)


def srg_parameters(g: Graph) -> tuple[int, int, int, int] | None:
    """(v, k, lambda, mu) when ``g`` is strongly regular, else ``None``.

    Complete and edgeless graphs are not counted as strongly regular.
    """
    if g.n == 0:
        return None
    deg = g.degrees
    if not (deg == deg[0]).all():
        return None
    a = g.adj.astype(np.int64)
    common = a @ a
    off = ~np.eye(g.n, dtype=bool)
    adjacent = common[g.adj]
    non_adjacent = common[~g.adj & off]
    if adjacent.size == 0 or non_adjacent.size == 0:
        return None
    if (adjacent != adjacent[0]).any() or (non_adjacent != non_adjacent[0]).any():
        return None
    return g.n, int(deg[0]), int(adjacent[0]), int(non_adjacent[0])


# -- KG(6,2) inside the even-weight quotient ----------------------------

_ALL_ONES = 0b111111


def _class(mask: int) -> int:
    # representative of mask modulo the all-ones vector
    return min(mask, mask ^ _ALL_ONES)


def phi_map(pair) -> int:
    """Class of e_i + e_j in even-weight F_2^6 modulo all-ones, as a 6-bit mask."""
    i, j = sorted(pair)
    if i == j or not (1 <= i and j <= 6):
        raise ValueError(f"phi needs two distinct elements of 1..6, got {pair}")
    return _class((1 << (i - 1)) | (1 << (j - 1)))


def quotient_pairing(x: int, y: int) -> int:
    """Induced pairing on the quotient: |x & y| mod 2 (well defined on even weights)."""
    return bin(x & y).count("1") & 1


# symplectic basis a1, b1, a2, b2 of the quotient
_A1, _B1, _A2, _B2 = 0b000011, 0b000110, 0b011000, 0b110000


def quotient_to_sp4(x: int) -> int:
    """Coordinates (alpha1, beta1, alpha2, beta2) of a quotient class in the basis above."""
    coords = (quotient_pairing(x, _B1), quotient_pairing(x, _A1),
              quotient_pairing(x, _B2), quotient_pairing(x, _A2))
    return sum(c << i for i, c in enumerate(coords))


def phi_graph() -> Graph:
    """Graph on the 15 images of phi, joined when the pairing vanishes."""
    pairs = list(combinations(range(1, 7), 2))
    images = [phi_map(p) for p in pairs]
    return Graph.from_relation([set_label(p) for p in pairs],
                               lambda u, v: quotient_pairing(images[u], images[v]) == 0)


def phi_isomorphism(kg62: Graph, sp4: Graph) -> dict[int, int]:
    """Vertex map KG(6,2) -> Sp(4) through phi and the explicit basis."""
    mapping = {}
    for u, lab in enumerate(kg62.labels):
        pair = [int(x) for x in lab.strip("{}").split(",")]
        mapping[u] = sp4.index(_bits(quotient_to_sp4(phi_map(pair)), 4))
    return mapping


# -- octahedron ---------------------------------------------------------

ANTIPODE = {1: 4, 4: 1, 2: 5, 5: 2, 3: 6, 6: 3}


def octahedron_edges() -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(1, 7), 2) if ANTIPODE[u] != v]


def octahedron_face_pairs() -> list[tuple[frozenset[int], frozenset[int]]]:
    """The 4 antipodal face pairs (F, -F), F taken to contain vertex 1."""
    out = []
    for b in (2, 5):
        for c in (3, 6):
            face = frozenset({1, b, c})
            out.append((face, frozenset(ANTIPODE[x] for x in face)))
    return out


def build_octahedron_graphs() -> tuple[Graph, Graph]:
    """(N, C): edges of the octahedron joined when disjoint; C adds one circle
    per antipodal face pair, adjacent to the 6 edges of F and -F."""
    edges = octahedron_edges()
    edge_labels = [set_label(e) for e in edges]
    n_graph = Graph.from_relation(edge_labels, lambda u, v: not set(edges[u]) & set(edges[v]))

    faces = octahedron_face_pairs()
    m = len(edges) + len(faces)
    adj = np.zeros((m, m), dtype=bool)
    adj[:len(edges), :len(edges)] = n_graph.adj
    for k, (f, g) in enumerate(faces):
        c = len(edges) + k
        for u, e in enumerate(edges):
            if set(e) <= f or set(e) <= g:
                adj[u, c] = adj[c, u] = True
    circle_labels = ["O" + "".join(map(str, sorted(f))) for f, _ in faces]
    return n_graph, Graph(edge_labels + circle_labels, adj)


# -- Farey graphs -------------------------------------------------------

@dataclass(frozen=True, order=True)
class FareyLine:
    """Primitive line through the origin in Z^2, stored with q > 0 or as (1, 0)."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p},{self.q}) is not primitive")
        if not (self.q > 0 or (self.p, self.q) == (1, 0)):
            raise ValueError(f"({self.p},{self.q}) is not the canonical sign; use FareyLine.of")

    @classmethod
    def of(cls, p: int, q: int) -> "FareyLine":
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def label(self) -> str:
        return f"({self.p}:{self.q})"

    @property
    def height(self) -> int:
        return max(abs(self.p), self.q)


def det(a: FareyLine, b: FareyLine) -> int:
    return a.p * b.q - b.p * a.q


def farey_lines(bound: int) -> list[FareyLine]:
    """Canonical lines with max(|p|, q) <= bound, ordered by (height, q, p)."""
    if bound < 1:
        raise ValueError("Farey truncation bound must be >= 1")
    lines = [FareyLine(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                lines.append(FareyLine(p, q))
    return sorted(lines, key=lambda x: (x.height, x.q, x.p))


def build_farey(bound: int, extended: bool = False) -> Graph:
    """Truncated F (edges at |det| = 1) or F' (|det| in {1, 2})."""
    lines = farey_lines(bound)
    p = np.array([x.p for x in lines], dtype=np.int64)
    q = np.array([x.q for x in lines], dtype=np.int64)
    d = np.abs(p[:, None] * q[None, :] - p[None, :] * q[:, None])
    adj = (d == 1) | (d == 2) if extended else d == 1
    return Graph([x.label for x in lines], adj)


def parse_farey_label(label: str) -> FareyLine:
    p, q = label.strip("()").split(":")
    return FareyLine(int(p), int(q))


def projective_normalize(p: int, q: int, m: int) -> tuple[int, int]:
    """Canonical representative of the point (p : q) of P^1(F_m), m prime."""
    p, q = p % m, q % m
    if q:
        return p * pow(q, -1, m) % m, 1
    if p:
        return 1, 0
    raise ValueError(f"({p},{q}) vanishes mod {m}; the line was not primitive")


def farey_mod_coloring(line: FareyLine, modulus: int) -> tuple[int, int]:
    if modulus not in (2, 3):
        raise ValueError("modulus must be 2 or 3")
    return projective_normalize(line.p, line.q, modulus)


def projective_line(m: int) -> list[tuple[int, int]]:
    return [(a, 1) for a in range(m)] + [(1, 0)]


def farey_coloring(g: Graph, modulus: int) -> Coloring:
    """Reduction coloring on a Farey graph; color id = index in :func:`projective_line`."""
    points = {pt: i for i, pt in enumerate(projective_line(modulus))}
    return Coloring(tuple(points[farey_mod_coloring(parse_farey_label(lab), modulus)]
                          for lab in g.labels))


def _check_sl2(mat) -> tuple[int, int, int, int]:
    (a, b), (c, d) = mat
    if a * d - b * c != 1:
        raise ValueError(f"matrix {mat} does not have determinant 1")
    return a, b, c, d


def psl2_act(mat, line: FareyLine) -> FareyLine:
    a, b, c, d = _check_sl2(mat)
    return FareyLine.of(a * line.p + b * line.q, c * line.p + d * line.q)


def psl2_act_mod(mat, point: tuple[int, int], m: int) -> tuple[int, int]:
    a, b, c, d = _check_sl2(mat)
    x, y = point
    return projective_normalize(a * x + b * y, c * x + d * y, m)


def psl2_color_action(mat, line: FareyLine, modulus: int = 3) -> tuple[FareyLine, bool]:
    """Image of ``line`` under ``mat``, and whether reducing commutes with the action."""
    image = psl2_act(mat, line)
    lhs = farey_mod_coloring(image, modulus)
    rhs = psl2_act_mod(mat, farey_mod_coloring(line, modulus), modulus)
    return image, lhs == rhs


def det2_reconstruction(u: FareyLine, v: FareyLine) -> tuple[tuple[int, int], tuple[int, int]]:
    """For |det(u, v)| = 2, the integer vectors (u+v)/2, (u-v)/2, which span a unimodular pair."""
    if abs(det(u, v)) != 2:
        raise ValueError(f"{u.label}, {v.label} do not have determinant +-2")
    sp, sq = u.p + v.p, u.q + v.q
    dp, dq = u.p - v.p, u.q - v.q
    if sp % 2 or sq % 2 or dp % 2 or dq % 2:
        raise ValueError(f"{u.label} and {v.label} differ mod 2")
    x1, x2 = (sp // 2, sq // 2), (dp // 2, dq // 2)
    if abs(x1[0] * x2[1] - x1[1] * x2[0]) != 1:
        raise ValueError("reconstructed pair is not unimodular")
    return x1, x2


# -- bounds -------------------------------------------------------------

@dataclass(frozen=True)
class BoundsRow:
    genus: int
    lower: Decimal            # g ln g, rounded to ``digits`` places
    homologous_upper: int     # (g-1)(2^{2g}-1)
    upper: int                # g 4^g
    exact: int | None         # known chromatic number, where available


KNOWN_CHROMATIC = {2: 5}


def bounds_table(genus: int, digits: int = 6) -> BoundsRow:
    """Lower and upper bounds on the chromatic number of the curve graph of S_g.

    The logarithm is natural.
    """
    if genus < 2:
        raise ValueError("bounds need genus >= 2")
    with localcontext() as ctx:
        ctx.prec = 50
        lower = (Decimal(genus) * Decimal(genus).ln()).quantize(Decimal(1).scaleb(-digits))
    return BoundsRow(genus, lower, (genus - 1) * (4 ** genus - 1), genus * 4 ** genus,
                     KNOWN_CHROMATIC.get(genus))
