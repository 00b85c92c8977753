"""Fractional colorings and fractional cliques as checkable certificates.

A fractional coloring (weighted cover by independent sets) bounds the
fractional chromatic number from above, a fractional clique from below.
When the two verified totals agree the value is pinned exactly.  Every
number here is a :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph
from .kneser import (build_total_cg, build_total_kg, cyclic_interval, cyclic_labels,
                     partition_vertices, set_label)
from .solvers import DEFAULT_BUDGET, maximal_independent_sets


class CertificateError(ValueError):
    """A certificate failed verification.

    ``kind`` is ``"not-independent"``, ``"uncovered"``, ``"clique-violation"``,
    ``"bad-weight"`` or ``"unknown-vertex"``; ``witness`` is the offending
    vertex set or label.
    """

    def __init__(self, kind: str, witness, message: str):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


def _parse_weight(raw) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise CertificateError("bad-weight", raw, f"weight {raw!r} must be an integer or a 'p/q' string")
    try:
        return Fraction(raw)
    except (ValueError, TypeError, ZeroDivisionError):
        raise CertificateError("bad-weight", raw, f"cannot parse weight {raw!r}") from None


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FractionalColoring:
    """Independent sets (as vertex labels) with positive rational weights."""

    sets: tuple[tuple[frozenset[str], Fraction], ...]

    @property
    def total(self) -> Fraction:
        return sum((w for _, w in self.sets), Fraction(0))

    def to_json(self) -> str:
        payload = {"sets": [{"vertices": sorted(s), "weight": _fmt(w)} for s, w in self.sets]}
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FractionalColoring":
        data = json.loads(text)
        sets = []
        for entry in data["sets"]:
            sets.append((frozenset(str(v) for v in entry["vertices"]), _parse_weight(entry["weight"])))
        return cls(tuple(sets))


@dataclass(frozen=True)
class FractionalClique:
    """Nonnegative rational vertex weights keyed by label; absent labels weigh 0."""

    weights: dict[str, Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def to_json(self) -> str:
        return json.dumps({"weights": {lab: _fmt(w) for lab, w in self.weights.items()}}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FractionalClique":
        data = json.loads(text)
        return cls({str(lab): _parse_weight(w) for lab, w in data["weights"].items()})


def _indices(g: Graph, labels) -> list[int]:
    out = []
    for lab in labels:
        try:
            out.append(g.index(lab))
        except KeyError:
            raise CertificateError("unknown-vertex", lab, f"certificate names unknown vertex {lab!r}") from None
    return out


def verify_fractional_coloring(g: Graph, fc: FractionalColoring) -> Fraction:
    """Check every set is independent and every vertex is covered with weight >= 1.

    Returns the total weight, an upper bound on the fractional chromatic number.
    """
    cover = [Fraction(0)] * g.n
    for labels, w in fc.sets:
        if w <= 0:
            raise CertificateError("bad-weight", sorted(labels), f"set weight {w} is not positive")
        idx = _indices(g, labels)
        if not g.is_independent(idx):
            raise CertificateError("not-independent", sorted(labels),
                                   f"set {sorted(labels)} is not independent")
        for v in idx:
            cover[v] += w
    for v, c in enumerate(cover):
        if c < 1:
            raise CertificateError("uncovered", g.labels[v],
                                   f"vertex {g.labels[v]} covered with weight {c} < 1")
    return fc.total


def verify_fractional_clique(g: Graph, w: FractionalClique, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Check every maximal independent set carries weight <= 1.

    Weights are nonnegative, so the maximal sets dominate all independent
    sets.  Returns the total weight, a lower bound on the fractional
    chromatic number.
    """
    weight = [Fraction(0)] * g.n
    for lab, x in w.weights.items():
        if x < 0:
            raise CertificateError("bad-weight", lab, f"weight of {lab} is negative")
        (v,) = _indices(g, [lab])
        weight[v] = x
    for s in maximal_independent_sets(g, budget):
        total = sum((weight[v] for v in s), Fraction(0))
        if total > 1:
            labels = sorted(g.labels[v] for v in s)
            raise CertificateError("clique-violation", labels,
                                   f"independent set {labels} has weight {total} > 1")
    return w.total


def kg_total_fractional_coloring(n: int) -> FractionalColoring:
    """For each size k < n/2 and element i, the partitions whose small part has
    size k and contains i, weighted 1/k; for even n the middle layer as one set."""
    verts = partition_vertices(n)
    sets = []
    for k in range(1, (n + 1) // 2):
        layer = [v for v in verts if len(v.part) == k]
        for i in range(1, n + 1):
            sets.append((frozenset(v.label for v in layer if i in v.part), Fraction(1, k)))
    if n % 2 == 0:
        sets.append((frozenset(v.label for v in verts if 2 * len(v.part) == n), Fraction(1)))
    return FractionalColoring(tuple(sets))


def cg_total_fractional_clique(n: int) -> FractionalClique:
    """Weight 1/|A| on the cyclic-interval partition with small part A."""
    return FractionalClique({lab.label: Fraction(1, len(lab.partition(n).part))
                             for lab in cyclic_labels(n)})


def kg_fractional_coloring(n: int, k: int) -> FractionalColoring:
    """The n stars (k-subsets containing i), each weighted 1/k."""
    subsets = list(combinations(range(1, n + 1), k))
    return FractionalColoring(tuple(
        (frozenset(set_label(s) for s in subsets if i in s), Fraction(1, k))
        for i in range(1, n + 1)))


def cg_fractional_clique(n: int, k: int) -> FractionalClique:
    """Constant weight 1/k on the n cyclic intervals of length k."""
    return FractionalClique({set_label(cyclic_interval(n, s, k)): Fraction(1, k)
                             for s in range(1, n + 1)})


# independent-set profiles (a1, a2, a3) over the three vertex classes and the class sizes
SIGMA4_PROFILES = ((1, 1, 0), (1, 0, 2), (0, 1, 4), (0, 2, 2), (0, 3, 3))
SIGMA4_CLASS_SIZES = (6, 6, 12)
SIGMA4_WEIGHTS = (Fraction(7, 9), Fraction(2, 9), Fraction(1, 9))


def sigma4_profile_values(weights=SIGMA4_WEIGHTS, profiles=SIGMA4_PROFILES) -> list[Fraction]:
    return [sum((c * a for c, a in zip(weights, p)), Fraction(0)) for p in profiles]


def sigma4_fractional_check(weights=SIGMA4_WEIGHTS, profiles=SIGMA4_PROFILES,
                            sizes=SIGMA4_CLASS_SIZES) -> Fraction:
    """Total value of the class-constant fractional clique on the four-holed
    sphere arc graph, after checking every profile has weight <= 1."""
    for p, v in zip(profiles, sigma4_profile_values(weights, profiles)):
        if v > 1:
            raise CertificateError("clique-violation", p, f"profile {p} has weight {v} > 1")
    return sum((c * s for c, s in zip(weights, sizes)), Fraction(0))


def total_sandwich(n: int, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, Fraction]:
    """Verified (upper, lower) certificate values on KG(n) and CG(n)."""
    upper = verify_fractional_coloring(build_total_kg(n), kg_total_fractional_coloring(n))
    lower = verify_fractional_clique(build_total_cg(n), cg_total_fractional_clique(n), budget)
    return upper, lower

