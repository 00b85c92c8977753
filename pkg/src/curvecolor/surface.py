"""Two oriented curves on a closed oriented surface, cut into regions.

A :class:`CurveDiagram` records, for every region R of the complement of
curves c and d, its Euler characteristic e(R), its corner count c(R) and
its oriented boundary as a chain of curve edges (coefficient +1 when R lies
to the left of the edge).  Domains are integer combinations of regions;
the Euler measure of a region is m(R) = e(R) - c(R)/4.

Diagrams come from two places:

* :func:`trace_faces` builds them from crossing sequences and signs, for
  filling pairs where every region is a disk.
* :func:`diagram_from_json` reads explicit region data, needed whenever a
  region has genus or several boundary components.

Homologous curves get a color in Z/(g-1).  With D the domain solving
dD = d - c, the double color is f' = -m(D) mod 2(g-1) and f = f'/2.  The
sign makes disjoint curves cobounding a genus-h subsurface (on the left of
d) get color h.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

SIGN = -1  # orientation convention fixed by the cobounding-subsurface calibration


class DiagramError(ValueError):
    """Malformed or unsupported diagram.

    ``kind`` is one of ``"invalid"``, ``"not-filling"``, ``"not-homologous"``,
    ``"disconnected"`` or ``"odd"``.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class Region:
    e: int
    corners: int
    boundary: tuple[tuple[str, int], ...]  # (edge, +1/-1) entries, one per side of an edge
    name: str = ""

    @property
    def measure(self) -> Fraction:
        return self.e - Fraction(self.corners, 4)

    def chain(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for edge, s in self.boundary:
            out[edge] = out.get(edge, 0) + s
        return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class CurveDiagram:
    genus: int
    regions: tuple[Region, ...]
    curve_c: Mapping[str, int]
    curve_d: Mapping[str, int]
    crossings: tuple[tuple[str, int], ...] = ()
    sequence_c: tuple[str, ...] = ()
    sequence_d: tuple[str, ...] = ()
    sides: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        _validate(self)

    @property
    def edges(self) -> list[str]:
        return sorted(self.sides)

    def total_measure(self) -> Fraction:
        return sum((r.measure for r in self.regions), Fraction(0))

    def to_json(self) -> str:
        payload = {
            "genus": self.genus,
            "regions": [{"name": r.name, "e": r.e, "corners": r.corners,
                         "edges": [{"edge": e, "coeff": s} for e, s in r.boundary]}
                        for r in self.regions],
            "boundary_c": [{"edge": e, "coeff": s} for e, s in sorted(self.curve_c.items())],
            "boundary_d": [{"edge": e, "coeff": s} for e, s in sorted(self.curve_d.items())],
        }
        return json.dumps(payload, indent=2)


def _validate(diag: CurveDiagram) -> None:
    if diag.genus < 1:
        raise DiagramError("invalid", f"genus must be >= 1, got {diag.genus}")
    if not diag.regions:
        raise DiagramError("invalid", "diagram has no regions")
    sides: dict[str, list] = {}
    for idx, r in enumerate(diag.regions):
        if r.e > 1:
            raise DiagramError("invalid", f"region {r.name or idx} has e = {r.e} > 1")
        if r.corners < 0:
            raise DiagramError("invalid", f"region {r.name or idx} has negative corner count")
        for edge, s in r.boundary:
            if s not in (1, -1):
                raise DiagramError("invalid", f"edge {edge} has coefficient {s}; expected +1 or -1")
            sides.setdefault(edge, [None, None])
            slot = 0 if s == 1 else 1
            if sides[edge][slot] is not None:
                raise DiagramError("invalid", f"edge {edge} has two regions on the same side")
            sides[edge][slot] = idx
    for edge, (left, right) in sides.items():
        if left is None or right is None:
            raise DiagramError("invalid", f"edge {edge} is missing a side")
    for name, chain in (("c", diag.curve_c), ("d", diag.curve_d)):
        for edge in chain:
            if edge not in sides:
                raise DiagramError("invalid", f"curve {name} uses unknown edge {edge}")
    total_corners = sum(r.corners for r in diag.regions)
    if total_corners % 4:
        raise DiagramError("invalid", f"total corner count {total_corners} is not a multiple of 4")
    expected = 2 - 2 * diag.genus
    if diag.total_measure() != expected:
        raise DiagramError("invalid", f"region measures sum to {diag.total_measure()}, "
                                      f"expected 2 - 2g = {expected}")
    object.__setattr__(diag, "sides", {e: tuple(v) for e, v in sides.items()})


@dataclass(frozen=True)
class Domain:
    """Integer coefficient per region, in region order."""

    coefficients: tuple[int, ...]

    def __add__(self, other: "Domain") -> "Domain":
        return Domain(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def shifted(self, t: int) -> "Domain":
        """Add t copies of the whole surface."""
        return Domain(tuple(a + t for a in self.coefficients))


def boundary(diag: CurveDiagram, dom: Domain) -> dict[str, int]:
    out: dict[str, int] = {}
    for coeff, region in zip(dom.coefficients, diag.regions):
        for edge, s in region.boundary:
            out[edge] = out.get(edge, 0) + coeff * s
    return {k: v for k, v in out.items() if v}


def _target(diag: CurveDiagram) -> dict[str, int]:
    out = dict(diag.curve_d)
    for e, s in diag.curve_c.items():
        out[e] = out.get(e, 0) - s
    return out


def solve_domain(diag: CurveDiagram) -> Domain:
    """The domain D with dD = d - c whose first region has coefficient 0.

    Each edge separates a left region L from a right region R, so the
    system reads D(L) - D(R) = (d - c)(edge): integer potentials on the
    dual graph, solved exactly by walking it from the first region.
    """
    target = _target(diag)
    nbrs: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(diag.regions))}
    for edge, (left, right) in sorted(diag.sides.items()):
        r = target.get(edge, 0)
        if left == right:
            if r:
                raise DiagramError("not-homologous",
                                   f"edge {edge} has the same region on both sides but "
                                   f"d - c = {r} there; the curves are not homologous")
            continue
        nbrs[left].append((right, -r))
        nbrs[right].append((left, r))
    coeff: dict[int, int] = {0: 0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b, delta in nbrs[a]:
            want = coeff[a] + delta
            if b not in coeff:
                coeff[b] = want
                queue.append(b)
            elif coeff[b] != want:
                raise DiagramError("not-homologous",
                                   "no domain has boundary d - c; the curves are not homologous")
    if len(coeff) != len(diag.regions):
        raise DiagramError("disconnected", "region adjacency graph is disconnected; "
                                           "the domain is not determined up to the surface class")
    dom = Domain(tuple(coeff[i] for i in range(len(diag.regions))))
    assert boundary(diag, dom) == {k: v for k, v in target.items() if v}
    return dom


def euler_measure(diag: CurveDiagram, dom: Domain) -> Fraction:
    if len(dom.coefficients) != len(diag.regions):
        raise ValueError("domain does not match the diagram's regions")
    return sum((a * r.measure for a, r in zip(dom.coefficients, diag.regions)), Fraction(0))


@dataclass(frozen=True)
class ColorResult:
    measure: Fraction
    f_double: int   # f' in Z/2(g-1)
    f: int          # f in Z/(g-1)
    domain: Domain

    def as_dict(self) -> dict:
        return {"m": str(self.measure), "f_prime": self.f_double, "f": self.f,
                "domain": list(self.domain.coefficients)}


def color_from_measure(measure: Fraction, genus: int) -> tuple[int, int]:
    """(f', f) for a domain of Euler measure ``measure`` on a genus-g surface."""
    if genus < 2:
        raise DiagramError("invalid", "coloring homologous curves needs genus >= 2")
    if measure.denominator != 1:
        raise DiagramError("odd", f"Euler measure {measure} is not an integer")
    f_double = (SIGN * measure.numerator) % (2 * (genus - 1))
    if f_double % 2:
        raise DiagramError("odd", f"f' = {f_double} is odd; the diagram is malformed")
    return f_double, f_double // 2


def homologous_color(diag: CurveDiagram) -> ColorResult:
    dom = solve_domain(diag)
    m = euler_measure(diag, dom)
    f_double, f = color_from_measure(m, diag.genus)
    return ColorResult(m, f_double, f, dom)


def color_shift(diag: CurveDiagram) -> int:
    """Color change from d to its image under a Torelli element (diagram of d and its image)."""
    return homologous_color(diag).f


def chillingworth_expected_shift(genus_sigma1: int, intersection: int, g: int) -> int:
    if g < 2:
        raise ValueError("needs g >= 2")
    return (genus_sigma1 * intersection) % (g - 1)


# -- face tracing -------------------------------------------------------

Dart = tuple[str, int]  # (edge, +1 forward / -1 backward), leaving a crossing


def _edge_darts(seq: list[str], prefix: str) -> tuple[dict[str, Dart], dict[str, Dart]]:
    n = len(seq)
    out_dart, in_dart = {}, {}
    for i, x in enumerate(seq):
        out_dart[x] = (f"{prefix}{i + 1}", 1)
        in_dart[x] = (f"{prefix}{(i - 1) % n + 1}", -1)
    return out_dart, in_dart


def trace_rotation(crossings: Iterable[tuple[str, int]], curve_c: Iterable[str],
                   curve_d: Iterable[str]) -> list[list[Dart]]:
    """Faces of the cellular embedding fixed by the crossing signs.

    Edge ``c<i>`` runs from the i-th to the (i+1)-th crossing on c, likewise
    for d.  Each face is returned as its cycle of darts with the face on the
    left; its corners are the transitions between consecutive darts.
    """
    crossings = list(crossings)
    signs = dict(crossings)
    curve_c, curve_d = list(curve_c), list(curve_d)
    if not crossings:
        raise DiagramError("invalid", "face tracing needs at least one crossing")
    if len(signs) != len(crossings):
        raise DiagramError("invalid", "duplicate crossing id")
    for name, seq in (("c", curve_c), ("d", curve_d)):
        if sorted(seq) != sorted(signs):
            raise DiagramError("invalid", f"curve {name} must visit every crossing exactly once")
    if any(s not in (1, -1) for s in signs.values()):
        raise DiagramError("invalid", "crossing signs must be +1 or -1")

    c_out, c_in = _edge_darts(curve_c, "c")
    d_out, d_in = _edge_darts(curve_d, "d")
    rotation: dict[Dart, tuple[Dart, Dart]] = {}  # dart -> (ccw next, ccw prev)
    for x, s in crossings:
        ring = [c_out[x], d_out[x], c_in[x], d_in[x]] if s == 1 else \
               [c_out[x], d_in[x], c_in[x], d_out[x]]
        for k, h in enumerate(ring):
            rotation[h] = (ring[(k + 1) % 4], ring[(k - 1) % 4])

    faces, seen = [], set()
    for start in sorted(rotation):
        if start in seen:
            continue
        face, h = [], start
        while h not in seen:
            seen.add(h)
            face.append(h)
            edge, s = h
            h = rotation[(edge, -s)][1]
        if h != start:
            raise AssertionError("face tracing did not close up")
        faces.append(face)
    return faces


def trace_faces(genus: int, crossings, curve_c, curve_d) -> CurveDiagram:
    """Diagram of a filling pair: every traced face is a disk region."""
    crossings = [(str(x), int(s)) for x, s in crossings]
    curve_c = [str(x) for x in curve_c]
    curve_d = [str(x) for x in curve_d]
    faces = trace_rotation(crossings, curve_c, curve_d)
    v, e, f = len(crossings), 2 * len(crossings), len(faces)
    if v - e + f != 2 - 2 * genus:
        raise DiagramError(
            "not-filling",
            f"traced cell structure has V - E + F = {v - e + f}, not 2 - 2g = {2 - 2 * genus}; "
            "the curves do not fill this surface, so describe the regions explicitly "
            "(explicit-region input)")
    regions = tuple(Region(1, len(face), tuple(face), name=f"F{i + 1}") for i, face in enumerate(faces))
    n = len(crossings)
    return CurveDiagram(genus, regions,
                        {f"c{i + 1}": 1 for i in range(n)}, {f"d{i + 1}": 1 for i in range(n)},
                        tuple(crossings), tuple(curve_c), tuple(curve_d))


def glue_faces(genus: int, crossings, curve_c, curve_d, groups, handles,
               names=None) -> CurveDiagram:
    """Regions made of traced faces joined by tubes and extra handles.

    ``groups[i]`` lists face indices (into :func:`trace_rotation`'s output)
    forming region i and ``handles[i]`` its genus; a region built from k
    disks with h handles has e = 2 - 2h - k.
    """
    crossings = [(str(x), int(s)) for x, s in crossings]
    faces = trace_rotation(crossings, curve_c, curve_d)
    used = sorted(i for grp in groups for i in grp)
    if used != list(range(len(faces))):
        raise DiagramError("invalid", "groups must partition the traced faces")
    regions = []
    for k, (grp, h) in enumerate(zip(groups, handles)):
        darts = [d for i in grp for d in faces[i]]
        regions.append(Region(2 - 2 * h - len(grp), len(darts), tuple(darts),
                              name=names[k] if names else f"R{k + 1}"))
    n = len(crossings)
    return CurveDiagram(genus, tuple(regions),
                        {f"c{i + 1}": 1 for i in range(n)}, {f"d{i + 1}": 1 for i in range(n)},
                        tuple(crossings), tuple(curve_c), tuple(curve_d))


# -- JSON ---------------------------------------------------------------

def _chain(entries) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in entries:
        out[str(item["edge"])] = out.get(str(item["edge"]), 0) + int(item["coeff"])
    return {k: v for k, v in out.items() if v}


def diagram_from_dict(data: dict) -> CurveDiagram:
    """Read either input form: crossing sequences (traced) or explicit regions."""
    try:
        genus = int(data["genus"])
        if "regions" in data:
            regions = tuple(
                Region(int(r["e"]), int(r["corners"]),
                       tuple((str(x["edge"]), int(x["coeff"])) for x in r.get("edges", [])),
                       name=str(r.get("name", f"R{i + 1}")))
                for i, r in enumerate(data["regions"]))
            return CurveDiagram(genus, regions, _chain(data.get("boundary_c", [])),
                                _chain(data.get("boundary_d", [])))
        crossings = [(str(x["id"]), int(x["sign"])) for x in data["crossings"]]
        return trace_faces(genus, crossings, data["curve_c"], data["curve_d"])
    except (KeyError, TypeError) as exc:
        raise DiagramError("invalid", f"malformed diagram: missing or bad field {exc}") from None


def diagram_from_json(text: str) -> CurveDiagram:
    return diagram_from_dict(json.loads(text))


# -- fixtures -----------------------------------------------------------

def cobounding_diagram(g: int, h: int) -> CurveDiagram:
    """Disjoint homologous c, d cobounding a genus-h piece lying left of d.

    Two regions: the genus-h piece (e = -2h) and the rest (e = -2(g-1-h)).
    With h = 0 the curves are parallel.
    """
    if not 0 <= h <= g - 1:
        raise ValueError(f"need 0 <= h <= g-1, got h={h}, g={g}")
    left = Region(-2 * h, 0, (("c", -1), ("d", 1)), name="inside")
    right = Region(-2 * (g - 1 - h), 0, (("c", 1), ("d", -1)), name="outside")
    return CurveDiagram(g, (left, right), {"c": 1}, {"d": 1})


def identical_curves_diagram(g: int) -> CurveDiagram:
    """c = d, encoded with the two sides of one curve as regions; D = 0."""
    a = Region(-2 * (g - 1), 0, (("c", 1), ("c", -1)), name="complement")
    return CurveDiagram(g, (a,), {"c": 1}, {"c": 1})


def nonhomologous_diagram(g: int) -> CurveDiagram:
    """c non-separating, d bounding a disk disjoint from c."""
    disk = Region(1, 0, (("d", 1),), name="disk")
    rest = Region(1 - 2 * g, 0, (("c", 1), ("c", -1), ("d", -1)), name="rest")
    return CurveDiagram(g, (disk, rest), {"c": 1}, {"d": 1})


def chain_pair_diagram(g: int, i: int, j: int) -> CurveDiagram:
    """Curves c_i, c_j of the cyclic chain of g-1 disjoint homologous curves
    cutting S_g into genus-one pieces; c_j sits (j - i) mod (g-1) pieces
    after c_i."""
    return cobounding_diagram(g, (j - i) % (g - 1))


# bounding pair: c = delta, d = image of delta; crossing a with alpha (+1), b with beta (-1)
BOUNDING_PAIR_CROSSINGS = (("a", 1), ("b", -1))
BOUNDING_PAIR_FACES = (
    frozenset({("c1", 1), ("d1", -1)}),
    frozenset({("c1", -1), ("d2", -1)}),
    frozenset({("c2", 1), ("d1", 1)}),
    frozenset({("c2", -1), ("d2", 1)}),
)


def bounding_pair_diagram(g: int, h: int) -> tuple[CurveDiagram, int]:
    """Diagram of delta and its image under a bounding-pair map.

    The bounding pair alpha, beta cuts off Sigma_1 of genus h, on the left
    of alpha; delta crosses alpha and beta once each.  Returns the diagram
    and the algebraic intersection of delta with alpha (-1 in this
    orientation).

    Regions: a bigon T between the two arcs in the twisting annulus, R1 of
    genus h (the Sigma_1 side, two faces joined by a tube) and R2 of genus
    g-1-h.
    """
    if g < 3 or not 1 <= h <= g - 2:
        raise ValueError(f"need g >= 3 and 1 <= h <= g-2, got g={g}, h={h}")
    faces = trace_rotation(BOUNDING_PAIR_CROSSINGS, ["a", "b"], ["a", "b"])
    index = {frozenset(f): i for i, f in enumerate(faces)}
    t, r1a, r1b, r2 = (index[f] for f in BOUNDING_PAIR_FACES)
    diag = glue_faces(g, BOUNDING_PAIR_CROSSINGS, ["a", "b"], ["a", "b"],
                      [[t], [r1a, r1b], [r2]], [0, h, g - 1 - h], names=["T", "R1", "R2"])
    return diag, -1


def stacked_color(results: Iterable[ColorResult], genus: int) -> tuple[int, int]:
    """(f', f) of a chain of pairs c0 -> c1 -> ... from the pairwise results.

    Domains of consecutive pairs add, and so do their Euler measures.
    """
    total = sum((r.measure for r in results), Fraction(0))
    return color_from_measure(total, genus)


def load_fixture(name: str) -> CurveDiagram:
    """Read one of the diagrams shipped in ``curvecolor/data``."""
    from importlib.resources import files

    return diagram_from_json(files("curvecolor").joinpath("data", name).read_text())
