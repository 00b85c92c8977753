"""Acceptance checks as report rows.

Each ``check_*`` function runs one group of claims and returns
:class:`ReportEntry` rows.  A search that runs out of budget yields a
``skipped-budget`` row instead of a verdict.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import fractional, kneser, solvers, special, surface
from .graph import triangle_strip

PASS, FAIL, SKIP = "pass", "fail", "skipped-budget"


@dataclass
class ReportEntry:
    claim: str
    status: str
    computed: str
    expected: str
    source: str          # "stated", "derived" or "trivial"
    seconds: float = 0.0
    witness: object = None

    def as_dict(self) -> dict:
        out = {"claim": self.claim, "status": self.status, "computed": self.computed,
               "expected": self.expected, "source": self.source,
               "metadata": {"seconds": round(self.seconds, 4)}}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class _Rows:
    """Collects rows; each ``run`` times one claim and traps budget exhaustion."""

    def __init__(self):
        self.rows: list[ReportEntry] = []

    def run(self, claim: str, expected, source: str, compute, ok=None, show=str):
        t0 = time.perf_counter()
        try:
            value = compute()
        except solvers.BudgetExhausted as exc:
            self.rows.append(ReportEntry(claim, SKIP, str(exc), str(expected), source,
                                         time.perf_counter() - t0))
            return None
        passed = ok(value) if ok else value == expected
        witness = None if passed else repr(value)
        self.rows.append(ReportEntry(claim, PASS if passed else FAIL, show(value), str(expected),
                                     source, time.perf_counter() - t0, witness))
        return value


def check_kneser_values(budget: int) -> list[ReportEntry]:
    r = _Rows()
    for n, k, want in ((5, 2, 3), (6, 2, 4), (7, 2, 5), (7, 3, 3)):
        r.run(f"kneser-chromatic-kg-{n}-{k}", want, "stated",
              lambda: solvers.chromatic_number(kneser.build_kg(n, k), budget)[0])
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            r.run(f"kneser-chromatic-cg-{n}-{k}", -(-n // k), "stated",
                  lambda: solvers.chromatic_number(kneser.build_cg(n, k), budget)[0])
    return r.rows


def _total_coloring_row(n: int):
    g = kneser.build_total_kg(n)
    coloring = kneser.total_kg_coloring(n, g)
    verts = [kneser.PartitionVertex.of(n, kneser.parse_set_label(lab)) for lab in g.labels]
    used = {kneser.total_coloring(n, v) for v in verts}
    palette = set(kneser.total_palette(n))
    return (solvers.is_proper(g, coloring), len(palette), used <= palette, len(used))


def check_total_coloring(budget: int, max_n: int = 14) -> list[ReportEntry]:
    r = _Rows()
    for n in range(2, max_n + 1):
        want = kneser.total_color_count(n)
        r.run(f"total-coloring-n{n}", f"proper, palette={want}", "stated",
              lambda: _total_coloring_row(n),
              ok=lambda v, want=want: v[0] and v[1] == want and v[2],
              show=lambda v: f"proper={v[0]} palette={v[1]} used={v[3]}")
    return r.rows


def check_fractional_sandwich(budget: int, max_n: int = 12) -> list[ReportEntry]:
    r = _Rows()
    for n in range(4, max_n + 1):
        want = kneser.total_fractional_value(n)
        r.run(f"fractional-sandwich-n{n}", f"{want} = {want}", "stated",
              lambda: "{} = {}".format(*fractional.total_sandwich(n, budget)))
    return r.rows


def independence_bound_violations(n: int, budget: int) -> list[list[str]]:
    g = kneser.build_total_cg(n)
    labels = kneser.cyclic_labels(n)
    bad = []
    for s in solvers.maximal_independent_sets(g, budget):
        if len(s) > min(len(labels[v].partition(n).part) for v in s):
            bad.append(sorted(g.labels[v] for v in s))
    return bad


def check_independence_bound(budget: int, max_n: int = 12) -> list[ReportEntry]:
    r = _Rows()
    for n in range(2, max_n + 1):
        r.run(f"independence-bound-n{n}", [], "stated",
              lambda: independence_bound_violations(n, budget))
    return r.rows


def petersen_endomorphism_summary(budget: int) -> tuple[int, int]:
    g = kneser.build_kg(5, 2)
    endos = solvers.endomorphisms(g, budget)
    return len(endos), sum(solvers.is_automorphism(g, f) for f in endos)


def check_petersen_core(budget: int) -> list[ReportEntry]:
    r = _Rows()
    r.run("petersen-endomorphisms", (120, 120), "stated",
          lambda: petersen_endomorphism_summary(budget))
    return r.rows


def check_domain_oracle(budget: int) -> list[ReportEntry]:
    r = _Rows()
    for g in range(2, 7):
        for h in range(0, g):
            r.run(f"domain-cobounding-g{g}-h{h}", h % (g - 1), "derived",
                  lambda: surface.homologous_color(surface.cobounding_diagram(g, h)).f)
    diagrams = [surface.cobounding_diagram(g, h) for g in range(2, 7) for h in range(g)]
    diagrams += [surface.bounding_pair_diagram(g, h)[0] for g in (3, 4, 5) for h in range(1, g - 1)]
    diagrams.append(surface.load_fixture("genus2_filling_pair.json"))
    r.run("domain-conservation", True, "stated",
          lambda: all(d.total_measure() == 2 - 2 * d.genus for d in diagrams))

    def gauge():
        for d in diagrams:
            dom = surface.solve_domain(d)
            base = surface.euler_measure(d, dom)
            f_double = surface.color_from_measure(base, d.genus)[0]
            for t in range(-2, 3):
                m = surface.euler_measure(d, dom.shifted(t))
                if m - base != t * (2 - 2 * d.genus):
                    return False
                if surface.color_from_measure(m, d.genus)[0] != f_double:
                    return False
        return True

    r.run("domain-gauge-invariance", True, "stated", gauge)
    return r.rows


def check_color_shift(budget: int) -> list[ReportEntry]:
    r = _Rows()
    for g in (3, 4, 5):
        for h in range(1, g - 1):
            diag, iota = surface.bounding_pair_diagram(g, h)
            want = surface.chillingworth_expected_shift(h, iota, g)
            r.run(f"color-shift-g{g}-h{h}", want, "stated", lambda: surface.color_shift(diag))
    return r.rows


def check_four_holed(budget: int) -> list[ReportEntry]:
    r = _Rows()
    r.run("four-holed-total", Fraction(22, 3), "stated", fractional.sigma4_fractional_check)
    r.run("four-holed-profiles", True, "stated",
          lambda: all(v <= 1 for v in fractional.sigma4_profile_values()))
    return r.rows


def random_sl2(rng: random.Random, length: int):
    gens = (((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, -1), (0, 1)))
    m = ((1, 0), (0, 1))
    for _ in range(length):
        (a, b), (c, d) = m
        (e, f), (g, h) = rng.choice(gens)
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
    return m


def equivariance_failures(pairs: int = 100, bound: int = 30, seed: int = 0) -> list:
    rng = random.Random(seed)
    lines = special.farey_lines(bound)
    bad = []
    for _ in range(pairs):
        mat = random_sl2(rng, rng.randint(1, 12))
        line = rng.choice(lines)
        _, ok = special.psl2_color_action(mat, line, 3)
        if not ok:
            bad.append((mat, line.label))
    return bad


def check_farey(budget: int) -> list[ReportEntry]:
    r = _Rows()
    for n in (5, 10, 20, 30):
        def run(n=n):
            f = special.build_farey(n)
            fp = special.build_farey(n, extended=True)
            mod2 = solvers.is_proper(f, special.farey_coloring(f, 2))
            mod3 = special.farey_coloring(fp, 3)
            mod3_ok = solvers.is_proper(fp, mod3) and mod3.palette_size == 4
            omega = solvers.clique_number(fp, budget)[0]
            return mod2, mod3_ok, omega
        r.run(f"farey-colorings-n{n}", (True, True, 4), "stated", run)
    r.run("farey-equivariance-100", [], "stated", equivariance_failures)
    return r.rows


def check_genus_two(budget: int) -> list[ReportEntry]:
    r = _Rows()
    n_graph, c_graph = special.build_octahedron_graphs()
    r.run("octahedron-chromatic-n", 4, "stated", lambda: solvers.chromatic_number(n_graph, budget)[0])
    r.run("octahedron-chromatic-c", 5, "stated", lambda: solvers.chromatic_number(c_graph, budget)[0])
    sp4, kg = special.build_sp(4), kneser.build_kg(6, 2)
    r.run("sp4-srg", (15, 6, 1, 3), "stated", lambda: special.srg_parameters(sp4))
    r.run("kg62-srg", (15, 6, 1, 3), "stated", lambda: special.srg_parameters(kg))
    r.run("sp4-kg62-isomorphic-search", True, "stated",
          lambda: solvers.find_isomorphism(sp4, kg, budget) is not None)

    def via_phi():
        m = special.phi_isomorphism(kg, sp4)
        return len(set(m.values())) == 15 and all(
            kg.adj[u, v] == sp4.adj[m[u], m[v]] for u in range(15) for v in range(15))

    r.run("sp4-kg62-isomorphic-phi", True, "stated", via_phi)
    return r.rows


def check_propagation(budget: int) -> list[ReportEntry]:
    r = _Rows()
    for t in range(2, 11):
        def run(t=t):
            g = triangle_strip(t)
            col = solvers.propagate_unique_coloring(g, 3, [0, 1, 2], budget)
            k, witness = solvers.chromatic_number(g, budget)
            return k == 3 and col.same_partition(witness)
        r.run(f"propagation-strip-{t}", True, "derived", run)

    def petersen():
        g = kneser.build_kg(5, 2)
        u, v = g.edges()[0]
        try:
            solvers.propagate_unique_coloring(g, 2, [u, v], budget)
        except solvers.PropagationFailure as exc:
            return exc.obstruction
        return "succeeded"

    r.run("propagation-petersen-k2", "contradiction", "derived", petersen)
    return r.rows


CRITERIA = (
    ("kneser-values", check_kneser_values),
    ("total-coloring", check_total_coloring),
    ("fractional-sandwich", check_fractional_sandwich),
    ("independence-bound", check_independence_bound),
    ("petersen-core", check_petersen_core),
    ("domain-oracle", check_domain_oracle),
    ("color-shift", check_color_shift),
    ("four-holed", check_four_holed),
    ("farey", check_farey),
    ("genus-two", check_genus_two),
    ("propagation", check_propagation),
)


@dataclass
class Report:
    groups: list[tuple[str, list[ReportEntry]]] = field(default_factory=list)

    @property
    def entries(self) -> list[ReportEntry]:
        return [e for _, rows in self.groups for e in rows]

    def exit_code(self) -> int:
        statuses = {e.status for e in self.entries}
        if FAIL in statuses:
            return 1
        if SKIP in statuses:
            return 3
        return 0

    def as_dict(self) -> dict:
        return {"criteria": [{"criterion": name, "entries": [e.as_dict() for e in rows]}
                             for name, rows in self.groups],
                "exit_code": self.exit_code()}

    def text(self) -> str:
        lines = []
        for i, (name, rows) in enumerate(self.groups, 1):
            verdict = FAIL if any(e.status == FAIL for e in rows) else \
                SKIP if any(e.status == SKIP for e in rows) else PASS
            lines.append(f"[{verdict.upper():>14}] {i:2d}. {name} ({len(rows)} checks)")
            for e in rows:
                if e.status != PASS:
                    lines.append(f"    {e.status}: {e.claim}: computed {e.computed}, expected {e.expected}")
        return "\n".join(lines)


def run_report(budget: int = solvers.DEFAULT_BUDGET, only=None) -> Report:
    rep = Report()
    for name, check in CRITERIA:
        if only and name not in only:
            continue
        rep.groups.append((name, check(budget)))
    return rep

