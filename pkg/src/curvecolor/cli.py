"""``curvecolor`` command line.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 a search ran
out of budget (and nothing failed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fractional, kneser, solvers, special, surface
from .graph import Coloring, Graph
from .report import run_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _ints(params, count: int, usage: str) -> list[int]:
    if len(params) != count:
        raise UsageError(f"expected {usage}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"expected integers: {usage}") from None


def build_family(family: str, params: list[str], extended: bool = False) -> Graph:
    try:
        if family == "kg":
            return kneser.build_kg(*_ints(params, 2, "kg N K"))
        if family == "cg":
            return kneser.build_cg(*_ints(params, 2, "cg N K"))
        if family == "kg-total":
            return kneser.build_total_kg(*_ints(params, 1, "kg-total N"))
        if family == "cg-total":
            return kneser.build_total_cg(*_ints(params, 1, "cg-total N"))
        if family == "sp":
            return special.build_sp(*_ints(params, 1, "sp 2G"))
        if family == "farey":
            return special.build_farey(*_ints(params, 1, "farey N"), extended=extended)
        if family in ("octahedron-n", "octahedron-c"):
            _ints(params, 0, family)
            n_graph, c_graph = special.build_octahedron_graphs()
            return n_graph if family == "octahedron-n" else c_graph
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}")


def _read_graph(path: str) -> Graph:
    try:
        return Graph.from_dimacs(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _coloring_dict(g: Graph, c: Coloring) -> dict:
    return json.loads(c.to_json(g))


def cmd_build(args) -> int:
    g = build_family(args.family, args.params, args.extended)
    _emit(args, g.to_dimacs(f"{args.family} {' '.join(args.params)}".strip()))
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _read_graph(args.graph)
    k, witness = solvers.chromatic_number(g, args.budget)
    if args.json:
        _emit(args, _dump({"chromatic_number": k, "coloring": _coloring_dict(g, witness)}))
    else:
        _emit(args, f"{k}\n{witness.to_json(g)}")
    return EXIT_OK


def cmd_clique(args) -> int:
    g = _read_graph(args.graph)
    omega, clique = solvers.clique_number(g, args.budget)
    labels = [g.labels[v] for v in clique]
    if args.json:
        _emit(args, _dump({"clique_number": omega, "clique": labels}))
    else:
        _emit(args, f"{omega}\n{' '.join(labels)}")
    return EXIT_OK


def cmd_fractional_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        text = Path(args.certificate).read_text()
        data = json.loads(text)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    try:
        if "sets" in data:
            kind, value = "coloring", fractional.verify_fractional_coloring(
                g, fractional.FractionalColoring.from_json(text))
        elif "weights" in data:
            kind, value = "clique", fractional.verify_fractional_clique(
                g, fractional.FractionalClique.from_json(text), args.budget)
        else:
            raise UsageError("certificate needs a 'sets' or 'weights' key")
    except fractional.CertificateError as exc:
        _emit(args, _dump({"valid": False, "error": exc.kind, "witness": exc.witness,
                           "message": str(exc)}) if args.json else f"invalid: {exc}")
        return EXIT_FAIL
    _emit(args, _dump({"valid": True, "kind": kind, "value": str(value)}) if args.json
          else f"valid fractional {kind}, value {value}")
    return EXIT_OK


def named_coloring(scheme: str, params: list[str]) -> tuple[Graph, Coloring]:
    if scheme == "kneser":
        n, k = _ints(params, 2, "kneser N K")
        g = build_family("kg", params)
        return g, kneser.classical_coloring(n, k, g)
    if scheme == "total":
        (n,) = _ints(params, 1, "total N")
        g = build_family("kg-total", params)
        return g, kneser.total_kg_coloring(n, g)
    if scheme in ("farey-mod2", "farey-mod3"):
        (n,) = _ints(params, 1, f"{scheme} N")
        modulus = 2 if scheme == "farey-mod2" else 3
        g = build_family("farey", params, extended=modulus == 3)
        return g, special.farey_coloring(g, modulus)
    raise UsageError(f"unknown coloring {scheme!r}")


def cmd_color(args) -> int:
    g, c = named_coloring(args.scheme, args.params)
    proper = solvers.is_proper(g, c)
    payload = {"scheme": args.scheme, "proper": proper, **_coloring_dict(g, c)}
    _emit(args, _dump(payload))
    return EXIT_OK if proper else EXIT_FAIL


def cmd_domain(args) -> int:
    try:
        diag = surface.diagram_from_json(Path(args.diagram).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.diagram}: {exc}") from None
    except (ValueError, surface.DiagramError) as exc:
        _emit(args, _dump({"error": getattr(exc, "kind", "invalid"), "message": str(exc)}))
        return EXIT_FAIL
    try:
        res = surface.homologous_color(diag)
    except surface.DiagramError as exc:
        _emit(args, _dump({"error": exc.kind, "message": str(exc)}))
        return EXIT_FAIL
    payload = {"genus": diag.genus, **res.as_dict()}
    if args.json:
        _emit(args, _dump(payload))
    else:
        _emit(args, f"m(D) = {res.measure}\nf' = {res.f_double} (mod {2 * (diag.genus - 1)})\n"
                    f"f = {res.f} (mod {diag.genus - 1})")
    return EXIT_OK


def cmd_farey(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    g = special.build_farey(args.bound, args.extended)
    dimacs = g.to_dimacs(f"farey bound {args.bound}{' extended' if args.extended else ''}")
    coloring, proper = None, None
    if args.color:
        modulus = int(args.color[-1])
        coloring = special.farey_coloring(g, modulus)
        proper = solvers.is_proper(g, coloring)
    if args.json:
        payload = {"dimacs": dimacs}
        if coloring is not None:
            payload.update({"color": args.color, "proper": proper,
                            "coloring": _coloring_dict(g, coloring)})
        _emit(args, _dump(payload))
    else:
        text = dimacs
        if coloring is not None:
            text += f"c coloring {args.color} proper={proper}\n"
            text += "".join(f"c color {lab} {c}\n" for lab, c in zip(g.labels, coloring.colors))
        _emit(args, text)
    return EXIT_FAIL if proper is False else EXIT_OK


def cmd_octahedron(args) -> int:
    n_graph, c_graph = special.build_octahedron_graphs()
    payload = {}
    for name, g in (("N", n_graph), ("C", c_graph)):
        k, _ = solvers.chromatic_number(g, args.budget)
        payload[name] = {"vertices": g.n, "edges": g.num_edges, "chromatic_number": k}
    if args.json:
        _emit(args, _dump(payload))
    else:
        _emit(args, "\n".join(f"{name}: {v['vertices']} vertices, {v['edges']} edges, "
                              f"chromatic number {v['chromatic_number']}" for name, v in payload.items()))
    return EXIT_OK


def cmd_sp(args) -> int:
    if args.g < 1:
        raise UsageError("--g must be >= 1")
    g = special.build_sp(2 * args.g)
    params = special.srg_parameters(g)
    payload = {"genus": args.g, "vertices": g.n, "edges": g.num_edges,
               "srg": list(params) if params else None}
    if args.g == 2:
        payload["isomorphic_to_kg_6_2"] = solvers.find_isomorphism(
            g, kneser.build_kg(6, 2), args.budget) is not None
    if args.json:
        _emit(args, _dump(payload))
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        row = special.bounds_table(args.genus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"genus": row.genus, "lower_g_ln_g": str(row.lower),
               "homologous_upper": row.homologous_upper, "upper_g_4_pow_g": row.upper,
               "exact": row.exact}
    if args.json:
        _emit(args, _dump(payload))
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_report(args) -> int:
    rep = run_report(args.budget, only=args.only)
    _emit(args, _dump(rep.as_dict()) if args.json else rep.text())
    return rep.exit_code()


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=solvers.DEFAULT_BUDGET,
                        help="search node budget (default %(default)s)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="curvecolor",
                                description="Exact colorings, fractional certificates and curve diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common], help="emit a graph family as DIMACS")
    s.add_argument("family", choices=["kg", "cg", "kg-total", "cg-total", "sp", "farey",
                                      "octahedron-n", "octahedron-c"])
    s.add_argument("params", nargs="*")
    s.add_argument("--extended", action="store_true", help="farey: use determinant 1 or 2")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("chromatic", parents=[common], help="exact chromatic number of a DIMACS graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("clique", parents=[common], help="exact clique number of a DIMACS graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_clique)

    s = sub.add_parser("fractional-verify", parents=[common], help="check a fractional certificate")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_fractional_verify)

    s = sub.add_parser("color", parents=[common], help="apply a named explicit coloring")
    s.add_argument("scheme", choices=["kneser", "total", "farey-mod2", "farey-mod3"])
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("domain", parents=[common], help="Euler measure and color of a curve diagram")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_domain)

    s = sub.add_parser("farey", parents=[common], help="truncated Farey graph with optional coloring")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--extended", action="store_true")
    s.add_argument("--color", choices=["mod2", "mod3"])
    s.set_defaults(func=cmd_farey)

    s = sub.add_parser("octahedron", parents=[common], help="the octahedron graphs N and C")
    s.set_defaults(func=cmd_octahedron)

    s = sub.add_parser("sp", parents=[common], help="symplectic orthogonality graph Sp(2g)")
    s.add_argument("--g", type=int, default=2)
    s.set_defaults(func=cmd_sp)

    s = sub.add_parser("bounds", parents=[common], help="chromatic bounds for the curve graph")
    s.add_argument("--genus", type=int, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("report", parents=[common], help="run every acceptance check")
    s.add_argument("--only", action="append", help="restrict to a named criterion (repeatable)")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.budget < 1:
        parser.error("--budget must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"curvecolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except solvers.BudgetExhausted as exc:
        print(f"curvecolor: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
