"""Command line front end.

    cayley-octads orbits [--format json|tsv|text]
    cayley-octads tables
    cayley-octads adjacency
    cayley-octads diagram 001110
    cayley-octads octad verify|complete|hessian|chirality|ovals FILE [--depth N]
    cayley-octads m1-check

Exit status: 0 on success, 1 on a domain error (reported with its code),
2 on malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import diagrams as dg
from .bipartitions import build_phi
from .errors import OctadError
from .geometry import chirality, nets, ovals
from .geometry.points import read_config

FORMATS = ("json", "tsv", "text")
EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Table:
    title: str
    header: list[str]
    rows: list[list[Any]]


@dataclass
class CommandReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    error: dict | None = None
    exit_status: int = EXIT_OK
    tables: list[Table] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        return "ok" if self.exit_status == EXIT_OK else "error"

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status,
            "exit_status": self.exit_status,
            "warnings": list(self.warnings),
            "error": self.error,
            "results": self.results,
        }


# -- helpers --------------------------------------------------------------------


def _matrix(d) -> list[list[int]]:
    return [list(r) for r in d.matrix]


def _edges(g: dg.GammaGraph | None):
    return None if g is None else [[u, v, tag] for u, v, tag in g.edges]


def _key_name(key) -> str:
    return f"O{key[0]}{key[1]}"


def _point(p) -> list[int]:
    return list(p.coords)


# -- commands ---------------------------------------------------------------------


def cmd_orbits(args, rep: CommandReport):
    rows = []
    for o in dg.enumerate_orbits():
        rows.append({
            "class": _key_name(o.label.key),
            "alpha": o.label.alpha,
            "beta": o.label.beta,
            "parity": "odd" if o.label.parity else "even",
            "size": o.size,
            "representative": o.representative.bits,
            "matrix": _matrix(o.representative),
        })
    rep.results = {
        "orbits": rows,
        "even_total": sum(r["size"] for r in rows if r["parity"] == "even"),
        "odd_total": sum(r["size"] for r in rows if r["parity"] == "odd"),
        "even_exception": [list(k) for k in dg.computed_even_exception()],
    }
    rep.warnings.append(dg.discrepancy_warning())
    rep.tables.append(Table("orbits", ["class", "parity", "alpha", "beta", "size", "representative"],
                            [[r["class"], r["parity"], r["alpha"], r["beta"], r["size"], r["representative"]] for r in rows]))


def cmd_tables(args, rep: CommandReport):
    graphs, groups, orbits = [], [], []
    for key in dg.EVEN_CLASSES:
        d = dg.even_representative(key)
        phi = build_phi(d)
        g = dg.gamma_graph(d, phi)
        group = dg.monodromy_group(d, phi)
        n_orbits = dg.count_orbits(group.lifted, 8)
        graphs.append({"class": _key_name(key), "representative": d.bits, "edges": _edges(g),
                   "matches_reference": g.is_isomorphic(dg.reference_gamma(key))})
        groups.append({"class": _key_name(key), "group": group.name, "order": group.order,
                   "reference": dg.REFERENCE_GROUPS[key], "match": group.name == dg.REFERENCE_GROUPS[key]})
        orbits.append({"class": _key_name(key), "vertex_orbits": n_orbits,
                   "reference": dg.REFERENCE_ORBITS[key], "match": n_orbits == dg.REFERENCE_ORBITS[key]})
    total = sum(r["vertex_orbits"] for r in orbits)
    rep.results = {"collision_graphs": graphs, "monodromy_groups": groups, "vertex_orbits": orbits, "vertex_orbit_total": total}
    if not all(r["matches_reference"] for r in graphs):
        rep.warnings.append("some collision graphs differ from the reference drawings")
    rep.tables += [
        Table("collision_graphs", ["class", "alpha_edges", "beta_edges", "matches_reference"],
              [[r["class"], " ".join(f"{u}-{v}" for u, v, t in r["edges"] if t == dg.ALPHA),
                " ".join(f"{u}-{v}" for u, v, t in r["edges"] if t == dg.BETA), r["matches_reference"]] for r in graphs]),
        Table("monodromy_groups", ["class", "group", "order", "reference", "match"],
              [[r["class"], r["group"], r["order"], r["reference"], r["match"]] for r in groups]),
        Table("vertex_orbits", ["class", "vertex_orbits", "reference", "match"],
              [[r["class"], r["vertex_orbits"], r["reference"], r["match"]] for r in orbits] + [["total", total, "", ""]]),
    ]


def cmd_adjacency(args, rep: CommandReport):
    g = dg.adjacency_graph()
    edges = [[_key_name(u), _key_name(v)] for u, v in g.proper_edges]
    loops = [_key_name(u) for u in g.loops]
    rep.results = {"classes": [_key_name(k) for k in g.vertices], "edges": edges, "loops": loops}
    rep.tables.append(Table("adjacency", ["u", "v"], [e for e in edges] + [[u, u] for u in loops]))


def cmd_diagram(args, rep: CommandReport):
    d = dg.diagram(args.bits)
    label = dg.class_label(d)
    orbit = dg.orbit_of(d)
    moves = []
    if label.parity == 0:
        for m in dg.admissible_moves(d):
            target = dg.apply_move(d, m)
            moves.append({"move": str(m), "target": target.bits, "target_class": _key_name(dg.class_label(target).key)})
    res = {
        "bits": d.bits,
        "matrix": _matrix(d),
        "class": _key_name(label.key),
        "alpha": label.alpha,
        "beta": label.beta,
        "parity": "odd" if label.parity else "even",
        "oval_colors": list(d.oval_colors),
        "bridge_colors": {f"b{i}{j}": c for (i, j), c in sorted(d.bridge_colors.items())},
        "orbit_representative": orbit.representative.bits,
        "orbit_size": orbit.size,
        "moves": moves,
        "gamma": None,
        "monodromy": None,
    }
    if label.parity == 0:
        phi = build_phi(d)
        group = dg.monodromy_group(d, phi)
        res["gamma"] = _edges(dg.gamma_graph(d, phi))
        res["monodromy"] = {
            "group": group.name,
            "order": group.order,
            "oval_permutations": [list(s) for s in group.elements],
            "point_permutations": [list(p) for p in group.lifted],
            "vertex_orbits": dg.count_orbits(group.lifted, 8),
        }
    else:
        rep.warnings.append("odd diagram: wall-crossing moves, collision graph and monodromy are defined for even diagrams only")
    rep.results = res
    rep.tables.append(Table("diagram", ["field", "value"],
                            [[k, json.dumps(v)] if not isinstance(v, (str, int)) else [k, v] for k, v in res.items()]))


def _octad_verify(pts, args, rep):
    r = nets.verify_octad(pts)
    rep.results = r.as_dict()
    rep.tables.append(Table("verify", ["field", "value"], [[k, json.dumps(v)] for k, v in rep.results.items()]))


def _octad_complete(pts, args, rep):
    y = nets.complete_octad(pts)
    octad = list(pts) + [y]
    rep.results = {"point": _point(y), "octad": [_point(p) for p in octad],
                   "classification": nets.verify_octad(octad).classification}
    rep.tables.append(Table("complete", ["x0", "x1", "x2", "x3"], [_point(y)]))


def _net_for(pts):
    if len(pts) == 8:
        r = nets.verify_octad(pts)
        if not (r.distinct and r.net_condition):
            raise nets.DegenerateInput("the 8 points are not the base locus of a net")
    return nets.net_through(pts)


def _octad_hessian(pts, args, rep):
    net = _net_for(pts)
    h = nets.hessian(net)
    agrees = nets.hessian_by_interpolation(net) == h
    coeffs = list(h.integer_coefficients())
    rep.results = {
        "net": [[list(r) for r in g.matrix] for g in net.generators],
        "monomials": ["t0^%d t1^%d t2^%d" % e for e in nets.QUARTIC_MONOMIALS],
        "coefficients": [str(c) for c in coeffs],
        "interpolation_agrees": agrees,
    }
    if not agrees:
        rep.warnings.append("expansion and interpolation disagree")
    rep.tables.append(Table("hessian", ["monomial", "coefficient"],
                            [[m, c] for m, c in zip(rep.results["monomials"], rep.results["coefficients"])]))


def _octad_chirality(pts, args, rep):
    rep.results = chirality.chirality(pts)
    rows = [["sign", rep.results["sign"]]]
    rows += [[f"sign(X,x{k})", s] for k, s in enumerate(rep.results.get("signs", []))]
    rep.tables.append(Table("chirality", ["field", "value"], rows))


def _octad_ovals(pts, args, rep):
    net = _net_for(pts)
    depth = args.depth or ovals.DEFAULT_DEPTH
    count, stable = ovals.count_ovals(nets.conditioned_hessian(net), depth=depth)
    rep.results = {"count": count, "stabilized": stable, "depth": depth}
    rep.warnings.append("grid-based count of real components; not a certified topology")
    if not stable:
        rep.warnings.append(f"count changed between depth {depth - 1} and {depth}")
    rep.tables.append(Table("ovals", ["count", "stabilized", "depth"], [[count, stable, depth]]))


OCTAD_ACTIONS: dict[str, tuple[tuple[int, ...], Callable]] = {
    "verify": ((8,), _octad_verify),
    "complete": ((7,), _octad_complete),
    "hessian": ((7, 8), _octad_hessian),
    "chirality": ((6, 7, 8), _octad_chirality),
    "ovals": ((7, 8), _octad_ovals),
}


def cmd_octad(args, rep: CommandReport):
    counts, action = OCTAD_ACTIONS[args.action]
    pts = read_config(args.file, counts)
    rep.inputs["points"] = [_point(p) for p in pts]
    action(pts, args, rep)


def cmd_m1(args, rep: CommandReport):
    rep.results = dg.m1_diagram_checks()
    rep.tables.append(Table("m1", ["diagram", "opposite_colors", "group", "order", "group_ok", "gamma_ok"],
                            [[r["diagram"], r["opposite_colors"], r["group"], r["group_order"],
                              r["group_matches_expected"], r["gamma_matches_expected"]] for r in rep.results["diagrams"]]))


# -- parsing and output -----------------------------------------------------------


def _bits(text: str) -> str:
    if len(text) != 6 or set(text) - {"0", "1"}:
        raise argparse.ArgumentTypeError(f"expected 6 binary digits, got {text!r}")
    return text


def _depth(text: str) -> int:
    n = int(text)
    if not 2 <= n <= 12:
        raise argparse.ArgumentTypeError("depth must be between 2 and 12")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    p = _Parser(prog="cayley-octads", description="Theta-diagram combinatorics and octad geometry.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("orbits", parents=[common], help="S4-orbits of theta-diagrams").set_defaults(func=cmd_orbits)
    sub.add_parser("tables", parents=[common], help="collision graphs, monodromy groups, vertex orbits").set_defaults(func=cmd_tables)
    sub.add_parser("adjacency", parents=[common], help="adjacency of coarse classes").set_defaults(func=cmd_adjacency)
    d = sub.add_parser("diagram", parents=[common], help="report on one 2x3 matrix")
    d.add_argument("bits", type=_bits, help="6 bits, row-major")
    d.set_defaults(func=cmd_diagram)
    o = sub.add_parser("octad", parents=[common], help="geometry of a point configuration file")
    o.add_argument("action", choices=tuple(OCTAD_ACTIONS))
    o.add_argument("file")
    o.add_argument("--depth", type=_depth, default=None, help=f"grid depth for ovals (default {ovals.DEFAULT_DEPTH})")
    o.set_defaults(func=cmd_octad)
    sub.add_parser("m1-check", parents=[common], help="(M-1) diagram checks").set_defaults(func=cmd_m1)
    return p


def run(argv: list[str]) -> tuple[CommandReport, str]:
    """Parse and execute; returns the report and the output format.

    Raises UsageError on malformed arguments.
    """
    args = build_parser().parse_args(argv)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "format") and v is not None}
    rep = CommandReport(args.command, inputs)
    try:
        args.func(args, rep)
    except OctadError as exc:
        rep.results = {}
        rep.tables = []
        rep.error = {"code": exc.code, "message": str(exc)}
        rep.exit_status = EXIT_DOMAIN
    except OSError as exc:
        rep.results = {}
        rep.tables = []
        rep.error = {"code": "io_error", "message": str(exc)}
        rep.exit_status = EXIT_DOMAIN
    return rep, args.format


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render(rep: CommandReport, fmt: str) -> tuple[str, str]:
    """(stdout text, stderr text)."""
    if fmt == "json":
        return json.dumps(rep.as_dict(), indent=2) + "\n", ""
    err = "".join(f"warning: {w}\n" for w in rep.warnings)
    if rep.error:
        err += f"error [{rep.error['code']}]: {rep.error['message']}\n"
        return "", err
    out = []
    if fmt == "tsv":
        for k, t in enumerate(rep.tables):
            if len(rep.tables) > 1:
                out.append(f"# {t.title}")
            out.append("\t".join(t.header))
            out += ["\t".join(_cell(c) for c in row) for row in t.rows]
            if k + 1 < len(rep.tables):
                out.append("")
        return "\n".join(out) + "\n", err
    for t in rep.tables:
        cells = [t.header] + [[_cell(c) for c in row] for row in t.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(t.header))]
        out.append(f"== {t.title} ==")
        out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
        out.append("")
    return "\n".join(out), err


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        rep, fmt = run(argv)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    out, err = render(rep, fmt)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
