"""Command-line interface.

Commands::

    algebra check FILE
    ar knit FILE [--dot]
    radical index FILE [--oracle]
    morphism depth FILE --source LIT --target LIT [--coords c1,c2,...]
    degree FILE --source LIT --target LIT [--coords ...]
    tilt check FILE --summands LIT
    tilt apr FILE --sink a
    tilt chain FILE --sinks a,b,...
    dynkin table --type D --n 5 [--sweep] [--all-orientations]
    verify --claim ID --instance FILE|BUILTIN [--summands LIT] [--sinks a,b]

FILE is a path to an algebra file or a builtin name.  Every command accepts
``--json``, ``--seed``, ``--cap``, ``--field`` and ``--timings``.  Exit code 0
means success, 1 a computation error (or a refuted claim), 2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import config
from .artrans import RepInfinite, knit_ar_quiver, require_finite
from .bench import CLAIMS, dynkin_index, orientation_sweep, resolve_instance, summary_table, tilt_chain, verify
from .catalog import BUILTINS, load_algebra, parse_module, parse_modules
from .field import field_from_spec
from .radcalc import calculus, nilpotency_index, nilpotency_index_oracle
from .repmod import hom_space
from .tiltkit import apr_tilt, index_comparison, is_free_sink, is_tilting

SCHEMA_VERSION = 1


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def _clean(x):
    """Replace float infinities (not valid JSON) recursively."""
    if isinstance(x, float) and math.isinf(x):
        return "infinite"
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    return x


def dumps(payload) -> str:
    return json.dumps(_clean(payload), default=_jsonable, ensure_ascii=False)


class Result:
    """Exit code, JSON payload and its text rendering."""

    def __init__(self, payload: dict, text: str, code: int = 0, lines: list[dict] | None = None):
        self.payload = payload
        self.text = text
        self.code = code
        self.lines = lines


# --------------------------------------------------------------------------
# command implementations


def _algebra(args):
    return load_algebra(args.file, args.field)


def _fmt_depth(d) -> str:
    return "infinite" if d == math.inf else str(int(d))


def cmd_algebra_check(args) -> Result:
    A = _algebra(args)
    sinks, sources, interior = A.sinks_sources()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "algebra": A.to_json(),
        "dim": A.dim,
        "cartan": [[int(x) for x in row] for row in A.cartan],
        "sinks": sorted(sinks, key=A.vertices.index),
        "sources": sorted(sources, key=A.vertices.index),
        "interior": sorted(interior, key=A.vertices.index),
    }
    text = A.to_text() + f"dim {A.dim}\nsinks {' '.join(payload['sinks'])}\nsources {' '.join(payload['sources'])}\n"
    return Result(payload, text)


def cmd_ar_knit(args) -> Result:
    A = _algebra(args)
    res = knit_ar_quiver(A)
    if isinstance(res, RepInfinite):
        payload = {"schema_version": SCHEMA_VERSION, "representation_finite": False, "reason": res.reason, "partial_nodes": len(res.partial.nodes)}
        return Result(payload, f"representation-infinite: {res.reason}\n")
    if args.dot:
        return Result({"schema_version": SCHEMA_VERSION, "dot": res.to_dot()}, res.to_dot())
    payload = {"representation_finite": True, **res.to_json()}
    lines = [f"{len(res.nodes)} indecomposables"]
    for n in res.nodes:
        succ = ", ".join(res.nodes[j].label for j in res.successors(n.index))
        lines.append(f"  {n.label:<12} dims {' '.join(map(str, n.dims))}" + (f"  -> {succ}" if succ else ""))
    return Result(payload, "\n".join(lines) + "\n")


def cmd_radical_index(args) -> Result:
    A = _algebra(args)
    rep = nilpotency_index(A)
    payload = {"schema_version": SCHEMA_VERSION, "r_A": rep.r, "R_A_0": rep.maximal_vertices, **{"vertices": rep.to_json()["vertices"]}}
    if args.oracle:
        payload["oracle"] = nilpotency_index_oracle(A)
    lines = [f"r_A = {rep.r}", f"(R_A)_0 = {{{', '.join(rep.maximal_vertices)}}}", f"{'vertex':>8} {'n_a':>4} {'m_a':>4} {'r_a':>4}"]
    for a, v in rep.table.items():
        lines.append(f"{a:>8} {v.n:>4} {v.m:>4} {v.r:>4}")
    if args.oracle:
        lines.append(f"oracle r_A = {payload['oracle']}")
    return Result(payload, "\n".join(lines) + "\n")


def _selected_maps(args):
    A = _algebra(args)
    X, Y = parse_module(A, args.source), parse_module(A, args.target)
    H = hom_space(X, Y)
    if args.coords:
        try:
            cs = [Fraction(c) for c in args.coords.split(",")]
        except ValueError:
            raise UsageError(f"bad --coords {args.coords!r}") from None
        if len(cs) != H.dim:
            raise UsageError(f"--coords needs {H.dim} entries (dim Hom)")
        return A, H, [H.element(cs)]
    return A, H, list(H.basis)


def cmd_morphism_depth(args) -> Result:
    A, H, maps = _selected_maps(args)
    rc = calculus(A)
    depths = [rc.depth(f) for f in maps]
    payload = {"schema_version": SCHEMA_VERSION, "hom_dim": H.dim, "selection": "coords" if args.coords else "basis", "depths": depths}
    text = f"dim Hom = {H.dim}\n" + "".join(f"  map {k + 1}: depth {_fmt_depth(d)}\n" for k, d in enumerate(depths))
    return Result(payload, text)


def cmd_degree(args) -> Result:
    A, H, maps = _selected_maps(args)
    rc = calculus(A)
    rows = [{"depth": rc.depth(f), "left_degree": rc.left_degree(f), "right_degree": rc.right_degree(f)} for f in maps]
    payload = {"schema_version": SCHEMA_VERSION, "hom_dim": H.dim, "maps": rows}
    text = f"dim Hom = {H.dim}\n" + "".join(
        f"  map {k + 1}: depth {_fmt_depth(r['depth'])}, left degree {_fmt_depth(r['left_degree'])}, right degree {_fmt_depth(r['right_degree'])}\n"
        for k, r in enumerate(rows)
    )
    return Result(payload, text)


def _tilt_payload(d) -> tuple[dict, str]:
    side = d.b_side()
    G = d.gamma
    comp = index_comparison(d)
    payload = {
        "schema_version": SCHEMA_VERSION,
        **d.to_json(),
        "B": d.B.to_text(),
        "B_dim": d.B.dim,
        "B_representation_finite": side["representation_finite"],
        "splitting": side["splitting"],
        "index_comparison": comp,
    }
    if side["representation_finite"]:
        GB = side["gamma"]
        payload["Y"] = {G.nodes[i].label: GB.nodes[j].dims for i, j in side["Y"].items()}
        payload["X"] = {G.nodes[i].label: GB.nodes[j].dims for i, j in side["X"].items()}
    else:
        payload["B_reason"] = side["reason"]
    lines = [
        "T is tilting: " + " + ".join(f"{s.label or 'T' + str(k + 1)} -> {d.presentation.vertex(k)}" for k, s in enumerate(d.summands)),
        f"torsion class:      {', '.join(G.nodes[i].label for i in d.torsion)}",
        f"torsion-free class: {', '.join(G.nodes[i].label for i in d.torsion_free) or '(empty)'}",
        f"separating: {d.separating}",
        f"splitting: {'unknown (B representation-infinite)' if side['splitting'] is None else side['splitting']}",
        f"r_A = {comp['r_A']}, r_B = {comp['r_B'] if comp['r_B'] is not None else 'n/a'}",
        "B = End(T):",
        d.B.to_text().rstrip(),
    ]
    return payload, "\n".join(lines) + "\n"


def cmd_tilt_check(args) -> Result:
    A = _algebra(args)
    lit = args.summands
    if lit is None:
        b = BUILTINS.get(args.file)
        if b is None or not b.tilting:
            raise UsageError("--summands is required")
        lit = b.tilting[0]
    d = is_tilting(A, parse_modules(A, lit))
    payload, text = _tilt_payload(d)
    return Result(payload, text)


def cmd_tilt_apr(args) -> Result:
    A = _algebra(args)
    d = apr_tilt(A, args.sink)
    payload, text = _tilt_payload(d)
    payload["free_sink"] = is_free_sink(A, args.sink)
    return Result(payload, text + f"free sink: {payload['free_sink']}\n")


def cmd_tilt_chain(args) -> Result:
    A = _algebra(args)
    sinks = [s for s in (args.sinks or "").split(",") if s]
    if args.sinks is None:
        b = BUILTINS.get(args.file)
        if b is not None and b.chains:
            sinks = list(b.chains[0])
    rep = tilt_chain(A, sinks)
    payload = {"schema_version": SCHEMA_VERSION, "sinks": sinks, **rep.to_json()}
    lines = [f"{'stage':>5} {'sink':>5} {'free':>5} {'r':>4}"]
    for k, s in enumerate(rep.stages):
        lines.append(f"{k:>5} {s.sink or '-':>5} {('-' if s.free is None else str(s.free)):>5} {('inf' if s.r is None else s.r):>4}")
    lines.append(f"monotone: {rep.monotone}; free sinks keep the index: {rep.free_equal}")
    if rep.final_type:
        lines.append(f"ends at {rep.final_type[0]}{rep.final_type[1]}; bound {rep.bound}; every stage within bound: {rep.within_bound}")
    if rep.stopped:
        lines.append(f"stopped: {rep.stopped}")
    return Result(payload, "\n".join(lines) + "\n", 0 if rep.ok else 1)


def cmd_dynkin_table(args) -> Result:
    F = field_from_spec(args.field)
    if args.sweep or args.all_orientations:
        rep = orientation_sweep(args.type, args.n, True if args.all_orientations else None, F)
        payload = {"schema_version": SCHEMA_VERSION, **rep.to_json(args.timings)}
        lines = [f"{'orientation':<12} {'r_H':>4} {'r_a':>4} {'nodes':>6}"]
        for r in rep.rows:
            lines.append(f"{r.orientation:<12} {r.r:>4} {r.vertex_r if r.vertex_r is not None else '-':>4} {r.nodes:>6}")
        lines.append(f"{rep.kind}{rep.n}: r_H = {', '.join(map(str, payload['r_values']))} (expected {payload['expected']})")
        return Result(payload, "\n".join(lines) + "\n", 0 if rep.ok else 1)
    r = dynkin_index(args.type, args.n, args.orientation, F)
    payload = {"schema_version": SCHEMA_VERSION, **r.to_json(args.timings)}
    text = f"{r.kind}{r.n} ({r.orientation or 'single vertex'}): r_H = {r.r}, r_a = {r.vertex_r}, {r.nodes} indecomposables\n"
    return Result(payload, text, 0 if r.ok else 1)


def cmd_verify(args) -> Result:
    claims = list(CLAIMS) if args.claim == "all" else args.claim.split(",")
    inst = resolve_instance(args.instance, tilting=args.summands, chain=args.sinks, field=args.field)
    reports = [verify(c, inst) for c in claims]
    lines = [r.to_json(args.timings) for r in reports]
    code = 1 if any(r.status == "refuted" for r in reports) else 0
    payload = {"schema_version": SCHEMA_VERSION, "reports": lines}
    return Result(payload, summary_table(reports) + "\n", code, lines=lines)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="random seed for decompositions")
    common.add_argument("--cap", type=int, default=None, help="node cap for knitting")
    common.add_argument("--field", default=None, help="Q (default) or Fp:p")
    common.add_argument("--timings", action="store_true", help="include runtimes (breaks byte-identical output)")

    p = _Parser(prog="radtilt", description="AR quivers, radical powers and tilting for bound quiver algebras")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def file_cmd(parent, name, fn, help_):
        c = parent.add_parser(name, parents=[common], help=help_)
        c.add_argument("file", help="algebra file or builtin name")
        c.set_defaults(fn=fn)
        return c

    g = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    file_cmd(g, "check", cmd_algebra_check, "parse and summarize an algebra")

    g = sub.add_parser("ar").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = file_cmd(g, "knit", cmd_ar_knit, "knit the AR quiver")
    c.add_argument("--dot", action="store_true", help="emit Graphviz DOT")

    g = sub.add_parser("radical").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = file_cmd(g, "index", cmd_radical_index, "nilpotency index and per-vertex table")
    c.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")

    def map_args(c):
        c.add_argument("--source", required=True, help="module literal, e.g. S(2)")
        c.add_argument("--target", required=True, help="module literal, e.g. I(2)")
        c.add_argument("--coords", default=None, help="coefficients in the Hom basis; default: every basis map")

    g = sub.add_parser("morphism").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    map_args(file_cmd(g, "depth", cmd_morphism_depth, "depth of morphisms"))
    c = sub.add_parser("degree", parents=[common], help="left and right degrees of morphisms")
    c.add_argument("file")
    map_args(c)
    c.set_defaults(fn=cmd_degree)

    g = sub.add_parser("tilt").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = file_cmd(g, "check", cmd_tilt_check, "certify a tilting module")
    c.add_argument("--summands", default=None, help='e.g. "P(1)+P(2)+P(3)+S(3)"')
    c = file_cmd(g, "apr", cmd_tilt_apr, "APR tilt at a sink")
    c.add_argument("--sink", required=True)
    c = file_cmd(g, "chain", cmd_tilt_chain, "run a chain of APR tilts")
    c.add_argument("--sinks", default=None, help="comma-separated sinks")

    g = sub.add_parser("dynkin").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("table", parents=[common], help="nilpotency index of a Dynkin path algebra")
    c.add_argument("--type", required=True, choices=["A", "D", "E"])
    c.add_argument("--n", required=True, type=int)
    c.add_argument("--orientation", default=None, help="one +/- per edge")
    c.add_argument("--sweep", action="store_true", help="all orientations (one for E7, E8)")
    c.add_argument("--all-orientations", action="store_true", help="all orientations, also for E7, E8")
    c.set_defaults(fn=cmd_dynkin_table)

    c = sub.add_parser("verify", parents=[common], help="check a claim on an instance")
    c.add_argument("--claim", required=True, help=f"claim id, comma list, or 'all'; known: {', '.join(CLAIMS)}")
    c.add_argument("--instance", required=True, help="algebra file or builtin name")
    c.add_argument("--summands", default=None, help="tilting module literal")
    c.add_argument("--sinks", default=None, help="APR chain")
    c.set_defaults(fn=cmd_verify)
    return p


def _error_payload(exc: BaseException) -> dict:
    code = getattr(exc, "code", None)
    if not isinstance(code, str):
        code = "internal"
    return {"schema_version": SCHEMA_VERSION, "error": {"code": code, "type": type(exc).__name__, "message": str(exc)}}


def run(argv=None) -> Result:
    """Parse argv and execute; never raises."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return Result(_error_payload(exc), f"error: {exc}\n{parser.format_usage()}", 2)
    except SystemExit as exc:  # --help
        return Result({}, "", int(exc.code or 0))
    config.set_seed(args.seed if args.seed is not None else config.DEFAULT_SEED)
    if args.cap is not None:
        config.set_node_cap(args.cap)
    try:
        if args.field is not None:
            field_from_spec(args.field)
        res = args.fn(args)
    except UsageError as exc:
        return Result(_error_payload(exc), f"error: {exc}\n", 2)
    except Exception as exc:  # every failure becomes a structured error
        return Result(_error_payload(exc), f"error [{_error_payload(exc)['error']['code']}]: {exc}\n", 1)
    res.json = args.json
    return res


def main(argv=None) -> int:
    res = run(argv)
    as_json = getattr(res, "json", False) or (res.code != 0 and "error" in res.payload and "--json" in (argv or sys.argv[1:]))
    if as_json:
        if res.lines is not None:
            for line in res.lines:
                sys.stdout.write(dumps(line) + "\n")
        else:
            sys.stdout.write(dumps(res.payload) + "\n")
    elif res.code != 0 and "error" in res.payload:
        sys.stderr.write(res.text)
    else:
        sys.stdout.write(res.text)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
