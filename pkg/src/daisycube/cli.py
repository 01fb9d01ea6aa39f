"""Command-line front end.

Subcommands
-----------
build    close a named family or a generator file; write the vertex set
census   count induced cubes by dimension and distance from an anchor
series   per-n W / C / D polynomials from the generating functions
verify   run identity checks and print pass/fail reports

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.

Usage examples
--------------
  daisycube build --family lucas --n 4
  daisycube census --family vertex-deleted --n 3 --anchor 000
  daisycube series --family lucas --m 6 --format json
  daisycube verify --suite paper --max-n 8
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitword import Word, parse
from .census import (
    ENGINES,
    AnchorError,
    CensusMismatch,
    compute_census,
    cube_poly,
    distance_poly,
    generating_functions,
    series_table,
    weight_poly,
)
from .family import (
    FAMILIES,
    DaisyCube,
    VertexSet,
    downward_closure,
    format_vertex_file,
    named_family,
    read_vertex_file,
)
from .poly import substitute_sum, substitute_univariate_shift
from .verify import SINGLE_GRAPH_CHECKS, run_paper_suite, run_tasks, summarize

SERIES_FAMILIES = ("hypercube", "lucas", "fibonacci")
MAX_SERIES_M = 30


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=sorted(FAMILIES), help="named daisy-cube family")
    p.add_argument("--generators", metavar="PATH", help="generator file (closed downward on load)")
    p.add_argument("--vertices", metavar="PATH", help="raw vertex set, used as given")
    p.add_argument("--n", type=int, help="word length for --family")
    p.add_argument("--k", type=int, help="forbidden run length for --family run-free")


def _add_output_args(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="daisycube", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a daisy cube and write its vertex set")
    _add_graph_args(p)
    _add_output_args(p)

    p = sub.add_parser("census", help="distance cube census at an anchor")
    _add_graph_args(p)
    p.add_argument("--anchor", metavar="WORD", help="anchor vertex (default 0^n)")
    p.add_argument("--engine", choices=ENGINES, default="auto")
    _add_output_args(p, ("text", "json", "csv"))

    p = sub.add_parser("series", help="generating-function coefficients per n")
    p.add_argument("--family", choices=SERIES_FAMILIES, required=True)
    p.add_argument("--m", type=int, default=10, help=f"highest power of z (<= {MAX_SERIES_M})")
    _add_output_args(p)

    p = sub.add_parser("verify", help="run identity checks")
    _add_graph_args(p)
    p.add_argument("--suite", choices=("paper",), help="run the full check matrix")
    p.add_argument("--check", choices=sorted(SINGLE_GRAPH_CHECKS), help="single check on one graph")
    p.add_argument("--anchor", metavar="WORD", help="anchor for symmetry / partial-cube")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=100, help="number of random generator sets")
    _add_output_args(p)
    return parser


# -- input -----------------------------------------------------------------------

def load_graph(args) -> DaisyCube | VertexSet:
    sources = [s for s in ("family", "generators", "vertices") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --generators, --vertices")
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        return named_family(args.family, args.n, args.k)
    if args.n is not None:
        raise UsageError("--n applies only to --family")
    if args.generators:
        return downward_closure(read_vertex_file(args.generators))
    V = read_vertex_file(args.vertices)
    return DaisyCube.from_vertex_set(V) if V.is_downward_closed() else V


def _anchor(args, n: int) -> Word:
    if not args.anchor:
        return Word.zeros(n)
    u = parse(args.anchor)
    if u.n != n:
        raise UsageError(f"anchor {args.anchor} has length {u.n}, graph words have length {n}")
    return u


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _name(G) -> str:
    return (G.name if isinstance(G, DaisyCube) else None) or "custom"


# -- commands --------------------------------------------------------------------

def cmd_build(args) -> int:
    G = load_graph(args)
    if not isinstance(G, DaisyCube):
        G = downward_closure(G)
    V = G.vertices
    edges = V.edge_count()
    if args.format == "json":
        doc = {
            "graph": _name(G),
            "n": G.n,
            "vertices": V.strings(),
            "maximal": G.maximal.strings(),
            "counts": {"vertices": len(V), "edges": edges, "maximal": len(G.maximal)},
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        header = [
            f"daisy cube {_name(G)}, n={G.n}",
            f"vertices: {len(V)}",
            f"edges: {edges}",
            f"maximal: {len(G.maximal)}",
            "maximal vertices: " + " ".join(G.maximal.strings()),
        ]
        text = format_vertex_file(V, header)
    _emit(text, args)
    if args.out:
        print(f"vertices: {len(V)}\nedges: {edges}\nmaximal: {len(G.maximal)}")
    return 0


def cmd_census(args) -> int:
    G = load_graph(args)
    u = _anchor(args, G.n)
    census, engine = compute_census(G, u, args.engine)
    D, C, W = distance_poly(census), cube_poly(census), weight_poly(census)
    agree = "yes" if engine == "both" else "n/a"
    if args.format == "csv":
        text = census.to_csv()
    elif args.format == "json":
        doc = {
            "graph": _name(G),
            "n": G.n,
            "anchor": str(u),
            "engine": engine,
            "engines_agree": agree,
            "census": [{"k": k, "d": d, "count": c} for k, d, c in census.rows()],
            "D": D.to_dict(),
            "C": C.to_dict(),
            "W": W.to_dict(),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [
            f"# graph {_name(G)} n={G.n} anchor={u or '(empty)'} engine={engine} engines_agree={agree}",
            census.to_csv().rstrip("\n"),
            f"D = {D}",
            f"C = {C}",
            f"W = {W}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return 0


def cmd_series(args) -> int:
    if not 0 <= args.m <= MAX_SERIES_M:
        raise UsageError(f"--m must be in [0, {MAX_SERIES_M}]")
    rows = series_table(args.family, args.m)
    ok_g = all(r["g"] == substitute_univariate_shift(r["f"]) for r in rows)
    ok_h = all(r["h"] == substitute_sum(r["f"]) for r in rows)
    gfs = generating_functions(args.family)
    checks = {"g=f(x+1,z)": "pass" if ok_g else "fail", "h=f(x+y,z)": "pass" if ok_h else "fail"}
    if args.format == "json":
        doc = {
            "family": args.family,
            "m": args.m,
            "rational": gfs is not None,
            "coefficients": [
                {"n": i, "f": r["f"].to_dict(), "g": r["g"].to_dict(), "h": r["h"].to_dict()}
                for i, r in enumerate(rows)
            ],
            "checks": checks,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        source = "rational generating functions" if gfs else "closed form of W"
        lines = [f"# {args.family}, z^0..z^{args.m}, from {source}"]
        for i, r in enumerate(rows):
            lines.append(f"n={i}")
            lines.extend(f"  {name} = {r[name]}" for name in ("f", "g", "h"))
        lines.extend(f"check {name}: {verdict}" for name, verdict in checks.items())
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return 0 if ok_g and ok_h else 1


def cmd_verify(args) -> int:
    if bool(args.suite) == bool(args.check):
        raise UsageError("give exactly one of --suite or --check")
    if args.suite:
        reports = run_paper_suite(max_n=args.max_n, seed=args.seed, n_random=args.random)
    else:
        G = load_graph(args)
        fn = SINGLE_GRAPH_CHECKS[args.check]
        kwargs = {}
        if args.check in ("symmetry", "partial-cube") and args.anchor:
            kwargs["anchor"] = _anchor(args, G.n)
        if args.check != "partial-cube" and not isinstance(G, DaisyCube):
            raise UsageError(f"check {args.check!r} needs a downward-closed vertex set")
        if args.check == "w-relations" and args.family in ("fibonacci", "lucas", "hypercube"):
            kwargs["family"] = args.family
        reports = run_tasks([(fn, (G,), kwargs)])
    failed = sum(not r.passed for r in reports)
    if args.format == "json":
        text = "".join(r.to_json() + "\n" for r in reports)
    else:
        lines = [r.to_text() for r in reports]
        for name, tally in summarize(reports).items():
            lines.append(f"# {name}: {tally['pass']} pass, {tally['fail']} fail")
        lines.append(f"# total: {len(reports)} checks, {failed} failed")
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return 1 if failed else 0


COMMANDS = {"build": cmd_build, "census": cmd_census, "series": cmd_series, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CensusMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, AnchorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
