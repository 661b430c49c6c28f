"""Command-line front end: ``latnrd {nrd,table,cone,voronoi,check}``.

Exit codes: 0 success, 1 mismatch in a table or check, 2 usage or bad
input, 3 input outside the mathematical domain (not positive definite,
gamma outside the cone, ...).
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from . import cone, dnstar, exact, oracles
from .core import FAMILIES, GramMatrix, lattice_name, root_lattice, sym_coords, sym_uncoords
from .errors import LatnrdError, MathDomainError
from .nrd import CRITERIA, nrd

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

TABLE = ([("A", 1, 1)]
         + [("A", n, n + 1) for n in range(2, 6)]
         + [("Astar", n, n * (n + 1) // 2) for n in range(1, 6)]
         + [("D", n, 1) for n in (4, 5, 6, 7)]
         + [("Dstar", 5, 5), ("Dstar", 7, 7), ("Dstar", 4, 1), ("Dstar", 6, 1)]
         + [(f, None, 1) for f in ("E6", "E6star", "E7", "E7star", "E8")])


class UsageError(Exception):
    pass


def fmt_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return [obj.numerator, obj.denominator]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def render(payload, fmt, csv_rows=None, text=None):
    """Serialize one command result. ``csv_rows`` and ``text`` are lazy views."""
    if fmt == "json":
        return json.dumps(_jsonable(payload)) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in csv_rows():
            w.writerow([fmt_rational(x) if isinstance(x, Fraction) else x for x in row])
        return buf.getvalue()
    return text()


def _emit(args, out):
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _matrix_text(g):
    return "\n".join("  " + " ".join(fmt_rational(x) for x in r) for r in g.entries)


# -- commands -------------------------------------------------------------

def _load_gram(path):
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read Gram file {path}: {exc}") from exc
    if isinstance(obj, list):
        obj = {"n": len(obj), "entries": obj}
    try:
        return GramMatrix.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed Gram file {path}") from exc


def _lattice_from_args(args):
    if args.gram:
        return Path(args.gram).name, _load_gram(args.gram)
    if not args.family:
        raise UsageError("give --family (with --n) or --gram")
    return lattice_name(args.family, args.n), root_lattice(args.family, args.n)


def cmd_nrd(args):
    name, g = _lattice_from_args(args)
    res = nrd(g, all_pairs=args.all_pairs, criterion=args.criterion)
    payload = res.to_json(name)
    if not args.span:
        payload.pop("span_basis")

    def rows():
        yield ["lattice", "n", "N", "rank", "nrd", "criterion"]
        yield [name, res.n, res.N, res.rank, res.nrd, res.criterion]

    def text():
        lines = [f"lattice {name}", f"n {res.n}", f"N {res.N}", f"rank {res.rank}",
                 f"nrd {res.nrd}", f"criterion {res.criterion}"]
        if args.span:
            for i, b in enumerate(res.span_basis):
                lines.append(f"span[{i}]")
                lines.append(_matrix_text(sym_uncoords(b)))
        return "\n".join(lines) + "\n"

    _emit(args, render(payload, args.format, rows, text))
    return EXIT_OK


def table_rows(only=None, criterion="delaunay"):
    out = []
    for family, n, expected in TABLE:
        name = lattice_name(family, n)
        if only and name not in only:
            continue
        got = nrd(root_lattice(family, n), criterion=criterion).nrd
        out.append({"lattice": name, "expected": expected, "computed": got,
                    "status": "PASS" if got == expected else "FAIL"})
    return out


def cmd_table(args):
    only = set(args.rows.split(",")) if args.rows else None
    rows = table_rows(only, args.criterion)
    if only and len(rows) != len(only):
        raise UsageError(f"unknown table rows: {sorted(only - {r['lattice'] for r in rows})}")
    keys = ["lattice", "expected", "computed", "status"]

    def text():
        return "".join(f"{r['lattice']:<8}{r['expected']:>6}{r['computed']:>6}  {r['status']}\n"
                       for r in rows)

    _emit(args, render({"rows": rows}, args.format,
                       lambda: [keys] + [[r[k] for k in keys] for r in rows], text))
    bad = [r for r in rows if r["status"] != "PASS"]
    for r in bad:
        print(f"mismatch {r['lattice']}: expected {r['expected']}, computed {r['computed']}",
              file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_cone(args):
    n = args.n
    if n is None:
        raise UsageError("cone needs --n")
    if args.domain == "G":
        h = dnstar.gn_hrep(n)
        expected = dnstar.gn_extreme_rays_closed_form(n) if n >= 4 else None
    else:
        h = dnstar.dn_ldomain_hrep(n)
        expected = None
        if n % 2 == 1:
            expected = sorted(cone.canonical_ray(sym_coords(dnstar.extreme_form(n, k, q)).coeffs)
                              for k in range(n) for q in (0, 1))
    rays = cone.extreme_rays(h)
    payload = {"domain": args.domain, "n": n, "dim": cone.cone_dim(h),
               "ray_count": len(rays), "rays": [list(r) for r in rays]}
    ok = True
    if expected is not None:
        payload["closed_form_match"] = rays == expected
        ok = rays == expected
    if args.oracle:
        brute = oracles.brute_force_rays(h)
        payload["oracle_match"] = brute == rays
        ok = ok and brute == rays

    def text():
        head = [f"domain {args.domain}", f"n {n}", f"dim {payload['dim']}",
                f"rays {len(rays)}"]
        return "\n".join(head + [" ".join(map(str, r)) for r in rays]) + "\n"

    _emit(args, render(payload, args.format, lambda: [list(r) for r in rays], text))
    return EXIT_OK if ok else EXIT_MISMATCH


def _gamma_from_args(args):
    if args.gamma:
        try:
            return dnstar.GammaVector.parse(args.gamma)
        except MathDomainError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.n is None:
        raise UsageError("voronoi needs --n or --gamma")
    return dnstar.GammaVector.ones(args.n)


def cmd_voronoi(args):
    gv = _gamma_from_args(args)
    if gv.tight_subsets() or gv.n % 2 == 0:
        report = dnstar.glue_vertices(gv)
        coords = list(report.vertices)
        payload = report.to_json()
    else:
        verts = dnstar.voronoi_vertices(gv)
        coords = [v.coords for v in verts]
        payload = {"tight_subsets": [], "vertex_count": len(verts),
                   "vertices": [v.to_json() for v in verts]}
    payload = {"n": gv.n, "gamma": [Fraction(x) for x in gv.gamma], **payload}
    ok = True
    if args.oracle:
        brute = oracles.polytope_vertices(dnstar.voronoi_hrep(gv))
        ok = brute == sorted(coords)
        payload["oracle_vertex_count"] = len(brute)
        payload["oracle_match"] = ok
    text = lambda: dnstar.off_dump(coords)  # noqa: E731
    _emit(args, render(payload, args.format, lambda: [list(c) for c in coords], text))
    return EXIT_OK if ok else EXIT_MISMATCH


def run_checks(n, oracle=False):
    """Cross-module consistency checks for one n; returns ``[(name, ok, detail)]``."""
    out = []
    m = n // 2
    gn = dnstar.gn_hrep(n)
    rays = cone.extreme_rays(gn)
    out.append(("gn_rays_closed_form", rays == dnstar.gn_extreme_rays_closed_form(n),
                f"{len(rays)} rays"))
    dh = dnstar.dn_ldomain_hrep(n)
    dim = cone.cone_dim(dh)
    want = n if n % 2 else 1
    out.append(("ldomain_dim", dim == want, f"dim {dim}"))
    g = dnstar.gamma_form(dnstar.GammaVector.ones(n))
    res = nrd(g)
    out.append(("nrd_matches_dim", res.nrd == want, f"nrd {res.nrd}"))
    eq_space = exact.kernel_basis([exact.integer_row(r) for r in dh.equalities], dh.dim)
    out.append(("span_equals_equalities",
                exact.same_span(list(res.span_basis), eq_space),
                f"{len(res.span_basis)} basis vectors"))
    if n % 2 == 1:
        ranks = dnstar.extreme_form_ranks(n)
        ok = all(r == (n - 1 if q == 0 else n) for (k, q), r in ranks.items())
        out.append(("extreme_form_ranks", ok, "f0 rank n-1, f1 rank n"))
        inc = cone.incidence(gn, rays)
        ok = True
        for (kind, S), row in zip(gn.labels, inc):
            on = {r for r, t in zip(rays, row) if t}
            zeros, ones, common = dnstar.facet_split(n, S)
            ok = ok and on == set(zeros) | set(ones) and len(zeros) == m + 1 and len(ones) == m
            ok = ok and [sum(c) for c in zip(*zeros)] == list(common) == [sum(c) for c in zip(*ones)]
        out.append(("facet_split", ok, f"{m + 1} + {m} rays per facet"))
        gv = dnstar.GammaVector.ones(n)
        verts = dnstar.voronoi_vertices(gv)
        out.append(("voronoi_vertices_valid", True, f"{len(verts)} vertices"))
        stated = 2 ** (m + 1) * comb(n, m)
        out.append(("voronoi_count", len(verts) == stated,
                    f"{len(verts)} vertices, 2^(m+1) C(n,m) = {stated}"))
        if oracle:
            brute = oracles.polytope_vertices(dnstar.voronoi_hrep(gv))
            out.append(("voronoi_oracle", brute == sorted(v.coords for v in verts),
                        f"{len(brute)} oracle vertices"))
    return out


def cmd_check(args):
    if args.n is None:
        raise UsageError("check needs --n")
    results = run_checks(args.n, args.oracle)
    payload = {"n": args.n, "checks": [{"name": a, "status": "PASS" if ok else "FAIL",
                                        "detail": d} for a, ok, d in results]}

    def text():
        return "".join(f"{'PASS' if ok else 'FAIL'} {a}: {d}\n" for a, ok, d in results)

    _emit(args, render(payload, args.format,
                       lambda: [["name", "status", "detail"]]
                       + [[a, "PASS" if ok else "FAIL", d] for a, ok, d in results], text))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MISMATCH


# -- argument parsing -----------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="latnrd", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--oracle", action="store_true", help="run brute-force cross-checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nrd", parents=[common], help="nrd of one lattice")
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--gram", help="Gram matrix JSON file")
    s.add_argument("--all-pairs", action="store_true")
    s.add_argument("--criterion", choices=CRITERIA, default="delaunay")
    s.add_argument("--span", action="store_true", help="include the span basis")
    s.set_defaults(func=cmd_nrd)

    s = sub.add_parser("table", parents=[common], help="reproduce the root-lattice table")
    s.add_argument("--rows", help="comma-separated subset, e.g. D4,E8")
    s.add_argument("--criterion", choices=CRITERIA, default="delaunay")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("cone", parents=[common], help="extreme rays of cl G_n or cl D_n")
    s.add_argument("--n", type=int)
    s.add_argument("--domain", choices=("G", "D"), default="G")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("voronoi", parents=[common], help="Voronoi vertices of L(gamma)")
    s.add_argument("--n", type=int)
    s.add_argument("--gamma", help="a/b,c/d,...")
    s.set_defaults(func=cmd_voronoi)

    s = sub.add_parser("check", parents=[common], help="consistency checks for one n")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, LatnrdError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
