"""Command-line front end.

Exit codes: 0 success, 1 verification failed (or a search beat a proven
bound), 2 input error, 3 time budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import constructions, formulas
from .arcs import format_arc, parse_arc
from .chords import (all_maximum_families, format_family, helly_certificate,
                     max_pairwise_family, parse_family)
from .errors import ArcsysError, BudgetExceeded
from .intersection import intersection_matrix, intersection_number
from .lifts import intersection_number_lifts
from .render import render_chords, render_system
from .surface import parse_gluing
from .systems import (DEFAULT_TIME_BUDGET, EndpointFilter, SearchConfig, extremal_search,
                      format_system, parse_system, verify_k_system)

OK, FAILED, INPUT_ERROR, BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_system(path: str):
    return parse_system(_read(path))


def _expected_size(name: str, args, system) -> int | None:
    x = system.surface.abs_chi
    if name == "polygon":
        return formulas.f_arcs(x)
    if name == "triangulation":
        return formulas.disjoint_arcs(x)
    if name == "concentric":
        return formulas.k_system_lower(args.chi, args.k)
    if name in ("same-puncture", "two-punctures"):
        return formulas.punctured_sphere_arcs(args.chi)
    if name == "tetrahedron":
        return 12
    return None


def cmd_surface(args):
    g = parse_gluing(args.word)
    info = g.summary()
    text = (f"surface {g.word}: chi={g.euler} genus={g.genus} punctures={g.punctures}\n"
            f"cusp cycles: {' '.join('{' + ','.join(map(str, c)) + '}' for c in g.cusp_cycles)}")
    return OK, info, info, text


def cmd_construct(args):
    name = args.name
    if name in ("polygon", "triangulation"):
        if args.chi is None and args.gluing is None:
            raise InputError(f"{name} needs --chi or --gluing")
    elif name == "concentric":
        if args.chi is None or args.k is None:
            raise InputError("concentric needs --chi and --k")
    elif name != "tetrahedron" and args.chi is None:
        raise InputError(f"{name} needs --chi")
    system = constructions.build(name, chi=args.chi, k=args.k, gluing=args.gluing)
    body = format_system(system)
    if args.out:
        Path(args.out).write_text(body)
    expected = _expected_size(name, args, system)
    result = {"name": name, "size": len(system), "expected": expected,
              "arcs": [format_arc(a) for a in system.arcs]}
    if args.out:
        result["file"] = args.out
    text = body if not args.out else ""
    text += f"# {name}: {len(system)} arcs (closed form {expected})"
    return OK, system.surface.summary(), result, text


def cmd_verify(args):
    system = _load_system(args.file)
    rep = verify_k_system(system, args.k)
    result = rep.to_json([a for a in system.arcs])
    lines = [f"{len(system)} arcs, max pairwise intersection {rep.max_pair}: "
             f"{'is' if rep.ok else 'is NOT'} a {args.k}-system"]
    for i, j, v in rep.witnesses[:20]:
        lines.append(f"  i({format_arc(system.arcs[i])}, {format_arc(system.arcs[j])}) = {v}")
    if len(rep.witnesses) > 20:
        lines.append(f"  ... {len(rep.witnesses) - 20} more")
    return (OK if rep.ok else FAILED), system.surface.summary(), result, "\n".join(lines)


def cmd_isect(args):
    if args.file:
        system = _load_system(args.file)
        mat = intersection_matrix(system)
        result = {"arcs": [format_arc(a) for a in system.arcs], "matrix": mat.tolist()}
        width = max(len(str(v)) for row in mat.tolist() for v in row) if len(system) else 1
        text = "\n".join(" ".join(str(v).rjust(width) for v in row) for row in mat.tolist())
        return OK, system.surface.summary(), result, text
    if not (args.surface and args.arcs and len(args.arcs) == 2):
        raise InputError("isect needs a system file, or --surface with two arcs")
    g = parse_gluing(args.surface)
    a, b = (parse_arc(t, g) for t in args.arcs)
    value = intersection_number(a, b)
    result = {"arcs": [format_arc(a), format_arc(b)], "intersection": value}
    text = f"i({format_arc(a)}, {format_arc(b)}) = {value}"
    code = OK
    if args.lifts:
        lc = intersection_number_lifts(a, b)
        result["lifts"] = {"count": lc.count, "stabilized": lc.stabilized, "radius": lc.radius}
        text += f"\nlift count {lc.count} (radius {lc.radius}, {'stable' if lc.stabilized else 'not stable'})"
        if lc.stabilized and lc.count != value:
            code = FAILED
    return code, g.summary(), result, text


def _cusps(token: str, g, p_prime: int) -> set[int]:
    out = set()
    for part in token.split(","):
        part = part.strip()
        if part == "p":
            out.add(g.cusp_of_corner(0))
        elif part in ("p'", "pp", "p-prime"):
            out.add(p_prime)
        elif part.isdigit():
            out.add(int(part))
        else:
            raise InputError(f"bad cusp {part!r}: use p, p', or a cusp id")
    return out


def cmd_search(args):
    g = parse_gluing(args.word)
    if args.max_word_len < 0 or args.k < 0:
        raise InputError("--k and --max-word-len must be non-negative")
    if (args.from_ is None) != (args.to is None):
        raise InputError("--from and --to go together")
    flt = EndpointFilter()
    if args.from_ is not None:
        # p' is the cusp at the last corner of the sphere word
        p_prime = g.cusp_of_corner(g.sides - 1)
        first, second = _cusps(args.from_, g, p_prime), _cusps(args.to, g, p_prime)
        if len(first) == 1 and len(second) == 1:
            flt = EndpointFilter.fixed(next(iter(first)), next(iter(second)))
        else:
            flt = EndpointFilter.bipartite(first, second)
        flt.check(g)
    cfg = SearchConfig(args.max_word_len, args.k, flt, args.time_budget)
    res = extremal_search(g, cfg)
    result = res.to_json()
    result["filter"] = flt.describe()
    text = (f"universe {res.universe_size} arcs (word length <= {res.max_word_len}); "
            f"largest {res.k}-system: {res.clique_size}"
            + ("" if res.bound is None else f" (closed form {res.bound})")
            + "\n" + "\n".join(f"  {a}" for a in result["best_system"]))
    return (FAILED if res.exceeds_bound else OK), g.summary(), result, text


def cmd_chords(args):
    l = args.points
    fam = max_pairwise_family(l)
    cert = helly_certificate(fam)
    result = {"l": l, "size": len(fam), "bound": formulas.chord_bound(l),
              "family": [list(c) for c in fam.chords], "certificate": cert.to_json()}
    ok = len(fam) == l and cert.ok
    text = (f"maximum pairwise intersecting family on {l} points: {len(fam)} chords\n"
            f"  {' '.join(f'{{{i},{j}}}' for i, j in fam.chords)}\n"
            f"  common point {cert.point}, centres distinct: {cert.centres_distinct}")
    if args.exhaustive:
        total = bad = 0
        for other in all_maximum_families(l):
            total += 1
            bad += not helly_certificate(other).ok
        result["maximum_families"] = total
        result["certificate_failures"] = bad
        ok = ok and bad == 0
        text += f"\n  {total} maximum families, {bad} without a certificate"
    if args.out:
        Path(args.out).write_text(format_family(fam))
    return (OK if ok else FAILED), None, result, text


def cmd_formula(args):
    if args.name not in formulas.FORMULAS:
        raise InputError(f"unknown formula {args.name!r}; choose from {', '.join(formulas.FORMULAS)}")
    try:
        value = formulas.evaluate(args.name, chi=args.chi, k=args.k, genus=args.genus)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    value = list(value) if isinstance(value, tuple) else value
    params = {"chi": args.chi, "k": args.k, "genus": args.genus}
    result = {"name": args.name, "params": {k: v for k, v in params.items() if v is not None}, "value": value}
    return OK, None, result, f"{args.name} = {value}"


def cmd_render(args):
    text = _read(args.file)
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    if first.startswith("chords"):
        try:
            fam = parse_family(text)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        svg, summary, kind = render_chords(fam), None, "chords"
    else:
        system = parse_system(text)
        svg, summary, kind = render_system(system), system.surface.summary(), "system"
    Path(args.out).write_text(svg)
    return OK, summary, {"kind": kind, "file": args.out}, f"wrote {args.out}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    parser = argparse.ArgumentParser(prog="arcsys", parents=[common],
                                     description="Arc systems on punctured surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("surface", parents=[common], help="invariants of a gluing word")
    p.add_argument("word")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("construct", parents=[common], help="build an extremal system")
    p.add_argument("name", choices=sorted(constructions.CONSTRUCTIONS))
    p.add_argument("--chi", type=int, help="|chi|")
    p.add_argument("--k", type=int)
    p.add_argument("--gluing", help="gluing word (polygon, triangulation)")
    p.add_argument("--out", help="write the system file here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check that a system file is a k-system")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("isect", parents=[common], help="intersection numbers")
    p.add_argument("file", nargs="?", help="system file (prints the matrix)")
    p.add_argument("--surface", help="gluing word for a pair of arcs")
    p.add_argument("--arcs", nargs=2, metavar="ARC")
    p.add_argument("--lifts", action="store_true", help="cross-check against lifted arcs")
    p.set_defaults(func=cmd_isect)

    p = sub.add_parser("search", parents=[common], help="largest k-system among short arcs")
    p.add_argument("word")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-word-len", type=int, default=4)
    p.add_argument("--from", dest="from_", help="cusps: p, p', ids, comma separated")
    p.add_argument("--to")
    p.add_argument("--time-budget", type=float, default=DEFAULT_TIME_BUDGET, help="seconds")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chords", parents=[common], help="pairwise intersecting chord families")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="certify every maximum family")
    p.add_argument("--out", help="write the family file here")
    p.set_defaults(func=cmd_chords)

    p = sub.add_parser("formula", parents=[common], help="closed-form bounds")
    p.add_argument("name")
    p.add_argument("--chi", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--genus", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("render", parents=[common], help="SVG of a system or chord file")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INPUT_ERROR
    as_json = getattr(args, "json", False)
    t0 = time.monotonic()
    try:
        code, surface, result, text = args.func(args)
    except BudgetExceeded as exc:
        code, surface, result, text = BUDGET, None, {"error": "budget", "message": str(exc)}, f"budget exhausted: {exc}"
    except (ArcsysError, InputError, ValueError) as exc:
        code, surface, result, text = INPUT_ERROR, None, {"error": type(exc).__name__, "message": str(exc)}, f"error: {exc}"
    verdict = {OK: "ok", FAILED: "failed", INPUT_ERROR: "input-error", BUDGET: "budget-exhausted"}[code]
    if as_json:
        report = {"command": [a for a in argv if a != "--json"], "surface": surface,
                  "result": result, "verdict": verdict}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        stream = sys.stderr if code in (INPUT_ERROR, BUDGET) else sys.stdout
        print(text, file=stream)
        if args.command == "search":
            print(f"elapsed {time.monotonic() - t0:.2f}s", file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
