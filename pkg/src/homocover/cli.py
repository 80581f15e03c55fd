"""Command line interface.

Subcommands read an instance file (``-`` or no argument means stdin) and
write a JSON report to stdout::

    homocover gen --kind sharp-simplex --d 2 --N 5 | homocover cover --theorem simplex

Exit codes: 0 success, 1 usage error, 2 hypothesis violated (``check``),
3 conclusion failed to verify (``cover``, ``inscribe``), 4 I/O or parse error.
"""
import argparse
import json
import sys
import time
from fractions import Fraction

import numpy as np

from .asymmetry import minkowski_sigma
from .covering import (
    cover_balls,
    cover_general,
    cover_simplex_facet_parallel,
    cover_symmetric,
    minimal_cover,
    verify_cover,
)
from .errors import HomocoverError, ParseError
from .generators import (
    gen_depth_k_grid,
    gen_sharp_simplex,
    gen_touching_chain,
    named_body,
)
from .geometry import Family, Homothet, Polytope, is_exact
from .inscribing import inscribe_dual
from .instance import (
    format_number,
    parse_instance_document,
    parse_number,
    serialize_instance,
)
from .separability import (
    DirectionSet,
    SeparationVerdict,
    check_depth_at_most_k,
    check_nonseparable,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_VERIFY = 3
EXIT_IO = 4

DEFAULT_TOLERANCE = 1e-9
DEFAULT_DIRECTIONS = 4096

_CONSTRUCTORS = {
    "balls": cover_balls,
    "symmetric": cover_symmetric,
    "general": cover_general,
    "simplex": cover_simplex_facet_parallel,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for hypothesis failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(x):
    if is_exact(x):
        return format_number(x)
    return float(x) + 0.0  # no negative zeros in reports


def _vec(v):
    return [_num(x) for x in (v.tolist() if isinstance(v, np.ndarray) else v)]


def _rational_hint(x, max_den=10_000):
    q = Fraction(x).limit_denominator(max_den)
    if abs(float(q) - x) <= 1e-9 * max(1.0, abs(x)):
        return format_number(q)
    return None


def verdict_dict(v: SeparationVerdict) -> dict:
    out = {"status": v.status, "mode": v.mode, "directions_tested": v.directions_tested}
    if v.max_depth is not None:
        out["max_depth"] = v.max_depth
    if v.witness is not None:
        u, offset = v.witness
        out["witness"] = {"direction": [float(x) for x in u], "offset": float(offset)}
    return out


def _hypothesis(family, mode, k=None, directions=DEFAULT_DIRECTIONS, seed=0):
    kwargs = {"count": directions, "seed": seed}
    if mode == "restricted" and not isinstance(family.body, Polytope):
        kwargs["directions"] = DirectionSet(np.eye(family.dimension), provenance="axes")
    if k is None:
        return check_nonseparable(family, mode, **kwargs)
    return check_depth_at_most_k(family, k, mode, **kwargs)


def _default_mode(family):
    return "exact-2d" if family.dimension == 2 else "sampled"


def homothet_dict(h: Homothet) -> dict:
    return {"translation": _vec(h.translation), "scale": _num(h.scale)}


def cover_report(
    family: Family,
    theorem: str,
    tightness=True,
    directions=DEFAULT_DIRECTIONS,
    seed=0,
    tolerance=DEFAULT_TOLERANCE,
):
    """Build the ``cover`` report (without timing) for ``family``."""
    result = _CONSTRUCTORS[theorem](family)
    verified = verify_cover(family, result.cover, tolerance)
    mode = "restricted" if theorem == "simplex" else _default_mode(family)
    report = {
        "command": "cover",
        "theorem": result.theorem,
        "hypothesis": verdict_dict(_hypothesis(family, mode, directions=directions, seed=seed)),
        "construction": dict(
            homothet_dict(result.cover),
            factor=_num(result.factor),
            total_scale=_num(family.total_scale()),
            normalization=_vec(result.normalization),
        ),
    }
    if result.sigma is not None:
        report["construction"]["sigma"] = float(result.sigma)
    report["verification"] = {"verified": verified, "tolerance": tolerance}
    if tightness:
        mc = minimal_cover(family, seed=seed)
        ratio = mc.scale / float(family.total_scale())
        report["tightness"] = {
            "minimal_scale": mc.scale,
            "minimal_translation": _vec(mc.translation),
            "ratio": ratio,
            "ratio_rational": _rational_hint(ratio),
        }
    report["warnings"] = list(result.warnings)
    return report, verified


def inscribe_report(
    family: Family, k: int, directions=DEFAULT_DIRECTIONS, seed=0, tolerance=DEFAULT_TOLERANCE
):
    result = inscribe_dual(family, k, tol=tolerance, directions=directions)
    report = {
        "command": "inscribe",
        "k": k,
        "hypothesis": verdict_dict(
            _hypothesis(family, _default_mode(family), k=k, directions=directions, seed=seed)
        ),
        "construction": homothet_dict(result.inscribed),
        "verification": {"verified": result.verified, "mode": result.verification},
    }
    return report, result.verified


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(report, args, started):
    if not args.no_timing:
        report["timing"] = {"elapsed_seconds": round(time.perf_counter() - started, 6)}
    _write(json.dumps(report, indent=2) + "\n", args.out)


def _load(args):
    family, metadata = parse_instance_document(_read(args.instance), strict=not args.lax)
    return family, metadata


def cmd_cover(args):
    family, _ = _load(args)
    report, ok = cover_report(
        family, args.theorem, not args.no_tightness, args.directions, args.seed, args.tolerance
    )
    return report, EXIT_OK if ok else EXIT_VERIFY


def cmd_inscribe(args):
    family, _ = _load(args)
    report, ok = inscribe_report(family, args.k, args.directions, args.seed, args.tolerance)
    return report, EXIT_OK if ok else EXIT_VERIFY


def cmd_check(args):
    family, _ = _load(args)
    mode = {"exact2d": "exact-2d"}.get(args.mode, args.mode)
    verdict = _hypothesis(family, mode, k=args.k, directions=args.directions, seed=args.seed)
    report = {
        "command": "check",
        "condition": "non-separable" if args.k is None else f"depth<={args.k}",
        "verdict": verdict_dict(verdict),
    }
    return report, EXIT_OK if verdict.ok else EXIT_HYPOTHESIS


def cmd_sigma(args):
    family, _ = _load(args)
    res = minkowski_sigma(family.body, method=args.method, tol=args.tolerance)
    report = {
        "command": "sigma",
        "sigma": res.sigma,
        "center": _vec(res.center),
        "iterations": res.iterations,
        "certified_gap": res.certified_gap,
    }
    return report, EXIT_OK


def cmd_gen(args):
    if args.kind == "sharp-simplex":
        inst = gen_sharp_simplex(args.d, args.N)
        family = inst.family
        meta = {
            "generator": "sharp-simplex",
            "d": args.d,
            "N": args.N,
            "exact_ratio": format_number(inst.exact_ratio),
        }
    elif args.kind == "chain":
        body = named_body(args.body, args.d)
        scales = None
        if args.scales:
            scales = [parse_number(s, "--scales") for s in args.scales.split(",")]
        n = len(scales) if scales else args.n
        family = gen_touching_chain(body, n, scales, seed=args.seed, collinear=args.collinear)
        meta = {"generator": "chain", "seed": args.seed, "collinear": args.collinear}
    else:
        body = named_body(args.body, 2)
        family = gen_depth_k_grid(body, args.k, args.per_row, args.row_gap)
        meta = {"generator": "depth-grid", "k": args.k, "per_row": args.per_row}
    _write(serialize_instance(family, meta), args.out)
    return None, EXIT_OK


def cmd_render(args):
    family, _ = _load(args)
    overlays = []
    for kind in args.overlay or ():
        if kind == "cover":
            overlays.append(("cover", _CONSTRUCTORS[args.theorem](family).cover))
        elif kind == "minimal":
            mc = minimal_cover(family, seed=args.seed)
            overlays.append(("minimal", Homothet(mc.translation, mc.scale)))
        elif kind == "inscribe":
            overlays.append(("inscribed", inscribe_dual(family, args.k).inscribed))
        elif kind == "body":
            overlays.append(("body", Homothet([0] * family.dimension, 1)))
    _write(render_svg(family, overlays), args.out)
    return None, EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    common.add_argument(
        "--tolerance", type=float, default=DEFAULT_TOLERANCE, help="numeric tolerance (default: 1e-9)"
    )
    common.add_argument(
        "--directions",
        type=int,
        default=DEFAULT_DIRECTIONS,
        help="sampled directions for d >= 3 checks and ball hulls (default: 4096)",
    )
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    reader = argparse.ArgumentParser(add_help=False)
    reader.add_argument("instance", nargs="?", default="-", help="instance file, '-' for stdin")
    reader.add_argument("--lax", action="store_true", help="warn on unknown fields instead of failing")

    parser = _Parser(
        prog="homocover",
        description="Covering and inscribing homothets for families of homothets of a convex body.",
        epilog="exit codes: 0 ok, 1 usage, 2 hypothesis violated, 3 verification failed, 4 I/O or parse error",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cover", parents=[common, reader], help="construct and verify a cover")
    p.add_argument("--theorem", choices=sorted(_CONSTRUCTORS), default="general")
    p.add_argument("--no-tightness", action="store_true", help="skip the minimal-cover ratio")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("inscribe", parents=[common, reader], help="inscribe (sum tau)/k K")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_inscribe)

    p = sub.add_parser("check", parents=[common, reader], help="check separability or depth")
    p.add_argument("--mode", choices=["exact2d", "restricted", "sampled"], default="exact2d")
    p.add_argument("--k", type=int, default=None, help="check depth <= k instead")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sigma", parents=[common, reader], help="asymmetry of the body")
    p.add_argument("--method", choices=["lp", "bisect"], default="lp")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("gen", parents=[common], help="write a generated instance")
    p.add_argument("--kind", choices=["sharp-simplex", "chain", "depth-grid"], required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--n", type=int, default=3, help="chain length")
    p.add_argument("--scales", help="comma-separated chain scales, e.g. 1,1/2,2.5")
    p.add_argument("--collinear", action="store_true")
    p.add_argument("--body", default="disk")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--per-row", type=int, default=1)
    p.add_argument("--row-gap", type=float, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", parents=[common, reader], help="draw a planar instance as SVG")
    p.add_argument(
        "--overlay", action="append", choices=["cover", "minimal", "inscribe", "body"]
    )
    p.add_argument("--theorem", choices=sorted(_CONSTRUCTORS), default="general")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and usage errors; report the code instead of exiting
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "kind", None) == "depth-grid" and args.row_gap is None:
        args.row_gap = 10 * args.per_row * named_body(args.body, 2).diameter()
    started = time.perf_counter()
    try:
        report, code = args.func(args)
    except (OSError, ParseError) as exc:
        print(f"homocover: {exc}", file=sys.stderr)
        return EXIT_IO
    except HomocoverError as exc:
        print(f"homocover: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report is not None:
        _emit(report, args, started)
    return code


if __name__ == "__main__":
    sys.exit(main())
