"""Command-line interface: frames, Bertrand curves, surfaces, evolutes and verification.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import dataclasses
import io
import sys
from typing import BinaryIO

from .bertrand import BertrandConfig, BertrandCurve
from .curve_dsl import (
    PRESETS,
    Curve,
    Space,
    UnitSpeedCurve,
    load_curve_file,
    parse_expression,
    preset,
    validate_on_sphere,
    validate_unit_speed,
)
from .curve_dsl.expr import contains_variable, evaluate
from .errors import BadParameter, GeometryError, IoError, NotOnSphere
from .frenet import frenet
from .io_export import VerificationReport, write_csv, write_obj, write_report
from .slope_surface import Cone, SurfaceConfig, generate_mesh
from .spherical_frames import evolute, sabban_frame
from .suite import curve_checks, example_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def number(text: str) -> float:
    """A constant expression such as ``1.5``, ``e`` or ``pi/2``."""
    try:
        node = parse_expression(text)
    except GeometryError as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc}") from None
    if contains_variable(node):
        raise argparse.ArgumentTypeError(f"{text!r} must not contain v")
    return evaluate(node, 0.0)


def interval(text: str) -> tuple[float, float]:
    """``a:b``, or a single number meaning the degenerate interval [a, a]."""
    parts = text.split(":")
    if len(parts) == 1:
        x = number(parts[0])
        return (x, x)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"{text!r} is not an interval a:b")
    return (number(parts[0]), number(parts[1]))


def _add_curve_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=PRESETS, help="built-in curve")
    src.add_argument("--curve", metavar="FILE", help="curve file (space/x/y/z/domain)")
    p.add_argument("--param", type=number, action="append", default=[], help="preset parameter (repeatable)")
    p.add_argument("--samples", type=int, default=200, help="grid points along the curve (default 200)")
    p.add_argument("--out", metavar="FILE", help="output file (default stdout)")


def _add_bertrand_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=number, help="Bertrand scale a (with --xi)")
    p.add_argument("--xi", type=number, help="Bertrand constant xi (with --a)")
    p.add_argument("--u", type=number, help="surface parameter u (with --theta)")
    p.add_argument("--theta", type=number, help="slope constant theta (with --u)")
    p.add_argument("--quad-tol", type=float, default=1e-10, help="quadrature tolerance (default 1e-10)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minkbertrand", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frame", help="CSV of the Sabban (spherical) or Frenet (free) frame along a curve")
    _add_curve_args(p)

    p = sub.add_parser("bertrand", help="CSV of Bertrand curve samples")
    _add_curve_args(p)
    _add_bertrand_args(p)

    p = sub.add_parser("surface", help="OBJ mesh of a constant slope surface")
    _add_curve_args(p)
    p.add_argument("--theta", type=number, required=True)
    p.add_argument("--u", type=interval, required=True, help="u range a:b with a > 0")
    p.add_argument("--v", type=interval, help="parameter range a:b, replacing the curve's own domain")
    p.add_argument("--nu", type=int, default=40)
    p.add_argument("--nv", type=int, default=80)

    p = sub.add_parser("evolute", help="CSV of the de Sitter or hyperbolic evolute")
    _add_curve_args(p)

    p = sub.add_parser("verify", help="run verification checks and print a report")
    p.add_argument("--suite", choices=("paper",), help="the built-in suite of worked examples")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=PRESETS)
    src.add_argument("--curve", metavar="FILE")
    p.add_argument("--param", type=number, action="append", default=[])
    p.add_argument("--samples", type=int, default=100, help="grid points (default 100)")
    p.add_argument("--tol", type=float, default=1e-7, help="verification tolerance (default 1e-7)")
    p.add_argument("--out", metavar="FILE")
    _add_bertrand_args(p)
    return parser


def load_curve(args, domain: tuple[float, float] | None = None) -> Curve:
    """The input curve; ``domain`` replaces its parameter interval before any reparametrization."""
    if args.preset:
        curve = preset(args.preset, args.param, domain)
    else:
        if args.param:
            raise BadParameter("--param only applies to --preset")
        try:
            curve = load_curve_file(args.curve)
        except OSError as exc:
            raise IoError(f"cannot read curve file {args.curve!r}: {exc.strerror}") from None
        if domain is not None:
            curve = dataclasses.replace(curve, domain=domain)
    return curve


def spherical_generator(curve: Curve) -> Curve:
    """Check a curve lies on its sphere and make it unit speed if it is not already."""
    if curve.space is Space.FREE:
        raise BadParameter("this command needs a curve on S12 or H2, got space = Free")
    residual = validate_on_sphere(curve)
    if residual > 1e-9:
        raise NotOnSphere(f"curve leaves {curve.space.value}: max |<f, f> - {curve.space.sign:+g}| = {residual!r}")
    if validate_unit_speed(curve) > 1e-9:
        return UnitSpeedCurve(curve)
    return curve


def bertrand_config(args, space: Space) -> BertrandConfig:
    by_ax = args.a is not None or args.xi is not None
    by_ut = args.u is not None or args.theta is not None
    if by_ax == by_ut:
        raise BadParameter("give either --a and --xi, or --u and --theta")
    if by_ax:
        if args.a is None or args.xi is None:
            raise BadParameter("--a and --xi go together")
        return BertrandConfig(args.a, args.xi, space)
    if args.u is None or args.theta is None:
        raise BadParameter("--u and --theta go together")
    return BertrandConfig.from_surface(args.u, args.theta, space)


def _grid(curve: Curve, n: int) -> list[float]:
    if n < 2:
        raise BadParameter(f"--samples must be at least 2, got {n}")
    return curve.grid(n)


def cmd_frame(args, sink: BinaryIO) -> int:
    curve = load_curve(args)
    if curve.space is not Space.FREE:
        curve = spherical_generator(curve)
    vs = _grid(curve, args.samples)
    rows = []
    if curve.space is Space.FREE:
        for v, s in zip(vs, curve.samples(vs)):
            app = frenet(s)
            rows.append((v, s.position, *app.T, *app.N, *app.B, app.kappa, app.tau))
        names = ("T1", "T2", "T3", "N1", "N2", "N3", "B1", "B2", "B3", "kappa", "tau")
    else:
        for v, s in zip(vs, curve.samples(vs)):
            fr = sabban_frame(s, curve.space)
            rows.append((v, s.position, *fr.t, *fr.s, fr.kappa_g))
        names = ("t1", "t2", "t3", "s1", "s2", "s3", "kappa_g")
    write_csv(rows, sink, names)
    return EXIT_OK


def cmd_bertrand(args, sink: BinaryIO) -> int:
    curve = spherical_generator(load_curve(args))
    cfg = bertrand_config(args, curve.space)
    vs = _grid(curve, args.samples)
    samples = BertrandCurve(curve, cfg, args.quad_tol).samples(vs)
    write_csv([(v, s.position) for v, s in zip(vs, samples)], sink)
    return EXIT_OK


def cmd_surface(args, sink: BinaryIO) -> int:
    curve = spherical_generator(load_curve(args, args.v))
    cfg = SurfaceConfig(args.theta, Cone.for_space(curve.space), args.u, tuple(curve.domain), args.nu, args.nv)
    write_obj(generate_mesh(curve, cfg), sink)
    return EXIT_OK


def cmd_evolute(args, sink: BinaryIO) -> int:
    curve = spherical_generator(load_curve(args))
    vs = _grid(curve, args.samples)
    rows = [(v, evolute(sabban_frame(s, curve.space))) for v, s in zip(vs, curve.samples(vs))]
    write_csv(rows, sink)
    return EXIT_OK


def cmd_verify(args, sink: BinaryIO) -> int:
    if args.suite:
        if args.preset or args.curve:
            raise BadParameter("--suite paper takes no curve")
        report = example_suite()
    else:
        if not (args.preset or args.curve):
            raise BadParameter("verify needs --suite paper, --preset or --curve")
        curve = spherical_generator(load_curve(args))
        cfg = bertrand_config(args, curve.space)
        report = VerificationReport()
        theta_u = (args.theta, args.u) if args.theta is not None else (None, None)
        curve_checks(report, "curve", curve, cfg, args.samples, args.tol, *theta_u)
    write_report(report, sink)
    return EXIT_OK if report.all_passed else EXIT_FAILED


COMMANDS = {
    "frame": cmd_frame,
    "bertrand": cmd_bertrand,
    "surface": cmd_surface,
    "evolute": cmd_evolute,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"minkbertrand: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.out:
            # render fully before touching the file so failures leave no partial output
            buf = io.BytesIO()
            code = COMMANDS[args.command](args, buf)
            try:
                with open(args.out, "wb") as fh:
                    fh.write(buf.getvalue())
            except OSError as exc:
                raise IoError(f"cannot write {args.out!r}: {exc.strerror}") from None
        else:
            code = COMMANDS[args.command](args, sys.stdout.buffer)
            sys.stdout.flush()
    except GeometryError as exc:
        print(f"minkbertrand: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code


if __name__ == "__main__":
    sys.exit(main())
