"""Command-line driver.

Subcommands: transform, split, coeffs, planes, verify, import-ppm,
export-pgm, info.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 I/O or format error.  Results go to stdout,
diagnostics to stderr.  Reals print with 17 significant digits so a
reader can reconstruct the exact double.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from .fields import Domain, QuaternionField2D
from .formats import (
    HEADER,
    MAGIC,
    FileFormatError,
    read_field,
    read_image_ppm,
    export_magnitude_pgm,
    write_field,
)
from .quat import ONE, PureUnitQuaternion, Quaternion
from .split import (
    DegenerateContext,
    InvalidFrame,
    PlaneAssignment,
    coefficients,
    determine_context,
    make_context,
    split_arr,
)
from .transform import (
    Family,
    Spectrum,
    TransformVariant,
    forward_direct,
    forward_fast,
    inverse_direct,
    inverse_fast,
)
from .verify import run_all


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return "%.17g" % x


def _fmt_pure(q: Quaternion) -> str:
    """Pure quaternion as the CLI's own three-real inline syntax."""
    return ",".join(_fmt(c) for c in (q.x, q.y, q.z))


def _reals(text: str, flag: str):
    parts = text.split(",")
    vals = []
    for tok in parts:
        try:
            vals.append(float(tok))
        except ValueError:
            raise UsageError(f"{flag}: cannot parse '{tok}' as a real number")
    return vals


def parse_pure_unit(text: str, flag: str) -> PureUnitQuaternion:
    """Three comma-separated reals, normalized to a pure unit."""
    vals = _reals(text, flag)
    if len(vals) != 3:
        raise UsageError(f"{flag}: expected three comma-separated reals, got '{text}'")
    try:
        return PureUnitQuaternion(*vals)
    except ValueError as e:
        raise UsageError(f"{flag}: {e}")


def parse_frame_entry(text: str, flag: str) -> Quaternion:
    """'scalar' for 1, three reals for a normalized pure unit, four reals
    for a full quaternion taken verbatim."""
    if text.strip().lower() == "scalar":
        return ONE
    vals = _reals(text, flag)
    if len(vals) == 3:
        try:
            return PureUnitQuaternion(*vals)
        except ValueError as e:
            raise UsageError(f"{flag}: {e}")
    if len(vals) == 4:
        return Quaternion(*vals)
    raise UsageError(f"{flag}: expected 'scalar', three reals, or four reals; got '{text}'")


def parse_full_quaternion(text: str, flag: str) -> Quaternion:
    vals = _reals(text, flag)
    if len(vals) != 4:
        raise UsageError(f"{flag}: expected four comma-separated reals, got '{text}'")
    return Quaternion(*vals)


def _variant(args) -> TransformVariant:
    f = parse_pure_unit(args.f, "--f")
    g = parse_pure_unit(args.g, "--g")
    return TransformVariant(Family(args.variant), make_context(f, g))


# ---------------------------------------------------------------------------
# Subcommand handlers.

def _cmd_transform(args) -> int:
    variant = _variant(args)
    if args.inverse:
        field = read_field(args.infile, domain=Domain.FREQUENCY)
        spectrum = Spectrum(field, variant)
        apply_ = inverse_direct if args.direct else inverse_fast
        out = apply_(variant, spectrum)
        write_field(out, args.outfile)
    else:
        field = read_field(args.infile, domain=Domain.SPATIAL)
        apply_ = forward_direct if args.direct else forward_fast
        out = apply_(variant, field)
        write_field(out.field, args.outfile)
    return 0


def _cmd_split(args) -> int:
    ctx = make_context(parse_pure_unit(args.f, "--f"), parse_pure_unit(args.g, "--g"))
    field = read_field(args.infile)
    plus, minus = split_arr(ctx, field.data)
    write_field(QuaternionField2D(plus), args.out_plus)
    write_field(QuaternionField2D(minus), args.out_minus)
    return 0


def _cmd_coeffs(args) -> int:
    ctx = make_context(parse_pure_unit(args.f, "--f"), parse_pure_unit(args.g, "--g"))
    if (args.q is None) == (args.infile is None):
        raise UsageError("coeffs: give exactly one of --q or --in")
    if args.q is not None:
        qs = [parse_full_quaternion(args.q, "--q")]
    else:
        field = read_field(args.infile)
        qs = [Quaternion(*field.data[m1, m2])
              for m1 in range(field.n1) for m2 in range(field.n2)]
    for q in qs:
        print(" ".join(_fmt(c) for c in coefficients(ctx, q)))
    return 0


def _cmd_planes(args) -> int:
    frame = [parse_frame_entry(getattr(args, n), "--" + n) for n in "abcd"]
    assign = (PlaneAssignment.AB_TO_PLUS if args.assign == "plus"
              else PlaneAssignment.AB_TO_MINUS)
    ctx = determine_context(*frame, assignment=assign)
    print(f"f = {_fmt_pure(ctx.f)}")
    print(f"g = {_fmt_pure(ctx.g)}")
    print(f"degenerate = {'true' if ctx.degenerate else 'false'}")
    if ctx.degenerate:
        print(f"degenerate_sign = {ctx.degenerate_sign:+d}")
    return 0


def _cmd_verify(args) -> int:
    results = run_all(args.seed, profile=args.profile)
    for r in results:
        print(r.line())
    gated = [r for r in results if r.gated]
    failed = [r for r in gated if not r.passed]
    print(f"{len(gated) - len(failed)}/{len(gated)} checks passed (seed {args.seed})")
    return 1 if failed else 0


def _cmd_import_ppm(args) -> int:
    write_field(read_image_ppm(args.infile), args.outfile)
    return 0


def _cmd_export_pgm(args) -> int:
    field = read_field(args.infile, domain=Domain.FREQUENCY)
    export_magnitude_pgm(field, args.outfile, centered=args.centered)
    return 0


def _cmd_info(args) -> int:
    field = read_field(args.infile)
    print(f"magic = {MAGIC.decode('ascii')}")
    print(f"header_bytes = {HEADER.size}")
    print(f"n1 = {field.n1}")
    print(f"n2 = {field.n2}")
    print(f"samples = {field.n1 * field.n2}")
    mags = np.sqrt(np.sum(field.data * field.data, axis=-1))
    print(f"max_norm = {_fmt(float(mags.max()))}")
    return 0


# ---------------------------------------------------------------------------
# Parser.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opsqft",
        description="Two-axis plane splits and Fourier transforms of "
                    "quaternion-valued 2D fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply a transform family to a field file")
    p.add_argument("--variant", required=True,
                   choices=[f.value for f in Family])
    p.add_argument("--f", required=True, help="left axis, three reals 'a,b,c'")
    p.add_argument("--g", required=True, help="right axis, three reals 'a,b,c'")
    p.add_argument("--inverse", action="store_true")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", dest="direct", action="store_false", default=False)
    mode.add_argument("--direct", dest="direct", action="store_true")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("split", help="write the two plane parts of a field")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out-plus", dest="out_plus", required=True)
    p.add_argument("--out-minus", dest="out_minus", required=True)
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("coeffs", help="print plane-basis coordinates q1..q4")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--q", help="single quaternion, four reals 'w,x,y,z'")
    p.add_argument("--in", dest="infile", help="field file, one line per sample")
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("planes", help="derive the axes whose split keeps a "
                                      "given orthonormal frame plane-aligned")
    for name in "abcd":
        p.add_argument("--" + name, required=True,
                       help="'scalar', three reals, or four reals")
    p.add_argument("--assign", choices=["minus", "plus"], default="minus",
                   help="plane that receives the a,b pair")
    p.set_defaults(handler=_cmd_planes)

    p = sub.add_parser("verify", help="run the seeded identity suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=["quick", "full"], default="quick")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("import-ppm", help="read a P3/P6 image as a pure-quaternion field")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(handler=_cmd_import_ppm)

    p = sub.add_parser("export-pgm", help="write per-sample norms as a P5 image")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--centered", action="store_true",
                   help="rotate indices so frequency (0,0) sits at the center")
    p.set_defaults(handler=_cmd_export_pgm)

    p = sub.add_parser("info", help="print a field file's header")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=_cmd_info)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code in (0, None):
            return 0
        return 2
    try:
        return args.handler(args)
    except (UsageError, InvalidFrame, DegenerateContext, ValueError) as e:
        print(f"opsqft: {e}", file=sys.stderr)
        return 2
    except FileFormatError as e:
        print(f"opsqft: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"opsqft: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
