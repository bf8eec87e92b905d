"""Command-line front end.

Exit status: 0 on success, 1 on a domain or numerical error, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, is_dataclass
from enum import Enum
from pathlib import Path

from . import report, solve, stability, waves
from .errors import ConvergenceError, DomainError
from .model import critical_constants, make_params
from .verify import run_checks


def _num(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return format(v, ".12g")
    if isinstance(v, Enum):
        return str(v.value)
    if v is None:
        return "none"
    return str(v)


def _emit(pairs, fmt: str, out=None):
    out = sys.stdout if out is None else out
    sep = "=" if fmt == "records" else ": "
    for key, value in pairs:
        print(f"{key}{sep}{_num(value)}", file=out)


def _fields(obj):
    return list(asdict(obj).items()) if is_dataclass(obj) else list(obj)


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    return lo, hi


def _cmd_constants(p, args):
    return _fields(critical_constants(p)) + [("regime", p.regime), ("well_posed", p.well_posed)]


def _frequency(p, args) -> float:
    if args.omega is not None:
        return args.omega
    return waves.frequency_of_charge(p, args.q)


def _cmd_classify(p, args):
    omega = _frequency(p, args)
    return [("omega", omega), ("verdict", stability.classify_stability(p, omega))]


def _cmd_spectrum(p, args):
    return _fields(stability.linearization_spectrum(p, _frequency(p, args)))


def _cmd_ground_state(p, args):
    return _fields(solve.ground_state_frequency(p, args.mu))


def _cmd_mass_invert(p, args):
    return _fields(solve.invert_mass_focusing(p, args.mu))


def _cmd_escape(p, args):
    return [
        ("mu", args.mu),
        ("n", args.n),
        ("energy", solve.escape_sequence_energy(p, args.mu, args.n)),
        ("energy_functional", solve.escape_sequence_functional_energy(p, args.mu, args.n)),
    ]


def _cmd_vnorm(p, args):
    w1, w2 = (waves.standing_wave(p, w) for w in args.omega)
    return [
        ("omega1", w1.omega),
        ("omega2", w2.omega),
        ("lambda_ref", args.lambda_ref),
        ("distance", waves.vnorm_distance(p, w1, w2, args.lambda_ref)),
    ]


def _cmd_curves(p, args):
    if args.figure is not None:
        out = args.out or "."
        if args.figure == 0:
            written = report.reproduce_figures(out, n=args.points)
        else:
            written = report.write_figure(args.figure, out, n=args.points)
        return [("written", str(path)) for path in written]
    if args.curve is None or args.range is None:
        raise DomainError("curves needs --figure, or --curve with --range")
    table = report.sample_curve(args.curve, p, *args.range, args.points, args.spacing)
    if args.out is None:
        sys.stdout.write(report.format_table(table))
        return []
    return [("written", str(report.write_table(table, args.out)))]


def _cmd_verify(p, args):
    checks = run_checks(p)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        if args.format == "records":
            print(f"module={c.module} check={c.name!r} status={status} detail={c.detail!r}")
        else:
            print(f"{status}  {c.module:<9} {c.name}  [{c.detail}]")
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return None if not failed else 1


COMMANDS = {
    "constants": _cmd_constants,
    "curves": _cmd_curves,
    "classify": _cmd_classify,
    "spectrum": _cmd_spectrum,
    "ground-state": _cmd_ground_state,
    "mass-invert": _cmd_mass_invert,
    "escape": _cmd_escape,
    "vnorm-dist": _cmd_vnorm,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", type=float, default=argparse.SUPPRESS, help="nonlinearity power (> 0)")
    common.add_argument("--beta", type=float, default=argparse.SUPPRESS, help="coupling (< 0 focusing, > 0 defocusing)")
    common.add_argument("--format", choices=("plain", "records"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="cnls2d", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    add("constants", "critical frequencies, charge, energy and mass")
    for name, help_ in (("classify", "orbital stability verdict"), ("spectrum", "linearization spectrum")):
        at = add(name, help_).add_mutually_exclusive_group(required=True)
        at.add_argument("--omega", type=float)
        at.add_argument("--q", type=float, help="charge; the frequency is omega(q)")
    for name, help_ in (("ground-state", "defocusing ground-state frequency"), ("mass-invert", "focusing frequencies of given mass")):
        add(name, help_).add_argument("--mu", type=float, required=True)
    esc = add("escape", "energy of the fixed-mass escape sequence")
    esc.add_argument("--mu", type=float, required=True)
    esc.add_argument("--n", type=int, required=True)
    vn = add("vnorm-dist", "energy-norm distance of two standing waves")
    vn.add_argument("--omega", type=float, nargs=2, required=True, metavar=("OMEGA1", "OMEGA2"))
    vn.add_argument("--lambda-ref", type=float, default=1.0)
    cv = add("curves", "sample a curve or regenerate figure tables")
    cv.add_argument("--curve", choices=[c.value for c in report.CurveId])
    cv.add_argument("--figure", type=int, choices=[0, 1, 2, 3, 4, 5], help="1-5, or 0 for all")
    cv.add_argument("--range", type=_range, metavar="LO:HI")
    cv.add_argument("--points", type=int, default=400)
    cv.add_argument("--spacing", choices=("lin", "log"))
    cv.add_argument("--out")
    add("verify", "run every self-check")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # the flags may sit on either side of the subcommand, so they carry no parser defaults
    args.format = getattr(args, "format", "plain")
    if not hasattr(args, "sigma") or not hasattr(args, "beta"):
        parser.error("--sigma and --beta are required")
    try:
        p = make_params(args.sigma, args.beta)
        result = COMMANDS[args.command](p, args)
    except (DomainError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, int):
        return result
    if result:
        _emit(result, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
