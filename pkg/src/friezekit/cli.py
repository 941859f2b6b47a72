"""Command-line front end: ``friezekit <command> ...``.

Exit status: 0 success, 1 validation failure (report on stdout), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import determinants as dets
from .equations import DifferenceEquation, DomainError
from .friezes import (
    FriezePattern,
    PartialFrieze,
    ValidationError,
    check_windows,
    equation_from_frieze,
    frieze_from_equation,
    horizontal_flip,
)
from .gale import gale_on_frieze, gale_transform, projective_dual
from .instances import InstanceFile, InstanceParseError, SchemaError, decode, dumps, encode, loads
from .linalg import format_rational, parse_rational
from .maps import MAPS, SingularityError, hill_from_orbit, iterate, make_map, random_seed, third_order_from_orbit
from .polygons import DegeneratePolygonError, Obstruction, PolygonLift, equation_from_polygon, polygon_lift
from .unitriangular import cut_matrix, iota, iota_on_frieze


class UsageError(Exception):
    pass


class Failure(Exception):
    """Validation failure; the message is the report."""


def _read(path: str) -> InstanceFile:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as err:
            raise UsageError(f"cannot read {path}: {err.strerror}") from None
    return loads(data)


def _parse_seed(text: str | None) -> tuple[list | None, int]:
    """Comma-separated rationals, or a single integer used as RNG seed."""
    if text is None:
        return None, 0
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) == 1 and "/" not in parts[0] and "," not in text:
        try:
            return None, int(parts[0])
        except ValueError:
            pass
    try:
        return [parse_rational(p) for p in parts], 0
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError(f"bad --seed: {err}") from None


def _equation_of(obj) -> DifferenceEquation:
    if isinstance(obj, DifferenceEquation):
        return obj
    if isinstance(obj, FriezePattern):
        return equation_from_frieze(obj)
    raise UsageError("expected an equation or a periodic frieze")


def _frieze_of(obj) -> FriezePattern:
    if isinstance(obj, FriezePattern):
        return obj
    if isinstance(obj, DifferenceEquation):
        return frieze_from_equation(obj)
    raise UsageError("expected an equation or a periodic frieze")


def _emit(out, inst: InstanceFile, human: bool) -> None:
    if not human:
        out.write(dumps(inst))
        return
    p = inst.payload
    out.write(f"{inst.kind} k={p['k']} n={p.get('n', '?')}\n")
    for key in ("coeffs", "rows", "points", "entries"):
        for row in p.get(key, []):
            out.write("  " + " ".join(str(x) for x in row) + "\n")


def cmd_gen(args, out) -> int:
    if args.k not in (1, 2):
        raise UsageError("gen supports --k 1 or 2; chain `gale` for other orders")
    if args.n is None:
        raise UsageError("gen needs --n")
    seed, rng_seed = _parse_seed(args.seed)
    fmap = make_map("F" if args.k == 1 else "Phi", args.n)
    meta = {"generator": fmap.name, "n": args.n}
    if seed is None:
        seed = list(random_seed(fmap, random.Random(rng_seed)))
        meta["rng_seed"] = rng_seed
    meta["seed"] = [format_rational(x) for x in seed]
    build = hill_from_orbit if args.k == 1 else third_order_from_orbit
    eq = build(args.n, seed)
    if not eq.is_superperiodic():
        raise Failure("generated equation is not superperiodic")
    _emit(out, encode(eq, meta), args.human)
    return 0


def cmd_check(args, out) -> int:
    inst = _read(args.file)
    obj = decode(inst)
    lines, ok = [], True
    if isinstance(obj, DifferenceEquation):
        sp = obj.is_superperiodic()
        lines.append(f"superperiodic: {'pass' if sp else 'FAIL'}")
        ok = sp
        if sp and obj.width >= 1:
            obj = frieze_from_equation(obj)
    if isinstance(obj, PolygonLift):
        zero = [i for i, c in enumerate(obj.windows()) if c == 0]
        ok = not zero
        lines.append("non-degenerate: pass" if ok else f"non-degenerate: FAIL (zero window at {zero[0]})")
    if isinstance(obj, (FriezePattern, PartialFrieze)):
        for rep in check_windows(obj):
            lines.append(rep.summary())
            ok = ok and rep.ok
    if args.human:
        out.write("\n".join(lines) + "\n")
    else:
        out.write(json.dumps({"ok": ok, "report": lines}, indent=2) + "\n")
    return 0 if ok else 1


def cmd_gale(args, out) -> int:
    inst = _read(args.file)
    obj = decode(inst)
    if isinstance(obj, DifferenceEquation):
        res = gale_transform(obj)
    elif isinstance(obj, FriezePattern):
        res = gale_on_frieze(obj)
    else:
        raise UsageError("gale expects an equation or a periodic frieze")
    _emit(out, encode(res, inst.meta), args.human)
    return 0


def cmd_dual(args, out) -> int:
    inst = _read(args.file)
    obj = decode(inst)
    if isinstance(obj, DifferenceEquation):
        res = projective_dual(obj)
    elif isinstance(obj, FriezePattern):
        res = horizontal_flip(obj)
    else:
        raise UsageError("dual expects an equation or a periodic frieze")
    _emit(out, encode(res, inst.meta), args.human)
    return 0


def _matrix_text(m) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.tolist()]


def cmd_iota(args, out) -> int:
    inst = _read(args.file)
    f = _frieze_of(decode(inst))
    g = iota_on_frieze(f)
    if args.dump_matrices:
        a = cut_matrix(f)
        dump = {"A": _matrix_text(a), "iota_A": _matrix_text(iota(a)), "frieze": encode(g, inst.meta).to_json()}
        if args.human:
            for name in ("A", "iota_A"):
                out.write(f"{name}:\n")
                for row in dump[name]:
                    out.write("  " + " ".join(f"{x:>6}" for x in row) + "\n")
        else:
            out.write(json.dumps(dump, sort_keys=True, indent=2) + "\n")
            return 0
    _emit(out, encode(g, inst.meta), args.human)
    return 0


def cmd_orbit(args, out) -> int:
    if args.map is None or args.n is None:
        raise UsageError("orbit needs --map and --n")
    try:
        fmap = make_map(args.map, args.n)
    except ValueError as err:
        raise UsageError(str(err)) from None
    seed, rng_seed = _parse_seed(args.seed)
    if seed is None:
        seed = random_seed(fmap, random.Random(rng_seed))
    try:
        res = iterate(fmap, seed, args.steps)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if args.human:
        for s in res.states:
            out.write("(" + ", ".join(format_rational(x) for x in s) + ")\n")
        out.write(res.describe() + "\n")
    else:
        out.write(json.dumps({
            "map": fmap.name,
            "n": fmap.n,
            "states": [[format_rational(x) for x in s] for s in res.states],
            "minimal_period": res.minimal_period,
            "claimed_period": res.claimed_period,
            "singular_at": res.singular_at,
        }, indent=2) + "\n")
    if res.singular_at is not None:
        return 1
    return 0 if res.divides_claim else 1


def cmd_polygon(args, out) -> int:
    inst = _read(args.file)
    obj = decode(inst)
    if args.invert:
        if not isinstance(obj, PolygonLift):
            raise UsageError("polygon --invert expects a polygon file")
        res = equation_from_polygon(obj)
        if isinstance(res, Obstruction):
            report = {"obstruction": res.reason, "fiber_dimension": res.fiber_dimension}
            if res.certificate is not None:
                report["closing_value"] = format_rational(res.certificate)
            out.write(res.describe() + "\n" if args.human else json.dumps(report, indent=2, sort_keys=True) + "\n")
            return 1
        _emit(out, encode(res, inst.meta), args.human)
        return 0
    lift = polygon_lift(_equation_of(obj))
    pts = PolygonLift(lift.k, lift.points())
    _emit(out, encode(pts, inst.meta), args.human)
    return 0


def cmd_det(args, out) -> int:
    inst = _read(args.file)
    eq = _equation_of(decode(inst))
    f = frieze_from_equation(eq)
    i, j = args.i, args.j
    if not 0 <= j < eq.width:
        raise UsageError(f"--j must lie in 0..{eq.width - 1}")
    vals = {
        "recurrence": f.entry(i, i + j),
        "hessenberg": dets.entry_determinant(eq, i, j),
        "alternative": dets.entry_determinant_alt(eq, i, j),
    }
    agree = len(set(vals.values())) == 1
    if args.human:
        for name, v in vals.items():
            out.write(f"{name:>12}: {format_rational(v)}\n")
        out.write(f"d({i}, {i + j}) branches {'agree' if agree else 'DISAGREE'}\n")
    else:
        out.write(json.dumps({"i": i, "j": i + j, "agree": agree,
                              **{k: format_rational(v) for k, v in vals.items()}}, indent=2) + "\n")
    return 0 if agree else 1


COMMANDS = {
    "gen": (cmd_gen, False), "check": (cmd_check, True), "gale": (cmd_gale, False),
    "dual": (cmd_dual, False), "iota": (cmd_iota, False), "orbit": (cmd_orbit, True),
    "polygon": (cmd_polygon, False), "det": (cmd_det, True),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="friezekit", description="Exact frieze patterns, difference equations and Gale duality.")
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="human", action="store_false", default=None, help="machine-readable output")
    mode.add_argument("--human", dest="human", action="store_true", help="readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a superperiodic equation")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", help="comma-separated rationals or an integer RNG seed")

    for name, text in (("check", "validate an instance"), ("gale", "Gale transform"),
                       ("dual", "projective dual / horizontal flip")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", help="instance JSON, or - for stdin")

    p = sub.add_parser("iota", parents=[common], help="anti-involution on the cut matrix")
    p.add_argument("file")
    p.add_argument("--dump-matrices", action="store_true", help="also print A_F and its image")

    p = sub.add_parser("orbit", parents=[common], help="iterate a periodic map")
    p.add_argument("--map", choices=sorted(MAPS))
    p.add_argument("--n", type=int)
    p.add_argument("--seed")
    p.add_argument("--steps", type=int)

    p = sub.add_parser("polygon", parents=[common], help="equation to polygon, or back with --invert")
    p.add_argument("file")
    p.add_argument("--invert", action="store_true")

    p = sub.add_parser("det", parents=[common], help="frieze entry by three formulas")
    p.add_argument("file")
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func, human_default = COMMANDS[args.command]
    if args.human is None:
        args.human = human_default
    try:
        return func(args, out)
    except Failure as exc:
        out.write(f"{exc}\n")
        return 1
    except (ValidationError, DomainError, SingularityError, DegeneratePolygonError) as exc:
        out.write(f"validation failure: {exc}\n")
        return 1
    except (UsageError, InstanceParseError, SchemaError) as exc:
        err.write(f"friezekit {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
