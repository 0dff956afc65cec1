"""Command-line front end: ``chernbounds <command> ...``.

Exit codes: 0 success, 1 a bound was violated (or a check failed), 2 usage error.
Negative list values need the ``--flag=-1,0`` form so argparse does not read
them as options.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import bounds as B
from . import catalog as K
from .chern import (
    ChernData,
    discriminant,
    dual,
    restrict_hyperplane,
    split_chern,
    twist_numeric,
    twist_symbolic,
    whitney,
    whitney_quotient,
)
from .jsonio import canonicalize, dumps, to_jsonable
from .riemann_roch import euler_char, euler_char_poly
from .splitting import (
    GstMatrix,
    SplittingType,
    brute_force_max_sumsq,
    extremal_nogap_sequence,
    invariant_convert,
)


@dataclass
class CommandResult:
    exit_code: int
    payload: object = None
    stderr: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# --- argument helpers -----------------------------------------------------

def int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text: str) -> range:
    """``lo:hi`` inclusive."""
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    return range(lo, hi + 1)


def gst_rows(text: str) -> list[Optional[list[int]]]:
    """Rows separated by ';', unknown rows written as '?'."""
    rows = []
    for part in text.split(";"):
        part = part.strip()
        rows.append(None if part in ("?", "") else int_list(part))
    return rows


def _chern(args, prefix: str = "") -> ChernData:
    rank = getattr(args, prefix + "rank")
    classes = getattr(args, prefix + "classes")
    N = args.ambient
    if len(classes) < N:
        classes = list(classes) + [0] * (N - len(classes))
    return ChernData(N, rank, tuple(classes))


def _add_chern_args(p, prefix: str = "", required: bool = True):
    dash = prefix.replace("_", "-")
    p.add_argument(f"--{dash}rank", dest=f"{prefix}rank", type=int, required=required)
    p.add_argument(f"--{dash}classes", dest=f"{prefix}classes", type=int_list, default=[],
                   help="c_1,...,c_N (missing trailing classes are 0)")


def _chern_payload(C: ChernData) -> dict:
    return {"ambient_dim": C.ambient_dim, "rank": C.rank, "classes": list(C.classes)}


# --- command handlers -----------------------------------------------------

def cmd_chern(args) -> CommandResult:
    op = args.op
    if op == "split":
        C = split_chern(SplittingType.of(args.b), args.ambient)
        return CommandResult(0, _chern_payload(C))
    if op == "koszul":
        C = K.chern_from_koszul(args.shape, args.ambient, M=args.M, degrees=args.degrees)
        return CommandResult(0, _chern_payload(C))
    if op == "whitney":
        sub, quot = _chern(args, "sub_"), _chern(args, "quot_")
        return CommandResult(0, _chern_payload(whitney(sub, quot)))
    if op == "quotient":
        total, sub = _chern(args, "total_"), _chern(args, "sub_")
        return CommandResult(0, _chern_payload(whitney_quotient(total, sub)))
    C = _chern(args)
    if op == "twist":
        if args.symbolic:
            T = twist_symbolic(C)
            return CommandResult(0, {f"c{i}": T.class_poly(i) for i in range(1, C.ambient_dim + 1)})
        return CommandResult(0, _chern_payload(twist_numeric(C, args.l)))
    if op == "dual":
        return CommandResult(0, _chern_payload(dual(C)))
    if op == "restrict":
        return CommandResult(0, _chern_payload(restrict_hyperplane(C)))
    if op == "discriminant":
        return CommandResult(0, {"discriminant": discriminant(C)})
    raise UsageError(f"unknown chern operation {op!r}")


def cmd_chi(args) -> CommandResult:
    C = _chern(args)
    if args.symbolic:
        return CommandResult(0, {"chi_poly": euler_char_poly(C)})
    chi = euler_char(C)
    return CommandResult(0, {"chi": chi.numerator if chi.denominator == 1 else chi})


def _verdict_code(reports) -> int:
    return 1 if any(isinstance(r, B.BoundReport) and r.verdict == B.VIOLATED for r in reports) else 0


def _report_payload(r: B.BoundReport) -> dict:
    return {"bound": r.bound_name, "bound_value": r.bound_value,
            "oracle_value": r.oracle_value, "verdict": r.verdict}


def cmd_bounds(args) -> CommandResult:
    op = args.op
    if op == "delta":
        return CommandResult(0, {
            "domenica": B.delta_lower_nogap(args.n, args.c1),
            "mattina": B.delta_lower_uniform(args.n),
        })
    if op == "grossa":
        M = GstMatrix.from_rows(args.gst).twist(args.t)
        out = {"t": args.t, "grossa": B.grossa_rhs(M, args.reading)}
        low = min(min(r) for r in M.rows)
        out["rigrossa"] = B.rigrossa_rhs(M, 0) if low >= 0 else None
        if args.h0 is not None:
            diff = B.h0_upper(M.splitting, M.ambient_dim) - args.h0
            rep = B.BoundReport.compare("grossa", out["grossa"], diff, B.LOWER)
            out["report"] = _report_payload(rep)
            return CommandResult(_verdict_code([rep]), out)
        return CommandResult(0, out)
    if op == "c2":
        value = B.c2_lower(args.b, args.a_plane)
        out = {"c2_lower": value}
        if args.c2 is not None:
            rep = B.BoundReport.compare("c2_lower", value, args.c2, B.LOWER)
            out["report"] = _report_payload(rep)
            return CommandResult(_verdict_code([rep]), out)
        return CommandResult(0, out)
    if op == "window":
        C = _chern(args)
        window = B.negative_c2_window(C, args.b)
        return CommandResult(0, {"window": sorted(window),
                                 "size_bound": B.window_size_bound(args.b)})
    if op == "lambda":
        C = _chern(args)
        poly = B.lambda_s(C, args.b, args.s)
        return CommandResult(0, {"lambda": poly,
                                 "leading_prediction": B.lambda_leading_prediction(C, args.b, args.s)})
    if op == "pqc":
        inv = invariant_convert(rank=args.rank, b=args.b, c1=args.c1, c2=args.c2,
                                d=args.d, delta2=args.delta2)
        cb = B.cohomology_bounds_from_invariants(inv, args.ambient)
        reg, gen = B.regularity_bound(cb)
        return CommandResult(0, {
            "P": list(cb.per_index_bounds),
            "Q": cb.Q,
            "C": {str(s): v for s, v in sorted(cb.chern_bounds.items())},
            "regularity_bound": reg,
            "generation_threshold": gen,
        })
    raise UsageError(f"unknown bounds operation {op!r}")


def _load(args) -> list:
    if args.file:
        try:
            return K.load_catalog_file(args.file)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read catalog {args.file}: {exc}")
    return K.builtin_catalog()


def cmd_catalog(args) -> CommandResult:
    descriptors = _load(args)
    if args.name:
        descriptors = [d for d in descriptors if d.name in args.name]
        missing = set(args.name) - {d.name for d in descriptors}
        if missing:
            raise UsageError(f"unknown descriptor(s): {', '.join(sorted(missing))}")
    if args.op == "list":
        return CommandResult(0, [
            {"name": d.name, "ambient_dim": d.ambient_dim, "rank": d.rank,
             "classes": list(d.chern.classes), "splitting": list(d.splitting)}
            for d in descriptors
        ])
    reports = K.verify_all(descriptors)
    failed = [r.name for r in reports if r.overall == "fail"]
    payload = {
        "overall": "fail" if failed else "pass",
        "count": len(reports),
        "failed": failed,
        "descriptors": [K.report_to_dict(r) if not args.summary else
                        {"name": r.name, "overall": r.overall, "sharp": r.sharp}
                        for r in reports],
    }
    return CommandResult(1 if failed else 0, payload)


def cmd_sweep(args) -> CommandResult:
    rows = []
    ok = True
    for c1 in args.c1_range:
        seq = extremal_nogap_sequence(args.n, c1)
        brute = brute_force_max_sumsq(args.n, c1)
        match = seq.sum_squares == brute
        ok &= match
        rows.append({"c1": c1, "sequence": list(seq), "sum_squares": seq.sum_squares,
                     "brute_force": brute, "match": match})
    return CommandResult(0 if ok else 1, {"n": args.n, "all_match": ok, "rows": rows})


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chernbounds", description=__doc__.splitlines()[0])
    parser.add_argument("--check", metavar="FILE",
                        help="re-serialize a JSON payload and require a byte-identical result")
    sub = parser.add_subparsers(dest="command")

    def leaf(subparsers, name, **kw):
        p = subparsers.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    chern = sub.add_parser("chern", help="Chern class arithmetic").add_subparsers(dest="op", required=True)
    p = leaf(chern, "split")
    p.add_argument("--b", type=int_list, required=True)
    p.add_argument("--ambient", type=int, required=True)
    p = leaf(chern, "koszul")
    p.add_argument("--shape", choices=["points", "line", "lines", "complete_intersection"], required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--degrees", type=int_list, default=[])
    for name in ("twist", "dual", "restrict", "discriminant"):
        p = leaf(chern, name)
        p.add_argument("--ambient", type=int, required=True)
        _add_chern_args(p)
        if name == "twist":
            p.add_argument("--l", type=int, default=0)
            p.add_argument("--symbolic", action="store_true")
    p = leaf(chern, "whitney")
    p.add_argument("--ambient", type=int, required=True)
    _add_chern_args(p, "sub_")
    _add_chern_args(p, "quot_")
    p = leaf(chern, "quotient")
    p.add_argument("--ambient", type=int, required=True)
    _add_chern_args(p, "total_")
    _add_chern_args(p, "sub_")

    p = leaf(sub, "chi", help="Euler characteristic")
    p.add_argument("--ambient", type=int, required=True)
    _add_chern_args(p)
    p.add_argument("--symbolic", action="store_true", help="chi(F(t)) as a polynomial in t")

    bnd = sub.add_parser("bounds", help="bound evaluators").add_subparsers(dest="op", required=True)
    p = leaf(bnd, "delta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1", type=int, default=0)
    p = leaf(bnd, "grossa")
    p.add_argument("--gst", type=gst_rows, required=True, help="rows a_1;a_2;...;a_N")
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--reading", choices=["subspace", "full"], default="subspace")
    p.add_argument("--h0", type=int, help="known h^0 F(t) to compare against")
    p = leaf(bnd, "c2")
    p.add_argument("--b", type=int_list, required=True)
    p.add_argument("--a-plane", dest="a_plane", type=int_list, required=True)
    p.add_argument("--c2", type=int)
    p = leaf(bnd, "window")
    p.add_argument("--ambient", type=int, default=2)
    _add_chern_args(p)
    p.add_argument("--b", type=int_list, required=True)
    p = leaf(bnd, "lambda")
    p.add_argument("--ambient", type=int, required=True)
    _add_chern_args(p)
    p.add_argument("--b", type=int_list, required=True)
    p.add_argument("--s", type=int, required=True)
    p = leaf(bnd, "pqc")
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--b", type=int_list)
    p.add_argument("--c1", type=int)
    p.add_argument("--c2", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--delta2", type=int)

    cat = sub.add_parser("catalog", help="sheaf catalog").add_subparsers(dest="op", required=True)
    for name in ("list", "verify"):
        p = leaf(cat, name)
        p.add_argument("--name", action="append", help="restrict to this descriptor (repeatable)")
        p.add_argument("--file", help="load descriptors from a JSON file instead")
        if name == "verify":
            p.add_argument("--summary", action="store_true", help="omit per-bound reports")

    sw = sub.add_parser("sweep", help="oracle sweeps").add_subparsers(dest="op", required=True)
    p = leaf(sw, "nogap")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1-range", dest="c1_range", type=int_range, required=True, help="lo:hi")
    return parser


HANDLERS = {"chern": cmd_chern, "chi": cmd_chi, "bounds": cmd_bounds,
            "catalog": cmd_catalog, "sweep": cmd_sweep}


def _check(path: str) -> CommandResult:
    try:
        text = Path(path).read_text()
        canon = canonicalize(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    if canon != text:
        return CommandResult(1, json.loads(canon), f"{path}: not in canonical form\n")
    return CommandResult(0, json.loads(canon))


def execute(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.check:
            if args.command:
                raise UsageError("--check takes no subcommand")
            res = _check(args.check)
            res.payload = (res.payload, True)
            return res
        if not args.command:
            raise UsageError(parser.format_usage() + "chernbounds: error: a command is required")
        res = HANDLERS[args.command](args)
        res.payload = (res.payload, args.json)
        return res
    except UsageError as exc:
        return CommandResult(2, None, f"{exc}\n")
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        return CommandResult(2, None, f"chernbounds: error: {exc}\n")
    except SystemExit as exc:  # --help
        return CommandResult(int(exc.code or 0), None)


def _text(payload, indent: int = 0) -> str:
    pad = " " * indent
    if isinstance(payload, dict):
        if len(payload) == 1:
            return _text(next(iter(payload.values())), indent)
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 2))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(payload, list) and payload and all(isinstance(x, dict) for x in payload):
        return "\n".join(pad + "  ".join(f"{k}={_scalar(v)}" for k, v in x.items()) for x in payload)
    return pad + _scalar(payload)


def _scalar(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) + "}"
    return str(v)


def render(res: CommandResult) -> str:
    if res.payload is None:
        return ""
    payload, as_json = res.payload
    if as_json:
        return dumps(payload)
    return _text(payload) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = execute(sys.argv[1:] if argv is None else argv)
    out = render(res)
    if out:
        sys.stdout.write(out)
    if res.stderr:
        sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
