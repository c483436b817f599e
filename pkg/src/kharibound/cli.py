"""Command-line interface.

Subcommands: vertices, pointwise, gamma-index, spr, sweep, verify.
JSON reports go to stdout (schemas in kharibound.schemas); sweep writes
RFC 4180 CSV. Exit codes: 0/1 = verdicts, 2 = input error, 3 = zero
inclusion, 4 = denominator instability, 5 = oracle violation.

Family files are JSON:

    {"numerator": [[lo, hi], ...], "denominator": [[lo, hi], ...],
     "tolerances": {"stability_margin_tol": ..., "positivity_tol": ...,
                    "zero_tol": ...}}

Coefficients ascend by power. Tolerance precedence (per key): the file
named by the KHARIBOUND_TOLERANCES environment variable overrides the
family file's "tolerances" block, which overrides the defaults.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Optional, Tuple

import numpy as np

from . import tolerances as tolmod
from .errors import (
    DegreeDropPossible,
    DenominatorNotHurwitz,
    KhariboundError,
    SpecFileError,
    ZeroInclusion,
)
from .intervals import (
    I1,
    I2,
    I3,
    VertexIndexTuple,
    kharitonov_vertices,
)
from .oracle import (
    ComparisonReport,
    SamplingPlan,
    Strategy,
    Verdict,
    _build_samples,
    compare_vertex_vs_oracle,
)
from .spr import (
    BandSpec,
    ExtremumStatus,
    IntervalTransferFunction,
    Quantity,
    band_infimum,
    closed_loop_spr,
    family_spr,
    pointwise_extremum,
    spr_check_single,
    spr_index,
)
from .intervals import vertex_polynomial
from .poly import poly_add, poly_scale
from .tolerances import DEFAULT_TOL, Tolerances

TOLERANCES_ENV = "KHARIBOUND_TOLERANCES"

_QUANTITY_ORDER = (Quantity.MIN_RE, Quantity.MAX_RE, Quantity.MIN_IM, Quantity.MAX_IM)
_STATUS_LETTER = {
    ExtremumStatus.CERTIFIED_EXACT: "E",
    ExtremumStatus.UPPER_BOUND_ONLY: "U",
    ExtremumStatus.ZERO_INCLUSION_FAIL: "Z",
}


# ---------------------------------------------------------------------------
# family file handling


def _intervals_from_json(name: str, data) -> list:
    if not isinstance(data, list) or not data:
        raise SpecFileError(f"field {name!r} must be a nonempty array of [lo, hi] pairs")
    out = []
    for k, pair in enumerate(data):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise SpecFileError(f"{name}[{k}] must be a [lo, hi] pair of numbers")
        lo, hi = float(pair[0]), float(pair[1])
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise SpecFileError(f"{name}[{k}] bounds must be finite")
        if lo > hi:
            raise SpecFileError(f"{name}[{k}] bounds out of order: [{lo!r}, {hi!r}]")
        out.append((lo, hi))
    return out


def load_family_file(path: str) -> Tuple[IntervalTransferFunction, Tolerances]:
    """Parse and validate a family file; resolve the tolerance chain."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise SpecFileError(f"cannot read {path!r}: {e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFileError(
            f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(data, dict):
        raise SpecFileError(f"{path}: top level must be an object")
    unknown = set(data) - {"numerator", "denominator", "tolerances"}
    if unknown:
        raise SpecFileError(f"{path}: unknown top-level fields {sorted(unknown)}")
    for req in ("numerator", "denominator"):
        if req not in data:
            raise SpecFileError(f"{path}: missing required field {req!r}")
    num = _intervals_from_json("numerator", data["numerator"])
    den = _intervals_from_json("denominator", data["denominator"])
    if len(num) > len(den):
        raise SpecFileError(
            f"{path}: numerator length {len(num)} exceeds denominator length {len(den)}"
        )

    tol = DEFAULT_TOL
    if "tolerances" in data:
        block = data["tolerances"]
        if not isinstance(block, dict):
            raise SpecFileError(f"{path}: 'tolerances' must be an object")
        try:
            tol = tolmod.from_mapping(block, tol)
        except ValueError as e:
            raise SpecFileError(f"{path}: {e}") from None
    env_path = os.environ.get(TOLERANCES_ENV)
    if env_path:
        try:
            with open(env_path, "r", encoding="utf-8") as fh:
                env_data = json.load(fh)
        except OSError as e:
            raise SpecFileError(f"{TOLERANCES_ENV}={env_path!r}: cannot read: {e}") from None
        except json.JSONDecodeError as e:
            raise SpecFileError(
                f"{TOLERANCES_ENV}={env_path!r}: invalid JSON at line {e.lineno}: {e.msg}"
            ) from None
        if not isinstance(env_data, dict):
            raise SpecFileError(f"{TOLERANCES_ENV}={env_path!r}: top level must be an object")
        try:
            tol = tolmod.from_mapping(env_data, tol)
        except ValueError as e:
            raise SpecFileError(f"{TOLERANCES_ENV}={env_path!r}: {e}") from None

    return IntervalTransferFunction.from_pairs(num, den), tol


def dump_family(itf: IntervalTransferFunction, tol: Optional[Tolerances] = None) -> dict:
    """Round-trippable JSON form of a family (and optional tolerances)."""
    out = {
        "numerator": [[c.lo, c.hi] for c in itf.num.coeffs],
        "denominator": [[c.lo, c.hi] for c in itf.den.coeffs],
    }
    if tol is not None:
        out["tolerances"] = tolmod.to_mapping(tol)
    return out


# ---------------------------------------------------------------------------
# JSON rendering


def _num(x: Optional[float]):
    """JSON-safe number: NaN -> None; infinities must not reach here."""
    if x is None:
        return None
    x = float(x)
    if math.isnan(x):
        return None
    if math.isinf(x):
        raise ValueError("refusing to serialize an infinite value")
    return x


def _tuple_str(t: Optional[VertexIndexTuple]) -> Optional[str]:
    return None if t is None else str(t)


def _emit(out: dict) -> None:
    sys.stdout.write(json.dumps(out, indent=2, allow_nan=False) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_vertices(args) -> int:
    itf, _tol = load_family_file(args.family)
    nv = kharitonov_vertices(itf.num)
    dv = kharitonov_vertices(itf.den)

    def render(vs) -> list:
        return [
            {"ij": f"{i}{j}", "coeffs": list(vs[(i, j)].coeffs)}
            for i in (1, 2)
            for j in (1, 2)
        ]

    n_distinct = len({v.coeffs for v in nv.values()})
    d_distinct = len({v.coeffs for v in dv.values()})
    notes = []
    if n_distinct < 4:
        notes.append(
            f"numerator vertices coincide ({n_distinct} distinct of 4)"
            + (": point family" if n_distinct == 1 else "")
        )
    if d_distinct < 4:
        notes.append(
            f"denominator vertices coincide ({d_distinct} distinct of 4)"
            + (": point family" if d_distinct == 1 else "")
        )
    _emit(
        {
            "command": "vertices",
            "numerator_vertices": render(nv),
            "denominator_vertices": render(dv),
            "numerator_distinct": n_distinct,
            "denominator_distinct": d_distinct,
            "note": "; ".join(notes) if notes else None,
            "index_sets": {
                "I1": [str(t) for t in I1],
                "I2": [str(t) for t in I2],
                "I3": [str(t) for t in I3],
            },
        }
    )
    return 0


def cmd_pointwise(args) -> int:
    itf, tol = load_family_file(args.family)
    rep = pointwise_extremum(itf, args.omega, Quantity(args.quantity), tol)
    _emit(
        {
            "command": "pointwise",
            "omega": args.omega,
            "quantity": rep.quantity.value,
            "value": _num(rep.value),
            "status": rep.status.value,
            "certified": rep.status is ExtremumStatus.CERTIFIED_EXACT,
            "arg_tuple": _tuple_str(rep.arg_tuple),
            "arg_omega": _num(rep.arg_omega),
            "attained": rep.attained,
            "corner_extremum": _num(rep.corner_extremum),
        }
    )
    return 3 if rep.status is ExtremumStatus.ZERO_INCLUSION_FAIL else 0


def cmd_gamma_index(args) -> int:
    itf, tol = load_family_file(args.family)
    res = spr_index(itf, tol)
    k_upper = -1.0 / res.gamma0 if res.gamma0 < -tol.positivity else math.inf
    _emit(
        {
            "command": "gamma-index",
            "gamma0": _num(res.gamma0),
            "classification": res.classification.value,
            "per_tuple_infima": {str(t): _num(v) for t, v in res.per_tuple_infima.items()},
            "arg_tuple": _tuple_str(res.arg_tuple),
            "arg_omega": _num(res.arg_omega),
            "attained": res.attained,
            "k_upper": "unbounded" if math.isinf(k_upper) else _num(k_upper),
        }
    )
    return 0


def cmd_spr(args) -> int:
    itf, tol = load_family_file(args.family)
    out = {
        "command": "spr",
        "mode": None,
        "verdict": None,
        "gamma": None,
        "band": None,
        "value": None,
        "status": None,
        "arg_tuple": None,
        "arg_omega": None,
        "attained": None,
        "failing_tuple": None,
    }
    if args.closed_loop:
        out["mode"] = "closed_loop"
        out["gamma"] = args.gamma
        verdict = closed_loop_spr(itf, args.gamma, tol)
        if not verdict:
            for t in I3:
                gv = vertex_polynomial(itf.num, t.i2, t.j2)
                fv = vertex_polynomial(itf.den, t.i1, t.j1)
                if not spr_check_single(gv, poly_add(fv, poly_scale(gv, args.gamma)), tol):
                    out["failing_tuple"] = str(t)
                    break
    elif args.band is not None:
        out["mode"] = "band"
        band = BandSpec(args.band[0], args.band[1])
        out["band"] = [band.w1, band.w2]
        rep = band_infimum(itf, band, tol)
        verdict = rep.status is ExtremumStatus.CERTIFIED_EXACT
        out.update(
            {
                "value": _num(rep.value),
                "status": rep.status.value,
                "arg_tuple": _tuple_str(rep.arg_tuple),
                "arg_omega": _num(rep.arg_omega),
                "attained": rep.attained,
            }
        )
        if not verdict:
            out["failing_tuple"] = _tuple_str(rep.arg_tuple)
    else:
        out["mode"] = "family"
        verdict = family_spr(itf, tol)
        if not verdict:
            for t in I2:
                gv = vertex_polynomial(itf.num, t.i1, t.j1)
                fv = vertex_polynomial(itf.den, t.i2, t.j2)
                if not spr_check_single(gv, fv, tol):
                    out["failing_tuple"] = str(t)
                    break
    out["verdict"] = bool(verdict)
    _emit(out)
    return 0 if verdict else 1


def cmd_sweep(args) -> int:
    itf, tol = load_family_file(args.family)
    if args.points < 2:
        raise SpecFileError(f"sweep needs at least 2 points, got {args.points}")
    if not (args.wmin < args.wmax):
        raise SpecFileError(f"sweep needs wmin < wmax, got [{args.wmin!r}, {args.wmax!r}]")
    omegas = np.linspace(args.wmin, args.wmax, args.points)

    rows = []
    for w in omegas:
        reps = [pointwise_extremum(itf, float(w), q, tol) for q in _QUANTITY_ORDER]
        letters = "".join(_STATUS_LETTER[r.status] for r in reps)
        values = [
            "" if r.status is ExtremumStatus.ZERO_INCLUSION_FAIL else repr(r.value)
            for r in reps
        ]
        rows.append([repr(float(w))] + values + [letters])

    def write_to(fh) -> None:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(["omega", "min_re", "max_re", "min_im", "max_im", "certified"])
        writer.writerows(rows)

    if args.out == "-":
        write_to(sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_to(fh)
    return 0


def cmd_verify(args) -> int:
    itf, tol = load_family_file(args.family)
    plan = SamplingPlan(
        strategy=Strategy(args.strategy),
        points_per_coeff=args.grid_points,
        n_samples=args.samples,
        seed=args.seed,
        include_corners=not args.no_include_corners,
    )
    tuples = None
    if args.inject_index_fault:
        tuples = I1.without(VertexIndexTuple.from_string(args.inject_index_fault))
    if args.analysis == "pointwise" and args.omega is None:
        raise SpecFileError("verify --analysis pointwise needs --omega")
    report = compare_vertex_vs_oracle(
        itf,
        args.analysis,
        omega=args.omega,
        quantity=Quantity(args.quantity),
        plan=plan,
        oracle_tol=args.oracle_tol,
        tol=tol,
        tuples=tuples,
    )
    sb = _build_samples(itf, plan)
    n_outer = 0 if sb.outer_num is None else sb.outer_num.shape[0] * sb.outer_den.shape[0]
    n_paired = 0 if sb.paired_num is None else sb.paired_num.shape[0]
    _emit(_render_verify(report, n_outer + n_paired, args.inject_index_fault or None))
    return 5 if report.verdict is Verdict.VIOLATION else 0


def _render_verify(rep: ComparisonReport, samples: int, injected: Optional[str]) -> dict:
    witness = None
    if rep.witness is not None:
        witness = {
            "num_coeffs": list(rep.witness.num_coeffs),
            "den_coeffs": list(rep.witness.den_coeffs),
            "omega": _num(rep.witness.omega),
            "value": _num(rep.witness.value),
        }
    return {
        "command": "verify",
        "analysis": rep.analysis,
        "quantity": rep.quantity.value if rep.quantity is not None else None,
        "omega": _num(rep.omega),
        "vertex_value": _num(rep.vertex_value),
        "oracle_value": _num(rep.oracle_value),
        "discrepancy": _num(rep.discrepancy),
        "verdict": rep.verdict.value,
        "certified": rep.certified,
        "witness": witness,
        "seed": rep.seed,
        "oracle_tol": rep.oracle_tol,
        "plan": {
            "strategy": rep.plan.strategy.value,
            "points_per_coeff": rep.plan.points_per_coeff,
            "n_samples": rep.plan.n_samples,
            "seed": rep.plan.seed,
            "include_corners": rep.plan.include_corners,
        },
        "samples": samples,
        "injected_fault": injected,
    }


# ---------------------------------------------------------------------------
# parser / entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kharibound",
        description=(
            "Vertex certificates for frequency-response positivity, strict "
            "positive realness, and sector bounds of interval transfer functions."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_family(sp):
        sp.add_argument("family", help="family file (JSON)")

    sp = sub.add_parser("vertices", help="Kharitonov vertex polynomials and index sets")
    add_family(sp)
    sp.set_defaults(func=cmd_vertices)

    sp = sub.add_parser("pointwise", help="family extremum of a quantity at one frequency")
    add_family(sp)
    sp.add_argument("--omega", type=float, required=True)
    sp.add_argument(
        "--quantity",
        choices=[q.value for q in Quantity],
        default=Quantity.MIN_RE.value,
    )
    sp.set_defaults(func=cmd_pointwise)

    sp = sub.add_parser("gamma-index", help="gain index gamma0 and sector bound")
    add_family(sp)
    sp.set_defaults(func=cmd_gamma_index)

    sp = sub.add_parser("spr", help="strict positive realness verdicts")
    add_family(sp)
    sp.add_argument("--band", nargs=2, type=float, metavar=("W1", "W2"))
    sp.add_argument("--closed-loop", action="store_true")
    sp.add_argument("--gamma", type=float, default=1.0, help="feedback gain (closed loop)")
    sp.set_defaults(func=cmd_spr)

    sp = sub.add_parser("sweep", help="CSV sweep of the four pointwise quantities")
    add_family(sp)
    sp.add_argument("--wmin", type=float, required=True)
    sp.add_argument("--wmax", type=float, required=True)
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="certify a vertex result against the sampling oracle")
    add_family(sp)
    sp.add_argument("--analysis", choices=["pointwise", "gamma"], default="pointwise")
    sp.add_argument("--omega", type=float, default=None)
    sp.add_argument(
        "--quantity",
        choices=[q.value for q in Quantity],
        default=Quantity.MIN_RE.value,
    )
    sp.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.RANDOM.value,
    )
    sp.add_argument("--grid-points", type=int, default=3)
    sp.add_argument("--samples", type=int, default=4096)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-include-corners", action="store_true")
    sp.add_argument("--oracle-tol", type=float, default=1e-9)
    sp.add_argument(
        "--inject-index-fault",
        metavar="TUPLE",
        default=None,
        help="drop one tuple (e.g. 1121) from the enumerated index set; "
        "self-test hook demonstrating violation detection",
    )
    sp.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ZeroInclusion as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (DenominatorNotHurwitz, DegreeDropPossible) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (KhariboundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
