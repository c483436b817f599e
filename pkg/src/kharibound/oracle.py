"""Brute-force sampling oracle.

Independent of the vertex theory by construction: it never consults the
index sets for its verdicts (vertex members only enter as extra samples
when corner enumeration is infeasible). It samples concrete members of an
interval transfer function, evaluates them directly on a frequency grid,
and compares the result against what the vertex analysis certified.

Scan order is fixed (numerator-major for outer products, row order for
paired samples) in both kernel backends, so the reported witness member is
deterministic and reproducible for a given plan.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import kernels
from .errors import DenominatorNotHurwitz, PoleOnAxis, TooManyCorners, ZeroInclusion
from .intervals import (
    I1,
    I2,
    I3,
    IndexSet,
    IntervalPolynomial,
    family_kharitonov_stable,
    vertex_polynomial,
    zero_exclusion,
)
from .poly import RealPolynomial
from .spr import (
    ALL_REALS,
    ExtremumStatus,
    IntervalTransferFunction,
    Quantity,
    _QUANTITY_TABLE,
    pointwise_extremum,
    spr_index,
    vertex_pair_infimum,
)
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "Strategy",
    "SamplingPlan",
    "OracleWitness",
    "Verdict",
    "ComparisonReport",
    "CORNER_CAP",
    "sample_members",
    "oracle_pointwise_min",
    "oracle_global_inf",
    "default_omega_grid",
    "compare_vertex_vs_oracle",
]

#: Hard cap on exhaustively enumerated coefficient combinations.
CORNER_CAP = 2**20

#: Default slack when comparing oracle and vertex values.
DEFAULT_ORACLE_TOL = 1e-9


class Strategy(enum.Enum):
    CORNERS_ONLY = "CORNERS_ONLY"
    GRID = "GRID"
    RANDOM = "RANDOM"


class Verdict(enum.Enum):
    CONSISTENT = "CONSISTENT"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class SamplingPlan:
    """How to draw concrete members from the interval family.

    CORNERS_ONLY: every combination of interval endpoints (outer product
    of numerator and denominator corners). GRID: ``points_per_coeff``
    equispaced values per nondegenerate coefficient, outer product.
    RANDOM: ``n_samples`` member pairs drawn uniformly (counter-based
    generator, bit-reproducible for a given seed); ``include_corners``
    prepends the corner block when it fits under CORNER_CAP, otherwise the
    I1/I2/I3 vertex members are appended instead.
    """

    strategy: Strategy = Strategy.RANDOM
    points_per_coeff: int = 3
    n_samples: int = 4096
    seed: int = 0
    include_corners: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "points_per_coeff", int(self.points_per_coeff))
        object.__setattr__(self, "n_samples", int(self.n_samples))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "include_corners", bool(self.include_corners))
        if self.strategy is Strategy.GRID and self.points_per_coeff < 2:
            raise ValueError("GRID needs points_per_coeff >= 2")
        if self.strategy is Strategy.RANDOM and self.n_samples < 1:
            raise ValueError("RANDOM needs n_samples >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass(frozen=True)
class OracleWitness:
    """Concrete member (coefficient rows) and frequency achieving the
    oracle value."""

    num_coeffs: Tuple[float, ...]
    den_coeffs: Tuple[float, ...]
    omega: float
    value: float


@dataclass(frozen=True)
class ComparisonReport:
    """Vertex claim vs oracle evidence.

    ``discrepancy`` measures how far the oracle got past the vertex claim
    in the claim's forbidden direction (positive = oracle beat the claim);
    VIOLATION when it exceeds ``oracle_tol`` while the claim was certified
    exact.
    """

    analysis: str
    vertex_value: float
    oracle_value: float
    discrepancy: float
    verdict: Verdict
    certified: bool
    witness: Optional[OracleWitness]
    plan: SamplingPlan
    seed: int
    quantity: Optional[Quantity] = None
    omega: Optional[float] = None
    oracle_tol: float = DEFAULT_ORACLE_TOL


@dataclass(frozen=True)
class _SampleBatch:
    outer_num: Optional[np.ndarray]
    outer_den: Optional[np.ndarray]
    paired_num: Optional[np.ndarray]
    paired_den: Optional[np.ndarray]


def _corner_axes(ip: IntervalPolynomial) -> List[np.ndarray]:
    return [
        np.asarray([c.lo] if c.is_point else [c.lo, c.hi], dtype=np.float64)
        for c in ip.coeffs
    ]


def _grid_axes(ip: IntervalPolynomial, points: int) -> List[np.ndarray]:
    return [
        np.asarray([c.lo], dtype=np.float64)
        if c.is_point
        else np.linspace(c.lo, c.hi, points)
        for c in ip.coeffs
    ]


def _outer_matrix(axes: List[np.ndarray]) -> np.ndarray:
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack(grids, axis=-1).reshape(-1, len(axes))


def _combo_count(axes_num, axes_den) -> int:
    total = 1
    for ax in list(axes_num) + list(axes_den):
        total *= len(ax)
    return total


def _vertex_member_rows(itf: IntervalTransferFunction) -> Tuple[np.ndarray, np.ndarray]:
    seen = set()
    num_rows, den_rows = [], []
    for iset in (I1, I2, I3):
        for t in iset:
            key = tuple(t)
            if key in seen:
                continue
            seen.add(key)
            num_rows.append(vertex_polynomial(itf.num, t.i1, t.j1).coeffs)
            den_rows.append(vertex_polynomial(itf.den, t.i2, t.j2).coeffs)
    return (
        np.asarray(num_rows, dtype=np.float64),
        np.asarray(den_rows, dtype=np.float64),
    )


def _build_samples(itf: IntervalTransferFunction, plan: SamplingPlan) -> _SampleBatch:
    if plan.strategy is Strategy.CORNERS_ONLY or plan.strategy is Strategy.GRID:
        if plan.strategy is Strategy.CORNERS_ONLY:
            axes_n = _corner_axes(itf.num)
            axes_d = _corner_axes(itf.den)
        else:
            axes_n = _grid_axes(itf.num, plan.points_per_coeff)
            axes_d = _grid_axes(itf.den, plan.points_per_coeff)
        count = _combo_count(axes_n, axes_d)
        if count > CORNER_CAP:
            raise TooManyCorners(
                f"{count} coefficient combinations exceed the cap of {CORNER_CAP}"
            )
        return _SampleBatch(_outer_matrix(axes_n), _outer_matrix(axes_d), None, None)

    # RANDOM
    rng = np.random.Generator(np.random.Philox(plan.seed))
    lo_n, hi_n = itf.num.bounds_arrays()
    lo_d, hi_d = itf.den.bounds_arrays()
    kn, kd = lo_n.size, lo_d.size
    u = rng.random((plan.n_samples, kn + kd))
    rand_num = lo_n + u[:, :kn] * (hi_n - lo_n)
    rand_den = lo_d + u[:, kn:] * (hi_d - lo_d)

    outer_num = outer_den = None
    paired_num, paired_den = rand_num, rand_den
    if plan.include_corners:
        axes_n = _corner_axes(itf.num)
        axes_d = _corner_axes(itf.den)
        if _combo_count(axes_n, axes_d) <= CORNER_CAP:
            outer_num = _outer_matrix(axes_n)
            outer_den = _outer_matrix(axes_d)
        else:
            vnum, vden = _vertex_member_rows(itf)
            paired_num = np.vstack([vnum, rand_num])
            paired_den = np.vstack([vden, rand_den])
    return _SampleBatch(outer_num, outer_den, paired_num, paired_den)


def sample_members(
    itf: IntervalTransferFunction, plan: SamplingPlan
) -> List[Tuple[RealPolynomial, RealPolynomial]]:
    """Materialize the sampled member pairs, in the deterministic order the
    oracle scans them (outer block numerator-major, then paired rows)."""
    sb = _build_samples(itf, plan)
    members: List[Tuple[RealPolynomial, RealPolynomial]] = []
    if sb.outer_num is not None:
        for grow in sb.outer_num:
            gpoly = RealPolynomial(tuple(grow))
            for frow in sb.outer_den:
                members.append((gpoly, RealPolynomial(tuple(frow))))
    if sb.paired_num is not None:
        for grow, frow in zip(sb.paired_num, sb.paired_den):
            members.append((RealPolynomial(tuple(grow)), RealPolynomial(tuple(frow))))
    return members


def _scan_min_at_omega(
    sb: _SampleBatch, omega: float, phase: complex
) -> Tuple[float, Tuple[np.ndarray, np.ndarray]]:
    """Minimum of Re(phase * g/f)(j*omega) over the batch, with the member
    achieving it."""
    best = math.inf
    best_member = None
    if sb.outer_num is not None:
        gv = kernels.eval_jomega_batch(sb.outer_num, omega)
        if phase != 1:
            gv = gv * phase
        fv = kernels.eval_jomega_batch(sb.outer_den, omega)
        v, i, k = kernels.min_ratio_re_outer(gv, fv)
        if v < best:
            best = v
            best_member = (sb.outer_num[i], sb.outer_den[k])
    if sb.paired_num is not None:
        gv = kernels.eval_jomega_batch(sb.paired_num, omega)
        if phase != 1:
            gv = gv * phase
        fv = kernels.eval_jomega_batch(sb.paired_den, omega)
        v, i = kernels.min_ratio_re_paired(gv, fv)
        if v < best:
            best = v
            best_member = (sb.paired_num[i], sb.paired_den[i])
    return best, best_member


def _pointwise_detail(
    itf: IntervalTransferFunction,
    omega: float,
    plan: SamplingPlan,
    quantity: Quantity,
    tol: Tolerances,
) -> Tuple[float, OracleWitness]:
    omega = float(omega)
    if not zero_exclusion(itf.den, omega, tol):
        raise ZeroInclusion(omega)
    phase, sign = _QUANTITY_TABLE[Quantity(quantity)]
    sb = _build_samples(itf, plan)
    best, member = _scan_min_at_omega(sb, omega, phase)
    value = sign * best
    witness = OracleWitness(
        num_coeffs=tuple(float(c) for c in member[0]),
        den_coeffs=tuple(float(c) for c in member[1]),
        omega=omega,
        value=value,
    )
    return value, witness


def oracle_pointwise_min(
    itf: IntervalTransferFunction,
    omega: float,
    plan: SamplingPlan,
    quantity: Quantity = Quantity.MIN_RE,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Brute-force extremum of one quantity of g/f at j*omega over the
    sampled members. Raises ZeroInclusion if the denominator rectangle
    contains the origin at omega."""
    value, _ = _pointwise_detail(itf, omega, plan, quantity, tol)
    return value


def _global_detail(
    itf: IntervalTransferFunction,
    omega_grid: np.ndarray,
    plan: SamplingPlan,
    tol: Tolerances,
) -> Tuple[float, OracleWitness]:
    if not family_kharitonov_stable(itf.den, tol):
        raise DenominatorNotHurwitz("a denominator vertex polynomial is not Hurwitz")
    grid = np.asarray(omega_grid, dtype=np.float64).ravel()
    if grid.size == 0:
        raise ValueError("omega grid must be nonempty")
    sb = _build_samples(itf, plan)
    best = math.inf
    best_member = None
    best_omega = float(grid[0])
    for w in grid:
        v, member = _scan_min_at_omega(sb, float(w), 1 + 0j)
        if v < best:
            best = v
            best_member = member
            best_omega = float(w)
    witness = OracleWitness(
        num_coeffs=tuple(float(c) for c in best_member[0]),
        den_coeffs=tuple(float(c) for c in best_member[1]),
        omega=best_omega,
        value=best,
    )
    return best, witness


def oracle_global_inf(
    itf: IntervalTransferFunction,
    omega_grid,
    plan: SamplingPlan,
    tol: Tolerances = DEFAULT_TOL,
) -> float:
    """Brute-force infimum of Re[g/f](j*omega) over a frequency grid and
    the sampled members. Requires the denominator family Hurwitz."""
    value, _ = _global_detail(itf, omega_grid, plan, tol)
    return value


def default_omega_grid(
    itf: IntervalTransferFunction, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray:
    """0, plus-minus 121 log-spaced points over [1e-3, 1e3], plus the
    stationary and arg frequencies of every I3 vertex pair (mirrored)."""
    base = np.logspace(-3.0, 3.0, 121)
    pts = {0.0}
    for w in base:
        pts.add(float(w))
        pts.add(float(-w))
    for t in I3:
        gv = vertex_polynomial(itf.num, t.i1, t.j1)
        fv = vertex_polynomial(itf.den, t.i2, t.j2)
        try:
            pi = vertex_pair_infimum(gv, fv, ALL_REALS, tol)
        except PoleOnAxis:
            continue
        extra = list(pi.stationary_omegas)
        if pi.arg_omega is not None:
            extra.append(pi.arg_omega)
        for w in extra:
            if math.isfinite(w):
                pts.add(float(w))
                pts.add(float(-w))
    return np.asarray(sorted(pts), dtype=np.float64)


def compare_vertex_vs_oracle(
    itf: IntervalTransferFunction,
    analysis: str = "pointwise",
    *,
    omega: Optional[float] = None,
    quantity: Quantity = Quantity.MIN_RE,
    plan: Optional[SamplingPlan] = None,
    omega_grid=None,
    oracle_tol: float = DEFAULT_ORACLE_TOL,
    tol: Tolerances = DEFAULT_TOL,
    tuples: Optional[IndexSet] = None,
) -> ComparisonReport:
    """Certify a vertex result against the brute-force oracle.

    analysis="pointwise": compares pointwise_extremum at ``omega`` (any
    quantity) with the sampled extremum; a certified-exact vertex value
    beaten by the oracle by more than ``oracle_tol`` is a VIOLATION.

    analysis="gamma": compares the gain index gamma0 with the sampled
    global infimum over ``omega_grid`` (default: default_omega_grid). When
    gamma0 < 0 exact equality is claimed, so the oracle dipping below
    gamma0 - oracle_tol is a VIOLATION; when gamma0 >= 0 the claim is a
    nonnegative family infimum, so the oracle dipping below -oracle_tol is
    a VIOLATION.

    ``tuples`` (pointwise only) overrides the enumerated index set —
    the self-test hook demonstrating that a corrupted index set is caught.
    """
    plan = plan or SamplingPlan()
    if analysis == "pointwise":
        if omega is None:
            raise ValueError("pointwise comparison needs omega")
        quantity = Quantity(quantity)
        rep = pointwise_extremum(itf, omega, quantity, tol, tuples=tuples)
        if rep.status is ExtremumStatus.ZERO_INCLUSION_FAIL:
            raise ZeroInclusion(float(omega))
        oracle_value, witness = _pointwise_detail(itf, omega, plan, quantity, tol)
        certified = rep.status is ExtremumStatus.CERTIFIED_EXACT
        if quantity in (Quantity.MIN_RE, Quantity.MIN_IM):
            discrepancy = rep.value - oracle_value
        else:
            discrepancy = oracle_value - rep.value
        verdict = (
            Verdict.VIOLATION
            if certified and discrepancy > oracle_tol
            else Verdict.CONSISTENT
        )
        return ComparisonReport(
            analysis="pointwise",
            vertex_value=rep.value,
            oracle_value=oracle_value,
            discrepancy=discrepancy,
            verdict=verdict,
            certified=certified,
            witness=witness,
            plan=plan,
            seed=plan.seed,
            quantity=quantity,
            omega=float(omega),
            oracle_tol=oracle_tol,
        )

    if analysis == "gamma":
        res = spr_index(itf, tol)
        grid = omega_grid if omega_grid is not None else default_omega_grid(itf, tol)
        oracle_value, witness = _global_detail(itf, grid, plan, tol)
        claim_floor = res.gamma0 if res.gamma0 < -tol.positivity else 0.0
        discrepancy = claim_floor - oracle_value
        verdict = Verdict.VIOLATION if discrepancy > oracle_tol else Verdict.CONSISTENT
        return ComparisonReport(
            analysis="gamma",
            vertex_value=res.gamma0,
            oracle_value=oracle_value,
            discrepancy=discrepancy,
            verdict=verdict,
            certified=True,
            witness=witness,
            plan=plan,
            seed=plan.seed,
            quantity=Quantity.MIN_RE,
            omega=None,
            oracle_tol=oracle_tol,
        )

    raise ValueError(f"unknown analysis {analysis!r} (expected 'pointwise' or 'gamma')")
