"""Frequency-response extrema, strict positive realness, and sector bounds
for interval transfer functions.

Everything here reduces questions about the whole (infinite) family
g/f — g in the numerator interval family, f in the denominator family —
to finitely many Kharitonov vertex pairs selected by the index sets I1
(ratio extrema, 12 tuples), I2 (positivity/SPR, 8) and I3 (gain index and
closed-loop SPR, 12).

Pointwise quantities work on the value-set rectangles at s = j*omega.
Band/global infima work in the variable u = omega^2: for a fixed pair
(g, f) with even/odd splits g = a_g(s^2) + s*b_g(s^2),

    Re[g/f](j*omega) = N(u) / D(u),
    N = A_g*A_f + u*B_g*B_f,   D = A_f^2 + u*B_f^2,

where A(u) = a(-u), B(u) = b(-u); D(u) = |f(j*omega)|^2 >= 0. The infimum
over a band is found among band endpoints, real stationary points
(roots of N'D - N D'), and the u -> infinity limit.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import (
    DegreeDrop,
    DegreeDropPossible,
    DenominatorNotHurwitz,
    InvalidDegree,
    InvalidGamma,
    PoleOnAxis,
    ZeroInclusion,
)
from .intervals import (
    I1,
    I2,
    I3,
    IndexSet,
    IntervalPolynomial,
    ValueSetRectangle,
    VertexIndexTuple,
    extremal_parts,
    family_kharitonov_stable,
    value_set_rect,
    vertex_polynomial,
    zero_exclusion,
)
from .poly import RealPolynomial, even_odd_split, hurwitz_real, poly_add, poly_scale
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "IntervalTransferFunction",
    "BandSpec",
    "ALL_REALS",
    "Quantity",
    "ExtremumStatus",
    "ExtremumReport",
    "PairInfimum",
    "SprClassification",
    "SprIndexResult",
    "SectorBound",
    "pointwise_extremum",
    "pointwise_positivity",
    "band_infimum",
    "vertex_pair_infimum",
    "spr_check_single",
    "family_spr",
    "spr_index",
    "closed_loop_spr",
    "absolute_stability_sector",
]


@dataclass(frozen=True)
class IntervalTransferFunction:
    """Ratio of two interval polynomial families g/f."""

    num: IntervalPolynomial
    den: IntervalPolynomial

    @classmethod
    def from_pairs(cls, num_pairs, den_pairs) -> "IntervalTransferFunction":
        return cls(
            num=IntervalPolynomial.from_pairs(num_pairs),
            den=IntervalPolynomial.from_pairs(den_pairs),
        )


@dataclass(frozen=True)
class BandSpec:
    """Closed frequency band [w1, w2] (real omega, either sign)."""

    w1: float
    w2: float

    def __post_init__(self) -> None:
        w1, w2 = float(self.w1), float(self.w2)
        if not (math.isfinite(w1) and math.isfinite(w2)):
            raise ValueError("band endpoints must be finite")
        if w1 > w2:
            raise ValueError(f"band endpoints out of order: [{w1!r}, {w2!r}]")
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)

    def contains(self, w: float) -> bool:
        return self.w1 <= w <= self.w2


class _AllReals:
    """Sentinel: the unbounded band of all real frequencies."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALL_REALS"


ALL_REALS = _AllReals()

Band = Union[BandSpec, _AllReals]


class Quantity(enum.Enum):
    MIN_RE = "MIN_RE"
    MAX_RE = "MAX_RE"
    MIN_IM = "MIN_IM"
    MAX_IM = "MAX_IM"


# quantity -> (phase multiplying the numerator value set, final sign).
# min Re z = itself; max Re z = -min Re(-z); min Im z = min Re(-jz);
# max Im z = -min Re(jz).
_QUANTITY_TABLE: Dict[Quantity, Tuple[complex, float]] = {
    Quantity.MIN_RE: (1 + 0j, 1.0),
    Quantity.MAX_RE: (-1 + 0j, -1.0),
    Quantity.MIN_IM: (-1j, 1.0),
    Quantity.MAX_IM: (1j, -1.0),
}


class ExtremumStatus(enum.Enum):
    CERTIFIED_EXACT = "CERTIFIED_EXACT"
    UPPER_BOUND_ONLY = "UPPER_BOUND_ONLY"
    ZERO_INCLUSION_FAIL = "ZERO_INCLUSION_FAIL"


class SprClassification(enum.Enum):
    FAMILY_INF_EQUALS_GAMMA0 = "FAMILY_INF_EQUALS_GAMMA0"
    FAMILY_INF_ZERO = "FAMILY_INF_ZERO"
    FAMILY_INF_NONNEGATIVE = "FAMILY_INF_NONNEGATIVE"


@dataclass(frozen=True)
class ExtremumReport:
    """Result of a vertex extremum computation.

    ``status`` semantics: CERTIFIED_EXACT means the vertex theorem's
    positivity regime holds, so ``value`` equals the family extremum.
    UPPER_BOUND_ONLY means ``value`` is only what the vertex members attain
    (a bound on the family extremum from the inside: an upper bound for MIN
    quantities, a lower bound for MAX quantities). ZERO_INCLUSION_FAIL
    means the denominator value set contains the origin, the ratio is
    unbounded, and ``value`` is meaningless (NaN).
    """

    value: float
    status: ExtremumStatus
    arg_tuple: Optional[VertexIndexTuple]
    arg_omega: Optional[float]
    attained: bool
    quantity: Quantity = Quantity.MIN_RE
    corner_extremum: Optional[float] = None


@dataclass(frozen=True)
class PairInfimum:
    """Infimum of Re[g/f](j*omega) over a band for one fixed pair."""

    value: float
    attained: bool
    arg_omega: Optional[float]
    stationary_omegas: Tuple[float, ...] = ()


@dataclass(frozen=True)
class SprIndexResult:
    """Vertex gain index gamma0 and the family classification.

    gamma0 is the minimum over the I3 vertex pairs of the global infimum
    of Re[g/f](j*omega). Classification of the family-wide infimum gamma1:
    gamma0 < 0 implies gamma1 = gamma0 (FAMILY_INF_EQUALS_GAMMA0);
    gamma0 = 0 implies gamma1 = 0 (FAMILY_INF_ZERO); gamma0 > 0 implies
    gamma1 >= 0 (FAMILY_INF_NONNEGATIVE) and gamma1 may lie anywhere in
    [0, gamma0].
    """

    gamma0: float
    classification: SprClassification
    per_tuple_infima: Dict[VertexIndexTuple, float] = field(compare=False)
    arg_tuple: Optional[VertexIndexTuple] = None
    arg_omega: Optional[float] = None
    attained: bool = True


@dataclass(frozen=True)
class SectorBound:
    """Feedback-gain sector (0, k_upper) certified robustly absolutely
    stable; k_upper = math.inf means unbounded."""

    k_upper: float
    gamma0: float
    classification: SprClassification

    @property
    def is_unbounded(self) -> bool:
        return math.isinf(self.k_upper)


def _flip(i: int) -> int:
    return 3 - i


def _transform_rect(rect: ValueSetRectangle, phase: complex) -> ValueSetRectangle:
    """Image of an axis-aligned rectangle under multiplication by a phase
    in {1, -1, j, -j} (still axis-aligned)."""
    from .intervals import RealInterval  # local import keeps module surface tidy

    if phase == 1:
        return rect
    if phase == -1:
        return ValueSetRectangle(
            re=RealInterval(-rect.re.hi, -rect.re.lo),
            im=RealInterval(-rect.im.hi, -rect.im.lo),
        )
    if phase == -1j:  # -j*(x+jy) = y - jx
        return ValueSetRectangle(
            re=rect.im, im=RealInterval(-rect.re.hi, -rect.re.lo)
        )
    if phase == 1j:  # j*(x+jy) = -y + jx
        return ValueSetRectangle(
            re=RealInterval(-rect.im.hi, -rect.im.lo), im=rect.re
        )
    raise ValueError(f"unsupported phase {phase!r}")


def _corner_source(phase: complex, p: int, q: int) -> Tuple[int, int]:
    """Original-rectangle corner indices (a, b) whose image under ``phase``
    is the transformed-rectangle corner (p, q)."""
    if phase == 1:
        return p, q
    if phase == -1:
        return _flip(p), _flip(q)
    if phase == -1j:
        return _flip(q), p
    if phase == 1j:
        return q, _flip(p)
    raise ValueError(f"unsupported phase {phase!r}")


def _extremal_part_index(sign_index: int, omega: float, odd_part: bool) -> int:
    """Map a sign-pattern bound index back to the extremal-part index.

    For omega >= 0 they coincide; for omega < 0 the imaginary bounds swap,
    so odd-part indices flip.
    """
    if odd_part and omega < 0:
        return _flip(sign_index)
    return sign_index


def pointwise_extremum(
    itf: IntervalTransferFunction,
    omega: float,
    quantity: Quantity = Quantity.MIN_RE,
    tol: Tolerances = DEFAULT_TOL,
    *,
    tuples: Optional[IndexSet] = None,
) -> ExtremumReport:
    """Family extremum of one quantity of g/f at s = j*omega from the I1
    vertex corners.

    The minimum of the transformed real part over the twelve I1 corner
    pairs equals the family minimum whenever it is strictly positive
    (CERTIFIED_EXACT); otherwise it is reported as the vertex bound
    (UPPER_BOUND_ONLY). If the denominator rectangle contains the origin
    the result is ZERO_INCLUSION_FAIL with value NaN.

    ``tuples`` overrides the enumerated index set (diagnostic/self-test
    hook used to demonstrate oracle violation detection).
    """
    omega = float(omega)
    quantity = Quantity(quantity)
    phase, sign = _QUANTITY_TABLE[quantity]
    if not zero_exclusion(itf.den, omega, tol):
        return ExtremumReport(
            value=math.nan,
            status=ExtremumStatus.ZERO_INCLUSION_FAIL,
            arg_tuple=None,
            arg_omega=None,
            attained=False,
            quantity=quantity,
        )
    den_rect = value_set_rect(itf.den, omega)
    num_rect = _transform_rect(value_set_rect(itf.num, omega), phase)
    selected = {tuple(t) for t in (tuples if tuples is not None else I1)}

    best = math.inf
    best_sgn = None
    all_min = math.inf
    for p, q, r, t in product((1, 2), repeat=4):
        v = (num_rect.corner(p, q) / den_rect.corner(r, t)).real
        if v < all_min:
            all_min = v
        if (p, q, r, t) in selected and v < best:
            best = v
            best_sgn = (p, q, r, t)

    p, q, r, t = best_sgn
    a, b = _corner_source(phase, p, q)
    arg = VertexIndexTuple(
        i1=a,
        j1=_extremal_part_index(b, omega, odd_part=True),
        i2=r,
        j2=_extremal_part_index(t, omega, odd_part=True),
    )
    certified = best > tol.positivity
    return ExtremumReport(
        value=sign * best,
        status=ExtremumStatus.CERTIFIED_EXACT if certified else ExtremumStatus.UPPER_BOUND_ONLY,
        arg_tuple=arg,
        arg_omega=omega,
        attained=True,
        quantity=quantity,
        corner_extremum=sign * all_min,
    )


def pointwise_positivity(
    itf: IntervalTransferFunction, omega: float, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Strict positivity of Re[g/f](j*omega) over the whole family, decided
    by the eight I2 corner pairs. Raises ZeroInclusion when the denominator
    rectangle contains the origin."""
    omega = float(omega)
    if not zero_exclusion(itf.den, omega, tol):
        raise ZeroInclusion(omega)
    den_rect = value_set_rect(itf.den, omega)
    num_rect = value_set_rect(itf.num, omega)
    for p, q, r, t in I2:
        v = (num_rect.corner(p, q) / den_rect.corner(r, t)).real
        if not v > tol.positivity:
            return False
    return True


def _u_parts(p: RealPolynomial) -> Tuple[np.ndarray, np.ndarray]:
    """(A, B) with A(u) = alpha(-u), B(u) = beta(-u) for u = omega^2."""
    parts = even_odd_split(p)
    signs_a = np.power(-1.0, np.arange(len(parts.alpha.coeffs)))
    signs_b = np.power(-1.0, np.arange(len(parts.beta.coeffs)))
    return parts.alpha.array() * signs_a, parts.beta.array() * signs_b


def _ratio_nd(g: RealPolynomial, f: RealPolynomial) -> Tuple[np.ndarray, np.ndarray]:
    """N, D with Re[g/f](j*omega) = N(u)/D(u), u = omega^2."""
    ag, bg = _u_parts(g)
    af, bf = _u_parts(f)
    u = np.asarray([0.0, 1.0])
    n = npp.polyadd(npp.polymul(ag, af), npp.polymul(u, npp.polymul(bg, bf)))
    d = npp.polyadd(npp.polymul(af, af), npp.polymul(u, npp.polymul(bf, bf)))
    return np.atleast_1d(n), np.atleast_1d(d)


def _trim_u(arr: np.ndarray, rel: float) -> np.ndarray:
    scale = float(np.max(np.abs(arr))) if arr.size else 0.0
    if scale == 0.0:
        return np.zeros(1)
    keep = np.nonzero(np.abs(arr) > rel * scale)[0]
    return np.array(arr[: keep[-1] + 1]) if keep.size else np.zeros(1)


def _real_roots(arr: np.ndarray, rel: float) -> list:
    """Real roots of an ascending-coefficient array, liberally filtered:
    near-real roots are kept (extra candidate points are harmless)."""
    a = _trim_u(np.asarray(arr, dtype=np.float64), rel)
    if a.size < 2:
        return []
    rts = np.roots(a[::-1])
    out = []
    for r in rts:
        if abs(r.imag) <= 1e-6 * (1.0 + abs(r.real)):
            out.append(float(r.real))
    return sorted(out)


def _band_to_u(band: Band) -> Tuple[float, Optional[float]]:
    if isinstance(band, _AllReals):
        return 0.0, None
    lo, hi = band.w1, band.w2
    if lo <= 0.0 <= hi:
        return 0.0, max(lo * lo, hi * hi)
    a, b = min(abs(lo), abs(hi)), max(abs(lo), abs(hi))
    return a * a, b * b


def _representative_omega(u: float, band: Band) -> float:
    w = math.sqrt(max(u, 0.0))
    if isinstance(band, _AllReals) or band.contains(w):
        return w
    return -w


def vertex_pair_infimum(
    g: RealPolynomial,
    f: RealPolynomial,
    band: Band = ALL_REALS,
    tol: Tolerances = DEFAULT_TOL,
) -> PairInfimum:
    """Infimum of Re[g/f](j*omega) over a frequency band for one fixed
    pair, via the u = omega^2 parametrization.

    Candidates: band endpoints, real stationary points of N/D inside, and
    (for unbounded bands) the u -> infinity limit; ``attained`` is False
    exactly when only the limit achieves the infimum. Raises PoleOnAxis if
    D = |f(j*omega)|^2 has a root in the band.
    """
    n, d = _ratio_nd(g, f)
    n = _trim_u(n, tol.zero)
    d = _trim_u(d, tol.zero)
    u_lo, u_hi = _band_to_u(band)

    if float(np.max(np.abs(d))) == 0.0:
        raise PoleOnAxis(message="denominator is identically zero")
    edge = 1e-12
    for u0 in _real_roots(d, tol.zero):
        top = (u_hi + edge * (1.0 + abs(u_hi))) if u_hi is not None else math.inf
        if u_lo - edge * (1.0 + abs(u_lo)) <= u0 <= top:
            raise PoleOnAxis(omega=math.sqrt(max(u0, 0.0)))

    candidates = [u_lo]
    if u_hi is not None and u_hi > u_lo:
        candidates.append(u_hi)
    e = npp.polysub(npp.polymul(npp.polyder(n), d), npp.polymul(n, npp.polyder(d)))
    stationary = []
    for u0 in _real_roots(np.atleast_1d(e), tol.zero):
        if u_lo < u0 and (u_hi is None or u0 < u_hi):
            stationary.append(u0)
    candidates.extend(stationary)

    best_val = math.inf
    best_u = u_lo
    for u0 in candidates:
        v = float(npp.polyval(u0, n) / npp.polyval(u0, d))
        if v < best_val:
            best_val = v
            best_u = u0

    attained = True
    arg: Optional[float] = _representative_omega(best_u, band)
    if u_hi is None:
        dn, dd = n.size - 1, d.size - 1
        if dn < dd:
            limit = 0.0
        elif dn == dd:
            limit = float(n[-1] / d[-1])
        else:
            limit = math.inf if n[-1] / d[-1] > 0 else -math.inf
        if limit < best_val:
            best_val = limit
            attained = False
            arg = None

    stat_omegas = tuple(math.sqrt(max(u0, 0.0)) for u0 in stationary)
    return PairInfimum(
        value=best_val, attained=attained, arg_omega=arg, stationary_omegas=stat_omegas
    )


def _band_zero_inclusion_witness(
    den: IntervalPolynomial, band: Band, tol: Tolerances
) -> Optional[float]:
    """An omega in the band where the denominator rectangle contains the
    origin, or None. Zero-exclusion status can only change where one of the
    four bounding functions crosses zero, so probing those breakpoints and
    the midpoints between them decides the whole band."""
    ep = extremal_parts(den)
    crossings = {0.0}
    for part in (ep.alpha1, ep.alpha2, ep.beta1, ep.beta2):
        for u0 in _real_roots(part.array(), tol.zero):
            if u0 <= 0.0:
                w = math.sqrt(-u0)
                crossings.add(w)
                crossings.add(-w)
    if isinstance(band, _AllReals):
        wmax = max(abs(w) for w in crossings)
        lo, hi = -(wmax + 1.0), wmax + 1.0
    else:
        lo, hi = band.w1, band.w2
    pts = sorted({lo, hi} | {w for w in crossings if lo <= w <= hi})
    probes = list(pts)
    for a, b in zip(pts[:-1], pts[1:]):
        probes.append(0.5 * (a + b))
    for w in probes:
        if not zero_exclusion(den, w, tol):
            return w
    return None


def band_infimum(
    itf: IntervalTransferFunction,
    band: Band = ALL_REALS,
    tol: Tolerances = DEFAULT_TOL,
) -> ExtremumReport:
    """Family infimum of Re[g/f](j*omega) over a band from the twelve I1
    vertex pairs. Raises ZeroInclusion if the denominator rectangle
    contains the origin anywhere in the band."""
    witness = _band_zero_inclusion_witness(itf.den, band, tol)
    if witness is not None:
        raise ZeroInclusion(witness)
    best: Optional[PairInfimum] = None
    best_t: Optional[VertexIndexTuple] = None
    for t in I1:
        gv = vertex_polynomial(itf.num, t.i1, t.j1)
        fv = vertex_polynomial(itf.den, t.i2, t.j2)
        pi = vertex_pair_infimum(gv, fv, band, tol)
        if best is None or pi.value < best.value:
            best = pi
            best_t = t
    certified = best.value > tol.positivity
    return ExtremumReport(
        value=best.value,
        status=ExtremumStatus.CERTIFIED_EXACT if certified else ExtremumStatus.UPPER_BOUND_ONLY,
        arg_tuple=best_t,
        arg_omega=best.arg_omega,
        attained=best.attained,
        quantity=Quantity.MIN_RE,
    )


def spr_check_single(
    g: RealPolynomial, f: RealPolynomial, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Strict positive realness of one fixed ratio g/f: f Hurwitz and
    Re[g/f](j*omega) > 0 for every finite real omega.

    The frequency condition is N(u) > 0 on [0, infinity) (u = omega^2),
    decided by sign evaluation at 0, at every nonnegative root candidate
    of N, at midpoints between consecutive candidates, and beyond the
    largest, plus the trimmed leading sign for the tail.
    """
    df = f.degree(tol)
    if df == 0:
        if abs(f.coeffs[0]) == 0.0:
            return False
    elif not hurwitz_real(f, tol):
        return False

    n, _ = _ratio_nd(g, f)
    n = _trim_u(n, tol.zero)
    if float(np.max(np.abs(n))) == 0.0:
        return False
    if n.size >= 2 and n[-1] < 0:
        return False

    us = [u for u in _real_roots(n, tol.zero) if u >= 0.0]
    points = [0.0]
    points.extend(us)
    for a, b in zip(us[:-1], us[1:]):
        points.append(0.5 * (a + b))
    top = max(1.0, 2.0 * (us[-1] if us else 0.0) + 1.0)
    points.append(top)
    return all(float(npp.polyval(u, n)) > tol.positivity for u in points)


def _effective_length(ip: IntervalPolynomial) -> int:
    for k in range(len(ip.coeffs) - 1, -1, -1):
        iv = ip.coeffs[k]
        if iv.lo != 0.0 or iv.hi != 0.0:
            return k + 1
    return 1


def family_spr(itf: IntervalTransferFunction, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Strict positive realness of the whole family from the eight I2
    vertex pairs. Requires the denominator leading interval to exclude
    zero (DegreeDropPossible otherwise)."""
    lead = itf.den.coeffs[-1]
    if lead.lo <= 0.0 <= lead.hi:
        raise DegreeDropPossible(
            f"denominator leading interval [{lead.lo!r}, {lead.hi!r}] contains 0"
        )
    return all(
        spr_check_single(
            vertex_polynomial(itf.num, t.i1, t.j1),
            vertex_polynomial(itf.den, t.i2, t.j2),
            tol,
        )
        for t in I2
    )


def spr_index(
    itf: IntervalTransferFunction, tol: Tolerances = DEFAULT_TOL
) -> SprIndexResult:
    """Vertex gain index gamma0: the minimum over the I3 vertex pairs of
    the global infimum of Re[g/f](j*omega).

    Requires numerator order <= denominator order (the ratio must stay
    bounded at infinity) and all four denominator vertices Hurwitz."""
    if _effective_length(itf.num) > _effective_length(itf.den):
        raise InvalidDegree(
            "gain index needs numerator order <= denominator order"
        )
    if not family_kharitonov_stable(itf.den, tol):
        raise DenominatorNotHurwitz("a denominator vertex polynomial is not Hurwitz")

    per_tuple: Dict[VertexIndexTuple, float] = {}
    best: Optional[PairInfimum] = None
    best_t: Optional[VertexIndexTuple] = None
    for t in I3:
        gv = vertex_polynomial(itf.num, t.i1, t.j1)
        fv = vertex_polynomial(itf.den, t.i2, t.j2)
        pi = vertex_pair_infimum(gv, fv, ALL_REALS, tol)
        per_tuple[t] = pi.value
        if best is None or pi.value < best.value:
            best = pi
            best_t = t

    gamma0 = best.value
    if gamma0 < -tol.positivity:
        cls = SprClassification.FAMILY_INF_EQUALS_GAMMA0
    elif gamma0 <= tol.positivity:
        cls = SprClassification.FAMILY_INF_ZERO
    else:
        cls = SprClassification.FAMILY_INF_NONNEGATIVE
    return SprIndexResult(
        gamma0=gamma0,
        classification=cls,
        per_tuple_infima=per_tuple,
        arg_tuple=best_t,
        arg_omega=best.arg_omega,
        attained=best.attained,
    )


def closed_loop_spr(
    itf: IntervalTransferFunction,
    gamma: float = 1.0,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Strict positive realness of the closed-loop family
    g / (f + gamma*g) over the I3 vertex pairs (gamma > 0).

    For the tuple (i1, j1, i2, j2) the checked member is
    g_{i2 j2} / (f_{i1 j1} + gamma * g_{i2 j2}); the combined denominator
    must not drop degree below max(deg f, deg gamma*g) (DegreeDrop)."""
    gamma = float(gamma)
    if not (math.isfinite(gamma) and gamma > 0.0):
        raise InvalidGamma(f"feedback gain must be strictly positive, got {gamma!r}")
    for t in I3:
        gv = vertex_polynomial(itf.num, t.i2, t.j2)
        fv = vertex_polynomial(itf.den, t.i1, t.j1)
        scaled = poly_scale(gv, gamma)
        den_cl = poly_add(fv, scaled)
        expected = max(fv.degree(tol), scaled.degree(tol))
        if den_cl.degree(tol) < expected:
            raise DegreeDrop(
                f"closed-loop denominator drops degree at tuple {t} "
                f"(expected {expected}, got {den_cl.degree(tol)})"
            )
        if not spr_check_single(gv, den_cl, tol):
            return False
    return True


def absolute_stability_sector(
    itf: IntervalTransferFunction, tol: Tolerances = DEFAULT_TOL
) -> SectorBound:
    """Robust absolute-stability sector (0, k_upper) from the gain index:
    k_upper = -1/gamma0 when gamma0 < 0, unbounded otherwise."""
    res = spr_index(itf, tol)
    if res.gamma0 < -tol.positivity:
        k_upper = -1.0 / res.gamma0
    else:
        k_upper = math.inf
    return SectorBound(
        k_upper=k_upper, gamma0=res.gamma0, classification=res.classification
    )
