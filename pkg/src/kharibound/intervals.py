"""Interval polynomial families and their vertex machinery.

An interval polynomial fixes an independent closed interval per
coefficient. Its frequency-domain value set at s = j*omega is an
axis-aligned rectangle whose sides are reached by four extremal
even/odd-part polynomials; combining two extremal even parts with two
extremal odd parts yields the four Kharitonov vertex polynomials.

The module also carries the three vertex selection sets I1 (12 tuples),
I2 (8), I3 (12) used by the ratio-extremum, positivity, and gain-index
analyses, plus vertex stability checks for shifted/rotated first-order
complex families and general complex combinations g + (beta + j*gamma)*f.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from .errors import (
    DegenerateLeadingCoefficient,
    DegreeDropPossible,
    InvalidRotation,
    InvalidShift,
)
from .poly import (
    ComplexPolynomial,
    RealPolynomial,
    first_order_complex_hurwitz,
    hurwitz_complex,
    hurwitz_real,
)
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "RealInterval",
    "IntervalPolynomial",
    "ExtremalParts",
    "VertexIndexTuple",
    "IndexSet",
    "ValueSetRectangle",
    "ComplexBox",
    "I1",
    "I2",
    "I3",
    "index_set",
    "extremal_parts",
    "vertex_polynomial",
    "kharitonov_vertices",
    "value_set_rect",
    "zero_exclusion",
    "family_kharitonov_stable",
    "check_w1_vertices",
    "check_w2_vertices",
    "check_w6_vertices",
    "real_box_first_order_stable",
]


@dataclass(frozen=True)
class RealInterval:
    """Closed interval [lo, hi] with lo <= hi, both finite."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError("interval bounds must be finite")
        if lo > hi:
            raise ValueError(f"interval bounds out of order: [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def bound(self, which: int) -> float:
        """Bound by index: 1 -> lo, 2 -> hi."""
        if which == 1:
            return self.lo
        if which == 2:
            return self.hi
        raise ValueError("bound index must be 1 or 2")

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack


@dataclass(frozen=True)
class IntervalPolynomial:
    """Polynomial family with one independent interval per coefficient."""

    coeffs: Tuple[RealInterval, ...]

    def __post_init__(self) -> None:
        ivs = tuple(
            c if isinstance(c, RealInterval) else RealInterval(*c) for c in self.coeffs
        )
        if not ivs:
            raise ValueError("an interval polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", ivs)

    @classmethod
    def from_pairs(cls, pairs) -> "IntervalPolynomial":
        return cls(tuple(RealInterval(float(lo), float(hi)) for lo, hi in pairs))

    @property
    def nominal_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_point_family(self) -> bool:
        return all(c.is_point for c in self.coeffs)

    def member(self, values) -> RealPolynomial:
        """Member polynomial from one value per coefficient (clamped check)."""
        vals = tuple(float(v) for v in values)
        if len(vals) != len(self.coeffs):
            raise ValueError("member needs exactly one value per coefficient")
        for v, iv in zip(vals, self.coeffs):
            if not iv.contains(v, slack=1e-12 * max(1.0, abs(iv.lo), abs(iv.hi))):
                raise ValueError(f"value {v!r} outside interval [{iv.lo!r}, {iv.hi!r}]")
        return RealPolynomial(vals)

    def midpoint(self) -> RealPolynomial:
        return RealPolynomial(tuple(0.5 * (c.lo + c.hi) for c in self.coeffs))

    def bounds_arrays(self) -> tuple:
        lo = np.asarray([c.lo for c in self.coeffs], dtype=np.float64)
        hi = np.asarray([c.hi for c in self.coeffs], dtype=np.float64)
        return lo, hi


@dataclass(frozen=True)
class ExtremalParts:
    """The four extremal even/odd parts, as polynomials in u = s^2.

    For u <= 0 (u = -omega^2): alpha1(u) <= alpha(u) <= alpha2(u) and
    beta1(u) <= beta(u) <= beta2(u) for every member's split (alpha, beta).
    """

    alpha1: RealPolynomial
    alpha2: RealPolynomial
    beta1: RealPolynomial
    beta2: RealPolynomial

    def alpha(self, i: int) -> RealPolynomial:
        if i == 1:
            return self.alpha1
        if i == 2:
            return self.alpha2
        raise ValueError("part index must be 1 or 2")

    def beta(self, j: int) -> RealPolynomial:
        if j == 1:
            return self.beta1
        if j == 2:
            return self.beta2
        raise ValueError("part index must be 1 or 2")


def _extremal_bound(iv: RealInterval, t: int, first_low: bool) -> float:
    """Bound pattern lo,hi,lo,hi,... (or hi,lo,...) along u-powers t."""
    take_low = (t % 2 == 0) == first_low
    return iv.lo if take_low else iv.hi


def extremal_parts(ip: IntervalPolynomial) -> ExtremalParts:
    """Extremal even/odd parts: alternating lo/hi coefficient picks.

    alpha1 takes lo, hi, lo, ... over even coefficients a0, a2, a4, ...;
    alpha2 the complement; beta1/beta2 likewise over a1, a3, a5, ...
    Together they bound every member's value set rectangle at u = -omega^2.
    """
    even = ip.coeffs[0::2]
    odd = ip.coeffs[1::2]

    def build(ivs, first_low: bool) -> RealPolynomial:
        if not ivs:
            return RealPolynomial((0.0,))
        return RealPolynomial(
            tuple(_extremal_bound(iv, t, first_low) for t, iv in enumerate(ivs))
        )

    return ExtremalParts(
        alpha1=build(even, True),
        alpha2=build(even, False),
        beta1=build(odd, True),
        beta2=build(odd, False),
    )


def vertex_polynomial(ip: IntervalPolynomial, i: int, j: int) -> RealPolynomial:
    """Kharitonov vertex polynomial combining extremal even part i with
    extremal odd part j (i, j in {1, 2})."""
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError("vertex indices must be 1 or 2")
    out = []
    for d, iv in enumerate(ip.coeffs):
        t = d // 2
        first_low = (i == 1) if d % 2 == 0 else (j == 1)
        out.append(_extremal_bound(iv, t, first_low))
    return RealPolynomial(tuple(out))


def kharitonov_vertices(ip: IntervalPolynomial) -> dict:
    """All four vertex polynomials keyed by (i, j)."""
    return {(i, j): vertex_polynomial(ip, i, j) for i in (1, 2) for j in (1, 2)}


@dataclass(frozen=True)
class VertexIndexTuple:
    """Selector (i1, j1, i2, j2): numerator vertex (i1, j1), denominator
    vertex (i2, j2); every component is 1 or 2."""

    i1: int
    j1: int
    i2: int
    j2: int

    def __post_init__(self) -> None:
        for name in ("i1", "j1", "i2", "j2"):
            v = getattr(self, name)
            if v not in (1, 2):
                raise ValueError(f"tuple component {name} must be 1 or 2, got {v!r}")
            object.__setattr__(self, name, int(v))

    def __iter__(self) -> Iterator[int]:
        yield self.i1
        yield self.j1
        yield self.i2
        yield self.j2

    def __str__(self) -> str:
        return f"{self.i1}{self.j1}{self.i2}{self.j2}"

    @classmethod
    def from_string(cls, s: str) -> "VertexIndexTuple":
        s = s.strip()
        if len(s) != 4 or any(ch not in "12" for ch in s):
            raise ValueError(f"expected four characters from {{1,2}}, got {s!r}")
        return cls(int(s[0]), int(s[1]), int(s[2]), int(s[3]))


@dataclass(frozen=True)
class IndexSet:
    """Named, ordered set of vertex index tuples."""

    name: str
    tuples: Tuple[VertexIndexTuple, ...]

    def __post_init__(self) -> None:
        tpls = tuple(
            t if isinstance(t, VertexIndexTuple) else VertexIndexTuple(*t)
            for t in self.tuples
        )
        if len(set(tpls)) != len(tpls):
            raise ValueError("index set contains duplicate tuples")
        object.__setattr__(self, "tuples", tpls)

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[VertexIndexTuple]:
        return iter(self.tuples)

    def __contains__(self, t) -> bool:
        return tuple(t) in {tuple(x) for x in self.tuples}

    def without(self, t) -> "IndexSet":
        """Copy with one tuple removed (diagnostic/self-test hook)."""
        drop = tuple(t)
        kept = tuple(x for x in self.tuples if tuple(x) != drop)
        if len(kept) == len(self.tuples):
            raise ValueError(f"tuple {drop} not in {self.name}")
        return IndexSet(f"{self.name}-minus-{''.join(map(str, drop))}", kept)


def _mk_index_set(name: str, raw: tuple) -> IndexSet:
    return IndexSet(name, tuple(VertexIndexTuple.from_string(s) for s in raw))


# The twelve-tuple set governing ratio extrema, the eight-tuple set
# governing positivity (a subset of both others), and the twelve-tuple set
# governing the gain index and closed-loop analyses.
I1 = _mk_index_set(
    "I1",
    (
        "1222", "1221", "2221", "2211", "2111", "2112",
        "1112", "1122", "1211", "2212", "2122", "1121",
    ),
)
I2 = _mk_index_set(
    "I2",
    ("1112", "1222", "2111", "2221", "1121", "1211", "2122", "2212"),
)
I3 = _mk_index_set(
    "I3",
    (
        "1111", "1212", "2222", "2121", "1112", "1222",
        "2221", "2111", "1211", "2212", "2122", "1121",
    ),
)

_INDEX_SETS = {"I1": I1, "I2": I2, "I3": I3}


def index_set(name: str) -> IndexSet:
    """Look up one of the built-in vertex selection sets by name."""
    try:
        return _INDEX_SETS[name.upper()]
    except KeyError:
        raise KeyError(f"unknown index set {name!r}; expected one of I1, I2, I3") from None


@dataclass(frozen=True)
class ValueSetRectangle:
    """Axis-aligned rectangle {re + j*im : re in re_iv, im in im_iv}."""

    re: RealInterval
    im: RealInterval

    def corner(self, p: int, q: int) -> complex:
        """Corner by bound indices: p selects the real bound, q the
        imaginary bound (1 -> lo, 2 -> hi)."""
        return complex(self.re.bound(p), self.im.bound(q))

    def contains_origin(self, slack: float = 0.0) -> bool:
        return self.re.contains(0.0, slack) and self.im.contains(0.0, slack)


@dataclass(frozen=True)
class ComplexBox:
    """Axis-aligned box of complex numbers: real part in ``re``, imaginary
    part in ``im``."""

    re: RealInterval
    im: RealInterval

    def __post_init__(self) -> None:
        re = self.re if isinstance(self.re, RealInterval) else RealInterval(*self.re)
        im = self.im if isinstance(self.im, RealInterval) else RealInterval(*self.im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def corner(self, p: int, q: int) -> complex:
        return complex(self.re.bound(p), self.im.bound(q))

    def contains_zero(self, slack: float = 0.0) -> bool:
        return self.re.contains(0.0, slack) and self.im.contains(0.0, slack)


def value_set_rect(ip: IntervalPolynomial, omega: float) -> ValueSetRectangle:
    """Value set of the family at s = j*omega: an axis-aligned rectangle.

    Real side [alpha1(u), alpha2(u)] and imaginary side spanned by
    omega*beta1(u), omega*beta2(u) with u = -omega^2 (sides swap for
    omega < 0).
    """
    omega = float(omega)
    u = -(omega * omega)
    ep = extremal_parts(ip)
    re_lo, re_hi = ep.alpha1(u), ep.alpha2(u)
    im_a, im_b = omega * ep.beta1(u), omega * ep.beta2(u)
    # The extremal parts dominate exactly; a min/max normalization absorbs
    # last-bit rounding inversions on (near-)point families.
    if re_lo > re_hi:
        re_lo, re_hi = re_hi, re_lo
    if im_a > im_b:
        im_a, im_b = im_b, im_a
    return ValueSetRectangle(re=RealInterval(re_lo, re_hi), im=RealInterval(im_a, im_b))


def zero_exclusion(
    ip: IntervalPolynomial, omega: float, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """True iff the value set rectangle at j*omega strictly excludes the
    origin (by more than the positivity tolerance)."""
    rect = value_set_rect(ip, omega)
    return (
        rect.re.lo > tol.positivity
        or rect.re.hi < -tol.positivity
        or rect.im.lo > tol.positivity
        or rect.im.hi < -tol.positivity
    )


def family_kharitonov_stable(
    ip: IntervalPolynomial, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Whole-family Hurwitz verdict from the four vertex polynomials.

    Requires the leading coefficient interval to exclude zero (otherwise
    members drop degree and the vertex argument does not certify:
    DegreeDropPossible).
    """
    lead = ip.coeffs[-1]
    if lead.lo <= 0.0 <= lead.hi:
        raise DegreeDropPossible(
            f"leading coefficient interval [{lead.lo!r}, {lead.hi!r}] contains 0"
        )
    return all(hurwitz_real(v, tol) for v in kharitonov_vertices(ip).values())


def _tuple_corners(c0: ComplexBox, c1: ComplexBox, t: VertexIndexTuple):
    """Corner pair selected by a tuple: positions map to
    (re c0, im c0, re c1, im c1)."""
    return c0.corner(t.i1, t.j1), c1.corner(t.i2, t.j2)


def check_w1_vertices(
    c0: ComplexBox,
    c1: ComplexBox,
    beta: float,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Stability of the shifted first-order complex box family
    c1*(s - beta) + c0 (beta > 0) from its I1 corner members.

    Each corner member c1*(s - beta) + c0 = c1*s + (c0 - beta*c1) is a
    first-order complex polynomial; the twelve I1 corners decide the whole
    box family.
    """
    beta = float(beta)
    if not beta > 0.0:
        raise InvalidShift(f"shift must be strictly positive, got {beta!r}")
    if c1.contains_zero():
        raise DegenerateLeadingCoefficient("leading box contains 0")
    for t in I1:
        z0, z1 = _tuple_corners(c0, c1, t)
        if not first_order_complex_hurwitz(z1, z0 - beta * z1, tol):
            return False
    return True


def check_w2_vertices(
    c0: ComplexBox,
    c1: ComplexBox,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Stability of the first-order complex box family c1*s + c0 from its
    eight I2 corner members."""
    if c1.contains_zero():
        raise DegenerateLeadingCoefficient("leading box contains 0")
    for t in I2:
        z0, z1 = _tuple_corners(c0, c1, t)
        if not first_order_complex_hurwitz(z1, z0, tol):
            return False
    return True


def real_box_first_order_stable(
    c0: RealInterval,
    c1: RealInterval,
    beta: float,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Stability of the real box family c1*(s + beta) + c0 (beta > 0) from
    its four corners c1*s + (beta*c1 + c0)."""
    beta = float(beta)
    if not beta > 0.0:
        raise InvalidShift(f"shift must be strictly positive, got {beta!r}")
    if c1.lo <= 0.0 <= c1.hi:
        raise DegenerateLeadingCoefficient("leading interval contains 0")
    for a in (c0.lo, c0.hi):
        for b in (c1.lo, c1.hi):
            if not hurwitz_real(RealPolynomial((beta * b + a, b)), tol):
                return False
    return True


def check_w6_vertices(
    gfam: IntervalPolynomial,
    ffam: IntervalPolynomial,
    beta: float,
    gamma: float,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Stability of the complex combination family g + (beta + j*gamma)*f
    over its I3 vertex pairs (beta > 0, gamma != 0).

    The leading coefficient box of the combination must exclude zero;
    otherwise members drop degree (DegreeDropPossible).
    """
    beta = float(beta)
    gamma = float(gamma)
    if not beta > 0.0:
        raise InvalidShift(f"shift must be strictly positive, got {beta!r}")
    if gamma == 0.0:
        raise InvalidRotation("rotation coefficient must be nonzero")

    m = gfam.nominal_degree
    n = ffam.nominal_degree
    deg = max(m, n)
    g_lead = gfam.coeffs[deg] if deg <= m else RealInterval(0.0, 0.0)
    f_lead = ffam.coeffs[deg] if deg <= n else RealInterval(0.0, 0.0)
    lead_re = RealInterval(
        g_lead.lo + beta * f_lead.lo, g_lead.hi + beta * f_lead.hi
    )
    if gamma > 0:
        lead_im = RealInterval(gamma * f_lead.lo, gamma * f_lead.hi)
    else:
        lead_im = RealInterval(gamma * f_lead.hi, gamma * f_lead.lo)
    if ComplexBox(lead_re, lead_im).contains_zero():
        raise DegreeDropPossible("leading coefficient box of g + (beta + j*gamma)*f contains 0")

    lam = complex(beta, gamma)
    width = deg + 1
    for t in I3:
        gv = vertex_polynomial(gfam, t.i1, t.j1).coeffs
        fv = vertex_polynomial(ffam, t.i2, t.j2).coeffs
        comb = [0j] * width
        for k, c in enumerate(gv):
            comb[k] += c
        for k, c in enumerate(fv):
            comb[k] += lam * c
        if not hurwitz_complex(ComplexPolynomial(tuple(comb)), tol):
            return False
    return True
