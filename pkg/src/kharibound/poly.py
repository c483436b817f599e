"""Fixed-coefficient polynomials and Hurwitz stability tests.

Coefficients are stored ascending: ``coeffs[k]`` multiplies ``s**k``. The
effective degree ignores trailing coefficients whose magnitude falls below
the relative zero threshold of the active :class:`Tolerances`, and is
recomputed after every arithmetic operation.

Stability is decided against a margin: a polynomial counts as Hurwitz only
when every root's real part is below ``-tol.stability_margin``. For real
polynomials a batched Routh table is the fast path; companion-matrix roots
are the fallback and the authority whenever the table is marginal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from numpy.polynomial import polynomial as npp

from . import kernels
from .errors import (
    DegenerateLeadingCoefficient,
    DegreeDropOnSegment,
    InvalidDegree,
    NumericallyMarginal,
)
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "RealPolynomial",
    "ComplexPolynomial",
    "EvenOddParts",
    "even_odd_split",
    "eval_at_jomega",
    "roots",
    "max_root_real_part",
    "batch_max_root_real",
    "hurwitz_real",
    "hurwitz_complex",
    "first_order_complex_hurwitz",
    "segment_stable_endpoints",
    "poly_add",
    "poly_scale",
]


def _check_finite(values: Iterable[complex]) -> None:
    for v in values:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("polynomial coefficients must be finite")


def _effective_degree(coeffs: Sequence[complex], tol: Tolerances) -> int:
    scale = max(abs(c) for c in coeffs)
    if scale == 0.0:
        return 0
    threshold = tol.zero * scale
    for k in range(len(coeffs) - 1, -1, -1):
        if abs(coeffs[k]) > threshold:
            return k
    return 0


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial; ``coeffs[k]`` multiplies ``s**k``."""

    coeffs: tuple

    def __post_init__(self) -> None:
        vals = tuple(float(c) for c in self.coeffs)
        if not vals:
            raise InvalidDegree("a polynomial needs at least one coefficient")
        _check_finite(complex(v) for v in vals)
        object.__setattr__(self, "coeffs", vals)

    def degree(self, tol: Tolerances = DEFAULT_TOL) -> int:
        return _effective_degree(self.coeffs, tol)

    def trimmed(self, tol: Tolerances = DEFAULT_TOL) -> "RealPolynomial":
        return RealPolynomial(self.coeffs[: self.degree(tol) + 1])

    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.float64)

    def __call__(self, x):
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class ComplexPolynomial:
    """Complex polynomial; ``coeffs[k]`` multiplies ``s**k``."""

    coeffs: tuple

    def __post_init__(self) -> None:
        vals = tuple(complex(c) for c in self.coeffs)
        if not vals:
            raise InvalidDegree("a polynomial needs at least one coefficient")
        _check_finite(vals)
        object.__setattr__(self, "coeffs", vals)

    def degree(self, tol: Tolerances = DEFAULT_TOL) -> int:
        return _effective_degree(self.coeffs, tol)

    def trimmed(self, tol: Tolerances = DEFAULT_TOL) -> "ComplexPolynomial":
        return ComplexPolynomial(self.coeffs[: self.degree(tol) + 1])

    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.complex128)

    def __call__(self, x):
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


AnyPolynomial = Union[RealPolynomial, ComplexPolynomial]


@dataclass(frozen=True)
class EvenOddParts:
    """Split g(s) = alpha(s^2) + s * beta(s^2); alpha and beta are
    polynomials in the variable u = s^2."""

    alpha: RealPolynomial
    beta: RealPolynomial


def even_odd_split(p: RealPolynomial) -> EvenOddParts:
    """Even/odd coefficient split of a real polynomial."""
    alpha = p.coeffs[0::2]
    beta = p.coeffs[1::2]
    return EvenOddParts(
        alpha=RealPolynomial(alpha if alpha else (0.0,)),
        beta=RealPolynomial(beta if beta else (0.0,)),
    )


def eval_at_jomega(p: AnyPolynomial, omega: float) -> complex:
    """Evaluate p at s = j*omega.

    For real p this equals alpha(-omega^2) + j*omega*beta(-omega^2) with
    (alpha, beta) the even/odd split.
    """
    return complex(p(complex(0.0, float(omega))))


def poly_add(p: RealPolynomial, q: RealPolynomial) -> RealPolynomial:
    return RealPolynomial(tuple(npp.polyadd(p.array(), q.array())))


def poly_scale(p: RealPolynomial, c: float) -> RealPolynomial:
    return RealPolynomial(tuple(p.array() * float(c)))


def roots(p: AnyPolynomial, tol: Tolerances = DEFAULT_TOL) -> list:
    """All roots of p (with multiplicity), via companion-matrix eigenvalues.

    Requires effective degree >= 1.
    """
    d = p.degree(tol)
    if d < 1:
        raise InvalidDegree("roots are defined only for degree >= 1")
    desc = np.asarray(p.coeffs[: d + 1], dtype=complex)[::-1]
    return [complex(r) for r in np.roots(desc)]


def max_root_real_part(p: AnyPolynomial, tol: Tolerances = DEFAULT_TOL) -> float:
    return max(r.real for r in roots(p, tol))


def batch_max_root_real(coeffs: np.ndarray) -> np.ndarray:
    """Max root real part per row of an ascending coefficient matrix.

    Rows must share one true degree (leading column nonzero). Uses batched
    companion-matrix eigenvalues.
    """
    c = np.asarray(coeffs)
    if c.ndim != 2 or c.shape[1] < 2:
        raise InvalidDegree("need rows of degree >= 1")
    n, dp1 = c.shape
    d = dp1 - 1
    if np.any(c[:, -1] == 0):
        raise DegenerateLeadingCoefficient("leading column must be nonzero")
    monic = c[:, :-1] / c[:, -1:]
    comp = np.zeros((n, d, d), dtype=complex)
    idx = np.arange(d - 1)
    comp[:, idx + 1, idx] = 1.0
    comp[:, :, d - 1] = -monic
    eigs = np.linalg.eigvals(comp)
    return eigs.real.max(axis=1)


# Width of the error bar around -stability_margin inside which a root-based
# verdict is considered numerically undecidable.
_MARGINAL_BAR = 1e3 * np.finfo(float).eps


def _decide_from_max_real(rmax: float, tol: Tolerances) -> bool:
    bar = _MARGINAL_BAR * max(1.0, abs(rmax))
    if abs(rmax + tol.stability_margin) <= bar:
        raise NumericallyMarginal(
            f"max root real part {rmax!r} is within the numerical error bar "
            f"of -stability_margin ({-tol.stability_margin!r})"
        )
    return rmax < -tol.stability_margin


def hurwitz_real(p: RealPolynomial, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff every root of p has real part < -tol.stability_margin.

    Routh fast path; root computation decides marginal tables. Raises
    NumericallyMarginal only when the root verdict itself sits inside the
    numerical error bar of the margin.
    """
    d = p.degree(tol)
    if d < 1:
        raise InvalidDegree("stability is defined only for degree >= 1")
    c = p.coeffs[: d + 1]
    if d == 1:
        root = -c[0] / c[1]
        return _decide_from_max_real(root, tol)
    verdict = int(kernels.routh_stable_batch(np.asarray([c], dtype=np.float64))[0])
    if verdict >= 0:
        return bool(verdict)
    return _decide_from_max_real(max_root_real_part(RealPolynomial(c), tol), tol)


def hurwitz_complex(p: ComplexPolynomial, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff every root of p has real part < -tol.stability_margin."""
    d = p.degree(tol)
    if d < 1:
        raise InvalidDegree("stability is defined only for degree >= 1")
    if d == 1:
        c0, c1 = p.coeffs[0], p.coeffs[1]
        return _decide_from_max_real((-c0 / c1).real, tol)
    return _decide_from_max_real(max_root_real_part(p, tol), tol)


def first_order_complex_hurwitz(
    c1: complex, c0: complex, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Stability of c1*s + c0 without forming the root.

    The root is -c0/c1 with real part -Re(c0*conj(c1))/|c1|^2, so the
    polynomial is Hurwitz (with margin) iff
    Re(c0*conj(c1)) > stability_margin * |c1|^2.
    """
    c1 = complex(c1)
    c0 = complex(c0)
    _check_finite((c0, c1))
    if c1 == 0:
        raise DegenerateLeadingCoefficient("leading coefficient is zero")
    return (c0 * c1.conjugate()).real > tol.stability_margin * (abs(c1) ** 2)


def segment_stable_endpoints(
    h0: RealPolynomial, alpha: float, beta: float, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Stability of the whole segment h0(s) + lam*(alpha*s + beta), lam in [0,1],
    certified from its two endpoints.

    Valid only when the degree is constant along the segment: a first-order
    perturbation can only change the degree when deg h0 <= 1, in which case
    a leading-coefficient sign change (or near-zero crossing) raises
    DegreeDropOnSegment.
    """
    alpha = float(alpha)
    beta = float(beta)
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise ValueError("perturbation coefficients must be finite")
    d0 = h0.degree(tol)
    if d0 == 0:
        raise InvalidDegree("segment endpoints need degree >= 1")
    h1 = poly_add(h0, RealPolynomial((beta, alpha)))
    if d0 == 1:
        lead0 = h0.coeffs[1]
        scale = max(abs(lead0), abs(lead0 + alpha), 1e-300)
        if (
            abs(lead0) <= tol.zero * scale
            or abs(lead0 + alpha) <= tol.zero * scale
            or (lead0 > 0) != (lead0 + alpha > 0)
        ):
            raise DegreeDropOnSegment(
                "segment degree is not constant: leading coefficient "
                f"moves from {lead0!r} to {lead0 + alpha!r}"
            )
    return hurwitz_real(h0, tol) and hurwitz_real(h1, tol)
