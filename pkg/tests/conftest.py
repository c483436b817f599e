"""Shared test helpers: random family generators and member samplers."""
from __future__ import annotations

import numpy as np
import pytest

from kharibound import IntervalPolynomial, IntervalTransferFunction, RealPolynomial


@pytest.fixture
def rng():
    return np.random.default_rng(20260821)


def stable_coeffs(rng, degree: int, root_scale: float = 3.0) -> np.ndarray:
    """Ascending real coefficients of a Hurwitz polynomial built from
    random left-half-plane roots (real or conjugate pairs)."""
    roots = []
    i = 0
    while i < degree:
        re = -rng.uniform(0.1, root_scale)
        if i + 1 < degree and rng.random() < 0.5:
            im = rng.uniform(0.1, root_scale)
            roots += [complex(re, im), complex(re, -im)]
            i += 2
        else:
            roots.append(complex(re, 0.0))
            i += 1
    c = np.real(np.poly(roots))[::-1].copy()
    return c * rng.uniform(0.5, 2.0)


def unstable_coeffs(rng, degree: int, root_scale: float = 3.0) -> np.ndarray:
    """Like stable_coeffs but with at least one right-half-plane root:
    one root group (a real root or a conjugate pair) is mirrored across
    the imaginary axis, which keeps the coefficients real."""
    groups = []
    i = 0
    while i < degree:
        re = -rng.uniform(0.1, root_scale)
        if i + 1 < degree and rng.random() < 0.5:
            im = rng.uniform(0.1, root_scale)
            groups.append([complex(re, im), complex(re, -im)])
            i += 2
        else:
            groups.append([complex(re, 0.0)])
            i += 1
    flip = groups[int(rng.integers(0, len(groups)))]
    flip[:] = [complex(-z.real, z.imag) for z in flip]
    roots = [z for grp in groups for z in grp]
    c = np.real(np.poly(roots))[::-1].copy()
    return c * rng.uniform(0.5, 2.0)


def interval_around(center: np.ndarray, rng, rel: float = 0.02) -> list:
    """Interval pairs of relative half-width <= rel around a coefficient
    vector (absolute floor for near-zero entries)."""
    pairs = []
    for c in center:
        h = rel * max(abs(c), 0.05) * rng.uniform(0.2, 1.0)
        pairs.append((c - h, c + h))
    return pairs


def tight_itf(rng, num_deg: int, den_deg: int, scale: float, rel: float = 0.02):
    """Interval transfer function tightly boxed around c*f0/f0 with f0
    Hurwitz and c = scale > 0; such families stay SPR for small rel."""
    f0 = stable_coeffs(rng, den_deg)
    g0 = scale * f0[: num_deg + 1] if num_deg < den_deg else scale * f0
    return IntervalTransferFunction.from_pairs(
        interval_around(np.asarray(g0), rng, rel),
        interval_around(f0, rng, rel),
    )


def sample_member(ip: IntervalPolynomial, rng) -> RealPolynomial:
    vals = [rng.uniform(c.lo, c.hi) if c.hi > c.lo else c.lo for c in ip.coeffs]
    return RealPolynomial(tuple(vals))


def sample_member_array(ip: IntervalPolynomial, rng, n: int) -> np.ndarray:
    lo = np.array([c.lo for c in ip.coeffs])
    hi = np.array([c.hi for c in ip.coeffs])
    return rng.uniform(lo, hi, size=(n, lo.size))
