"""Kernel backend selection and input normalization.

The compiled backend (``kharibound._kernels``, built from the .pyx source)
is preferred when importable; the numpy backend is the fallback. Both
implement the same four operations with identical arithmetic and scan
order. Selection can be forced with the environment variable
``KHARIBOUND_KERNEL_BACKEND=cython`` or ``=python``.
"""
from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_forced = os.environ.get("KHARIBOUND_KERNEL_BACKEND")
if _forced not in (None, "", "cython", "python"):
    raise ImportError(
        f"KHARIBOUND_KERNEL_BACKEND={_forced!r} not recognized (use 'cython' or 'python')"
    )

if _forced == "python":
    _impl = _kernels_py
elif _forced == "cython":
    from . import _kernels as _impl  # ImportError here is intentional: the override demands it
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

#: Relative band inside which a Routh coefficient/pivot counts as marginal.
ROUTH_REL_BAND = 1e-7


def available_backends() -> tuple:
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401

        names.insert(0, "cython")
    except ImportError:
        pass
    return tuple(names)


def _resolve_impl(impl):
    """Accept None (selected backend), a backend name, or a module."""
    if impl is None:
        return _impl
    if isinstance(impl, str):
        if impl == "python":
            return _kernels_py
        if impl == "cython":
            from . import _kernels

            return _kernels
        raise ValueError(f"unknown kernel backend {impl!r}")
    return impl


def _c2(a) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.complex128)
    if out.ndim != 1 or out.shape[0] == 0:
        raise ValueError("expected a nonempty 1-d complex array")
    return out


def eval_jomega_batch(coeffs, omega: float, impl=None) -> np.ndarray:
    """Evaluate rows of an ascending coefficient matrix at s = j*omega."""
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    if c.ndim != 2 or c.shape[1] == 0:
        raise ValueError("coeffs must be a (batch, degree+1) matrix")
    return _resolve_impl(impl).eval_jomega_batch(c, float(omega))


def min_ratio_re_outer(gv, fv, impl=None) -> tuple[float, int, int]:
    """Minimum of Re(g * conj(f)) / |f|^2 over the cross product of samples."""
    g, f = _c2(gv), _c2(fv)
    v, i, k = _resolve_impl(impl).min_ratio_re_outer(g, f)
    return float(v), int(i), int(k)


def min_ratio_re_paired(gv, fv, impl=None) -> tuple[float, int]:
    """Minimum of Re(g * conj(f)) / |f|^2 over paired samples."""
    g, f = _c2(gv), _c2(fv)
    if g.shape != f.shape:
        raise ValueError("paired sample arrays must have equal length")
    v, i = _resolve_impl(impl).min_ratio_re_paired(g, f)
    return float(v), int(i)


def routh_stable_batch(coeffs, band: float = ROUTH_REL_BAND, impl=None) -> np.ndarray:
    """Batched Routh verdicts: 1 Hurwitz, 0 not, -1 marginal."""
    c = np.ascontiguousarray(coeffs, dtype=np.float64)
    if c.ndim != 2 or c.shape[1] == 0:
        raise ValueError("coeffs must be a (batch, degree+1) matrix")
    return np.asarray(_resolve_impl(impl).routh_stable_batch(c, float(band)), dtype=np.int8)
