"""Numerical tolerance policy.

Three knobs cover the whole library:

- ``stability_margin``: a polynomial counts as Hurwitz only when every root
  has real part < -stability_margin (strictness margin, absolute).
- ``positivity``: strict inequalities ("> 0") are certified only beyond
  this absolute margin.
- ``zero``: a coefficient counts as zero when its magnitude is at most
  ``zero`` times the largest coefficient magnitude of the same polynomial
  (relative); degree is recomputed under this rule after every operation.
"""
from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    stability_margin: float = 1e-9
    positivity: float = 1e-12
    zero: float = 1e-12

    def __post_init__(self) -> None:
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, (int, float)) or not v >= 0.0:
                raise ValueError(f"tolerance {f.name} must be a nonnegative real, got {v!r}")
            object.__setattr__(self, f.name, float(v))


DEFAULT_TOL = Tolerances()

# Key names used by spec files / the KHARIBOUND_TOLERANCES env file.
FILE_KEYS = {
    "stability_margin_tol": "stability_margin",
    "positivity_tol": "positivity",
    "zero_tol": "zero",
}


def from_mapping(data: dict, base: Tolerances = DEFAULT_TOL) -> Tolerances:
    """Build a Tolerances from a {file-key: value} mapping, merging onto
    ``base`` per key. Unknown keys raise ValueError (typo safety)."""
    values = {
        "stability_margin": base.stability_margin,
        "positivity": base.positivity,
        "zero": base.zero,
    }
    for key, val in data.items():
        if key not in FILE_KEYS:
            raise ValueError(f"unknown tolerance key {key!r} (expected one of {sorted(FILE_KEYS)})")
        values[FILE_KEYS[key]] = val
    return Tolerances(**values)


def to_mapping(tol: Tolerances) -> dict:
    return {
        "stability_margin_tol": tol.stability_margin,
        "positivity_tol": tol.positivity,
        "zero_tol": tol.zero,
    }
