"""kharibound: vertex certificates for interval transfer functions.

Decides frequency-response positivity, strict positive realness, the
gain index gamma0, and robust absolute-stability sector bounds for
interval (Kharitonov-box) transfer functions by checking finitely many
vertex systems, and certifies every vertex claim against an independent
sampling oracle over the full coefficient box.
"""
from __future__ import annotations

from .errors import (
    DegenerateLeadingCoefficient,
    DegreeDrop,
    DegreeDropOnSegment,
    DegreeDropPossible,
    DenominatorNotHurwitz,
    InvalidDegree,
    InvalidGamma,
    InvalidRotation,
    InvalidShift,
    KhariboundError,
    NumericallyMarginal,
    PoleOnAxis,
    SpecFileError,
    TooManyCorners,
    ZeroInclusion,
)
from .intervals import (
    I1,
    I2,
    I3,
    ComplexBox,
    ExtremalParts,
    IndexSet,
    IntervalPolynomial,
    RealInterval,
    ValueSetRectangle,
    VertexIndexTuple,
    check_w1_vertices,
    check_w2_vertices,
    check_w6_vertices,
    extremal_parts,
    family_kharitonov_stable,
    index_set,
    kharitonov_vertices,
    value_set_rect,
    vertex_polynomial,
    zero_exclusion,
)
from .kernels import (
    BACKEND,
    available_backends,
    eval_jomega_batch,
    min_ratio_re_outer,
    min_ratio_re_paired,
    routh_stable_batch,
)
from .oracle import (
    CORNER_CAP,
    DEFAULT_ORACLE_TOL,
    ComparisonReport,
    OracleWitness,
    SamplingPlan,
    Strategy,
    Verdict,
    compare_vertex_vs_oracle,
    default_omega_grid,
    oracle_global_inf,
    oracle_pointwise_min,
    sample_members,
)
from .poly import (
    ComplexPolynomial,
    EvenOddParts,
    RealPolynomial,
    eval_at_jomega,
    even_odd_split,
    first_order_complex_hurwitz,
    hurwitz_complex,
    hurwitz_real,
    poly_add,
    poly_scale,
    segment_stable_endpoints,
)
from .spr import (
    BandSpec,
    ExtremumReport,
    ExtremumStatus,
    IntervalTransferFunction,
    PairInfimum,
    Quantity,
    SectorBound,
    SprClassification,
    SprIndexResult,
    absolute_stability_sector,
    band_infimum,
    closed_loop_spr,
    family_spr,
    pointwise_extremum,
    pointwise_positivity,
    spr_check_single,
    spr_index,
    vertex_pair_infimum,
)
from .tolerances import DEFAULT_TOL, Tolerances

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "KhariboundError",
    "InvalidDegree",
    "DegenerateLeadingCoefficient",
    "DegreeDropOnSegment",
    "DegreeDropPossible",
    "DegreeDrop",
    "InvalidShift",
    "InvalidRotation",
    "InvalidGamma",
    "NumericallyMarginal",
    "ZeroInclusion",
    "PoleOnAxis",
    "DenominatorNotHurwitz",
    "TooManyCorners",
    "SpecFileError",
    # tolerances
    "Tolerances",
    "DEFAULT_TOL",
    # kernels
    "BACKEND",
    "available_backends",
    "eval_jomega_batch",
    "min_ratio_re_outer",
    "min_ratio_re_paired",
    "routh_stable_batch",
    # poly
    "RealPolynomial",
    "ComplexPolynomial",
    "EvenOddParts",
    "even_odd_split",
    "eval_at_jomega",
    "poly_add",
    "poly_scale",
    "hurwitz_real",
    "hurwitz_complex",
    "first_order_complex_hurwitz",
    "segment_stable_endpoints",
    # intervals
    "RealInterval",
    "IntervalPolynomial",
    "ExtremalParts",
    "extremal_parts",
    "vertex_polynomial",
    "kharitonov_vertices",
    "VertexIndexTuple",
    "IndexSet",
    "I1",
    "I2",
    "I3",
    "index_set",
    "ValueSetRectangle",
    "ComplexBox",
    "value_set_rect",
    "zero_exclusion",
    "family_kharitonov_stable",
    "check_w1_vertices",
    "check_w2_vertices",
    "check_w6_vertices",
    # spr
    "IntervalTransferFunction",
    "BandSpec",
    "Quantity",
    "ExtremumStatus",
    "SprClassification",
    "ExtremumReport",
    "PairInfimum",
    "SprIndexResult",
    "SectorBound",
    "pointwise_extremum",
    "pointwise_positivity",
    "vertex_pair_infimum",
    "band_infimum",
    "spr_check_single",
    "family_spr",
    "spr_index",
    "closed_loop_spr",
    "absolute_stability_sector",
    # oracle
    "CORNER_CAP",
    "DEFAULT_ORACLE_TOL",
    "Strategy",
    "Verdict",
    "SamplingPlan",
    "OracleWitness",
    "ComparisonReport",
    "sample_members",
    "oracle_pointwise_min",
    "oracle_global_inf",
    "default_omega_grid",
    "compare_vertex_vs_oracle",
]
