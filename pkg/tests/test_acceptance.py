"""End-to-end acceptance suite.

Nine criteria combining golden values, property-based sampling against the
brute-force oracle, and runtime budgets. Each criterion prints one line

    [ACCEPTANCE] criterion k: PASS/FAIL (summary)

visible with ``pytest tests/test_acceptance.py -s``.
"""
from __future__ import annotations

import contextlib
import json
import time
from itertools import product

import numpy as np
import pytest

from conftest import (
    interval_around,
    sample_member,
    sample_member_array,
    stable_coeffs,
    tight_itf,
    unstable_coeffs,
)
from kharibound import (
    I1,
    I2,
    I3,
    BandSpec,
    ComplexBox,
    ExtremumStatus,
    IntervalPolynomial,
    IntervalTransferFunction,
    Quantity,
    RealInterval,
    RealPolynomial,
    SamplingPlan,
    SprClassification,
    Strategy,
    absolute_stability_sector,
    band_infimum,
    check_w1_vertices,
    check_w2_vertices,
    check_w6_vertices,
    closed_loop_spr,
    default_omega_grid,
    eval_at_jomega,
    family_kharitonov_stable,
    family_spr,
    hurwitz_real,
    kharitonov_vertices,
    oracle_global_inf,
    oracle_pointwise_min,
    pointwise_extremum,
    pointwise_positivity,
    poly_add,
    poly_scale,
    segment_stable_endpoints,
    spr_check_single,
    spr_index,
    value_set_rect,
    vertex_pair_infimum,
)
from kharibound.cli import main as cli_main
from kharibound.errors import (
    DegreeDrop,
    DegreeDropOnSegment,
    DegreeDropPossible,
    KhariboundError,
    NumericallyMarginal,
)
from kharibound.intervals import real_box_first_order_stable
from kharibound.poly import batch_max_root_real

GOLDEN = IntervalTransferFunction.from_pairs(
    [(-7.0, 9.0), (3.0, 5.0)], [(1.0, 2.0), (5.0, 8.0)]
)

# Companion families: different degrees, same value-set rectangles at
# omega = 1 as GOLDEN (numerator re [-7,9] x im [3,5], denominator
# re [1,2] x im [5,8]).
COMPANION_A = IntervalTransferFunction.from_pairs(
    [(-2.0, 7.0), (3.0, 5.0), (-2.0, 5.0)],
    [(1.0, 2.0), (3.0, 4.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (2.0, 4.0)],
)
COMPANION_B = IntervalTransferFunction.from_pairs(
    [(-7.0, 9.0), (1.0, 2.0)] + [(0.0, 0.0)] * 7 + [(2.0, 3.0)],
    [(1.0, 2.0), (3.0, 5.0), (0.0, 0.0), (-3.0, -2.0)],
)


@contextlib.contextmanager
def criterion(k: int, desc: str, budget: float | None = None):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        if budget is not None and elapsed >= budget:
            raise AssertionError(
                f"criterion {k} ran {elapsed:.2f}s, over the {budget:.0f}s budget"
            )
    except BaseException:
        print(f"[ACCEPTANCE] criterion {k}: FAIL ({desc})", flush=True)
        raise
    print(f"[ACCEPTANCE] criterion {k}: PASS ({desc})", flush=True)


# ---------------------------------------------------------------------------
# criterion 1


def test_criterion_1_golden_pointwise():
    with criterion(
        1,
        "golden family at omega=1: eight positive vertex values; vertex "
        "minimum = 16-corner minimum = 21^4 grid oracle minimum = 1/29",
        budget=1.0,
    ):
        num_rect = value_set_rect(GOLDEN.num, 1.0)
        den_rect = value_set_rect(GOLDEN.den, 1.0)
        for t in I2:
            v = (num_rect.corner(t.i1, t.j1) / den_rect.corner(t.i2, t.j2)).real
            assert v > 0.0
        assert pointwise_positivity(GOLDEN, 1.0) is True

        rep = pointwise_extremum(GOLDEN, 1.0, Quantity.MIN_RE)
        assert rep.status is ExtremumStatus.CERTIFIED_EXACT
        corner16 = min(
            (num_rect.corner(p, q) / den_rect.corner(r, s)).real
            for p, q, r, s in product((1, 2), repeat=4)
        )
        grid = oracle_pointwise_min(
            GOLDEN, 1.0, SamplingPlan(strategy=Strategy.GRID, points_per_coeff=21)
        )
        assert rep.value == pytest.approx(1.0 / 29.0, abs=1e-9)
        assert corner16 == pytest.approx(rep.value, abs=1e-9)
        assert grid == pytest.approx(rep.value, abs=1e-9)


# ---------------------------------------------------------------------------
# criterion 2


def test_criterion_2_golden_spr_negative():
    with criterion(
        2,
        "golden family is not SPR and the witness member (4s-6)/(7s+2) "
        "fails the single-ratio SPR check",
        budget=1.0,
    ):
        assert family_spr(GOLDEN) is False
        assert spr_check_single(
            RealPolynomial((-6.0, 4.0)), RealPolynomial((2.0, 7.0))
        ) is False


# ---------------------------------------------------------------------------
# criterion 3


def test_criterion_3_companion_families():
    with criterion(
        3,
        "companion families: positivity verdict at omega=1 agrees with the "
        "corner and 5-point-grid oracles",
        budget=5.0,
    ):
        for itf in (COMPANION_A, COMPANION_B):
            verdict = pointwise_positivity(itf, 1.0)
            corner = oracle_pointwise_min(
                itf, 1.0, SamplingPlan(strategy=Strategy.CORNERS_ONLY)
            )
            grid = oracle_pointwise_min(
                itf, 1.0, SamplingPlan(strategy=Strategy.GRID, points_per_coeff=5)
            )
            assert verdict is (corner > 0.0)
            assert verdict is (grid > 0.0)
            # both reduce to the golden rectangles at omega=1
            assert verdict is True
            assert corner == pytest.approx(1.0 / 29.0, abs=1e-9)
            assert grid == pytest.approx(1.0 / 29.0, abs=1e-9)


# ---------------------------------------------------------------------------
# criterion 4


def _random_family_at_omega(rng):
    """Random family (num degree <= 4, den degree <= 5) plus a frequency at
    which the denominator rectangle clears the origin by at least 0.5.

    Magnitudes stay moderate so the vertex path (extremal-part rectangle
    corners) and the oracle path (Horner member evaluation) agree to
    absolute 1e-12. Half the draws tie the numerator to the denominator
    (g ~ lambda*f) so that certified-positive cases occur often.
    """
    while True:
        den_deg = int(rng.integers(0, 6))
        den_c = rng.uniform(-1.5, 1.5, size=den_deg + 1)
        den_w = rng.uniform(0.0, 0.3, size=den_deg + 1)
        if rng.random() < 0.5:
            num_deg = min(den_deg, 4)
            lam = rng.uniform(0.3, 1.5)
            num_c = lam * den_c[: num_deg + 1]
            num_w = rng.uniform(0.0, 0.03, size=num_deg + 1) * np.maximum(
                np.abs(num_c), 0.2
            )
        else:
            num_deg = int(rng.integers(0, 5))
            num_c = rng.uniform(-1.5, 1.5, size=num_deg + 1)
            num_w = rng.uniform(0.0, 0.3, size=num_deg + 1)
        itf = IntervalTransferFunction.from_pairs(
            [(c - w, c + w) for c, w in zip(num_c, num_w)],
            [(c - w, c + w) for c, w in zip(den_c, den_w)],
        )
        omega = float(rng.uniform(0.05, 1.6))
        rect = value_set_rect(itf.den, omega)
        margin = max(rect.re.lo, -rect.re.hi, rect.im.lo, -rect.im.hi)
        if margin >= 0.5:
            return itf, omega


def test_criterion_4_pointwise_property_suite():
    with criterion(
        4,
        "300 random families: whenever the vertex minimum exceeds 1e-9 it "
        "equals the corner-inclusive 3-point-grid oracle minimum to 1e-12",
        budget=60.0,
    ):
        rng = np.random.default_rng(42026)
        plan = SamplingPlan(strategy=Strategy.GRID, points_per_coeff=3)
        compared = 0
        for k in range(300):
            itf, omega = _random_family_at_omega(rng)
            rep = pointwise_extremum(itf, omega, Quantity.MIN_RE)
            assert rep.status is not ExtremumStatus.ZERO_INCLUSION_FAIL
            if rep.value > 1e-9:
                assert rep.status is ExtremumStatus.CERTIFIED_EXACT
                oracle = oracle_pointwise_min(itf, omega, plan)
                assert abs(rep.value - oracle) <= 1e-12, (k, rep.value, oracle)
                compared += 1
        assert compared >= 60  # the certified branch must be exercised


# ---------------------------------------------------------------------------
# criterion 5


def _negative_gamma_family(rng):
    """Tight stable denominator, numerator strictly negative at omega=0 and
    of lower degree, so the gain index is negative and attained at finite
    frequency."""
    den_deg = int(rng.integers(1, 4))
    num_deg = int(rng.integers(0, den_deg))
    f0 = stable_coeffs(rng, den_deg)
    num_c = rng.uniform(-2.0, 2.0, size=num_deg + 1)
    num_c[0] = -float(rng.uniform(0.2, 2.0))
    return IntervalTransferFunction.from_pairs(
        interval_around(num_c, rng, rel=0.05), interval_around(f0, rng, rel=0.02)
    )


def test_criterion_5_gain_index_suite():
    with criterion(
        5,
        "50 negative-gain-index families: the frequency-grid oracle infimum "
        "brackets gamma0 and refines monotonically; golden gamma0 = -7 and "
        "sector bound 1/7",
        budget=120.0,
    ):
        rng = np.random.default_rng(52026)
        count = 0
        attempts = 0
        while count < 50:
            attempts += 1
            assert attempts < 2000
            itf = _negative_gamma_family(rng)
            try:
                res = spr_index(itf)
            except KhariboundError:
                continue
            if not res.gamma0 < -1e-6:
                continue
            count += 1
            grid = default_omega_grid(itf)
            vals = {
                p: oracle_global_inf(
                    itf, grid, SamplingPlan(strategy=Strategy.GRID, points_per_coeff=p)
                )
                for p in (2, 3, 5)
            }
            # bracket at the reference refinement level
            assert res.gamma0 - 1e-9 <= vals[3] <= res.gamma0 + 1e-3, (
                res.gamma0,
                vals[3],
            )
            # denser grids sample supersets: non-increasing toward gamma0
            assert vals[3] <= vals[2] + 1e-12
            assert vals[5] <= vals[3] + 1e-12
            assert vals[5] >= res.gamma0 - 1e-9

        res = spr_index(GOLDEN)
        assert res.gamma0 == pytest.approx(-7.0, abs=1e-9)
        assert res.classification is SprClassification.FAMILY_INF_EQUALS_GAMMA0
        sector = absolute_stability_sector(GOLDEN)
        assert sector.k_upper == pytest.approx(1.0 / 7.0, abs=1e-9)
        assert not sector.is_unbounded


# ---------------------------------------------------------------------------
# criterion 6


def _random_complex(rng, scale: float = 2.0) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def _box_around(z: complex, rng, rel: float) -> ComplexBox:
    hr = rel * max(abs(z.real), 0.1) * rng.uniform(0.2, 1.0)
    hi = rel * max(abs(z.imag), 0.1) * rng.uniform(0.2, 1.0)
    return ComplexBox(
        RealInterval(z.real - hr, z.real + hr), RealInterval(z.imag - hi, z.imag + hi)
    )


def _sample_box(box: ComplexBox, rng, n: int) -> np.ndarray:
    re = rng.uniform(box.re.lo, box.re.hi, size=n)
    im = rng.uniform(box.im.lo, box.im.hi, size=n)
    return re + 1j * im


def _check_kharitonov_boxes(rng, boxes: int, samples: int) -> None:
    certified = 0
    for k in range(boxes):
        deg = int(rng.integers(2, 6))
        center = stable_coeffs(rng, deg) if k % 2 == 0 else unstable_coeffs(rng, deg)
        ip = IntervalPolynomial.from_pairs(
            interval_around(center, rng, rel=float(rng.uniform(0.005, 0.15)))
        )
        lead = ip.coeffs[-1]
        if lead.lo <= 0.0 <= lead.hi:
            continue
        try:
            ok = family_kharitonov_stable(ip)
        except NumericallyMarginal:
            continue
        if not ok:
            continue
        certified += 1
        rows = sample_member_array(ip, rng, samples)
        assert float(batch_max_root_real(rows).max()) < 1e-8
    assert certified >= 30


def _check_first_order_shifted_boxes(rng, boxes: int, samples: int) -> None:
    certified = 0
    for k in range(boxes):
        beta = float(rng.uniform(0.1, 2.0))
        z1c = _random_complex(rng)
        if abs(z1c) < 0.3:
            z1c += 0.5 + 0.5j
        if k % 2 == 0:
            z0c = (rng.uniform(0.2, 3.0) + beta) * z1c
        else:
            z0c = _random_complex(rng, scale=4.0)
        c1 = _box_around(z1c, rng, rel=float(rng.uniform(0.01, 0.3)))
        c0 = _box_around(z0c, rng, rel=float(rng.uniform(0.01, 0.3)))
        if c1.contains_zero():
            continue
        if not check_w1_vertices(c0, c1, beta):
            continue
        certified += 1
        z0 = _sample_box(c0, rng, samples)
        z1 = _sample_box(c1, rng, samples)
        margin = ((z0 - beta * z1) * np.conj(z1)).real
        scale = np.abs(z0 - beta * z1) * np.abs(z1) + 1.0
        assert bool((margin > -1e-10 * scale).all())
    assert certified >= 30


def _check_first_order_boxes(rng, boxes: int, samples: int) -> None:
    certified = 0
    for k in range(boxes):
        z1c = _random_complex(rng)
        if abs(z1c) < 0.3:
            z1c += 0.5 - 0.5j
        z0c = rng.uniform(0.2, 3.0) * z1c if k % 2 == 0 else _random_complex(rng, 4.0)
        c1 = _box_around(z1c, rng, rel=float(rng.uniform(0.01, 0.3)))
        c0 = _box_around(z0c, rng, rel=float(rng.uniform(0.01, 0.3)))
        if c1.contains_zero():
            continue
        if not check_w2_vertices(c0, c1):
            continue
        certified += 1
        z0 = _sample_box(c0, rng, samples)
        z1 = _sample_box(c1, rng, samples)
        margin = (z0 * np.conj(z1)).real
        scale = np.abs(z0) * np.abs(z1) + 1.0
        assert bool((margin > -1e-10 * scale).all())
    assert certified >= 30


def _check_real_first_order_boxes(rng, boxes: int, samples: int) -> None:
    certified = 0
    for k in range(boxes):
        beta = float(rng.uniform(0.1, 2.0))
        b = float(rng.uniform(0.3, 2.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        a = float(rng.uniform(0.2, 3.0)) * b if k % 2 == 0 else float(rng.uniform(-4, 4))
        hb = abs(b) * float(rng.uniform(0.01, 0.3))
        ha = max(abs(a), 0.1) * float(rng.uniform(0.01, 0.3))
        c1 = RealInterval(b - hb, b + hb)
        c0 = RealInterval(a - ha, a + ha)
        if c1.lo <= 0.0 <= c1.hi:
            continue
        if not real_box_first_order_stable(c0, c1, beta):
            continue
        certified += 1
        av = rng.uniform(c0.lo, c0.hi, size=samples)
        bv = rng.uniform(c1.lo, c1.hi, size=samples)
        root = -(beta * bv + av) / bv
        assert bool((root < 1e-8).all())
    assert certified >= 30


def _check_combination_boxes(rng, boxes: int, samples: int) -> None:
    certified = 0
    for k in range(boxes):
        fdeg = int(rng.integers(1, 4))
        beta = float(rng.uniform(0.1, 2.0))
        gam = float(rng.uniform(0.2, 2.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        fc = stable_coeffs(rng, fdeg)
        if k % 2 == 0:
            gc = float(rng.uniform(0.3, 2.0)) * fc
        else:
            gdeg = int(rng.integers(0, fdeg + 1))
            gc = rng.normal(size=gdeg + 1)
        ffam = IntervalPolynomial.from_pairs(
            interval_around(fc, rng, rel=float(rng.uniform(0.01, 0.1)))
        )
        gfam = IntervalPolynomial.from_pairs(
            interval_around(np.asarray(gc), rng, rel=float(rng.uniform(0.01, 0.1)))
        )
        try:
            ok = check_w6_vertices(gfam, ffam, beta, gam)
        except (DegreeDropPossible, NumericallyMarginal):
            continue
        if not ok:
            continue
        certified += 1
        gm = sample_member_array(gfam, rng, samples)
        fm = sample_member_array(ffam, rng, samples)
        width = max(gm.shape[1], fm.shape[1])
        rows = np.zeros((samples, width), dtype=complex)
        rows[:, : gm.shape[1]] += gm
        rows[:, : fm.shape[1]] += (beta + 1j * gam) * fm
        assert float(batch_max_root_real(rows).max()) < 1e-8
    assert certified >= 30


def _check_segments(rng, cases: int, samples: int) -> None:
    certified = 0
    lams = np.linspace(0.0, 1.0, samples)
    for _ in range(cases):
        deg = int(rng.integers(2, 5))
        h0 = RealPolynomial(tuple(stable_coeffs(rng, deg)))
        scale = max(abs(c) for c in h0.coeffs)
        alpha = float(rng.normal() * 0.2 * scale)
        beta = float(rng.normal() * 0.2 * scale)
        try:
            ok = segment_stable_endpoints(h0, alpha, beta)
        except (DegreeDropOnSegment, NumericallyMarginal):
            continue
        if not ok:
            continue
        certified += 1
        rows = np.tile(np.asarray(h0.coeffs, dtype=np.float64), (samples, 1))
        rows[:, 0] += lams * beta
        rows[:, 1] += lams * alpha
        assert float(batch_max_root_real(rows).max()) < 1e-8
    assert certified >= 40


def test_criterion_6_vertex_stability_soundness():
    with criterion(
        6,
        "vertex stability checks on random boxes never certify a family "
        "containing an unstable sampled member; segment endpoint "
        "certification holds along the segment",
        budget=60.0,
    ):
        rng = np.random.default_rng(62026)
        _check_kharitonov_boxes(rng, boxes=200, samples=1000)
        _check_first_order_shifted_boxes(rng, boxes=200, samples=1000)
        _check_first_order_boxes(rng, boxes=200, samples=1000)
        _check_real_first_order_boxes(rng, boxes=200, samples=1000)
        _check_combination_boxes(rng, boxes=200, samples=1000)
        _check_segments(rng, cases=200, samples=100)


# ---------------------------------------------------------------------------
# criterion 7

EXPECTED_I1 = {
    "1222", "1221", "2221", "2211", "2111", "2112",
    "1112", "1122", "1211", "2212", "2122", "1121",
}
EXPECTED_I2 = {"1112", "1222", "2111", "2221", "1121", "1211", "2122", "2212"}
EXPECTED_I3 = {
    "1111", "1212", "2222", "2121", "1112", "1222",
    "2221", "2111", "1211", "2212", "2122", "1121",
}


def test_criterion_7_index_sets_and_mutation(tmp_path, capsys):
    with criterion(
        7,
        "index-set constants match the frozen reference; dropping tuple "
        "1121 is caught by the oracle with exit code 5",
    ):
        s1 = {str(t) for t in I1}
        s2 = {str(t) for t in I2}
        s3 = {str(t) for t in I3}
        assert len(list(I1)) == 12 and s1 == EXPECTED_I1
        assert len(list(I2)) == 8 and s2 == EXPECTED_I2
        assert len(list(I3)) == 12 and s3 == EXPECTED_I3
        assert s2 < s1 and s2 < s3

        fam = tmp_path / "golden.json"
        fam.write_text(
            json.dumps(
                {"numerator": [[-7, 9], [3, 5]], "denominator": [[1, 2], [5, 8]]}
            )
        )
        base = [
            "verify", str(fam),
            "--analysis", "pointwise", "--omega", "1.0",
            "--strategy", "CORNERS_ONLY",
        ]
        code = cli_main(base + ["--inject-index-fault", "1121"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 5
        assert doc["verdict"] == "VIOLATION"
        # the same run without the fault is consistent
        code = cli_main(base)
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["verdict"] == "CONSISTENT"


# ---------------------------------------------------------------------------
# criterion 8


def test_criterion_8_closed_loop_suite():
    with criterion(
        8,
        "per gain in {0.5, 1, 2}: 100 vertex-certified closed-loop families, "
        "500 sampled member closed loops all SPR",
        budget=90.0,
    ):
        rng = np.random.default_rng(82026)
        for gamma in (0.5, 1.0, 2.0):
            families = []
            attempts = 0
            while len(families) < 100:
                attempts += 1
                assert attempts < 3000
                deg = int(rng.integers(1, 4))
                scale = float(rng.uniform(0.3, 2.0))
                itf = tight_itf(rng, deg, deg, scale, rel=float(rng.uniform(0.01, 0.05)))
                try:
                    if closed_loop_spr(itf, gamma):
                        families.append(itf)
                except KhariboundError:
                    continue
            checked = 0
            failures = 0
            for itf in families:
                for _ in range(5):
                    g = sample_member(itf.num, rng)
                    f = sample_member(itf.den, rng)
                    checked += 1
                    if not spr_check_single(g, poly_add(f, poly_scale(g, gamma))):
                        failures += 1
            assert checked == 500
            assert failures == 0


# ---------------------------------------------------------------------------
# criterion 9


def test_criterion_9_point_family_reduction():
    with criterion(
        9,
        "100 random point families: every interval operation reduces to its "
        "scalar counterpart within 1e-12",
    ):
        rng = np.random.default_rng(92026)
        done = 0
        while done < 100:
            den_deg = int(rng.integers(1, 4))
            num_deg = int(rng.integers(0, den_deg + 1))
            f = RealPolynomial(tuple(stable_coeffs(rng, den_deg)))
            g = RealPolynomial(tuple(rng.uniform(-2.0, 2.0, size=num_deg + 1)))
            omega = float(rng.uniform(0.0, 1.5))
            fv = eval_at_jomega(f, omega)
            gv = eval_at_jomega(g, omega)
            if (
                max(abs(c) for c in f.coeffs) > 30.0
                or abs(fv) < 1.0
                or abs(gv / fv) > 20.0
            ):
                continue
            done += 1
            scalar = gv / fv
            itf = IntervalTransferFunction.from_pairs(
                [(c, c) for c in g.coeffs], [(c, c) for c in f.coeffs]
            )

            # vertex construction collapses to the single member
            for v in kharitonov_vertices(itf.num).values():
                assert v.coeffs == g.coeffs
            for v in kharitonov_vertices(itf.den).values():
                assert v.coeffs == f.coeffs
            assert family_kharitonov_stable(itf.den) is hurwitz_real(f)

            # the value set collapses to the point evaluation
            rect = value_set_rect(itf.den, omega)
            assert rect.re.hi == rect.re.lo and rect.im.hi == rect.im.lo
            assert complex(rect.re.lo, rect.im.lo) == pytest.approx(fv, abs=1e-12)

            # all four pointwise quantities equal the scalar parts
            for quantity, expected in (
                (Quantity.MIN_RE, scalar.real),
                (Quantity.MAX_RE, scalar.real),
                (Quantity.MIN_IM, scalar.imag),
                (Quantity.MAX_IM, scalar.imag),
            ):
                rep = pointwise_extremum(itf, omega, quantity)
                assert rep.value == pytest.approx(expected, abs=1e-12)
                assert rep.corner_extremum == pytest.approx(expected, abs=1e-12)
            if abs(scalar.real) > 1e-9:
                assert pointwise_positivity(itf, omega) is (scalar.real > 0.0)

            # the oracle degenerates to the single member
            o = oracle_pointwise_min(
                itf, omega, SamplingPlan(strategy=Strategy.CORNERS_ONLY)
            )
            assert o == pytest.approx(scalar.real, abs=1e-12)

            # SPR family verdict == single-ratio verdict
            assert family_spr(itf) is spr_check_single(g, f)

            # gain index == single-pair infimum (all twelve tuples collapse)
            pi = vertex_pair_infimum(g, f)
            res = spr_index(itf)
            assert res.gamma0 == pytest.approx(pi.value, abs=1e-12)
            assert all(
                v == pytest.approx(pi.value, abs=1e-12)
                for v in res.per_tuple_infima.values()
            )

            # banded infimum == single-pair banded infimum
            band = BandSpec(0.2, 1.8)
            assert band_infimum(itf, band).value == pytest.approx(
                vertex_pair_infimum(g, f, band).value, abs=1e-12
            )

            # closed loop == single closed loop
            try:
                cl = closed_loop_spr(itf, 1.0)
            except (DegreeDrop, DegreeDropPossible):
                pass
            else:
                assert cl is spr_check_single(g, poly_add(f, g))
