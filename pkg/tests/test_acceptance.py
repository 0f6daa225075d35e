"""Acceptance gate: twelve end-to-end criteria, one printed line each.

Every test prints ``ACCEPTANCE nn PASS/FAIL <description>`` directly to the
terminal (bypassing capture) before asserting, so a plain ``pytest -v`` run
shows the per-criterion verdict inline.  Expected constants are frozen here
as literals, independent of the library code that must reproduce them.
"""

import json
import math

import numpy as np
import pytest

from secradius.bounds import cube_series_tail, k_tail, tail_derivative_bound
from secradius.cli import main as cli_main
from secradius.radius import (
    Criterion,
    count_zeros,
    criterion_radius,
    golden_section_min,
)
from secradius.series import TruncatedSeries, derivative
from secradius.verify import (
    conjecture2_scan,
    cube_min_by_boundary,
    cube_min_by_cubic,
    min_T,
    min_g,
    n4_margin,
    theorem1_suite,
)
from secradius.zoo import HerglotzSpec, f0, sample_specs, synthesize_F

TWO_PI = 2.0 * math.pi

# Frozen expectations (dyadic/rational values written exactly).
MIN_G = 0.25
MIN_T = 1.0 / 12.0
CUBE_MIN = 27.0 / 64.0  # = 0.421875
K4 = -73.0 / 216.0
N4_MARGIN = 145.0 / 1728.0
S3_RADIUS = 0.3679900360969936  # sqrt(13/96)

SUITE_COUNT = 200
SUITE_ATOMS = 3
SUITE_NMAX = 20
SUITE_SEED = 7
SCAN_COUNT = 500
SCAN_NMAX = 30
SCAN_SEED = 11


def _announce(capfd, num, ok, desc):
    line = f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}  {desc}"
    with capfd.disabled():
        print(line, flush=True)
    assert ok, line


@pytest.fixture(scope="module")
def suite_report():
    return theorem1_suite(
        count=SUITE_COUNT, atom_count=SUITE_ATOMS, n_max=SUITE_NMAX, seed=SUITE_SEED
    )


@pytest.fixture(scope="module")
def members():
    """f0 plus the same 200-spec sample the suite uses, synthesized to 64."""
    specs = [HerglotzSpec.from_atoms([(1.0, 1.0 + 0.0j)])]
    specs.extend(sample_specs(SUITE_COUNT, SUITE_ATOMS, SUITE_SEED))
    return [synthesize_F(spec, order=64) for spec in specs]


@pytest.fixture(scope="module")
def scan_report():
    return conjecture2_scan(
        count=SCAN_COUNT, atom_count=SUITE_ATOMS, n_max=SCAN_NMAX, seed=SCAN_SEED
    )


def test_criterion_01_min_g(capfd):
    item = min_g()
    theta = item.witness[1]
    near = min(abs(theta - TWO_PI / 3.0), abs(theta - 2.0 * TWO_PI / 3.0))
    ok = item.passed and abs(item.computed - MIN_G) <= 1e-10 and near <= 1e-5
    _announce(capfd, 1, ok, f"min g = {item.computed!r} at theta = {theta:.8f}")


def test_criterion_02_min_T(capfd):
    item = min_T()
    ok = item.passed and abs(item.computed - MIN_T) <= 1e-10
    _announce(capfd, 2, ok, f"min T = {item.computed!r} (expected 1/12)")


def test_criterion_03_cube_kernel_two_paths(capfd):
    by_boundary, _theta = cube_min_by_boundary(1.0 / 3.0)
    by_cubic = cube_min_by_cubic()
    ok = (
        abs(by_boundary - CUBE_MIN) <= 1e-9
        and abs(by_cubic - CUBE_MIN) <= 1e-9
        and abs(by_boundary - by_cubic) <= 1e-9
    )
    _announce(
        capfd, 3, ok,
        f"min Re cube kernel: boundary {by_boundary!r}, cubic {by_cubic!r}",
    )


def test_criterion_04_tail_constant(capfd):
    k4 = k_tail(4)
    bound = tail_derivative_bound(4, 1.0 / 3.0)
    increasing = all(k_tail(n + 1) > k_tail(n) for n in range(4, 60))
    ok = (
        abs(k4 - K4) <= 1e-13
        and abs(bound - (-K4)) <= 1e-13
        and increasing
    )
    _announce(
        capfd, 4, ok,
        f"k(4) = {k4!r} = -73/216; bound(4, 1/3) = {bound!r}; k increasing 4..60",
    )


def test_criterion_05_n4_margin(capfd):
    item = n4_margin()
    ok = item.passed and abs(item.computed - N4_MARGIN) <= 1e-9
    _announce(capfd, 5, ok, f"margin at n = 4: {item.computed!r} (expected 145/1728)")


def test_criterion_06_s2_sharpness(capfd):
    rd = criterion_radius(f0(2), Criterion.RE_DERIV).radius
    cv = criterion_radius(f0(2), Criterion.CONVEXITY).radius
    ok = abs(rd - 1.0 / 3.0) <= 1e-6 and abs(cv - 1.0 / 6.0) <= 1e-6
    _announce(capfd, 6, ok, f"s2 radii: derivative {rd!r} (1/3), convexity {cv!r} (1/6)")


def test_criterion_07_s3_radius(capfd):
    assert abs(S3_RADIUS - math.sqrt(13.0 / 96.0)) <= 1e-15
    got = criterion_radius(f0(3), Criterion.RE_DERIV).radius
    ok = abs(got - S3_RADIUS) <= 1e-6
    _announce(capfd, 7, ok, f"s3 radius {got!r} (expected sqrt(13/96))")


def test_criterion_08_randomized_margins(capfd, suite_report):
    by_name = {item.name: item for item in suite_report.items}
    margin = by_name["theorem1_min_margin"]
    violation = by_name["theorem1_margin_violation"]
    f0n2 = by_name["theorem1_f0_margin_n2"]
    ok = (
        violation.passed
        and margin.computed >= -1e-9
        and f0n2.passed
        and f0n2.computed <= 1e-4
    )
    _announce(
        capfd, 8, ok,
        f"{SUITE_COUNT} specs x n<=20: min margin {margin.computed!r} "
        f"(spec {suite_report.parameters['min_margin_spec']}, "
        f"n = {suite_report.parameters['min_margin_n']}); "
        f"f0 margin at n = 2: {f0n2.computed!r}",
    )


def test_criterion_09_growth_and_tail_bounds(capfd, members):
    idx = np.arange(65)
    coeff_cap = (idx + 1.0) / 2.0 + 1e-9
    coeff_ok = all(np.all(np.abs(f.coeffs) <= coeff_cap) for f in members)

    envelope_ok = True
    thetas256 = TWO_PI * np.arange(256) / 256.0
    radii = [0.1 * k for k in range(1, 10)]
    units = np.exp(1j * thetas256)
    for f in members:
        fp = derivative(f)
        for r in radii:
            # truncation slack plus a rounding allowance: f0 attains the
            # envelope exactly, so zero-slack comparisons flip on noise
            eps = 2.0 * cube_series_tail(fp.order, r) + 1e-12
            mags = np.abs(np.polynomial.polynomial.polyval(r * units, fp.coeffs))
            if not (
                np.all(mags >= (1.0 + r) ** -3 - eps)
                and np.all(mags <= (1.0 - r) ** -3 + eps)
            ):
                envelope_ok = False

    tail_ok = True
    thetas64 = TWO_PI * np.arange(64) / 64.0
    units64 = np.exp(1j * thetas64)
    for f in members:
        dc = derivative(f).coeffs  # dc[k] multiplies z^k
        for r in (0.2, 1.0 / 3.0, 0.5):
            # monomial values, then suffix sums: row n-1 is sigma_n'(z)
            monos = dc[None, :] * (r * units64[:, None]) ** idx[None, :64]
            suffix = np.cumsum(monos[:, ::-1], axis=1)[:, ::-1]
            for n in range(1, 21):
                mags = np.abs(suffix[:, n])
                if not np.all(mags <= tail_derivative_bound(n, r) + 1e-9):
                    tail_ok = False

    ok = coeff_ok and envelope_ok and tail_ok
    _announce(
        capfd, 9, ok,
        f"coefficient cap {coeff_ok}, derivative envelope {envelope_ok}, "
        f"tail-derivative bound {tail_ok} over {len(members)} members",
    )


def test_criterion_10_zero_count_oracle(capfd):
    rng = np.random.default_rng(1)
    agreed = checked = 0
    for _ in range(200):
        deg = int(rng.integers(1, 6))
        c = rng.uniform(-1, 1, size=deg + 1) + 1j * rng.uniform(-1, 1, size=deg + 1)
        while abs(c[-1]) < 1e-3:
            c = rng.uniform(-1, 1, size=deg + 1) + 1j * rng.uniform(-1, 1, size=deg + 1)
        r = float(rng.uniform(0.15, 0.9))
        roots = np.roots(c[::-1])
        if roots.size and np.min(np.abs(np.abs(roots) - r)) < 1e-6:
            continue  # root too close to the circle: excluded by contract
        checked += 1
        expected = int(np.sum(np.abs(roots) < r)) if roots.size else 0
        if count_zeros(TruncatedSeries(c), r) == expected:
            agreed += 1
    ok = checked >= 190 and agreed == checked
    _announce(
        capfd, 10, ok,
        f"winding count agreed with direct roots on {agreed}/{checked} polynomials",
    )


def test_criterion_11_conjecture_scan(capfd, scan_report):
    params = scan_report.parameters
    by_name = {item.name: item for item in scan_report.items}
    head = by_name["conjecture2_min_starlike_radius"]
    found = bool(params["counterexample_found"])
    # An observation below the threshold is a *finding*, recorded with its
    # witness, not a test failure; the criterion is that the scan ran to
    # completion with its seed and witness recorded.
    ok = (
        scan_report.seed == SCAN_SEED
        and params["count"] == SCAN_COUNT
        and params["n_max"] == SCAN_NMAX
        and head.passed
    )
    if found:
        detail = (
            f"COUNTEREXAMPLE CANDIDATE: radius {head.computed!r} < 1/3 - 1e-6 at "
            f"spec seed {params['min_radius_spec']}, n = {params['min_radius_n']}, "
            f"theta = {params['min_radius_theta']!r}"
        )
    else:
        detail = (
            f"{SCAN_COUNT} specs x n<=30: min starlikeness radius {head.computed!r} "
            f">= 1/3 - 1e-6 (n = {params['min_radius_n']}); no counterexample"
        )
    _announce(capfd, 11, ok, detail)


def test_criterion_12_figures(capfd, tmp_path_factory):
    outdir = tmp_path_factory.mktemp("figures")
    code = cli_main(
        ["plot", "--r", "0.3333333333333333,0.5,0.75,0.8", "--out", str(outdir)]
    )
    svgs = sorted(p.name for p in outdir.glob("*.svg"))

    def curve_min_re(r):
        thetas = TWO_PI * np.arange(8192) / 8192.0
        vals = ((1.0 + r * np.exp(1j * thetas)) ** 3).real / (1.0 - r * r) ** 3
        k = int(np.argmin(vals))
        step = TWO_PI / 8192.0

        def fn(t):
            return ((1.0 + r * complex(math.cos(t), math.sin(t))) ** 3).real / (
                1.0 - r * r
            ) ** 3

        _x, v = golden_section_min(fn, k * step - step, k * step + step)
        return min(float(vals[k]), v)

    third_min = curve_min_re(1.0 / 3.0)
    half_min = curve_min_re(0.5)
    ok = (
        code == 0
        and len(svgs) == 4
        and abs(third_min - CUBE_MIN) <= 1e-7
        and abs(half_min) <= 1e-6
    )
    _announce(
        capfd, 12, ok,
        f"4 SVGs written; curve minima: r=1/3 -> {third_min!r} (27/64), "
        f"r=1/2 -> {half_min!r} (0)",
    )
