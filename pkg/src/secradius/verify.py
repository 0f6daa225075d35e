"""Named constants, sharpness witnesses, and randomized verification suites.

The quantities verified here are the load-bearing numbers of the
positive-derivative radius argument for the family F:

* ``min_g``:   min of g(theta) = 1 + cos(theta) + cos(2*theta)/2, equal to
  1/4 at theta = 2*pi/3 and 4*pi/3;
* ``min_T``:   min of T(theta, phi) = g(theta) + cos(phi)/6, equal to 1/12;
* ``min_re_cube_kernel``: min of Re (1-z)^{-3} on |z| = r, equal to 27/64
  at r = 1/3 (computed two independent ways and cross-checked);
* ``n4_margin``: 27/64 - 73/216 = 145/1728, the slack that closes the
  argument for every section order n >= 4;
* ``sharpness_witnesses``: the radii 1/3, 1/6 and sqrt(13/96) attained by
  early sections of the extremal f0;
* ``theorem1_suite``: randomized confirmation that sections of synthesized
  family members keep Re s_n' > 0 up to radius 1/3;
* ``conjecture2_scan``: advisory scan of the open starlikeness question --
  it reports observations and never asserts the conjecture;
* ``classical_radius_scan``: Koebe sections against the classical
  1 - (3/n) log n starlikeness threshold.

Every item records expected/computed/tolerance plus an optional (r, theta)
witness, and a report is reproducible bit for bit from its seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import k_tail
from .exceptions import CrossCheckError, DomainError, ValidationError
from .radius import (
    Criterion,
    RadiusResult,
    boundary_min,
    criterion_radius,
    golden_section_min,
)
from .series import TruncatedSeries, section
from .zoo import GENERATOR_NAME, HerglotzSpec, f0, koebe, sample_specs, synthesize_F

__all__ = [
    "VerificationItem",
    "VerificationReport",
    "make_item",
    "THEOREM1_RADIUS",
    "CONJECTURE2_THRESHOLD",
    "min_g",
    "min_T",
    "min_re_cube_kernel",
    "cube_min_by_boundary",
    "cube_min_by_cubic",
    "n4_margin",
    "sharpness_witnesses",
    "theorem1_suite",
    "conjecture2_scan",
    "classical_radius_scan",
    "figure1_curves",
    "full_suite",
]

_TWO_PI = 2.0 * math.pi

#: Evaluation radius of the randomized suite: the open-disc statement is
#: checked just inside 1/3, where the extremal's margin is 3e-6, not 0.
THEOREM1_RADIUS = 1.0 / 3.0 - 1e-6

#: A starlikeness radius below this value counts as a candidate
#: counterexample to the open conjecture.
CONJECTURE2_THRESHOLD = 1.0 / 3.0 - 1e-6


@dataclass(frozen=True)
class VerificationItem:
    """One named check: a computed value against an optional expectation.

    ``passed`` is True exactly when ``expected`` is None (purely
    informational item) or |computed - expected| <= tolerance.  ``witness``
    optionally locates the attaining point as an (r, theta) pair; checks
    that are functions of an angle alone use r = 1.0.
    """

    name: str
    expected: float | None
    computed: float
    tolerance: float
    passed: bool
    witness: tuple[float, float] | None


def make_item(
    name: str,
    computed: float,
    expected: float | None = None,
    tolerance: float = 0.0,
    witness: tuple[float, float] | None = None,
) -> VerificationItem:
    """Build an item with ``passed`` derived from the defining invariant."""
    computed = float(computed)
    ok = True if expected is None else abs(computed - expected) <= tolerance
    if witness is not None:
        witness = (float(witness[0]), float(witness[1]))
    return VerificationItem(name, expected, computed, float(tolerance), ok, witness)


@dataclass(frozen=True)
class VerificationReport:
    """An ordered collection of items plus the settings that produced them."""

    items: tuple[VerificationItem, ...]
    seed: int
    parameters: dict
    generator_name: str

    def __post_init__(self):
        if not self.items:
            raise ValidationError("a verification report needs at least one item")
        object.__setattr__(self, "items", tuple(self.items))

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)


def _g(theta: float) -> float:
    return 1.0 + math.cos(theta) + 0.5 * math.cos(2.0 * theta)


def min_g(grid: int = 2048) -> VerificationItem:
    """Global minimum of g(theta) = 1 + cos(theta) + cos(2*theta)/2."""
    thetas = np.arange(grid) * (_TWO_PI / grid)
    vals = 1.0 + np.cos(thetas) + 0.5 * np.cos(2.0 * thetas)
    k = int(np.argmin(vals))
    step = _TWO_PI / grid
    gx, gv = golden_section_min(_g, k * step - step, k * step + step)
    value, theta = min((float(vals[k]), k * step), (gv, gx))
    return make_item(
        "min_g", value, expected=0.25, tolerance=1e-10, witness=(1.0, theta % _TWO_PI)
    )


def min_T(theta_grid: int = 2048, phi_grid: int = 64) -> VerificationItem:
    """Global minimum of T(theta, phi) = g(theta) + cos(phi)/6.

    phi enters only through cos(phi), so a coarse phi grid suffices; a few
    rounds of coordinate-wise golden refinement polish both angles.
    """
    thetas = np.arange(theta_grid) * (_TWO_PI / theta_grid)
    phis = np.arange(phi_grid) * (_TWO_PI / phi_grid)
    gvals = 1.0 + np.cos(thetas) + 0.5 * np.cos(2.0 * thetas)
    total = gvals[:, None] + (np.cos(phis) / 6.0)[None, :]
    i, j = np.unravel_index(int(np.argmin(total)), total.shape)
    tstep = _TWO_PI / theta_grid
    pstep = _TWO_PI / phi_grid
    th, ph = i * tstep, j * pstep
    for _ in range(3):
        th, _v = golden_section_min(
            lambda t: _g(t) + math.cos(ph) / 6.0, th - tstep, th + tstep
        )
        ph, _v = golden_section_min(
            lambda p: _g(th) + math.cos(p) / 6.0, ph - pstep, ph + pstep
        )
    refined = _g(th) + math.cos(ph) / 6.0
    value, theta = min((float(total[i, j]), i * tstep), (refined, th))
    return make_item(
        "min_T",
        value,
        expected=1.0 / 12.0,
        tolerance=1e-10,
        witness=(1.0, theta % _TWO_PI),
    )


def cube_min_by_boundary(r: float, grid: int = 2048) -> tuple[float, float]:
    """Path (i): sample Re (1-z)^{-3} on |z| = r and refine; (value, theta)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {r}")
    thetas = np.arange(grid) * (_TWO_PI / grid)
    vals = ((1.0 - r * np.exp(1j * thetas)) ** -3).real
    k = int(np.argmin(vals))
    step = _TWO_PI / grid

    def fn(theta: float) -> float:
        return ((1.0 - r * complex(math.cos(theta), math.sin(theta))) ** -3).real

    gx, gv = golden_section_min(fn, k * step - step, k * step + step)
    value, theta = min((float(vals[k]), k * step), (gv, gx))
    return value, theta % _TWO_PI


def cube_min_by_cubic() -> float:
    """Path (ii), r = 1/3 only: minimize the cubic reduction over x in [-1, 1].

    Writing x = cos(theta) turns the r = 1/3 boundary restriction of
    Re (1-z)^{-3} into p(x) = (9/8)^3 [2/3 + 8x/9 + 2x^2/3 + 4x^3/27]; the
    minimum over the interval sits at x = -1 and equals 27/64.
    """
    scale = (9.0 / 8.0) ** 3

    def p(x: float) -> float:
        return scale * (2.0 / 3.0 + 8.0 * x / 9.0 + 2.0 * x * x / 3.0 + 4.0 * x**3 / 27.0)

    # p'(x) = scale * (8/9 + 4x/3 + 4x^2/9); interior critical points by the
    # quadratic formula, then compare against the interval endpoints.
    a, b, c = 4.0 / 9.0, 4.0 / 3.0, 8.0 / 9.0
    disc = b * b - 4.0 * a * c
    candidates = [-1.0, 1.0]
    if disc >= 0.0:
        root = math.sqrt(disc)
        for x in ((-b - root) / (2.0 * a), (-b + root) / (2.0 * a)):
            if -1.0 <= x <= 1.0:
                candidates.append(x)
    return min(p(x) for x in candidates)


def min_re_cube_kernel(r: float, grid: int = 2048) -> VerificationItem:
    """Minimum of Re (1-z)^{-3} over |z| = r, cross-checked at r = 1/3.

    At r = 1/3 the boundary-sampling path and the cubic-reduction path must
    agree within 1e-9 (else :class:`CrossCheckError`), and the known value
    27/64 becomes the expectation; at other radii the item is informational.
    """
    value, theta = cube_min_by_boundary(r, grid)
    at_third = abs(r - 1.0 / 3.0) < 1e-12
    expected = None
    if at_third:
        other = cube_min_by_cubic()
        if abs(other - value) > 1e-9:
            raise CrossCheckError(
                f"boundary path {value!r} vs cubic path {other!r} disagree at r=1/3"
            )
        expected = 27.0 / 64.0
    label = "1/3" if at_third else repr(float(r))
    return make_item(
        f"min_re_cube_kernel_{label}",
        value,
        expected=expected,
        tolerance=1e-9,
        witness=(r, theta),
    )


def n4_margin() -> VerificationItem:
    """27/64 + k_tail(4) = 145/1728, the strict positivity margin at n = 4."""
    base = min_re_cube_kernel(1.0 / 3.0)
    computed = base.computed + k_tail(4)
    return make_item(
        "n4_margin",
        computed,
        expected=145.0 / 1728.0,
        tolerance=1e-9,
        witness=base.witness,
    )


def _radius_witness(res: RadiusResult) -> tuple[float, float] | None:
    if res.witness is None:
        return None
    return (res.radius, res.witness.argmin_theta)


def sharpness_witnesses(tol: float = 1e-9) -> list[VerificationItem]:
    """Radii showing 1/3 and 1/6 cannot be improved, plus the s3 closed form.

    s2 of the extremal f0 has derivative 1 + 3z, vanishing at z = -1/3, and
    convexity quotient (1+6z)/(1+3z), vanishing at z = -1/6; the third item
    pins the order-3 section's positive-derivative radius to sqrt(13/96).
    """
    s2 = f0(2)
    s3 = f0(3)
    checks = [
        ("sharpness_s2_re_deriv_radius", s2, Criterion.RE_DERIV, 1.0 / 3.0),
        ("sharpness_s2_convexity_radius", s2, Criterion.CONVEXITY, 1.0 / 6.0),
        ("sharpness_s3_re_deriv_radius", s3, Criterion.RE_DERIV, math.sqrt(13.0 / 96.0)),
    ]
    items = []
    for name, s, criterion, expected in checks:
        res = criterion_radius(s, criterion, tol)
        items.append(
            make_item(
                name,
                res.radius,
                expected=expected,
                tolerance=1e-6,
                witness=_radius_witness(res),
            )
        )
    return items


def _sample_entries(
    count: int, atom_count: int, seed: int
) -> list[tuple[object, HerglotzSpec]]:
    """Sampled specs labelled by their recorded seeds, with f0 injected first.

    The extremal f0 (single Herglotz atom at x = 1) is the worst case of
    every suite here, so it always participates deterministically.
    """
    if count < 1:
        raise ValidationError(f"sample count must be >= 1, got {count}")
    entries: list[tuple[object, HerglotzSpec]] = [
        ("f0", HerglotzSpec.from_atoms([(1.0, 1.0 + 0.0j)]))
    ]
    for spec in sample_specs(count, atom_count, seed):
        entries.append((spec.seed, spec))
    return entries


def theorem1_suite(
    count: int = 200,
    atom_count: int = 3,
    n_max: int = 20,
    seed: int = 7,
    grid: int = 2048,
) -> VerificationReport:
    """Randomized check that sections keep Re s_n' > 0 up to radius 1/3.

    Every sampled family member is truncated to each order 2..n_max and its
    derivative's real part is minimized over the circle of radius
    1/3 - 1e-6.  The suite asserts the global minimum margin stays above
    -1e-9 and that the injected extremal attains a near-zero margin at
    n = 2; the raw minimum is reported as an informational item.
    """
    if n_max < 2:
        raise ValidationError(f"n_max must be >= 2, got {n_max}")
    entries = _sample_entries(count, atom_count, seed)
    r = THEOREM1_RADIUS
    best_margin = math.inf
    best_label: object = None
    best_n = 0
    best_theta = 0.0
    f0_margin = math.inf
    f0_theta = 0.0
    for label, spec in entries:
        f = synthesize_F(spec, order=n_max)
        for n in range(2, n_max + 1):
            scan = boundary_min(section(f, n), Criterion.RE_DERIV, r, grid)
            if scan.min_value < best_margin:
                best_margin = scan.min_value
                best_label, best_n, best_theta = label, n, scan.argmin_theta
            if label == "f0" and n == 2:
                f0_margin = scan.min_value
                f0_theta = scan.argmin_theta
    items = (
        make_item(
            "theorem1_min_margin", best_margin, witness=(r, best_theta)
        ),
        make_item(
            "theorem1_margin_violation",
            max(0.0, -best_margin),
            expected=0.0,
            tolerance=1e-9,
            witness=(r, best_theta),
        ),
        make_item(
            "theorem1_f0_margin_n2",
            f0_margin,
            expected=0.0,
            tolerance=1e-4,
            witness=(r, f0_theta),
        ),
    )
    parameters = {
        "count": count,
        "atom_count": atom_count,
        "n_max": n_max,
        "radius": r,
        "grid": grid,
        "min_margin_spec": best_label,
        "min_margin_n": best_n,
        "min_margin_theta": best_theta,
    }
    return VerificationReport(items, seed, parameters, GENERATOR_NAME)


def conjecture2_scan(
    count: int = 500,
    atom_count: int = 3,
    n_max: int = 30,
    seed: int = 11,
    grid: int = 512,
    tol: float = 1e-7,
    n_min: int = 2,
) -> VerificationReport:
    """Advisory starlikeness-radius scan over sampled sections.

    Computes the starlikeness radius of every section s_n,
    n_min <= n <= n_max, of every sampled member, and reports the minimum
    observed together with its witness.  The open conjecture predicts every
    radius is at least 1/3; this function only *records* whether an
    observation dips below ``CONJECTURE2_THRESHOLD``
    (``parameters["counterexample_found"]``), it never turns the conjecture
    into an assertion.
    """
    if n_min < 2:
        raise ValidationError(f"sections start at n = 2, got {n_min}")
    if n_max < n_min:
        raise ValidationError(f"empty section range [{n_min}, {n_max}]")
    entries = _sample_entries(count, atom_count, seed)
    best_radius = 2.0
    best_label: object = None
    best_n = 0
    best_theta = 0.0
    f0_n2 = 2.0
    f0_n2_theta = 0.0
    for label, spec in entries:
        f = synthesize_F(spec, order=n_max)
        for n in range(n_min, n_max + 1):
            res = criterion_radius(section(f, n), Criterion.STARLIKENESS, tol, grid)
            theta = res.witness.argmin_theta if res.witness is not None else 0.0
            if res.radius < best_radius:
                best_radius = res.radius
                best_label, best_n, best_theta = label, n, theta
            if label == "f0" and n == 2:
                f0_n2 = res.radius
                f0_n2_theta = theta
    found = best_radius < CONJECTURE2_THRESHOLD
    items = [
        make_item(
            "conjecture2_min_starlike_radius",
            best_radius,
            witness=(best_radius, best_theta),
        ),
    ]
    if n_min <= 2:
        items.append(
            make_item("conjecture2_f0_n2_radius", f0_n2, witness=(f0_n2, f0_n2_theta))
        )
    parameters = {
        "count": count,
        "atom_count": atom_count,
        "n_min": n_min,
        "n_max": n_max,
        "grid": grid,
        "tol": tol,
        "threshold": CONJECTURE2_THRESHOLD,
        "counterexample_found": found,
        "min_radius_spec": best_label,
        "min_radius_n": best_n,
        "min_radius_theta": best_theta,
    }
    return VerificationReport(tuple(items), seed, parameters, GENERATOR_NAME)


def classical_radius_scan(
    n_min: int = 5, n_max: int = 40, tol: float = 1e-9, grid: int = 2048
) -> VerificationReport:
    """Koebe sections against the classical starlikeness threshold.

    For each n in [n_min, n_max] the starlikeness radius of the degree-n
    Koebe section is computed and checked against 1 - (3/n) log n - 1e-6.
    Two items per n: the radius itself (informational) and the threshold
    violation (must be exactly 0).
    """
    if n_min < 5:
        raise ValidationError(f"the classical threshold needs n >= 5, got {n_min}")
    if n_max < n_min:
        raise ValidationError(f"empty section range [{n_min}, {n_max}]")
    items: list[VerificationItem] = []
    for n in range(n_min, n_max + 1):
        res = criterion_radius(koebe(n), Criterion.STARLIKENESS, tol, grid)
        threshold = 1.0 - (3.0 / n) * math.log(n) - 1e-6
        witness = _radius_witness(res)
        items.append(make_item(f"classical_radius_n{n}", res.radius, witness=witness))
        items.append(
            make_item(
                f"classical_violation_n{n}",
                max(0.0, threshold - res.radius),
                expected=0.0,
                tolerance=0.0,
                witness=witness,
            )
        )
    parameters = {
        "n_min": n_min,
        "n_max": n_max,
        "tol": tol,
        "grid": grid,
        "threshold_slack": 1e-6,
    }
    return VerificationReport(tuple(items), 0, parameters, "deterministic")


def figure1_curves(r: float, samples: int = 2048) -> np.ndarray:
    """Closed image curve of |z| = r under the cube kernel 1/(1-z)^3.

    Parametrized as w(theta) = (1 + r e^{i theta})^3 / (1 - r^2)^3, which
    traces the same curve; the returned array includes both endpoints
    (theta = 0 and 2*pi), so first and last points coincide.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {r}")
    if samples < 8:
        raise ValidationError(f"need at least 8 samples, got {samples}")
    thetas = np.linspace(0.0, _TWO_PI, samples)
    return (1.0 + r * np.exp(1j * thetas)) ** 3 / (1.0 - r * r) ** 3


def full_suite(
    count: int = 200,
    atom_count: int = 3,
    n_max: int = 20,
    seed: int = 7,
    tol: float = 1e-9,
) -> VerificationReport:
    """Everything the verify command runs, merged into a single report."""
    t1 = theorem1_suite(count, atom_count, n_max, seed)
    items: list[VerificationItem] = [
        min_g(),
        min_T(),
        min_re_cube_kernel(1.0 / 3.0),
        n4_margin(),
    ]
    items.extend(sharpness_witnesses(tol))
    items.extend(t1.items)
    parameters = dict(t1.parameters)
    parameters["tol"] = tol
    return VerificationReport(tuple(items), seed, parameters, GENERATOR_NAME)
