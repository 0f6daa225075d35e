"""Boundary scans, zero counting, and radius solvers for disc criteria.

A *criterion* attaches to each polynomial s a real field on the disc whose
positivity expresses a geometric property:

=================  =============================  =========================
criterion          field                          property on |z| < r
=================  =============================  =========================
re-deriv           Re s'(z)                       derivative has
                                                  positive real part
convex             Re(1 + z s''(z)/s'(z))        convexity
starlike           Re(z s'(z)/s(z))              starlikeness w.r.t. 0
local-univalence   |s'(z)|                        s' does not vanish
=================  =============================  =========================

Each field is harmonic wherever its defining quotient is analytic, so its
minimum over a closed disc sits on the bounding circle.  :func:`boundary_min`
locates that circle minimum with a uniform grid scan followed by
golden-section refinement.  :func:`criterion_radius` bisects on the radius;
before accepting a probe for the quotient criteria it counts denominator
zeros inside the disc with :func:`count_zeros` (an argument-principle
quadrature), since a positive boundary minimum proves nothing once a pole
has slipped inside the contour.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .exceptions import (
    DomainError,
    PoleProximityError,
    ValidationError,
    WindingError,
    ZeroOnCircleError,
)
from .series import TruncatedSeries, derivative, is_normalized

__all__ = [
    "Criterion",
    "BoundaryScan",
    "RadiusResult",
    "RADIUS_CAP",
    "criterion_value",
    "boundary_min",
    "criterion_radius",
    "count_zeros",
    "golden_section_min",
]

#: Largest radius ever probed; a criterion that survives here reports 1.0.
RADIUS_CAP = 1.0 - 1e-6

_POLE_TOL = 1e-300
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_TWO_PI = 2.0 * math.pi


class Criterion(str, Enum):
    """Disc properties measured by this module (values match the CLI)."""

    RE_DERIV = "re-deriv"
    CONVEXITY = "convex"
    STARLIKENESS = "starlike"
    LOCAL_UNIVALENCE = "local-univalence"


@dataclass(frozen=True)
class BoundaryScan:
    """Minimum of a criterion field over the circle |z| = r."""

    r: float
    grid_size: int
    min_value: float
    argmin_theta: float
    refined: bool


@dataclass(frozen=True)
class RadiusResult:
    """Outcome of a bisection for the largest good disc.

    ``radius`` is the largest radius at which the criterion was verified to
    hold; the true radius exceeds it by at most ``tol``, except that a
    criterion holding at every probe up to the cap reports radius 1.0 with
    ``clamped`` set.  ``witness`` is a boundary scan at the certified radius
    (None when even tiny discs fail).
    """

    radius: float
    witness: BoundaryScan | None
    iterations: int
    tol: float
    clamped: bool


def golden_section_min(
    fn: Callable[[float], float], a: float, b: float, xtol: float = 1e-12
) -> tuple[float, float]:
    """Golden-section minimizer of ``fn`` on [a, b]; returns (x, fn(x)).

    Tracks the best probe seen, so the returned value never exceeds any
    evaluation made during the search.  Exact value ties go to the smaller x.
    """
    if b < a:
        a, b = b, a
    span = b - a
    c = b - _INVPHI * span
    d = a + _INVPHI * span
    fc = fn(c)
    fd = fn(d)
    best = min((fc, c), (fd, d))
    while (b - a) > xtol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
            best = min(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fn(d)
            best = min(best, (fd, d))
    return best[1], best[0]


def criterion_value(s: TruncatedSeries, criterion: Criterion, z: complex) -> float:
    """Evaluate the criterion field of ``s`` at a single point ``z``.

    The starlikeness field takes its limit value 1.0 at z = 0 (removable for
    any normalized series).  Quotient criteria raise
    :class:`PoleProximityError` when the denominator modulus falls below the
    representable floor.
    """
    criterion = Criterion(criterion)
    z = complex(z)
    if criterion is Criterion.RE_DERIV:
        return _horner(_rev_deriv(s), z).real
    if criterion is Criterion.LOCAL_UNIVALENCE:
        return abs(_horner(_rev_deriv(s), z))
    if criterion is Criterion.CONVEXITY:
        sp = _horner(_rev_deriv(s), z)
        if abs(sp) < _POLE_TOL:
            raise PoleProximityError(z, "s' vanishes at the evaluation point")
        spp = _horner(_rev_deriv2(s), z)
        return (1.0 + z * spp / sp).real
    # starlikeness
    if z == 0:
        return 1.0
    sv = _horner(_rev_coeffs(s), z)
    if abs(sv) < _POLE_TOL:
        raise PoleProximityError(z, "s vanishes at the evaluation point")
    sp = _horner(_rev_deriv(s), z)
    return (z * sp / sv).real


_POWER_BLOCK = 256


@lru_cache(maxsize=4)
def _unit_block(grid: int) -> np.ndarray:
    """e^{i m theta_k} for m < 256 on the uniform grid, Fortran-ordered.

    Column-major layout keeps every ``[:, :ncols]`` slice BLAS-ready without
    a copy, so one cached block serves scans of every polynomial order.
    """
    k = np.arange(grid, dtype=np.float64)[:, None] * np.arange(
        _POWER_BLOCK, dtype=np.float64
    )
    return np.asfortranarray(np.exp((2j * np.pi / grid) * k))


def _unit_powers(grid: int, ncols: int) -> np.ndarray:
    """Matrix of e^{i m theta_k} on the uniform grid, cached across scans."""
    if ncols <= _POWER_BLOCK:
        return _unit_block(grid)[:, :ncols]
    k = np.arange(grid, dtype=np.float64)[:, None] * np.arange(ncols, dtype=np.float64)
    return np.exp((2j * np.pi / grid) * k)


def _circle_values(coeffs: np.ndarray, r: float, grid: int) -> np.ndarray:
    """Values of the polynomial with ``coeffs`` at r * grid-th roots of unity."""
    scaled = coeffs * (r ** np.arange(coeffs.size))
    return _unit_powers(grid, coeffs.size) @ scaled


def _deriv_coeffs(coeffs: np.ndarray) -> np.ndarray:
    out = coeffs[1:] * np.arange(1, coeffs.size)
    if out.size == 0:
        out = np.zeros(1, dtype=np.complex128)
    return out


def _rev_coeffs(s: TruncatedSeries) -> list[complex]:
    return [complex(c) for c in s.coeffs[::-1]]


def _rev_deriv(s: TruncatedSeries) -> list[complex]:
    n = s.coeffs.size
    return [complex(m * s.coeffs[m]) for m in range(n - 1, 0, -1)] or [0j]


def _rev_deriv2(s: TruncatedSeries) -> list[complex]:
    n = s.coeffs.size
    return [complex(m * (m - 1) * s.coeffs[m]) for m in range(n - 1, 1, -1)] or [0j]


def _horner(rev: list[complex], z: complex) -> complex:
    v = 0j
    for c in rev:
        v = v * z + c
    return v


def _grid_field(
    s: TruncatedSeries, criterion: Criterion, r: float, grid: int
) -> np.ndarray:
    """Criterion values at all grid points of the circle |z| = r."""
    coeffs = s.coeffs
    dcoeffs = _deriv_coeffs(coeffs)
    if criterion is Criterion.RE_DERIV:
        return _circle_values(dcoeffs, r, grid).real.copy()
    if criterion is Criterion.LOCAL_UNIVALENCE:
        return np.abs(_circle_values(dcoeffs, r, grid))
    z = r * _unit_powers(grid, 2)[:, 1]
    if criterion is Criterion.CONVEXITY:
        sp = _circle_values(dcoeffs, r, grid)
        bad = int(np.argmin(np.abs(sp)))
        if abs(sp[bad]) < _POLE_TOL:
            raise PoleProximityError(complex(z[bad]), "s' vanishes on the scan circle")
        spp = _circle_values(_deriv_coeffs(dcoeffs), r, grid)
        return (1.0 + z * spp / sp).real.copy()
    sv = _circle_values(coeffs, r, grid)
    bad = int(np.argmin(np.abs(sv)))
    if abs(sv[bad]) < _POLE_TOL:
        raise PoleProximityError(complex(z[bad]), "s vanishes on the scan circle")
    sp = _circle_values(dcoeffs, r, grid)
    return (z * sp / sv).real.copy()


def _scalar_field(
    s: TruncatedSeries, criterion: Criterion, r: float
) -> Callable[[float], float]:
    """Closure evaluating the criterion at angle theta on |z| = r.

    Plain-Python simultaneous Horner (value and derivatives accumulated in
    one pass): for the short polynomials handled here this beats assembling
    numpy arrays point by point inside the refinement loop.
    """
    rev_s = _rev_coeffs(s)
    rev_d = _rev_deriv(s)

    if criterion is Criterion.RE_DERIV:

        def fn(theta: float) -> float:
            return _horner(rev_d, r * cmath.exp(1j * theta)).real

    elif criterion is Criterion.LOCAL_UNIVALENCE:

        def fn(theta: float) -> float:
            return abs(_horner(rev_d, r * cmath.exp(1j * theta)))

    elif criterion is Criterion.CONVEXITY:

        def fn(theta: float) -> float:
            z = r * cmath.exp(1j * theta)
            v = 0j
            d = 0j
            e = 0j
            for c in rev_s:
                e = e * z + d
                d = d * z + v
                v = v * z + c
            if abs(d) < _POLE_TOL:
                raise PoleProximityError(z, "s' vanishes during refinement")
            return (1.0 + z * (2.0 * e) / d).real

    else:

        def fn(theta: float) -> float:
            z = r * cmath.exp(1j * theta)
            v = 0j
            d = 0j
            for c in rev_s:
                d = d * z + v
                v = v * z + c
            if abs(v) < _POLE_TOL:
                raise PoleProximityError(z, "s vanishes during refinement")
            return (z * d / v).real

    return fn


def boundary_min(
    s: TruncatedSeries,
    criterion: Criterion,
    r: float,
    grid_size: int = 2048,
    theta_tol: float = 1e-12,
) -> BoundaryScan:
    """Minimum of the criterion field over the circle |z| = r.

    A uniform scan of ``grid_size`` angles picks the coarse minimizer (the
    smallest theta on exact ties); golden-section search then refines over
    the two adjacent grid cells down to ``theta_tol``.  The reported pair is
    the lexicographic minimum of (value, theta) over everything evaluated,
    with theta wrapped into [0, 2*pi).
    """
    criterion = Criterion(criterion)
    if not 0.0 < r < 1.0:
        raise DomainError(f"scan radius must lie in (0, 1), got {r}")
    if grid_size < 16:
        raise ValidationError(f"grid must have at least 16 points, got {grid_size}")
    vals = _grid_field(s, criterion, r, grid_size)
    k = int(np.argmin(vals))
    step = _TWO_PI / grid_size
    theta_k = k * step
    fn = _scalar_field(s, criterion, r)
    gx, gv = golden_section_min(fn, theta_k - step, theta_k + step, theta_tol)
    value, theta = min((float(vals[k]), theta_k), (gv, gx))
    return BoundaryScan(
        r=r,
        grid_size=grid_size,
        min_value=value,
        argmin_theta=theta % _TWO_PI,
        refined=True,
    )


def count_zeros(
    s: TruncatedSeries,
    r: float,
    start: int = 4096,
    limit: int = 1 << 20,
    boundary_tol: float = 1e-9,
    residual_tol: float = 0.25,
) -> int:
    """Number of zeros of ``s`` in |z| < r by argument-principle quadrature.

    The winding number (1/(2 pi i)) * integral of s'/s along the circle
    reduces to the mean of z s'(z)/s(z) over uniformly spaced sample points.
    The sample count doubles from ``start`` (reusing earlier evaluations)
    until the mean lands within ``residual_tol`` of the same integer, with
    negligible imaginary part, on two consecutive refinement levels.

    Raises :class:`ZeroOnCircleError` when |s| dips below ``boundary_tol``
    at a sample point -- a zero too close to the contour for the quadrature
    to be trusted -- and :class:`WindingError` if agreement is not reached
    within ``limit`` points.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {r}")
    coeffs = s.coeffs
    if coeffs.size == 1:
        if abs(coeffs[0]) < boundary_tol:
            raise ZeroOnCircleError("constant term below tolerance; series is ~0")
        return 0
    dcoeffs = _deriv_coeffs(coeffs)

    def batch(thetas: np.ndarray) -> complex:
        z = r * np.exp(1j * thetas)
        sv = _poly_vals(coeffs, z)
        small = int(np.argmin(np.abs(sv)))
        if abs(sv[small]) < boundary_tol:
            raise ZeroOnCircleError(
                f"|s| = {abs(sv[small]):.3e} at theta = {thetas[small]:.12f} "
                f"on |z| = {r}; zero too close to the circle"
            )
        return complex(np.sum(z * _poly_vals(dcoeffs, z) / sv))

    m = start
    total = batch(_TWO_PI * np.arange(m) / m)
    prev: int | None = None
    while True:
        w = total / m
        if abs(w.imag) < residual_tol and abs(w.real - round(w.real)) < residual_tol:
            k = round(w.real)
            if prev == k:
                if k < 0:
                    raise WindingError(f"negative winding {k} from {m} points")
                return k
            prev = k
        else:
            prev = None
        if 2 * m > limit:
            raise WindingError(
                f"winding mean {w!r} not settled within {m} quadrature points"
            )
        total += batch(_TWO_PI * (2.0 * np.arange(m) + 1.0) / (2 * m))
        m *= 2


def _poly_vals(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation of a coefficient array on a point array."""
    v = np.full(z.shape, coeffs[-1], dtype=np.complex128)
    for c in coeffs[-2::-1]:
        v *= z
        v += c
    return v


def _guard_series(s: TruncatedSeries, criterion: Criterion) -> TruncatedSeries | None:
    """Polynomial whose in-disc zeros invalidate the boundary argument."""
    if criterion in (Criterion.CONVEXITY, Criterion.LOCAL_UNIVALENCE):
        return derivative(s)
    if criterion is Criterion.STARLIKENESS:
        # s vanishes at the origin by normalization; deflate one power of z
        # so only the *other* zeros of s are counted.
        return TruncatedSeries(s.coeffs[1:])
    return None


def criterion_radius(
    s: TruncatedSeries,
    criterion: Criterion,
    tol: float = 1e-9,
    grid_size: int = 2048,
) -> RadiusResult:
    """Largest disc radius on which the criterion holds, by bisection.

    A probe radius is accepted when the boundary minimum is strictly
    positive and -- for the quotient criteria and local univalence -- the
    relevant denominator polynomial has no zeros inside the probe disc.  Any
    numeric failure (pole proximity, zero on circle, unsettled winding)
    counts as a failed probe, so the result errs small.  A criterion
    surviving at the cap 1 - 1e-6 reports radius 1.0 with ``clamped`` set.
    """
    criterion = Criterion(criterion)
    if not is_normalized(s, tol=1e-9):
        raise ValidationError("criterion_radius requires a normalized series")
    if tol < 1e-12:
        raise ValidationError(f"tolerance must be at least 1e-12, got {tol}")
    guard = _guard_series(s, criterion)

    def value_ok(r: float) -> bool:
        try:
            return boundary_min(s, criterion, r, grid_size).min_value > 0.0
        except PoleProximityError:
            return False

    def guard_ok(r: float) -> bool:
        try:
            return count_zeros(guard, r) == 0
        except (ZeroOnCircleError, WindingError):
            return False

    def combined(r: float) -> bool:
        return value_ok(r) and (guard is None or guard_ok(r))

    def bisect(pred: Callable[[float], bool]) -> tuple[float, int, bool]:
        iterations = 1
        if pred(RADIUS_CAP):
            return RADIUS_CAP, iterations, True
        lo, hi = 0.0, RADIUS_CAP
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            iterations += 1
            if pred(mid):
                lo = mid
            else:
                hi = mid
        return lo, iterations, False

    # The combined predicate (positive boundary minimum + zero-free guard
    # disc) is downward closed: if it holds at r it holds at every smaller
    # radius, because shrinking the disc keeps it zero-free and harmonicity
    # then forces the minimum to grow.  So bisect on the cheap value test
    # alone and validate the resulting radius with a single zero count;
    # only if that count fails (the guard, not the value, is what binds)
    # rerun the bisection with the count folded into every probe.
    r, iterations, clamped = bisect(value_ok)
    if guard is not None and r > 0.0:
        iterations += 1
        if not guard_ok(r):
            r, extra, clamped = bisect(combined)
            iterations += extra
    radius = 1.0 if clamped else r
    scan_at = RADIUS_CAP if clamped else r
    witness = _witness(s, criterion, scan_at, grid_size) if scan_at > 0.0 else None
    return RadiusResult(radius, witness, iterations, tol, clamped=clamped)


def _witness(
    s: TruncatedSeries, criterion: Criterion, r: float, grid_size: int
) -> BoundaryScan | None:
    try:
        return boundary_min(s, criterion, r, grid_size)
    except (PoleProximityError, ZeroOnCircleError, WindingError):
        return None
