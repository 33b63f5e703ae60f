"""Differential-geometric analysis of a hodograph, all in exact arithmetic.

The central questions — is the speed a polynomial, is the cross-product norm
a polynomial, is the torsion/curvature ratio constant — are decided as exact
algebraic identities on rational polynomials, never by sampling.  The ratio
test works on (tau/kappa)^2, which is always an honest rational function even
when the norms themselves carry irrational square-root scales; constancy of
the square suffices because with a nonzero constant lambda the identity
det * sigma^3 = +/- lambda * rho^3 cannot switch branch where rho > 0 (a sign
change would force a zero of the left side at a point where the right side
is nonzero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Tuple

from .curves import Hodograph
from .errors import (
    InternalInconsistencyError,
    LineDegeneracyError,
    NotRationalFrameError,
)
from .polynomials import (
    RatPoly,
    RationalFunction,
    ScaledSqrt,
    perfect_square_root,
    poly_gcd,
    rational_sqrt,
)

Vec3 = Tuple


def _cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Vec3, v: Vec3):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def speed_squared(h: Hodograph) -> RatPoly:
    """|alpha'|^2 as an exact rational polynomial."""
    v = h.vector()
    return _dot(v, v)


def _cross_poly(h: Hodograph) -> Vec3:
    v = h.vector()
    return _cross(v, tuple(c.derivative() for c in v))


def torsion_numerator(h: Hodograph) -> RatPoly:
    """det(alpha', alpha'', alpha''') as an exact rational polynomial."""
    v = h.vector()
    a3 = tuple(c.derivative().derivative() for c in v)
    return _dot(_cross_poly(h), a3)


@dataclass(frozen=True)
class CrossNorm:
    """|alpha' ^ alpha''|^2 together with its real square root when one exists."""

    rho_squared: RatPoly
    rho: Optional[ScaledSqrt]


@dataclass(frozen=True)
class FrenetFrame:
    """Exact Frenet frame data.

    The tangent entries are fully normalized rational functions (tangent dot
    tangent is exactly 1).  The binormal and normal are stored without the
    irrational factor 1/sqrt(frame_scale): their stored self-products equal
    frame_scale, and the true unit vectors are the stored ones divided by
    sqrt(frame_scale).
    """

    tangent: Tuple[RationalFunction, RationalFunction, RationalFunction]
    binormal: Tuple[RationalFunction, RationalFunction, RationalFunction]
    normal: Tuple[RationalFunction, RationalFunction, RationalFunction]
    frame_scale: Fraction


@dataclass(frozen=True)
class CurvatureData:
    """Curvature/torsion ingredients; sigma is present only for PH inputs."""

    sigma: Optional[ScaledSqrt]
    cross: CrossNorm
    torsion_numerator: RatPoly
    lancret_ratio_squared: RationalFunction


class HelixKind:
    LINE = "line"
    PLANAR = "planar"
    HELIX = "helix"
    NOT_HELIX = "not-helix"


@dataclass(frozen=True)
class HelixVerdict:
    """Outcome of the constant-slope test.

    For helices, slope_squared is the exact square of the cosine of the angle
    between tangent and axis, and axis is an integer-cleared direction vector
    that satisfies <axis, alpha'>^2 = slope_squared * |axis|^2 * sigma^2 as a
    polynomial identity.  Planar curves report their plane normal with slope
    zero; lines and non-helices carry no axis.
    """

    kind: str
    slope_squared: Optional[Fraction] = None
    axis: Optional[Tuple[Fraction, Fraction, Fraction]] = None


def cross_norm(h: Hodograph) -> CrossNorm:
    """|alpha' ^ alpha''|^2 via the literal cross product."""
    c = _cross_poly(h)
    rho_squared = _dot(c, c)
    return CrossNorm(rho_squared, perfect_square_root(rho_squared))


def is_ph(h: Hodograph) -> Optional[ScaledSqrt]:
    """The speed as a real polynomial if |alpha'|^2 is a perfect square."""
    return perfect_square_root(speed_squared(h))


def is_2ph(h: Hodograph) -> Optional[Tuple[ScaledSqrt, ScaledSqrt]]:
    """(sigma, rho) when both norms are real-polynomial squares, else None."""
    sigma = is_ph(h)
    if sigma is None:
        return None
    rho = cross_norm(h).rho
    if rho is None:
        return None
    return sigma, rho


def lancret_ratio_squared(h: Hodograph) -> RationalFunction:
    """(tau/kappa)^2 = det^2 * (sigma^2)^3 / (rho^2)^3, reduced."""
    s2 = speed_squared(h)
    c = _cross_poly(h)
    r2 = _dot(c, c)
    if r2.is_zero:
        raise LineDegeneracyError("curvature vanishes identically (straight line)")
    det = torsion_numerator(h)
    return RationalFunction(det * det * s2 * s2 * s2, r2 * r2 * r2)


def curvature_torsion(h: Hodograph) -> CurvatureData:
    cross = cross_norm(h)
    if cross.rho_squared.is_zero:
        raise LineDegeneracyError("curvature vanishes identically (straight line)")
    return CurvatureData(
        sigma=is_ph(h),
        cross=cross,
        torsion_numerator=torsion_numerator(h),
        lancret_ratio_squared=lancret_ratio_squared(h),
    )


_TRIAL_POINTS = tuple(
    Fraction(v) for v in (0, 1, -1, 2, -2, Fraction(1, 2), 3, Fraction(-1, 3))
)


def _constant_ratio_value(
    det: RatPoly, s2: RatPoly, rho_squared: RatPoly
) -> Optional[Fraction]:
    """The constant value of det^2 (s2)^3 / (rho^2)^3, or None.

    Constancy means det^2 * s2^3 = lambda * (rho^2)^3 as polynomials.  The
    candidate lambda is pinned by degrees and leading coefficients, cheap
    exact point evaluations reject non-constant inputs without ever forming
    the large products, and survivors get the full polynomial comparison.
    """
    if 2 * det.degree + 3 * s2.degree != 3 * rho_squared.degree:
        return None
    lam = (
        det.leading_coefficient**2
        * s2.leading_coefficient**3
        / rho_squared.leading_coefficient**3
    )
    for t in _TRIAL_POINTS:
        dv = det.evaluate(t)
        sv = s2.evaluate(t)
        rv = rho_squared.evaluate(t)
        if dv * dv * sv**3 != lam * rv**3:
            return None
    if det * det * s2**3 != lam * rho_squared**3:
        return None
    return lam


def is_helix(h: Hodograph) -> HelixVerdict:
    """Constant-slope classification of an arbitrary polynomial hodograph."""
    c = _cross_poly(h)
    rho_squared = _dot(c, c)
    if rho_squared.is_zero:
        return HelixVerdict(HelixKind.LINE)
    det = torsion_numerator(h)
    if det.is_zero:
        axis, slope = _extract_axis(h, planar=True)
        return HelixVerdict(HelixKind.PLANAR, slope, axis)
    s2 = speed_squared(h)
    lam2 = _constant_ratio_value(det, s2, rho_squared)
    if lam2 is None:
        return HelixVerdict(HelixKind.NOT_HELIX)
    axis, slope = _extract_axis(h, planar=False)
    if slope != lam2 / (1 + lam2):
        raise InternalInconsistencyError(
            "slope from axis disagrees with the torsion/curvature ratio"
        )
    return HelixVerdict(HelixKind.HELIX, slope, axis)


def helix_axis(
    h: Hodograph, verdict: HelixVerdict
) -> Tuple[Tuple[Fraction, Fraction, Fraction], Fraction]:
    """Axis direction and squared slope for a helix or planar verdict."""
    if verdict.kind not in (HelixKind.HELIX, HelixKind.PLANAR):
        raise ValueError(f"no axis for verdict kind {verdict.kind!r}")
    return _extract_axis(h, planar=verdict.kind == HelixKind.PLANAR)


def _integer_cleared(values) -> Tuple[Fraction, ...]:
    den_lcm = 1
    for v in values:
        den_lcm = den_lcm * v.denominator // int_gcd(den_lcm, v.denominator)
    ints = [v * den_lcm for v in values]
    num_gcd = 0
    for v in ints:
        num_gcd = int_gcd(num_gcd, v.numerator)
    cleared = [v / num_gcd for v in ints]
    for v in cleared:
        if v:
            if v < 0:
                cleared = [-x for x in cleared]
            break
    return tuple(cleared)


def _proportionality(num: RatPoly, den: RatPoly) -> Optional[Fraction]:
    """lambda with num = lambda * den as polynomials, or None."""
    if num.is_zero:
        return Fraction(0)
    if den.is_zero or num.degree != den.degree:
        return None
    lam = num.leading_coefficient / den.leading_coefficient
    return lam if num == lam * den else None


def _verify_axis(
    axis, v, c, s2: RatPoly, rho_squared: RatPoly
) -> Optional[Fraction]:
    """Slope^2 when the axis identities hold exactly, else None.

    The identities are <u, alpha'>^2 = slope^2 |u|^2 sigma^2 and
    <u, alpha' ^ alpha''>^2 = (1 - slope^2) |u|^2 rho^2, both as zero
    polynomials.
    """
    axis_norm2 = sum(a * a for a in axis)
    tangent_proj = _dot(axis, v)
    slope = _proportionality(tangent_proj * tangent_proj, axis_norm2 * s2)
    if slope is None:
        return None
    binormal_proj = _dot(axis, c)
    residual = binormal_proj * binormal_proj - (1 - slope) * axis_norm2 * rho_squared
    return slope if residual.is_zero else None


def _extract_axis(
    h: Hodograph, planar: bool
) -> Tuple[Tuple[Fraction, Fraction, Fraction], Fraction]:
    """Recover the constant axis direction, verifying the defining identities.

    For a planar curve the axis is the constant direction of alpha' ^ alpha''.
    For a proper helix it is the Darboux direction tau*t + kappa*b, scaled by
    sigma^3 * rho^2 so that the vector reads det * sigma^2 * alpha' +
    rho^2 * (alpha' ^ alpha'') — a rational polynomial vector that is a scalar
    polynomial times the constant direction.  Evaluating that vector at any
    parameter where it does not vanish therefore already yields the axis; the
    verified identities make the shortcut exact, and a gcd-based extraction
    remains as fallback for evaluation points that all hit roots.
    """
    v = h.vector()
    c = _cross_poly(h)
    rho_squared = _dot(c, c)
    s2 = speed_squared(h)
    if planar:
        candidate = c
    else:
        det = torsion_numerator(h)
        candidate = tuple(det * s2 * v[i] + rho_squared * c[i] for i in range(3))

    for t in _TRIAL_POINTS:
        values = tuple(p.evaluate(t) for p in candidate)
        if not any(values):
            continue
        axis = _integer_cleared(values)
        slope = _verify_axis(axis, v, c, s2, rho_squared)
        if slope is not None:
            return axis, slope
        break

    # fallback: divide out the scalar polynomial explicitly
    nonzero = [p for p in candidate if not p.is_zero]
    if not nonzero:
        raise InternalInconsistencyError("axis candidate vector vanished identically")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    parts = []
    for p in candidate:
        if p.is_zero:
            parts.append(Fraction(0))
            continue
        q = p.exact_div(g)
        if not q.is_constant():
            raise InternalInconsistencyError(
                "axis direction is not constant for a constant-ratio verdict"
            )
        parts.append(q.coefficient(0))
    axis = _integer_cleared(parts)
    slope = _verify_axis(axis, v, c, s2, rho_squared)
    if slope is None:
        raise InternalInconsistencyError("axis identities failed")
    return axis, slope


def frenet_frame(h: Hodograph) -> FrenetFrame:
    """Exact Frenet frame for a 2-PH hodograph.

    Requires the speed's square-root scale to be a perfect rational square so
    the tangent can be written with rational entries; quaternion-generated
    curves always satisfy this (their speed is itself a rational polynomial).
    """
    norms = is_2ph(h)
    if norms is None:
        raise NotRationalFrameError(
            "Frenet frame entries are rational only for 2-PH curves"
        )
    sigma, rho = norms
    if rho.is_zero:
        raise LineDegeneracyError("Frenet frame undefined along a straight line")
    sigma_root = rational_sqrt(sigma.scale)
    if sigma_root is None:
        raise NotRationalFrameError(
            "speed carries an irrational constant factor; tangent entries "
            "would not be rational"
        )
    speed = sigma_root * sigma.body
    tangent = tuple(RationalFunction(p, speed) for p in h.vector())
    c = _cross_poly(h)
    binormal = tuple(RationalFunction(p, rho.body) for p in c)
    normal = _cross(binormal, tangent)
    return FrenetFrame(tangent, binormal, normal, rho.scale)


@dataclass(frozen=True)
class CurveAnalysis:
    """Everything the analyze pipeline computes for one hodograph."""

    sigma_squared: RatPoly
    sigma: Optional[ScaledSqrt]
    cross: CrossNorm
    torsion_numerator: RatPoly
    lancret_ratio_squared: Optional[RationalFunction]
    verdict: HelixVerdict

    @property
    def is_ph(self) -> bool:
        return self.sigma is not None

    @property
    def is_2ph(self) -> bool:
        return self.sigma is not None and self.cross.rho is not None


def analyze(h: Hodograph) -> CurveAnalysis:
    """Run every analysis that is defined for the input and bundle the results."""
    cross = cross_norm(h)
    det = torsion_numerator(h)
    ratio = None if cross.rho_squared.is_zero else lancret_ratio_squared(h)
    return CurveAnalysis(
        sigma_squared=speed_squared(h),
        sigma=is_ph(h),
        cross=cross,
        torsion_numerator=det,
        lancret_ratio_squared=ratio,
        verdict=is_helix(h),
    )
