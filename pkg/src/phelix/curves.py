"""Curve representations and exact conversions between them.

Three equivalent encodings of a spatial hodograph are supported:

* a quaternion polynomial A(t) = u + i v + j p + k q, which produces the
  hodograph through the product A(t) * i * conj(A(t));
* a Hopf pair (z1, z2) = (u + i v, q + i p) of complex polynomials, which
  produces the same hodograph through (|z1|^2 - |z2|^2, 2 * z1 * conj(z2));
* the raw component polynomials (x', y', z'), which carry no structure and
  are what non-quaternionic inputs (e.g. a curve given directly) reduce to.

The first two guarantee the Pythagorean property by construction; the raw
form is accepted even when that property fails, and analysis detects it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple, Union

from .errors import DegenerateInputError, UnsupportedDegreeError
from .polynomials import GaussPoly, RatLike, RatPoly, _Polynomial, as_fraction

Point = Tuple[Fraction, Fraction, Fraction]


class Quaternion:
    """Quaternion with exact rational components (scalar part first)."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w: RatLike = 0, x: RatLike = 0, y: RatLike = 0, z: RatLike = 0):
        self.w = as_fraction(w)
        self.x = as_fraction(x)
        self.y = as_fraction(y)
        self.z = as_fraction(z)

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (Fraction, int, str)):
            return cls(value)
        if isinstance(value, (tuple, list)) and len(value) == 4:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as a quaternion")

    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def __bool__(self) -> bool:
        return bool(self.w) or bool(self.x) or bool(self.y) or bool(self.z)

    @property
    def is_zero(self) -> bool:
        return not self

    def __add__(self, other) -> "Quaternion":
        other = Quaternion.coerce(other)
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Quaternion":
        other = Quaternion.coerce(other)
        return Quaternion(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __rsub__(self, other) -> "Quaternion":
        return Quaternion.coerce(other) - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Quaternion":
        other = Quaternion.coerce(other)
        a, b, c, d = self.components()
        e, f, g, h = other.components()
        return Quaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, other) -> "Quaternion":
        return Quaternion.coerce(other) * self

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> Fraction:
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def __eq__(self, other) -> bool:
        if isinstance(other, (Quaternion, Fraction, int)):
            other = Quaternion.coerce(other)
            return self.components() == other.components()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components())

    def __repr__(self) -> str:
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self) -> str:
        parts = []
        for value, unit in zip(self.components(), ("", "i", "j", "k")):
            if not value:
                continue
            mag = abs(value)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f" - {body}" if value < 0 else f" + {body}")
        return "".join(parts) if parts else "0"


QUATERNION_I = Quaternion(0, 1, 0, 0)


class QuaternionPolynomial(_Polynomial):
    """Polynomial with quaternion coefficients in the power basis.

    Multiplication preserves the (noncommutative) coefficient order; only a
    restricted set of the shared polynomial operations makes sense here and
    nothing below calls the field-division ones.
    """

    __slots__ = ()

    _coerce = staticmethod(Quaternion.coerce)

    @classmethod
    def _field_zero(cls):
        return Quaternion()

    @classmethod
    def _field_one(cls):
        return Quaternion(1)

    @classmethod
    def from_component_polys(
        cls, u: RatPoly, v: RatPoly, p: RatPoly, q: RatPoly
    ) -> "QuaternionPolynomial":
        n = max(len(u.coeffs), len(v.coeffs), len(p.coeffs), len(q.coeffs))
        return cls(
            [
                Quaternion(
                    u.coefficient(k),
                    v.coefficient(k),
                    p.coefficient(k),
                    q.coefficient(k),
                )
                for k in range(n)
            ]
        )

    def component_polys(self) -> Tuple[RatPoly, RatPoly, RatPoly, RatPoly]:
        """The four rational polynomials (u, v, p, q) = (w, i, j, k) parts."""
        return (
            RatPoly([c.w for c in self.coeffs]),
            RatPoly([c.x for c in self.coeffs]),
            RatPoly([c.y for c in self.coeffs]),
            RatPoly([c.z for c in self.coeffs]),
        )

    def conjugate(self) -> "QuaternionPolynomial":
        return QuaternionPolynomial([c.conjugate() for c in self.coeffs])

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            parts.append(f"({c!s}){power}" if power else f"({c!s})")
        return " + ".join(parts)


class HopfPair:
    """Pair of complex polynomials (z1, z2) encoding a hodograph."""

    __slots__ = ("z1", "z2")

    def __init__(self, z1: GaussPoly, z2: GaussPoly):
        if z1.is_zero and z2.is_zero:
            raise DegenerateInputError("Hopf pair must not be identically zero")
        self.z1 = z1
        self.z2 = z2

    @property
    def degree(self) -> int:
        return max(self.z1.degree or 0, self.z2.degree or 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, HopfPair):
            return self.z1 == other.z1 and self.z2 == other.z2
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.z1, self.z2))

    def __repr__(self) -> str:
        return f"HopfPair({self.z1!r}, {self.z2!r})"


class Hodograph:
    """Derivative curve (x', y', z') as three rational polynomials."""

    __slots__ = ("dx", "dy", "dz")

    def __init__(self, dx: RatPoly, dy: RatPoly, dz: RatPoly):
        if dx.is_zero and dy.is_zero and dz.is_zero:
            raise DegenerateInputError("hodograph must not be identically zero")
        self.dx = dx
        self.dy = dy
        self.dz = dz

    def vector(self) -> Tuple[RatPoly, RatPoly, RatPoly]:
        return (self.dx, self.dy, self.dz)

    @property
    def degree(self) -> int:
        return max(self.dx.degree or 0, self.dy.degree or 0, self.dz.degree or 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Hodograph):
            return self.vector() == other.vector()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.vector())

    def __repr__(self) -> str:
        return f"Hodograph({self.dx!r}, {self.dy!r}, {self.dz!r})"


class PolynomialCurve:
    """A parametric curve (x(t), y(t), z(t)); constants are the start point."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x: RatPoly, y: RatPoly, z: RatPoly):
        self.x = x
        self.y = y
        self.z = z

    def hodograph(self) -> Hodograph:
        return Hodograph(self.x.derivative(), self.y.derivative(), self.z.derivative())

    def evaluate(self, t: RatLike) -> Point:
        t = as_fraction(t)
        return (self.x.evaluate(t), self.y.evaluate(t), self.z.evaluate(t))

    @property
    def degree(self) -> int:
        return max(self.x.degree or 0, self.y.degree or 0, self.z.degree or 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolynomialCurve):
            return (self.x, self.y, self.z) == (other.x, other.y, other.z)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.z))

    def __repr__(self) -> str:
        return f"PolynomialCurve({self.x!r}, {self.y!r}, {self.z!r})"


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------


def hodograph_from_quaternion(a: QuaternionPolynomial) -> Hodograph:
    """Component form of A(t) * i * conj(A(t)).

    x' = u^2 + v^2 - p^2 - q^2, y' = 2(uq + vp), z' = 2(vq - up); the speed
    identity x'^2 + y'^2 + z'^2 = (u^2 + v^2 + p^2 + q^2)^2 holds exactly.
    """
    if a.is_zero:
        raise DegenerateInputError("zero quaternion polynomial defines no curve")
    u, v, p, q = a.component_polys()
    return Hodograph(
        u * u + v * v - p * p - q * q,
        2 * (u * q + v * p),
        2 * (v * q - u * p),
    )


def quaternion_hodograph_product(a: QuaternionPolynomial) -> QuaternionPolynomial:
    """The literal quaternion product A(t) * i * conj(A(t)).

    Always a pure vector (zero scalar part); its i, j, k components equal the
    hodograph components.  Kept as an independent route for cross-checking
    the expanded formulas.
    """
    return a * QuaternionPolynomial([QUATERNION_I]) * a.conjugate()


def hopf_from_quaternion(a: QuaternionPolynomial) -> HopfPair:
    """Reassemble (z1, z2) = (u + i v, q + i p).  Lossless."""
    u, v, p, q = a.component_polys()
    return HopfPair(GaussPoly.from_parts(u, v), GaussPoly.from_parts(q, p))


def quaternion_from_hopf(pair: HopfPair) -> QuaternionPolynomial:
    """Inverse of hopf_from_quaternion."""
    return QuaternionPolynomial.from_component_polys(
        pair.z1.real_part(),
        pair.z1.imag_part(),
        pair.z2.imag_part(),
        pair.z2.real_part(),
    )


def hodograph_from_hopf(pair: HopfPair) -> Hodograph:
    """Hopf map (|z1|^2 - |z2|^2, 2 z1 conj(z2)) with (y', z') = (Re, Im)."""
    w = pair.z1 * pair.z2.conjugate()
    return Hodograph(
        pair.z1.norm_squared() - pair.z2.norm_squared(),
        2 * w.real_part(),
        2 * w.imag_part(),
    )


def sigma_poly(source: Union[QuaternionPolynomial, HopfPair]) -> RatPoly:
    """The exact speed polynomial u^2 + v^2 + p^2 + q^2 = |z1|^2 + |z2|^2."""
    if isinstance(source, QuaternionPolynomial):
        u, v, p, q = source.component_polys()
        return u * u + v * v + p * p + q * q
    if isinstance(source, HopfPair):
        return source.z1.norm_squared() + source.z2.norm_squared()
    raise TypeError(f"expected a quaternion polynomial or Hopf pair, got {source!r}")


def bezier_to_power(controls: Sequence[Quaternion]) -> QuaternionPolynomial:
    """Convert quadratic (or lower) Bernstein control quaternions to power basis."""
    controls = [Quaternion.coerce(c) for c in controls]
    if not 1 <= len(controls) <= 3:
        raise UnsupportedDegreeError(
            f"expected 1 to 3 control quaternions, got {len(controls)}"
        )
    if len(controls) == 1:
        return QuaternionPolynomial(controls)
    if len(controls) == 2:
        c0, c1 = controls
        return QuaternionPolynomial([c0, c1 - c0])
    c0, c1, c2 = controls
    return QuaternionPolynomial([c0, 2 * (c1 - c0), c0 - 2 * c1 + c2])


def bezier_evaluate(controls: Sequence[Quaternion], t: RatLike) -> Quaternion:
    """Evaluate the Bernstein form directly (de Casteljau-free, exact)."""
    controls = [Quaternion.coerce(c) for c in controls]
    t = as_fraction(t)
    s = 1 - t
    n = len(controls) - 1
    if n == 0:
        return controls[0]
    if n == 1:
        return s * controls[0] + t * controls[1]
    if n == 2:
        return (s * s) * controls[0] + (2 * s * t) * controls[1] + (t * t) * controls[2]
    raise UnsupportedDegreeError(f"expected 1 to 3 control quaternions, got {n + 1}")


def integrate(h: Hodograph, origin: Sequence[RatLike] = (0, 0, 0)) -> PolynomialCurve:
    """Exact antiderivative of a hodograph, anchored at the given start point."""
    ox, oy, oz = (as_fraction(c) for c in origin)
    return PolynomialCurve(
        h.dx.antiderivative() + RatPoly([ox]),
        h.dy.antiderivative() + RatPoly([oy]),
        h.dz.antiderivative() + RatPoly([oz]),
    )
