"""Exact univariate polynomial algebra over the rationals and Gaussian rationals.

Everything in this module is exact: coefficients are `fractions.Fraction`
(or :class:`GaussianRational` pairs of them), and every operation returns
values in a canonical normal form.  Floating point never appears here; the
perfect-square and gcd decisions downstream rely on that.

The normal forms are:

* polynomials store ascending coefficients with no trailing zeros, and the
  zero polynomial has ``degree is None`` (a real sentinel, not ``-1``);
* gcds are monic;
* square-free factors are monic, pairwise coprime and square-free;
* :class:`ScaledSqrt` bodies are primitive with positive leading
  coefficient;
* :class:`RationalFunction` values are reduced with a primitive,
  positive-leading denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .errors import DegenerateInputError

RatLike = Union[Fraction, int, str]


def as_fraction(value: RatLike) -> Fraction:
    """Coerce to an exact rational.  Floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (Fraction, int, str)):
            return cls(value)
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(value[0], value[1])
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        n = other.norm_squared()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() * GaussianRational(Fraction(1, 1) / n)

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (GaussianRational, Fraction, int)):
            other = GaussianRational.coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return _format_fraction(self.re)
        if not self.re:
            return _format_imaginary(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{_format_fraction(self.re)} {sign} {_format_imaginary(abs(self.im))}"


def _format_fraction(value: Fraction) -> str:
    return str(value)


def _format_imaginary(value: Fraction) -> str:
    if value == 1:
        return "i"
    if value == -1:
        return "-i"
    if value.denominator == 1:
        return f"{value}i"
    return f"({value})i"


class _Polynomial:
    """Dense univariate polynomial over an exact field (shared machinery)."""

    __slots__ = ("coeffs",)

    # subclasses provide coefficient coercion plus the field constants
    @staticmethod
    def _coerce(value):
        raise NotImplementedError

    @classmethod
    def _field_zero(cls):
        raise NotImplementedError

    @classmethod
    def _field_one(cls):
        raise NotImplementedError

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([cls._field_one()])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def variable(cls):
        """The monomial t."""
        return cls([cls._field_zero(), cls._field_one()])

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise DegenerateInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._field_zero()

    # -- ring arithmetic -----------------------------------------------------

    def _as_same(self, other):
        if isinstance(other, type(self)):
            return other
        try:
            return type(self)([other])
        except TypeError:
            return None

    def __add__(self, other):
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)(
            [self.coefficient(k) - other.coefficient(k) for k in range(n)]
        )

    def __rsub__(self, other):
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return type(self)()
        out = [self._field_zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return type(self)(out)

    def __rmul__(self, other):
        # coefficient domains here are commutative except quaternions, where
        # callers only ever use central (scalar) factors
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, type(self)):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self):
        return type(self)([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self):
        """Term-wise antiderivative with zero constant term."""
        out = [self._field_zero()]
        for k, c in enumerate(self.coeffs):
            out.append(c * Fraction(1, k + 1))
        return type(self)(out)

    def evaluate(self, point):
        point = self._coerce(point)
        acc = self._field_zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_affine(self, a, b):
        """The polynomial p(a*t + b), computed exactly by Horner."""
        lin = type(self)([b, a])
        acc = type(self)()
        for c in reversed(self.coeffs):
            acc = acc * lin + type(self)([c])
        return acc

    # -- field-coefficient division --------------------------------------------

    def __divmod__(self, other):
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = len(other.coeffs)
        if len(rem) < dn:
            return type(self)(), self
        quot = [self._field_zero()] * (len(rem) - dn + 1)
        inv_lead = self._field_one() / other.coeffs[-1]
        for k in range(len(rem) - dn, -1, -1):
            c = rem[k + dn - 1] * inv_lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return type(self)(quot), type(self)(rem[: dn - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise DegenerateInputError(f"{other!s} does not divide {self!s} exactly")
        return q

    def divides(self, other) -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self):
        if self.is_zero:
            return self
        inv = self._field_one() / self.coeffs[-1]
        return type(self)([c * inv for c in self.coeffs])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"


class RatPoly(_Polynomial):
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ()

    _coerce = staticmethod(as_fraction)

    @classmethod
    def _field_zero(cls):
        return Fraction(0)

    @classmethod
    def _field_one(cls):
        return Fraction(1)

    def _integer_form(self) -> Tuple[Fraction, List[int]]:
        """(scale, ints) with self = scale * ints; clears all denominators."""
        den_lcm = 1
        for c in self.coeffs:
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        ints = [c.numerator * (den_lcm // c.denominator) for c in self.coeffs]
        return Fraction(1, den_lcm), ints

    def __mul__(self, other):
        # integer convolution with one normalization per output coefficient;
        # much faster than Fraction products term by term
        other = self._as_same(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        s1, a = self._integer_form()
        s2, b = other._integer_form()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        scale = s1 * s2
        return RatPoly(
            [Fraction(v * scale.numerator, scale.denominator) for v in out]
        )

    def rational_content(self) -> Fraction:
        """Signed content c with self = c * primitive.

        The primitive part has integer coefficients with gcd 1 and a positive
        leading coefficient; the content therefore carries the leading sign.
        Returns 0 for the zero polynomial.
        """
        if self.is_zero:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if self.coeffs[-1] < 0:
            content = -content
        return content

    def primitive_positive(self) -> Tuple[Fraction, "RatPoly"]:
        """Split into (content, primitive part with positive leading coefficient)."""
        if self.is_zero:
            return Fraction(0), self
        content = self.rational_content()
        return content, type(self)([c / content for c in self.coeffs])

    def evaluate_float(self, point: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * point + float(c)
        return acc

    def __str__(self) -> str:
        return format_rat_poly(self)


class GaussPoly(_Polynomial):
    """Univariate polynomial with Gaussian-rational coefficients."""

    __slots__ = ()

    _coerce = staticmethod(GaussianRational.coerce)

    @classmethod
    def _field_zero(cls):
        return GaussianRational()

    @classmethod
    def _field_one(cls):
        return GaussianRational(1)

    @classmethod
    def from_parts(cls, real: RatPoly, imag: RatPoly) -> "GaussPoly":
        n = max(len(real.coeffs), len(imag.coeffs))
        return cls(
            [
                GaussianRational(real.coefficient(k), imag.coefficient(k))
                for k in range(n)
            ]
        )

    @classmethod
    def from_real(cls, real: RatPoly) -> "GaussPoly":
        return cls([GaussianRational(c) for c in real.coeffs])

    def _as_same(self, other):
        if isinstance(other, RatPoly):
            return GaussPoly.from_real(other)
        return super()._as_same(other)

    def conjugate(self) -> "GaussPoly":
        return GaussPoly([c.conjugate() for c in self.coeffs])

    def real_part(self) -> RatPoly:
        return RatPoly([c.re for c in self.coeffs])

    def imag_part(self) -> RatPoly:
        return RatPoly([c.im for c in self.coeffs])

    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def norm_squared(self) -> RatPoly:
        """The rational polynomial self * conj(self) = Re(self)^2 + Im(self)^2."""
        re, im = self.real_part(), self.imag_part()
        return re * re + im * im

    def __str__(self) -> str:
        return format_gauss_poly(self)


# ---------------------------------------------------------------------------
# gcd, square-free decomposition, perfect squares, Wronskian
# ---------------------------------------------------------------------------


def poly_gcd(a, b):
    """Monic gcd over the coefficient field (Euclid with monic remainders)."""
    if a.is_zero and b.is_zero:
        raise DegenerateInputError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        r = a % b
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic()


def squarefree_decompose(p: RatPoly) -> Tuple[Fraction, List[Tuple[RatPoly, int]]]:
    """Yun decomposition p = content * prod(f_i ** m_i).

    The factors are monic, square-free and pairwise coprime, so the content
    equals the leading coefficient of p.
    """
    if p.is_zero:
        raise DegenerateInputError("cannot decompose the zero polynomial")
    content = p.leading_coefficient
    f = p.monic()
    if f.degree == 0:
        return content, []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return content, [(f, 1)]
    factors: List[Tuple[RatPoly, int]] = []
    w = f.exact_div(g)
    y = f.derivative().exact_div(g)
    z = y - w.derivative()
    mult = 1
    while w.degree is not None and w.degree > 0:
        a = poly_gcd(w, z)
        if a.degree is not None and a.degree > 0:
            factors.append((a, mult))
        w = w.exact_div(a)
        y = z.exact_div(a)
        z = y - w.derivative()
        mult += 1
    return content, factors


class ScaledSqrt:
    """An exact real polynomial of the form sqrt(scale) * body.

    ``scale`` is a positive rational and ``body`` is primitive with positive
    leading coefficient, which makes the representation unique; the body is
    the zero polynomial (with scale 1) only for the zero value.  This is how
    square roots of even-multiplicity rational polynomials — curve speeds and
    cross-product norms — stay inside exact arithmetic even when the scale is
    not a perfect rational square.
    """

    __slots__ = ("scale", "body")

    def __init__(self, scale: RatLike, body: RatPoly):
        scale = as_fraction(scale)
        if body.is_zero:
            self.scale = Fraction(1)
            self.body = body
            return
        content, primitive = body.primitive_positive()
        scale = scale * content * content
        if scale <= 0:
            raise DegenerateInputError("ScaledSqrt scale must be positive")
        self.scale = scale
        self.body = primitive

    @classmethod
    def zero(cls) -> "ScaledSqrt":
        return cls(1, RatPoly())

    @classmethod
    def of_rational(cls, value: RatLike) -> "ScaledSqrt":
        value = as_fraction(value)
        if value < 0:
            raise DegenerateInputError("cannot represent a negative value")
        if not value:
            return cls.zero()
        return cls(value * value, RatPoly.one())

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    def squared(self) -> RatPoly:
        return self.scale * (self.body * self.body)

    def as_rat_poly(self) -> Optional[RatPoly]:
        """The exact rational polynomial sqrt(scale)*body, when the root is rational."""
        root = rational_sqrt(self.scale)
        if root is None:
            return None
        return root * self.body

    def evaluate_float(self, point: float) -> float:
        return math.sqrt(float(self.scale)) * self.body.evaluate_float(point)

    def __eq__(self, other) -> bool:
        if isinstance(other, ScaledSqrt):
            return self.scale == other.scale and self.body == other.body
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.scale, self.body))

    def __repr__(self) -> str:
        return f"ScaledSqrt({self.scale!r}, {self.body!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        exact = self.as_rat_poly()
        if exact is not None:
            return format_rat_poly(exact)
        return f"sqrt({self.scale})*({format_rat_poly(self.body)})"


def perfect_square_root(p: RatPoly) -> Optional[ScaledSqrt]:
    """Square root of p as a real polynomial, or None if there is none.

    p is the square of a real polynomial exactly when every square-free
    multiplicity is even and the content is positive; the root is then
    sqrt(content) times the product of half-multiplicity factors.
    """
    if p.is_zero:
        return ScaledSqrt.zero()
    content, factors = squarefree_decompose(p)
    if content <= 0:
        return None
    if any(mult % 2 for _, mult in factors):
        return None
    body = RatPoly.one()
    for factor, mult in factors:
        body = body * factor ** (mult // 2)
    return ScaledSqrt(content, body)


def wronskian(z1, z2):
    """z1' * z2 - z1 * z2' (degree at most deg z1 + deg z2 - 1)."""
    return z1.derivative() * z2 - z1 * z2.derivative()


class RationalFunction:
    """Reduced quotient of two rational polynomials.

    The denominator is primitive with positive leading coefficient and
    coprime to the numerator, so equal values compare equal structurally and
    constancy is a denominator-degree check rather than a sampling heuristic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly, den: RatPoly):
        if den.is_zero:
            raise DegenerateInputError("rational function with zero denominator")
        if num.is_zero:
            self.num = RatPoly()
            self.den = RatPoly.one()
            return
        g = poly_gcd(num, den)
        if g.degree:
            num = num.exact_div(g)
            den = den.exact_div(g)
        content, primitive = den.primitive_positive()
        self.num = RatPoly([c / content for c in num.coeffs])
        self.den = primitive

    @classmethod
    def from_poly(cls, p: RatPoly) -> "RationalFunction":
        return cls(p, RatPoly.one())

    @classmethod
    def constant(cls, value: RatLike) -> "RationalFunction":
        return cls(RatPoly([value]), RatPoly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DegenerateInputError(f"{self!s} is not constant")
        if self.num.is_zero:
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def evaluate(self, point: RatLike) -> Fraction:
        point = as_fraction(point)
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError(f"pole at t = {point}")
        return self.num.evaluate(point) / d

    def __add__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other) -> bool:
        other = _as_rational_function(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == RatPoly.one():
            return format_rat_poly(self.num)
        return f"({format_rat_poly(self.num)}) / ({format_rat_poly(self.den)})"


def _as_rational_function(value) -> Optional[RationalFunction]:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, RatPoly):
        return RationalFunction.from_poly(value)
    if isinstance(value, (Fraction, int)):
        return RationalFunction.constant(value)
    return None


# ---------------------------------------------------------------------------
# canonical rendering (descending powers, explicit signs, rationals as p/q)
# ---------------------------------------------------------------------------


def _power_str(k: int, var: str) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def format_rat_poly(p: RatPoly, var: str = "t") -> str:
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        power = _power_str(k, var)
        if not power:
            body = str(mag)
        elif mag == 1:
            body = power
        elif mag.denominator == 1:
            body = f"{mag}{power}"
        else:
            body = f"({mag}){power}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def format_gauss_poly(p: GaussPoly, var: str = "t") -> str:
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        power = _power_str(k, var)
        if c.is_real:
            piece = format_rat_poly(RatPoly([Fraction(0)] * k + [c.re]), var)
            rendered, negative = (piece[1:], True) if piece.startswith("-") else (piece, False)
        elif not c.re:
            mag = _format_imaginary(abs(c.im))
            rendered = f"{mag}{power}" if power else mag
            negative = c.im < 0
        else:
            rendered = f"({c!s}){power}" if power else f"({c!s})"
            negative = False
        if not parts:
            parts.append(f"-{rendered}" if negative else rendered)
        else:
            parts.append(f" - {rendered}" if negative else f" + {rendered}")
    return "".join(parts)
