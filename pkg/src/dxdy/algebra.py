"""Clifford algebra of differential forms on the real plane.

The algebra is generated by the basis 1-forms dx, dy with

    dx*dx = dy*dy = 1,      dx*dy = -dy*dx,      (dxdy)*(dxdy) = -1,

so a general element (a Multivector) is s + a*dx + b*dy + p*dxdy.  The even
elements u + v*dxdy form a commutative subalgebra in which dxdy behaves like
the imaginary unit; the position form z = x + y*dxdy is the stand-in for a
complex variable throughout the package.

Scalars are IEEE doubles.  Products whose structure constants are only 0/±1
(basis products, conjugation swaps) are bit-exact; everything else carries
ordinary floating-point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class GradeError(ValueError):
    """Raised when an operation requires a pure grade-1 input."""


@dataclass(frozen=True)
class Multivector:
    """Element s + a*dx + b*dy + p*dxdy of the full plane algebra."""

    s: float = 0.0
    a: float = 0.0
    b: float = 0.0
    p: float = 0.0

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.s + other.s, self.a + other.a,
                           self.b + other.b, self.p + other.p)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.s - other.s, self.a - other.a,
                           self.b - other.b, self.p - other.p)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.s, -self.a, -self.b, -self.p)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_product(self, other)
        return Multivector(self.s * other, self.a * other,
                           self.b * other, self.p * other)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return mv_product(other, self)
        return Multivector(other * self.s, other * self.a,
                           other * self.b, other * self.p)

    def is_grade_one(self) -> bool:
        return self.s == 0.0 and self.p == 0.0

    def even_part(self) -> "EvenElement":
        return EvenElement(self.s, self.p)


ONE = Multivector(s=1.0)
DX = Multivector(a=1.0)
DY = Multivector(b=1.0)
DXDY = Multivector(p=1.0)


def mv_product(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product of two multivectors."""
    return Multivector(
        s=x.s * y.s + x.a * y.a + x.b * y.b - x.p * y.p,
        a=x.s * y.a + x.a * y.s - x.b * y.p + x.p * y.b,
        b=x.s * y.b + x.b * y.s + x.a * y.p - x.p * y.a,
        p=x.s * y.p + x.p * y.s + x.a * y.b - x.b * y.a,
    )


def one_form(k: float, g: float) -> Multivector:
    """The 1-form k*dx + g*dy."""
    return Multivector(a=k, b=g)


def dot_one_forms(x: Multivector, y: Multivector) -> float:
    """Symmetric product (xy + yx)/2 of two 1-forms, as a real number.

    Equals the metric inner product of the coefficient pairs.  Inputs with a
    scalar or dxdy component are rejected.
    """
    if not x.is_grade_one() or not y.is_grade_one():
        raise GradeError("dot_one_forms requires pure grade-1 arguments")
    return x.a * y.a + x.b * y.b


@dataclass(frozen=True)
class EvenElement:
    """Element u + v*dxdy of the commutative even subalgebra."""

    u: float
    v: float

    def __add__(self, other: "EvenElement") -> "EvenElement":
        return EvenElement(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "EvenElement") -> "EvenElement":
        return EvenElement(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "EvenElement":
        return EvenElement(-self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, EvenElement):
            return even_mul(self, other)
        return EvenElement(self.u * other, self.v * other)

    def __rmul__(self, other):
        if isinstance(other, EvenElement):
            return even_mul(other, self)
        return EvenElement(other * self.u, other * self.v)

    def __truediv__(self, other):
        if isinstance(other, EvenElement):
            return even_mul(self, even_inv(other))
        return EvenElement(self.u / other, self.v / other)

    def __abs__(self) -> float:
        return math.hypot(self.u, self.v)

    def conj(self) -> "EvenElement":
        return EvenElement(self.u, -self.v)

    def norm_sq(self) -> float:
        return self.u * self.u + self.v * self.v

    def is_zero(self) -> bool:
        return self.u == 0.0 and self.v == 0.0

    def to_multivector(self) -> Multivector:
        return Multivector(s=self.u, p=self.v)


E_ZERO = EvenElement(0.0, 0.0)
E_ONE = EvenElement(1.0, 0.0)
E_DXDY = EvenElement(0.0, 1.0)


def even(u: float, v: float = 0.0) -> EvenElement:
    return EvenElement(float(u), float(v))


def even_mul(x: EvenElement, y: EvenElement) -> EvenElement:
    return EvenElement(x.u * y.u - x.v * y.v, x.u * y.v + x.v * y.u)


def even_inv(x: EvenElement) -> EvenElement:
    """Multiplicative inverse conj(x)/|x|^2."""
    n = x.norm_sq()
    if n == 0.0:
        raise ZeroDivisionError("inverse of the zero even element")
    return EvenElement(x.u / n, -x.v / n)


def even_int_pow(x: EvenElement, m: int) -> EvenElement:
    """x**m for integer m by binary powering; m < 0 inverts first."""
    if m < 0:
        return even_int_pow(even_inv(x), -m)
    result = E_ONE
    base = x
    while m > 0:
        if m & 1:
            result = even_mul(result, base)
        base = even_mul(base, base)
        m >>= 1
    return result


@dataclass(frozen=True)
class PolarForm:
    """Polar pair (rho, phi) with rho >= 0 and phi in (-pi, pi]."""

    rho: float
    phi: float


def to_polar(x: EvenElement) -> PolarForm:
    rho = abs(x)
    if rho == 0.0:
        raise ZeroDivisionError("the zero element has no polar form")
    phi = math.atan2(x.v, x.u)
    if phi == -math.pi:
        phi = math.pi
    return PolarForm(rho, phi)


def from_polar(p: PolarForm) -> EvenElement:
    return EvenElement(p.rho * math.cos(p.phi), p.rho * math.sin(p.phi))


def even_exp(x: EvenElement) -> EvenElement:
    """exp(u + v*dxdy) = e^u (cos v + dxdy sin v)."""
    e = math.exp(x.u)
    return EvenElement(e * math.cos(x.v), e * math.sin(x.v))


def even_sin(x: EvenElement) -> EvenElement:
    return EvenElement(math.sin(x.u) * math.cosh(x.v),
                       math.cos(x.u) * math.sinh(x.v))


def even_cos(x: EvenElement) -> EvenElement:
    return EvenElement(math.cos(x.u) * math.cosh(x.v),
                       -math.sin(x.u) * math.sinh(x.v))


def format_even(x: EvenElement) -> str:
    """Render u + v*dxdy in the package's text notation, full precision."""
    sign = "+" if (x.v >= 0.0 or math.isnan(x.v)) else "-"
    return f"{x.u!r} {sign} {abs(x.v)!r}·dxdy"
