"""Exact rational helpers for the numerically hostile corners.

Double-precision coefficients are exact binary rationals, so polynomial
values, Taylor shifts and finite-difference stencils can be computed with no
rounding at all via ``fractions.Fraction``.  That sidesteps two noise floors
that plain float arithmetic cannot beat:

* evaluating a polynomial near a root of multiplicity m loses all digits
  once |z - root| < eps**(1/m), which defeats both Newton polishing of
  multiple roots and high-order difference quotients;
* central differences of order d amplify evaluation noise by h**(-d).

Only the final conversion back to float rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class ExactEven:
    """u + v*dxdy with exact rational components."""

    u: Fraction
    v: Fraction

    @staticmethod
    def from_floats(u: float, v: float = 0.0) -> "ExactEven":
        return ExactEven(Fraction(u), Fraction(v))

    @staticmethod
    def from_complex(z: complex) -> "ExactEven":
        return ExactEven(Fraction(z.real), Fraction(z.imag))

    def to_complex(self) -> complex:
        return complex(float(self.u), float(self.v))

    def __add__(self, other: "ExactEven") -> "ExactEven":
        return ExactEven(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "ExactEven") -> "ExactEven":
        return ExactEven(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "ExactEven":
        return ExactEven(-self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, ExactEven):
            return ExactEven(self.u * other.u - self.v * other.v,
                             self.u * other.v + self.v * other.u)
        return ExactEven(self.u * other, self.v * other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, ExactEven):
            n = other.u * other.u + other.v * other.v
            if n == 0:
                raise ZeroDivisionError("exact division by zero")
            return ExactEven((self.u * other.u + self.v * other.v) / n,
                             (self.v * other.u - self.u * other.v) / n)
        return ExactEven(self.u / other, self.v / other)

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def norm_sq(self) -> Fraction:
        return self.u * self.u + self.v * self.v


EXACT_ZERO = ExactEven(Fraction(0), Fraction(0))
EXACT_ONE = ExactEven(Fraction(1), Fraction(0))


def exact_poly(coeffs_uv: Sequence[tuple[float, float]]) -> list[ExactEven]:
    return [ExactEven.from_floats(u, v) for u, v in coeffs_uv]


def exact_eval(coeffs: Sequence[ExactEven], x: ExactEven) -> ExactEven:
    acc = EXACT_ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def exact_eval_with_derivative(coeffs: Sequence[ExactEven],
                               x: ExactEven) -> tuple[ExactEven, ExactEven]:
    p = EXACT_ZERO
    dp = EXACT_ZERO
    for c in reversed(coeffs):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def exact_deflate(coeffs: Sequence[ExactEven],
                  root: ExactEven) -> list[ExactEven]:
    """Quotient of synthetic division by (z - root); the remainder is dropped.

    Dropping the remainder projects the polynomial onto the nearest one with
    an exact root at ``root`` (to first order), which is the structural
    reading of a clustered multiple root.
    """
    acc = EXACT_ZERO
    out = [EXACT_ZERO] * max(len(coeffs) - 1, 0)
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[k]
        out[k - 1] = acc
    return out


def exact_taylor_shift(coeffs: Sequence[ExactEven],
                       center: ExactEven) -> list[ExactEven]:
    """Exact t_k with p(center + h) = sum t_k h^k, via repeated division."""
    work = list(coeffs)
    out: list[ExactEven] = []
    n = len(work)
    for _ in range(n):
        acc = EXACT_ZERO
        for k in range(len(work) - 1, -1, -1):
            acc = acc * center + work[k]
            work[k] = acc
        out.append(work[0])
        work = work[1:]
    return out


def fd_weights(order: int, nodes: Sequence[Fraction]) -> list[Fraction]:
    """Exact finite-difference weights for the given derivative order.

    Classic one-point-at-a-time interpolation recurrence evaluated at 0 over
    distinct rational nodes; requires len(nodes) > order.
    """
    if len(nodes) <= order:
        raise ValueError("need more nodes than the derivative order")
    n = len(nodes)
    c = [[Fraction(0)] * (order + 1) for _ in range(n)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    c4 = nodes[0]
    for i in range(1, n):
        mn = min(i, order)
        c2 = Fraction(1)
        c5 = c4
        c4 = nodes[i]
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for k in range(mn, 0, -1):
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return [c[i][order] for i in range(n)]


def central_stencil(order: int) -> list[int]:
    """Symmetric integer nodes excluding 0, wide enough for O(h^4) accuracy.

    The center is excluded on purpose: the quantities differenced in this
    package are removable-singularity values that cannot be sampled at the
    expansion point itself.  Exact-rational summation makes the wider
    stencil free of the noise amplification that usually punishes it.
    """
    half = max(2, (order + 2) // 2 + 1)
    return [k for k in range(-half, half + 1) if k != 0]
