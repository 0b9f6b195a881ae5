"""Meromorphic functions over the even subalgebra.

A function is a rational part (two polynomials with even-element
coefficients, denominator monic, shared roots cancelled) times at most one
entire factor exp/sin/cos(scale*z).  Poles come from denominator roots; a
simple zero of a sin/cos factor sitting on a denominator root lowers the
pole order by one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from . import expressions as ex
from .algebra import (E_DXDY, EvenElement, even, even_cos, even_exp,
                      even_inv, even_mul, even_sin)
from .polynomials import ONE_POLY, Polynomial, Z_POLY, ZERO_POLY
from .roots import RootFindingError, find_roots
from .series import (DEFAULT_WINDOW, LaurentSeries, entire_series,
                     make_series, series_inv, series_mul)

#: a numerator value this small (relative to the numerator scale) at a
#: denominator root counts as a shared root and is cancelled
CANCEL_TOL = 1e-9

#: reported pole locations must satisfy |den(loc)| <= RESIDUAL_TOL * max coeff
RESIDUAL_TOL = 1e-9


class UnsupportedExpressionError(ValueError):
    """Expression falls outside the rational-times-entire-factor model."""


class SingularSampleError(ValueError):
    """A classification sample sits on or too close to a singularity."""


@dataclass(frozen=True)
class EntireFactor:
    kind: str  # 'exp' | 'sin' | 'cos'
    scale: EvenElement

    def __call__(self, z: EvenElement) -> EvenElement:
        w = even_mul(self.scale, z)
        if self.kind == "exp":
            return even_exp(w)
        if self.kind == "sin":
            return even_sin(w)
        return even_cos(w)


@dataclass(frozen=True)
class Pole:
    location: EvenElement
    order: int


@dataclass(frozen=True)
class MeromorphicFunction:
    num: Polynomial
    den: Polynomial
    factor: EntireFactor | None = None

    def __call__(self, z: EvenElement) -> EvenElement:
        value = even_mul(self.num(z), even_inv(self.den(z)))
        if self.factor is not None:
            value = even_mul(value, self.factor(z))
        return value

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def degree_gap(self) -> int:
        """deg(den) - deg(num) of the rational part."""
        return self.den.degree - self.num.degree


def constant_function(c: EvenElement) -> MeromorphicFunction:
    return MeromorphicFunction(Polynomial.constant(c), ONE_POLY)


# ---------------------------------------------------------------------------
# expression -> meromorphic function

@dataclass(frozen=True)
class _Rational:
    num: Polynomial
    den: Polynomial
    factor: EntireFactor | None


def _fold(e: ex.Expr) -> _Rational:
    if isinstance(e, ex.Num):
        return _Rational(Polynomial.constant(even(e.value)), ONE_POLY, None)
    if isinstance(e, ex.Sym):
        if e.name == "z":
            return _Rational(Z_POLY, ONE_POLY, None)
        if e.name == "I":
            return _Rational(Polynomial.constant(E_DXDY), ONE_POLY, None)
        if e.name == "pi":
            return _Rational(Polynomial.constant(even(math.pi)), ONE_POLY, None)
        if e.name == "x":
            raise UnsupportedExpressionError(
                "the symbol x is only accepted for real-line integrands; "
                "use z in contour mode")
        raise UnsupportedExpressionError(f"unbound symbol {e.name!r}")
    if isinstance(e, ex.Neg):
        r = _fold(e.operand)
        return _Rational(-r.num, r.den, r.factor)
    if isinstance(e, ex.BinOp):
        a = _fold(e.left)
        b = _fold(e.right)
        if e.op in "+-":
            if a.factor is not None or b.factor is not None:
                if (a.factor is None or b.factor is None
                        or a.factor != b.factor):
                    raise UnsupportedExpressionError(
                        "sums mixing different entire factors are not "
                        "representable")
            num = a.num * b.den
            other = b.num * a.den
            num = num + other if e.op == "+" else num - other
            return _Rational(num, a.den * b.den, a.factor)
        if e.op == "*":
            if a.factor is not None and b.factor is not None:
                raise UnsupportedExpressionError(
                    "products of two entire factors are not representable")
            return _Rational(a.num * b.num, a.den * b.den,
                             a.factor or b.factor)
        # division
        if b.factor is not None:
            raise UnsupportedExpressionError(
                "an entire factor in a denominator is not meromorphic "
                "in this model")
        if b.num.is_zero():
            raise ZeroDivisionError("division by the zero expression")
        return _Rational(a.num * b.den, a.den * b.num, a.factor)
    if isinstance(e, ex.Pow):
        r = _fold(e.base)
        if r.factor is not None and e.exponent not in (0, 1):
            raise UnsupportedExpressionError(
                "powers of entire factors are not representable")
        if e.exponent == 0:
            return _Rational(ONE_POLY, ONE_POLY, None)
        if e.exponent > 0:
            return _Rational(r.num.int_pow(e.exponent),
                             r.den.int_pow(e.exponent), r.factor)
        if r.num.is_zero():
            raise ZeroDivisionError("negative power of the zero expression")
        m = -e.exponent
        return _Rational(r.den.int_pow(m), r.num.int_pow(m), r.factor)
    if isinstance(e, ex.Call):
        arg = _fold(e.arg)
        if arg.factor is not None:
            raise UnsupportedExpressionError(
                "entire factors cannot be composed")
        scale = _linear_scale(arg)
        return _Rational(ONE_POLY, ONE_POLY, EntireFactor(e.func, scale))
    raise TypeError(f"not an expression node: {e!r}")


def _linear_scale(arg: _Rational) -> EvenElement:
    """The c of an entire-call argument, which must be exactly c*z."""
    if arg.den.degree != 0:
        raise UnsupportedExpressionError(
            "entire factor arguments must be a constant multiple of z")
    num = arg.num
    inv = even_inv(arg.den.coeffs[0])
    if num.degree > 1:
        raise UnsupportedExpressionError(
            "entire factor arguments must be a constant multiple of z")
    if num.degree >= 0 and not num.coeffs[0].is_zero():
        raise UnsupportedExpressionError(
            "entire factor arguments must have no constant term")
    if num.degree < 1:
        return even(0.0)
    return even_mul(num.coeffs[1], inv)


def normalize_rational(num: Polynomial, den: Polynomial
                       ) -> tuple[Polynomial, Polynomial]:
    """Monic denominator, shared roots cancelled."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator polynomial")
    den, lead = den.monic()
    num = num.scale(even_inv(lead))
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.degree >= 1:
        for loc, mult in _roots_of(den):
            cancelled = 0
            while cancelled < mult:
                scale = num.max_coeff()
                if num.degree < 0 or abs(num(loc)) > CANCEL_TOL * scale:
                    break
                num, _ = num.deflate(loc)
                den, _ = den.deflate(loc)
                cancelled += 1
            if num.is_zero():
                return ZERO_POLY, ONE_POLY
    # deflation keeps den monic up to rounding; retighten the lead
    if not den.is_zero() and den.degree >= 0:
        den, lead = den.monic()
        num = num.scale(even_inv(lead))
    return num, den


def to_meromorphic(e: ex.Expr) -> MeromorphicFunction:
    """Normalize a parsed expression into the meromorphic model."""
    r = _fold(e)
    num, den = normalize_rational(r.num, r.den)
    return MeromorphicFunction(num, den, r.factor)


def meromorphic_from_text(text: str, bindings: dict[str, float] | None = None,
                          real_line: bool = False) -> MeromorphicFunction:
    node = ex.parse(text)
    if bindings:
        node = ex.substitute(node, bindings)
    if real_line:
        node = ex.rewrite_x_to_z(node)
    return to_meromorphic(node)


# ---------------------------------------------------------------------------
# poles

def _roots_of(p: Polynomial) -> list[tuple[EvenElement, int]]:
    pairs = find_roots([complex(c.u, c.v) for c in p.coeffs])
    return [(even(loc.real, loc.imag), mult) for loc, mult in pairs]


def _factor_zero_multiplicity(factor: EntireFactor | None,
                              loc: EvenElement) -> int:
    """Zeros of sin/cos factors are simple; exp never vanishes."""
    if factor is None or factor.kind == "exp":
        return 0
    w = even_mul(factor.scale, loc)
    s, c = even_sin(w), even_cos(w)
    value = s if factor.kind == "sin" else c
    other = c if factor.kind == "sin" else s
    return 1 if abs(value) <= 1e-9 * (abs(other) + abs(value)) else 0


def find_poles(f: MeromorphicFunction) -> tuple[Pole, ...]:
    """All denominator roots, with orders reduced by entire-factor zeros."""
    if f.den.degree < 1:
        return ()
    scale = f.den.max_coeff()
    poles = []
    for loc, mult in _roots_of(f.den):
        if abs(f.den(loc)) > RESIDUAL_TOL * scale:
            raise RootFindingError(
                f"root residual too large at {loc}; denominator is "
                f"ill-conditioned")
        order = mult - _factor_zero_multiplicity(f.factor, loc)
        if order >= 1:
            poles.append(Pole(loc, order))
    return tuple(sorted(poles, key=lambda p: (p.location.u, p.location.v)))


# ---------------------------------------------------------------------------
# local expansion

def _poly_series(p: Polynomial, center: EvenElement,
                 length: int) -> LaurentSeries:
    """Exact Taylor expansion of a polynomial, zero-padded to `length`."""
    shifted = list(p.taylor_shift(center))
    shifted += [even(0.0)] * (length - len(shifted))
    return make_series(center, 0, shifted[:length])


def local_expansion(f: MeromorphicFunction, center: EvenElement,
                    window: int = DEFAULT_WINDOW) -> LaurentSeries:
    """Laurent series of f about center covering `window` coefficients."""
    if window < 1:
        raise ValueError("window must be >= 1")
    if f.is_zero():
        return make_series(center, 0, [])
    length = window + f.den.degree + 2
    den_series = _poly_series(f.den, center, length)
    result = series_mul(_poly_series(f.num, center, length),
                        series_inv(den_series))
    if f.factor is not None:
        result = series_mul(
            result, entire_series(f.factor.kind, f.factor.scale, center,
                                  length - 1))
    if result.is_zero():
        return result
    keep = result.coeffs[:window]
    return make_series(center, result.valuation, keep)


# ---------------------------------------------------------------------------
# 1-forms and their classification

class FormClass(enum.Enum):
    NOT_CLOSED = "not_closed"
    CLOSED_ONLY = "closed_only"
    CLOSED_AND_CR = "closed_and_CR"


@dataclass(frozen=True)
class OneForm:
    """alpha = k dx + g dy given by plane-valued component callables."""

    k: Callable[[float, float], float]
    g: Callable[[float, float], float]

    @staticmethod
    def from_function(f: Callable[[EvenElement], EvenElement]) -> "OneForm":
        """The form w dx with w = f(z): k = u-part, g = -v-part."""
        def k(x: float, y: float) -> float:
            return f(even(x, y)).u

        def g(x: float, y: float) -> float:
            return -f(even(x, y)).v

        return OneForm(k, g)

    @staticmethod
    def from_expressions(k_text: str, g_text: str) -> "OneForm":
        """Components given as expressions in x and y (real-valued)."""
        k_node = ex.parse(k_text)
        g_node = ex.parse(g_text)

        def component(node):
            def evaluator(x: float, y: float) -> float:
                return ex.evaluate(node, {"x": even(x), "y": even(y)}).u
            return evaluator

        return OneForm(component(k_node), component(g_node))


def classify_one_form(form: OneForm, samples: Sequence[tuple[float, float]],
                      step: float = 1e-6, tol: float = 1e-5) -> FormClass:
    """Test closedness (k_y = g_x) and the extra CR condition (k_x = -g_y).

    Central differences with the given step; each sample must satisfy the
    conditions within tol scaled by the local derivative magnitude, and every
    sample must agree for the stronger verdicts.
    """
    closed = True
    cauchy_riemann = True
    for x, y in samples:
        try:
            k_x = (form.k(x + step, y) - form.k(x - step, y)) / (2 * step)
            k_y = (form.k(x, y + step) - form.k(x, y - step)) / (2 * step)
            g_x = (form.g(x + step, y) - form.g(x - step, y)) / (2 * step)
            g_y = (form.g(x, y + step) - form.g(x, y - step)) / (2 * step)
        except ZeroDivisionError as err:
            raise SingularSampleError(
                f"sample ({x}, {y}) is too close to a singularity") from err
        derivs = (k_x, k_y, g_x, g_y)
        if not all(math.isfinite(d) for d in derivs):
            raise SingularSampleError(
                f"sample ({x}, {y}) is too close to a singularity")
        local = tol * (1.0 + max(abs(d) for d in derivs))
        if abs(k_y - g_x) > local:
            closed = False
        if abs(k_x + g_y) > local:
            cauchy_riemann = False
    if not closed:
        return FormClass.NOT_CLOSED
    return FormClass.CLOSED_AND_CR if cauchy_riemann else FormClass.CLOSED_ONLY
