"""Shared test utilities: even-element comparison and random meromorphic
function generation with planted pole structure."""

from __future__ import annotations

import random

from dxdy.algebra import EvenElement, even
from dxdy.functions import MeromorphicFunction, Pole
from dxdy.polynomials import ONE_POLY, Polynomial, Z_POLY


def even_close(a: EvenElement, b: EvenElement, rel: float = 0.0,
               abs_tol: float = 0.0) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b)) + abs_tol


def poly_from_roots(pairs: list[tuple[EvenElement, int]]) -> Polynomial:
    """Monic polynomial with the given (root, multiplicity) structure."""
    p = ONE_POLY
    for root, mult in pairs:
        factor = Z_POLY - Polynomial.constant(root)
        for _ in range(mult):
            p = p * factor
    return p


def random_even(rng: random.Random, span: float = 2.0) -> EvenElement:
    return even(rng.uniform(-span, span), rng.uniform(-span, span))


def random_planted_rational(rng: random.Random,
                            max_poles: int = 2,
                            max_order: int = 4,
                            min_separation: float = 0.9,
                            span: float = 2.0,
                            min_axis_distance: float = 0.0,
                            min_residue_v: float = 0.0,
                            ) -> tuple[MeromorphicFunction, list[Pole]]:
    """Random rational function n/d with well-separated planted poles.

    The numerator is resampled until it is comfortably nonzero at every
    pole and the residues are not accidentally tiny, so relative
    comparisons across residue routes stay meaningful; ``min_residue_v``
    additionally floors the dxdy-component when a test compares against a
    contour value proportional to it.
    """
    from dxdy.residues import residue

    while True:
        n_poles = rng.randint(1, max_poles)
        locations: list[EvenElement] = []
        attempts = 0
        while len(locations) < n_poles and attempts < 200:
            attempts += 1
            cand = random_even(rng, span)
            if abs(cand.v) < min_axis_distance:
                continue
            if all(abs(cand - o) > min_separation for o in locations):
                locations.append(cand)
        if len(locations) < n_poles:
            continue
        orders = [rng.randint(1, max_order) for _ in locations]
        den = poly_from_roots(list(zip(locations, orders)))
        num = Polynomial.from_coeffs(
            [random_even(rng) for _ in range(max(1, den.degree))])
        if num.is_zero():
            continue
        scale = num.max_coeff()
        if any(abs(num(loc)) < 1e-2 * scale for loc in locations):
            continue
        f = MeromorphicFunction(num, den)
        poles = [Pole(loc, order) for loc, order in zip(locations, orders)]
        residues = [residue(f, p) for p in poles]
        if any(abs(r) < 1e-3 for r in residues):
            continue
        if min_residue_v and any(abs(r.v) < min_residue_v for r in residues):
            continue
        return f, sorted(poles, key=lambda p: (p.location.u, p.location.v))
