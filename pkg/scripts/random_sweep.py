#!/usr/bin/env python3
"""Differential sweep: random rational integrands vs direct quadrature.

Generates random rational functions with planted pole structure, integrates
them around circles through the residue route, and checks every value
against the independent trapezoid oracle.  Prints a summary table and the
worst observed discrepancies.

    python scripts/random_sweep.py --count 200 --seed 7 --tol 1e-7
"""

import argparse
import random
import sys

from dxdy.algebra import even
from dxdy.contours import CircleContour
from dxdy.functions import MeromorphicFunction, Pole
from dxdy.oracle import differential_check
from dxdy.polynomials import ONE_POLY, Polynomial, Z_POLY


def planted_rational(rng: random.Random, max_poles: int, max_order: int):
    while True:
        count = rng.randint(1, max_poles)
        locations = []
        while len(locations) < count:
            cand = even(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if all(abs(cand - o) > 0.9 for o in locations):
                locations.append(cand)
        den = ONE_POLY
        orders = []
        for loc in locations:
            order = rng.randint(1, max_order)
            orders.append(order)
            factor = Z_POLY - Polynomial.constant(loc)
            for _ in range(order):
                den = den * factor
        num = Polynomial.from_coeffs(
            [even(rng.uniform(-2, 2), rng.uniform(-2, 2))
             for _ in range(max(1, den.degree))])
        if num.is_zero():
            continue
        if any(abs(num(loc)) < 1e-2 * num.max_coeff() for loc in locations):
            continue
        poles = [Pole(loc, order) for loc, order in zip(locations, orders)]
        return MeromorphicFunction(num, den), poles


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol", type=float, default=1e-7)
    parser.add_argument("--max-poles", type=int, default=3)
    parser.add_argument("--max-order", type=int, default=4)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    failures = 0
    worst = 0.0
    worst_case = None
    for index in range(args.count):
        f, poles = planted_rational(rng, args.max_poles, args.max_order)
        pole = poles[rng.randrange(len(poles))]
        others = [p.location for p in poles if p is not pole]
        nearest = min([abs(pole.location - o) for o in others], default=2.0)
        contour = CircleContour(pole.location, 0.4 * min(nearest, 2.0))
        report = differential_check(f, contour, tol=args.tol)
        spread = report.difference / (1.0 + abs(report.symbolic))
        if spread > worst:
            worst = spread
            worst_case = (index, report)
        if not report.passed:
            failures += 1
            print(f"FAIL case {index}: residue route {report.symbolic!r}, "
                  f"oracle {report.quadrature!r}, diff {report.difference:g}")
    print(f"{args.count - failures}/{args.count} cases within "
          f"{args.tol:g} (scaled)")
    if worst_case is not None:
        index, report = worst_case
        print(f"worst case {index}: diff {report.difference:.3e} on value "
              f"{report.symbolic:.6g} (defect diff "
              f"{report.defect_difference:.3e})")
    print(f"worst scaled discrepancy: {worst:.3e}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
