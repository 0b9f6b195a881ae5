#!/usr/bin/env python3
"""Run the built-in regression checks and print one line per check.

Equivalent to `dxdy check`; kept as a script so the reference values can be
re-verified without the console entry point installed.
"""

import sys

from dxdy.checks import run_all


def main() -> int:
    results = run_all()
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}")
        print(f"      {result.detail}")
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
