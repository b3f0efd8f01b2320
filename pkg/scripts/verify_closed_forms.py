#!/usr/bin/env python3
"""Sweep every closed form against its exact solver and tabulate agreement.

Exits nonzero when any point mismatches, mirroring `bdom verify`.  On this
corpus the cycle and domination-number rows agree everywhere; the torus
upper-domination rows do not, and the table makes the gap visible.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bdom import formulas
from bdom.errors import CapabilityError, InputError
from bdom.graphs import gen_cycle, gen_torus
from bdom.solvers import solve_gamma, solve_gamma_b, solve_upper_gamma, solve_upper_gamma_b

SWEEPS = [
    ("cycle", "Gamma_b", [(None, n) for n in range(3, 13)], solve_upper_gamma_b),
    ("torus", "gamma", [(3, 4), (3, 5), (4, 4), (4, 5), (5, 5)], solve_gamma),
    ("torus", "gamma_b", [(3, 3), (3, 4), (4, 4)], solve_gamma_b),
    ("torus", "Gamma", [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5)], solve_upper_gamma),
    ("torus", "Gamma_b", [(3, 3), (3, 4), (4, 4)], solve_upper_gamma_b),
]


def main() -> int:
    mismatches = 0
    print(f"{'family':8s} {'point':8s} {'invariant':10s} {'closed':>7s} {'exact':>6s}  match")
    for family, which, points, solver in SWEEPS:
        for m, n in points:
            g = gen_cycle(n) if family == "cycle" else gen_torus(m, n)
            try:
                closed = formulas.evaluate(family, which, m, n).value
            except (InputError, CapabilityError):
                closed = "n/a"
            started = time.monotonic()
            exact = solver(g).value
            elapsed = time.monotonic() - started
            match = "" if closed == "n/a" else ("yes" if closed == exact else "NO")
            mismatches += match == "NO"
            point = f"{n}" if m is None else f"{m}x{n}"
            print(f"{family:8s} {point:8s} {which:10s} {closed!s:>7s} {exact:>6d}  {match:3s} ({elapsed:.1f}s)")
    print(f"\nmismatches: {mismatches}")
    return 3 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
