"""Bound-state inequalities for one-dimensional Schroedinger wells.

The real-eigenvalue bounds for the damped wave operator reduce to
spectral inequalities for -d^2/dx^2 + V with an attractive well V. The
library checks three of them numerically:

  * Riesz sum:  sum |lambda_n|^gamma  <=  L * integral V_-^(gamma+1/2),
    with the sharp constant L = 1/2 at gamma = 1/2 (Hundertmark,
    Lieb and Thomas) and the classical constant for gamma > 1/2;
  * trace formula floor:  sum sqrt|lambda_n|  >=  -(1/4) integral V;
  * Bargmann count:  #bound states  <=  1 + integral |x| |V(x)|.

The unit square well V = -1 on [-1, 1] is a textbook oracle: its ground
state solves k tan k = sqrt(1 - k^2), equivalently cos k = k, so
lambda_1 = k^2 - 1 = -0.45375... Run with

    python3 demos/inequality_suite.py
"""

import numpy as np

from specwave import Grid, lt_sum, negative_eigenvalues, step, verify_inequalities


def main():
    g = Grid(30.0, 3000)
    well = step(-1.0, 1.0)

    s = negative_eigenvalues(well, g)
    k = 0.739085133215161  # fixed point of cos, solves the matching condition
    print("unit square well V = -1 on [-1, 1]")
    print(f"  bound states found: {s.count}")
    print(f"  ground state     : {s.eigenvalues[0]:+.9f}")
    print(f"  analytic value   : {k * k - 1.0:+.9f}  (from cos k = k)")
    print(f"  sqrt-sum         : {lt_sum(s, 0.5):.9f}")

    print("\ninequality suite at gamma = 1/2:")
    report = verify_inequalities(well, 0.5, g)
    for check in report.checks:
        print(
            f"  {check.name:20s} lhs={check.lhs:10.6f} rhs={check.rhs:10.6f} "
            f"margin={check.margin:+.6f} -> {'pass' if check.passed else 'FAIL'}"
        )

    print("\nsame well, gamma = 3/2 (classical constant 3/16):")
    for check in verify_inequalities(well, 1.5, g).checks:
        print(
            f"  {check.name:20s} lhs={check.lhs:10.6f} rhs={check.rhs:10.6f} "
            f"-> {'pass' if check.passed else 'FAIL'}"
        )

    print("\nrandomized stress test (20 attractive wells):")
    rng = np.random.default_rng(42)
    worst_margin = np.inf
    for index in range(20):
        amp = float(rng.uniform(-3.0, -0.2))
        width = float(rng.uniform(0.3, 2.0))
        if index % 2 == 0:
            profile = step(amp, width)
        else:
            from specwave import gaussian

            profile = gaussian(amp, width)
        rep = verify_inequalities(profile, 0.5, g)
        worst_margin = min(worst_margin, min(c.margin for c in rep.checks))
        status = "pass" if rep.all_pass else "FAIL"
        print(
            f"  {profile.kind:8s} amp={amp:+.3f} width={width:.3f} "
            f"states={int([c for c in rep.checks if c.name == 'bargmann_count'][0].lhs)}"
            f" -> {status}"
        )
    print(f"\nworst margin across the family: {worst_margin:+.6f} (>= 0 means safe)")


if __name__ == "__main__":
    main()
