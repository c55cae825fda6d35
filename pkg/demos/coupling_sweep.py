"""Coupling windows: where rescaled dampings must have eigenvalues.

For a real damping with strongly negative mean, two bounds cooperate:

  * every real eigenvalue mu satisfies |mu| >= 1 / integral(|x| |a|),
  * for each small real mu there is exactly one coupling alpha in an
    explicit interval such that alpha * a produces it.

For the deep step a = -3 on [-1, 1] both come out in closed form: the
floor is 1/3 and the coupling window is [1/3, 2/3]. The script sweeps
alpha across and beyond the window, solves the discretized pencil for
each rescaled damping, and reports which couplings actually produce a
genuine positive eigenvalue. It closes with the delta-model pencil,
whose trichotomy in the coupling is exact. Run with

    python3 demos/coupling_sweep.py
"""

import numpy as np

from specwave import (
    Grid,
    coupling_interval,
    delta_pencil_classify,
    modulus_lower_bound,
    step,
    sweep_alpha,
)


def main():
    a = step(-3.0, 1.0)
    floor = modulus_lower_bound(a)
    window = coupling_interval(a)
    lo, hi = window.params["lo"], window.params["hi"]
    print(f"eigenvalue floor: |mu| >= {floor.params['bound']} (exactly 1/3)")
    print(f"coupling window : alpha in [{lo}, {hi}] (exactly [1/3, 2/3])")

    g = Grid(30.0, 1199)
    alphas = np.round(np.arange(0.25, 1.01, 0.05), 10)
    print(f"\nsweep on [-30, 30] with {g.interior_count} nodes:")
    print(f"{'alpha':>7} {'in window':>10} {'c = -b*alpha*amp':>17} genuine real mu")
    for row in sweep_alpha(a, alphas, g):
        alpha = row["alpha"]
        inside = "yes" if lo <= alpha <= hi else "no"
        c = 3.0 * alpha
        mus = ", ".join(f"{m:.4f}" for m in row["genuine_real"]) or "-"
        print(f"{alpha:>7.2f} {inside:>10} {c:>17.2f} {mus}")
    print(
        "\nReading the table: genuine real eigenvalues appear once c = -b * "
        "alpha * amp\nexceeds 1 and grow with alpha; small roots near the "
        "window's lower edge sit\nbelow the classifier's spectral-displacement "
        "threshold on this grid, which\nis exactly why the window, not a "
        "single alpha, is the guaranteed object."
    )

    print("\ndelta-model pencil (point damping alpha * delta):")
    for alpha in (-2.0, -0.5, 0.7, 2.0, 3.14):
        print(f"  alpha = {alpha:+5.2f}: {delta_pencil_classify(alpha)}")


if __name__ == "__main__":
    main()
