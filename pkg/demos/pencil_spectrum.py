"""Discretized spectrum of the damped wave generator, with classification.

The second-order equation u_tt + a(x) u_t = u_xx on a large interval with
Dirichlet ends turns into the quadratic eigenvalue problem

    mu^2 psi + mu a psi - psi'' = 0,

which the library linearizes into a companion matrix of twice the grid
size. Most of its eigenvalues discretize the continuous/boundary spectrum;
the classifier keeps only eigenvalues that are spectrally displaced,
localized away from the box ends, and below the grid's frequency band.

For the deep step a = -3 on [-1, 1] the surviving eigenvalues match the
analytic secular roots of the step model. Run with

    python3 demos/pencil_spectrum.py
"""

import numpy as np
from scipy.optimize import newton

from specwave import (
    Grid,
    StepDamping,
    assemble_companion,
    classify,
    scan_real_roots,
    secular_F_complex,
    solve_spectrum,
    step,
)


def main():
    a = step(-3.0, 1.0)
    g = Grid(20.0, 800)
    print(f"grid: [-{g.half_length}, {g.half_length}] with {g.interior_count} nodes")

    spec = classify(solve_spectrum(assemble_companion(a, g)))
    labels, counts = np.unique(spec.classification, return_counts=True)
    print("classification:", dict(zip(labels.tolist(), counts.tolist())))

    genuine = spec.genuine
    order = np.argsort(np.abs(genuine.imag))
    print("\ngenuine eigenvalues (sorted by |Im|):")
    for mu in genuine[order]:
        print(f"  {mu.real:+.6f} {mu.imag:+.6f}j")

    # The analytic step model provides the exact transcendental equation;
    # each discrete eigenvalue should Newton-polish onto one of its roots.
    w = StepDamping(-3.0, 1.0)
    real_roots = [r.mu_star for r in scan_real_roots(w)]
    print("\nreal secular roots:", [f"{r:.12f}" for r in real_roots])

    print("\ndiscrete eigenvalue -> polished secular root (distance):")
    for mu in genuine[order][: min(len(genuine), 7)]:
        exact = newton(lambda z: secular_F_complex(z, w), complex(mu), tol=1e-13)
        print(
            f"  {mu.real:+.6f}{mu.imag:+.6f}j -> "
            f"{exact.real:+.12f}{exact.imag:+.12f}j  ({abs(mu - exact):.2e})"
        )

    best = min(abs(genuine - real_roots[0]))
    print(f"\nclosest genuine eigenvalue to the real secular root: {best:.2e} away")
    print(f"largest genuine residual ||(mu^2 + mu a - Lap) psi||: "
          f"{spec.residuals[spec.genuine_mask].max():.2e}")


if __name__ == "__main__":
    main()
