"""Shared fixtures: multiset metrics, random profile families, oracles."""

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import linear_sum_assignment

from specwave import Grid, damping


def multiset_distance(w, z) -> float:
    """Largest pairing error between two equal-size eigenvalue multisets.

    Uses the optimal assignment, so reordering and degenerate clusters do
    not inflate the distance.
    """
    w = np.asarray(w, dtype=complex).ravel()
    z = np.asarray(z, dtype=complex).ravel()
    if w.shape != z.shape:
        raise ValueError("multisets must have equal size")
    cost = np.abs(w[:, None] - z[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def pencil_charpoly_roots(values, g: Grid) -> np.ndarray:
    """Spectrum of the quadratic pencil via the determinant polynomial.

    Expands det(mu^2 I + mu diag(a) - Lap) with the tridiagonal three-term
    determinant recurrence in exact polynomial arithmetic, then calls the
    scalar polynomial root finder. Independent of the companion eigensolve,
    so it serves as an oracle for small grids.
    """
    values = np.asarray(values, dtype=complex)
    h2 = g.spacing**2
    off_product = 1.0 / h2**2
    prev = np.array([1.0 + 0.0j])  # D_0
    prev2 = None
    for a_k in values:
        q = np.array([2.0 / h2, a_k, 1.0], dtype=complex)
        term = npoly.polymul(q, prev)
        if prev2 is not None:
            term = npoly.polysub(term, off_product * prev2)
        prev2, prev = prev, term
    return np.roots(prev[::-1])


def random_attractive_profile(rng: np.random.Generator, index: int):
    """One member of the frozen verification family (see tests using it).

    Alternates step and gaussian shapes with amplitude in [-3, -0.2] and
    width in [0.3, 2.0]; the rng state makes the family reproducible.
    """
    amp = float(rng.uniform(-3.0, -0.2))
    width = float(rng.uniform(0.3, 2.0))
    if index % 2 == 0:
        return damping.step(amp, width)
    return damping.gaussian(amp, width)


def random_profile_values(rng: np.random.Generator, n: int, kind: str) -> np.ndarray:
    """Raw damping samples for companion-oracle tests."""
    if kind == "complex":
        return rng.normal(size=n) + 1j * rng.normal(size=n)
    if kind == "real":
        return rng.normal(size=n)
    if kind == "imag":
        return 1j * rng.normal(size=n)
    if kind == "nonneg":
        return rng.uniform(0.0, 2.0, size=n)
    raise ValueError(kind)


_ACCEPTANCE = []


def record_criterion(number: int, description: str, passed: bool) -> None:
    _ACCEPTANCE.append((number, description, bool(passed)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} - {description}")
