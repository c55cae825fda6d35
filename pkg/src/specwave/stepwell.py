"""Analytic spectral data for the attractive step damping.

For a step profile a(x) = a on (-b, b) with a < 0 < b, eigenvalues of the
damped wave pencil on the real interval (0, -a) are roots of a secular
function built from matching interior oscillation to exterior decay.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import damping


class DomainError(ValueError):
    """Secular function evaluated outside its real domain."""


class RootSearchError(RuntimeError):
    """Sign-change scan failed although a root is guaranteed."""


class ConvergenceError(RuntimeError):
    """Bisection stopped before meeting both stopping criteria."""


@dataclass(frozen=True)
class StepDamping:
    """Attractive step: amplitude a < 0 on (-b, b)."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a < 0.0 < self.b):
            raise DomainError("need a < 0 < b")

    @property
    def c(self) -> float:
        """Half the L1 norm, -a*b; a real root exists exactly when c > 1."""
        return -self.a * self.b

    @property
    def l1(self) -> float:
        return 2.0 * self.b * (-self.a)

    def to_profile(self) -> damping.DampingProfile:
        return damping.step(self.a, self.b)


@dataclass(frozen=True)
class SecularRoot:
    mu_star: float
    residual: float
    bracket: Tuple[float, float]


def _kappa_sq(mu, w: StepDamping):
    return -(mu * w.a + mu * mu)


def secular_F(mu, w: StepDamping):
    """Secular function on the open interval (0, -a).

    The endpoints are excluded: F carries a removable kappa factor there,
    so callers wanting closed-interval evaluation should use secular_G.
    """
    mu = np.asarray(mu, dtype=float)
    if np.any(mu <= 0.0) or np.any(mu >= -w.a):
        raise DomainError("mu must lie strictly inside (0, -a)")
    s = _kappa_sq(mu, w)
    kappa = np.sqrt(s)
    return 2.0 * kappa * np.cos(2.0 * w.b * kappa) + (w.a + 2.0 * mu) * np.sin(
        2.0 * w.b * kappa
    )


def secular_G(mu, w: StepDamping):
    """Regularized secular function kappa * F, analytic in mu.

    Vanishes at both endpoints mu = 0 and mu = -a; interior sign changes
    bracket eigenvalues.
    """
    mu = np.asarray(mu, dtype=float)
    s = _kappa_sq(mu, w)
    if np.any(s < 0.0):
        raise DomainError("mu outside [0, -a]")
    kappa = np.sqrt(s)
    phase = 2.0 * w.b * kappa
    return 2.0 * s * np.cos(phase) + (w.a + 2.0 * mu) * kappa * np.sin(phase)


def secular_F_complex(mu, w: StepDamping):
    """Analytic continuation of secular_F to complex mu.

    F is odd in the square root, so the branch choice moves only the sign;
    zeros are branch independent.
    """
    mu = np.asarray(mu, dtype=complex)
    kappa = np.sqrt(_kappa_sq(mu, w) + 0.0j)
    return 2.0 * kappa * np.cos(2.0 * w.b * kappa) + (w.a + 2.0 * mu) * np.sin(
        2.0 * w.b * kappa
    )


def endpoint_slopes(w: StepDamping) -> Tuple[float, float]:
    """d(secular_G)/d(mu) at mu = 0 and mu = -a."""
    return 2.0 * w.a * (-1.0 + w.c), 2.0 * w.a * (1.0 + w.c)


def _brackets(w: StepDamping, n: int) -> List[Tuple[float, float]]:
    mus = np.linspace(0.0, -w.a, n + 2)[1:-1]
    g = secular_G(mus, w)
    out = []
    for i in range(len(mus) - 1):
        if g[i] == 0.0:
            out.append((mus[i], mus[i]))
        elif g[i] * g[i + 1] < 0.0:
            out.append((float(mus[i]), float(mus[i + 1])))
    return out


def _bisect(w: StepDamping, lo: float, hi: float, tol: float) -> SecularRoot:
    """Bisect until the bracket is narrow AND the residual is small.

    Both criteria must hold; 200 halvings without that is reported as a
    convergence failure rather than returning a doubtful root.
    """
    if lo == hi:
        return SecularRoot(lo, float(abs(secular_G(lo, w))), (lo, hi))
    glo = float(secular_G(lo, w))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = float(secular_G(mid, w))
        if hi - lo <= tol and abs(gm) < tol:
            return SecularRoot(mid, abs(gm), (lo, hi))
        if gm == 0.0:
            return SecularRoot(mid, 0.0, (mid, mid))
        if glo * gm < 0.0:
            hi = mid
        else:
            lo, glo = mid, gm
    raise ConvergenceError(
        f"bisection on ({lo}, {hi}) did not reach width and residual <= {tol}"
    )


def scan_real_roots(
    w: StepDamping, scan_points: int = 1000, tol: float = 1e-12
) -> List[SecularRoot]:
    """All real eigenvalues in (0, -a), in increasing order."""
    if scan_points < 100:
        raise ValueError("scan_points must be at least 100")
    brackets = []
    for factor in (1, 2, 4, 8, 16, 32, 64):
        brackets = _brackets(w, scan_points * factor)
        if brackets:
            break
    if not brackets:
        if w.c > 1.0:
            raise RootSearchError(
                "no sign change found although c > 1; raise scan_points"
            )
        return []
    return [_bisect(w, lo, hi, tol) for lo, hi in brackets]


def find_real_eigenvalue(
    w: StepDamping, scan_points: int = 1000, tol: float = 1e-12
) -> Optional[SecularRoot]:
    """Smallest real eigenvalue in (0, -a), or None when c <= 1."""
    roots = scan_real_roots(w, scan_points=scan_points, tol=tol)
    return roots[0] if roots else None


def delta_pencil_classify(alpha) -> str:
    """Point spectrum of the delta-damping pencil at coupling alpha.

    The comparison is exact on purpose: any coupling other than +/-2 leaves
    the point spectrum empty.
    """
    if alpha == -2:
        return "right_half_plane"
    if alpha == 2:
        return "left_half_plane"
    return "no_solution"
