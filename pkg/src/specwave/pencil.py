"""Finite-difference companion form of the damped wave pencil.

The second-order problem -psi'' + mu a psi = -mu^2 psi on a Dirichlet grid
is linearized as the 2N x 2N block matrix [[0, I], [Lap, -diag(a)]], whose
eigenvectors stack psi over mu psi.
"""

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from scipy import linalg as sla

from . import damping
from .grid import Grid


class EigensolverError(RuntimeError):
    """Dense eigensolver failed or was fed non-finite data."""


def dirichlet_laplacian(g: Grid) -> np.ndarray:
    """Dense second-difference matrix with Dirichlet ends (negative definite)."""
    n = g.interior_count
    h2 = g.spacing**2
    lap = np.zeros((n, n))
    idx = np.arange(n)
    lap[idx, idx] = -2.0 / h2
    lap[idx[:-1], idx[:-1] + 1] = 1.0 / h2
    lap[idx[:-1] + 1, idx[:-1]] = 1.0 / h2
    return lap


def laplacian_modes(g: Grid) -> np.ndarray:
    """Closed-form eigenvalues of -Lap, ascending."""
    n = g.interior_count
    k = np.arange(1, n + 1)
    return (4.0 / g.spacing**2) * np.sin(k * np.pi / (2.0 * (n + 1))) ** 2


def sine_mode(g: Grid, k: int) -> np.ndarray:
    """Unit-norm eigenvector of -Lap for mode number k (1-based)."""
    n = g.interior_count
    if not 1 <= k <= n:
        raise ValueError("mode number out of range")
    v = np.sin(k * np.pi * np.arange(1, n + 1) / (n + 1))
    return v / np.linalg.norm(v)


@dataclass(frozen=True, eq=False)
class CompanionMatrix:
    grid: Grid
    damping_values: np.ndarray
    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def assemble_companion(a: damping.DampingProfile, g: Grid) -> CompanionMatrix:
    """Build the companion matrix for damping a on grid g.

    Real-valued dampings produce a real matrix so the solver can stay in
    real arithmetic.
    """
    vals = damping.sample(a, g)
    if np.iscomplexobj(vals) and np.all(vals.imag == 0.0):
        vals = vals.real
    vals = vals.astype(complex) if np.iscomplexobj(vals) else vals.astype(float)
    n = g.interior_count
    dtype = complex if np.iscomplexobj(vals) else float
    m = np.zeros((2 * n, 2 * n), dtype=dtype)
    m[:n, n:] = np.eye(n)
    m[n:, :n] = dirichlet_laplacian(g)
    m[n:, n:] = -np.diag(vals)
    return CompanionMatrix(grid=g, damping_values=vals, matrix=m)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues and position-block eigenvectors of one companion solve.

    mu is sorted by (real, imag). psi holds unit-norm position components,
    one column per eigenvalue, with the phase fixed so the largest-modulus
    entry is real and positive. classification is None until classify()
    runs, then holds "genuine", "continuum_artifact", or
    "boundary_artifact" per eigenvalue.
    """

    grid: Grid
    damping_values: np.ndarray
    mu: np.ndarray
    psi: np.ndarray
    residuals: np.ndarray
    lift_defect: np.ndarray
    classification: Optional[np.ndarray] = None

    @property
    def genuine_mask(self) -> np.ndarray:
        if self.classification is None:
            raise ValueError("spectrum has not been classified yet")
        return self.classification == "genuine"

    @property
    def genuine(self) -> np.ndarray:
        return self.mu[self.genuine_mask]


def _pencil_defect(psi: np.ndarray, mu: np.ndarray, vals: np.ndarray, g: Grid):
    """Columnwise -Lap psi + mu a psi + mu^2 psi without forming Lap."""
    h2 = g.spacing**2
    lap = np.zeros_like(psi)
    lap += -2.0 * psi
    lap[1:] += psi[:-1]
    lap[:-1] += psi[1:]
    lap /= h2
    return -lap + (vals[:, None] * psi) * mu[None, :] + psi * (mu * mu)[None, :]


def fix_phase(psi: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-modulus entry is real and positive.

    This pins down the free eigenvector phase, making solves reproducible
    across runs and LAPACK builds.
    """
    cols = np.arange(psi.shape[1])
    lead = psi[np.argmax(np.abs(psi), axis=0), cols]
    if np.iscomplexobj(psi):
        return psi * (np.abs(lead) / lead)[None, :]
    return psi * np.sign(lead)[None, :]


def solve_spectrum(M: CompanionMatrix, overwrite: bool = False) -> Spectrum:
    """All 2N eigenpairs of the companion matrix, with residual diagnostics."""
    if not np.all(np.isfinite(M.matrix)):
        raise EigensolverError("companion matrix has non-finite entries")
    try:
        w, vr = sla.eig(M.matrix, overwrite_a=overwrite, check_finite=False)
    except sla.LinAlgError as exc:
        raise EigensolverError(f"dense eigensolver failed: {exc}") from exc
    order = np.lexsort((w.imag, w.real))
    w = w[order]
    vr = vr[:, order]
    n = M.grid.interior_count
    psi = vr[:n, :]
    norms = np.linalg.norm(psi, axis=0)
    if np.any(norms == 0.0):
        raise EigensolverError("eigenvector with vanishing position block")
    psi = psi / norms
    psi = fix_phase(psi)
    defect = _pencil_defect(psi, w, M.damping_values, M.grid)
    residuals = np.linalg.norm(defect, axis=0)
    full = np.linalg.norm(vr, axis=0)
    lift_defect = np.linalg.norm(vr[n:, :] - vr[:n, :] * w[None, :], axis=0) / full
    return Spectrum(
        grid=M.grid,
        damping_values=M.damping_values,
        mu=w,
        psi=psi,
        residuals=residuals,
        lift_defect=lift_defect,
    )


def pencil_residual(
    mu: complex, psi: np.ndarray, a: damping.DampingProfile, g: Grid
) -> float:
    """Norm of -Lap psi + mu a psi + mu^2 psi over the norm of psi."""
    psi = np.asarray(psi)
    nrm = np.linalg.norm(psi)
    if nrm == 0.0:
        raise ValueError("psi must be nonzero")
    vals = damping.sample(a, g)
    d = _pencil_defect(psi[:, None].astype(complex), np.array([mu]), vals, g)
    return float(np.linalg.norm(d) / nrm)


def lift_eigenvector(psi: np.ndarray, mu: complex) -> np.ndarray:
    """Stack (psi, mu psi), the companion eigenvector for the pencil pair."""
    psi = np.asarray(psi)
    return np.concatenate([psi, mu * psi])


def companion_residual(M: CompanionMatrix, mu: complex, vec: np.ndarray) -> float:
    """Norm of (M - mu) vec over the norm of vec."""
    vec = np.asarray(vec)
    return float(np.linalg.norm(M.matrix @ vec - mu * vec) / np.linalg.norm(vec))


def default_tau_re(g: Grid) -> float:
    """Real-part floor below which eigenvalues count as axis artifacts."""
    return max(5.0 * g.spacing, 10.0 / g.half_length)


def classify(
    s: Spectrum,
    tau_re: Optional[float] = None,
    loc_threshold: float = 0.5,
    nyquist_fraction: float = 0.5,
    outer_fraction: float = 0.2,
) -> Spectrum:
    """Label eigenvalues genuine, continuum_artifact, or boundary_artifact.

    An eigenvalue is genuine when its real part clears tau_re, its
    eigenvector keeps less than loc_threshold of its mass in the outer
    outer_fraction of the box, and its imaginary part stays below
    nyquist_fraction of the grid dispersion ceiling 2/h. Rejected
    eigenvalues with heavy outer mass are boundary_artifact (trapped by
    the box walls); the rest, the on-axis cloud and band-edge modes, are
    continuum_artifact.
    """
    if tau_re is None:
        tau_re = default_tau_re(s.grid)
    x = s.grid.nodes
    outer = np.abs(x) >= (1.0 - outer_fraction) * s.grid.half_length
    mass = np.sum(np.abs(s.psi[outer, :]) ** 2, axis=0)
    band_edge = 2.0 / s.grid.spacing
    ok_re = np.abs(s.mu.real) > tau_re
    ok_loc = mass < loc_threshold
    ok_band = np.abs(s.mu.imag) <= nyquist_fraction * band_edge
    labels = np.where(
        ok_re & ok_loc & ok_band,
        "genuine",
        np.where(ok_loc, "continuum_artifact", "boundary_artifact"),
    )
    return replace(s, classification=labels)
