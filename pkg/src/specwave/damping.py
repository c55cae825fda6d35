"""Damping profiles and their integral norms.

A profile is a bounded function a(x) on the line, possibly complex valued.
Norms are returned as ``(value, error_estimate)`` pairs; the estimate is zero
whenever the value is computed in closed form.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from .grid import Grid


class NormUndefinedError(ValueError):
    """Integral norm requested for a profile that does not decay."""


class ComplexProfileError(ValueError):
    """Sign decomposition requested for a complex-valued profile."""


REAL_TOL = 1e-12


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite quadrature settings for profile integrals.

    rule: "trapezoid" or "simpson".
    panels: subinterval count at the finest level (rounded up to even).
    truncation_radius: integration cutoff for profiles with unbounded
        support; defaults to 10 widths for a gaussian.
    """

    rule: str = "simpson"
    panels: int = 400
    truncation_radius: Optional[float] = None

    def __post_init__(self) -> None:
        if self.rule not in ("trapezoid", "simpson"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if self.panels < 2:
            raise ValueError("need at least 2 panels")
        if self.truncation_radius is not None and self.truncation_radius <= 0.0:
            raise ValueError("truncation_radius must be positive")


DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True, eq=False)
class DampingProfile:
    """Tagged union of the supported damping shapes.

    kind "step": amp on (-half_width, half_width), zero outside.
    kind "gaussian": amp * exp(-x^2 / width^2).
    kind "sampled": values given on the interior nodes of a Grid.
    kind "zero": identically zero.
    """

    kind: str
    amp: complex = 0.0
    half_width: float = 0.0
    width: float = 0.0
    grid: Optional[Grid] = None
    values: Optional[np.ndarray] = None
    vanishes_at_infinity: bool = True

    def __post_init__(self) -> None:
        if self.kind not in ("step", "gaussian", "sampled", "zero"):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.kind == "step" and self.half_width <= 0.0:
            raise ValueError("step profile needs half_width > 0")
        if self.kind == "gaussian" and self.width <= 0.0:
            raise ValueError("gaussian profile needs width > 0")
        if self.kind == "sampled":
            if self.grid is None or self.values is None:
                raise ValueError("sampled profile needs grid and values")
            if len(self.values) != self.grid.interior_count:
                raise ValueError("values length must match grid")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "zero":
            return np.zeros_like(x, dtype=complex)
        if self.kind == "step":
            return np.where(np.abs(x) < self.half_width, self.amp, 0.0 + 0.0j)
        if self.kind == "gaussian":
            return self.amp * np.exp(-(x / self.width) ** 2)
        # Sampled profiles: piecewise-linear between their own nodes, ramping
        # to zero at the box walls and vanishing outside.
        ell = self.grid.half_length
        nodes = np.concatenate(([-ell], self.grid.nodes, [ell]))
        vals = np.asarray(self.values)
        padded = np.concatenate(([0.0], vals.real, [0.0]))
        out = np.interp(x, nodes, padded) + 0.0j
        if np.iscomplexobj(vals):
            out += 1j * np.interp(x, nodes, np.concatenate(([0.0], vals.imag, [0.0])))
        out[np.abs(x) > ell] = 0.0
        return out

    @property
    def is_real(self) -> bool:
        if self.kind == "sampled":
            return not np.iscomplexobj(self.values) or bool(
                np.max(np.abs(self.values.imag), initial=0.0) <= REAL_TOL
            )
        return abs(complex(self.amp).imag) <= REAL_TOL

    @property
    def sup_norm(self) -> float:
        if self.kind == "zero":
            return 0.0
        if self.kind == "sampled":
            return float(np.max(np.abs(self.values))) if len(self.values) else 0.0
        return abs(complex(self.amp))

    @property
    def support_radius(self) -> Optional[float]:
        """Radius outside which the profile vanishes; None if unbounded."""
        if self.kind == "zero":
            return 0.0
        if self.kind == "step":
            return self.half_width
        if self.kind == "sampled":
            return self.grid.half_length
        return None


def step(amp: complex, half_width: float) -> DampingProfile:
    return DampingProfile(kind="step", amp=amp, half_width=half_width)


def gaussian(amp: complex, width: float) -> DampingProfile:
    return DampingProfile(kind="gaussian", amp=amp, width=width)


def sampled(grid: Grid, values) -> DampingProfile:
    vals = np.asarray(values)
    if not np.iscomplexobj(vals):
        vals = vals.astype(float)
    return DampingProfile(kind="sampled", grid=grid, values=vals)


def zero() -> DampingProfile:
    return DampingProfile(kind="zero")


def scale(a: DampingProfile, factor: complex) -> DampingProfile:
    """Profile multiplied pointwise by a scalar."""
    if a.kind == "zero":
        return a
    if a.kind == "sampled":
        return sampled(a.grid, np.asarray(a.values) * factor)
    if a.kind == "step":
        return step(complex(a.amp) * factor, a.half_width)
    return gaussian(complex(a.amp) * factor, a.width)


def sample(a: DampingProfile, g: Grid) -> np.ndarray:
    """Profile values on the interior nodes of g."""
    if a.kind == "sampled" and a.grid == g:
        return np.array(a.values)
    return a(g.nodes)


def signed_parts(a: DampingProfile) -> Tuple[DampingProfile, DampingProfile]:
    """Decompose a real profile as a = plus - minus with both parts >= 0."""
    if not a.is_real:
        raise ComplexProfileError("signed parts need a real-valued profile")
    if a.kind == "zero":
        return zero(), zero()
    if a.kind == "sampled":
        v = np.real(a.values)
        return sampled(a.grid, np.maximum(v, 0.0)), sampled(a.grid, np.maximum(-v, 0.0))
    amp = complex(a.amp).real
    if a.kind == "step":
        pos, neg = step(max(amp, 0.0), a.half_width), step(max(-amp, 0.0), a.half_width)
    else:
        pos, neg = gaussian(max(amp, 0.0), a.width), gaussian(max(-amp, 0.0), a.width)
    if amp >= 0.0:
        return pos, zero()
    return zero(), neg


def _composite(f: Callable, lo: float, hi: float, panels: int, rule: str):
    if rule == "simpson" and panels % 2:
        panels += 1
    x = np.linspace(lo, hi, panels + 1)
    y = f(x)
    h = (hi - lo) / panels
    if rule == "trapezoid":
        return h * (0.5 * y[0] + y[1:-1].sum() + 0.5 * y[-1])
    return (h / 3.0) * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def _with_error(f: Callable, lo: float, hi: float, spec: QuadratureSpec):
    """Composite rule plus a Richardson error estimate from panel halving."""
    n = max(spec.panels, 4)
    coarse = _composite(f, lo, hi, max(n // 2, 2), spec.rule)
    fine = _composite(f, lo, hi, n, spec.rule)
    order = 2 if spec.rule == "trapezoid" else 4
    err = abs(fine - coarse) / (2**order - 1)
    return fine, float(err)


def _check_integrable(a: DampingProfile) -> None:
    if not a.vanishes_at_infinity:
        raise NormUndefinedError("profile does not vanish at infinity")


def _gaussian_radius(a: DampingProfile, spec: QuadratureSpec) -> float:
    if spec.truncation_radius is not None:
        return spec.truncation_radius
    return 10.0 * a.width


def _sampled_integral(vals: np.ndarray, h: float):
    """Trapezoid over sampled values, zero-extended to the Dirichlet ends."""
    fine = h * vals.sum()
    coarse = 2.0 * h * vals[::2].sum()
    return fine, float(abs(fine - coarse) / 3.0)


def _profile_integral(a: DampingProfile, integrand: Callable, spec: QuadratureSpec):
    """Integrate integrand(x, a(x)) over the support; even integrands only."""
    if a.kind == "zero":
        return 0.0, 0.0
    if a.kind == "sampled":
        x = a.grid.nodes
        return _sampled_integral(integrand(x, a.values), a.grid.spacing)
    if a.kind == "step":
        raise AssertionError("step profiles use closed forms")
    radius = _gaussian_radius(a, spec)
    val, err = _with_error(lambda x: integrand(x, a(x)), 0.0, radius, spec)
    return 2.0 * val, 2.0 * err


def lp_power_integral(
    a: DampingProfile, p: float, quad: Optional[QuadratureSpec] = None
) -> Tuple[float, float]:
    """Integral of |a(x)|^p with an error estimate attached."""
    if p < 1.0:
        raise ValueError("exponent p must be at least 1")
    _check_integrable(a)
    spec = quad or DEFAULT_QUADRATURE
    if a.kind == "step":
        return 2.0 * a.half_width * abs(complex(a.amp)) ** p, 0.0
    val, err = _profile_integral(a, lambda x, v: np.abs(v) ** p, spec)
    return float(np.real(val)), err


def l1_norm(
    a: DampingProfile, quad: Optional[QuadratureSpec] = None
) -> Tuple[float, float]:
    """L1 norm of the profile."""
    return lp_power_integral(a, 1.0, quad)


def weighted_l1_norm(
    a: DampingProfile, quad: Optional[QuadratureSpec] = None
) -> Tuple[float, float]:
    """Integral of |x| |a(x)|, the first-moment norm."""
    _check_integrable(a)
    spec = quad or DEFAULT_QUADRATURE
    if a.kind == "step":
        return abs(complex(a.amp)) * a.half_width**2, 0.0
    val, err = _profile_integral(a, lambda x, v: np.abs(x) * np.abs(v), spec)
    return float(np.real(val)), err


def integral(
    a: DampingProfile, quad: Optional[QuadratureSpec] = None
) -> Tuple[complex, float]:
    """Signed (possibly complex) integral of the profile itself."""
    _check_integrable(a)
    spec = quad or DEFAULT_QUADRATURE
    if a.kind == "step":
        return 2.0 * a.half_width * complex(a.amp), 0.0
    val, err = _profile_integral(a, lambda x, v: v, spec)
    return complex(val), err
