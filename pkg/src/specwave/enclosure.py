"""Eigenvalue enclosure regions for the damped wave operator.

Each bound on the point spectrum is materialized as an EnclosureRegion:
a constraint on some subset of eigenvalues (one real half-axis, the whole
plane, a disk complement) together with the applicability conditions under
which the bound is actually proven. Regions whose conditions fail are kept
around but marked inapplicable instead of being silently dropped.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from . import damping
from .pencil import Spectrum
from .report import InequalityCheck, VerificationReport
from .schrodinger import InadmissibleExponentError, lt_constant


class UnboundedRegionError(ValueError):
    """The bound degenerates to an unbounded region with no content."""


@dataclass(frozen=True)
class Condition:
    """One hypothesis of a bound, with whether it holds for this damping."""

    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "holds": bool(self.holds)}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass(frozen=True, eq=False)
class EnclosureRegion:
    """A proven constraint on eigenvalues of the damped wave operator.

    kind is one of:
      "real_upper_bound": real eigenvalues on the given side satisfy
          |mu| <= params["bound"].
      "real_lower_bound": real eigenvalues on the given side satisfy
          |mu| >= params["bound"].
      "empty_point_spectrum": no eigenvalues at all on the given side
          ("positive" or "negative" meaning that real half-axis, "both"
          the whole plane).
      "annulus_lower": every eigenvalue satisfies |mu| >= params["radius"].
      "alpha_interval": parameter interval for the coupling sweep; not an
          eigenvalue constraint.
      "no_conclusion": the bound gives no information for this damping.
    """

    kind: str
    side: str
    source: str
    params: dict
    conditions: Tuple[Condition, ...] = ()
    note: str = ""

    @property
    def applicable(self) -> bool:
        return all(c.holds for c in self.conditions)

    def failed_conditions(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.conditions if not c.holds)

    def constrains(self, mu: complex, real_tol: float = 1e-8) -> bool:
        """Whether this region says anything about the eigenvalue mu."""
        if not self.applicable:
            return False
        if self.kind in ("alpha_interval", "no_conclusion"):
            return False
        if self.side == "both":
            return True
        if abs(mu.imag) > real_tol:
            return False
        if self.side == "positive":
            return mu.real > real_tol
        return mu.real < -real_tol

    def contains(self, mu: complex, atol: float = 1e-8, rtol: float = 1e-2) -> bool:
        """Whether mu is consistent with the bound (only if constrained)."""
        if self.kind == "empty_point_spectrum":
            return False
        if self.kind == "real_upper_bound":
            return abs(mu.real) <= self.params["bound"] * (1.0 + rtol) + atol
        if self.kind == "real_lower_bound":
            return abs(mu.real) >= self.params["bound"] * (1.0 - rtol) - atol
        if self.kind == "annulus_lower":
            return abs(mu) >= self.params["radius"] * (1.0 - rtol) - atol
        return True

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "side": self.side,
            "source": self.source,
            "applicable": bool(self.applicable),
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "applicability": [c.to_dict() for c in self.conditions],
            "note": self.note,
        }


def _jsonable(v):
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    return v


def _require_real(a: damping.DampingProfile) -> None:
    if not a.is_real:
        raise damping.ComplexProfileError("this bound needs a real-valued damping")


def lt_real_eigenvalue_bounds(
    a: damping.DampingProfile,
    gamma: float,
    quad: Optional[damping.QuadratureSpec] = None,
    lt_value: Optional[float] = None,
) -> Tuple[EnclosureRegion, EnclosureRegion]:
    """Riesz-sum bounds for the real eigenvalues, one region per sign.

    Positive eigenvalues are controlled by the negative part of the
    damping and vice versa. At gamma = 1/2 the bound turns into an
    absence criterion; for gamma > 1/2 it caps the modulus.
    """
    _require_real(a)
    const = lt_constant(gamma, 1, user_value=lt_value)
    plus, minus = damping.signed_parts(a)
    out = []
    for side, part in (("positive", minus), ("negative", plus)):
        integ, err = damping.lp_power_integral(part, gamma + 0.5, quad)
        params = {
            "gamma": gamma,
            "lt_constant": const.value,
            "constant_provenance": const.provenance,
            "integral": integ,
            "integral_error": err,
        }
        if gamma == 0.5:
            if const.value * (integ + err) < 1.0:
                out.append(
                    EnclosureRegion(
                        kind="empty_point_spectrum",
                        side=side,
                        source="riesz_sum",
                        params=params,
                        note="smallness criterion met; this half-axis is clean",
                    )
                )
            else:
                out.append(
                    EnclosureRegion(
                        kind="no_conclusion",
                        side=side,
                        source="riesz_sum",
                        params=params,
                        note="endpoint exponent gives no bound at this size",
                    )
                )
            continue
        bound = (const.value * integ) ** (1.0 / (gamma - 0.5))
        params["bound"] = bound
        if integ == 0.0:
            out.append(
                EnclosureRegion(
                    kind="empty_point_spectrum",
                    side=side,
                    source="riesz_sum",
                    params=params,
                    note="sign-definite damping rules this half-axis out",
                )
            )
        else:
            out.append(
                EnclosureRegion(
                    kind="real_upper_bound", side=side, source="riesz_sum",
                    params=params,
                )
            )
    return out[0], out[1]


def modulus_lower_bound(
    a: damping.DampingProfile, quad: Optional[damping.QuadratureSpec] = None
) -> EnclosureRegion:
    """Floor on |mu| for real eigenvalues when the damping mean is large.

    The side follows the sign of the mean: integral(a) < -4 floors the
    positive eigenvalues, integral(a) > 4 the negative ones; the floor is
    the reciprocal first-moment norm. A vanishing first moment would make
    the floor infinite, which is reported as an error rather than a region.
    """
    _require_real(a)
    mean, mean_err = damping.integral(a, quad)
    mean = float(np.real(mean))
    wnorm, werr = damping.weighted_l1_norm(a, quad)
    if wnorm == 0.0:
        raise UnboundedRegionError(
            "first-moment norm vanishes; the floor on |mu| is unbounded"
        )
    params = {
        "bound": 1.0 / wnorm,
        "first_moment": wnorm,
        "first_moment_error": werr,
        "damping_integral": mean,
    }
    if mean > 0.0:
        cond = Condition(
            "integral_above_4",
            mean - mean_err > 4.0,
            detail=f"integral(a) = {mean:.12g}",
        )
        side = "negative"
    else:
        cond = Condition(
            "integral_below_minus_4",
            mean + mean_err < -4.0,
            detail=f"integral(a) = {mean:.12g}",
        )
        side = "positive"
    return EnclosureRegion(
        kind="real_lower_bound",
        side=side,
        source="trace_formula",
        params=params,
        conditions=(cond,),
    )


def coupling_interval(
    a: damping.DampingProfile, quad: Optional[damping.QuadratureSpec] = None
) -> EnclosureRegion:
    """Coupling window [lo, hi] for rescaled dampings alpha * a.

    For each real mu in the small-modulus window there is exactly one
    alpha in the interval such that mu / alpha is an eigenvalue of the
    alpha-rescaled operator. Needs a sign-biased mean: integral(a) != 0.
    """
    _require_real(a)
    mean, _ = damping.integral(a, quad)
    mean = float(np.real(mean))
    plus, minus = damping.signed_parts(a)
    wnorm, _ = damping.weighted_l1_norm(a, quad)
    window = float("inf") if wnorm == 0.0 else 1.0 / wnorm
    params: dict = {"mu_window_radius": window, "damping_integral": mean}
    cond = Condition("integral_nonzero", mean != 0.0, detail=f"integral(a) = {mean:.12g}")
    if mean < 0.0:
        part_int, _ = damping.l1_norm(minus, quad)
        params.update(lo=2.0 / part_int, hi=-4.0 / mean, mu_side="positive")
    elif mean > 0.0:
        part_int, _ = damping.l1_norm(plus, quad)
        params.update(lo=2.0 / part_int, hi=4.0 / mean, mu_side="negative")
    return EnclosureRegion(
        kind="alpha_interval",
        side="alpha",
        source="coupling_window",
        params=params,
        conditions=(cond,),
    )


def davies_verdict(
    a: damping.DampingProfile, quad: Optional[damping.QuadratureSpec] = None
) -> EnclosureRegion:
    """Whole-plane absence of point spectrum from L1 smallness.

    The threshold 2 is optimal; at or above it the test is inconclusive,
    not a statement that eigenvalues exist.
    """
    n1, err = damping.l1_norm(a, quad)
    small = n1 + err < 2.0
    params = {
        "l1_norm": n1,
        "l1_error": err,
        "threshold": 2.0,
        "verdict": "empty_point_spectrum" if small else "no_conclusion",
    }
    return EnclosureRegion(
        kind="empty_point_spectrum" if small else "no_conclusion",
        side="both",
        source="l1_smallness",
        params=params,
        conditions=(
            Condition("l1_below_2", small, detail=f"l1 = {n1:.12g} (err {err:.3g})"),
        ),
    )


@dataclass(frozen=True)
class FrankConstant:
    """User-supplied constant for the higher-dimensional modulus bound."""

    gamma: float
    d: int
    value: float
    provenance: str = "user_supplied"

    def __post_init__(self) -> None:
        if self.value <= 0.0:
            raise ValueError("constant must be positive")
        _check_frank_exponent(self.gamma, self.d)


def _check_frank_exponent(gamma: float, d: int) -> None:
    if d < 2:
        raise InadmissibleExponentError(
            "this bound needs dimension d >= 2; in one dimension use the "
            "L1 smallness test (davies_verdict) instead"
        )
    if gamma == 0.0:
        if d < 3:
            raise InadmissibleExponentError("gamma = 0 needs d >= 3")
    elif not 0.0 < gamma <= 0.5:
        raise InadmissibleExponentError("need 0 < gamma <= 1/2")


def frank_region(
    a: Optional[damping.DampingProfile],
    gamma: float,
    d: int,
    constant: Union[FrankConstant, float],
    quad: Optional[damping.QuadratureSpec] = None,
    integral_value: Optional[float] = None,
) -> EnclosureRegion:
    """Excluded origin disk |mu| >= radius in dimension d >= 2.

    Valid for 0 < gamma <= 1/2 (gamma = 0 needs d >= 3). The constant has
    no closed form and must be supplied. The damping integral of
    |a|^(gamma + d/2) can be passed directly via integral_value (with
    a = None); a profile argument is integrated over the line, which is
    only meaningful for genuinely one-variable dampings.
    """
    _check_frank_exponent(gamma, d)
    value = constant.value if isinstance(constant, FrankConstant) else float(constant)
    if value <= 0.0:
        raise ValueError("constant must be positive")
    if integral_value is not None:
        integ, err = float(integral_value), 0.0
    elif a is not None:
        integ, err = damping.lp_power_integral(a, gamma + d / 2.0, quad)
    else:
        raise ValueError("pass either a damping profile or integral_value")
    params = {
        "gamma": gamma,
        "d": d,
        "constant": value,
        "integral": integ,
        "integral_error": err,
    }
    if integ == 0.0:
        return EnclosureRegion(
            kind="empty_point_spectrum",
            side="both",
            source="lp_smallness",
            params=params,
            note="vanishing damping has no point spectrum",
        )
    radius = (value * integ) ** (-1.0 / (d / 2.0 - gamma))
    params["radius"] = radius
    return EnclosureRegion(
        kind="annulus_lower", side="both", source="lp_smallness", params=params
    )


def boundary_polyline(
    region: EnclosureRegion, n_points: int = 64, span: float = 10.0
) -> np.ndarray:
    """Complex polyline tracing the region boundary, for plotting/CSV.

    Half-axis bounds become real segments, disks become circles. Empty,
    inconclusive and parameter regions give an empty array.
    """
    if region.kind == "real_upper_bound":
        b = region.params["bound"]
        seg = np.linspace(0.0, b, n_points)
        return seg if region.side == "positive" else -seg
    if region.kind == "real_lower_bound":
        b = region.params["bound"]
        if not np.isfinite(b):
            return np.array([], dtype=complex)
        seg = np.linspace(b, b + span, n_points)
        return seg if region.side == "positive" else -seg
    if region.kind == "annulus_lower":
        r = region.params["radius"]
        th = np.linspace(0.0, 2.0 * np.pi, n_points)
        return r * np.exp(1j * th)
    return np.array([], dtype=complex)


def membership_report(
    regions: Union[EnclosureRegion, Iterable[EnclosureRegion]],
    spectrum: Spectrum,
    atol: float = 1e-8,
    rtol: float = 1e-2,
    real_tol: float = 1e-8,
) -> VerificationReport:
    """Check every genuine eigenvalue against every applicable region.

    Inapplicable regions and regions that constrain none of the genuine
    eigenvalues are recorded as passing entries with an explanatory note,
    so the report always lists each region exactly once or more.
    """
    if isinstance(regions, EnclosureRegion):
        regions = [regions]
    regions = list(regions)
    genuine = spectrum.genuine
    checks = []
    for region in regions:
        label = f"{region.source}[{region.side}]"
        if not region.applicable:
            checks.append(
                InequalityCheck(
                    name=label,
                    lhs=0.0,
                    rhs=0.0,
                    margin=0.0,
                    passed=True,
                    note="not applicable: " + ", ".join(region.failed_conditions()),
                )
            )
            continue
        if region.kind in ("alpha_interval", "no_conclusion"):
            checks.append(
                InequalityCheck(
                    name=label,
                    lhs=0.0,
                    rhs=0.0,
                    margin=0.0,
                    passed=True,
                    note="no eigenvalue constraint carried by this region",
                )
            )
            continue
        constrained = [mu for mu in genuine if region.constrains(mu, real_tol)]
        if not constrained:
            checks.append(
                InequalityCheck(
                    name=label,
                    lhs=0.0,
                    rhs=0.0,
                    margin=0.0,
                    passed=True,
                    note="vacuously satisfied: no constrained eigenvalues",
                )
            )
            continue
        for j, mu in enumerate(constrained):
            ok = region.contains(mu, atol=atol, rtol=rtol)
            if region.kind == "empty_point_spectrum":
                lhs, rhs = abs(mu), 0.0
            elif region.kind == "real_upper_bound":
                lhs, rhs = abs(mu.real), region.params["bound"]
            elif region.kind == "real_lower_bound":
                lhs, rhs = region.params["bound"], abs(mu.real)
            else:
                lhs, rhs = region.params["radius"], abs(mu)
            checks.append(
                InequalityCheck(
                    name=f"{label}#{j}",
                    lhs=float(lhs),
                    rhs=float(rhs),
                    margin=float(rhs - lhs),
                    passed=ok,
                    note=f"mu = {mu.real:.12g}{mu.imag:+.12g}j",
                )
            )
    return VerificationReport(
        checks=tuple(checks),
        tolerances={"atol": atol, "rtol": rtol, "real_tol": real_tol},
    )
