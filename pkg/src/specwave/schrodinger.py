"""Negative spectrum of 1-D Schroedinger operators and spectral-sum bounds.

The discrete operator is the Dirichlet finite-difference Laplacian plus a
real potential sampled on the grid. Riesz sums of the negative eigenvalues
are compared against integral bounds on the potential.
"""

from dataclasses import dataclass
from math import gamma as gamma_fn
from math import pi
from typing import Optional, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import damping
from .grid import Grid
from .report import InequalityCheck, VerificationReport


class InadmissibleExponentError(ValueError):
    """Riesz exponent outside the range where any bound of this form holds."""


class MissingConstantError(ValueError):
    """No built-in constant for this exponent; caller must supply one."""


@dataclass(frozen=True)
class LTConstant:
    """Constant in the Riesz-sum bound, with its provenance recorded."""

    gamma: float
    d: int
    value: float
    provenance: str


def classical_constant(gamma: float, d: int) -> float:
    """Semiclassical phase-space constant for the Riesz sum."""
    return gamma_fn(gamma + 1.0) / (
        2.0**d * pi ** (d / 2.0) * gamma_fn(gamma + d / 2.0 + 1.0)
    )


def lt_constant(
    gamma: float, d: int = 1, user_value: Optional[float] = None
) -> LTConstant:
    """Best available constant for the Riesz-sum bound at (gamma, d).

    Admissibility: gamma >= 1/2 in d = 1, gamma > 0 in d = 2, gamma >= 0 in
    d >= 3. The endpoint gamma = 1/2, d = 1 has the sharp constant 1/2; for
    gamma >= 3/2 the semiclassical constant is the true one. Anything else
    needs a caller-supplied value.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if (d == 1 and gamma < 0.5) or (d == 2 and gamma <= 0.0) or gamma < 0.0:
        raise InadmissibleExponentError(
            f"no bound of this form holds for gamma={gamma}, d={d}"
        )
    if user_value is not None:
        return LTConstant(gamma, d, float(user_value), "user_supplied")
    if d == 1 and gamma == 0.5:
        return LTConstant(gamma, d, 0.5, "sharp_known")
    if gamma >= 1.5:
        return LTConstant(gamma, d, classical_constant(gamma, d), "classical")
    raise MissingConstantError(
        f"no built-in constant for gamma={gamma}, d={d}; pass user_value"
    )


def default_cutoff(g: Grid) -> float:
    """Threshold separating genuine bound states from box artifacts.

    Twice the lowest Dirichlet box level, so anything the empty box can
    produce is excluded with margin.
    """
    return 2.0 * (pi / (2.0 * g.half_length)) ** 2


@dataclass(frozen=True, eq=False)
class NegativeSpectrum:
    """Eigenvalues <= -epsilon of -Laplacian + V, ascending."""

    eigenvalues: np.ndarray
    epsilon: float
    grid: Grid

    @property
    def count(self) -> int:
        return len(self.eigenvalues)


def negative_eigenvalues(
    V: damping.DampingProfile, g: Grid, epsilon: Optional[float] = None
) -> NegativeSpectrum:
    """Discrete spectrum of -Laplacian + V below -epsilon."""
    if not V.is_real:
        raise damping.ComplexProfileError("potential must be real-valued")
    if epsilon is None:
        epsilon = default_cutoff(g)
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    vals = np.real(damping.sample(V, g)).astype(float)
    h = g.spacing
    diag = 2.0 / h**2 + vals
    off = np.full(g.interior_count - 1, -1.0 / h**2)
    floor = float(diag.min() - 2.0 / h**2) - 1.0
    w = eigh_tridiagonal(
        diag, off, eigvals_only=True, select="v", select_range=(floor, -epsilon)
    )
    return NegativeSpectrum(np.sort(w), float(epsilon), g)


def lt_sum(s: NegativeSpectrum, gamma: float) -> float:
    """Riesz sum of |eigenvalue|^gamma; gamma = 0 counts states."""
    if gamma < 0.0:
        raise ValueError("gamma must be nonnegative")
    if s.count == 0:
        return 0.0
    return float(np.sum(np.abs(s.eigenvalues) ** gamma))


def bfz_lower(V: damping.DampingProfile, quad: Optional[damping.QuadratureSpec] = None):
    """Lower bound -(1/4) * integral(V) for the sqrt Riesz sum."""
    if not V.is_real:
        raise damping.ComplexProfileError("potential must be real-valued")
    val, err = damping.integral(V, quad)
    return -0.25 * float(np.real(val)), 0.25 * err


def bargmann_bound(
    V: damping.DampingProfile, quad: Optional[damping.QuadratureSpec] = None
):
    """Upper bound 1 + integral(|x| |V|) for the bound-state count."""
    val, err = damping.weighted_l1_norm(V, quad)
    return 1.0 + val, err


def verify_inequalities(
    V: damping.DampingProfile,
    gamma: float,
    g: Grid,
    quad: Optional[damping.QuadratureSpec] = None,
    lt: Union[LTConstant, float, None] = None,
    epsilon: Optional[float] = None,
    atol: float = 1e-8,
    rtol: float = 1e-2,
) -> VerificationReport:
    """Check the Riesz-sum, trace-formula, and counting bounds at once.

    Each check allows the stated tolerances plus the quadrature error of
    its own right-hand side, so a failure means a genuine violation.
    """
    s = negative_eigenvalues(V, g, epsilon)
    if isinstance(lt, LTConstant):
        const = lt
    else:
        const = lt_constant(gamma, 1, user_value=lt)
    _, v_minus = damping.signed_parts(V)
    checks = []

    lhs = lt_sum(s, gamma)
    pot_int, pot_err = damping.lp_power_integral(v_minus, gamma + 0.5, quad)
    rhs = const.value * pot_int
    slack = atol + rtol * abs(rhs) + const.value * pot_err
    checks.append(
        InequalityCheck(
            name="riesz_sum_upper",
            lhs=lhs,
            rhs=rhs,
            margin=rhs - lhs,
            passed=lhs <= rhs + slack,
            constants={
                "gamma": gamma,
                "L_value": const.value,
                "provenance": const.provenance,
            },
        )
    )

    # The trace-formula lower bound needs a net-attractive potential; for
    # integral(V) >= 0 it asserts nothing and the check records that.
    v_int, _ = damping.integral(V, quad)
    if float(np.real(v_int)) < 0.0:
        bound, berr = bfz_lower(V, quad)
        root_sum = lt_sum(s, 0.5)
        slack = atol + rtol * abs(bound) + berr
        checks.append(
            InequalityCheck(
                name="trace_formula_lower",
                lhs=bound,
                rhs=root_sum,
                margin=root_sum - bound,
                passed=bound <= root_sum + slack,
            )
        )
    else:
        checks.append(
            InequalityCheck(
                name="trace_formula_lower",
                lhs=0.0,
                rhs=0.0,
                margin=0.0,
                passed=True,
                note="not applicable: integral of the potential is nonnegative",
            )
        )

    cap, cerr = bargmann_bound(V, quad)
    cap_floor = float(np.floor(cap))
    checks.append(
        InequalityCheck(
            name="bargmann_count",
            lhs=float(s.count),
            rhs=cap_floor,
            margin=cap_floor - float(s.count),
            passed=float(s.count) <= np.floor(cap + cerr + atol),
            note="count compared against the integer part of the bound",
        )
    )
    return VerificationReport(
        checks=tuple(checks),
        tolerances={"atol": atol, "rtol": rtol, "epsilon": s.epsilon},
    )
