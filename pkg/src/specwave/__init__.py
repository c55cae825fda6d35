"""Spectral analysis of the 1-D damped wave operator with complex damping.

The package combines three independent routes to the point spectrum:
analytic enclosure regions from integral bounds on the damping, a dense
eigensolve of the companion linearization of the quadratic pencil, and a
similarity certificate that rules eigenvalues out altogether for small
dampings. Step-shaped dampings additionally admit a closed-form secular
equation used for cross-validation.
"""

from .damping import (
    DEFAULT_QUADRATURE,
    ComplexProfileError,
    DampingProfile,
    NormUndefinedError,
    QuadratureSpec,
    gaussian,
    integral,
    l1_norm,
    lp_power_integral,
    sample,
    sampled,
    scale,
    signed_parts,
    step,
    weighted_l1_norm,
    zero,
)
from .enclosure import (
    Condition,
    EnclosureRegion,
    FrankConstant,
    UnboundedRegionError,
    boundary_polyline,
    coupling_interval,
    davies_verdict,
    frank_region,
    lt_real_eigenvalue_bounds,
    membership_report,
    modulus_lower_bound,
)
from .grid import Grid
from .pencil import (
    CompanionMatrix,
    EigensolverError,
    Spectrum,
    assemble_companion,
    classify,
    companion_residual,
    default_tau_re,
    dirichlet_laplacian,
    fix_phase,
    laplacian_modes,
    lift_eigenvector,
    pencil_residual,
    sine_mode,
    solve_spectrum,
)
from .report import InequalityCheck, VerificationReport
from .schrodinger import (
    InadmissibleExponentError,
    LTConstant,
    MissingConstantError,
    NegativeSpectrum,
    bargmann_bound,
    bfz_lower,
    classical_constant,
    default_cutoff,
    lt_constant,
    lt_sum,
    negative_eigenvalues,
    verify_inequalities,
)
from .similarity import (
    BranchCutError,
    RealShiftError,
    ResolventKernel,
    SimilarityVerdict,
    SupResult,
    XiGrid,
    apply_skew_generator,
    bs_hs_norm,
    default_xi_grid,
    green_kernel,
    hs_norm_table,
    kato_similarity_verdict,
    resolvent_block_action,
    sup_hs_norm,
)
from .stepwell import (
    ConvergenceError,
    DomainError,
    RootSearchError,
    SecularRoot,
    StepDamping,
    delta_pencil_classify,
    endpoint_slopes,
    find_real_eigenvalue,
    scan_real_roots,
    secular_F,
    secular_F_complex,
    secular_G,
)

from ._version import __version__
from .cli import RunReport, ScenarioConfig, applicable_analyses, run, sweep_alpha

__all__ = [n for n in dir() if not n.startswith("_")]
