"""Command line front end and scenario runner.

Subcommands cover the main analyses: enclosure regions, the discretized
pencil spectrum, the Riesz-sum checks, the similarity certificate, the
step-damping secular equation and the coupling sweep. Scenario parameters
come from a JSON config file with kebab-case flag overrides; every run
writes a deterministic report.json plus per-analysis CSV/JSON artifacts
(wall-clock timings go to a separate timings.json so reports stay
byte-reproducible).

Exit codes: 0 success, 1 a verification check failed, 2 bad configuration,
3 numerical failure.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import damping, enclosure, pencil, schrodinger, similarity, stepwell
from ._version import __version__
from .grid import Grid

CSV_HEADER = "# specwave-csv v1"

ANALYSES = (
    "enclose",
    "solve",
    "verify-lt",
    "similarity",
    "step-secular",
    "sweep-alpha",
)


class ConfigError(ValueError):
    """Scenario configuration is malformed or inconsistent."""


@dataclass
class ScenarioConfig:
    damping_kind: str = "zero"
    amp: complex = 0.0
    half_width: float = 1.0
    width: float = 1.0
    half_length: float = 20.0
    interior_count: int = 399
    gamma: float = 0.5
    lt_value: Optional[float] = None
    epsilon: Optional[float] = None
    rule: str = "simpson"
    panels: int = 400
    truncation_radius: Optional[float] = None
    tau_re: Optional[float] = None
    loc_threshold: float = 0.5
    nyquist_fraction: float = 0.5
    outer_fraction: float = 0.2
    scan_points: int = 1000
    secular_tol: float = 1e-12
    alpha_values: Optional[List[float]] = None
    alpha_lo: float = 0.25
    alpha_hi: float = 1.0
    alpha_count: int = 4
    xi_modulus_min: float = 1e-3
    xi_modulus_max: float = 1e3
    xi_modulus_count: int = 25
    xi_phase_count: int = 8
    analyses: Optional[List[str]] = None
    seed: int = 42
    out_dir: str = "specwave-out"

    def __post_init__(self) -> None:
        self.amp = complex(self.amp)

    def profile(self) -> damping.DampingProfile:
        try:
            if self.damping_kind == "zero":
                return damping.zero()
            if self.damping_kind == "step":
                return damping.step(self.amp, self.half_width)
            if self.damping_kind == "gaussian":
                return damping.gaussian(self.amp, self.width)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        raise ConfigError(f"unsupported damping kind {self.damping_kind!r}")

    def grid(self) -> Grid:
        try:
            return Grid(self.half_length, self.interior_count)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def quadrature(self) -> damping.QuadratureSpec:
        try:
            return damping.QuadratureSpec(
                rule=self.rule,
                panels=self.panels,
                truncation_radius=self.truncation_radius,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def xi_grid(self) -> similarity.XiGrid:
        try:
            if self.xi_modulus_count < 1 or self.xi_phase_count < 1:
                raise ValueError("xi grid needs at least one modulus and phase")
            if not 0.0 < self.xi_modulus_min <= self.xi_modulus_max:
                raise ValueError("xi moduli must satisfy 0 < min <= max")
            moduli = np.logspace(
                np.log10(self.xi_modulus_min),
                np.log10(self.xi_modulus_max),
                self.xi_modulus_count,
            )
            phases = np.linspace(0.0, 2.0 * np.pi, self.xi_phase_count + 2)[1:-1]
            return similarity.XiGrid(moduli=moduli, phases=phases)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def alphas(self) -> np.ndarray:
        if self.alpha_values is not None:
            arr = np.asarray(self.alpha_values, dtype=float)
            if arr.size == 0:
                raise ConfigError("alpha values list is empty")
            return arr
        if self.alpha_count < 1:
            raise ConfigError("alpha count must be >= 1")
        return np.linspace(self.alpha_lo, self.alpha_hi, self.alpha_count)

    def validate(self) -> None:
        """Reject nonpositive knobs before any analysis runs."""
        self.grid()
        self.quadrature()
        if self.secular_tol <= 0.0:
            raise ConfigError("secular tolerance must be positive")
        if self.scan_points < 100:
            raise ConfigError("scan_points must be at least 100")
        if not 0.0 < self.loc_threshold <= 1.0:
            raise ConfigError("loc_threshold must lie in (0, 1]")
        if self.nyquist_fraction <= 0.0:
            raise ConfigError("nyquist_fraction must be positive")
        if not 0.0 < self.outer_fraction < 1.0:
            raise ConfigError("outer_fraction must lie in (0, 1)")
        if self.tau_re is not None and self.tau_re <= 0.0:
            raise ConfigError("tau_re must be positive")
        if self.epsilon is not None and self.epsilon <= 0.0:
            raise ConfigError("epsilon must be positive")

    def requested_analyses(self) -> Tuple[str, ...]:
        if self.analyses is None:
            return applicable_analyses(self)
        if not self.analyses:
            raise ConfigError("requested analyses must be non-empty")
        bad = [a for a in self.analyses if a not in ANALYSES]
        if bad:
            raise ConfigError(f"unknown analyses {bad!r}; choose from {ANALYSES}")
        # Keep dependency order regardless of the order given.
        return tuple(a for a in ANALYSES if a in self.analyses)

    def to_dict(self) -> dict:
        d = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, complex):
                v = [v.real, v.imag]
            d[f.name] = v
        return d


def applicable_analyses(cfg: ScenarioConfig) -> Tuple[str, ...]:
    """Largest analysis subset that is well-posed for this damping."""
    a = cfg.profile()
    names = ["enclose", "solve", "similarity"]
    if a.is_real:
        names.append("verify-lt")
        mean, _ = damping.integral(a, cfg.quadrature())
        if float(np.real(mean)) != 0.0:
            names.append("sweep-alpha")
    if a.kind == "step" and a.is_real and complex(a.amp).real < 0.0:
        names.append("step-secular")
    return tuple(n for n in ANALYSES if n in names)


_DAMPING_KEYS = {
    "kind": "damping_kind",
    "amp": "amp",
    "amplitude": "amp",
    "a_re": "a_re",
    "a_im": "a_im",
    "amplitude_re": "a_re",
    "amplitude_im": "a_im",
    "b": "half_width",
    "half_width": "half_width",
    "width": "width",
}

_NESTED_KEYS = {
    "grid": {
        "half_length": "half_length",
        "L": "half_length",
        "interior_count": "interior_count",
        "N": "interior_count",
    },
    "quadrature": {
        "rule": "rule",
        "panels": "panels",
        "truncation_radius": "truncation_radius",
    },
    "classify": {
        "tau_re": "tau_re",
        "loc_threshold": "loc_threshold",
        "nyquist_fraction": "nyquist_fraction",
        "outer_fraction": "outer_fraction",
    },
    "thresholds": {
        "tau_re": "tau_re",
        "loc_threshold": "loc_threshold",
        "epsilon": "epsilon",
        "tol": "secular_tol",
    },
    "secular": {"scan_points": "scan_points", "tol": "secular_tol"},
    "alpha": {
        "values": "alpha_values",
        "lo": "alpha_lo",
        "hi": "alpha_hi",
        "count": "alpha_count",
    },
    "xi": {
        "modulus_min": "xi_modulus_min",
        "modulus_max": "xi_modulus_max",
        "moduli": "xi_modulus_count",
        "phases": "xi_phase_count",
    },
}

_TOP_KEYS = ("gamma", "lt_value", "epsilon", "seed", "analyses", "out_dir")


def _parse_amp(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, str):
        try:
            return complex(v.replace(" ", ""))
        except ValueError as exc:
            raise ConfigError(f"cannot parse amplitude {v!r}") from exc
    raise ConfigError(f"cannot parse amplitude {v!r}")


def _damping_section(cfg: ScenarioConfig, sub: dict) -> ScenarioConfig:
    a_re: Optional[float] = None
    a_im: Optional[float] = None
    for key, value in sub.items():
        if key not in _DAMPING_KEYS:
            raise ConfigError(f"unknown key {key!r} in section 'damping'")
        attr = _DAMPING_KEYS[key]
        if attr == "amp":
            cfg = replace(cfg, amp=_parse_amp(value))
        elif attr == "a_re":
            a_re = float(value)
        elif attr == "a_im":
            a_im = float(value)
        else:
            cfg = replace(cfg, **{attr: value})
    if a_re is not None or a_im is not None:
        cfg = replace(
            cfg,
            amp=complex(
                a_re if a_re is not None else cfg.amp.real,
                a_im if a_im is not None else cfg.amp.imag,
            ),
        )
    return cfg


def config_from_dict(data: dict) -> ScenarioConfig:
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    cfg = ScenarioConfig()
    known = set(_NESTED_KEYS) | set(_TOP_KEYS) | {"damping"}
    for key in data:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
    if "damping" in data:
        sub = data["damping"]
        if not isinstance(sub, dict):
            raise ConfigError("config section 'damping' must be an object")
        cfg = _damping_section(cfg, sub)
    for section, mapping in _NESTED_KEYS.items():
        sub = data.get(section)
        if sub is None:
            continue
        if not isinstance(sub, dict):
            raise ConfigError(f"config section {section!r} must be an object")
        for key, value in sub.items():
            if key not in mapping:
                raise ConfigError(f"unknown key {key!r} in section {section!r}")
            cfg = replace(cfg, **{mapping[key]: value})
    for key in _TOP_KEYS:
        if key in data:
            cfg = replace(cfg, **{key: data[key]})
    if cfg.analyses is not None and not isinstance(cfg.analyses, list):
        raise ConfigError("'analyses' must be a list of analysis names")
    return cfg


def load_config(path: Optional[str]) -> ScenarioConfig:
    if path is None:
        return ScenarioConfig()
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from exc
    return config_from_dict(data)


# ---------------------------------------------------------------------------
# Analyses
# ---------------------------------------------------------------------------


@dataclass
class RunReport:
    """Consolidated outcome of one scenario run.

    results maps analysis name to its JSON-ready payload. failures lists
    verification checks that failed; errors lists analyses that raised.
    The report (minus timings) is deterministic for a fixed config and
    seed; attachments carry non-serialized arrays for artifact writers.
    """

    config: ScenarioConfig
    results: Dict[str, dict] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    attachments: Dict[str, object] = field(default_factory=dict)
    version: str = __version__

    @property
    def all_pass(self) -> bool:
        return not self.failures and not self.errors

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "version": self.version,
            "config": self.config.to_dict(),
            "analyses": sorted(self.results),
            "results": self.results,
            "failure_list": list(self.failures) + list(self.errors),
            "all_pass": bool(self.all_pass),
        }
        if include_timings:
            d["timings"] = {k: float(v) for k, v in self.timings.items()}
        return d


def _region_list(cfg: ScenarioConfig) -> List[enclosure.EnclosureRegion]:
    a = cfg.profile()
    quad = cfg.quadrature()
    try:
        regions = [enclosure.davies_verdict(a, quad)]
        if a.is_real:
            regions.extend(
                enclosure.lt_real_eigenvalue_bounds(
                    a, cfg.gamma, quad, lt_value=cfg.lt_value
                )
            )
            try:
                regions.append(enclosure.modulus_lower_bound(a, quad))
            except enclosure.UnboundedRegionError:
                pass
            regions.append(enclosure.coupling_interval(a, quad))
    except (
        schrodinger.MissingConstantError,
        schrodinger.InadmissibleExponentError,
        damping.NormUndefinedError,
    ) as exc:
        raise ConfigError(str(exc)) from exc
    return regions


def _classified_spectrum(cfg: ScenarioConfig) -> pencil.Spectrum:
    mat = pencil.assemble_companion(cfg.profile(), cfg.grid())
    spec = pencil.solve_spectrum(mat, overwrite=True)
    return pencil.classify(
        spec,
        tau_re=cfg.tau_re,
        loc_threshold=cfg.loc_threshold,
        nyquist_fraction=cfg.nyquist_fraction,
        outer_fraction=cfg.outer_fraction,
    )


def _spectrum_summary(spec: pencil.Spectrum) -> dict:
    genuine = spec.genuine
    labels, counts = np.unique(spec.classification, return_counts=True)
    return {
        "eigenvalue_count": int(len(spec.mu)),
        "genuine_count": int(len(genuine)),
        "genuine": [[float(m.real), float(m.imag)] for m in genuine],
        "classification_counts": {
            str(k): int(v) for k, v in zip(labels, counts)
        },
        "max_residual": float(spec.residuals.max()),
        "max_genuine_residual": (
            float(spec.residuals[spec.genuine_mask].max()) if len(genuine) else 0.0
        ),
        "max_lift_defect": float(spec.lift_defect.max()),
    }


def _analysis_enclose(cfg: ScenarioConfig, report: RunReport) -> dict:
    regions = _region_list(cfg)
    report.attachments["regions"] = regions
    return {
        "verdict": regions[0].params["verdict"],
        "regions": [r.to_dict() for r in regions],
    }


def _analysis_solve(cfg: ScenarioConfig, report: RunReport) -> dict:
    regions = report.attachments.get("regions")
    if regions is None:
        regions = _region_list(cfg)
        report.attachments["regions"] = regions
    spec = _classified_spectrum(cfg)
    report.attachments["spectrum"] = spec
    membership = enclosure.membership_report(regions, spec)
    for check in membership.failures:
        report.failures.append(f"solve: {check.name}")
    return {
        "spectrum": _spectrum_summary(spec),
        "membership": membership.to_dict(),
    }


def _analysis_verify_lt(cfg: ScenarioConfig, report: RunReport) -> dict:
    try:
        ineq = schrodinger.verify_inequalities(
            cfg.profile(),
            cfg.gamma,
            cfg.grid(),
            quad=cfg.quadrature(),
            lt=cfg.lt_value,
            epsilon=cfg.epsilon,
        )
    except (
        schrodinger.MissingConstantError,
        schrodinger.InadmissibleExponentError,
        damping.ComplexProfileError,
        damping.NormUndefinedError,
    ) as exc:
        raise ConfigError(str(exc)) from exc
    for check in ineq.failures:
        report.failures.append(f"verify-lt: {check.name}")
    return {"report": ineq.to_dict()}


def _analysis_similarity(cfg: ScenarioConfig, report: RunReport) -> dict:
    a = cfg.profile()
    quad = cfg.quadrature()
    xi = cfg.xi_grid()
    verdict = similarity.kato_similarity_verdict(a, xi, quad)
    table = similarity.hs_norm_table(a, xi, quad)
    report.attachments["hs_table"] = table
    ceiling_ok = verdict.sup_hs <= verdict.analytic_bound + (
        1e-8 + 0.5 * verdict.l1_error
    )
    if not ceiling_ok:
        report.failures.append("similarity: hs_certificate_ceiling")
    payload = verdict.to_dict()
    payload["ceiling_check_pass"] = bool(ceiling_ok)
    return payload


def _step_damping(cfg: ScenarioConfig) -> stepwell.StepDamping:
    a = cfg.profile()
    if a.kind != "step" or not a.is_real or complex(a.amp).real >= 0.0:
        raise ConfigError("step-secular needs a real attractive step damping")
    return stepwell.StepDamping(complex(a.amp).real, a.half_width)


def _analysis_step_secular(cfg: ScenarioConfig, report: RunReport) -> dict:
    w = _step_damping(cfg)
    roots = stepwell.scan_real_roots(w, scan_points=cfg.scan_points, tol=cfg.secular_tol)
    lo_slope, hi_slope = stepwell.endpoint_slopes(w)
    mus = np.linspace(0.0, -w.a, 801)
    sweep = np.column_stack([mus, stepwell.secular_G(mus, w)])
    report.attachments["secular_sweep"] = sweep
    for r in roots:
        if not 0.0 < r.mu_star < -w.a:
            report.failures.append("step-secular: root_inside_interval")
        if r.residual > 10.0 * cfg.secular_tol:
            report.failures.append("step-secular: root_residual")
    return {
        "c": w.c,
        "l1_norm": w.l1,
        "endpoint_slopes": [lo_slope, hi_slope],
        "root_guaranteed": bool(w.c > 1.0),
        "roots": [
            {
                "mu_star": r.mu_star,
                "residual": r.residual,
                "bracket": [r.bracket[0], r.bracket[1]],
            }
            for r in roots
        ],
    }


def sweep_alpha(
    a: damping.DampingProfile,
    alphas,
    g: Grid,
    tau_re: Optional[float] = None,
    loc_threshold: float = 0.5,
    nyquist_fraction: float = 0.5,
    outer_fraction: float = 0.2,
    real_tol: float = 1e-8,
) -> List[dict]:
    """Solve the pencil for every rescaled damping alpha * a.

    Returns one row per alpha with the genuine eigenvalues and the subset
    on the real axis; classification knobs mirror the single-solve path.
    """
    rows = []
    for alpha in np.asarray(alphas, dtype=float):
        scaled = damping.scale(a, float(alpha))
        spec = pencil.classify(
            pencil.solve_spectrum(pencil.assemble_companion(scaled, g), overwrite=True),
            tau_re=tau_re,
            loc_threshold=loc_threshold,
            nyquist_fraction=nyquist_fraction,
            outer_fraction=outer_fraction,
        )
        genuine = spec.genuine
        real = genuine[np.abs(genuine.imag) <= real_tol]
        rows.append(
            {
                "alpha": float(alpha),
                "genuine": [[float(m.real), float(m.imag)] for m in genuine],
                "genuine_real": [float(m.real) for m in real],
            }
        )
    return rows


def _analysis_sweep_alpha(cfg: ScenarioConfig, report: RunReport) -> dict:
    a = cfg.profile()
    quad = cfg.quadrature()
    window = enclosure.coupling_interval(a, quad) if a.is_real else None
    rows = sweep_alpha(
        a,
        cfg.alphas(),
        cfg.grid(),
        tau_re=cfg.tau_re,
        loc_threshold=cfg.loc_threshold,
        nyquist_fraction=cfg.nyquist_fraction,
        outer_fraction=cfg.outer_fraction,
    )
    report.attachments["alpha_rows"] = rows
    hit = None
    if window is not None and window.applicable:
        lo, hi = window.params["lo"], window.params["hi"]
        side = window.params["mu_side"]
        inside = [r for r in rows if lo <= r["alpha"] <= hi]
        hit = False
        for r in inside:
            for mu in r["genuine_real"]:
                if (mu > 0.0) == (side == "positive"):
                    hit = True
        if inside and not hit:
            report.failures.append("sweep-alpha: no_real_eigenvalue_in_interval")
    return {
        "coupling_window": window.to_dict() if window is not None else None,
        "interval_hit": hit,
        "sweep": rows,
    }


_ANALYSIS_FUNCS = {
    "enclose": _analysis_enclose,
    "solve": _analysis_solve,
    "verify-lt": _analysis_verify_lt,
    "similarity": _analysis_similarity,
    "step-secular": _analysis_step_secular,
    "sweep-alpha": _analysis_sweep_alpha,
}


def run(cfg: ScenarioConfig, raise_errors: bool = False) -> RunReport:
    """Execute the requested analyses in dependency order.

    Module-level numerical errors are recorded in the report's error list
    unless raise_errors is set; configuration errors always raise.
    """
    cfg.validate()
    report = RunReport(config=cfg)
    for name in cfg.requested_analyses():
        t0 = time.perf_counter()
        try:
            report.results[name] = _ANALYSIS_FUNCS[name](cfg, report)
        except ConfigError:
            raise
        except (
            pencil.EigensolverError,
            stepwell.RootSearchError,
            stepwell.ConvergenceError,
        ) as exc:
            if raise_errors:
                raise
            report.errors.append(f"{name}: {exc}")
            report.results[name] = {"error": str(exc)}
        report.timings[name] = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Artifact writers
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(path: Path, meta: dict, columns, rows) -> None:
    lines = [CSV_HEADER]
    for key in sorted(meta):
        lines.append(f"# {key}: {meta[key]}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_spectrum_csv(path: Path, spec: pencil.Spectrum) -> None:
    g = spec.grid
    rows = (
        (
            j,
            float(spec.mu[j].real),
            float(spec.mu[j].imag),
            float(spec.residuals[j]),
            float(spec.lift_defect[j]),
            str(spec.classification[j]),
        )
        for j in range(len(spec.mu))
    )
    write_csv(
        path,
        {
            "kind": "spectrum",
            "half_length": _fmt(g.half_length),
            "interior_count": g.interior_count,
        },
        ["index", "re_mu", "im_mu", "residual", "lift_defect", "classification"],
        rows,
    )


def _write_regions(out: Path, payload: dict, regions) -> None:
    write_json(
        out / "regions.json",
        {"verdict": payload["verdict"], "regions": payload["regions"]},
    )
    rows = []
    for idx, region in enumerate(regions):
        for p in enclosure.boundary_polyline(region):
            rows.append(
                (idx, region.source, region.side, float(p.real), float(p.imag))
            )
    write_csv(
        out / "regions_boundary.csv",
        {"kind": "region-boundaries"},
        ["region", "source", "side", "re", "im"],
        rows,
    )


def _write_artifacts(out: Path, report: RunReport) -> None:
    if "spectrum" in report.attachments:
        _write_spectrum_csv(out / "spectrum.csv", report.attachments["spectrum"])
    if "regions" in report.attachments and "enclose" in report.results:
        _write_regions(out, report.results["enclose"], report.attachments["regions"])
    if "hs_table" in report.attachments:
        write_csv(
            out / "hs_grid.csv",
            {"kind": "hs-certificate"},
            ["modulus", "phase", "hs_norm"],
            (tuple(float(v) for v in row) for row in report.attachments["hs_table"]),
        )
    if "secular_sweep" in report.attachments:
        write_csv(
            out / "secular_sweep.csv",
            {"kind": "secular-sweep"},
            ["mu", "G"],
            (tuple(float(v) for v in row) for row in report.attachments["secular_sweep"]),
        )
    if "alpha_rows" in report.attachments:
        rows = []
        for r in report.attachments["alpha_rows"]:
            for mu in r["genuine"]:
                rows.append((r["alpha"], mu[0], mu[1]))
        write_csv(
            out / "alpha_sweep.csv",
            {"kind": "alpha-sweep"},
            ["alpha", "re_mu", "im_mu"],
            rows,
        )


def write_report(out: Path, report: RunReport) -> None:
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "report.json", report.to_dict(include_timings=False))
    write_json(out / "timings.json", {"timings": report.timings})
    _write_artifacts(out, report)


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


_OVERRIDES = [
    ("--damping-kind", "damping_kind", str),
    ("--amp", "amp", _parse_amp),
    ("--half-width", "half_width", float),
    ("--b", "half_width", float),
    ("--width", "width", float),
    ("--grid-l", "half_length", float),
    ("--grid-n", "interior_count", int),
    ("--gamma", "gamma", float),
    ("--lt-value", "lt_value", float),
    ("--epsilon", "epsilon", float),
    ("--rule", "rule", str),
    ("--panels", "panels", int),
    ("--truncation-radius", "truncation_radius", float),
    ("--tau-re", "tau_re", float),
    ("--loc-threshold", "loc_threshold", float),
    ("--nyquist-fraction", "nyquist_fraction", float),
    ("--outer-fraction", "outer_fraction", float),
    ("--scan-points", "scan_points", int),
    ("--secular-tol", "secular_tol", float),
    ("--alpha-lo", "alpha_lo", float),
    ("--alpha-hi", "alpha_hi", float),
    ("--alpha-count", "alpha_count", int),
    ("--seed", "seed", int),
    ("--out-dir", "out_dir", str),
]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON scenario file")
    parser.add_argument("--a-re", dest="a_re", type=float, default=None)
    parser.add_argument("--a-im", dest="a_im", type=float, default=None)
    for flag, attr, conv in _OVERRIDES:
        parser.add_argument(flag, dest=attr, type=conv, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specwave",
        description="Spectral analysis of the 1-D damped wave operator",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("enclose", "compute eigenvalue enclosure regions"),
        ("solve", "solve the discretized pencil and classify eigenvalues"),
        ("verify-lt", "check Riesz-sum/trace/count bounds for the potential"),
        ("similarity", "evaluate the similarity certificate"),
        ("step-secular", "real secular roots for a step damping"),
        ("sweep-alpha", "solve across a grid of coupling factors"),
        ("all", "run every applicable analysis and cross-check"),
    ):
        _add_common(sub.add_parser(name, help=text))
    return parser


def apply_overrides(cfg: ScenarioConfig, args: argparse.Namespace) -> ScenarioConfig:
    for _, attr, _ in _OVERRIDES:
        value = getattr(args, attr, None)
        if value is not None:
            cfg = replace(cfg, **{attr: value})
            if attr in ("alpha_lo", "alpha_hi", "alpha_count"):
                cfg = replace(cfg, alpha_values=None)
    a_re = getattr(args, "a_re", None)
    a_im = getattr(args, "a_im", None)
    if a_re is not None or a_im is not None:
        cfg = replace(
            cfg,
            amp=complex(
                a_re if a_re is not None else cfg.amp.real,
                a_im if a_im is not None else cfg.amp.imag,
            ),
        )
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        cfg = apply_overrides(load_config(args.config), args)
        if args.command != "all":
            cfg = replace(cfg, analyses=[args.command])
        elif cfg.analyses is None:
            cfg = replace(cfg, analyses=list(applicable_analyses(cfg)))
        report = run(cfg)
        out = Path(cfg.out_dir)
        write_report(out, report)
    except ConfigError as exc:
        print(f"[specwave] config error: {exc}", file=sys.stderr)
        return 2
    except (
        pencil.EigensolverError,
        stepwell.RootSearchError,
        stepwell.ConvergenceError,
    ) as exc:
        print(f"[specwave] numerical failure: {exc}", file=sys.stderr)
        return 3
    status = "pass" if report.all_pass else "FAIL"
    print(
        f"[specwave] {args.command}: {status} "
        f"({', '.join(sorted(report.results)) or 'nothing run'}) -> {out}"
    )
    for item in report.failures:
        print(f"[specwave]   failed check: {item}")
    for item in report.errors:
        print(f"[specwave]   error: {item}")
    print(f"[specwave] {args.command} took {time.perf_counter() - started:.2f} s")
    if report.errors:
        return 3
    return 0 if not report.failures else 1


if __name__ == "__main__":
    sys.exit(main())
