"""Run configuration: precision, tolerances, budgets, and seeds.

A single :class:`RunConfig` travels through every numeric entry point so a
run is reproducible from its report alone.  All defaults are calibrated for
128-bit working precision; nothing here is tuned per experiment.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class GBBudget:
    """Caps for a single Groebner basis computation."""

    max_pairs: int = 200_000          # S-pairs processed
    max_degree: int = 120             # total degree of any intermediate polynomial
    timeout_secs: float = 300.0       # wall clock per basis


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 128
    seed: int = 0

    # Numeric tolerances.  tol_sing is relative: a point passes as singular
    # when each residual is below tol_sing_rel() times the evaluation scale
    # (sum of absolute term values) at that point.
    tol_sing_factor: float = 1e-2     # times sqrt(working epsilon)
    tol_node: float = 1e-12           # relative Hessian non-vanishing
    tol_sep: float = 1e-8             # minimal distance between distinct points
    tol_rank: float = 1e-20           # relative pivot threshold at 128 bits

    # Newton multistart for singular-point search on approximate curves.
    newton_box: float = 3.0
    newton_grid: int = 12
    newton_max_iter: int = 60

    # Symbolic budgets.
    gb: GBBudget = field(default_factory=GBBudget)
    symbolic_det_max_size: int = 6    # largest c for a symbolic discriminant
    decide_max_closed: int = 2        # largest l the criterion engine accepts
    decide_max_vars: int = 12         # largest n + 2l the criterion engine accepts

    # Reporting.
    output_format: str = "text"       # "text" | "json"
    include_timings: bool = False     # timings break byte-identical reports

    def eps_work(self) -> float:
        return 2.0 ** (1 - self.precision_bits)

    def tol_sing_rel(self) -> float:
        return self.tol_sing_factor * self.eps_work() ** 0.5

    def with_overrides(self, **kw) -> "RunConfig":
        gb_keys = {k: kw.pop(k) for k in list(kw) if k in ("max_pairs", "max_degree", "timeout_secs")}
        cfg = replace(self, **kw) if kw else self
        if gb_keys:
            cfg = replace(cfg, gb=replace(cfg.gb, **gb_keys))
        return cfg

    def describe(self) -> dict:
        """Flat, deterministic dict of every knob, for report embedding."""
        return {
            "precision_bits": self.precision_bits,
            "seed": self.seed,
            "tol_sing_factor": self.tol_sing_factor,
            "tol_node": self.tol_node,
            "tol_sep": self.tol_sep,
            "tol_rank": self.tol_rank,
            "newton_box": self.newton_box,
            "newton_grid": self.newton_grid,
            "newton_max_iter": self.newton_max_iter,
            "gb_max_pairs": self.gb.max_pairs,
            "gb_max_degree": self.gb.max_degree,
            "gb_timeout_secs": self.gb.timeout_secs,
            "symbolic_det_max_size": self.symbolic_det_max_size,
            "decide_max_closed": self.decide_max_closed,
            "decide_max_vars": self.decide_max_vars,
            "output_format": self.output_format,
        }


DEFAULT = RunConfig()
