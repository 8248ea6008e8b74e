"""Replication harness wiring the DGP to the estimators.

One replication draws latents, disturbances, treatments, both networks, the
mediator, and outcomes, then runs every requested estimator. Aggregation is
order-insensitive, so parallel and serial execution produce the same report.
"""

import time
from dataclasses import dataclass, field, replace

import numpy as np
from joblib import Parallel, delayed

from .errors import (AggregateFailureError, InvalidConfigError,
                     NumericFailureError, SingularDesignError,
                     WeakInstrumentError)
from .estimators import (build_denoised_ssiv, build_normalized_ssiv, build_ssiv,
                         design_matrix, eigendecompose, iv_fit, ols_fit,
                         ols_fit_pre_network, select_rank, ESTIMATOR_NAMES)
from .graphs import (SparsityRate, generate_network, make_design,
                     sample_disturbances, sample_latents)
from .mediators import fraction_treated
from .outcomes import OutcomeModel, generate_outcomes
from .variance import (confidence_interval, covers, denoised_variance,
                       hc_variance, naive_hc_iv_variance, ssiv_variance)
from . import rng as streams

COEF_NAMES = ("beta0", "beta1", "beta2")


@dataclass(frozen=True)
class SimConfig:
    design: object = "sbm3"  # design name, or a GraphonSpec for custom kernels
    n: int = 200
    q_pre: SparsityRate = field(default_factory=lambda: SparsityRate.power_of_n(-0.5))
    q_post: SparsityRate | None = None  # defaults to q_pre
    dgp: str = "exogenous"
    estimators: tuple = ("ols",)
    reps: int = 1000
    seed: int = 0
    pi: float = 0.5
    rank: int | str | None = None  # None -> design default; "auto" -> gap heuristic
    level: float = 0.95
    variance: str | None = None  # "naive-hc" overrides the IV covariance

    def __post_init__(self):
        if self.reps < 1:
            raise InvalidConfigError("reps must be >= 1")
        if not 0 < self.pi < 1:
            raise InvalidConfigError("pi must lie in (0, 1)")
        for est in self.estimators:
            if est not in ESTIMATOR_NAMES:
                raise InvalidConfigError(f"unknown estimator {est!r}")

    @property
    def q_post_effective(self) -> SparsityRate:
        return self.q_post if self.q_post is not None else self.q_pre

    def model(self) -> OutcomeModel:
        return OutcomeModel.from_name(self.dgp)

    def spec(self):
        return make_design(self.design) if isinstance(self.design, str) else self.design

    @property
    def design_name(self) -> str:
        return self.design if isinstance(self.design, str) else self.design.name


def _needs_pre_network(estimators) -> bool:
    return any(e != "ols" for e in estimators)


def _resolve_rank(config: SimConfig, a_pre) -> tuple[int, object]:
    spec_rank = config.spec().rank
    if config.rank == "auto" or (config.rank is None and spec_rank is None):
        basis = eigendecompose(a_pre, min(9, a_pre.shape[0]))
        return select_rank(basis), basis
    r = int(config.rank) if config.rank is not None else int(spec_rank)
    return r, eigendecompose(a_pre, r)


def run_replication(config: SimConfig, rep_index: int) -> dict:
    """One full draw plus all requested fits; deterministic in (seed, rep_index)."""
    spec = config.spec()
    model = config.model()
    n, seed = config.n, config.seed
    w = sample_latents(n, seed, rep=rep_index)
    eta = sample_disturbances(n, seed, rep=rep_index)
    gen = streams.stream(seed, rep_index, streams.TREATMENTS)
    t = (gen.random(n) < config.pi).astype(float)
    a_post = generate_network(spec, "post", config.q_post_effective, w, t, eta)
    m = fraction_treated(a_post, t)
    y = generate_outcomes(model, t, m, w, seed, rep=rep_index)
    x = design_matrix(t, m)
    truth = model.beta()

    record = {
        "rep": rep_index,
        "mediator_mean": float(m.mean()),
        "mediator_std": float(m.std()),
        "fits": {},
        "errors": {},
    }

    a_pre = None
    if _needs_pre_network(config.estimators):
        a_pre = generate_network(spec, "pre", config.q_pre, w, None, eta)
    basis = None
    rank = None
    if "denoised-ssiv" in config.estimators:
        rank, basis = _resolve_rank(config, a_pre)

    for est in config.estimators:
        try:
            if est == "ols":
                fit = ols_fit(x, y)
                cov = hc_variance(x, fit.residuals)
            elif est == "ols-pre":
                fit = ols_fit_pre_network(a_pre, t, y)
                x_pre = design_matrix(t, fraction_treated(a_pre, t))
                cov = hc_variance(x_pre, fit.residuals)
            elif est == "ssiv":
                inst = build_ssiv(a_pre, t, config.pi)
                z = design_matrix(t, inst.z)
                fit = iv_fit(x, z, y, inst)
                if config.variance == "naive-hc":
                    cov = naive_hc_iv_variance(z, x, fit.residuals)
                else:
                    cov = ssiv_variance(a_pre, z, x, fit.residuals, config.pi)
            elif est == "normalized-ssiv":
                inst = build_normalized_ssiv(a_pre, t)
                z = design_matrix(t, inst.z)
                fit = iv_fit(x, z, y, inst)
                cov = None  # no distribution theory for this instrument
            elif est == "denoised-ssiv":
                inst = build_denoised_ssiv(a_pre, t, config.pi, rank, basis)
                z = design_matrix(t, inst.z)
                fit = iv_fit(x, z, y, inst)
                if config.variance == "naive-hc":
                    cov = naive_hc_iv_variance(z, x, fit.residuals)
                else:
                    cov = denoised_variance(a_pre, basis, rank, z, x,
                                            fit.residuals, config.pi)
            else:  # pragma: no cover - guarded by SimConfig validation
                raise InvalidConfigError(est)
        except (SingularDesignError, WeakInstrumentError, NumericFailureError) as exc:
            record["errors"][est] = type(exc).__name__
            continue
        entry = {"beta": fit.beta}
        if cov is not None:
            entry["se"] = cov.se
            entry["cover"] = covers(confidence_interval(fit, cov, config.level), truth)
        record["fits"][est] = entry
    return record


@dataclass
class SimulationReport:
    config: SimConfig
    reps: int
    n_failed: dict
    mediator_mean: float
    mediator_std: float
    coef_stats: dict  # estimator -> coef name -> {mean, std, mean_se, coverage}
    elapsed: float

    def rows(self):
        """One row per (estimator, coefficient) cell."""
        out = []
        base = {
            "design": self.config.design_name,
            "n": self.config.n,
            "q_pre": self.config.q_pre.label(),
            "q_post": self.config.q_post_effective.label(),
            "dgp": self.config.dgp,
            "reps": self.reps,
            "mediator_mean": self.mediator_mean,
            "mediator_std": self.mediator_std,
        }
        for est, coefs in self.coef_stats.items():
            for coef, stats in coefs.items():
                row = dict(base)
                row.update({"estimator": est, "coefficient": coef, **stats,
                            "failed": self.n_failed.get(est, 0)})
                out.append(row)
        if not self.coef_stats:
            out.append(base)
        return out


def run_simulation(config: SimConfig, jobs: int = 1) -> SimulationReport:
    """Aggregate `config.reps` replications into a report."""
    t0 = time.perf_counter()
    indices = range(config.reps)
    if jobs != 1:
        records = Parallel(n_jobs=jobs)(
            delayed(run_replication)(config, i) for i in indices)
    else:
        records = [run_replication(config, i) for i in indices]
    records.sort(key=lambda rec: rec["rep"])  # insensitive to execution order

    n_failed = {est: 0 for est in config.estimators}
    for rec in records:
        for est in rec["errors"]:
            n_failed[est] += 1
    for est, bad in n_failed.items():
        if bad == config.reps:
            raise AggregateFailureError(f"all replications failed for {est!r}")
        if bad > max(0.01 * config.reps, 0):
            raise AggregateFailureError(
                f"{bad}/{config.reps} replications failed for {est!r} (limit 1%)")

    coef_stats = {}
    for est in config.estimators:
        ok = [rec["fits"][est] for rec in records if est in rec["fits"]]
        if not ok:
            continue
        betas = np.array([e["beta"] for e in ok])
        has_se = "se" in ok[0]
        if has_se:
            ses = np.array([e["se"] for e in ok])
            cover = np.array([e["cover"] for e in ok])
        coef_stats[est] = {}
        for j, coef in enumerate(COEF_NAMES):
            stats = {
                "mean": float(betas[:, j].mean()),
                "std": float(betas[:, j].std(ddof=1)),
                "mean_se": float(ses[:, j].mean()) if has_se else float("nan"),
                "coverage": float(cover[:, j].mean()) if has_se else float("nan"),
            }
            coef_stats[est][coef] = stats

    return SimulationReport(
        config=config,
        reps=config.reps,
        n_failed=n_failed,
        mediator_mean=float(np.mean([r["mediator_mean"] for r in records])),
        mediator_std=float(np.mean([r["mediator_std"] for r in records])),
        coef_stats=coef_stats,
        elapsed=time.perf_counter() - t0,
    )
