"""Partially linear outcome generation and oracle values for the estimands."""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidConfigError, InvalidInputError
from .graphs import GraphonSpec, SparsityRate, sample_disturbances, sample_latents
from . import rng as streams


def lambda_zero(w):
    return np.zeros_like(w)


def lambda_half_w(w):
    return w / 2.0


_LAMBDAS = {"zero": lambda_zero, "half-w": lambda_half_w}


@dataclass(frozen=True)
class OutcomeModel:
    """Y_i = beta0 + beta1 T_i + beta2 M_i + lam(w_i) + noise_i."""

    beta0: float = 1.0
    beta1: float = 1.0
    beta2: float = 0.5
    lam: Callable[[np.ndarray], np.ndarray] = lambda_zero
    noise_low: float = -1.0
    noise_high: float = 1.0
    noise_scale: float = 1.0

    @classmethod
    def exogenous(cls) -> "OutcomeModel":
        """No confounding: lam = 0, noise U[-1, 1]."""
        return cls()

    @classmethod
    def endogenous(cls) -> "OutcomeModel":
        """Confounded error u_i = (w_i + eps_i)/2 with eps ~ U[-1, 1]."""
        return cls(lam=lambda_half_w, noise_scale=0.5)

    @classmethod
    def from_name(cls, name: str, beta0=1.0, beta1=1.0, beta2=0.5,
                  lam: str | None = None) -> "OutcomeModel":
        if name == "exogenous":
            base = cls.exogenous()
        elif name == "endogenous":
            base = cls.endogenous()
        else:
            raise InvalidConfigError(f"unknown dgp {name!r}")
        lam_fn = _LAMBDAS[lam] if lam is not None else base.lam
        return cls(beta0, beta1, beta2, lam_fn, base.noise_low, base.noise_high,
                   base.noise_scale)

    def beta(self) -> np.ndarray:
        return np.array([self.beta0, self.beta1, self.beta2])

    def draw_noise(self, n: int, gen: np.random.Generator) -> np.ndarray:
        eps = gen.uniform(self.noise_low, self.noise_high, n)
        return self.noise_scale * eps


@dataclass(frozen=True)
class Estimands:
    toe: float
    de: float
    ie: float
    se: float

    def as_dict(self):
        return {"toe": self.toe, "de": self.de, "ie": self.ie, "se": self.se}


def generate_outcomes(model: OutcomeModel, t, m, w, seed: int, rep: int = 0) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    m = np.asarray(m, dtype=float)
    w = np.asarray(w, dtype=float)
    if not (t.shape == m.shape == w.shape):
        raise InvalidInputError("t, m, w must share one length")
    gen = streams.stream(seed, rep, streams.NOISE)
    eps = model.draw_noise(t.size, gen)
    return model.beta0 + model.beta1 * t + model.beta2 * m + model.lam(w) + eps


def _mediator_contrast_once(spec: GraphonSpec, qn: float, w, t, eta) -> float:
    """Mean over units of M_i with own treatment forced to 1 minus forced to 0.

    Toggling unit i's treatment changes only its incident edges, so row i of
    each counterfactual post network is rebuilt against the same disturbances.
    """
    wi, wj = w[:, None], w[None, :]
    tj = np.asarray(t)[None, :]
    diffs = []
    for own in (1.0, 0.0):
        k = spec.post(wi, wj, np.full_like(wi, own), tj)
        a = (eta <= qn * np.asarray(k, dtype=float))
        np.fill_diagonal(a, False)
        deg = a.sum(axis=1)
        num = a @ np.asarray(t, dtype=float)
        diffs.append(np.divide(num, deg, out=np.zeros(w.size), where=deg > 0))
    m1, m0 = diffs
    return float(np.mean(m1 - m0))


def true_effects_oracle(spec: GraphonSpec, q: SparsityRate, model: OutcomeModel,
                        n: int, reps: int, pi: float = 0.5, seed: int = 0,
                        return_mc_error: bool = False):
    """Estimands under the linear model with the fraction mediator.

    DE and SE are analytic (beta1 and beta2). IE is beta2 times the Monte
    Carlo estimate of E[M | own treatment 1] - E[M | own treatment 0], from
    toggling each unit's own treatment while reusing the shared disturbances.
    """
    if reps < 200:
        raise InvalidConfigError("need at least 200 oracle replications")
    qn = q.rate(n)
    contrasts = np.empty(reps)
    for r in range(reps):
        w = sample_latents(n, seed, rep=r)
        eta = sample_disturbances(n, seed, rep=r)
        gen = streams.stream(seed, r, streams.TREATMENTS)
        t = (gen.random(n) < pi).astype(float)
        contrasts[r] = _mediator_contrast_once(spec, qn, w, t, eta)
    ie = model.beta2 * float(contrasts.mean())
    est = Estimands(toe=model.beta1 + ie, de=model.beta1, ie=ie, se=model.beta2)
    if return_mc_error:
        mc = abs(model.beta2) * float(contrasts.std(ddof=1) / np.sqrt(reps))
        return est, mc
    return est
