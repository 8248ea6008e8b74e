"""Graphon kernels and coupled pre/post network sampling.

A network pair is generated by thresholding one shared symmetric matrix of
uniform disturbances against scaled kernel values, so the pre- and
post-intervention graphs are coupled through the same latent variables and
pairwise shocks.
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import ndtr

from .errors import InvalidConfigError, InvalidInputError, InvalidSizeError
from . import rng as streams

__all__ = [
    "GraphonSpec",
    "SparsityRate",
    "DESIGN_NAMES",
    "DESIGN_RANKS",
    "make_design",
    "custom_spec",
    "sample_latents",
    "sample_disturbances",
    "kernel_value",
    "kernel_matrix",
    "generate_network",
]

Kernel2 = Callable[[np.ndarray, np.ndarray], np.ndarray]
Kernel4 = Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], np.ndarray]


def phi(x):
    """Standard normal CDF (erf-based, abs error well below 1e-12)."""
    return ndtr(x)


@dataclass(frozen=True)
class GraphonSpec:
    """Pre/post pair of symmetric link-probability kernels.

    ``pre`` maps broadcastable latent arrays (w_i, w_j) to probabilities;
    ``post`` additionally takes the binary treatments (t_i, t_j).
    Self-pairs are always forced to probability zero by the matrix builders,
    so custom kernels cannot create self-links.
    """

    name: str
    pre: Kernel2
    post: Kernel4
    rank: int | None = None  # nominal low-rank truncation for denoising


# --- the four simulation designs -------------------------------------------

_SBM3_BLOCKS = np.array([
    [3 / 5, 1 / 5, 1 / 5],
    [1 / 5, 1 / 3, 1 / 5],
    [1 / 5, 1 / 5, 1 / 2],
])
_SBM3_EDGES = np.array([1 / 3, 2 / 3])


def _sbm3_lookup(ui, uj):
    bi = np.digitize(ui, _SBM3_EDGES, right=True)
    bj = np.digitize(uj, _SBM3_EDGES, right=True)
    return _SBM3_BLOCKS[bi, bj]


def _sbm3_pre(wi, wj):
    return _sbm3_lookup(phi(wi), phi(wj))


def _sbm3_post(wi, wj, ti, tj):
    return _sbm3_lookup(phi(wi * (1 - ti)), phi(wj * (1 - tj)))


def _homophily2_pre(wi, wj):
    return 1.0 - (phi(wi) - phi(wj)) ** 2


def _homophily2_post(wi, wj, ti, tj):
    return 1.0 - (phi(wi) * (1 - ti) - phi(wj) * (1 - tj)) ** 2


def _beta_pre(wi, wj):
    s = phi(wi) + phi(wj)
    return np.exp(s) / (1.0 + np.exp(s))


def _beta_post(wi, wj, ti, tj):
    s = phi(wi) + phi(wj) + ti + tj + ti * tj
    return np.exp(s) / (1.0 + np.exp(s))


def _homophily4_post(wi, wj, ti, tj):
    return 1.0 - (phi(wi * (1 - ti)) - phi(wj * (1 - tj))) ** 2


_DESIGNS = {
    "sbm3": GraphonSpec("sbm3", _sbm3_pre, _sbm3_post, rank=3),
    "homophily-d2": GraphonSpec("homophily-d2", _homophily2_pre, _homophily2_post, rank=2),
    "beta": GraphonSpec("beta", _beta_pre, _beta_post, rank=2),
    "homophily-d4": GraphonSpec("homophily-d4", _homophily2_pre, _homophily4_post, rank=2),
}

DESIGN_NAMES = tuple(_DESIGNS)
DESIGN_RANKS = {name: spec.rank for name, spec in _DESIGNS.items()}


def make_design(name: str) -> GraphonSpec:
    try:
        return _DESIGNS[name]
    except KeyError:
        raise InvalidConfigError(
            f"unknown design {name!r}; expected one of {sorted(_DESIGNS)}"
        ) from None


def custom_spec(pre: Kernel2, post: Kernel4, rank: int | None = None) -> GraphonSpec:
    return GraphonSpec("custom", pre, post, rank=rank)


# --- sparsity schedules -----------------------------------------------------


@dataclass(frozen=True)
class SparsityRate:
    """Scale factor q(n) on link probabilities.

    Forms: ``power`` is n**exponent with exponent <= 0, ``loglog`` is
    log(n)/log(log(n))/n, ``const`` is a fixed value in (0, 1].
    """

    form: str
    param: float = 0.0

    @classmethod
    def power_of_n(cls, exponent: float) -> "SparsityRate":
        if exponent > 0:
            raise InvalidConfigError("sparsity exponent must be <= 0")
        return cls("power", float(exponent))

    @classmethod
    def log_over_loglog(cls) -> "SparsityRate":
        return cls("loglog")

    @classmethod
    def constant(cls, value: float) -> "SparsityRate":
        if not 0 < value <= 1:
            raise InvalidConfigError("constant sparsity must lie in (0, 1]")
        return cls("const", float(value))

    @classmethod
    def parse(cls, text: str) -> "SparsityRate":
        """Parse CLI forms: 'n^-0.5', 'loglog', 'const:0.3'."""
        text = text.strip()
        if text == "loglog":
            return cls.log_over_loglog()
        if text.startswith("const:"):
            return cls.constant(float(text.split(":", 1)[1]))
        if text.startswith("n^"):
            return cls.power_of_n(float(text[2:]))
        raise InvalidConfigError(f"cannot parse sparsity rate {text!r}")

    def rate(self, n: int) -> float:
        if n < 2:
            raise InvalidSizeError("sparsity rate requires n >= 2")
        if self.form == "power":
            return float(n) ** self.param
        if self.form == "loglog":
            q = np.log(n) / np.log(np.log(n)) / n
            return float(min(q, 1.0))
        if self.form == "const":
            return self.param
        raise InvalidConfigError(f"unknown sparsity form {self.form!r}")

    def label(self) -> str:
        if self.form == "power":
            return f"n^{self.param:g}"
        if self.form == "loglog":
            return "loglog"
        return f"const:{self.param:g}"


# --- sampling ---------------------------------------------------------------


def sample_latents(n: int, seed: int, dist="normal", rep: int = 0) -> np.ndarray:
    """Draw n i.i.d. latent variables.

    ``dist`` may be 'normal', ('point', value), or a callable (rng, n) -> array.
    """
    if n < 2:
        raise InvalidSizeError("need n >= 2 units")
    gen = streams.stream(seed, rep, streams.LATENTS)
    if dist == "normal":
        return gen.standard_normal(n)
    if isinstance(dist, tuple) and dist[0] == "point":
        return np.full(n, float(dist[1]))
    if callable(dist):
        w = np.asarray(dist(gen, n), dtype=float)
        if w.shape != (n,):
            raise InvalidInputError("latent distribution returned wrong shape")
        return w
    raise InvalidConfigError(f"unknown latent distribution {dist!r}")


def sample_disturbances(n: int, seed: int, rep: int = 0) -> np.ndarray:
    """Symmetric n x n matrix with i.i.d. U[0,1] strict upper triangle.

    The diagonal is set to 1 so the zero-diagonal of adjacency matrices never
    depends on the kernel value there.
    """
    if n < 2:
        raise InvalidSizeError("need n >= 2 units")
    gen = streams.stream(seed, rep, streams.DISTURBANCES)
    eta = np.ones((n, n))
    iu = np.triu_indices(n, k=1)
    eta[iu] = gen.random(iu[0].size)
    eta.T[iu] = eta[iu]
    return eta


def kernel_value(spec: GraphonSpec, phase: str, w_i, w_j, t_i=0, t_j=0):
    """Evaluate one kernel for a distinct pair; diagonal handling lives in
    :func:`kernel_matrix`."""
    if phase == "pre":
        out = spec.pre(np.asarray(w_i), np.asarray(w_j))
    elif phase == "post":
        out = spec.post(np.asarray(w_i), np.asarray(w_j), np.asarray(t_i), np.asarray(t_j))
    else:
        raise InvalidConfigError(f"phase must be 'pre' or 'post', got {phase!r}")
    return out


def kernel_matrix(spec: GraphonSpec, phase: str, w: np.ndarray,
                  t: np.ndarray | None = None) -> np.ndarray:
    """n x n matrix of link probabilities with a hard-zero diagonal."""
    w = np.asarray(w, dtype=float)
    if phase == "post":
        if t is None:
            raise InvalidInputError("post-phase kernel requires treatments")
        t = np.asarray(t)
        if t.shape != w.shape:
            raise InvalidInputError("treatments and latents must have equal length")
        k = kernel_value(spec, "post", w[:, None], w[None, :], t[:, None], t[None, :])
    else:
        k = kernel_value(spec, "pre", w[:, None], w[None, :])
    k = np.asarray(k, dtype=float)
    if k.min() < -1e-12 or k.max() > 1 + 1e-12:
        raise InvalidConfigError("kernel values must lie in [0, 1]")
    np.fill_diagonal(k, 0.0)
    return np.clip(k, 0.0, 1.0)


def generate_network(spec: GraphonSpec, phase: str, q: SparsityRate,
                     latents: np.ndarray, treatments: np.ndarray | None,
                     eta: np.ndarray) -> np.ndarray:
    """Threshold shared disturbances against q(n) times the kernel.

    Returns a symmetric binary int8 matrix with zero diagonal. Raising q(n)
    with everything else fixed can only add edges.
    """
    w = np.asarray(latents, dtype=float)
    n = w.size
    if eta.shape != (n, n):
        raise InvalidInputError("disturbance matrix has wrong shape")
    if phase == "post" and treatments is None:
        raise InvalidInputError("post-phase generation requires treatments")
    k = kernel_matrix(spec, phase, w, treatments if phase == "post" else None)
    qn = q.rate(n)
    a = np.triu(eta <= qn * k, k=1).astype(np.int8)
    return a + a.T


def degrees(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).sum(axis=1)
