"""Point estimators: OLS, shift-share IV, normalized IV, and denoised IV.

The shift-share instrument combines others' centered treatments with
pre-intervention links; the denoised variant removes the projection onto the
leading eigenvectors of the pre-intervention adjacency matrix, which carry
the latent-variable information that otherwise adds noise to the instrument.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse.linalg as sla

from .errors import (InvalidConfigError, InvalidInputError, NumericFailureError,
                     SingularDesignError, UndefinedContrastError,
                     WeakInstrumentError)
from .mediators import fraction_treated
from .outcomes import Estimands

_COLUMN_NAMES = ("intercept", "treatment", "mediator")

ESTIMATOR_NAMES = ("ols", "ols-pre", "ssiv", "normalized-ssiv", "denoised-ssiv")


def design_matrix(t, m) -> np.ndarray:
    """Stack (1, T, M) into an n x 3 design."""
    t = np.asarray(t, dtype=float)
    m = np.asarray(m, dtype=float)
    if t.shape != m.shape:
        raise InvalidInputError("treatment and mediator lengths disagree")
    if not np.isin(t, (0.0, 1.0)).all():
        raise InvalidInputError("treatment column must be binary")
    return np.column_stack([np.ones_like(t), t, m])


@dataclass(frozen=True)
class InstrumentVector:
    z: np.ndarray
    kind: str  # ssiv | normalized | denoised
    pi: float | None = None
    rank_used: int | None = None


@dataclass(frozen=True)
class FitResult:
    beta: np.ndarray  # (beta0, beta1, beta2)
    residuals: np.ndarray
    estimator: str
    cond: float
    instrument: InstrumentVector | None = None

    @property
    def beta0(self):
        return float(self.beta[0])

    @property
    def beta1(self):
        return float(self.beta[1])

    @property
    def beta2(self):
        return float(self.beta[2])


@dataclass(frozen=True)
class EigenBasis:
    """Top eigenpairs of a symmetric adjacency matrix, by algebraic value.

    Columns of ``vectors`` are unit norm with the first nonzero entry made
    positive, so decompositions are deterministic.
    """

    values: np.ndarray  # descending
    vectors: np.ndarray  # n x k, orthonormal columns

    @property
    def k(self) -> int:
        return self.values.size


def _check_full_rank(x: np.ndarray):
    for j in (1, 2):
        if np.ptp(x[:, j]) < 1e-12:
            raise SingularDesignError(_COLUMN_NAMES[j])


def ols_fit(x: np.ndarray, y) -> FitResult:
    """Least squares via the pivoted solve of the normal equations."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    _check_full_rank(x)
    gram = x.T @ x
    cond = float(np.linalg.cond(gram))
    try:
        beta = np.linalg.solve(gram, x.T @ y)
    except np.linalg.LinAlgError as exc:
        raise SingularDesignError("mediator", str(exc)) from exc
    return FitResult(beta=beta, residuals=y - x @ beta, estimator="ols", cond=cond)


def ols_fit_pre_network(a_pre: np.ndarray, t, y) -> FitResult:
    """OLS with the mediator computed from the pre-intervention network.

    Kept for omitted-variable-bias demonstrations: its treatment coefficient
    targets the total effect, not the direct effect.
    """
    m_pre = fraction_treated(a_pre, t)
    fit = ols_fit(design_matrix(t, m_pre), y)
    return FitResult(beta=fit.beta, residuals=fit.residuals,
                     estimator="ols-pre", cond=fit.cond)


def build_ssiv(a_pre: np.ndarray, t, pi: float) -> InstrumentVector:
    """z_i = sum_j a_pre[i, j] (t_j - pi)."""
    if not 0 < pi < 1:
        raise InvalidConfigError("pi must lie in (0, 1)")
    t = np.asarray(t, dtype=float)
    z = np.asarray(a_pre, dtype=float) @ (t - pi)
    return InstrumentVector(z=z, kind="ssiv", pi=pi)


def build_normalized_ssiv(a_pre: np.ndarray, t) -> InstrumentVector:
    """Fraction of treated pre-intervention friends, 0/0 -> 0."""
    return InstrumentVector(z=fraction_treated(a_pre, t), kind="normalized")


def eigendecompose(a: np.ndarray, k: int) -> EigenBasis:
    """Top-k eigenpairs of a symmetric matrix, sorted descending.

    Full decomposition for small problems or large k; Lanczos iteration with
    a deterministic start vector otherwise. Both paths agree to 1e-8.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise InvalidInputError("adjacency must be square")
    if not (1 <= k <= n):
        raise InvalidConfigError(f"truncation k={k} out of range [1, {n}]")
    if n <= 512 or k > n // 4:
        vals, vecs = np.linalg.eigh(a)
        order = np.argsort(vals)[::-1][:k]
        vals, vecs = vals[order], vecs[:, order]
    else:
        try:
            vals, vecs = sla.eigsh(a, k=k, which="LA", v0=np.ones(n) / np.sqrt(n))
        except sla.ArpackNoConvergence as exc:
            raise NumericFailureError(
                f"eigensolver did not converge: {len(exc.eigenvalues)} of {k} "
                f"eigenpairs found") from exc
        order = np.argsort(vals)[::-1]
        vals, vecs = vals[order], vecs[:, order]
    # sign convention: first entry of non-negligible magnitude made positive
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12 * np.abs(col).max())
        if nz.size and col[nz[0]] < 0:
            vecs[:, j] = -col
    return EigenBasis(values=vals, vectors=vecs)


def select_rank(basis: EigenBasis, r_user: int | None = None, r_max: int = 8) -> int:
    """User-supplied rank, or the largest relative eigen-gap among the leading
    eigenvalues; ties resolve to the smaller rank."""
    if basis.k == 0:
        raise InvalidConfigError("empty eigenbasis")
    if r_user is not None:
        if not 1 <= r_user <= basis.values.size:
            raise InvalidConfigError(f"rank {r_user} exceeds basis size {basis.k}")
        return int(r_user)
    vals = basis.values
    top = float(np.abs(vals[0]))
    limit = min(r_max, vals.size - 1)
    if limit < 1 or top <= 0:
        return 1
    gaps = (vals[:limit] - vals[1:limit + 1]) / top
    if np.ptp(gaps) < 1e-12 and gaps.max() < 1e-12:
        warnings.warn("degenerate eigen-gap: all leading eigenvalues equal; using rank 1")
        return 1
    return int(np.argmax(gaps)) + 1  # argmax takes the first (smallest r) on ties


def build_denoised_ssiv(a_pre: np.ndarray, t, pi: float, r: int,
                        basis: EigenBasis | None = None) -> InstrumentVector:
    """Residual of the shift-share instrument after projecting out the top-r
    eigenvectors of the pre-intervention adjacency matrix."""
    if r < 1:
        raise InvalidConfigError("rank must be >= 1")
    ssiv = build_ssiv(a_pre, t, pi)
    if basis is None or basis.k < r:
        basis = eigendecompose(a_pre, r)
    psi = basis.vectors[:, :r]
    gamma = psi.T @ ssiv.z
    z = ssiv.z - psi @ gamma
    return InstrumentVector(z=z, kind="denoised", pi=pi, rank_used=int(r))


def _first_stage_diagnostics(z: np.ndarray, m: np.ndarray) -> dict:
    zc = z - z.mean()
    mc = m - m.mean()
    denom = float(zc @ zc)
    if denom <= 0:
        return {"first_stage_coef": 0.0, "first_stage_f": 0.0}
    coef = float(zc @ mc) / denom
    resid = mc - coef * zc
    dof = max(z.size - 2, 1)
    s2 = float(resid @ resid) / dof
    f = coef ** 2 * denom / s2 if s2 > 0 else np.inf
    return {"first_stage_coef": coef, "first_stage_f": f}


def iv_fit(x: np.ndarray, z_matrix: np.ndarray, y,
           instrument: InstrumentVector | None = None) -> FitResult:
    """Just-identified IV: solve (Z'X) beta = Z'Y."""
    x = np.asarray(x, dtype=float)
    z = np.asarray(z_matrix, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != z.shape:
        raise InvalidInputError("instrument and design matrices must match in shape")
    _check_full_rank(x)
    zx = z.T @ x
    cond = float(np.linalg.cond(zx))
    if not np.isfinite(cond) or 1.0 / cond < 1e-12:
        raise WeakInstrumentError(
            f"Z'X is numerically singular (condition number {cond:.3e})",
            diagnostics=_first_stage_diagnostics(z[:, 2], x[:, 2]))
    beta = np.linalg.solve(zx, z.T @ y)
    kind = instrument.kind if instrument is not None else "iv"
    return FitResult(beta=beta, residuals=y - x @ beta,
                     estimator={"ssiv": "ssiv", "normalized": "normalized-ssiv",
                                "denoised": "denoised-ssiv"}.get(kind, "iv"),
                     cond=cond, instrument=instrument)


def effects_from_fit(fit: FitResult, t, m) -> Estimands:
    """Plug-in estimands for the fraction mediator: DE = b1, SE = b2,
    IE = b2 * (mean M among treated - mean M among control)."""
    t = np.asarray(t)
    m = np.asarray(m, dtype=float)
    treated = t == 1
    if treated.all() or not treated.any():
        raise UndefinedContrastError("one treatment arm is empty")
    contrast = float(m[treated].mean() - m[~treated].mean())
    ie = fit.beta2 * contrast
    return Estimands(toe=fit.beta1 + ie, de=fit.beta1, ie=ie, se=fit.beta2)
