"""Covariance estimators, standard errors, and confidence intervals.

OLS uses the usual heteroskedasticity-consistent sandwich. The shift-share
IV estimator needs extra terms for the dependence the instrument induces
across units through shared pre-intervention links; the denoised variant
first strips the residual components aligned with the leading eigenvectors.
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from .errors import InvalidConfigError
from .estimators import EigenBasis, FitResult


@dataclass(frozen=True)
class CovarianceEstimate:
    v: np.ndarray  # 3x3
    flavor: str  # hc_ols | ssiv | denoised | naive_hc_iv

    @property
    def se(self) -> np.ndarray:
        return np.sqrt(np.clip(np.diag(self.v), 0.0, None))


def hc_variance(x: np.ndarray, residuals) -> CovarianceEstimate:
    """(X'X)^-1 X' diag(u^2) X (X'X)^-1."""
    x = np.asarray(x, dtype=float)
    u = np.asarray(residuals, dtype=float)
    bread = np.linalg.inv(x.T @ x)
    meat = (x * (u ** 2)[:, None]).T @ x
    v = bread @ meat @ bread
    return CovarianceEstimate(v=0.5 * (v + v.T), flavor="hc_ols")


def _iv_bread(z_matrix: np.ndarray, x: np.ndarray) -> np.ndarray:
    return np.linalg.inv(np.asarray(z_matrix, float).T @ np.asarray(x, float))


def ssiv_variance(a_pre: np.ndarray, z_matrix: np.ndarray, x: np.ndarray,
                  residuals, pi: float) -> CovarianceEstimate:
    """Dependence-aware covariance for the shift-share IV fit.

    The middle matrix has Sum u^2 and pi Sum u^2 in the intercept/treatment
    block, a network cross term pi(1-pi) u'Au in the treatment-instrument
    cell, and pi(1-pi) ||Au||^2 in the instrument cell.
    """
    a = np.asarray(a_pre, dtype=float)
    u = np.asarray(residuals, dtype=float)
    s_u2 = float(u @ u)
    au = a @ u
    cross = float(u @ au)  # sum_ij a[i,j] u_i u_j
    quad = float(au @ au)  # sum_i (sum_j a[i,j] u_j)^2
    c = pi * (1 - pi)
    num = np.array([
        [s_u2, pi * s_u2, 0.0],
        [pi * s_u2, pi * s_u2, c * cross],
        [0.0, c * cross, c * quad],
    ])
    bread = _iv_bread(z_matrix, x)
    v = bread @ num @ bread.T
    return CovarianceEstimate(v=0.5 * (v + v.T), flavor="ssiv")


def denoised_residual_split(residuals, basis: EigenBasis, r: int):
    """Project residuals onto the top-r eigenvectors; return (mu_hat, eta_hat)
    with eta_hat the component orthogonal to the retained eigenvectors."""
    u = np.asarray(residuals, dtype=float)
    psi = basis.vectors[:, :r]
    mu = psi.T @ u
    eta = u - psi @ mu
    return mu, eta


def denoised_variance(a_pre: np.ndarray, basis: EigenBasis, r: int,
                      z_matrix: np.ndarray, x: np.ndarray, residuals,
                      pi: float) -> CovarianceEstimate:
    """Covariance for the denoised-instrument IV fit.

    Off-diagonal network terms vanish by construction; the instrument cell
    keeps only the diagonal component pi(1-pi) sum_ij a[i,j] eta_i^2 built
    from the eigenvector-projected residuals.
    """
    a = np.asarray(a_pre, dtype=float)
    u = np.asarray(residuals, dtype=float)
    _, eta = denoised_residual_split(u, basis, r)
    s_u2 = float(u @ u)
    deg = a.sum(axis=1)
    quad = float(deg @ (eta ** 2))  # sum_ij a[i,j] eta_i^2
    c = pi * (1 - pi)
    num = np.array([
        [s_u2, pi * s_u2, 0.0],
        [pi * s_u2, pi * s_u2, 0.0],
        [0.0, 0.0, c * quad],
    ])
    bread = _iv_bread(z_matrix, x)
    v = bread @ num @ bread.T
    return CovarianceEstimate(v=0.5 * (v + v.T), flavor="denoised")


def naive_hc_iv_variance(z_matrix: np.ndarray, x: np.ndarray,
                         residuals) -> CovarianceEstimate:
    """The i.i.d.-style HC covariance for an IV fit.

    Ignores the cross-unit dependence of the shift-share instrument; provided
    only to demonstrate its miscoverage.
    """
    z = np.asarray(z_matrix, dtype=float)
    u = np.asarray(residuals, dtype=float)
    meat = (z * (u ** 2)[:, None]).T @ z
    bread = _iv_bread(z_matrix, x)
    v = bread @ meat @ bread.T
    return CovarianceEstimate(v=0.5 * (v + v.T), flavor="naive_hc_iv")


def confidence_interval(fit: FitResult, cov: CovarianceEstimate,
                        level: float = 0.95) -> np.ndarray:
    """Per-coefficient normal intervals as a 3x2 array of (low, high)."""
    if not 0 < level < 1:
        raise InvalidConfigError("level must lie in (0, 1)")
    zcrit = norm.ppf(0.5 + level / 2)
    half = zcrit * cov.se
    return np.column_stack([fit.beta - half, fit.beta + half])


def covers(ci: np.ndarray, truth) -> np.ndarray:
    truth = np.asarray(truth, dtype=float)
    return (ci[:, 0] <= truth) & (truth <= ci[:, 1])


def p_values(fit: FitResult, cov: CovarianceEstimate) -> np.ndarray:
    """Two-sided normal p-values; degenerate se maps to p = 1 at beta == 0."""
    se = cov.se
    with np.errstate(divide="ignore", invalid="ignore"):
        zstat = np.where(se > 0, fit.beta / np.where(se > 0, se, 1.0), np.inf * np.sign(fit.beta))
    p = 2 * norm.sf(np.abs(zstat))
    return np.where(se > 0, p, np.where(fit.beta == 0, 1.0, 0.0))


def significance_stars(p: float) -> str:
    """Three-level convention: * at 10%, ** at 5%, *** at 1%."""
    if p < 0.01:
        return "***"
    if p < 0.05:
        return "**"
    if p < 0.10:
        return "*"
    return ""
