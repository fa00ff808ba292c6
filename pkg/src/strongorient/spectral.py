"""Normalized Laplacian spectra and the discrete Cheeger inequality.

The normalized Laplacian is L = I - D^{-1/2} A D^{-1/2}; its eigenvalues lie
in [0, 2] and the second-smallest, lambda_1, controls edge expansion through
2*phi >= lambda_1 >= phi^2/2 and e(X, X-bar) >= (lambda_1/2)*vol(X) for
vol(X) <= vol(G)/2.

Eigenvalues come from numpy's symmetric eigensolver and every decomposition
is verified by reconstruction before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NumericError, SizeLimitError
from .graph import (
    Graph,
    as_subset,
    cheeger_constant_exact,
    edge_boundary,
    is_connected,
    volume,
)

SPECTRUM_MAX_N = 2048
RECONSTRUCT_TOL = 1e-8


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Dense normalized Laplacian I - D^{-1/2} A D^{-1/2}.

    Requires minimum degree >= 1.
    """
    if g.min_degree() < 1:
        raise DomainError("normalized Laplacian needs minimum degree >= 1")
    n = g.n
    inv_sqrt = 1.0 / np.sqrt(np.array(g.deg, dtype=np.float64))
    lap = np.eye(n)
    for u, v in g.edges:
        w = inv_sqrt[u] * inv_sqrt[v]
        lap[u, v] -= w
        lap[v, u] -= w
    return lap


@dataclass(frozen=True)
class SpectrumReport:
    """Full normalized-Laplacian spectrum with its summary statistics."""

    n: int
    m: int
    eigenvalues: tuple[float, ...]
    lambda1: float
    sigma: float
    lambda_max: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "eigenvalues": list(self.eigenvalues),
            "lambda1": self.lambda1,
            "sigma": self.sigma,
            "lambda_max": self.lambda_max,
        }


def spectrum(g: Graph) -> SpectrumReport:
    """Eigenvalues of the normalized Laplacian, ascending.

    lambda1 is the second smallest; sigma = max over i >= 1 of |1 - lambda_i|.
    Guards: 2 <= n <= 2048, minimum degree >= 1.  The decomposition is
    verified by reconstructing the matrix to within 1e-8.
    """
    if g.n < 2:
        raise DomainError("spectrum needs at least two vertices")
    if g.n > SPECTRUM_MAX_N:
        raise SizeLimitError(
            f"dense spectrum limited to n <= {SPECTRUM_MAX_N}, got n={g.n}"
        )
    lap = normalized_laplacian(g)
    try:
        evals, evecs = np.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed to converge: {exc}") from None
    residual = np.abs(lap - (evecs * evals) @ evecs.T).max()
    if residual > RECONSTRUCT_TOL:
        raise NumericError(
            f"eigendecomposition residual {residual:.3e} above {RECONSTRUCT_TOL}"
        )
    ev = tuple(float(x) for x in evals)
    return SpectrumReport(
        n=g.n,
        m=g.m,
        eigenvalues=ev,
        lambda1=ev[1],
        sigma=max(abs(1.0 - x) for x in ev[1:]),
        lambda_max=ev[-1],
    )


@dataclass(frozen=True)
class CheegerInequalityReport:
    """Both sides of 2*phi >= lambda_1 >= phi^2/2 with slacks."""

    n: int
    phi: Fraction
    lambda1: float
    slack_upper: float  # 2*phi - lambda1
    slack_lower: float  # lambda1 - phi^2/2
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "phi_num": self.phi.numerator,
            "phi_den": self.phi.denominator,
            "phi": float(self.phi),
            "lambda1": self.lambda1,
            "slack_upper": self.slack_upper,
            "slack_lower": self.slack_lower,
            "holds": self.holds,
        }


def check_cheeger_inequality(
    g: Graph, phi: Fraction | None = None, tol: float = 1e-9
) -> CheegerInequalityReport:
    """Evaluate the two-sided Cheeger inequality on one graph.

    phi defaults to the exact Cheeger constant (n <= 24 scan).
    """
    if phi is None:
        phi = cheeger_constant_exact(g).phi
    lam1 = spectrum(g).lambda1
    phi_f = float(phi)
    slack_upper = 2.0 * phi_f - lam1
    slack_lower = lam1 - phi_f * phi_f / 2.0
    return CheegerInequalityReport(
        n=g.n,
        phi=phi,
        lambda1=lam1,
        slack_upper=slack_upper,
        slack_lower=slack_lower,
        holds=slack_upper >= -tol and slack_lower >= -tol,
    )


@dataclass(frozen=True)
class ExpansionBoundReport:
    """One subset's edge boundary against its spectral lower bound."""

    boundary: int
    vol_x: int
    lambda1: float
    bound: float  # (lambda1/2) * vol_x
    slack: float

    def to_json_dict(self) -> dict:
        return {
            "boundary": self.boundary,
            "vol_x": self.vol_x,
            "lambda1": self.lambda1,
            "bound": self.bound,
            "slack": self.slack,
        }


def edge_expansion_bound_check(
    g: Graph, x, lambda1: float | None = None
) -> ExpansionBoundReport:
    """Check e(X, X-bar) >= (lambda_1/2) * vol(X) for vol(X) <= vol(G)/2.

    The boundary case vol(X) = vol(G)/2 is accepted.  A connected graph is
    required so that lambda_1 is the meaningful expansion eigenvalue.
    """
    s = as_subset(g, x)
    if s.mask == 0 or s.mask == (1 << g.n) - 1:
        raise DomainError("expansion bound needs a nonempty proper subset")
    if not is_connected(g):
        raise DomainError("expansion bound needs a connected graph")
    vol_x = volume(g, s)
    if 2 * vol_x > 2 * g.m:
        raise DomainError(
            "expansion bound applies to the smaller side: vol(x) <= vol(G)/2"
        )
    if lambda1 is None:
        lambda1 = spectrum(g).lambda1
    boundary = edge_boundary(g, s)
    bound = lambda1 / 2.0 * vol_x
    return ExpansionBoundReport(
        boundary=boundary,
        vol_x=vol_x,
        lambda1=lambda1,
        bound=bound,
        slack=boundary - bound,
    )
