"""
Geometric (Hilbert-Schmidt) discord.

For a two-qubit state with local Bloch vectors x, y and correlation tensor
R, the distance to the closest classical-quantum state is
¼(‖x‖² + ‖R‖² - k_max), where k_max is the top eigenvalue of
K = x·xᵀ + R·Rᵀ. The damped cat states have diagonal K, so the closed form
reduces to picking the largest of three diagonal entries. Which one is
largest depends on the sign of a branch condition in (p, t²).
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import numerics
from .config import get_setting
from .entanglement import concurrence_a_be
from .exceptions import DomainError, PreconditionError

logger = logging.getLogger(__name__)

# Largest p for which two branches coexist along t² (root of 7p² + 2p - 1).
BRANCH_THRESHOLD = (2.0 * math.sqrt(2.0) - 1.0) / 7.0

BLOCH_NORM_SLACK = 1e-10


class GeoBranchLabel(str, enum.Enum):
    SUM_23 = 'sum_23'
    SUM_13 = 'sum_13'


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors x (A), y (B) and correlation tensor R_ij = Tr ρ σi⊗σj."""
    x: np.ndarray
    y: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).reshape(3)
        y = np.asarray(self.y, dtype=float).reshape(3)
        R = np.asarray(self.R, dtype=float).reshape(3, 3)
        if np.linalg.norm(x) > 1.0 + BLOCH_NORM_SLACK or np.linalg.norm(y) > 1.0 + BLOCH_NORM_SLACK:
            raise PreconditionError("local Bloch vectors must have length <= 1")
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)
        object.__setattr__(self, 'R', R)

    def k_matrix(self):
        return np.outer(self.x, self.x) + self.R @ self.R.T

    def to_density_matrix(self):
        rho = np.kron(numerics.IDENTITY2, numerics.IDENTITY2)
        for i, sigma in enumerate(numerics.PAULIS):
            rho = rho + self.x[i] * np.kron(sigma, numerics.IDENTITY2)
            rho = rho + self.y[i] * np.kron(numerics.IDENTITY2, sigma)
            for j, tau in enumerate(numerics.PAULIS):
                rho = rho + self.R[i, j] * np.kron(sigma, tau)
        return 0.25 * rho


@dataclass(frozen=True)
class GeoBranch:
    branch_label: GeoBranchLabel
    lambda1: float
    lambda2: float
    lambda3: float

    @property
    def value(self):
        if self.branch_label is GeoBranchLabel.SUM_23:
            return 0.25 * (self.lambda2 + self.lambda3)
        return 0.25 * (self.lambda1 + self.lambda3)


# --- Bloch representation ---

def bloch_decompose(rho):
    rho = numerics.validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise PreconditionError("bloch_decompose expects a two-qubit (4×4) state")
    x = np.array([np.trace(rho @ np.kron(s, numerics.IDENTITY2)).real for s in numerics.PAULIS])
    y = np.array([np.trace(rho @ np.kron(numerics.IDENTITY2, s)).real for s in numerics.PAULIS])
    R = np.array([
        [np.trace(rho @ np.kron(s, t)).real for t in numerics.PAULIS]
        for s in numerics.PAULIS
    ])
    return BlochForm(x=x, y=y, R=R)


def bloch_ab_closed(params):
    """Closed-form R30, R03 and the diagonal of R for ρ_AB."""
    p, q = params.p, params.q
    denominator = params.half_norm
    r30 = p * (1.0 + q) / denominator
    r03 = (params.c_t + q * p ** (params.r2 + 1.0)) / denominator
    coherence = math.sqrt(max(0.0, (1.0 - p * p) * (1.0 - p ** (2.0 * params.t2))))
    r11 = coherence / denominator
    r22 = -q * params.c_r * coherence / denominator
    r33 = (q * params.c_r + p ** (1.0 + params.t2)) / denominator
    return BlochForm(
        x=np.array([0.0, 0.0, r30]),
        y=np.array([0.0, 0.0, r03]),
        R=np.diag([r11, r22, r33]),
    )


# --- generic evaluation ---

def geo_discord_generic(bloch):
    """¼(k2 + k3) for the descending spectrum k1 ≥ k2 ≥ k3 of K."""
    values = numerics.symmetric_eigen3(bloch.k_matrix()).values
    return max(0.25 * (values[1] + values[2]), 0.0)


def geo_discord_compact(bloch):
    """¼(‖x‖² + ‖R‖²_F - k_max)."""
    k_max = numerics.symmetric_eigen3(bloch.k_matrix()).values[0]
    return 0.25 * (bloch.x @ bloch.x + np.sum(bloch.R ** 2) - k_max)


def kmax_sphere_oracle(bloch, grid=None):
    """
    max eᵀKe over unit vectors e, by a (θ, φ) scan and a simplex polish.

    Independent of the eigensolver: only quadratic-form evaluations.
    """
    n_theta, n_phi = grid or get_setting('SPHERE_GRID')
    k = bloch.k_matrix()
    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    theta_grid, phi_grid = np.meshgrid(thetas, phis, indexing='ij')
    e = numerics.spherical_direction(theta_grid, phi_grid).reshape(-1, 3)
    field = np.einsum('ni,ij,nj->n', e, k, e)
    best = int(np.argmax(field))
    i, j = np.unravel_index(best, (n_theta, n_phi))

    def negative_form(angles):
        direction = numerics.spherical_direction(*angles)
        return -float(direction @ k @ direction)

    result = minimize(
        negative_form, np.array([thetas[i], phis[j]]), method='Nelder-Mead',
        options={'xatol': 1e-12, 'fatol': 1e-15, 'maxiter': 4000},
    )
    return max(float(field[best]), -float(result.fun))


# --- closed forms for the cat state ---

def branch_condition(params):
    """p^{2r²} + p^{2t²} + p²(4q+3) - 1; λ1 ≥ λ2 exactly when this is ≥ 0."""
    p, q = params.p, params.q
    return p ** (2.0 * params.r2) + p ** (2.0 * params.t2) + p * p * (4.0 * q + 3.0) - 1.0


def geo_discord_ab(params):
    p, q = params.p, params.q
    denominator = params.half_norm ** 2
    coherence = (1.0 - p * p) * (1.0 - p ** (2.0 * params.t2))
    # p²·(p^{2t²} + p^{-2t²}) written without negative powers so p = 0 is finite
    lambda1 = (p ** (2.0 + 2.0 * params.t2) + p ** (2.0 * params.r2) + p * p * (4.0 * q + 2.0)) / denominator
    lambda2 = coherence / denominator
    lambda3 = p ** (2.0 * params.r2) * coherence / denominator

    if params.m == 1:
        # odd states always have λ1 ≤ λ2
        label = GeoBranchLabel.SUM_13
    elif branch_condition(params) >= 0.0:
        label = GeoBranchLabel.SUM_23
    else:
        label = GeoBranchLabel.SUM_13
    return GeoBranch(branch_label=label, lambda1=lambda1, lambda2=lambda2, lambda3=lambda3)


def geo_discord_ae(params):
    return geo_discord_ab(params.swapped())


def branch_boundaries(p, m=0):
    """
    The two transmissivities where the m = 0 branch condition changes sign,
    t∓² = ½ + ½·ln[u ± √(u² - 1)]/ln p with u = (1 - 7p²)/(2p).
    """
    if m != 0:
        raise DomainError("branch boundaries exist only for even states (m = 0)")
    if not (0.0 < p < BRANCH_THRESHOLD):
        raise DomainError(
            f"p={p!r} outside the two-branch window (0, {BRANCH_THRESHOLD:.15g})"
        )
    u = (1.0 - 7.0 * p * p) / (2.0 * p)
    root = math.sqrt(max(u * u - 1.0, 0.0))
    log_p = math.log(p)
    t_minus_sq = 0.5 + 0.5 * math.log(u + root) / log_p
    t_plus_sq = 0.5 + 0.5 * math.log(u - root) / log_p
    return t_minus_sq, t_plus_sq


def geo_discord_a_be(params):
    """Closed form as published, ½(1-p)²/(1+p²q)²."""
    return 0.5 * (1.0 - params.p) ** 2 / params.half_norm ** 2


def geo_discord_a_be_exact(params):
    """½·C²(ρ_A|BE), the value the Bloch evaluation of ρ_A|BE gives."""
    return 0.5 * float(concurrence_a_be(params)) ** 2
