"""
Quantum discord of the damped cat state with the measurement on A.

The closed forms use the Koashi-Winter identity: the minimal conditional
entropy of B after measuring A equals the entanglement of formation of the
complementary pair B–E. :func:`discord_numeric` recomputes the same
quantity for an arbitrary two-qubit state by minimising over projective
measurement directions, and is what the closed forms are checked against.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.special import entr

from . import numerics
from .config import get_setting
from .entanglement import concurrence_be, eof_a_be, eof_from_concurrence
from .geodiscord import bloch_decompose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscordBreakdown:
    mutual_information: float
    classical_correlation: float
    discord: float
    s_min: float
    lambda_ab_plus: float
    lambda_a_plus: float
    lambda_b_plus: float


@dataclass(frozen=True)
class ConditionalEntropyMinimum:
    value: float
    direction: np.ndarray
    evaluations: int


# --- closed forms ---

def joint_eigenvalues(params):
    """λ^{AB}± = (1 ± p^{r²}q)(1 ± p^{t²+1}) / (2 + 2p²q)."""
    weight = params.q * params.c_r
    overlap = params.p ** (params.t2 + 1.0)
    plus = (1.0 + weight) * (1.0 + overlap) / params.norm
    minus = (1.0 - weight) * (1.0 - overlap) / params.norm
    return plus, minus


def marginal_eigenvalues(params):
    """
    Spectra of ρ_A and ρ_B.

    λ^A± = ½(1±p)(1±pq)/(1+p²q) and λ^B± = ½(1±p^{t²})(1±p^{r²+1}q)/(1+p²q);
    the B pair carries the normalising denominator 1+p²q.
    """
    p, q = params.p, params.q
    a_plus = 0.5 * (1.0 + p) * (1.0 + p * q) / params.half_norm
    a_minus = 0.5 * (1.0 - p) * (1.0 - p * q) / params.half_norm
    side = params.c_t
    mixed = q * p ** (params.r2 + 1.0)
    b_plus = 0.5 * (1.0 + side) * (1.0 + mixed) / params.half_norm
    b_minus = 0.5 * (1.0 - side) * (1.0 - mixed) / params.half_norm
    return (a_plus, a_minus), (b_plus, b_minus)


def _spectrum_entropy(pair):
    return numerics.binary_entropy(pair[0])


def mutual_information(params):
    (a_pair, b_pair) = marginal_eigenvalues(params)
    return (
        _spectrum_entropy(a_pair)
        + _spectrum_entropy(b_pair)
        - _spectrum_entropy(joint_eigenvalues(params))
    )


def s_min(params):
    """Minimal conditional entropy of B given a measurement on A, = E(ρ_BE)."""
    return eof_from_concurrence(concurrence_be(params))


def classical_correlation(params):
    _, b_pair = marginal_eigenvalues(params)
    return _spectrum_entropy(b_pair) - s_min(params)


def discord_ab(params):
    """D = H(λ^A₊) - H(λ^{AB}₊) + S_min."""
    a_pair, _ = marginal_eigenvalues(params)
    return (
        _spectrum_entropy(a_pair)
        - _spectrum_entropy(joint_eigenvalues(params))
        + s_min(params)
    )


def discord_ae(params):
    return discord_ab(params.swapped())


def discord_a_be(params):
    """A|BE is pure, so discord and entanglement of formation coincide."""
    return eof_a_be(params)


def discord_breakdown(params):
    a_pair, b_pair = marginal_eigenvalues(params)
    return DiscordBreakdown(
        mutual_information=mutual_information(params),
        classical_correlation=classical_correlation(params),
        discord=discord_ab(params),
        s_min=s_min(params),
        lambda_ab_plus=joint_eigenvalues(params)[0],
        lambda_a_plus=a_pair[0],
        lambda_b_plus=b_pair[0],
    )


# --- numerical oracle ---

def _qubit_entropy_from_radius(radius):
    """Entropy of a qubit whose Bloch vector has length ``radius`` (vectorised)."""
    radius = np.clip(radius, 0.0, 1.0)
    up = 0.5 * (1.0 + radius)
    lo = np.minimum(up, 1.0 - up)
    return (entr(lo) + entr(1.0 - lo)) / numerics.LN2


def _conditional_entropy_field(bloch, directions):
    """
    Σ_k p_k S(ρ_{B|k}) for many directions at once.

    Measuring A along n gives p± = (1 ± n·x)/2 and conditional B Bloch
    vectors (y ± Rᵀn)/(1 ± n·x).
    """
    n = np.asarray(directions, dtype=float).reshape(-1, 3)
    projected_x = n @ bloch.x
    pulled_r = n @ bloch.R
    total = np.zeros(n.shape[0])
    for sign in (1.0, -1.0):
        weight = 1.0 + sign * projected_x
        probability = 0.5 * weight
        live = probability >= numerics.ZERO_PROBABILITY
        safe = np.where(live, weight, 1.0)
        conditional = (bloch.y + sign * pulled_r) / safe[:, None]
        entropy = _qubit_entropy_from_radius(np.linalg.norm(conditional, axis=1))
        total += np.where(live, probability * entropy, 0.0)
    return total


def minimize_conditional_entropy(rho, coarse_grid=None, refine_tolerance=None,
                                 restarts=None, seed=None):
    """
    Minimise the post-measurement conditional entropy of B over directions n.

    A (θ, φ) grid of n_theta × n_phi points is scanned first; Nelder-Mead
    then refines from the ``restarts`` best cells, each started at a seeded
    jitter of the cell centre.
    """
    rho = numerics.validate_density_matrix(rho)
    n_theta, n_phi = coarse_grid or get_setting('DISCORD_GRID')
    refine_tolerance = refine_tolerance or get_setting('DISCORD_TOLERANCE')
    restarts = get_setting('DISCORD_RESTARTS') if restarts is None else restarts
    seed = get_setting('DISCORD_SEED') if seed is None else seed

    bloch = bloch_decompose(rho)
    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    theta_grid, phi_grid = np.meshgrid(thetas, phis, indexing='ij')
    field = _conditional_entropy_field(
        bloch, numerics.spherical_direction(theta_grid, phi_grid)
    ).reshape(n_theta, n_phi)

    flat_order = np.argsort(field, axis=None, kind='stable')
    best_index = np.unravel_index(flat_order[0], field.shape)
    best_value = float(field[best_index])
    best_angles = (thetas[best_index[0]], phis[best_index[1]])
    evaluations = field.size

    def objective(angles):
        return float(_conditional_entropy_field(bloch, numerics.spherical_direction(*angles))[0])

    rng = np.random.default_rng(seed)
    spacing = np.array([np.pi / max(n_theta - 1, 1), 2.0 * np.pi / n_phi])
    for rank, flat in enumerate(flat_order[:restarts]):
        i, j = np.unravel_index(flat, field.shape)
        start = np.array([thetas[i], phis[j]]) + rng.uniform(-0.25, 0.25, size=2) * spacing
        result = minimize(
            objective, start, method='Nelder-Mead',
            options={'xatol': 1e-10, 'fatol': refine_tolerance, 'maxiter': 4000},
        )
        evaluations += result.nfev
        logger.debug("restart %d from cell (%d, %d): %.12g", rank, i, j, result.fun)
        if result.fun < best_value:
            best_value = float(result.fun)
            best_angles = tuple(result.x)

    direction = numerics.spherical_direction(*best_angles)
    return ConditionalEntropyMinimum(
        value=max(best_value, 0.0), direction=direction, evaluations=evaluations,
    )


def discord_numeric(rho, coarse_grid=None, refine_tolerance=None):
    """D = S(ρ_A) - S(ρ_AB) + min_n Σ_k p_k S(ρ_{B|k})."""
    rho = numerics.validate_density_matrix(rho)
    minimum = minimize_conditional_entropy(rho, coarse_grid, refine_tolerance)
    entropy_a = numerics.von_neumann_entropy(numerics.partial_trace(rho, numerics.Subsystem.SECOND))
    entropy_ab = numerics.von_neumann_entropy(rho)
    return max(entropy_a - entropy_ab + minimum.value, 0.0)
