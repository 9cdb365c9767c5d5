"""
Small dense linear algebra and entropy primitives.

Everything here works on 2×2, 3×3 and 4×4 matrices. No physics of the
cat-state model lives in this module; the closed forms sit in the modules
that use it, and these routines are the independent side they are checked
against.
"""

import enum
import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from .exceptions import DomainError, PreconditionError

logger = logging.getLogger(__name__)

LN2 = np.log(2.0)

ENTROPY_INPUT_SLACK = 1e-12
HERMITIAN_TOLERANCE = 1e-10
DENSITY_HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
NEGATIVE_EIGENVALUE_FLOOR = -1e-10
UNIT_VECTOR_TOLERANCE = 1e-10
ZERO_PROBABILITY = 1e-14

JACOBI_OFF_DIAGONAL_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 100

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class Subsystem(str, enum.Enum):
    FIRST = 'first'
    SECOND = 'second'


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order, with eigenvectors as columns when requested."""
    values: np.ndarray
    vectors: np.ndarray | None = None

    def reconstruct(self):
        if self.vectors is None:
            raise PreconditionError("spectrum was computed without eigenvectors")
        return (self.vectors * self.values) @ self.vectors.conj().T


@dataclass(frozen=True)
class MeasurementOutcome:
    """Two-outcome projective measurement on the first qubit."""
    probabilities: tuple[float, float]
    states: tuple[np.ndarray, np.ndarray]
    degenerate: tuple[bool, bool]


# --- entropy ---

def binary_entropy(x):
    """H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0."""
    x = float(x)
    if x < -ENTROPY_INPUT_SLACK or x > 1.0 + ENTROPY_INPUT_SLACK:
        raise DomainError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    lo = min(x, 1.0 - x)
    return float((entr(lo) + entr(1.0 - lo)) / LN2)


def shannon_entropy(probabilities):
    probs = np.asarray(probabilities, dtype=float)
    return float(np.sum(entr(probs)) / LN2)


def clamp_spectrum(values):
    """Zero eigenvalues in [-1e-10, 0); anything more negative is a hard error."""
    values = np.asarray(values, dtype=float)
    if values.size and values.min() < NEGATIVE_EIGENVALUE_FLOOR:
        raise PreconditionError(
            f"matrix is not positive semidefinite (eigenvalue {values.min():.3e})"
        )
    clamped = np.where(values < 0.0, 0.0, values)
    if np.any(clamped != values):
        logger.debug("clamped %d roundoff-negative eigenvalue(s)", int(np.sum(clamped != values)))
    return clamped


def von_neumann_entropy(rho):
    """S(rho) = -sum lambda log2 lambda for a 2×2 or 4×4 density matrix."""
    rho = validate_density_matrix(rho)
    values = clamp_spectrum(hermitian_eigen(rho).values)
    return shannon_entropy(values)


# --- eigensolvers ---

def _off_diagonal_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi(matrix):
    """
    Cyclic complex Jacobi for a small Hermitian matrix.

    Each rotation U = D·G first removes the phase of a[p, q] (D is diagonal)
    and then applies a real Givens rotation G, so U†AU has a zero at (p, q).
    """
    a = np.array(matrix, dtype=complex)
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)

    for sweep in range(JACOBI_MAX_SWEEPS):
        if _off_diagonal_norm(a) <= JACOBI_OFF_DIAGONAL_TOLERANCE:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude == 0.0:
                    continue
                phase = apq / magnitude
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                rotation = np.eye(n, dtype=complex)
                rotation[p, p] = c
                rotation[p, q] = s
                rotation[q, p] = -s * np.conj(phase)
                rotation[q, q] = c * np.conj(phase)

                a = rotation.conj().T @ a @ rotation
                a[p, q] = a[q, p] = 0.0
                a = 0.5 * (a + a.conj().T)
                v = v @ rotation
    else:
        logger.warning(
            "Jacobi stopped after %d sweeps with off-diagonal norm %.3e",
            JACOBI_MAX_SWEEPS, _off_diagonal_norm(a),
        )

    values = np.real(np.diag(a))
    order = np.argsort(-values, kind='stable')
    return values[order], v[:, order]


def _check_hermitian(matrix, size=None):
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {m.shape}")
    if size is not None and m.shape[0] not in size:
        raise PreconditionError(f"expected dimension in {size}, got {m.shape[0]}")
    asymmetry = np.max(np.abs(m - m.conj().T))
    if asymmetry > HERMITIAN_TOLERANCE:
        raise PreconditionError(f"matrix is not Hermitian (max deviation {asymmetry:.3e})")
    return m


def hermitian_eigen(matrix, vectors=False):
    """Spectrum of a 2×2 or 4×4 Hermitian matrix, values sorted descending."""
    m = _check_hermitian(matrix, size=(2, 4))
    values, vecs = _jacobi(m)
    return Spectrum(values=values, vectors=vecs if vectors else None)


def symmetric_eigen3(matrix, vectors=False):
    """Spectrum of a real symmetric 3×3 matrix (the K matrix of a Bloch form)."""
    m = np.asarray(matrix)
    if np.iscomplexobj(m) and np.max(np.abs(m.imag)) > HERMITIAN_TOLERANCE:
        raise PreconditionError("symmetric_eigen3 expects a real matrix")
    m = _check_hermitian(np.real(m), size=(3,))
    values, vecs = _jacobi(m)
    return Spectrum(values=values, vectors=np.real(vecs) if vectors else None)


# --- density matrices ---

def validate_density_matrix(rho):
    """Return rho as a complex array after checking Hermiticity, trace and PSD."""
    m = np.asarray(rho, dtype=complex)
    if m.ndim != 2 or m.shape not in ((2, 2), (4, 4)):
        raise PreconditionError(f"expected a 2×2 or 4×4 density matrix, got shape {m.shape}")
    asymmetry = np.max(np.abs(m - m.conj().T))
    if asymmetry > DENSITY_HERMITIAN_TOLERANCE:
        raise PreconditionError(f"density matrix is not Hermitian (deviation {asymmetry:.3e})")
    trace = np.trace(m).real
    if abs(trace - 1.0) > TRACE_TOLERANCE:
        raise PreconditionError(f"density matrix has trace {trace!r}")
    smallest = hermitian_eigen(m).values[-1]
    if smallest < NEGATIVE_EIGENVALUE_FLOOR:
        raise PreconditionError(f"density matrix is not PSD (eigenvalue {smallest:.3e})")
    return m


def partial_trace(rho, subsystem):
    """Trace out ``subsystem`` of a two-qubit state and return the other 2×2 block."""
    m = validate_density_matrix(rho)
    if m.shape != (4, 4):
        raise PreconditionError("partial_trace expects a two-qubit (4×4) state")
    subsystem = Subsystem(subsystem)
    tensor = m.reshape(2, 2, 2, 2)
    if subsystem is Subsystem.SECOND:
        return np.einsum('ijkj->ik', tensor)
    return np.einsum('jijk->ik', tensor)


def unit_direction(direction):
    n = np.asarray(direction, dtype=float).reshape(3)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_VECTOR_TOLERANCE:
        raise PreconditionError(f"measurement direction {n.tolist()} is not a unit vector")
    return n


def spherical_direction(theta, phi):
    """Unit vector(s) for polar angle theta and azimuth phi; broadcasts."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    return np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)],
        axis=-1,
    )


def measurement_update(rho, direction):
    """
    Measure the first qubit along the Bloch direction n with Π± = (I ± n·σ)/2.

    A branch whose probability is below 1e-14 is replaced by I/2 and flagged
    as degenerate.
    """
    m = validate_density_matrix(rho)
    if m.shape != (4, 4):
        raise PreconditionError("measurement_update expects a two-qubit (4×4) state")
    n = unit_direction(direction)
    n_sigma = sum(component * pauli for component, pauli in zip(n, PAULIS))

    probabilities, states, degenerate = [], [], []
    for sign in (1.0, -1.0):
        projector = np.kron(0.5 * (IDENTITY2 + sign * n_sigma), IDENTITY2)
        unnormalised = np.einsum('jijk->ik', (projector @ m @ projector).reshape(2, 2, 2, 2))
        probability = float(np.trace(unnormalised).real)
        if probability < ZERO_PROBABILITY:
            probabilities.append(0.0)
            states.append(0.5 * IDENTITY2)
            degenerate.append(True)
        else:
            probabilities.append(probability)
            conditional = unnormalised / probability
            states.append(0.5 * (conditional + conditional.conj().T))
            degenerate.append(False)

    total = sum(probabilities)
    probabilities = [value / total for value in probabilities]
    return MeasurementOutcome(
        probabilities=tuple(probabilities),
        states=tuple(states),
        degenerate=tuple(degenerate),
    )


def conditional_entropy(rho, direction):
    """Σ_k p_k S(ρ_{B|k}) after measuring the first qubit along ``direction``."""
    outcome = measurement_update(rho, direction)
    return sum(
        probability * von_neumann_entropy(state)
        for probability, state, skipped in zip(
            outcome.probabilities, outcome.states, outcome.degenerate
        )
        if not skipped
    )
