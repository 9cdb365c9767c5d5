"""
Concurrence and entanglement of formation for the four bipartitions, plus
the Wootters spin-flip oracle that the closed forms are checked against.
"""

import logging
import math

import numpy as np

from . import numerics
from .exceptions import DomainError

logger = logging.getLogger(__name__)

CONCURRENCE_SLACK = 1e-12
# Eigenvalues of ρ and of √ρ·ρ̃·√ρ below this are roundoff on exact zeros.
SPECTRAL_FLOOR = 1e-13

SPIN_FLIP = np.kron(numerics.SIGMA_Y, numerics.SIGMA_Y)


class ConcurrenceValue(float):
    """A concurrence, guaranteed to lie in [0, 1 + 1e-12]."""

    def __new__(cls, value):
        value = float(value)
        if value < 0.0 or value > 1.0 + CONCURRENCE_SLACK or math.isnan(value):
            raise DomainError(f"concurrence {value!r} outside [0, 1]")
        return super().__new__(cls, value)


def _pair_concurrence(prefactor, params, left_exponent, right_exponent):
    """prefactor·√(1 - p^{2·left})·√(1 - p^{2·right}) / (1 + p²q)."""
    p = params.p
    left = math.sqrt(max(0.0, 1.0 - p ** (2.0 * left_exponent)))
    right = math.sqrt(max(0.0, 1.0 - p ** (2.0 * right_exponent)))
    return ConcurrenceValue(prefactor * left * right / params.half_norm)


def concurrence_ab(params):
    """p^{r²}·√(1-p²)·√(1-p^{2t²}) / (1+p²q)."""
    return _pair_concurrence(params.c_r, params, 1.0, params.t2)


def concurrence_ae(params):
    return concurrence_ab(params.swapped())


def concurrence_a_be(params):
    """(1-p²)/(1+p²q); does not depend on t²."""
    return ConcurrenceValue((1.0 - params.p ** 2) / params.half_norm)


def concurrence_be(params):
    """p·√(1-p^{2r²})·√(1-p^{2t²}) / (1+p²q)."""
    return _pair_concurrence(params.p, params, params.r2, params.t2)


def eof_from_concurrence(c):
    c = float(c)
    if c < -CONCURRENCE_SLACK or c > 1.0 + CONCURRENCE_SLACK:
        raise DomainError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return numerics.binary_entropy(0.5 + 0.5 * math.sqrt(1.0 - c * c))


def eof_ab(params):
    return eof_from_concurrence(concurrence_ab(params))


def eof_ae(params):
    return eof_from_concurrence(concurrence_ae(params))


def eof_a_be(params):
    return eof_from_concurrence(concurrence_a_be(params))


def eof_be(params):
    return eof_from_concurrence(concurrence_be(params))


def _positive_sqrt(matrix):
    spectrum = numerics.hermitian_eigen(matrix, vectors=True)
    values = numerics.clamp_spectrum(spectrum.values)
    values = np.where(values < SPECTRAL_FLOOR, 0.0, values)
    vectors = spectrum.vectors
    return (vectors * np.sqrt(values)) @ vectors.conj().T


def wootters_concurrence(rho):
    """
    C = max(0, μ1 - μ2 - μ3 - μ4), μ the descending square roots of the
    spectrum of ρ·ρ̃, ρ̃ = (σy⊗σy) ρ* (σy⊗σy).

    The spectrum is taken from the Hermitian matrix √ρ·ρ̃·√ρ, which has the
    same eigenvalues as ρ·ρ̃.
    """
    rho = numerics.validate_density_matrix(rho)
    flipped = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    root = _positive_sqrt(rho)
    similar = root @ flipped @ root
    squares = numerics.hermitian_eigen(0.5 * (similar + similar.conj().T)).values
    squares = np.where(squares < SPECTRAL_FLOOR, 0.0, squares)
    mu = np.sqrt(squares)
    value = mu[0] - mu[1] - mu[2] - mu[3]
    return ConcurrenceValue(min(max(0.0, value), 1.0))
