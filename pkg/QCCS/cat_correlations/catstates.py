"""
Model parameters and two-qubit density matrices of the damped quasi-Bell
cat state.

All states are written in the even/odd cat basis, where the pair of
coherent states with overlap ``s`` maps to a qubit with coefficients
a = √((1+s)/2), b = √((1-s)/2). Every bipartition (AB, AE, BE and A|BE) is
an X-form matrix built by :func:`x_form` from two side overlaps and a
mixing weight.

Powers follow Python semantics, so 0.0 ** 0.0 == 1.0 and the t² = 1 and
t² = 0 edges of p^{r²}, p^{t²} come out right at p = 0.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError

logger = logging.getLogger(__name__)

# m = 1 denominators are 1 - p², so p = 1 is excluded with this margin.
ODD_PARITY_MARGIN = 1e-9


@dataclass(frozen=True)
class ModelParams:
    """
    One point of the model: overlap p, parity m and transmissivity t².

    q = cos(mπ) is taken exactly as +1 or -1.
    """
    p: float
    m: int
    t2: float

    def __post_init__(self):
        p, t2 = float(self.p), float(self.t2)
        if not (0.0 <= p <= 1.0) or math.isnan(p):
            raise DomainError(f"overlap p={self.p!r} must lie in [0, 1]")
        if not (0.0 <= t2 <= 1.0) or math.isnan(t2):
            raise DomainError(f"transmissivity t2={self.t2!r} must lie in [0, 1]")
        if self.m not in (0, 1):
            raise DomainError(f"parity m={self.m!r} must be 0 or 1")
        if self.m == 1 and p >= 1.0 - ODD_PARITY_MARGIN:
            raise DomainError(
                f"odd states need p < 1 - {ODD_PARITY_MARGIN:g} (got p={self.p!r})"
            )
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 't2', t2)
        object.__setattr__(self, 'm', int(self.m))

    @property
    def r2(self):
        return 1.0 - self.t2

    @property
    def q(self):
        return 1.0 if self.m == 0 else -1.0

    @property
    def c_t(self):
        return self.p ** self.t2

    @property
    def c_r(self):
        return self.p ** self.r2

    @property
    def norm(self):
        """N_m = 2 + 2p²q."""
        return 2.0 + 2.0 * self.p ** 2 * self.q

    @property
    def half_norm(self):
        """1 + p²q, the denominator of every closed form."""
        return 1.0 + self.p ** 2 * self.q

    def swapped(self):
        """The same point with transmission and reflection interchanged."""
        return ModelParams(p=self.p, m=self.m, t2=self.r2)


@dataclass(frozen=True)
class QubitBasisCoeffs:
    a: float
    b: float


def params_from_alpha(alpha_magnitude, m, t2):
    """Build ModelParams from the coherent amplitude |α| via p = exp(-2|α|²)."""
    alpha = float(alpha_magnitude)
    if alpha < 0.0 or math.isnan(alpha):
        raise DomainError(f"coherent amplitude {alpha_magnitude!r} must be >= 0")
    return ModelParams(p=math.exp(-2.0 * alpha * alpha), m=m, t2=t2)


def transmissivity_from_fiber(loss_rate, length):
    """Amplitude transmission t = exp(-loss_rate·length); square it for t²."""
    if loss_rate < 0 or length < 0:
        raise DomainError("fiber loss rate and length must be nonnegative")
    return math.exp(-float(loss_rate) * float(length))


def qubit_coeffs(overlap):
    if not (0.0 <= overlap <= 1.0):
        raise DomainError(f"overlap {overlap!r} must lie in [0, 1]")
    return QubitBasisCoeffs(
        a=math.sqrt((1.0 + overlap) / 2.0),
        b=math.sqrt((1.0 - overlap) / 2.0),
    )


# --- builders ---

def x_form(left_overlap, right_overlap, weight, norm):
    """
    X-form matrix (2/norm)·[[(1+w)a²A², 0, 0, (1+w)aAbB], ...] in the basis
    |uu⟩, |uv⟩, |vu⟩, |vv⟩, where (a, b) and (A, B) are the qubit
    coefficients of the two side overlaps and w the mixing weight.
    """
    left = qubit_coeffs(left_overlap)
    right = qubit_coeffs(right_overlap)
    a, b = left.a, left.b
    A, B = right.a, right.b
    even = 1.0 + weight
    odd = 1.0 - weight
    cross = a * A * b * B

    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = even * (a * A) ** 2
    rho[3, 3] = even * (b * B) ** 2
    rho[0, 3] = rho[3, 0] = even * cross
    rho[1, 1] = odd * (a * B) ** 2
    rho[2, 2] = odd * (b * A) ** 2
    rho[1, 2] = rho[2, 1] = odd * cross
    return (2.0 / norm) * rho


def rho_ab(params):
    """State of the surviving pair: A-side overlap p, B-side overlap p^{t²}."""
    return x_form(params.p, params.c_t, params.q * params.c_r, params.norm)


def rho_ae(params):
    """State of A with the environment: rho_ab with t² and r² swapped."""
    return rho_ab(params.swapped())


def rho_be(params):
    """State of B with the environment: side overlaps p^{t²}, p^{r²}, weight p·q."""
    return x_form(params.c_t, params.c_r, params.q * params.p, params.norm)


def rho_a_be(params):
    """Pure state of A against the merged BE qubit; independent of t²."""
    return x_form(params.p, params.p, params.q, params.norm)
