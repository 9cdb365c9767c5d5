"""
Formulas exactly as they were first published for this model.

Several of them disagree with the concurrences they should follow from
(see ERRATA.md at the repository root). They are kept so the published
thresholds can be regenerated and the size of each discrepancy measured.
Nothing else in the package uses them for its default results.
"""

import logging
import math

from .numerics import binary_entropy

logger = logging.getLogger(__name__)


def _printed_pair_eof(params, reflect_exponent):
    p, q = params.p, params.q
    radicand = 1.0 + 2.0 * p * p * q + p ** (2.0 * reflect_exponent) * (p * p - 1.0)
    if radicand < 0.0:
        logger.debug("printed EoF radicand %.3e clamped to 0 at %s", radicand, params)
        radicand = 0.0
    argument = 0.5 + 0.5 * math.sqrt(radicand) / params.half_norm
    return binary_entropy(min(argument, 1.0))


def printed_eof_ab(params):
    """H(½ + ½√(1 + 2p²q + p^{2r²}(p²-1)) / (1+p²q))."""
    return _printed_pair_eof(params, params.r2)


def printed_eof_ae(params):
    return _printed_pair_eof(params, params.t2)


def printed_eof_a_be(params):
    """H(½ + ½·p·cos(mπ/2)/(1+p²q)), cos(mπ/2) being exactly 1 or 0."""
    cos_half = 1.0 if params.m == 0 else 0.0
    return binary_entropy(0.5 + 0.5 * params.p * cos_half / params.half_norm)


def printed_eof_deficit(params):
    return printed_eof_a_be(params) - printed_eof_ab(params) - printed_eof_ae(params)


def printed_lambda_b(params):
    """½(1 ± p^{t²})(1 ± p^{r²+1}q)/(2 + 2p²q); the pair sums to ½."""
    side = params.c_t
    mixed = params.q * params.p ** (params.r2 + 1.0)
    plus = 0.5 * (1.0 + side) * (1.0 + mixed) / params.norm
    minus = 0.5 * (1.0 - side) * (1.0 - mixed) / params.norm
    return plus, minus


def printed_classical_argument(params):
    """¼(1 + p^{t²})(1 + p^{r²+1}q)/(1+p²q)."""
    mixed = params.q * params.p ** (params.r2 + 1.0)
    return 0.25 * (1.0 + params.c_t) * (1.0 + mixed) / params.half_norm
