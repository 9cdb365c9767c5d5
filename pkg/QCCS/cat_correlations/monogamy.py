"""
Monogamy deficits Q(A|BE) - Q(A|B) - Q(A|E) for the four measures, and the
root finding that locates where a deficit changes sign.

Sign convention: a positive deficit means the measure is monogamous at that
point; violations show up as negative values.
"""

import enum
import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from . import discord, entanglement, geodiscord
from .catstates import ModelParams
from .config import get_setting
from .exceptions import BracketingError
from .printed import printed_eof_deficit

logger = logging.getLogger(__name__)


class Measure(str, enum.Enum):
    TANGLE = 'tangle'
    EOF = 'eof'
    DISCORD = 'discord'
    GEO = 'geo'
    EOF_PRINTED = 'eof_printed'
    GEO_EXACT = 'geo_exact'


@dataclass(frozen=True)
class MonogamyReport:
    params: ModelParams
    c_ab: float
    c_ae: float
    c_abe: float
    e_ab: float
    e_ae: float
    e_abe: float
    d_ab: float
    d_ae: float
    d_abe: float
    dg_ab: float
    dg_ae: float
    dg_abe: float
    tau: float
    e_deficit: float
    d_deficit: float
    dg_deficit: float


def tangle(params):
    """(1-p²)[(1+p²) - (p^{2r²} + p^{2t²})] / (1+p²q)²."""
    p = params.p
    return (
        (1.0 - p * p)
        * ((1.0 + p * p) - (p ** (2.0 * params.r2) + p ** (2.0 * params.t2)))
        / params.half_norm ** 2
    )


def eof_deficit(params, verbatim=False):
    if verbatim:
        return printed_eof_deficit(params)
    return entanglement.eof_a_be(params) - entanglement.eof_ab(params) - entanglement.eof_ae(params)


def discord_deficit(params):
    return discord.discord_a_be(params) - discord.discord_ab(params) - discord.discord_ae(params)


def geo_deficit(params, exact=False):
    a_be = geodiscord.geo_discord_a_be_exact(params) if exact else geodiscord.geo_discord_a_be(params)
    return a_be - geodiscord.geo_discord_ab(params).value - geodiscord.geo_discord_ae(params).value


DEFICITS = {
    Measure.TANGLE: tangle,
    Measure.EOF: eof_deficit,
    Measure.DISCORD: discord_deficit,
    Measure.GEO: geo_deficit,
    Measure.EOF_PRINTED: lambda params: eof_deficit(params, verbatim=True),
    Measure.GEO_EXACT: lambda params: geo_deficit(params, exact=True),
}


def deficit(measure, params):
    return DEFICITS[Measure(measure)](params)


def _deficit_in_p(measure, m, t2):
    function = DEFICITS[Measure(measure)]

    def along_p(p):
        return function(ModelParams(p=p, m=m, t2=t2))

    return along_p


def find_violation_boundary(measure, m, t2, bracket=None, tol=None):
    """Bisection root in p of the deficit at fixed (m, t²)."""
    p_lo, p_hi = bracket or get_setting('THRESHOLD_BRACKET')
    tol = tol or get_setting('THRESHOLD_TOLERANCE')
    along_p = _deficit_in_p(measure, m, t2)

    f_lo, f_hi = along_p(p_lo), along_p(p_hi)
    if f_lo == 0.0:
        return float(p_lo)
    if f_hi == 0.0:
        return float(p_hi)
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketingError(
            f"{Measure(measure).value} deficit has no sign change on [{p_lo}, {p_hi}] "
            f"at m={m}, t2={t2} (values {f_lo:.6g}, {f_hi:.6g})"
        )
    root = bisect(along_p, p_lo, p_hi, xtol=tol, maxiter=400)
    logger.debug("%s boundary at m=%d t2=%g: p=%.15g", measure, m, t2, root)
    return float(root)


def violation_roots(measure, m, t2, p_grid, tol=None):
    """Every sign change of the deficit along ``p_grid``, each refined by bisection."""
    along_p = _deficit_in_p(measure, m, t2)
    grid = np.asarray(p_grid, dtype=float)
    values = np.array([along_p(p) for p in grid])
    roots = []
    for k in range(len(grid) - 1):
        if values[k] == 0.0:
            roots.append(float(grid[k]))
        elif values[k] * values[k + 1] < 0.0:
            roots.append(find_violation_boundary(measure, m, t2, (grid[k], grid[k + 1]), tol))
    if len(grid) and values[-1] == 0.0:
        roots.append(float(grid[-1]))
    return roots


def full_report(params):
    c_ab = entanglement.concurrence_ab(params)
    c_ae = entanglement.concurrence_ae(params)
    c_abe = entanglement.concurrence_a_be(params)
    e_ab = entanglement.eof_from_concurrence(c_ab)
    e_ae = entanglement.eof_from_concurrence(c_ae)
    e_abe = entanglement.eof_from_concurrence(c_abe)
    d_ab = discord.discord_ab(params)
    d_ae = discord.discord_ae(params)
    d_abe = discord.discord_a_be(params)
    dg_ab = geodiscord.geo_discord_ab(params).value
    dg_ae = geodiscord.geo_discord_ae(params).value
    dg_abe = geodiscord.geo_discord_a_be(params)
    return MonogamyReport(
        params=params,
        c_ab=float(c_ab), c_ae=float(c_ae), c_abe=float(c_abe),
        e_ab=e_ab, e_ae=e_ae, e_abe=e_abe,
        d_ab=d_ab, d_ae=d_ae, d_abe=d_abe,
        dg_ab=dg_ab, dg_ae=dg_ae, dg_abe=dg_abe,
        tau=tangle(params),
        e_deficit=e_abe - e_ab - e_ae,
        d_deficit=d_abe - d_ab - d_ae,
        dg_deficit=dg_abe - dg_ab - dg_ae,
    )
