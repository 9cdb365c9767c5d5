"""
Grid evaluation over (p, t²) at fixed parity, for plot data.

Cells are independent; they are evaluated on a thread pool and collected
in grid order (p-major, then t²), so the worker count never changes the
output.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from . import catstates, discord, entanglement, geodiscord, monogamy
from .exceptions import DomainError
from .rendering import COLUMNS, FORMATS, ORACLE_COLUMNS, report_row, round_significant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSpec:
    p_start: float
    p_end: float
    p_steps: int
    t2_start: float
    t2_end: float
    t2_steps: int
    m: int
    include_oracles: bool = False
    output_format: str = 'csv'

    def __post_init__(self):
        if int(self.p_steps) < 1 or int(self.t2_steps) < 1:
            raise DomainError("grid step counts must be >= 1")
        if self.output_format not in FORMATS:
            raise DomainError(f"output format must be one of {FORMATS}")
        # the corners bound every grid point, so checking them checks the grid
        for p in (self.p_start, self.p_end):
            for t2 in (self.t2_start, self.t2_end):
                catstates.ModelParams(p=p, m=self.m, t2=t2)

    @property
    def columns(self):
        return COLUMNS + ORACLE_COLUMNS if self.include_oracles else list(COLUMNS)

    def p_values(self):
        return np.linspace(self.p_start, self.p_end, int(self.p_steps))

    def t2_values(self):
        return np.linspace(self.t2_start, self.t2_end, int(self.t2_steps))

    def cells(self):
        return [
            catstates.ModelParams(p=float(p), m=self.m, t2=float(t2))
            for p in self.p_values()
            for t2 in self.t2_values()
        ]


def oracle_row(params):
    """Matrix-side recomputation of the closed-form columns."""
    rho_ab = catstates.rho_ab(params)
    rho_a_be = catstates.rho_a_be(params)
    values = {
        'C_AB_oracle': entanglement.wootters_concurrence(rho_ab),
        'C_AE_oracle': entanglement.wootters_concurrence(catstates.rho_ae(params)),
        'C_ABE_oracle': entanglement.wootters_concurrence(rho_a_be),
        'C_BE': entanglement.concurrence_be(params),
        'C_BE_oracle': entanglement.wootters_concurrence(catstates.rho_be(params)),
        'D_AB_oracle': discord.discord_numeric(rho_ab),
        'Dg_AB_oracle': geodiscord.geo_discord_generic(geodiscord.bloch_decompose(rho_ab)),
        'Dg_ABE_exact': geodiscord.geo_discord_generic(geodiscord.bloch_decompose(rho_a_be)),
    }
    return {column: round_significant(float(value)) for column, value in values.items()}


def evaluate_cell(params, include_oracles=False):
    row = report_row(monogamy.full_report(params))
    if include_oracles:
        row.update(oracle_row(params))
    return row


def run_sweep(spec, jobs=1):
    cells = spec.cells()
    logger.info("sweeping %d cells on %d worker(s)", len(cells), jobs)
    worker = partial(evaluate_cell, include_oracles=spec.include_oracles)
    with ThreadPoolExecutor(max_workers=max(int(jobs), 1)) as pool:
        return list(pool.map(worker, cells))
