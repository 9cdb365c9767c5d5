"""
Row building and CSV/JSON emission.

Numbers are rounded once to 15 significant digits and then written with
Python's shortest round-trip repr, so a value prints identically in CSV and
JSON and two runs produce byte-identical output.
"""

import json

import pandas as pd

from .config import get_setting

COLUMNS = [
    'p', 't2', 'm',
    'C_AB', 'C_AE', 'C_ABE',
    'E_AB', 'E_AE', 'E_ABE',
    'D_AB', 'D_AE', 'D_ABE',
    'Dg_AB', 'Dg_AE', 'Dg_ABE',
    'tau', 'E_deficit', 'D_deficit', 'Dg_deficit',
]

ORACLE_COLUMNS = [
    'C_AB_oracle', 'C_AE_oracle', 'C_ABE_oracle',
    'C_BE', 'C_BE_oracle',
    'D_AB_oracle',
    'Dg_AB_oracle', 'Dg_ABE_exact',
]

FORMATS = ('csv', 'json')


def round_significant(value, digits=None):
    """Round a float to ``digits`` significant digits; other values pass through."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    digits = digits or get_setting('SIGNIFICANT_DIGITS')
    # adding 0.0 turns -0.0 into 0.0
    return float(f"{float(value):.{digits}g}") + 0.0


def format_number(value):
    value = round_significant(value)
    return value if isinstance(value, str) else repr(value)


def report_row(report):
    params = report.params
    values = [
        params.p, params.t2, params.m,
        report.c_ab, report.c_ae, report.c_abe,
        report.e_ab, report.e_ae, report.e_abe,
        report.d_ab, report.d_ae, report.d_abe,
        report.dg_ab, report.dg_ae, report.dg_abe,
        report.tau, report.e_deficit, report.d_deficit, report.dg_deficit,
    ]
    return {column: round_significant(value) for column, value in zip(COLUMNS, values)}


def rows_frame(rows, columns):
    """DataFrame of preformatted strings, one row per record, fixed column order."""
    return pd.DataFrame(
        [[format_number(row[column]) for column in columns] for row in rows],
        columns=columns,
    )


def write_rows(rows, columns, output_format, stream, single=False):
    """
    Write records to ``stream``.

    CSV always carries the header. JSON is a list of objects, or a single
    object when ``single`` is set (one-point reports).
    """
    if output_format == 'csv':
        rows_frame(rows, columns).to_csv(stream, index=False, lineterminator='\n')
    elif output_format == 'json':
        records = [{column: round_significant(row[column]) for column in columns} for row in rows]
        payload = records[0] if single and len(records) == 1 else records
        stream.write(json.dumps(payload, indent=2) + '\n')
    else:
        raise ValueError(f"unknown output format {output_format!r}")


def write_document(document, stream):
    stream.write(json.dumps(document, indent=2) + '\n')
