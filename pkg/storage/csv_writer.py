"""
CSV Output Module
Schemas for every command's dataset and atomic file output
"""

import csv
import enum
import io
import logging
import math
import os
import sys
import tempfile
from contextlib import contextmanager
from dataclasses import asdict, dataclass, is_dataclass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CsvSchema:
    """Ordered column names for one dataset"""
    name: str
    columns: tuple


SOLVE_SCHEMA = CsvSchema('solve', (
    'mode', 'alpha', 'r_a', 'p_j', 'aee_eaves_opt', 'aee_jam_opt', 'aee_joint',
    'r_a_star', 'p_j_star', 'gs_iterations', 'bracket_lo', 'bracket_hi',
    'eaves_feasible', 'jam_feasible',
))

SWEEP_SCHEMA = CsvSchema('sweep', (
    'parameter', 'value', 'aee_benchmark', 'aee_eaves_opt', 'aee_jam_opt',
    'aee_joint', 'gain_eaves_pct', 'gain_jam_pct', 'gain_joint_pct', 'mode',
    'alpha', 'r_a', 'p_j', 'feasible', 'benchmark_feasible',
))

FIG2A_SCHEMA = CsvSchema('fig2a', (
    'r_de', 'p_m_over_rho', 'regime', 'p_fr_over_rho', 'r_a_star',
))

FIG2B_SCHEMA = CsvSchema('fig2b', (
    'p_ft_dbm', 'ratio_g_su_g_au', 'p_j', 'aee_jam', 'feasible', 'peak_p_j', 'peak_aee',
))

FIG3_SCHEMA = CsvSchema('fig3', ('nu', 'ratio', 'threshold_dbm', 'reference_dbm'))

FIG3_CURVES_SCHEMA = CsvSchema('fig3_curves', (
    'nu', 'ratio', 'rho_d_dbm', 'aee_eaves_opt', 'aee_jam_opt', 'mode',
))

APPROX_SCHEMA = CsvSchema('approx', (
    'p_j_approx', 'p_j_approx_clamped', 'p_j_star', 'aee_approx', 'aee_star',
    'relative_gap', 'gamma_su', 'gamma_au_approx', 'p_j_over_p_ft', 'in_regime',
))


def format_cell(value):
    """
    Format one CSV cell:
    - floats as the shortest string that round-trips
    - booleans as true/false
    - None as an empty cell
    """
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, float):
        if math.isnan(value):
            return 'nan'
        return repr(float(value))
    return str(value)


def _as_mapping(record):
    if is_dataclass(record):
        return asdict(record)
    return dict(record)


def render_csv(schema: CsvSchema, records):
    """Render records (dataclasses or dicts) to CSV text with a header row"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(schema.columns)
    for record in records:
        row = _as_mapping(record)
        writer.writerow([format_cell(row.get(column)) for column in schema.columns])
    return buffer.getvalue()


@contextmanager
def atomic_output(path):
    """
    Context manager for all-or-nothing file output.

    Writes go to a temporary file next to the target, which replaces the
    target when the block exits cleanly. On any exception the temporary
    file is removed and the exception re-raised.

    Usage:
        with atomic_output('results/sweep.csv') as handle:
            handle.write(text)
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix='.csv')
    try:
        with os.fdopen(fd, 'w', newline='', encoding='utf-8') as handle:
            yield handle
        os.replace(tmp_path, path)
        logger.debug(f"Output committed to {path}")
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        logger.warning(f"Output to {path} rolled back due to error")
        raise


def write_csv(schema: CsvSchema, records, path=None):
    """
    Write a dataset to path, or to stdout when path is None

    Returns:
        str: the rendered CSV text
    """
    text = render_csv(schema, records)
    if path is None:
        sys.stdout.write(text)
    else:
        with atomic_output(path) as handle:
            handle.write(text)
        logger.info(f"Wrote {schema.name} dataset to {path}")
    return text


def sibling_path(path, suffix):
    """'out/fig3.csv' + '_curves' -> 'out/fig3_curves.csv'"""
    stem, ext = os.path.splitext(path)
    return f"{stem}{suffix}{ext or '.csv'}"
