'''
Certified tables of gamma^(n), delta^(n), eta^(n), delta~^(n) and eta~^(n).

A value is printed only when both endpoints of its enclosure cut to the same
string, by truncation toward zero unless half to even rounding is asked for.
Rows escalate precision independently.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import csv
import io
import json
import logging
from collections import namedtuple

from ..core.constants import INDETERMINATE, TRUNCATE, DIGIT_ROUNDINGS
from ..numerics.interval import Interval, PrecisionConfig, decimal_string, with_escalation
from .moments import gamma_n, delta_n, delta_tilde_n
from .series import eta_n, eta_tilde_n

logger = logging.getLogger(__package__)

COLUMNS = ['gamma_n', 'delta_n', 'eta_n', 'delta_tilde_n', 'eta_tilde_n']

_PRODUCERS = {
    'gamma_n': gamma_n,
    'delta_n': delta_n,
    'eta_n': eta_n,
    'delta_tilde_n': delta_tilde_n,
    'eta_tilde_n': eta_tilde_n
}

_CertifiedValueBase = namedtuple('CertifiedValue', 'text lo hi')

class CertifiedValue(_CertifiedValueBase):
    '''
    - Arguments:
        - text: the printed digits, or ``INDETERMINATE``
        - lo, hi: outward rounded decimal strings of the enclosure endpoints
    '''
    __slots__ = ()

    @property
    def certified(self) -> bool:
        return self.text != INDETERMINATE

TableRow = namedtuple('TableRow', ['n'] + COLUMNS + ['bits_used'])

_TableArtifactBase = namedtuple('TableArtifact', 'digits rows rounding')

class TableArtifact(_TableArtifactBase):
    __slots__ = ()

    @property
    def certified(self) -> bool:
        '''True when every entry of every row printed its digits'''
        return all(getattr(row, c).certified for row in self.rows for c in COLUMNS)

def certify_digits(value : Interval, digits : int, rounding : str = TRUNCATE) -> CertifiedValue:
    '''
    Cuts both endpoints of ``value`` to ``digits`` decimals and keeps the string
    when they agree. Truncated strings are prefixes of the decimal expansion.

    - Arguments:
        - rounding: one of ``DIGIT_ROUNDINGS``
    '''
    if not value.is_finite():
        return CertifiedValue(INDETERMINATE, value.lo_str(digits), value.hi_str(digits))
    d = value.endpoint_digits()
    lo_text = decimal_string(value.lo, digits, rounding)
    hi_text = decimal_string(value.hi, digits, rounding)
    text = lo_text if lo_text == hi_text else INDETERMINATE
    return CertifiedValue(text, value.lo_str(d), value.hi_str(d))

def _row_values(n, digits, rounding, step):
    return {c: certify_digits(_PRODUCERS[c](n, step.bits), digits, rounding) for c in COLUMNS}

def _row(n, digits, rounding, cfg):
    values, step, accepted = with_escalation(
        lambda step: _row_values(n, digits, rounding, step),
        cfg,
        lambda values: all(v.certified for v in values.values())
    )
    if not accepted:
        logger.warning(f'Row n = {n} left indeterminate after {step.bits} bits')
    else:
        logger.info(f'Certified row n = {n} at {step.bits} bits')
    return TableRow(n = n, bits_used = step.bits, **values)

def emit_tables(n_max : int, digits : int, cfg = None, rounding : str = TRUNCATE) -> TableArtifact:
    '''
    Rows n = 0..n_max with all five sequences printed to ``digits`` decimals.

    - Arguments:
        - n_max: last row, at least 0
        - digits: decimals per entry, at least 1
        - cfg: starting ``PrecisionConfig``; each row climbs its own ladder
        - rounding: how entries are cut to ``digits`` decimals, one of \
            ``DIGIT_ROUNDINGS``

    - Returns:
        - a ``TableArtifact``. Entries that could not be certified hold \
            ``INDETERMINATE``.
    '''
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f'n_max must be a nonnegative integer, got {n_max!r}')
    if not isinstance(digits, int) or digits < 1:
        raise ValueError(f'digits must be a positive integer, got {digits!r}')
    if cfg is None:
        cfg = PrecisionConfig()
    rows = tuple(_row(n, digits, rounding, cfg) for n in range(n_max + 1))
    return TableArtifact(digits, rows, rounding)

def to_csv(artifact : TableArtifact) -> str:
    '''
    Columns n, gamma_n, delta_n, eta_n, delta_tilde_n, eta_tilde_n, bits_used.
    '''
    out = io.StringIO()
    writer = csv.writer(out, lineterminator = '\n')
    writer.writerow(['n'] + COLUMNS + ['bits_used'])
    for row in artifact.rows:
        writer.writerow([row.n] + [getattr(row, c).text for c in COLUMNS] + [row.bits_used])
    return out.getvalue()

def to_json(artifact : TableArtifact) -> str:
    '''
    Same content as ``to_csv`` plus the endpoint strings of every enclosure.
    '''
    rows = []
    for row in artifact.rows:
        entry = {'n': row.n, 'bits_used': row.bits_used}
        for c in COLUMNS:
            value = getattr(row, c)
            entry[c] = value.text
            entry[f'{c}_lo'] = value.lo
            entry[f'{c}_hi'] = value.hi
        rows.append(entry)
    return json.dumps({'digits': artifact.digits, 'rounding': artifact.rounding, 'rows': rows}, indent = 2) + '\n'

def to_text(artifact : TableArtifact) -> str:
    '''Right aligned plain text, one row per line'''
    header = ['n'] + COLUMNS
    lines = [[str(row.n)] + [getattr(row, c).text for c in COLUMNS] for row in artifact.rows]
    widths = [max(len(r[i]) for r in [header] + lines) for i in range(len(header))]
    fmt = lambda r: '  '.join(cell.rjust(w) for cell, w in zip(r, widths))
    return '\n'.join([fmt(header)] + [fmt(r) for r in lines]) + '\n'
