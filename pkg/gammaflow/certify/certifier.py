from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import time
from collections import namedtuple

from ..core.constants import CERTIFIED_NONZERO, INDETERMINATE, CERT_STATUSES, SYMBOLIC, \
    INTERVAL_LU, CERT_PATHS, DEFAULT_TERM_BUDGET, SYMBOLIC_MAX_SIZE, LEDGER_CERT
from ..core.errors import IntervalContainsZero, TermBudgetExceeded
from ..numerics.interval import Interval, PrecisionConfig, with_escalation
from ..polys.poly import eval_poly_interval
from .determinants import interval_det
from .jacobian import ThetaChoice, theta_choices

logger = logging.getLogger(__package__)

def _endpoint_strings(value : Interval):
    '''
    Outward rounded endpoint strings with enough decimals that an enclosure
    excluding zero still excludes it once parsed back.
    '''
    digits = value.endpoint_digits()
    if value.is_finite() and value.excludes_zero():
        smallest = value.mignitude()
        while smallest * 10 ** digits < 10 ** 12:
            digits += 8
    return value.lo_str(digits), value.hi_str(digits)

_CertRecordBase = namedtuple('CertRecord', 'n m theta det_enclosure status bits_used elapsed path')

class CertRecord(_CertRecordBase):
    '''
    Outcome of one check of det J_{m, theta} at gamma*.

    - Arguments:
        - n: largest m of the run
        - m: 2 <= m <= n
        - theta: ``ThetaChoice`` valid for m
        - det_enclosure: ``Interval`` enclosing the determinant
        - status: ``CERTIFIED_NONZERO`` exactly when the enclosure excludes zero
        - bits_used: precision of the last attempt
        - elapsed: seconds spent
        - path: ``SYMBOLIC`` or ``INTERVAL_LU``
    '''
    __slots__ = ()

    def __new__(cls, n, m, theta, det_enclosure, status, bits_used, elapsed, path):
        if not isinstance(m, int) or not isinstance(n, int) or not 2 <= m <= n:
            raise ValueError(f'Need 2 <= m <= n, got m = {m!r}, n = {n!r}')
        if not isinstance(theta, ThetaChoice):
            raise ValueError(f'theta must be a ThetaChoice, got {theta!r}')
        theta.validate(m)
        if status not in CERT_STATUSES:
            raise ValueError('status must be one of {}'.format(','.join(CERT_STATUSES)))
        if path not in CERT_PATHS:
            raise ValueError('path must be one of {}'.format(','.join(CERT_PATHS)))
        if (status == CERTIFIED_NONZERO) != det_enclosure.excludes_zero():
            raise ValueError(f'status {status} does not agree with enclosure {det_enclosure!r}')
        return super(CertRecord, cls).__new__(cls, n, m, theta, det_enclosure, status,
                                              bits_used, elapsed, path)

    @property
    def key(self):
        return (self.m, self.theta)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED_NONZERO

    def to_json_dict(self) -> dict:
        lo, hi = _endpoint_strings(self.det_enclosure)
        return {
            'kind': LEDGER_CERT,
            'n': self.n,
            'm': self.m,
            'theta': self.theta.label,
            'det_lo': lo,
            'det_hi': hi,
            'status': self.status,
            'bits_used': self.bits_used,
            'elapsed': self.elapsed,
            'path': self.path
        }

    @classmethod
    def from_json_dict(cls, d : dict) -> 'CertRecord':
        '''
        - Raises:
            - ``KeyError`` or ``ValueError`` on a malformed dict
        '''
        enclosure = Interval.from_strings(d['det_lo'], d['det_hi'], int(d['bits_used']))
        return cls(int(d['n']), int(d['m']), ThetaChoice.parse(d['theta']), enclosure,
                   d['status'], int(d['bits_used']), float(d['elapsed']), d['path'])

def certification_jobs(n : int) -> list:
    '''
    Every (m, theta) pair for 2 <= m <= n, sorted by m and then theta.
    '''
    if not isinstance(n, int) or n < 2:
        raise ValueError(f'n must be an integer >= 2, got {n!r}')
    return [(m, theta) for m in range(2, n + 1) for theta in theta_choices(m)]

def _symbolic_determinant(system, m, theta, term_budget):
    if m - 1 > SYMBOLIC_MAX_SIZE:
        return None
    try:
        return system.determinant(m, theta, term_budget)
    except TermBudgetExceeded as e:
        logger.debug(f'Symbolic det J_({m}, {theta}) abandoned: {e}')
        return None

def certify_pair(system, m : int, theta : ThetaChoice, cfg : PrecisionConfig = None,
                term_budget : int = DEFAULT_TERM_BUDGET) -> CertRecord:
    '''
    Certifies det J_{m, theta} != 0 at gamma*.

    The symbolic determinant is tried first for small matrices; when it is
    too large, or its enclosure contains zero, the evaluated matrix goes
    through interval elimination. Precision climbs the ladder of ``cfg``
    until the enclosure excludes zero.

    - Arguments:
        - system: a ``JacobianSystem`` covering m

    - Returns:
        - a ``CertRecord``, ``INDETERMINATE`` when the ladder is exhausted
    '''
    theta.validate(m)
    if cfg is None:
        cfg = PrecisionConfig()
    start = time.time()
    det_poly = _symbolic_determinant(system, m, theta, term_budget)

    def attempt(step):
        symbolic_value = None
        if det_poly is not None:
            symbolic_value = eval_poly_interval(det_poly, system.point(step.bits), step.bits)
            if symbolic_value.excludes_zero():
                return symbolic_value, SYMBOLIC
        try:
            return interval_det(system.values(m, theta, step.bits), step.bits), INTERVAL_LU
        except IntervalContainsZero:
            if symbolic_value is not None:
                return symbolic_value, SYMBOLIC
            return Interval.unbounded(step.bits), INTERVAL_LU

    result, step, accepted = with_escalation(attempt, cfg, lambda r: r[0].excludes_zero())
    enclosure, path = result
    status = CERTIFIED_NONZERO if accepted else INDETERMINATE
    elapsed = time.time() - start
    if accepted:
        logger.info(f'Certified det J_({m}, {theta}) != 0 at {step.bits} bits via {path}')
    else:
        logger.warning(f'det J_({m}, {theta}) left indeterminate after {step.bits} bits')
    return CertRecord(system.n, m, theta, enclosure, status, step.bits, elapsed, path)

def verdict(records) -> str:
    '''
    ``CERTIFIED_NONZERO`` when there is at least one record and all of them
    are certified, ``INDETERMINATE`` otherwise.
    '''
    records = list(records)
    if records and all(r.certified for r in records):
        return CERTIFIED_NONZERO
    return INDETERMINATE
