from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from collections import namedtuple
from functools import lru_cache

from ..core.constants import GAMMA_N, ETA_N, DELTA_N, ETA_TILDE_N, DELTA_TILDE_N, \
    G_AT_1, H_AT_1, SEQUENCES, SERIES, RECURRENCE, IDENTITY, QUADRATURE, METHODS
from ..exact.combinatorics import factorial
from ..numerics.constants import enclose_e, enclose_gamma, enclose_zeta
from ..numerics.interval import Interval, resolve_bits
from ..polys.poly import gamma_var
from .quadrature import delta_n_quadrature
from .series import eta_n, eta_tilde_n, multisection

logger = logging.getLogger(__package__)

def _check_order(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f'n must be a nonnegative integer, got {n!r}')

@lru_cache(maxsize = None)
def _gamma_value(n, bits):
    if n == 0:
        return Interval.exact(1, bits)
    acc = enclose_gamma(bits) * _gamma_value(n - 1, bits)
    for j in range(n - 1):
        weight = factorial(n - 1) // factorial(j)
        acc = acc + enclose_zeta(n - j, bits) * _gamma_value(j, bits) * weight
    return acc

def gamma_n(n : int, cfg) -> Interval:
    '''
    Encloses gamma^(n) = (-1)^n Gamma^(n)(1) with the cumulant recurrence

    gamma^(n) = gamma gamma^(n-1) + sum_{j <= n-2} ((n-1)!/j!) zeta(n-j) gamma^(j)

    starting from gamma^(0) = 1.
    '''
    _check_order(n)
    return _gamma_value(n, resolve_bits(cfg))

def gamma_sequence(n : int, cfg) -> tuple:
    '''
    Returns the enclosures of gamma^(0), ..., gamma^(n).
    '''
    _check_order(n)
    bits = resolve_bits(cfg)
    return tuple(_gamma_value(k, bits) for k in range(n + 1))

def gamma_star(n : int, cfg) -> dict:
    '''
    Assignment ``VarId -> Interval`` of the true values of gamma, gamma^(2),
    ..., gamma^(n), the point at which polynomial relations are evaluated.
    '''
    _check_order(n)
    bits = resolve_bits(cfg)
    return {gamma_var(k): _gamma_value(k, bits) for k in range(1, n + 1)}

def delta_n(n : int, cfg) -> Interval:
    '''delta^(n) = e (eta^(n) - gamma^(n)), exactly -1 for n = 0'''
    _check_order(n)
    bits = resolve_bits(cfg)
    if n == 0:
        return Interval.exact(-1, bits)
    return enclose_e(bits) * (eta_n(n, bits) - _gamma_value(n, bits))

def delta_tilde_n(n : int, cfg) -> Interval:
    '''delta~^(n) = e (eta~^(n) - gamma^(n))'''
    _check_order(n)
    bits = resolve_bits(cfg)
    return enclose_e(bits) * (eta_tilde_n(n, bits) - _gamma_value(n, bits))

_ConstantRecordBase = namedtuple('ConstantRecord', 'sequence n value bits method')

class ConstantRecord(_ConstantRecordBase):
    '''
    One enclosed value of a sequence together with the precision and the method
    that produced it.
    '''
    __slots__ = ()

    def __new__(cls, sequence, n, value, bits, method):
        if sequence not in SEQUENCES:
            raise ValueError('sequence must be one of {}'.format(','.join(SEQUENCES)))
        if method not in METHODS:
            raise ValueError('method must be one of {}'.format(','.join(METHODS)))
        _check_order(n)
        return super(ConstantRecord, cls).__new__(cls, sequence, n, value, bits, method)

_PRODUCERS = {
    GAMMA_N: (gamma_n, RECURRENCE),
    ETA_N: (eta_n, SERIES),
    ETA_TILDE_N: (eta_tilde_n, SERIES),
    DELTA_N: (delta_n, IDENTITY),
    DELTA_TILDE_N: (delta_tilde_n, IDENTITY),
    G_AT_1: (lambda n, cfg: multisection(n, cfg)[0], SERIES),
    H_AT_1: (lambda n, cfg: multisection(n, cfg)[1], SERIES)
}

def constant_record(sequence : str, n : int, cfg, method : str = None) -> ConstantRecord:
    '''
    Computes one value of ``sequence`` with its default method. ``DELTA_N`` also
    accepts ``method = QUADRATURE``.

    - Raises:
        - ``ValueError`` for an unknown sequence or an unsupported method
    '''
    if sequence not in _PRODUCERS:
        raise ValueError('sequence must be one of {}'.format(','.join(SEQUENCES)))
    bits = resolve_bits(cfg)
    fn, default_method = _PRODUCERS[sequence]
    if method is None or method == default_method:
        return ConstantRecord(sequence, n, fn(n, bits), bits, default_method)
    if sequence == DELTA_N and method == QUADRATURE:
        return ConstantRecord(sequence, n, delta_n_quadrature(n, bits), bits, QUADRATURE)
    raise ValueError(f'{sequence} cannot be computed with method {method}')
