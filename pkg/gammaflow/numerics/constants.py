from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from ..core.constants import GUARD_BITS
from ..exact.combinatorics import bernoulli, even_zeta_coeff, factorial
from .interval import Interval, working_precision, resolve_bits

logger = logging.getLogger(__package__)

def _em_nodes(bits):
    # Number of terms summed exactly before the Euler-Maclaurin correction.
    return bits // 4 + 16

def _threshold(bits):
    return Fraction(1, 2 ** (bits + GUARD_BITS))

@lru_cache(maxsize = None)
def _enclose_e(bits):
    eps = _threshold(bits)
    total = Fraction(0)
    k = 0
    while True:
        total += Fraction(1, factorial(k))
        k += 1
        tail = Fraction(2, factorial(k))
        if tail < eps:
            break
    return Interval.hull(total, total + tail, bits)

def enclose_e(cfg) -> Interval:
    '''
    Encloses e as sum_{k <= K} 1/k! plus the tail [0, 2/(K+1)!].

    - Arguments:
        - cfg: ``PrecisionConfig`` or bits
    '''
    return _enclose_e(resolve_bits(cfg))

@lru_cache(maxsize = None)
def _enclose_pi(bits):
    with working_precision(bits + GUARD_BITS):
        value = +iv.pi
    return Interval(value, bits)

def enclose_pi(cfg) -> Interval:
    return _enclose_pi(resolve_bits(cfg))

@lru_cache(maxsize = None)
def _enclose_gamma(bits):
    eps = _threshold(bits)
    N = _em_nodes(bits) * 2
    harmonic = sum(Fraction(1, k) for k in range(1, N + 1))
    total = harmonic - Fraction(1, 2 * N)
    p = 1
    while True:
        total += bernoulli(2 * p) / (2 * p * Fraction(N) ** (2 * p))
        remainder = 2 * abs(bernoulli(2 * p + 2)) / ((2 * p + 2) * Fraction(N) ** (2 * p + 2))
        if remainder < eps:
            break
        p += 1
    logger.debug(f'Euler-Mascheroni enclosure at {bits} bits: N = {N}, p = {p}')
    log_n = Interval.exact(N, bits).log()
    return Interval.hull(total - remainder, total + remainder, bits) - log_n

def enclose_gamma(cfg) -> Interval:
    '''
    Encloses the Euler-Mascheroni constant by Euler-Maclaurin summation of the
    harmonic numbers:

    gamma = H_N - ln N - 1/(2N) + sum_{k <= p} B_{2k} / (2k N^{2k}) + R

    with |R| <= 2 |B_{2p+2}| / ((2p+2) N^{2p+2}). H_N is summed exactly and
    ln N comes from ``mpmath.iv``.
    '''
    return _enclose_gamma(resolve_bits(cfg))

def _rising(s, k):
    acc = 1
    for i in range(k):
        acc *= s + i
    return acc

@lru_cache(maxsize = None)
def _enclose_zeta_em(s, bits):
    eps = _threshold(bits)
    N = _em_nodes(bits)
    n = Fraction(N)
    total = sum(Fraction(1, k ** s) for k in range(1, N))
    total += n ** (1 - s) / (s - 1) + n ** (-s) / 2
    j = 1
    while True:
        term = bernoulli(2 * j) / factorial(2 * j) * _rising(s, 2 * j - 1) * n ** (1 - s - 2 * j)
        total += term
        nxt = bernoulli(2 * j + 2) / factorial(2 * j + 2) * _rising(s, 2 * j + 1) * n ** (-1 - s - 2 * j)
        if abs(nxt) < eps:
            break
        j += 1
    remainder = 2 * abs(nxt)
    return Interval.hull(total - remainder, total + remainder, bits)

def enclose_zeta_em(s : int, cfg) -> Interval:
    '''
    Euler-Maclaurin enclosure of zeta(s) for any integer ``s >= 2``. The partial
    sums are exact rationals and the remainder is bounded by twice the first
    omitted correction term.

    - Raises:
        - ``ValueError`` if ``s < 2``
    '''
    if not isinstance(s, int) or s < 2:
        raise ValueError(f'zeta(s) needs an integer s >= 2, got {s!r}')
    return _enclose_zeta_em(s, resolve_bits(cfg))

@lru_cache(maxsize = None)
def _enclose_zeta(s, bits):
    if s % 2 == 1:
        return _enclose_zeta_em(s, bits)
    zeta_2 = _enclose_pi(bits) ** 2 / 6
    if s == 2:
        return zeta_2
    return zeta_2 ** (s // 2) * even_zeta_coeff(s // 2)

def enclose_zeta(s : int, cfg) -> Interval:
    '''
    Enclosure of zeta(s), ``s >= 2``. Even arguments go through
    zeta(2m) = b_m zeta(2)^m with zeta(2) = pi^2 / 6; odd arguments through
    Euler-Maclaurin.

    - Raises:
        - ``ValueError`` if ``s < 2``
    '''
    if not isinstance(s, int) or s < 2:
        raise ValueError(f'zeta(s) needs an integer s >= 2, got {s!r}')
    return _enclose_zeta(s, resolve_bits(cfg))
