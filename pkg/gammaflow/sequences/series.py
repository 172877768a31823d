from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from fractions import Fraction

from ..core.constants import GUARD_BITS
from ..core.errors import IdentityViolation
from ..exact.combinatorics import factorial
from ..numerics.interval import Interval, resolve_bits

logger = logging.getLogger(__package__)

def _check_order(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f'n must be a nonnegative integer, got {n!r}')

def _term(n, z, k):
    return z ** k / (Fraction(k) ** n * factorial(k))

def partial_sum(n : int, z, K : int) -> Fraction:
    '''
    Exact partial sum -n! sum_{k=1}^{K} z^k / (k^n k!).
    '''
    _check_order(n)
    z = Fraction(z)
    return -factorial(n) * sum((_term(n, z, k) for k in range(1, K + 1)), Fraction(0))

def _truncation(n, z, bits, parity = None):
    '''
    Sums the terms of sum_k z^k / (k^n k!) until the next one is below
    2^-(bits + GUARD_BITS) past k = 2|z| + 2, where consecutive terms at least
    halve. Returns the exact sum restricted to ``parity`` and the tail bound.
    '''
    eps = Fraction(1, 2 ** (bits + GUARD_BITS))
    scale = factorial(n)
    start = 2 * abs(z) + 2
    total = Fraction(0)
    k = 0
    while True:
        nxt = abs(_term(n, z, k + 1)) * scale
        if k >= start and nxt <= eps:
            break
        k += 1
        if parity is None or k % 2 == parity:
            total += _term(n, z, k)
    return total, 2 * nxt

def eval_F(n : int, z, cfg) -> Interval:
    '''
    Encloses F_n(z) = -n! sum_{k >= 1} z^k / (k^n k!) from exact partial sums
    and a tail of at most twice the first omitted term.

    - Arguments:
        - n: nonnegative order
        - z: any rational
        - cfg: ``PrecisionConfig`` or bits
    '''
    _check_order(n)
    bits = resolve_bits(cfg)
    z = Fraction(z)
    if z == 0:
        return Interval.exact(0, bits)
    total, tail = _truncation(n, z, bits)
    centre = -factorial(n) * total
    return Interval.ball(centre, tail, bits)

def eta_n(n : int, cfg) -> Interval:
    '''eta^(n) = F_n(-1)'''
    return eval_F(n, -1, cfg)

def eta_tilde_n(n : int, cfg) -> Interval:
    '''eta~^(n) = F_n(1)'''
    return eval_F(n, 1, cfg)

def _half_series(n, bits, parity):
    total, tail = _truncation(n, Fraction(1), bits, parity)
    return Interval.ball(-factorial(n) * total, tail, bits)

def multisection(n : int, cfg):
    '''
    Returns (G_n(1), H_n(1)), the odd and even halves of F_n(1), from their own
    series. Both are checked against (eta~ - eta)/2 and (eta~ + eta)/2.

    - Raises:
        - ``IdentityViolation`` if the two ways of computing either value do not overlap
    '''
    _check_order(n)
    bits = resolve_bits(cfg)
    g_value = _half_series(n, bits, 1)
    h_value = _half_series(n, bits, 0)
    eta = eta_n(n, bits)
    eta_tilde = eta_tilde_n(n, bits)
    g_identity = (eta_tilde - eta) / 2
    h_identity = (eta_tilde + eta) / 2
    if not g_value.overlaps(g_identity):
        logger.error(f'G_{n}(1) series {g_value!r} misses {g_identity!r}')
        raise IdentityViolation(f'Odd multisection of F_{n}(1) does not match (eta~ - eta)/2')
    if not h_value.overlaps(h_identity):
        logger.error(f'H_{n}(1) series {h_value!r} misses {h_identity!r}')
        raise IdentityViolation(f'Even multisection of F_{n}(1) does not match (eta~ + eta)/2')
    return g_value, h_value
