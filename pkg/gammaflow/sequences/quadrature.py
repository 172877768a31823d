'''
Validated quadrature of |delta^(n)| = e int_1^oo (ln u)^n e^-u du.

The interval [1, T] is cut into geometric panels. On each panel the integrand is
expanded as a Taylor polynomial around the midpoint with interval coefficients,
and the Lagrange remainder is bounded by the next coefficient evaluated over the
whole panel. Panels whose remainder is too large are bisected. The tail beyond T
is bounded in closed form.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from fractions import Fraction

from mpmath import iv
from mpmath import libmp

from ..core.constants import GUARD_BITS
from ..numerics.constants import enclose_e
from ..numerics.interval import Interval, working_precision, resolve_bits, iv_point

logger = logging.getLogger(__package__)

_DEGREE = 20
_PANEL_RATIO = Fraction(5, 4)
_MAX_DEPTH = 40

def _series_mul(a, b, K):
    out = []
    for k in range(K + 1):
        acc = a[0] * b[k]
        for i in range(1, k + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out

def _series_pow(a, n, K):
    result = [iv.mpf(1)] + [iv.mpf(0)] * K
    base = list(a)
    while n:
        if n & 1:
            result = _series_mul(result, base, K)
        n >>= 1
        if n:
            base = _series_mul(base, base, K)
    return result

def _log_series(x, K):
    # ln(x + t) = ln x + sum_k (-1)^(k+1) t^k / (k x^k)
    out = [iv.ln(x)]
    inv = 1 / x
    power = inv
    for k in range(1, K + 1):
        term = power / k
        out.append(term if k % 2 == 1 else -term)
        power = power * inv
    return out

def _exp_neg_series(x, K):
    # exp(-(x + t)) = e^-x sum_k (-1)^k t^k / k!
    out = [iv.exp(-x)]
    for k in range(1, K + 1):
        out.append(-out[-1] / k)
    return out

def _integrand_series(x, n, K):
    return _series_mul(_series_pow(_log_series(x, K), n, K), _exp_neg_series(x, K), K)

def _upper(value):
    return Interval(value, 64).hi

def _panel(n, a, b):
    '''
    Returns (enclosure, remainder bound) of int_a^b (ln u)^n e^-u du as raw
    ``iv`` values. Must run inside ``working_precision``.
    '''
    centre = iv_point((a + b) / 2)
    h = iv_point((b - a) / 2)
    coeffs = _integrand_series(centre, n, _DEGREE)
    total = iv.mpf(0)
    h_power = h
    for k in range(_DEGREE + 1):
        if k % 2 == 0:
            total = total + coeffs[k] * 2 * h_power / (k + 1)
        h_power = h_power * h
    box = iv.make_mpf((iv_point(a)._mpi_[0], iv_point(b)._mpi_[1]))
    top = _integrand_series(box, n, _DEGREE + 1)[_DEGREE + 1]
    remainder = abs(top) * 2 * h_power * h / (_DEGREE + 2)
    r = remainder._mpi_[1]
    total = total + iv.make_mpf((libmp.mpf_neg(r), r))
    return total, _upper(remainder)

def tail_bound(n : int, T, bits : int) -> Interval:
    '''
    Upper bound of int_T^oo (ln u)^n e^-u du, valid when T ln T > n:

    e^-T (ln T)^n (1 + n / (T ln T - n))
    '''
    T = Interval.exact(T, bits)
    log_t = T.log()
    slack = T * log_t - n
    if not slack.is_positive():
        raise ValueError(f'Tail bound needs T ln T > n, got T = {T!r}')
    return (-T).exp() * log_t ** n * (1 + n / slack)

def _choose_cutoff(n, bits, budget):
    T = Fraction(16)
    while True:
        try:
            bound = tail_bound(n, T, bits)
            if bound.hi <= budget:
                return T, bound
        except ValueError:
            pass
        T *= 2

def quadrature_abs_delta(n : int, cfg, tolerance = None) -> Interval:
    '''
    Encloses |delta^(n)| by validated quadrature.

    - Arguments:
        - n: order, at least 1
        - cfg: ``PrecisionConfig`` or bits
        - tolerance: target bound on the total quadrature error before the \
            factor e. Defaults to 2^-(bits // 3).

    - Returns:
        - the enclosure, whose width is what was actually proven
    '''
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'n must be an integer >= 1, got {n!r}')
    bits = resolve_bits(cfg)
    if tolerance is None:
        tolerance = Fraction(1, 2 ** (bits // 3))
    tolerance = Fraction(tolerance)
    T, tail = _choose_cutoff(n, bits, tolerance / 4)
    density = (tolerance / 2) / (T - 1)

    edges = [Fraction(1)]
    while edges[-1] * _PANEL_RATIO < T:
        edges.append(edges[-1] * _PANEL_RATIO)
    edges.append(T)
    pending = [(edges[i], edges[i + 1], 0) for i in range(len(edges) - 1)]

    panels = 0
    with working_precision(bits + GUARD_BITS):
        total = iv.mpf(0)
        while pending:
            a, b, depth = pending.pop()
            value, remainder = _panel(n, a, b)
            if remainder > density * (b - a) and depth < _MAX_DEPTH:
                mid = (a + b) / 2
                pending.append((a, mid, depth + 1))
                pending.append((mid, b, depth + 1))
                continue
            total = total + value
            panels += 1
    body = Interval(total, bits)
    integral = Interval.hull(body.lo, body.hi + tail.hi, bits)
    result = enclose_e(bits) * integral
    logger.debug(f'Quadrature for |delta^({n})|: T = {T}, {panels} panels, '
                f'width {float(result.width):.3e}')
    return result

def delta_n_quadrature(n : int, cfg, tolerance = None) -> Interval:
    '''
    Enclosure of delta^(n) independent of the series, with sign (-1)^(n+1).
    '''
    value = quadrature_abs_delta(n, cfg, tolerance)
    return value if n % 2 == 1 else -value
