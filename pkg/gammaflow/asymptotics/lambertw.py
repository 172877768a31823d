from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from fractions import Fraction

from mpmath import mp
from mpmath import libmp

from ..core.constants import GUARD_BITS
from ..numerics.interval import Interval, resolve_bits

logger = logging.getLogger(__package__)

# Doublings of the bracket radius before giving up
_MAX_WIDENINGS = 64

def _estimate(q : Fraction, bits : int) -> Fraction:
    with mp.workprec(bits + 2 * GUARD_BITS):
        w = mp.re(mp.lambertw(mp.mpf(q.numerator) / q.denominator))
        p, r = libmp.to_rational(w._mpf_)
    return Fraction(int(p), int(r))

def _w_exp_w(w : Fraction, bits : int) -> Interval:
    point = Interval.exact(w, bits)
    return point * point.exp()

def _lower_end(q, w, bits):
    radius = Fraction(max(1, abs(w)), 2 ** (bits - 4))
    for _ in range(_MAX_WIDENINGS):
        w_lo = max(w - radius, Fraction(0))
        if _w_exp_w(w_lo, bits).hi <= q:
            return w_lo
        radius *= 2
    raise RuntimeError(f'Could not verify a lower bound of W({q})')

def _upper_end(q, w, bits):
    radius = Fraction(max(1, abs(w)), 2 ** (bits - 4))
    for _ in range(_MAX_WIDENINGS):
        w_hi = w + radius
        if _w_exp_w(w_hi, bits).lo >= q:
            return w_hi
        radius *= 2
    raise RuntimeError(f'Could not verify an upper bound of W({q})')

def lambert_w(x, cfg) -> Interval:
    '''
    Encloses the principal branch W(x), the unique w > 0 with w e^w = x.

    A floating point estimate from ``mpmath.lambertw`` is turned into a
    bracket [w_lo, w_hi] with w_lo e^w_lo <= x_lo and w_hi e^w_hi >= x_hi,
    both checked in interval arithmetic. The radius is doubled until the
    checks pass, so the estimate only affects the width, never soundness.

    - Arguments:
        - x: positive int, Fraction, decimal string or ``Interval``
        - cfg: ``PrecisionConfig`` or bits

    - Raises:
        - ``ValueError`` if x is not strictly positive
    '''
    bits = resolve_bits(cfg)
    if not isinstance(x, Interval):
        x = Interval.exact(x, bits)
    if not x.is_finite() or not x.is_positive():
        raise ValueError(f'lambert_w needs x > 0, got {x!r}')
    lo, hi = x.lo, x.hi
    w_lo = _lower_end(lo, _estimate(lo, bits), bits)
    w_hi = _upper_end(hi, _estimate(hi, bits), bits)
    return Interval.hull(w_lo, w_hi, bits)
