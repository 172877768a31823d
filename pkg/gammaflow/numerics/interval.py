from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import threading
from collections import namedtuple
from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv
from mpmath import libmp
from mpmath.libmp import round_floor, round_ceiling

from ..core.constants import GUARD_BITS, MIN_BITS, DEFAULT_BITS, \
    DEFAULT_MAX_ESCALATIONS, DEFAULT_ESCALATION_FACTOR
from ..core.errors import IntervalContainsZero

logger = logging.getLogger(__package__)

_NONFINITE = (libmp.finf, libmp.fninf, libmp.fnan)

# ``iv.prec`` is process-global state, so every change goes through this lock.
_PRECISION_LOCK = threading.RLock()

@contextmanager
def working_precision(bits : int):
    '''
    Sets the precision of the ``mpmath.iv`` context for the duration of the block
    and restores the previous value afterwards.
    '''
    with _PRECISION_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            yield
        finally:
            iv.prec = saved

def decimal_string(value : Fraction, digits : int, rounding : str = 'half_even') -> str:
    '''
    Formats an exact rational with ``digits`` digits after the decimal point.

    - Arguments:
        - value: the exact number to format
        - digits: number of decimals
        - rounding: one of ``'floor'``, ``'ceil'``, ``'half_even'`` or \
            ``'trunc'``. Truncation keeps the sign of a negative value that \
            cuts to zero, as in ``'-0.000'``.
    '''
    value = Fraction(value)
    scaled = value * 10 ** digits
    negative = None
    if rounding == 'floor':
        n = scaled.numerator // scaled.denominator
    elif rounding == 'ceil':
        n = -(-scaled.numerator // scaled.denominator)
    elif rounding == 'half_even':
        n = round(scaled)
    elif rounding == 'trunc':
        negative = value < 0
        n = abs(scaled.numerator) // scaled.denominator
    else:
        raise ValueError(f'Unknown rounding mode {rounding}')
    if negative is None:
        negative = n < 0
    sign = '-' if negative else ''
    body = str(abs(n))
    if digits == 0:
        return sign + body
    body = body.rjust(digits + 1, '0')
    return f'{sign}{body[:-digits]}.{body[-digits:]}'

def _raw_from_fraction(q, prec, rounding):
    return libmp.from_rational(q.numerator, q.denominator, prec, rounding)

def _raw_to_fraction(raw):
    if raw in _NONFINITE:
        raise ValueError('Endpoint is not finite')
    p, q = libmp.to_rational(raw)
    return Fraction(int(p), int(q))

class Interval(object):
    '''
    Closed real interval [lo, hi] with outward rounded endpoints.
    The value lives in ``mpmath.iv``; ``bits`` records the working precision that
    produced it. Arithmetic is carried out at ``bits + GUARD_BITS``.

    Intervals are immutable and can be pickled, so they travel freely between
    the processes of a flow.
    '''
    __slots__ = ('_v', '_bits')

    def __init__(self, value, bits : int):
        self._v = value
        self._bits = int(bits)

    @classmethod
    def _from_raw(cls, raw, bits):
        return cls(iv.make_mpf(tuple(raw)), bits)

    def __reduce__(self):
        return (Interval._from_raw, (self._v._mpi_, self._bits))

    @classmethod
    def exact(cls, x, bits : int = DEFAULT_BITS) -> 'Interval':
        '''
        Smallest machine interval at ``bits + GUARD_BITS`` containing ``x``.

        - Arguments:
            - x: int, Fraction, decimal string or Interval
        '''
        if isinstance(x, Interval):
            return x
        return cls.hull(x, x, bits)

    @classmethod
    def hull(cls, lo, hi, bits : int = DEFAULT_BITS) -> 'Interval':
        '''
        Interval enclosing the exact rationals ``lo <= hi``.
        '''
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError(f'Interval endpoints out of order: {lo} > {hi}')
        prec = bits + GUARD_BITS
        a = _raw_from_fraction(lo, prec, round_floor)
        b = _raw_from_fraction(hi, prec, round_ceiling)
        return cls(iv.make_mpf((a, b)), bits)

    @classmethod
    def ball(cls, mid, rad, bits : int = DEFAULT_BITS) -> 'Interval':
        mid = Fraction(mid)
        rad = abs(Fraction(rad))
        return cls.hull(mid - rad, mid + rad, bits)

    @classmethod
    def from_iv(cls, value, bits : int) -> 'Interval':
        '''
        Wraps a value of the ``mpmath.iv`` context.
        '''
        return cls(iv.convert(value), bits)

    @classmethod
    def unbounded(cls, bits : int = DEFAULT_BITS) -> 'Interval':
        '''The whole real line, used when no enclosure could be produced'''
        return cls(iv.make_mpf((libmp.fninf, libmp.finf)), bits)

    @property
    def bits(self) -> int:
        '''Working precision in bits'''
        return self._bits

    @property
    def iv(self):
        '''The underlying ``mpmath.iv`` interval'''
        return self._v

    @property
    def lo(self) -> Fraction:
        '''Exact lower endpoint'''
        return _raw_to_fraction(self._v._mpi_[0])

    @property
    def hi(self) -> Fraction:
        '''Exact upper endpoint'''
        return _raw_to_fraction(self._v._mpi_[1])

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_finite(self) -> bool:
        a, b = self._v._mpi_
        return a not in _NONFINITE and b not in _NONFINITE

    def with_bits(self, bits : int) -> 'Interval':
        return Interval(self._v, bits)

    # Sign queries

    def is_positive(self) -> bool:
        '''True when every point of the interval is > 0'''
        a = self._v._mpi_[0]
        if a in _NONFINITE:
            return a == libmp.finf
        return libmp.mpf_sign(a) > 0

    def is_negative(self) -> bool:
        '''True when every point of the interval is < 0'''
        b = self._v._mpi_[1]
        if b in _NONFINITE:
            return b == libmp.fninf
        return libmp.mpf_sign(b) < 0

    def excludes_zero(self) -> bool:
        return self.is_positive() or self.is_negative()

    def contains(self, x) -> bool:
        '''
        True when ``x`` (a number or an Interval) lies inside this interval.
        '''
        if isinstance(x, Interval):
            return self.is_finite() and x.is_finite() and \
                self.lo <= x.lo and x.hi <= self.hi
        x = Fraction(x)
        return self.is_finite() and self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return not self.excludes_zero()

    def overlaps(self, other : 'Interval') -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def mignitude(self) -> Fraction:
        '''Smallest absolute value over the interval'''
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def magnitude(self) -> Fraction:
        '''Largest absolute value over the interval'''
        return max(abs(self.lo), abs(self.hi))

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, Interval):
            return other
        return Interval.exact(other, self._bits)

    def _binary(self, other, fn):
        other = self._coerce(other)
        bits = max(self._bits, other._bits)
        with working_precision(bits + GUARD_BITS):
            value = fn(self._v, other._v)
        return Interval(value, bits)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._coerce(other).__add__(self)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._coerce(other).__mul__(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.excludes_zero():
            raise IntervalContainsZero(f'Division by an interval containing zero: {other!r}')
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        with working_precision(self._bits + GUARD_BITS):
            value = -self._v
        return Interval(value, self._bits)

    def __pos__(self):
        return self

    def __abs__(self):
        with working_precision(self._bits + GUARD_BITS):
            value = abs(self._v)
        return Interval(value, self._bits)

    def __pow__(self, n : int):
        if not isinstance(n, int):
            raise ValueError('Only integer powers are supported')
        if n < 0:
            return Interval.exact(1, self._bits) / (self ** (-n))
        with working_precision(self._bits + GUARD_BITS):
            value = self._v ** n
        return Interval(value, self._bits)

    def _unary(self, fn):
        with working_precision(self._bits + GUARD_BITS):
            value = fn(self._v)
        return Interval(value, self._bits)

    def exp(self) -> 'Interval':
        return self._unary(iv.exp)

    def log(self) -> 'Interval':
        if not self.is_positive():
            raise ValueError(f'log of an interval that is not strictly positive: {self!r}')
        return self._unary(iv.ln)

    def sqrt(self) -> 'Interval':
        if self.lo < 0:
            raise ValueError(f'sqrt of an interval with negative points: {self!r}')
        return self._unary(iv.sqrt)

    def widen(self, radius) -> 'Interval':
        '''
        Returns the interval grown by ``radius`` on both sides.
        '''
        radius = abs(Fraction(radius))
        return Interval.hull(self.lo - radius, self.hi + radius, self._bits)

    def hull_with(self, other : 'Interval') -> 'Interval':
        return Interval.hull(min(self.lo, other.lo), max(self.hi, other.hi),
                            max(self._bits, other._bits))

    def intersect(self, other : 'Interval') -> 'Interval':
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError('Intervals do not intersect')
        return Interval.hull(lo, hi, max(self._bits, other._bits))

    # Output

    def lo_str(self, digits : int) -> str:
        '''Lower endpoint rounded down to ``digits`` decimals'''
        if self._v._mpi_[0] in _NONFINITE:
            return '-inf'
        return decimal_string(self.lo, digits, 'floor')

    def hi_str(self, digits : int) -> str:
        '''Upper endpoint rounded up to ``digits`` decimals'''
        if self._v._mpi_[1] in _NONFINITE:
            return 'inf'
        return decimal_string(self.hi, digits, 'ceil')

    @classmethod
    def from_strings(cls, lo : str, hi : str, bits : int = DEFAULT_BITS) -> 'Interval':
        '''
        Inverse of ``lo_str``/``hi_str``. ``'-inf'`` and ``'inf'`` give an
        unbounded interval.
        '''
        if lo == '-inf' or hi == 'inf':
            return cls.unbounded(bits)
        return cls.hull(Fraction(lo), Fraction(hi), bits)

    def endpoint_digits(self) -> int:
        '''
        Number of decimals that keeps outward rounded endpoint strings within a
        few ulps of the binary endpoints.
        '''
        return (self._bits + GUARD_BITS) * 30103 // 100000 + 4

    def to_float(self) -> float:
        return float(self.mid)

    def __repr__(self):
        if not self.is_finite():
            return f'Interval(<unbounded>, bits={self._bits})'
        return f'Interval([{self.lo_str(20)}, {self.hi_str(20)}], bits={self._bits})'

_OPS = {
    'add': Interval.__add__,
    'sub': Interval.__sub__,
    'mul': Interval.__mul__,
    'div': Interval.__truediv__
}

def iv_arith(a : Interval, b : Interval, op : str) -> Interval:
    '''
    - Arguments:
        - a, b: operands
        - op: one of ``'add'``, ``'sub'``, ``'mul'``, ``'div'``

    - Returns:
        - an enclosure of the exact image ``a op b``

    - Raises:
        - ``ValueError`` on unknown op
        - ``IntervalContainsZero`` when dividing by an interval containing zero
    '''
    if op not in _OPS:
        raise ValueError('op must be one of {}'.format(','.join(_OPS)))
    return _OPS[op](a, b)

_PrecisionConfigBase = namedtuple('PrecisionConfig', 'bits max_escalations escalation_factor')

class PrecisionConfig(_PrecisionConfigBase):
    '''
    Working precision and escalation schedule.

    - Arguments:
        - bits (int): starting precision, at least 64
        - max_escalations (int): how many times precision may be raised
        - escalation_factor (int): multiplier applied at each escalation, at least 2
    '''
    __slots__ = ()

    def __new__(cls, bits : int = DEFAULT_BITS, max_escalations : int = DEFAULT_MAX_ESCALATIONS,
                escalation_factor : int = DEFAULT_ESCALATION_FACTOR):
        if not isinstance(bits, int) or bits < MIN_BITS:
            raise ValueError(f'bits must be an integer >= {MIN_BITS}, got {bits!r}')
        if not isinstance(max_escalations, int) or max_escalations < 0:
            raise ValueError(f'max_escalations must be a nonnegative integer, got {max_escalations!r}')
        if not isinstance(escalation_factor, int) or escalation_factor < 2:
            raise ValueError(f'escalation_factor must be an integer >= 2, got {escalation_factor!r}')
        return super(PrecisionConfig, cls).__new__(cls, bits, max_escalations, escalation_factor)

    def with_bits(self, bits : int) -> 'PrecisionConfig':
        return PrecisionConfig(bits, self.max_escalations, self.escalation_factor)

    def escalate(self) -> 'PrecisionConfig':
        '''
        Next rung of the ladder. The escalation budget is not consumed here;
        ``ladder()`` bounds the number of rungs.
        '''
        return self.with_bits(self.bits * self.escalation_factor)

    def ladder(self):
        '''
        Yields this config followed by ``max_escalations`` escalated configs.
        '''
        current = self
        yield current
        for _ in range(self.max_escalations):
            current = current.escalate()
            yield current

def with_escalation(fn, cfg : PrecisionConfig, accept = None):
    '''
    Calls ``fn(step)`` for each ``step`` of ``cfg.ladder()`` until the result is
    accepted. ``IntervalContainsZero`` raised by ``fn`` counts as a rejection.

    - Arguments:
        - fn: callable taking a ``PrecisionConfig``
        - cfg: the starting configuration
        - accept: predicate on the result, defaults to accepting anything

    - Returns:
        - (result, step, accepted): the last result obtained (``None`` if every \
            attempt raised), the config that produced it, and whether it was accepted
    '''
    result = None
    used = cfg
    for step in cfg.ladder():
        used = step
        try:
            result = fn(step)
        except IntervalContainsZero as e:
            logger.info(f'Escalating precision past {step.bits} bits: {e}')
            result = None
            continue
        if accept is None or accept(result):
            return result, step, True
        logger.info(f'Result not accepted at {step.bits} bits, escalating')
    return result, used, False

def resolve_bits(cfg) -> int:
    '''
    Accepts a ``PrecisionConfig`` or a plain number of bits and returns the bits.
    '''
    if cfg is None:
        return DEFAULT_BITS
    if isinstance(cfg, PrecisionConfig):
        return cfg.bits
    if isinstance(cfg, int) and cfg >= MIN_BITS:
        return cfg
    raise ValueError(f'Expected a PrecisionConfig or bits >= {MIN_BITS}, got {cfg!r}')

def iv_point(q):
    '''
    Outward rounded ``mpmath.iv`` enclosure of the rational ``q`` at the current
    ``iv.prec``. Meant to be called inside ``working_precision``.
    '''
    q = Fraction(q)
    prec = iv.prec
    a = _raw_from_fraction(q, prec, round_floor)
    b = _raw_from_fraction(q, prec, round_ceiling)
    return iv.make_mpf((a, b))
