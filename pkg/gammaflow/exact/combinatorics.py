from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import math
import threading
from fractions import Fraction
from functools import lru_cache

def _check_nonnegative(name, value):
    if not isinstance(value, int) or value < 0:
        raise ValueError(f'{name} must be a nonnegative integer, got {value!r}')

def factorial(n : int) -> int:
    '''
    - Arguments:
        - n (int): nonnegative integer

    - Returns:
        - n! as an exact integer

    - Raises:
        - ``ValueError`` if n is negative
    '''
    _check_nonnegative('n', n)
    return math.factorial(n)

def binomial(n : int, k : int) -> int:
    '''
    Returns the binomial coefficient C(n, k), which is zero when ``k > n``.

    - Raises:
        - ``ValueError`` if n or k is negative
    '''
    _check_nonnegative('n', n)
    _check_nonnegative('k', k)
    return math.comb(n, k)

class _BernoulliTable:
    '''
    Grows the table of Bernoulli numbers on demand with the recurrence
    sum_{j=0}^{m} C(m+1, j) B_j = 0. Extension happens under a lock; reads of an
    index already in the table do not block.
    '''
    def __init__(self):
        self._values = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def _extend_to(self, m):
        with self._lock:
            values = self._values
            while len(values) <= m:
                i = len(values)
                if i % 2 == 1:
                    values.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(i):
                    if values[j]:
                        acc += math.comb(i + 1, j) * values[j]
                values.append(-acc / (i + 1))

    def __getitem__(self, m):
        if m >= len(self._values):
            self._extend_to(m)
        return self._values[m]

_BERNOULLI = _BernoulliTable()

def bernoulli_number(m : int) -> Fraction:
    '''
    Bernoulli number B_m for any ``m >= 0``, with B_1 = -1/2.
    '''
    _check_nonnegative('m', m)
    return _BERNOULLI[m]

def bernoulli(m : int) -> Fraction:
    '''
    Exact Bernoulli number B_m for even ``m >= 2``.

    - Raises:
        - ``ValueError`` if m is odd or not positive
    '''
    if not isinstance(m, int) or m < 2 or m % 2 != 0:
        raise ValueError(f'bernoulli expects an even integer m >= 2, got {m!r}')
    return _BERNOULLI[m]

@lru_cache(maxsize = None)
def even_zeta_coeff(m : int) -> Fraction:
    '''
    Returns b_m such that zeta(2m) = b_m * zeta(2)^m, namely
    (-1)^(m+1) 2^(3m-1) 3^m B_{2m} / (2m)!.

    - Raises:
        - ``ValueError`` if ``m < 2``
    '''
    if not isinstance(m, int) or m < 2:
        raise ValueError(f'even_zeta_coeff expects an integer m >= 2, got {m!r}')
    sign = -1 if m % 2 == 0 else 1
    return sign * Fraction(2 ** (3 * m - 1) * 3 ** m) * bernoulli(2 * m) / math.factorial(2 * m)

@lru_cache(maxsize = None)
def _reflection_series(k):
    # Coefficients of x/sin(x) in powers of x^2, by inverting sin(x)/x.
    if k == 0:
        return (Fraction(1),)
    previous = _reflection_series(k - 1)
    acc = Fraction(0)
    for j in range(1, k + 1):
        s_j = Fraction((-1) ** j, math.factorial(2 * j + 1))
        acc += s_j * previous[k - j]
    return previous + (-acc,)

def reflection_coeff(k : int) -> Fraction:
    '''
    Returns c_k with pi t / sin(pi t) = sum_k c_k pi^(2k) t^(2k).

    - Raises:
        - ``ValueError`` if k is negative
    '''
    _check_nonnegative('k', k)
    return _reflection_series(k)[k]
