'''
Determinants of small square matrices held in numpy object arrays.

Exact entries (``Poly``, ``Fraction`` or ``int``) go through fraction-free
elimination or memoized cofactor expansion. Interval entries go through
Gaussian elimination with the pivot of largest mignitude.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import itertools
import logging
from fractions import Fraction

import numpy as np

from ..core.constants import DEFAULT_BITS, DEFAULT_TERM_BUDGET
from ..core.errors import IntervalContainsZero, TermBudgetExceeded
from ..numerics.interval import Interval
from ..polys.poly import Poly

logger = logging.getLogger(__package__)

_STRATEGIES = ['auto', 'bareiss', 'minors']

# Cofactor expansion is used up to this size under 'auto'
_MINORS_MAX_SIZE = 3

def _as_square(M):
    M = np.asarray(M, dtype = object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f'Expected a square matrix, got shape {M.shape}')
    return M

def _is_zero(x):
    return x.is_zero() if isinstance(x, Poly) else x == 0

def _exact_div(a, b):
    if isinstance(a, Poly) or isinstance(b, Poly):
        return Poly._coerce(a).exquo(Poly._coerce(b))
    return Fraction(a) / b

def _check_budget(x, term_budget):
    if term_budget is not None and isinstance(x, Poly) and x.term_count() > term_budget:
        raise TermBudgetExceeded(f'Intermediate with {x.term_count()} terms exceeds budget {term_budget}')

def _inversions(perm):
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)

def permutation_det(M):
    '''
    Leibniz expansion over all permutations. Only meant as an oracle for
    small matrices.
    '''
    M = _as_square(M)
    size = M.shape[0]
    total = 0
    for perm in itertools.permutations(range(size)):
        term = 1
        for row, col in enumerate(perm):
            term = term * M[row, col]
        total = total - term if _inversions(perm) % 2 else total + term
    return total

def bareiss_det(M, term_budget : int = None):
    '''
    Fraction-free elimination. Every division is exact, so polynomial entries
    stay polynomials.

    - Raises:
        - ``TermBudgetExceeded`` when an intermediate polynomial has more than \
            ``term_budget`` terms
    '''
    A = _as_square(M).copy()
    size = A.shape[0]
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if _is_zero(A[k, k]):
            swap = next((r for r in range(k + 1, size) if not _is_zero(A[r, k])), None)
            if swap is None:
                return Poly() if isinstance(A[k, k], Poly) else Fraction(0)
            A[[k, swap]] = A[[swap, k]]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = _exact_div(A[i, j] * A[k, k] - A[i, k] * A[k, j], prev)
                _check_budget(value, term_budget)
                A[i, j] = value
        prev = A[k, k]
    last = A[size - 1, size - 1]
    return -last if sign < 0 else last

def minor_det(M, term_budget : int = None):
    '''
    Laplace expansion along the first remaining row, with the minors memoized
    by their column set.
    '''
    A = _as_square(M)
    size = A.shape[0]
    memo = {}

    def expand(row, cols):
        if row == size:
            return 1
        if cols in memo:
            return memo[cols]
        total = 0
        for pos, col in enumerate(cols):
            entry = A[row, col]
            if _is_zero(entry):
                continue
            term = entry * expand(row + 1, cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
            _check_budget(total, term_budget)
        memo[cols] = total
        return total

    return expand(0, tuple(range(size)))

def symbolic_det(M, strategy : str = 'auto', term_budget : int = DEFAULT_TERM_BUDGET) -> Poly:
    '''
    Exact determinant of a matrix of ``Poly``.

    - Arguments:
        - strategy: ``'bareiss'``, ``'minors'`` or ``'auto'``, which expands \
            cofactors for small matrices and eliminates otherwise
        - term_budget: largest allowed intermediate, None for no limit

    - Raises:
        - ``TermBudgetExceeded``
    '''
    if strategy not in _STRATEGIES:
        raise ValueError('strategy must be one of {}'.format(','.join(_STRATEGIES)))
    A = _as_square(M)
    if strategy == 'auto':
        strategy = 'minors' if A.shape[0] <= _MINORS_MAX_SIZE else 'bareiss'
    if strategy == 'minors':
        det = minor_det(A, term_budget)
    else:
        det = bareiss_det(A, term_budget)
    return Poly._coerce(det) if not isinstance(det, Poly) else det

def interval_det(M, bits : int = None) -> Interval:
    '''
    Encloses the determinant of an interval matrix by Gaussian elimination,
    picking in each column the pivot with the largest mignitude.

    - Raises:
        - ``IntervalContainsZero`` when every candidate pivot contains zero
    '''
    A = _as_square(M).copy()
    size = A.shape[0]
    if bits is None:
        bits = max((x.bits for x in A.flat), default = DEFAULT_BITS)
    det = Interval.exact(1, bits)
    for k in range(size):
        pivot_row = max(range(k, size), key = lambda r: A[r, k].mignitude())
        if A[pivot_row, k].mignitude() == 0:
            raise IntervalContainsZero(f'No pivot excludes zero in column {k}')
        if pivot_row != k:
            A[[k, pivot_row]] = A[[pivot_row, k]]
            det = -det
        pivot = A[k, k]
        det = det * pivot
        for i in range(k + 1, size):
            factor = A[i, k] / pivot
            A[i, k + 1:] = A[i, k + 1:] - A[k, k + 1:] * factor
    return det
