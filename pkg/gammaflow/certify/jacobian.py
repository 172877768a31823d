from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import threading
from collections import namedtuple

import numpy as np

from ..core.constants import THETA_GAMMA_OWN, THETA_GAMMA_SHIFTED, THETA_GAMMA_CONVENTIONS, \
    DEFAULT_TERM_BUDGET
from ..numerics.interval import Interval
from ..polys.poly import Poly, eval_poly_interval, gamma_var
from ..polys.relations import build_P
from ..sequences.moments import gamma_star
from .determinants import symbolic_det

logger = logging.getLogger(__package__)

_ThetaChoiceBase = namedtuple('ThetaChoice', 'k')

class ThetaChoice(_ThetaChoiceBase):
    '''
    The variable left out of a Jacobian: gamma itself (``k = 1``) or
    gamma^(k) with m <= k <= 2m for the context m.
    '''
    __slots__ = ()

    def __new__(cls, k : int):
        if not isinstance(k, int) or k < 1:
            raise ValueError(f'theta index must be a positive integer, got {k!r}')
        return super(ThetaChoice, cls).__new__(cls, k)

    @classmethod
    def gamma(cls) -> 'ThetaChoice':
        return cls(1)

    @classmethod
    def of(cls, k : int) -> 'ThetaChoice':
        '''theta = gamma^(k)'''
        return cls(k)

    @property
    def is_gamma(self) -> bool:
        return self.k == 1

    def validate(self, m : int) -> 'ThetaChoice':
        '''
        - Raises:
            - ``ValueError`` unless theta is gamma or m <= k <= 2m
        '''
        if not isinstance(m, int) or m < 2:
            raise ValueError(f'm must be an integer >= 2, got {m!r}')
        if not self.is_gamma and not m <= self.k <= 2 * m:
            raise ValueError(f'theta = gamma^({self.k}) is not allowed for m = {m}')
        return self

    @property
    def label(self) -> str:
        return 'gamma' if self.is_gamma else f'g{self.k}'

    @classmethod
    def parse(cls, text : str) -> 'ThetaChoice':
        '''Inverse of ``label``'''
        if text == 'gamma':
            return cls.gamma()
        if len(text) < 2 or text[0] != 'g' or not text[1:].isdigit() or int(text[1:]) < 2:
            raise ValueError(f'Malformed theta {text!r}')
        return cls.of(int(text[1:]))

    def __str__(self):
        return self.label

def theta_choices(m : int) -> list:
    '''
    gamma, then gamma^(m), ..., gamma^(2m): the m + 2 choices for m.
    '''
    return [ThetaChoice.gamma()] + [ThetaChoice.of(k) for k in range(m, 2 * m + 1)]

def jacobian_columns(m : int, theta : ThetaChoice, convention : str = THETA_GAMMA_SHIFTED) -> list:
    '''
    Column indices j of J_{m, theta}, ascending.

    - theta = gamma^(k): {2, ..., m-1} and k
    - theta = gamma, ``THETA_GAMMA_SHIFTED``: {2, ..., m}
    - theta = gamma, ``THETA_GAMMA_OWN``: {1, ..., m-1}

    Under ``THETA_GAMMA_SHIFTED`` the columns of theta = gamma are those of
    theta = gamma^(m), so both pairs certify the same determinant.
    '''
    theta.validate(m)
    if convention not in THETA_GAMMA_CONVENTIONS:
        raise ValueError('convention must be one of {}'.format(','.join(THETA_GAMMA_CONVENTIONS)))
    if not theta.is_gamma:
        return list(range(2, m)) + [theta.k]
    if convention == THETA_GAMMA_SHIFTED:
        return list(range(2, m + 1))
    return list(range(1, m))

def _poly_matrix(rows, columns, entry):
    M = np.empty((len(rows), len(columns)), dtype = object)
    for a, i in enumerate(rows):
        for b, j in enumerate(columns):
            M[a, b] = entry(i, j)
    return M

def jacobian_matrix(m : int, theta : ThetaChoice, convention : str = THETA_GAMMA_SHIFTED) -> np.ndarray:
    '''
    (m-1) x (m-1) matrix [dP_i / dgamma^(j)], rows P_2..P_m, columns from
    ``jacobian_columns``. Entries are ``Poly``.
    '''
    columns = jacobian_columns(m, theta, convention)
    return _poly_matrix(range(2, m + 1), columns,
                        lambda i, j: build_P(i).partial_derivative(gamma_var(j)))

class JacobianSystem:
    '''
    Everything needed to certify the Jacobians of P_2, ..., P_n: the relations,
    their derivatives, the enclosures of gamma* and the entry values, each
    computed once and cached per precision.

    - Arguments:
        - n: largest relation, at least 2
        - cache: optional ``PolyCache`` to load the relations from
        - convention: column set used for theta = gamma
    '''
    def __init__(self, n : int, cache = None, convention : str = THETA_GAMMA_SHIFTED):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f'n must be an integer >= 2, got {n!r}')
        if convention not in THETA_GAMMA_CONVENTIONS:
            raise ValueError('convention must be one of {}'.format(','.join(THETA_GAMMA_CONVENTIONS)))
        self._n = n
        self._convention = convention
        self._cache = cache
        self._polys = {}
        self._derivatives = {}
        self._points = {}
        self._values = {}
        self._dets = {}
        self._lock = threading.RLock()

    @property
    def n(self) -> int:
        return self._n

    @property
    def convention(self) -> str:
        return self._convention

    def relation(self, i : int) -> Poly:
        '''P_i, from the cache when one was given'''
        if not 2 <= i <= self._n:
            raise ValueError(f'P_{i} is outside 2..{self._n}')
        with self._lock:
            if i not in self._polys:
                if self._cache is not None:
                    self._polys[i], _ = self._cache.get(i)
                else:
                    self._polys[i] = build_P(i)
            return self._polys[i]

    def derivative(self, i : int, j : int) -> Poly:
        with self._lock:
            key = (i, j)
            if key not in self._derivatives:
                self._derivatives[key] = self.relation(i).partial_derivative(gamma_var(j))
            return self._derivatives[key]

    def point(self, bits : int) -> dict:
        '''Enclosures of gamma, ..., gamma^(2n) at ``bits``'''
        with self._lock:
            if bits not in self._points:
                self._points[bits] = gamma_star(2 * self._n, bits)
            return self._points[bits]

    def entry(self, i : int, j : int, bits : int) -> Interval:
        with self._lock:
            key = (i, j, bits)
            if key not in self._values:
                self._values[key] = eval_poly_interval(self.derivative(i, j), self.point(bits), bits)
            return self._values[key]

    def columns(self, m : int, theta : ThetaChoice) -> list:
        return jacobian_columns(m, theta, self._convention)

    def matrix(self, m : int, theta : ThetaChoice) -> np.ndarray:
        return _poly_matrix(range(2, m + 1), self.columns(m, theta), self.derivative)

    def values(self, m : int, theta : ThetaChoice, bits : int) -> np.ndarray:
        '''The Jacobian evaluated entrywise at gamma*'''
        return _poly_matrix(range(2, m + 1), self.columns(m, theta),
                            lambda i, j: self.entry(i, j, bits))

    def determinant(self, m : int, theta : ThetaChoice, term_budget : int = DEFAULT_TERM_BUDGET) -> Poly:
        '''
        Symbolic det J_{m, theta}, cached.

        - Raises:
            - ``TermBudgetExceeded`` when an intermediate grows past ``term_budget``
        '''
        key = (m, theta)
        with self._lock:
            if key not in self._dets:
                self._dets[key] = symbolic_det(self.matrix(m, theta), term_budget = term_budget)
                logger.debug(f'det J_({m}, {theta}) has {self._dets[key].term_count()} terms')
            return self._dets[key]
