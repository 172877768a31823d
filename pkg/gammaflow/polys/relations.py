from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from functools import lru_cache

from ..exact.combinatorics import even_zeta_coeff
from .bell import zeta_poly
from .poly import Poly, GAMMA_VAR, gamma_var

logger = logging.getLogger(__package__)

def _check_order(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f'n must be an integer >= 2, got {n!r}')

@lru_cache(maxsize = None)
def _build_P(n):
    relation = zeta_poly(2 * n) - zeta_poly(2) ** n * even_zeta_coeff(n)
    p = relation.primitive()
    if p.coefficient([(gamma_var(2 * n), 1)]) < 0:
        p = -p
    logger.info(f'Built P_{n}: {p.term_count()} terms')
    return p

def build_P(n : int) -> Poly:
    '''
    Integer relation P_n among gamma, gamma^(2), ..., gamma^(2n), obtained by
    equating zeta(2n) written in the gamma^(k) with b_n zeta(2)^n.

    The result is primitive (coprime integer coefficients) and its gamma^(2n)
    coefficient is positive.
    '''
    _check_order(n)
    return _build_P(n)

@lru_cache(maxsize = None)
def _solve_even(m):
    p = _build_P(m)
    top = gamma_var(2 * m)
    alpha = p.coefficient([(top, 1)])
    return Poly.var(top) - p / alpha

def solve_even(m : int) -> Poly:
    '''
    Returns Q with gamma^(2m) = Q(gamma, ..., gamma^(2m-1)) on P_m = 0. Since
    P_m is linear in gamma^(2m), Q = gamma^(2m) - P_m / alpha_{m,0}.
    '''
    _check_order(m)
    return _solve_even(m)

def structure_report(n : int) -> dict:
    '''
    Checks the shape of P_n:

    - ``degree``: total degree is 2n
    - ``linear_top``: gamma^(2n) occurs only as alpha_{n,0} gamma^(2n)
    - ``positive_top``: alpha_{n,0} > 0
    - ``single_next``: gamma^(2n-1) occurs only in alpha_{n,1} gamma^(2n-1) gamma
    - ``negative_next``: alpha_{n,1} < 0
    - ``bounded_rest``: every other term only uses gamma^(k) with k <= 2n-2
    - ``integral``: coefficients are integers
    '''
    p = build_P(n)
    top = gamma_var(2 * n)
    nxt = gamma_var(2 * n - 1)
    top_terms = [(m, c) for m, c in p.items() if any(v == top for v, _ in m)]
    next_terms = [(m, c) for m, c in p.items() if any(v == nxt for v, _ in m)]
    rest = [m for m, _ in p.items()
            if not any(v in (top, nxt) for v, _ in m)]
    alpha_1 = p.coefficient([(nxt, 1), (gamma_var(1), 1)])
    return {
        'degree': p.total_degree() == 2 * n,
        'linear_top': top_terms == [(((top, 1),), p.coefficient([(top, 1)]))],
        'positive_top': p.coefficient([(top, 1)]) > 0,
        'single_next': len(next_terms) == 1 and alpha_1 != 0,
        'negative_next': alpha_1 < 0,
        'bounded_rest': all(v.kind == GAMMA_VAR and v.index <= 2 * n - 2
                            for m in rest for v, _ in m),
        'integral': all(c.denominator == 1 for _, c in p.items())
    }
