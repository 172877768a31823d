'''
Numerical checks of the identities tying the sequences together. Residual
functions return an enclosure that must contain zero and raise
``IdentityViolation`` when it does not; bracket functions return whether the
strict inequalities were proven.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from collections import namedtuple
from fractions import Fraction

from ..core.errors import IdentityViolation
from ..exact.combinatorics import factorial, reflection_coeff
from ..numerics.constants import enclose_e, enclose_pi, enclose_zeta
from ..numerics.interval import Interval, resolve_bits
from ..polys.bell import zeta_poly
from ..polys.poly import eval_poly_interval
from .moments import gamma_n, gamma_star, delta_n, delta_tilde_n
from .quadrature import delta_n_quadrature
from .series import eta_n, eta_tilde_n, multisection

logger = logging.getLogger(__package__)

Bracket = namedtuple('Bracket', 'lower value upper holds')

def _require_zero(name : str, residual : Interval) -> Interval:
    if residual.excludes_zero():
        logger.error(f'{name}: residual {residual!r} excludes zero')
        raise IdentityViolation(f'{name} does not hold: residual {residual!r}')
    return residual

def reflection_residual(k : int, cfg) -> Interval:
    '''
    Enclosure of

    sum_{j=0}^{2k} (-1)^j gamma^(j) gamma^(2k-j) / (j! (2k-j)!) - c_k pi^(2k)

    which vanishes by the reflection formula.
    '''
    if not isinstance(k, int) or k < 1:
        raise ValueError(f'k must be a positive integer, got {k!r}')
    bits = resolve_bits(cfg)
    acc = Interval.exact(0, bits)
    for j in range(2 * k + 1):
        term = gamma_n(j, bits) * gamma_n(2 * k - j, bits) / (factorial(j) * factorial(2 * k - j))
        acc = acc - term if j % 2 else acc + term
    residual = acc - enclose_pi(bits) ** (2 * k) * reflection_coeff(k)
    return _require_zero(f'Reflection identity for k = {k}', residual)

def zeta_consistency(ell : int, cfg) -> Interval:
    '''
    zeta(ell) written in gamma, ..., gamma^(ell) and evaluated at their
    enclosures, minus the direct enclosure of zeta(ell).
    '''
    if not isinstance(ell, int) or not 2 <= ell <= 5:
        raise ValueError(f'ell must be an integer in 2..5, got {ell!r}')
    bits = resolve_bits(cfg)
    value = eval_poly_interval(zeta_poly(ell), gamma_star(ell, bits), bits)
    residual = value - enclose_zeta(ell, bits)
    return _require_zero(f'zeta({ell}) in the moments', residual)

def identity_residual(n : int, cfg, tolerance = None) -> Interval:
    '''
    delta^(n) from e (eta^(n) - gamma^(n)) minus delta^(n) from the validated
    quadrature. The two paths share nothing but e.

    - Arguments:
        - n: order, at least 1
        - tolerance: passed to ``delta_n_quadrature``
    '''
    bits = resolve_bits(cfg)
    residual = delta_n(n, bits) - delta_n_quadrature(n, bits, tolerance)
    return _require_zero(f'delta^({n}) series/quadrature identity', residual)

def delta_tilde_identity_residual(n : int, cfg, tolerance = None) -> Interval:
    '''
    delta~^(n) - (2e G_n(1) + delta^(n)), with delta^(n) from the quadrature.
    It vanishes because eta~ - eta = 2 G_n(1).
    '''
    bits = resolve_bits(cfg)
    g_value, _ = multisection(n, bits)
    expected = enclose_e(bits) * g_value * 2 + delta_n_quadrature(n, bits, tolerance)
    residual = delta_tilde_n(n, bits) - expected
    return _require_zero(f'delta~^({n}) multisection identity', residual)

def _check_bracket_order(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f'n must be an integer >= 2, got {n!r}')

def eta_bracket(n : int, cfg) -> Bracket:
    '''
    Checks the strict bracket

    n! (1 - 2^-(n+1) - (e - 5/2)/3^n) < eta^(n) < n! (1 - 2^-(n+1) + (e - 5/2)/3^n)

    against the series enclosure of eta^(n).
    '''
    _check_bracket_order(n)
    bits = resolve_bits(cfg)
    centre = factorial(n) * (1 - Fraction(1, 2 ** (n + 1)))
    slack = (enclose_e(bits) - Fraction(5, 2)) * Fraction(factorial(n), 3 ** n)
    lower = centre - slack
    upper = centre + slack
    value = eta_n(n, bits)
    holds = lower.hi < value.lo and value.hi < upper.lo
    return Bracket(lower, value, upper, holds)

def eta_tilde_bracket(n : int, cfg) -> Bracket:
    '''
    Checks the strict bracket

    -n! (1 + 2^-(n+1) + (e - 5/2)/3^n) < eta~^(n) < -n! (1 + 2^-(n+1) + 3^-n / 6)

    against the series enclosure of eta~^(n).
    '''
    _check_bracket_order(n)
    bits = resolve_bits(cfg)
    base = factorial(n) * (1 + Fraction(1, 2 ** (n + 1)))
    lower = -((enclose_e(bits) - Fraction(5, 2)) * Fraction(factorial(n), 3 ** n) + base)
    upper = Interval.exact(-(base + Fraction(factorial(n), 6 * 3 ** n)), bits)
    value = eta_tilde_n(n, bits)
    holds = lower.hi < value.lo and value.hi < upper.lo
    return Bracket(lower, value, upper, holds)

def sign_pattern_ok(n : int, cfg) -> bool:
    '''
    True when delta^(n) lies strictly on the side of (-1)^(n+1) and both
    eta~^(n) and delta~^(n) are strictly negative.
    '''
    bits = resolve_bits(cfg)
    delta = delta_n(n, bits)
    delta_ok = delta.is_positive() if n % 2 == 1 else delta.is_negative()
    return delta_ok and eta_tilde_n(n, bits).is_negative() and delta_tilde_n(n, bits).is_negative()
