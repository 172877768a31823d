'''
Closed-form laws for the growth of the constant sequences and their
comparison with the enclosed exact values.

The eta, eta~ and gamma laws come with explicit two-sided bounds and are
returned as the bracketing interval. The delta and delta~ laws have no
explicit remainder and are returned as the bare closed form, so they are
judged by the trend of their relative error in n.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from collections import namedtuple
from fractions import Fraction

from ..core.constants import GAMMA_N, ETA_N, DELTA_N, ETA_TILDE_N, DELTA_TILDE_N
from ..core.errors import IdentityViolation
from ..exact.combinatorics import factorial
from ..numerics.constants import enclose_e, enclose_pi
from ..numerics.interval import Interval, resolve_bits
from ..sequences.moments import gamma_n, delta_n, delta_tilde_n
from ..sequences.series import eta_n, eta_tilde_n
from .lambertw import lambert_w

logger = logging.getLogger(__package__)

# Sequences that have a law
ASYMPTOTIC_SEQUENCES = [GAMMA_N, ETA_N, DELTA_N, ETA_TILDE_N, DELTA_TILDE_N]
# Laws given with explicit bounds
BRACKETED = [GAMMA_N, ETA_N, ETA_TILDE_N]

def _check_order(n, smallest):
    if not isinstance(n, int) or n < smallest:
        raise ValueError(f'n must be an integer >= {smallest}, got {n!r}')

def _third_radius(n, bits):
    return (enclose_e(bits) - Fraction(5, 2)) * Fraction(factorial(n), 3 ** n)

def eta_asym(n : int, cfg) -> Interval:
    '''
    n! (1 - 2^-(n+1)) with radius n! (e - 5/2) / 3^n.
    '''
    _check_order(n, 2)
    bits = resolve_bits(cfg)
    centre = factorial(n) * (1 - Fraction(1, 2 ** (n + 1)))
    slack = _third_radius(n, bits)
    return Interval.hull((centre - slack).lo, (centre + slack).hi, bits)

def eta_tilde_asym(n : int, cfg) -> Interval:
    '''
    [-n! (1 + 2^-(n+1) + (e - 5/2)/3^n), -n! (1 + 2^-(n+1) + 3^-n / 6)]
    '''
    _check_order(n, 2)
    bits = resolve_bits(cfg)
    base = factorial(n) * (1 + Fraction(1, 2 ** (n + 1)))
    lower = -(_third_radius(n, bits) + base)
    upper = -(base + Fraction(factorial(n), 6 * 3 ** n))
    return Interval.hull(lower.lo, upper, bits)

def gamma_asym(n : int, cfg) -> Interval:
    '''
    The eta law widened by the enclosed |delta^(n)| / e, since
    gamma^(n) = eta^(n) - delta^(n) / e.
    '''
    _check_order(n, 2)
    bits = resolve_bits(cfg)
    shift = (abs(delta_n(n, bits)) / enclose_e(bits)).hi
    return eta_asym(n, bits).widen(shift)

def delta_asym(n : int, cfg) -> Interval:
    '''
    (-1)^(n+1) e W(n)^n exp(-n / W(n)) sqrt(2 pi n / (W(n) + 1)).

    The sign is the one delta^(n) alternates with.
    '''
    _check_order(n, 1)
    bits = resolve_bits(cfg)
    w = lambert_w(n, bits)
    value = enclose_e(bits) * w ** n * (-(Interval.exact(n, bits) / w)).exp() * \
        (enclose_pi(bits) * (2 * n) / (w + 1)).sqrt()
    return value if n % 2 == 1 else -value

def delta_tilde_asym(n : int, cfg) -> Interval:
    '''-n! (2e + e / 3^(n+1))'''
    _check_order(n, 1)
    bits = resolve_bits(cfg)
    e = enclose_e(bits)
    return -(e * 2 + e / 3 ** (n + 1)) * factorial(n)

_SaddleReportBase = namedtuple('SaddleReport',
                               'n w u_star u_log_u phi_prime phi_second phi_value ok')

class SaddleReport(_SaddleReportBase):
    '''
    The maximum u* = n / W(n) of phi_n(u) = n ln ln u - u, which carries the
    integral of (ln u)^n e^-u over [1, inf).

    - Arguments:
        - n: the order as an ``Interval``
        - w: W(n)
        - u_star: n / W(n)
        - u_log_u: u* ln u*, which must contain n
        - phi_prime: n / (u* ln u*) - 1, which must contain 0
        - phi_second: -n / (u*^2 ln u*) (1 + 1 / ln u*), which must be negative
        - phi_value: n ln W(n) - n / W(n)
        - ok: all three checks passed
    '''
    __slots__ = ()

def _as_order(n, bits):
    if isinstance(n, Interval):
        if not n.is_finite() or not n.is_positive():
            raise ValueError(f'n must be strictly positive, got {n!r}')
        return n
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f'n must be a positive integer or an Interval, got {n!r}')
    return Interval.exact(n, bits)

def saddle_point_diagnostics(n, cfg) -> SaddleReport:
    '''
    Locates the saddle point through W(n) and checks, in interval
    arithmetic, that it solves u ln u = n, is a critical point of phi_n and
    a strict maximum.

    - Arguments:
        - n: a positive integer, or an ``Interval`` for real orders such as e

    - Raises:
        - ``IdentityViolation`` when any check fails
    '''
    bits = resolve_bits(cfg)
    order = _as_order(n, bits)
    w = lambert_w(order, bits)
    u = order / w
    log_u = u.log()
    u_log_u = u * log_u
    phi_prime = order / u_log_u - 1
    phi_second = -(order / (u * u * log_u)) * (1 + 1 / log_u)
    phi_value = order * w.log() - order / w

    failures = []
    if not u_log_u.overlaps(order):
        failures.append(f'u* ln u* = {u_log_u!r} misses n')
    if not phi_prime.contains_zero():
        failures.append(f"phi' = {phi_prime!r} excludes zero")
    if not phi_second.is_negative():
        failures.append(f"phi'' = {phi_second!r} is not negative")
    if failures:
        logger.error(f'Saddle point for n = {order!r}: ' + '; '.join(failures))
        raise IdentityViolation('; '.join(failures))
    return SaddleReport(order, w, u, u_log_u, phi_prime, phi_second, phi_value, True)

_AsymptoticReportBase = namedtuple('AsymptoticReport',
                                   'sequence n exact approx rel_error bound_satisfied')

class AsymptoticReport(_AsymptoticReportBase):
    '''
    Comparison of the exact value of a sequence with its law.

    - Arguments:
        - sequence: one of ``ASYMPTOTIC_SEQUENCES``
        - n: order
        - exact: enclosure of the value
        - approx: the law, a bracket or a bare closed form
        - rel_error: |exact - approx| / |exact|
        - bound_satisfied: for a bracketed law, the exact enclosure lies strictly \
            inside the bracket. For a bare closed form, the signs agree and the \
            relative error is proven below 1.
    '''
    __slots__ = ()

    def __new__(cls, sequence, n, exact, approx, rel_error, bound_satisfied):
        if sequence not in ASYMPTOTIC_SEQUENCES:
            raise ValueError('sequence must be one of {}'.format(','.join(ASYMPTOTIC_SEQUENCES)))
        return super(AsymptoticReport, cls).__new__(cls, sequence, n, exact, approx,
                                                    rel_error, bool(bound_satisfied))

_LAWS = {
    GAMMA_N: (gamma_n, gamma_asym, 2),
    ETA_N: (eta_n, eta_asym, 2),
    ETA_TILDE_N: (eta_tilde_n, eta_tilde_asym, 2),
    DELTA_N: (delta_n, delta_asym, 1),
    DELTA_TILDE_N: (delta_tilde_n, delta_tilde_asym, 1)
}

def asymptotic_report(sequence : str, n : int, cfg) -> AsymptoticReport:
    if sequence not in _LAWS:
        raise ValueError('sequence must be one of {}'.format(','.join(ASYMPTOTIC_SEQUENCES)))
    exact_fn, law_fn, smallest = _LAWS[sequence]
    _check_order(n, smallest)
    bits = resolve_bits(cfg)
    exact = exact_fn(n, bits)
    approx = law_fn(n, bits)
    rel_error = abs(exact - approx) / abs(exact)
    if sequence in BRACKETED:
        satisfied = approx.lo < exact.lo and exact.hi < approx.hi
    else:
        same_sign = (exact.is_positive() and approx.is_positive()) or \
            (exact.is_negative() and approx.is_negative())
        satisfied = same_sign and rel_error.hi < 1
    if not satisfied:
        logger.warning(f'{sequence} law not satisfied at n = {n}')
    return AsymptoticReport(sequence, n, exact, approx, rel_error, satisfied)

def relative_error_trend(sequence : str, ns, cfg):
    '''
    - Returns:
        - (decreasing, reports) where decreasing tells whether each relative \
            error is proven strictly below the previous one along ``ns``
    '''
    reports = [asymptotic_report(sequence, n, cfg) for n in ns]
    decreasing = all(b.rel_error.hi < a.rel_error.lo for a, b in zip(reports, reports[1:]))
    return decreasing, reports

def report_rows(reports, digits : int = 20) -> list:
    '''JSON-ready rows with outward rounded endpoints'''
    rows = []
    for r in reports:
        rows.append({
            'sequence': r.sequence,
            'n': r.n,
            'exact_lo': r.exact.lo_str(digits),
            'exact_hi': r.exact.hi_str(digits),
            'approx_lo': r.approx.lo_str(digits),
            'approx_hi': r.approx.hi_str(digits),
            'rel_error_lo': r.rel_error.lo_str(digits),
            'rel_error_hi': r.rel_error.hi_str(digits),
            'bound_satisfied': r.bound_satisfied
        })
    return rows
