from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import math
from collections import namedtuple, defaultdict
from fractions import Fraction
from numbers import Rational

from mpmath import iv

from ..core.constants import DEFAULT_BITS, GUARD_BITS
from ..numerics.interval import Interval, working_precision, iv_point

logger = logging.getLogger(__package__)

GAMMA_VAR = 'g'
KAPPA_VAR = 'k'
ZETA_VAR = 'z'
VAR_KINDS = [GAMMA_VAR, KAPPA_VAR, ZETA_VAR]

_VarIdBase = namedtuple('VarId', 'kind index')

class VarId(_VarIdBase):
    '''
    A polynomial variable. ``GAMMA_VAR`` index k is gamma^(k), with k = 1 the
    Euler-Mascheroni constant itself; ``KAPPA_VAR`` index l is the cumulant
    kappa_l; ``ZETA_VAR`` index l is zeta(l), used only while building relations.
    '''
    __slots__ = ()

    def __new__(cls, kind : str, index : int):
        if kind not in VAR_KINDS:
            raise ValueError('kind must be one of {}'.format(','.join(VAR_KINDS)))
        if not isinstance(index, int) or index < 1:
            raise ValueError(f'index must be a positive integer, got {index!r}')
        return super(VarId, cls).__new__(cls, kind, index)

    def __str__(self):
        return f'{self.kind}{self.index}'

    @classmethod
    def parse(cls, text : str) -> 'VarId':
        '''Inverse of ``str``, e.g. ``'g4'``'''
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f'Malformed variable {text!r}')
        return cls(text[0], int(text[1:]))

def gamma_var(k : int) -> VarId:
    return VarId(GAMMA_VAR, k)

def kappa_var(ell : int) -> VarId:
    return VarId(KAPPA_VAR, ell)

def zeta_var(ell : int) -> VarId:
    return VarId(ZETA_VAR, ell)

def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), reverse = True))

def _mono_degree(m):
    return sum(e for _, e in m)

def _mono_key(m):
    # Graded lex, variables compared by descending VarId.
    return (_mono_degree(m), m)

def _mono_divide(m1, m2):
    exps = dict(m1)
    for v, e in m2:
        left = exps.get(v, 0) - e
        if left < 0:
            return None
        if left == 0:
            del exps[v]
        else:
            exps[v] = left
    return tuple(sorted(exps.items(), reverse = True))

class Poly(object):
    '''
    Immutable sparse multivariate polynomial with ``Fraction`` coefficients.

    Terms are kept in a dict from monomial to coefficient. A monomial is a tuple
    of ``(VarId, exponent)`` pairs in descending ``VarId`` order, with positive
    exponents only. Zero coefficients are never stored.
    '''
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms = None):
        clean = {}
        if terms:
            for mono, coef in terms.items():
                coef = Fraction(coef)
                if coef != 0:
                    clean[mono] = coef
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> 'Poly':
        return cls({(): c})

    @classmethod
    def var(cls, v : VarId) -> 'Poly':
        return cls({((v, 1),): 1})

    @classmethod
    def monomial(cls, pairs, coef = 1) -> 'Poly':
        '''
        Builds ``coef * prod v^e`` from ``(VarId, e)`` pairs in any order.
        '''
        exps = defaultdict(int)
        for v, e in pairs:
            if e < 0:
                raise ValueError('Exponents must be nonnegative')
            exps[v] += e
        mono = tuple(sorted(((v, e) for v, e in exps.items() if e > 0), reverse = True))
        return cls({mono: coef})

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational):
            return Poly.const(other)
        return NotImplemented

    # Inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        '''
        The value of a constant polynomial.

        - Raises:
            - ``ValueError`` if the polynomial has variables
        '''
        if not self.is_constant():
            raise ValueError('Polynomial is not constant')
        return self._terms.get((), Fraction(0))

    def coefficient(self, pairs) -> Fraction:
        '''Coefficient of the monomial given as ``(VarId, e)`` pairs'''
        mono = tuple(sorted(((v, e) for v, e in pairs if e > 0), reverse = True))
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> list:
        '''Variables that occur, in descending order'''
        found = set()
        for mono in self._terms:
            for v, _ in mono:
                found.add(v)
        return sorted(found, reverse = True)

    def degree_in(self, v : VarId) -> int:
        return max((dict(mono).get(v, 0) for mono in self._terms), default = 0)

    def total_degree(self) -> int:
        '''Largest total degree of a term; 0 for constants and for zero'''
        return max((_mono_degree(mono) for mono in self._terms), default = 0)

    def sorted_terms(self) -> list:
        '''``(monomial, coefficient)`` pairs, leading term first'''
        return sorted(self._terms.items(), key = lambda item: _mono_key(item[0]), reverse = True)

    def leading_term(self):
        '''
        Returns ``(monomial, coefficient)`` of the largest monomial in graded lex
        order with variables compared by descending index.

        - Raises:
            - ``ValueError`` for the zero polynomial
        '''
        if not self._terms:
            raise ValueError('The zero polynomial has no leading term')
        mono = max(self._terms, key = _mono_key)
        return mono, self._terms[mono]

    def content(self) -> Fraction:
        '''Positive rational c such that self / c has coprime integer coefficients'''
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for coef in self._terms.values():
            num = math.gcd(num, coef.numerator)
            den = den * coef.denominator // math.gcd(den, coef.denominator)
        return Fraction(num, den)

    def primitive(self) -> 'Poly':
        '''Integer polynomial with content 1, same sign as self'''
        if not self._terms:
            return self
        c = self.content()
        return Poly._wrap({m: coef / c for m, coef in self._terms.items()})

    # Arithmetic

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, coef in other._terms.items():
            value = out.get(mono, 0) + coef
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> 'Poly':
        c = Fraction(c)
        if c == 0:
            return Poly()
        return Poly._wrap({m: coef * c for m, coef in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return Poly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError('Polynomial division by zero')
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n : int):
        if not isinstance(n, int) or n < 0:
            raise ValueError('Only nonnegative integer powers are supported')
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exquo(self, divisor : 'Poly') -> 'Poly':
        '''
        Exact quotient ``self / divisor``.

        - Raises:
            - ``ZeroDivisionError`` if divisor is zero
            - ``ValueError`` if the division leaves a remainder
        '''
        divisor = Poly._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('Polynomial division by zero')
        lead_mono, lead_coef = divisor.leading_term()
        quotient = {}
        rest = self
        while not rest.is_zero():
            mono, coef = rest.leading_term()
            q_mono = _mono_divide(mono, lead_mono)
            if q_mono is None:
                raise ValueError('Division is not exact')
            q_coef = coef / lead_coef
            quotient[q_mono] = quotient.get(q_mono, 0) + q_coef
            rest = rest - Poly._wrap({q_mono: q_coef}) * divisor
        return Poly(quotient)

    # Calculus and substitution

    def partial_derivative(self, v : VarId) -> 'Poly':
        out = {}
        for mono, coef in self._terms.items():
            exps = dict(mono)
            e = exps.get(v, 0)
            if e == 0:
                continue
            if e == 1:
                del exps[v]
            else:
                exps[v] = e - 1
            new_mono = tuple(sorted(exps.items(), reverse = True))
            out[new_mono] = out.get(new_mono, 0) + coef * e
        return Poly._wrap({m: c for m, c in out.items() if c})

    def substitute(self, mapping : dict) -> 'Poly':
        '''
        Replaces each variable in ``mapping`` by its ``Poly`` (or number).
        Variables not in the mapping are kept.
        '''
        powers = {}
        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = Poly._coerce(mapping[v]) ** e
            return powers[key]

        result = Poly()
        for mono, coef in self._terms.items():
            kept = []
            term = None
            for v, e in mono:
                if v in mapping:
                    factor = power(v, e)
                    term = factor if term is None else term * factor
                else:
                    kept.append((v, e))
            piece = Poly._wrap({tuple(kept): coef})
            result = result + (piece if term is None else piece * term)
        return result

    def evaluate(self, assignment : dict) -> Fraction:
        '''
        Exact value at a rational point.

        - Raises:
            - ``ValueError`` if a variable has no value
        '''
        missing = [v for v in self.variables() if v not in assignment]
        if missing:
            raise ValueError('No value for variables {}'.format(','.join(str(v) for v in missing)))
        total = Fraction(0)
        for mono, coef in self._terms.items():
            value = coef
            for v, e in mono:
                value *= Fraction(assignment[v]) ** e
            total += value
        return total

    # Comparison and display

    def __eq__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return '0'
        parts = []
        for mono, coef in self.sorted_terms():
            factors = ' '.join(str(v) if e == 1 else f'{v}^{e}' for v, e in mono)
            parts.append(f'{coef}*{factors}' if factors else f'{coef}')
        return ' + '.join(parts).replace('+ -', '- ')

_OPS = {
    'add': Poly.__add__,
    'sub': Poly.__sub__,
    'mul': Poly.__mul__
}

def poly_arith(a : Poly, b : Poly, op : str) -> Poly:
    '''
    - Arguments:
        - op: one of ``'add'``, ``'sub'``, ``'mul'``

    - Raises:
        - ``ValueError`` on unknown op
    '''
    if op not in _OPS:
        raise ValueError('op must be one of {}'.format(','.join(_OPS)))
    return _OPS[op](a, b)

def _horner(terms, variables, depth, values):
    if depth == len(variables):
        return iv_point(sum((coef for _, coef in terms), Fraction(0)))
    v = variables[depth]
    groups = defaultdict(list)
    for mono, coef in terms:
        if mono and mono[0][0] == v:
            groups[mono[0][1]].append((mono[1:], coef))
        else:
            groups[0].append((mono, coef))
    top = max(groups)
    x = values[v]
    acc = _horner(groups[top], variables, depth + 1, values)
    for e in range(top - 1, -1, -1):
        acc = acc * x
        if e in groups:
            acc = acc + _horner(groups[e], variables, depth + 1, values)
    return acc

def eval_poly_interval(p : Poly, assignment : dict, bits : int = None) -> Interval:
    '''
    Encloses ``p`` over the box given by ``assignment`` (``VarId -> Interval``),
    nesting a Horner scheme per variable, highest variable outermost.

    - Arguments:
        - bits: working precision of the result, defaults to the widest \
            precision among the assigned intervals

    - Raises:
        - ``ValueError`` if a variable of ``p`` has no value
    '''
    variables = p.variables()
    missing = [v for v in variables if v not in assignment]
    if missing:
        raise ValueError('No value for variables {}'.format(','.join(str(v) for v in missing)))
    if bits is None:
        bits = max((assignment[v].bits for v in variables), default = DEFAULT_BITS)
    if p.is_zero():
        return Interval.exact(0, bits)
    with working_precision(bits + GUARD_BITS):
        values = {v: assignment[v].iv for v in variables}
        value = _horner(list(p.items()), variables, 0, values)
    return Interval(value, bits)
