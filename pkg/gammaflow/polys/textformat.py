'''
Canonical text format for polynomials.

::

    # name: P_2
    # variables: g1 g2 g3 g4
    # normalization: primitive-positive-leading/1
    # version: 0.1.0
    -42 ; g1:4
    84 ; g2:1 g1:2
    ...

Body lines are ``<coefficient> ; <var>:<power> ...`` with variables in
descending order, and lines follow the monomial order, leading term first.
Header lines start with ``#``.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import os
from fractions import Fraction

from ..core.constants import NORMALIZATION_ID
from ..utils.system import get_cache_dir
from ..version import __version__
from .poly import Poly, VarId, gamma_var
from .relations import build_P

logger = logging.getLogger(__package__)

GOLDENS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'goldens')

def _format_coefficient(c : Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f'{c.numerator}/{c.denominator}'

def _format_line(mono, coef):
    factors = ' '.join(f'{v}:{e}' for v, e in mono)
    if factors:
        return f'{_format_coefficient(coef)} ; {factors}'
    return f'{_format_coefficient(coef)} ;'

def body_lines(source) -> list:
    '''
    Body lines of a ``Poly`` or of a text in the canonical format.
    '''
    if isinstance(source, Poly):
        return [_format_line(m, c) for m, c in source.sorted_terms()]
    return [line.strip() for line in source.splitlines()
            if line.strip() and not line.lstrip().startswith('#')]

def dumps(p : Poly, name : str, variables = None) -> str:
    '''
    - Arguments:
        - p: the polynomial
        - name: value of the ``name`` header
        - variables: variables listed in the header, defaults to those of ``p`` \
            in ascending order
    '''
    if variables is None:
        variables = sorted(p.variables())
    lines = [
        f'# name: {name}',
        '# variables: {}'.format(' '.join(str(v) for v in variables)),
        f'# normalization: {NORMALIZATION_ID}',
        f'# version: {__version__}'
    ]
    lines.extend(body_lines(p))
    return '\n'.join(lines) + '\n'

def loads(text : str):
    '''
    Parses the canonical format.

    - Returns:
        - (poly, header) where header maps header keys to values

    - Raises:
        - ``ValueError`` on a malformed line
    '''
    header = {}
    terms = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            key, sep, value = line[1:].partition(':')
            if sep:
                header[key.strip()] = value.strip()
            continue
        coef_text, sep, factors = line.partition(';')
        if not sep:
            raise ValueError(f'Malformed polynomial line: {raw!r}')
        pairs = []
        for token in factors.split():
            var_text, sep, power = token.partition(':')
            if not sep or not power.isdigit():
                raise ValueError(f'Malformed factor {token!r} in line {raw!r}')
            pairs.append((VarId.parse(var_text), int(power)))
        mono = Poly.monomial(pairs)
        key = next(iter(mono.terms))
        if key in terms:
            raise ValueError(f'Repeated monomial in line {raw!r}')
        terms[key] = Fraction(coef_text.strip())
    return Poly(terms), header

def golden_body(n : int) -> list:
    '''
    Body lines of the shipped golden file for P_n.

    - Raises:
        - ``FileNotFoundError`` if there is no golden for n
    '''
    with open(os.path.join(GOLDENS_DIR, f'p{n}.txt')) as f:
        return body_lines(f.read())

class PolyCache:
    '''
    On-disk cache of P_n in the canonical format. A cached file is reused only
    when its ``version`` and ``normalization`` headers match the running code.

    - Arguments:
        - cache_dir: directory for the files; resolved with ``get_cache_dir`` \
            when None
    '''
    def __init__(self, cache_dir = None):
        self._cache_dir = get_cache_dir(cache_dir)

    @property
    def cache_dir(self):
        return self._cache_dir

    def path(self, n : int) -> str:
        return os.path.join(self._cache_dir, f'p{n}.txt')

    def _read(self, n):
        path = self.path(n)
        if not os.path.isfile(path):
            return None
        with open(path) as f:
            text = f.read()
        try:
            poly, header = loads(text)
        except ValueError as e:
            logger.warning(f'Discarding unreadable cache file {path}: {e}')
            return None
        if header.get('version') != __version__ or header.get('normalization') != NORMALIZATION_ID:
            logger.info(f'Cache file {path} is stale, rebuilding')
            return None
        return poly

    def get(self, n : int):
        '''
        Returns ``(P_n, reused)`` where ``reused`` tells whether the cached file
        was used.
        '''
        poly = self._read(n)
        if poly is not None:
            logger.debug(f'Reusing cached P_{n}')
            return poly, True
        poly = build_P(n)
        os.makedirs(self._cache_dir, exist_ok = True)
        variables = [gamma_var(k) for k in range(1, 2 * n + 1)]
        # Readers in other processes only ever see a complete file
        tmp_path = f'{self.path(n)}.{os.getpid()}.tmp'
        with open(tmp_path, 'w') as f:
            f.write(dumps(poly, f'P_{n}', variables))
        os.replace(tmp_path, self.path(n))
        return poly, False
