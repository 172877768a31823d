import os

import pytest

from gammaflow.polys import Poly, build_P, dumps, loads, body_lines, golden_body, PolyCache, gamma_var
from gammaflow.core.constants import NORMALIZATION_ID
from gammaflow.version import __version__

def test_dumps_headers_and_body():
    text = dumps(build_P(2), 'P_2', [gamma_var(k) for k in range(1, 5)])
    lines = text.splitlines()
    assert lines[0] == '# name: P_2'
    assert lines[1] == '# variables: g1 g2 g3 g4'
    assert lines[2] == f'# normalization: {NORMALIZATION_ID}'
    assert lines[3] == f'# version: {__version__}'
    assert lines[4:] == golden_body(2)
    assert lines[4] == '-42 ; g1:4'

def test_loads_inverts_dumps():
    p = build_P(3)
    poly, header = loads(dumps(p, 'P_3'))
    assert poly == p
    assert header['name'] == 'P_3'

def test_loads_rejects_malformed_lines():
    with pytest.raises(ValueError):
        loads('3 g1:2\n')
    with pytest.raises(ValueError):
        loads('3 ; g1:x\n')
    with pytest.raises(ValueError):
        loads('3 ; g1:1\n4 ; g1:1\n')

def test_fractional_coefficients():
    p = Poly.var(gamma_var(2)) / 3 - 1
    assert body_lines(p) == ['1/3 ; g2:1', '-1 ;']
    assert loads(dumps(p, 'q'))[0] == p

def test_missing_golden():
    with pytest.raises(FileNotFoundError):
        golden_body(40)

def test_cache_reuse(tmp_path):
    cache = PolyCache(str(tmp_path))
    p, reused = cache.get(3)
    assert not reused
    assert os.path.isfile(cache.path(3))
    with open(cache.path(3)) as f:
        first = f.read()
    q, reused = cache.get(3)
    assert reused
    assert q == p
    with open(cache.path(3)) as f:
        assert f.read() == first
    assert not [name for name in os.listdir(str(tmp_path)) if name.endswith('.tmp')]

def test_stale_cache_is_rebuilt(tmp_path):
    cache = PolyCache(str(tmp_path))
    cache.get(2)
    with open(cache.path(2)) as f:
        text = f.read()
    with open(cache.path(2), 'w') as f:
        f.write(text.replace(f'# version: {__version__}', '# version: 0.0.0-old'))
    p, reused = cache.get(2)
    assert not reused
    assert body_lines(p) == golden_body(2)

def test_corrupt_cache_is_rebuilt(tmp_path):
    cache = PolyCache(str(tmp_path))
    with open(cache.path(2), 'w') as f:
        f.write('not a polynomial\n')
    p, reused = cache.get(2)
    assert not reused
    assert p == build_P(2)

if __name__ == "__main__":
    pytest.main([__file__])
