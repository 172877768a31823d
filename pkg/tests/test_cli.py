import json
import logging

import pytest

from gammaflow import cli
from gammaflow.cli import main, parse_config, RunConfig, UsageError, TABLES, CERTIFY, JSON
from gammaflow.core.constants import EXIT_OK, EXIT_INVARIANT_FAILURE, EXIT_USAGE, \
    CERTIFIED_NONZERO, GAMMA_N, ETA_N

def _lines(path):
    with open(path) as f:
        return [line for line in f.read().splitlines() if line]

def test_parse_config_defaults():
    cfg = parse_config(['tables'])
    assert cfg.command == TABLES
    assert cfg.n_max == 15
    assert cfg.precision.bits == cfg.bits
    cfg = parse_config(['certify', '--n-max', '4', '--ledger', 'l.jsonl', '--output', 'json'])
    assert (cfg.command, cfg.n_max, cfg.ledger, cfg.output) == (CERTIFY, 4, 'l.jsonl', JSON)

def test_verbose_reaches_the_handlers():
    package_logger = logging.getLogger('gammaflow')
    levels = (package_logger.level, [h.level for h in package_logger.handlers])
    try:
        parse_config(['tables', '--verbose'])
        assert package_logger.isEnabledFor(logging.DEBUG)
        assert package_logger.handlers
        assert all(h.level <= logging.DEBUG for h in package_logger.handlers)
    finally:
        package_logger.setLevel(levels[0])
        for h, level in zip(package_logger.handlers, levels[1]):
            h.setLevel(level)

def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig('draw')
    with pytest.raises(ValueError):
        RunConfig(CERTIFY, n_max = 1)
    with pytest.raises(ValueError):
        RunConfig(TABLES, digits = 0)
    with pytest.raises(ValueError):
        RunConfig(TABLES, output = 'xml')

@pytest.mark.parametrize('argv', [[], ['draw'], ['tables', '--bits', '8'],
                                  ['certify', '--n-max', '1'], ['tables', '--jobs', '0'],
                                  ['tables', '--output', 'xml']])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert 'gammaflow: error' in capsys.readouterr().err
    with pytest.raises(UsageError):
        parse_config(argv)

def test_version():
    with pytest.raises(SystemExit):
        main(['--version'])

def test_tables(tmp_path):
    out = str(tmp_path / 'tables.csv')
    assert main(['tables', '--n-max', '3', '--digits', '8', '--out', out]) == EXIT_OK
    lines = _lines(out)
    assert lines[0].split(',')[0] == 'n'
    assert len(lines) == 5

    rounded = str(tmp_path / 'rounded.json')
    assert main(['tables', '--n-max', '0', '--rounding', 'half_even', '--output', 'json',
                 '--out', rounded]) == EXIT_OK
    with open(rounded) as f:
        document = json.load(f)
    assert document['rounding'] == 'half_even'
    assert document['rows'][0]['eta_tilde_n'] == '-1.7182818285'
    assert parse_config(['tables']).rounding == 'trunc'
    with pytest.raises(UsageError):
        parse_config(['tables', '--rounding', 'up'])

def test_polys(tmp_path):
    out = str(tmp_path / 'polys.json')
    assert main(['polys', '--n-max', '4', '--cache-dir', str(tmp_path / 'cache'),
                 '--output', 'json', '--out', out]) == EXIT_OK
    rows = [json.loads(line) for line in _lines(out)]
    assert [r['n'] for r in rows] == [2, 3, 4]
    assert rows[0]['golden'] and rows[1]['golden']
    assert all(r['structure'] for r in rows)

def test_certify(tmp_path):
    out = str(tmp_path / 'cert.json')
    ledger = str(tmp_path / 'ledger.jsonl')
    argv = ['certify', '--n-max', '3', '--cache-dir', str(tmp_path / 'cache'),
            '--ledger', ledger, '--output', 'json', '--out', out]
    assert main(argv) == EXIT_OK
    rows = [json.loads(line) for line in _lines(out)]
    assert len(rows) == 9
    assert all(r['status'] == CERTIFIED_NONZERO for r in rows)
    # Resumed run reads everything back from the ledger
    assert main(argv) == EXIT_OK
    assert len(_lines(out)) == 9

def test_asympt(tmp_path):
    out = str(tmp_path / 'asympt.json')
    assert main(['asympt', '--n-max', '5', '--output', 'json', '--out', out]) == EXIT_OK
    rows = [json.loads(line) for line in _lines(out)]
    assert len(rows) == 5 * 4
    assert all(r['bound_satisfied'] for r in rows if r['sequence'] in (GAMMA_N, ETA_N))

def test_check_reports_failures(monkeypatch, capsys):
    def battery(cfg):
        yield 'always', lambda: True
        yield 'never', lambda: False
        yield 'raises', lambda: 1 / 0
    monkeypatch.setattr(cli, '_check_battery', battery)
    assert main(['check']) == EXIT_INVARIANT_FAILURE
    printed = capsys.readouterr().out.splitlines()
    assert printed == ['PASS always', 'FAIL never', 'FAIL raises']

@pytest.mark.slow
def test_check_battery_passes(tmp_path, capsys):
    assert main(['check', '--n-max', '4', '--cache-dir', str(tmp_path)]) == EXIT_OK
    assert 'FAIL' not in capsys.readouterr().out

if __name__ == "__main__":
    pytest.main([__file__])
