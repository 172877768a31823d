'''
Command line entry point.

::

    gammaflow tables --n-max 15 --digits 10
    gammaflow tables --n-max 15 --digits 10 --rounding half_even
    gammaflow polys --n-max 8 --cache-dir ./cache
    gammaflow certify --n-max 5 --jobs 4 --ledger ./certify_5.jsonl
    gammaflow asympt --n-max 15 --output json
    gammaflow check

Exit codes: 0 success, 1 invariant failure, 2 indeterminate certification,
3 usage error.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import argparse
import json
import logging
import os
import sys
from collections import namedtuple

from .asymptotics import relative_error_trend, report_rows, saddle_point_diagnostics, \
    ASYMPTOTIC_SEQUENCES
from .asymptotics.laws import BRACKETED
from .certify import certification_jobs, lstp_index_check, \
    pascal_submatrix_det, bell_jacobian_at_Kstar, theta_choices
from .certify.runner import certify
from .core.constants import DEFAULT_BITS, DEFAULT_MAX_ESCALATIONS, MIN_BITS, DELTA_N, \
    DELTA_TILDE_N, EXIT_OK, EXIT_INVARIANT_FAILURE, EXIT_INDETERMINATE, EXIT_USAGE, TRUNCATE, \
    DIGIT_ROUNDINGS
from .core.errors import IdentityViolation
from .numerics.interval import PrecisionConfig
from .polys import PolyCache, body_lines, golden_body, structure_report, eval_poly_interval
from .sequences import emit_tables, to_csv, to_json, to_text, identity_residual, \
    delta_tilde_identity_residual, reflection_residual, zeta_consistency, eta_bracket, \
    eta_tilde_bracket, gamma_star
from .utils.system import get_cache_dir
from .version import __version__

logger = logging.getLogger(__package__)

TABLES = 'tables'
POLYS = 'polys'
CERTIFY = 'certify'
ASYMPT = 'asympt'
CHECK = 'check'
COMMANDS = [TABLES, POLYS, CERTIFY, ASYMPT, CHECK]

CSV = 'csv'
JSON = 'json'
TEXT = 'text'
OUTPUTS = [CSV, JSON, TEXT]

_DEFAULT_N_MAX = {
    TABLES: 15,
    POLYS: 8,
    CERTIFY: 5,
    ASYMPT: 15,
    CHECK: 8
}

_SMALLEST_N_MAX = {
    TABLES: 0,
    POLYS: 2,
    CERTIFY: 2,
    ASYMPT: 2,
    CHECK: 2
}

_RunConfigBase = namedtuple('RunConfig',
                            'command n_max digits bits jobs cache_dir output out max_escalations ledger rounding')

class RunConfig(_RunConfigBase):
    '''
    Validated options of one command line invocation.

    - Arguments:
        - command: one of ``COMMANDS``
        - n_max: largest order, the smallest allowed value depends on the command
        - digits: decimals in tables, at least 1
        - bits: starting precision, at least 64
        - jobs: worker processes, at least 1
        - cache_dir: directory for P_n files and default ledgers
        - output: one of ``OUTPUTS``
        - out: artifact path, None for stdout
        - max_escalations: precision escalations allowed
        - ledger: certification ledger path, None for one in ``cache_dir``
        - rounding: how table entries are cut, one of ``DIGIT_ROUNDINGS``
    '''
    __slots__ = ()

    def __new__(cls, command, n_max = None, digits = 10, bits = DEFAULT_BITS, jobs = 1,
                cache_dir = None, output = CSV, out = None,
                max_escalations = DEFAULT_MAX_ESCALATIONS, ledger = None, rounding = TRUNCATE):
        if command not in COMMANDS:
            raise ValueError('command must be one of {}'.format(','.join(COMMANDS)))
        if n_max is None:
            n_max = _DEFAULT_N_MAX[command]
        if not isinstance(n_max, int) or n_max < _SMALLEST_N_MAX[command]:
            raise ValueError(f'{command} needs n_max >= {_SMALLEST_N_MAX[command]}, got {n_max!r}')
        if not isinstance(digits, int) or digits < 1:
            raise ValueError(f'digits must be >= 1, got {digits!r}')
        if not isinstance(bits, int) or bits < MIN_BITS:
            raise ValueError(f'bits must be >= {MIN_BITS}, got {bits!r}')
        if not isinstance(jobs, int) or jobs < 1:
            raise ValueError(f'jobs must be >= 1, got {jobs!r}')
        if output not in OUTPUTS:
            raise ValueError('output must be one of {}'.format(','.join(OUTPUTS)))
        if not isinstance(max_escalations, int) or max_escalations < 0:
            raise ValueError(f'max_escalations must be >= 0, got {max_escalations!r}')
        if rounding not in DIGIT_ROUNDINGS:
            raise ValueError('rounding must be one of {}'.format(','.join(DIGIT_ROUNDINGS)))
        return super(RunConfig, cls).__new__(cls, command, n_max, digits, bits, jobs,
                                             cache_dir, output, out, max_escalations, ledger,
                                             rounding)

    @property
    def precision(self) -> PrecisionConfig:
        return PrecisionConfig(self.bits, self.max_escalations)

def _write(text : str, out : str = None):
    if out is None:
        sys.stdout.write(text)
        return
    parent = os.path.dirname(os.path.abspath(out))
    os.makedirs(parent, exist_ok = True)
    with open(out, 'w', encoding = 'utf-8', newline = '') as f:
        f.write(text)
    logger.info(f'Wrote {out}')

def _rows_text(rows : list, output : str) -> str:
    if not rows:
        return ''
    if output == JSON:
        return ''.join(json.dumps(row, sort_keys = True) + '\n' for row in rows)
    keys = list(rows[0])
    if output == CSV:
        lines = [','.join(keys)] + [','.join(str(row[k]) for k in keys) for row in rows]
    else:
        lines = ['  '.join(keys)] + ['  '.join(str(row[k]) for k in keys) for row in rows]
    return '\n'.join(lines) + '\n'

def cmd_tables(cfg : RunConfig) -> int:
    artifact = emit_tables(cfg.n_max, cfg.digits, cfg.precision, cfg.rounding)
    render = {CSV: to_csv, JSON: to_json, TEXT: to_text}[cfg.output]
    _write(render(artifact), cfg.out)
    if not artifact.certified:
        logger.error('Some table entries could not be certified')
        return EXIT_INDETERMINATE
    return EXIT_OK

def cmd_polys(cfg : RunConfig) -> int:
    cache = PolyCache(cfg.cache_dir)
    status = EXIT_OK
    rows = []
    for n in range(2, cfg.n_max + 1):
        poly, reused = cache.get(n)
        logger.info(f'P_{n}: {poly.term_count()} terms' + (' (cached)' if reused else ''))
        shape = structure_report(n)
        golden = None
        if n in (2, 3):
            golden = body_lines(poly) == golden_body(n)
            if not golden:
                logger.error(f'P_{n} differs from its golden file')
                status = EXIT_INVARIANT_FAILURE
        if not all(shape.values()):
            failed = [k for k, v in shape.items() if not v]
            logger.error(f'P_{n} fails the structure checks {failed}')
            status = EXIT_INVARIANT_FAILURE
        rows.append({'n': n, 'terms': poly.term_count(), 'path': cache.path(n),
                     'golden': golden, 'structure': all(shape.values())})
    _write(_rows_text(rows, cfg.output), cfg.out)
    return status

def cmd_certify(cfg : RunConfig) -> int:
    n = cfg.n_max
    ledger = cfg.ledger
    if ledger is None:
        ledger = os.path.join(get_cache_dir(cfg.cache_dir), f'certify_{n}.jsonl')
    records = certify(n, cfg.precision, jobs = cfg.jobs, ledger = ledger,
                      cache_dir = cfg.cache_dir)
    rows = [r.to_json_dict() for r in records]
    _write(_rows_text(rows, cfg.output), cfg.out)
    offending = [f'({r.m}, {r.theta})' for r in records if not r.certified]
    if len(records) != len(certification_jobs(n)):
        logger.error(f'Ledger {ledger} holds {len(records)} of {len(certification_jobs(n))} records')
        return EXIT_INDETERMINATE
    if offending:
        logger.error('Indeterminate pairs: ' + ', '.join(offending))
        return EXIT_INDETERMINATE
    logger.info(f'All {len(records)} determinants for n = {n} certified nonzero')
    return EXIT_OK

def cmd_asympt(cfg : RunConfig) -> int:
    ns = list(range(2, cfg.n_max + 1))
    status = EXIT_OK
    reports = []
    for sequence in ASYMPTOTIC_SEQUENCES:
        decreasing, batch = relative_error_trend(sequence, ns, cfg.precision)
        reports.extend(batch)
        if sequence in BRACKETED and not all(r.bound_satisfied for r in batch):
            status = EXIT_INVARIANT_FAILURE
        if sequence in (DELTA_N, DELTA_TILDE_N):
            logger.info(f'{sequence} relative error strictly decreasing: {decreasing}')
    _write(_rows_text(report_rows(reports), cfg.output), cfg.out)
    return status

def _check_battery(cfg : RunConfig):
    '''Yields (name, callable returning a bool)'''
    bits = cfg.bits
    n_max = cfg.n_max

    for n in range(1, n_max + 1):
        yield f'delta series/quadrature identity n={n}', \
            lambda n=n: identity_residual(n, bits) is not None
        yield f'delta~ multisection identity n={n}', \
            lambda n=n: delta_tilde_identity_residual(n, bits) is not None
    for ell in range(2, 6):
        yield f'zeta consistency l={ell}', lambda ell=ell: zeta_consistency(ell, bits) is not None
    for k in range(1, n_max + 1):
        yield f'reflection identity k={k}', lambda k=k: reflection_residual(k, bits) is not None
    for n in (2, 3):
        yield f'P_{n} golden', lambda n=n: body_lines(PolyCache(cfg.cache_dir).get(n)[0]) == golden_body(n)
    for n in range(2, n_max + 1):
        yield f'P_{n} vanishes at gamma*', \
            lambda n=n: eval_poly_interval(PolyCache(cfg.cache_dir).get(n)[0],
                                           gamma_star(2 * n, bits), bits).contains_zero()
        yield f'eta bracket n={n}', lambda n=n: eta_bracket(n, bits).holds
        yield f'eta~ bracket n={n}', lambda n=n: eta_tilde_bracket(n, bits).holds
        yield f'Pascal submatrices n={n}', \
            lambda n=n: all(lstp_index_check(n, t)[0] and pascal_submatrix_det(n, t) > 0
                            for t in theta_choices(n))
        yield f'cumulant Jacobian n={n}', \
            lambda n=n: all(bell_jacobian_at_Kstar(n, t) is not None for t in theta_choices(n))
    for n in range(1, 51):
        yield f'saddle point n={n}', lambda n=n: saddle_point_diagnostics(n, bits).ok
    yield 'delta law relative error trend', \
        lambda: relative_error_trend(DELTA_N, [5, 10, 15], bits)[0]

def cmd_check(cfg : RunConfig) -> int:
    failures = 0
    for name, check in _check_battery(cfg):
        try:
            ok = bool(check())
        except (IdentityViolation, ArithmeticError, ValueError) as e:
            logger.error(f'{name}: {e}')
            ok = False
        if not ok:
            failures += 1
        print(f'{"PASS" if ok else "FAIL"} {name}')
    if failures:
        logger.error(f'{failures} checks failed')
        return EXIT_INVARIANT_FAILURE
    return EXIT_OK

_HANDLERS = {
    TABLES: cmd_tables,
    POLYS: cmd_polys,
    CERTIFY: cmd_certify,
    ASYMPT: cmd_asympt,
    CHECK: cmd_check
}

class UsageError(Exception):
    pass

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help = False)
    common.add_argument('--n-max', type = int, default = None,
                        help = 'largest order, the default depends on the command')
    common.add_argument('--digits', type = int, default = 10, help = 'decimals in tables')
    common.add_argument('--bits', type = int, default = DEFAULT_BITS, help = 'starting precision')
    common.add_argument('--max-escalations', type = int, default = DEFAULT_MAX_ESCALATIONS,
                        help = 'times precision may be doubled')
    common.add_argument('--jobs', type = int, default = 1, help = 'worker processes')
    common.add_argument('--cache-dir', default = None,
                        help = 'cache directory, defaults to $GAMMAFLOW_CACHE_DIR or ./.gammaflow_cache')
    common.add_argument('--output', choices = OUTPUTS, default = CSV, help = 'artifact format')
    common.add_argument('--out', default = None, help = 'artifact path, stdout when omitted')
    common.add_argument('--verbose', action = 'store_true', help = 'log at DEBUG level')

    parser = _ArgumentParser(prog = 'gammaflow',
                             description = 'Generalized Euler-Mascheroni constants, certified.')
    parser.add_argument('--version', action = 'version', version = f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest = 'command')
    tables_parser = subparsers.add_parser(TABLES, parents = [common], help = 'certified tables of the sequences')
    tables_parser.add_argument('--rounding', choices = DIGIT_ROUNDINGS, default = TRUNCATE,
                               help = 'truncate entries or round them half to even')
    subparsers.add_parser(POLYS, parents = [common], help = 'build and cache P_2 ... P_n')
    certify_parser = subparsers.add_parser(CERTIFY, parents = [common],
                                           help = 'certify the Jacobian determinants')
    certify_parser.add_argument('--ledger', default = None, help = 'resumable ledger file')
    subparsers.add_parser(ASYMPT, parents = [common], help = 'asymptotic laws against exact values')
    subparsers.add_parser(CHECK, parents = [common], help = 'run the consistency battery')
    return parser

def _log_debug():
    # The package handler filters on its own level too
    package_logger = logging.getLogger(__package__)
    package_logger.setLevel(logging.DEBUG)
    for handler in package_logger.handlers:
        handler.setLevel(logging.DEBUG)

def parse_config(argv = None) -> RunConfig:
    '''
    - Raises:
        - ``UsageError`` on bad arguments
    '''
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError('a command is required: {}'.format(', '.join(COMMANDS)))
    if args.verbose:
        _log_debug()
    try:
        return RunConfig(args.command, args.n_max, args.digits, args.bits, args.jobs,
                         args.cache_dir, args.output, args.out, args.max_escalations,
                         getattr(args, 'ledger', None), getattr(args, 'rounding', TRUNCATE))
    except ValueError as e:
        raise UsageError(str(e))

def main(argv = None) -> int:
    try:
        cfg = parse_config(argv)
    except UsageError as e:
        print(f'gammaflow: error: {e}', file = sys.stderr)
        return EXIT_USAGE
    return _HANDLERS[cfg.command](cfg)
