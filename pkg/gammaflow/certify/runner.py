from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import os
import tempfile
import time

from ..core.constants import BATCH, INLINE, THETA_GAMMA_SHIFTED, DEFAULT_TERM_BUDGET
from ..core.flow import Flow
from ..consumers.ledger import LedgerConsumer
from ..numerics.interval import PrecisionConfig
from ..polys.textformat import PolyCache
from ..processors.certification import CertificationProcessor
from ..producers.jobs import CertificationJobProducer
from ..utils.system import get_number_of_cpus
from .certifier import certification_jobs
from .ledger import Ledger

logger = logging.getLogger(__package__)

def _run_flow(n, pending, cfg, jobs, ledger_path, convention, cache_dir, term_budget, flow_type):
    producer = CertificationJobProducer(pending)
    processor = CertificationProcessor(n, cfg, convention = convention, cache_dir = cache_dir,
                                       term_budget = term_budget, nb_tasks = jobs)(producer)
    consumer = LedgerConsumer(ledger_path)(processor)
    flow = Flow([producer], [consumer], flow_type = flow_type)
    flow.run()
    flow.join()

def _certify(n, cfg, jobs, ledger, convention, cache_dir, term_budget, flow_type):
    # Undecided pairs are run again, possibly with a larger precision config
    done = ledger.replay(n, certified_only = True)
    pending = [job for job in certification_jobs(n) if job not in done]
    logger.info(f'Certifying n = {n}: {len(done)} certified pairs from the ledger, {len(pending)} to run')

    if cache_dir:
        cache = PolyCache(cache_dir)
        for i in range(2, n + 1):
            cache.get(i)

    start = time.time()
    if pending:
        if flow_type is None:
            flow_type = INLINE if jobs == 1 else BATCH
        _run_flow(n, pending, cfg, jobs, ledger.path, convention, cache_dir, term_budget, flow_type)
    elapsed = time.time() - start

    records = ledger.replay(n)
    missing = [job for job in certification_jobs(n) if job not in records]
    if missing:
        logger.warning(f'{len(missing)} pairs of n = {n} have no record, the run was interrupted')
    if pending:
        bits = max((r.bits_used for r in records.values()), default = cfg.bits)
        with ledger:
            ledger.append_telemetry(n, elapsed, bits)
    return sorted(records.values(), key = lambda r: (r.m, r.theta.k))

def certify(n : int, cfg : PrecisionConfig = None, jobs : int = 1, ledger = None,
            convention : str = THETA_GAMMA_SHIFTED, cache_dir : str = None,
            term_budget : int = DEFAULT_TERM_BUDGET, flow_type : str = None) -> list:
    '''
    Certifies det J_{m, theta} != 0 at gamma* for every 2 <= m <= n and every
    theta of m, resuming from the ledger.

    - Arguments:
        - n: order, at least 2
        - cfg: starting ``PrecisionConfig``
        - jobs: worker processes; 1 runs inline in this process
        - ledger: a ``Ledger`` or a path. Without one, a temporary ledger is used \
            and discarded.
        - convention: column set used for theta = gamma
        - cache_dir: on-disk cache of P_n
        - flow_type: overrides the engine picked from ``jobs``

    - Returns:
        - the ``CertRecord``s sorted by (m, theta), one per pair
    '''
    if not isinstance(n, int) or n < 2:
        raise ValueError(f'n must be an integer >= 2, got {n!r}')
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f'jobs must be a positive integer, got {jobs!r}')
    if jobs > get_number_of_cpus():
        logger.warning(f'{jobs} jobs requested but only {get_number_of_cpus()} cpus are available')
    if cfg is None:
        cfg = PrecisionConfig()
    args = (cfg, jobs)
    rest = (convention, cache_dir, term_budget, flow_type)
    if ledger is None:
        with tempfile.TemporaryDirectory(prefix = 'gammaflow_') as tmp:
            return _certify(n, *args, Ledger(os.path.join(tmp, f'certify_{n}.jsonl')), *rest)
    if not isinstance(ledger, Ledger):
        ledger = Ledger(ledger)
    return _certify(n, *args, ledger, *rest)
