from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

from ..core.constants import THETA_GAMMA_SHIFTED, DEFAULT_TERM_BUDGET
from ..core.node import ProcessorNode
from ..certify.certifier import certify_pair
from ..certify.jacobian import JacobianSystem
from ..numerics.interval import PrecisionConfig
from ..polys.textformat import PolyCache

class CertificationProcessor(ProcessorNode):
    '''
    Turns ``(m, theta)`` jobs into ``CertRecord``s. The ``JacobianSystem`` is
    built in ``open()``, so each worker process keeps its own caches.

    - Arguments:
        - n: order of the run
        - cfg: ``PrecisionConfig`` every job starts from
        - convention: column set used for theta = gamma
        - cache_dir: directory of the on-disk cache of P_n, None to build \
            the relations in memory
        - term_budget: budget of the symbolic determinant
        - nb_tasks: number of worker processes under the batch engine
    '''
    def __init__(self, n : int, cfg : PrecisionConfig = None, convention : str = THETA_GAMMA_SHIFTED,
                cache_dir : str = None, term_budget : int = DEFAULT_TERM_BUDGET, nb_tasks : int = 1):
        self._n = n
        self._cfg = cfg if cfg is not None else PrecisionConfig()
        self._convention = convention
        self._cache_dir = cache_dir
        self._term_budget = term_budget
        self._system = None
        super(CertificationProcessor, self).__init__(nb_tasks = nb_tasks)

    def open(self):
        cache = PolyCache(self._cache_dir) if self._cache_dir else None
        self._system = JacobianSystem(self._n, cache = cache, convention = self._convention)

    def close(self):
        self._system = None

    def process(self, job):
        m, theta = job
        return certify_pair(self._system, m, theta, self._cfg, self._term_budget)
