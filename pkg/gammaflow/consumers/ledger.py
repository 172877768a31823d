from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

from ..core.node import ConsumerNode
from ..certify.ledger import Ledger
from ..utils.generic_utils import DelayedKeyboardInterrupt

class LedgerConsumer(ConsumerNode):
    '''
    Appends every ``CertRecord`` it receives to the ledger at ``path``. It is
    the only writer of the ledger while the flow runs.
    '''
    def __init__(self, path : str):
        self._path = path
        self._ledger = None
        self._count = 0
        super(LedgerConsumer, self).__init__()

    def open(self):
        self._ledger = Ledger(self._path)
        self._ledger.open()

    def close(self):
        if self._ledger is not None:
            self._ledger.close()
            self._ledger = None
        self._logger.debug(f'Wrote {self._count} records to {self._path}')

    def consume(self, record):
        with DelayedKeyboardInterrupt():
            self._ledger.append(record)
        self._count += 1
