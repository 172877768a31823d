'''
This package contains the consumers that implement the ``gammaflow.core.node.ConsumerNode`` \
    interface
'''
from .ledger import LedgerConsumer
