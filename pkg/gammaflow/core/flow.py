from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging

from .graph import GraphEngine
from .constants import BATCH, INLINE, FLOW_TYPES
from ..engines.batch import BatchExecutionEngine
from ..engines.inline import InlineExecutionEngine

logger = logging.getLogger(__package__)

_ENGINES = {
    BATCH: BatchExecutionEngine,
    INLINE: InlineExecutionEngine
}

class Flow:
    '''
    A runnable graph of one producer, processors and consumers. The graph is
    checked when the flow is built and executed in topological order.

    - Arguments:
        - producers: list holding the single ``ProducerNode``
        - consumers: list of ``ConsumerNode``, each reachable from the producer
        - flow_type: ``BATCH`` runs one process per task, ``INLINE`` runs \
            everything in the calling process

    - Raises:
        - ``ValueError`` for an unknown flow type, a cycle or an unreachable consumer
        - ``AttributeError`` unless there is exactly one producer
    '''
    def __init__(self, producers, consumers, flow_type = BATCH):
        if flow_type not in FLOW_TYPES:
            raise ValueError('flow_type must be one of {}'.format(','.join(FLOW_TYPES)))
        self._graph_engine = GraphEngine(producers, consumers)
        self._flow_type = flow_type
        self._execution_engine = _ENGINES[flow_type]()

    @property
    def flow_type(self) -> str:
        return self._flow_type

    def run(self):
        '''
        Starts the flow. With ``INLINE`` the flow has already finished when
        this returns; with ``BATCH`` call ``join`` to wait for it.
        '''
        nodes = self._graph_engine.topological_sort()
        logger.info(f'Running {len(nodes)} nodes on the {self._flow_type} engine')
        self._execution_engine.allocate_and_run_tasks(nodes)

    def join(self):
        '''Blocks until every item has gone through the flow'''
        self._execution_engine.join_task_processes()
        logger.info('Flow finished')

    def stop(self):
        '''Ends the stream at the producer and waits for the flow to drain'''
        logger.info('Stopping flow')
        self._execution_engine.signal_flow_termination()
        self.join()
