from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging

from ..core.node import ProcessorNode, ConsumerNode
from ..core.engine import ExecutionEngine
from ..utils.generic_utils import DelayedKeyboardInterrupt

logger = logging.getLogger(__package__)

class InlineExecutionEngine(ExecutionEngine):
    '''
    Runs the whole flow in the calling process: each item goes through every
    processor and consumer in topological order before the next one is
    produced. ``allocate_and_run_tasks`` returns once the producer is
    exhausted or the flow is stopped.
    '''
    def __init__(self):
        self._stop_requested = False
        super(InlineExecutionEngine, self).__init__()

    @staticmethod
    def _run_item(nodes, item):
        outputs = {nodes[0].id: item}
        for node in nodes[1:]:
            inputs = [outputs[parent.id] for parent in node.parents]
            if isinstance(node, ProcessorNode):
                outputs[node.id] = node.process(*inputs)
            elif isinstance(node, ConsumerNode):
                node.consume(*inputs)

    def _start(self, nodes : list):
        opened = []
        count = 0
        try:
            for node in nodes:
                node.open()
                opened.append(node)
            while not self._stop_requested:
                try:
                    with DelayedKeyboardInterrupt():
                        self._run_item(nodes, nodes[0].next())
                        count += 1
                except StopIteration:
                    break
                except KeyboardInterrupt:
                    logger.info('Interrupt received, stopping the flow')
                    break
        finally:
            for node in reversed(opened):
                node.close()
        logger.debug(f'Inline flow ran {count} items')

    def signal_flow_termination(self):
        self._stop_requested = True

    def join_task_processes(self):
        pass
