from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

from .node import ProducerNode

class ExecutionEngine:
    '''
    Runs the nodes of a flow, given in topological order with the producer
    first. Subclasses decide where the nodes run: the calling process or
    one process per task.
    '''
    def __init__(self):
        self._started = False

    def _start(self, nodes : list):
        raise NotImplementedError('_start must be implemented by subclass')

    def signal_flow_termination(self):
        '''
        Asks the producer to end the stream. Items already in the flow are
        still processed and consumed.
        '''
        raise NotImplementedError('signal_flow_termination must be implemented by subclass')

    def join_task_processes(self):
        '''Blocks until every task has finished'''
        raise NotImplementedError('join_task_processes must be implemented by subclass')

    def allocate_and_run_tasks(self, nodes : list):
        '''
        - Arguments:
            - nodes: topological sort of the flow graph

        - Raises:
            - ``RuntimeError`` if the engine already ran
            - ``ValueError`` if the first node is not a producer
        '''
        if self._started:
            raise RuntimeError('An execution engine runs a single flow')
        if not nodes or not isinstance(nodes[0], ProducerNode):
            raise ValueError('A flow must start with its producer')
        self._started = True
        self._start(list(nodes))
