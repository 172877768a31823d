from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
from multiprocessing import Queue, Event, Lock, Process

from ..core.node import ProducerNode, ProcessorNode, ConsumerNode
from ..core.task import ProducerTask, ProcessorTask, ConsumerTask, PoolWorkerTask, PoolCollectTask
from ..core.engine import ExecutionEngine

logger = logging.getLogger(__package__)

def _run_task(task):
    task.run()

def _pool_tasks(processor : ProcessorNode, inbox, outbox) -> list:
    lock = Lock()
    order_queue = Queue()
    results = [Queue() for _ in range(processor.nb_tasks)]
    tasks = [PoolWorkerTask(idx, processor, lock, inbox, order_queue, results[idx])
             for idx in range(processor.nb_tasks)]
    tasks.append(PoolCollectTask(order_queue, results, outbox))
    return tasks

class BatchExecutionEngine(ExecutionEngine):
    '''
    One process per task. Consecutive tasks are linked by queues of size 1,
    so a slow task holds back the ones above it instead of letting items
    pile up in memory. A processor with ``nb_tasks > 1`` runs as a pool of
    workers plus a task that restores the input order.
    '''
    def __init__(self):
        self._procs = []
        self._termination_event = None
        super(BatchExecutionEngine, self).__init__()

    def _tasks(self, nodes : list) -> list:
        self._termination_event = Event()
        # channels[i] carries the envelopes leaving position i
        channels = [Queue(1) for _ in nodes[:-1]] + [None]
        tasks = []
        for i, node in enumerate(nodes):
            inbox = channels[i - 1] if i > 0 else None
            outbox = channels[i]
            if isinstance(node, ProducerNode):
                tasks.append(ProducerTask(node, outbox, self._termination_event))
            elif isinstance(node, ProcessorNode) and node.nb_tasks > 1:
                tasks.extend(_pool_tasks(node, inbox, outbox))
            elif isinstance(node, ProcessorNode):
                tasks.append(ProcessorTask(node, inbox, outbox))
            elif isinstance(node, ConsumerNode):
                tasks.append(ConsumerTask(node, inbox, outbox))
            else:
                raise ValueError(f'{node} is not a producer, processor or consumer')
        return tasks

    def _start(self, nodes : list):
        self._procs = [Process(target = _run_task, args = (task,)) for task in self._tasks(nodes)]
        for proc in self._procs:
            proc.start()
        logger.debug(f'Started {len(self._procs)} task processes')

    def signal_flow_termination(self):
        if self._termination_event is not None:
            self._termination_event.set()

    def join_task_processes(self):
        for proc in self._procs:
            try:
                proc.join()
            except KeyboardInterrupt:
                proc.join()
