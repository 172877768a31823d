'''
Tasks drive nodes inside the batch engine. Every task owns one process and
talks to its neighbours through ``multiprocessing`` queues.

What travels down the queues is an envelope: a dict from node id to the
output of that node, grown by every processor on the way, so a node can read
any ancestor and not only the task right above it. After the producer's last
item an ``EndOfStream`` travels instead of an envelope.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging

from .node import ProducerNode, ProcessorNode, ConsumerNode
from ..utils.generic_utils import DelayedKeyboardInterrupt

logger = logging.getLogger(__package__)

class EndOfStream:
    '''Sent down the flow once the producer is exhausted or the flow is stopped'''
    def __repr__(self):
        return 'EndOfStream'

def is_end_of_stream(message) -> bool:
    return isinstance(message, EndOfStream)

class Task:
    def run(self):
        raise NotImplementedError('run must be implemented by subclass')

class NodeTask(Task):
    '''
    Opens the node, calls ``_step`` until it returns False and closes the
    node. A keyboard interrupt is delayed until the current step is done.

    - Arguments:
        - node: the node to drive
        - inbox: queue of incoming envelopes, None for a producer
        - outbox: queue for outgoing envelopes, None at the end of the flow
    '''
    def __init__(self, node, inbox, outbox):
        self._node = node
        self._inbox = inbox
        self._outbox = outbox

    @property
    def node(self):
        return self._node

    def _send(self, envelope):
        if self._outbox is not None:
            self._outbox.put(envelope, block = True)

    def _inputs(self, envelope) -> list:
        return [envelope[parent.id] for parent in self._node.parents]

    def _step(self) -> bool:
        raise NotImplementedError('_step must be implemented by subclass')

    def _interrupted(self) -> bool:
        '''Returns True when the loop must end after a keyboard interrupt'''
        return False

    def run(self):
        self._node.open()
        try:
            while True:
                try:
                    with DelayedKeyboardInterrupt():
                        if not self._step():
                            break
                except KeyboardInterrupt:
                    if self._interrupted():
                        break
        finally:
            self._node.close()

class ProducerTask(NodeTask):
    '''
    Calls ``next`` on the producer until it is exhausted, the termination
    event is set or the process is interrupted. Ends the stream in all
    three cases, so the tasks below drain what they already received.
    '''
    def __init__(self, producer : ProducerNode, outbox, termination_event):
        self._termination_event = termination_event
        self._stopping = False
        super(ProducerTask, self).__init__(producer, None, outbox)

    def _end(self) -> bool:
        self._send(EndOfStream())
        return False

    def _step(self) -> bool:
        if self._stopping or self._termination_event.is_set():
            return self._end()
        try:
            item = self._node.next()
        except StopIteration:
            return self._end()
        self._send({self._node.id: item})
        return True

    def _interrupted(self) -> bool:
        logger.info('Interrupt received, ending the stream')
        self._stopping = True
        return False

class ProcessorTask(NodeTask):
    '''Adds the processor output to each envelope'''
    def __init__(self, processor : ProcessorNode, inbox, outbox):
        super(ProcessorTask, self).__init__(processor, inbox, outbox)

    def _step(self) -> bool:
        envelope = self._inbox.get()
        if is_end_of_stream(envelope):
            self._send(envelope)
            return False
        envelope[self._node.id] = self._node.process(*self._inputs(envelope))
        self._send(envelope)
        return True

class ConsumerTask(NodeTask):
    '''Consumes each envelope and passes it on unchanged'''
    def __init__(self, consumer : ConsumerNode, inbox, outbox):
        super(ConsumerTask, self).__init__(consumer, inbox, outbox)

    def _step(self) -> bool:
        envelope = self._inbox.get()
        if is_end_of_stream(envelope):
            self._send(envelope)
            return False
        self._node.consume(*self._inputs(envelope))
        self._send(envelope)
        return True

class PoolWorkerTask(NodeTask):
    '''
    One of the ``nb_tasks`` workers of a processor. Taking an envelope and
    writing the worker index to the order queue happen under one lock, which
    lets ``PoolCollectTask`` restore the input order.

    The worker that takes the end of the stream puts it back for the others.
    '''
    def __init__(self, idx : int, processor : ProcessorNode, lock, inbox, order_queue, results):
        self._idx = idx
        self._lock = lock
        self._order_queue = order_queue
        super(PoolWorkerTask, self).__init__(processor, inbox, results)

    def _step(self) -> bool:
        with self._lock:
            envelope = self._inbox.get()
            self._order_queue.put(self._idx)
        if is_end_of_stream(envelope):
            self._inbox.put(envelope)
            self._send(envelope)
            return False
        envelope[self._node.id] = self._node.process(*self._inputs(envelope))
        self._send(envelope)
        return True

class PoolCollectTask(Task):
    '''
    Reads the workers' results in input order and forwards them. The end of
    the stream is forwarded once every worker has finished.
    '''
    def __init__(self, order_queue, results, outbox):
        self._order_queue = order_queue
        self._results = results
        self._outbox = outbox

    def run(self):
        finished = 0
        while finished < len(self._results):
            try:
                with DelayedKeyboardInterrupt():
                    envelope = self._results[self._order_queue.get()].get()
                    if is_end_of_stream(envelope):
                        finished += 1
                        if finished < len(self._results):
                            continue
                    if self._outbox is not None:
                        self._outbox.put(envelope, block = True)
            except KeyboardInterrupt:
                continue
