'''
Nodes of a certification flow. A flow is a small DAG: one producer emitting
work items, processors transforming them (possibly on several worker
processes) and consumers persisting the results.
'''
from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging

logger = logging.getLogger(__package__)

def _node_logger(node):
    # Child of the package logger so the handler set up in ``gammaflow.core`` applies
    return logging.getLogger(f'gammaflow.nodes.{node}')

class Node:
    '''
    A vertex of the flow graph. Calling a node with its parents wires it into
    the graph and returns the node, so graphs read as
    ``out = LedgerConsumer(path)(CertificationProcessor(n)(producer))``.

    - Arguments:
        - name: shown in logs instead of the class name
    '''
    def __init__(self, name = None):
        self._name = name
        self._parents = None
        self._children = set()
        # Fixed here: ``id(self)`` changes once the node is pickled to a worker
        self._id = id(self)
        self._logger = _node_logger(self)

    def __repr__(self):
        return self._name or self.__class__.__name__

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return self._id

    def __getstate__(self):
        state = dict(self.__dict__)
        del state['_logger']
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._logger = _node_logger(self)

    @property
    def id(self) -> int:
        return self._id

    def open(self):
        '''
        Acquires what the node needs for its whole life (files, caches). Runs
        inside the process that executes the node.
        '''
        pass

    def close(self):
        '''Releases what ``open`` acquired'''
        pass

    def __call__(self, *parents):
        if self._parents is not None:
            raise RuntimeError(f'Parents of {self} are already set')
        wired = []
        for parent in parents:
            if not isinstance(parent, Node):
                raise AttributeError(f'{parent!r} is not a node')
            if parent._children is None:
                raise AttributeError(f'{parent} is a consumer and cannot have children')
            wired.append(parent)
        self._parents = wired
        for parent in wired:
            parent._children.add(self)
        return self

    @property
    def parents(self):
        '''List of parent nodes in call order, None until the node is wired'''
        return None if self._parents is None else list(self._parents)

    @property
    def children(self) -> set:
        return set(self._children or ())

class ProducerNode(Node):
    '''
    Source of the flow. ``next`` returns one work item per call and raises
    ``StopIteration`` when there is nothing left. Producers hold their state
    explicitly instead of being generators, since nodes are pickled to
    worker processes.
    '''
    def next(self):
        raise NotImplementedError('next must be implemented by subclass')

class ProcessorNode(Node):
    '''
    Maps the items of its parents to one output item.

    - Arguments:
        - nb_tasks: worker processes the batch engine gives this processor. \
            Items may then reach children out of order.
    '''
    def __init__(self, nb_tasks : int = 1, **kwargs):
        if not isinstance(nb_tasks, int) or nb_tasks < 1:
            raise ValueError(f'nb_tasks must be a positive integer, got {nb_tasks!r}')
        self._nb_tasks = nb_tasks
        super(ProcessorNode, self).__init__(**kwargs)

    @property
    def nb_tasks(self) -> int:
        return self._nb_tasks

    def process(self, *inputs):
        '''
        - Arguments:
            - inputs: one item per parent, in the order the parents were given

        - Returns:
            - the item passed on to the children
        '''
        raise NotImplementedError('process must be implemented by subclass')

class ConsumerNode(Node):
    '''Sink of the flow. Consumers have no children.'''
    def __init__(self, **kwargs):
        super(ConsumerNode, self).__init__(**kwargs)
        self._children = None

    def consume(self, *inputs):
        raise NotImplementedError('consume must be implemented by subclass')
