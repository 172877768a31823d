from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging

from ..utils.graph import has_cycle, topological_sort
from .node import ProducerNode

logger = logging.getLogger(__package__)

class GraphEngine:
    '''
    Checks the shape of a flow graph and keeps its topological sort.

    - Raises:
        - ``AttributeError`` unless ``producers`` holds exactly one ``ProducerNode``
        - ``ValueError`` if the graph has a cycle or a consumer cannot be \
            reached from the producer
    '''
    def __init__(self, producers, consumers):
        if len(producers) != 1 or not isinstance(producers[0], ProducerNode):
            raise AttributeError(f'A flow needs exactly one producer, got {producers!r}')
        if has_cycle(producers):
            logger.error('Cycle detected in the flow graph')
            raise ValueError('Cycle found in graph')
        self._tsort = topological_sort(producers)
        logger.debug(f'Topological sort: {self._tsort}')
        unreachable = [c for c in consumers if c not in self._tsort]
        if unreachable:
            logger.error(f'Consumers {unreachable} cannot be reached from the producer')
            raise ValueError(f'{unreachable} cannot be reached from the producer')

    def topological_sort(self) -> list:
        return list(self._tsort)
