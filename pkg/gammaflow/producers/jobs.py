from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

from ..core.node import ProducerNode

class CertificationJobProducer(ProducerNode):
    '''
    Each time the ``next`` method is called, produces the next ``(m, theta)``
    pair of ``jobs``, and raises ``StopIteration`` after the last one.

    - Arguments:
        - jobs: list of ``(m, ThetaChoice)`` pairs
    '''
    def __init__(self, jobs):
        self._jobs = list(jobs)
        self._next_index = 0
        super(CertificationJobProducer, self).__init__()

    def __len__(self):
        return len(self._jobs)

    def next(self):
        if self._next_index >= len(self._jobs):
            raise StopIteration()
        job = self._jobs[self._next_index]
        self._next_index += 1
        self._logger.debug(f'Producing job {job}')
        return job
