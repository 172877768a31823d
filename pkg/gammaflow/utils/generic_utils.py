from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import logging
import signal
import threading

logger = logging.getLogger(__package__)

class DelayedInterrupt(object):
    '''
    Holds back the given signals while the block runs and delivers them to
    the previous handlers on exit. A ledger line or a queued item is never
    left half written by Ctrl-C.

    Handlers can only be installed from the main thread; in any other thread
    the block runs with no delay.

    - Arguments:
        - signals: a signal number or a list of them
    '''
    def __init__(self, signals):
        if not isinstance(signals, (list, tuple)):
            signals = [signals]
        self._signals = list(signals)
        self._pending = {}
        self._previous = {}
        self._active = False

    def _hold(self, sig):
        def handler(number, frame):
            logger.debug(f'Signal {number} held until the current step ends')
            self._pending[sig] = (number, frame)
        return handler

    def __enter__(self):
        self._pending = {}
        self._previous = {}
        self._active = threading.current_thread() is threading.main_thread()
        if self._active:
            for sig in self._signals:
                self._previous[sig] = signal.getsignal(sig)
                signal.signal(sig, self._hold(sig))
        return self

    def __exit__(self, type, value, traceback):
        if not self._active:
            return
        for sig in self._signals:
            signal.signal(sig, self._previous[sig])
        for sig, args in self._pending.items():
            if callable(self._previous[sig]):
                self._previous[sig](*args)

class DelayedKeyboardInterrupt(DelayedInterrupt):
    def __init__(self):
        super(DelayedKeyboardInterrupt, self).__init__([signal.SIGINT])
