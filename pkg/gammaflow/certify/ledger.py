from __future__ import print_function
from __future__ import division
from __future__ import absolute_import

import json
import logging
import os

from ..core.constants import LEDGER_CERT, LEDGER_TELEMETRY
from .certifier import CertRecord

logger = logging.getLogger(__package__)

class Ledger:
    '''
    Append-only JSON-lines file of certification records. Each line is
    flushed and synced before ``append`` returns, so an interrupted run
    loses at most the line being written; that partial line is dropped the
    next time the ledger is opened or replayed.

    A ledger is written by a single process at a time.

    - Arguments:
        - path: the ledger file; missing parent directories are created
    '''
    def __init__(self, path : str):
        self._path = path
        self._file = None

    @property
    def path(self) -> str:
        return self._path

    def _drop_partial_tail(self):
        if not os.path.isfile(self._path):
            return
        with open(self._path, 'rb+') as f:
            data = f.read()
            if not data or data.endswith(b'\n'):
                return
            keep = data.rfind(b'\n') + 1
            logger.warning(f'Dropping truncated last line of ledger {self._path}')
            f.truncate(keep)

    def open(self):
        if self._file is not None:
            return
        parent = os.path.dirname(os.path.abspath(self._path))
        os.makedirs(parent, exist_ok = True)
        self._drop_partial_tail()
        self._file = open(self._path, 'a', encoding = 'utf-8')

    def close(self):
        if self._file is not None:
            self._file.close()
            self._file = None

    def __enter__(self):
        self.open()
        return self

    def __exit__(self, type, value, traceback):
        self.close()

    def _write(self, entry : dict):
        if self._file is None:
            raise RuntimeError('Ledger must be opened before writing')
        self._file.write(json.dumps(entry, sort_keys = True) + '\n')
        self._file.flush()
        os.fsync(self._file.fileno())

    def append(self, record : CertRecord):
        self._write(record.to_json_dict())

    def append_telemetry(self, n : int, elapsed : float, bits : int):
        '''Wall time of one certification run of order n'''
        self._write({'kind': LEDGER_TELEMETRY, 'n': n, 'elapsed': elapsed, 'bits': bits})

    def _entries(self):
        if not os.path.isfile(self._path):
            return []
        with open(self._path, encoding = 'utf-8') as f:
            lines = f.read().split('\n')
        complete, tail = lines[:-1], lines[-1]
        if tail.strip():
            logger.warning(f'Ignoring truncated last line of ledger {self._path}')
        entries = []
        for number, line in enumerate(complete, 1):
            if not line.strip():
                continue
            try:
                entries.append(json.loads(line))
            except ValueError:
                logger.error(f'Malformed line {number} in ledger {self._path}')
                raise ValueError(f'Malformed line {number} in ledger {self._path}')
        return entries

    def replay(self, n : int = None, certified_only : bool = False) -> dict:
        '''
        Records keyed by ``(m, theta)``. A later line for the same key replaces
        an earlier one.

        - Arguments:
            - n: only keep records of runs of order n
            - certified_only: drop keys whose latest record is not certified
        '''
        done = {}
        for entry in self._entries():
            if entry.get('kind') != LEDGER_CERT:
                continue
            record = CertRecord.from_json_dict(entry)
            if n is None or record.n == n:
                done[record.key] = record
        if certified_only:
            done = {k: r for k, r in done.items() if r.certified}
        return done

    def telemetry(self) -> list:
        '''Telemetry entries in file order'''
        return [e for e in self._entries() if e.get('kind') == LEDGER_TELEMETRY]
