#!/usr/bin/python3 -tt

# Copyright 2026 The ramsey-census authors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License, version 2 as
# published by the Free Software Foundation.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License along
# with this program.  If not, write to the Free Software Foundation, Inc.,
# 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA

# Work distribution: contiguous input shards for multi-machine runs and
# an ordered process pool inside one machine.  Results come back in input
# order either way, so merged output never depends on worker timing.

import logging
import multiprocessing


def shard(items, index, count):
    '''Slice index of count contiguous, near-equal slices.'''
    if count < 1 or not 0 <= index < count:
        raise ValueError('shard %d/%d out of range' % (index, count))
    items = list(items)
    size = len(items)
    return items[size * index // count:size * (index + 1) // count]


class WorkerPool(object):
    '''Context manager; map(func, items) is the builtin map for one
       worker, else Pool.imap.  func must be picklable.'''

    def __init__(self, workers=1, chunksize=1):
        if workers < 1:
            raise ValueError('need at least one worker, got %d' % workers)
        self.workers = workers
        self.chunksize = chunksize
        self._pool = None

    def __enter__(self):
        if self.workers > 1:
            self._pool = multiprocessing.Pool(self.workers)
            logging.info('started %d workers', self.workers)
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._pool is not None:
            if exc_type is None:
                self._pool.close()
            else:
                self._pool.terminate()
            self._pool.join()
            self._pool = None
        return False

    def map(self, func, items):
        if self._pool is None:
            return map(func, items)
        return self._pool.imap(func, items, self.chunksize)
