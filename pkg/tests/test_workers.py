#!/usr/bin/python3

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

""" Unit tests for workers.py """

import unittest

import test_utils  # noqa: F401  (src path)

try:
    from extender import build_census
    from workers import WorkerPool, shard
except Exception as e:
    raise SystemExit('Import(s) failed: %s' % str(e))


class TestShard(unittest.TestCase):

    def test_contiguous_cover(self):
        items = list(range(10))
        parts = [shard(items, i, 3) for i in range(3)]
        self.assertEqual(parts, [[0, 1, 2], [3, 4, 5], [6, 7, 8, 9]])
        self.assertEqual(sum(parts, []), items)

    def test_more_shards_than_items(self):
        parts = [shard('ab', i, 4) for i in range(4)]
        self.assertEqual(sum(parts, []), ['a', 'b'])

    def test_out_of_range(self):
        for index, count in ((3, 3), (-1, 3), (0, 0)):
            with self.assertRaises(ValueError):
                shard([1, 2], index, count)


class TestWorkerPool(unittest.TestCase):

    def test_single_worker_is_plain_map(self):
        with WorkerPool(1) as pool:
            self.assertIsNone(pool._pool)
            self.assertEqual(list(pool.map(abs, [-1, 2, -3])), [1, 2, 3])

    def test_processes_keep_order(self):
        with WorkerPool(2) as pool:
            self.assertEqual(list(pool.map(abs, range(-20, 0))),
                             list(range(20, 0, -1)))
        self.assertIsNone(pool._pool)

    def test_bad_worker_count(self):
        with self.assertRaises(ValueError):
            WorkerPool(0)

    def test_error_terminates(self):
        with self.assertRaises(TypeError):
            with WorkerPool(2) as pool:
                list(pool.map(abs, ['x']))
        self.assertIsNone(pool._pool)

    def test_census_in_parallel(self):
        serial = build_census(4, 7)
        with WorkerPool(2) as pool:
            parallel = build_census(4, 7, mapper=pool.map)
        for n in serial:
            self.assertEqual(set(serial[n]), set(parallel[n]))


if __name__ == '__main__':
    unittest.main()
