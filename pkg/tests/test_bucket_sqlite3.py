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

""" Unit tests for the SQLite bucket store """

import os
import sqlite3
import tempfile
import unittest

from test_utils import circulant, cycle, path, silent_remove

try:
    from bucket_sqlite3 import BucketRow, SQLite3assist, SQLiteBucketStore
    from graph6 import encode
except Exception as e:
    raise SystemExit('Import(s) failed: %s' % str(e))


class TestBucketStore(unittest.TestCase):

    def setUp(self):
        self.store = SQLiteBucketStore()

    def tearDown(self):
        self.store.close()

    def test_rows_come_back(self):
        store = self.store
        store.add(0, (2, 2, 2, 2, 2), cycle(5))
        store.add(1, (1, 2, 2, 1), path(4))
        store.add(2, (2, 2, 2, 2, 2), path(5))
        self.assertEqual(len(store), 3)
        self.assertEqual(store.lookup((2, 2, 2, 2, 2)),
                         [(0, cycle(5)), (2, path(5))])
        self.assertEqual(store.lookup((0, )), [])
        rows = list(store)
        self.assertEqual([r[0] for r in rows], [0, 1, 2])
        self.assertEqual(rows[1][1], (1, 2, 2, 1))
        self.assertEqual(rows[2][2], path(5))

    def test_large_graph(self):
        g = circulant(13, (1, 5))
        self.store.add(7, g.degrees(), g)
        self.assertEqual(self.store.lookup(g.degrees()), [(7, g)])

    def test_batches_commit(self):
        self.store._BATCH = 2
        for i in range(5):
            self.store.add(i, (i, ), cycle(5))
        self.assertEqual(self.store._pending, 1)
        self.assertEqual(len(list(self.store)), 5)
        self.assertEqual(self.store._pending, 0)

    def test_duplicate_id(self):
        self.store.add(0, (1, ), cycle(5))
        with self.assertRaises(sqlite3.IntegrityError):
            self.store.add(0, (1, ), cycle(5))

    def test_temporary_file_removed(self):
        db_file = self.store.db_file
        self.assertTrue(os.path.exists(db_file))
        self.store.close()
        self.assertFalse(os.path.exists(db_file))
        self.store.close()      # second close is harmless


class TestNamedStore(unittest.TestCase):

    def test_named_file_is_kept(self):
        fd, db_file = tempfile.mkstemp(suffix='.db')
        os.close(fd)
        try:
            store = SQLiteBucketStore(db_file)
            store.add(0, (3, ), cycle(5))
            store.close()
            self.assertTrue(os.path.exists(db_file))
            again = SQLiteBucketStore(db_file)
            self.assertEqual(again.lookup((3, )), [(0, cycle(5))])
            again.close()
        finally:
            for suffix in ('', '-wal', '-shm'):
                silent_remove(db_file + suffix)


class TestCursorWrapper(unittest.TestCase):

    def setUp(self):
        fd, self.db_file = tempfile.mkstemp(suffix='.db')
        os.close(fd)
        self.db = SQLite3assist(db_file=self.db_file)
        self.db.execute('CREATE TABLE t (a INTEGER, b TEXT)')

    def tearDown(self):
        self.db.close()
        for suffix in ('', '-wal', '-shm'):
            silent_remove(self.db_file + suffix)

    def test_insert_and_iterate(self):
        self.assertEqual(self.db.INSERT('t', (1, 'x')), 1)
        self.db.INSERT('t', (2, 'y'))
        self.db.execute('SELECT a, b FROM t ORDER BY a')
        self.assertEqual(list(self.db), [(1, 'x'), (2, 'y')])

    def test_failed_execute(self):
        with self.assertRaises(sqlite3.OperationalError):
            self.db.execute('SELECT a FROM nowhere')
        self.assertIn('nowhere', self.db.execfail)
        self.db.raiseOnExecFail = False
        self.db.execute('SELECT a FROM nowhere')
        self.assertTrue(self.db.execfail)
        self.db.execute('SELECT a FROM t')
        self.assertEqual(self.db.execfail, '')

    def test_iterclass(self):
        with self.assertRaises(ValueError):
            self.db.iterclass = 'BucketRow'
        self.db.iterclass = BucketRow
        self.assertIs(self.db.iterclass, BucketRow)
        self.db.iterclass = 'raw'
        self.assertIsNone(self.db.iterclass)

    def test_unknown_option(self):
        with self.assertRaises(TypeError):
            SQLite3assist(db_file=self.db_file, colour='red')

    def test_closed(self):
        self.db.close()
        self.db.close()
        with self.assertRaises(RuntimeError):
            self.db.execute('SELECT 1')


class TestBucketRow(unittest.TestCase):

    def test_graph(self):
        row = BucketRow(id=4, key=b'\x02\x02', g6=encode(cycle(5)))
        self.assertEqual(row.graph, cycle(5))


if __name__ == '__main__':
    unittest.main()
