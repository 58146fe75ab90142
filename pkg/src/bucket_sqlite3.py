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

# Disk-backed extension buckets for the pair gluer.  Rows are kept in an
# SQLite table indexed by key bytes, so a bucket lookup is a B-tree probe
# and a full scan comes back in insertion (id) order.

import logging
import os
import sqlite3
import tempfile

import graph6

from sqlassist import SQLassist


class SQLite3assist(SQLassist):
    '''SQLassist on one SQLite file in WAL mode, so a scanning connection
       can read while the writer holds uncommitted rows.'''

    def DBconnect(self):
        mode = 'ro' if self.ro else 'rwc'
        try:
            self._conn = sqlite3.connect('file:%s?mode=%s' % (
                self.db_file, mode), uri=True)
            self._cursor = self._conn.cursor()
            self.execute('PRAGMA journal_mode=WAL')
        except sqlite3.Error as e:
            self.close()
            raise RuntimeError('bucket store %s: %s' % (self.db_file, e))

    def INSERT(self, table, values, commit=True):
        '''One complete row; returns its rowid.'''
        sql = 'INSERT INTO %s VALUES (%s)' % (
            table, ', '.join('?' * len(values)))
        self.execute(sql, tuple(values))
        if self.rowcount != 1:
            self.rollback()
            raise AssertionError('%s: %d rows' % (sql, self.rowcount))
        if commit:
            self.commit()
        return self.lastrowid

###########################################################################


class BucketRow(object):
    '''One row of the extensions table, for SQLassist.iterclass.'''

    def __init__(self, id, key, g6):
        self.id = id
        self.key = key
        self.g6 = g6

    @property
    def graph(self):
        return graph6.decode(self.g6)


class SQLiteBucketStore(object):
    '''(id, key, graph) rows.  With no db_file a temporary file is used and
       removed again by close().'''

    _SCHEMA = (
        '''CREATE TABLE IF NOT EXISTS extensions (
               id INTEGER PRIMARY KEY,
               key BLOB NOT NULL,
               g6 BLOB NOT NULL)''',
        '''CREATE INDEX IF NOT EXISTS extensions_key
               ON extensions(key)''',
    )

    _BATCH = 10000      # rows per commit

    def __init__(self, db_file=None):
        self._temporary = db_file is None
        if self._temporary:
            fd, db_file = tempfile.mkstemp(prefix='buckets_', suffix='.db')
            os.close(fd)
        self.db_file = db_file
        self._db = SQLite3assist(db_file=db_file)
        for sql in self._SCHEMA:
            self._db.execute(sql)
        self._db.commit()
        self._pending = 0
        self._count = 0
        logging.info('bucket store in %s', db_file)

    def add(self, ext_id, key, g):
        self._db.INSERT('extensions', (ext_id, bytes(key), graph6.encode(g)),
                        commit=False)
        self._count += 1
        self._pending += 1
        if self._pending >= self._BATCH:
            self.flush()

    def flush(self):
        if self._pending:
            self._db.commit()
            self._pending = 0

    def __len__(self):
        return self._count

    def lookup(self, key):
        '''[(id, graph)] in the bucket for key, ascending id.'''
        self.flush()
        self._db.execute('SELECT id, g6 FROM extensions WHERE key = ? '
                         'ORDER BY id', (bytes(key), ))
        return [(row[0], graph6.decode(row[1]))
                for row in self._db.fetchall()]

    def __iter__(self):
        '''(id, key, graph) for every row.  A second connection
           does the scan so lookups can interleave with it.'''
        self.flush()
        scanner = SQLite3assist(db_file=self.db_file)
        scanner.iterclass = BucketRow
        try:
            scanner.execute('SELECT id, key, g6 FROM extensions '
                            'ORDER BY id')
            for row in scanner:
                yield row.id, tuple(row.key), row.graph
        finally:
            scanner.close()

    def close(self):
        if self._db is None:
            return
        self.flush()
        self._db.close()
        self._db = None
        if self._temporary:
            for suffix in ('', '-wal', '-shm'):
                try:
                    os.remove(self.db_file + suffix)
                except OSError:
                    pass
