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

###########################################################################
# Connect/execute helpers over a DB-API connection.  A subclass supplies
# DBconnect(), which must set _conn and _cursor; everything else here is
# backend neutral.


class SQLassist(object):
    '''execute() traps failures into execfail and re-raises unless
       raiseOnExecFail is off.  Iterating yields the rows of the last
       query, as tuples or as iterclass(**columns).'''

    _defaults = {
        'db_file':          None,
        'raiseOnExecFail':  True,
        'ro':               False,
    }

    def __init__(self, **kwargs):
        for k, v in self._defaults.items():
            setattr(self, k, kwargs.pop(k, v))
        if kwargs:
            raise TypeError('unknown option(s) %s' % ', '.join(sorted(kwargs)))
        self._conn = self._cursor = None
        self._iterclass = None
        self.execfail = ''
        self.DBconnect()

    def DBconnect(self):
        raise NotImplementedError

    def INSERT(self, *args):
        raise NotImplementedError

    def __str__(self):
        return '%s(db_file=%s, ro=%s)' % (
            self.__class__.__name__, self.db_file, self.ro)

    def _live(self):
        if self._cursor is None:
            raise RuntimeError('%s is closed' % self.db_file)
        return self._cursor

    def execute(self, query, parms=None):
        cursor = self._live()
        self.execfail = ''
        try:
            if parms is None:
                cursor.execute(query)
            else:
                if not isinstance(parms, tuple):
                    parms = (parms, )
                cursor.execute(query, parms)
        except Exception as e:      # sqlite3.Error and friends
            self.execfail = str(e)
            if self.raiseOnExecFail:
                raise

    def fetchall(self):
        return self._live().fetchall()

    @property
    def rowcount(self):
        return self._live().rowcount

    @property
    def lastrowid(self):
        return self._live().lastrowid

    def commit(self):
        self._live()
        self._conn.commit()

    def rollback(self):
        self._live()
        self._conn.rollback()

    def close(self):
        '''Idempotent.'''
        if self._conn is not None:
            self._conn.close()
        self._conn = self._cursor = None

    @property
    def iterclass(self):
        return self._iterclass

    @iterclass.setter
    def iterclass(self, cls):
        '''None (or "raw") for plain tuples, else a class taking the
           column names as keyword arguments.'''
        if cls is None or cls == 'raw':
            self._iterclass = None
        elif isinstance(cls, type):
            self._iterclass = cls
        else:
            raise ValueError('iterclass must be None or a class')

    def __iter__(self):
        return self

    def __next__(self):
        row = self._live().fetchone()
        if row is None:
            raise StopIteration
        if self._iterclass is None:
            return row
        names = [d[0] for d in self._cursor.description]
        return self._iterclass(**dict(zip(names, row)))
