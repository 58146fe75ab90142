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

""" Run pep8 filter on each python file """

import os
import unittest

import pep8

from test_utils import get_census_path

_CHECKED = (
    'bucket_sqlite3.py',
    'canon.py',
    'census_io.py',
    'cmdproto.py',
    'engine.py',
    'extender.py',
    'gluer.py',
    'graph6.py',
    'graph_core.py',
    'indset_engine.py',
    'pair_gluer.py',
    'ramsey.py',
    'run_config.py',
    'runlog.py',
    'sqlassist.py',
    'workers.py',
)


class TestCodeFormat(unittest.TestCase):

    def test_pep8_conformance(self):
        """Test that we conform to PEP8."""
        pep8style = pep8.StyleGuide(
            ignore=['E121', 'E123', 'E126', 'E133', 'E226',
                    'E241', 'E242', 'E704', 'E265', 'E201', 'E202',
                    'W503', 'W504'],
            show_source=True
        )
        src = os.path.join(get_census_path(), 'src')
        result = pep8style.check_files(
            [os.path.join(src, name) for name in _CHECKED])
        self.assertEqual(result.total_errors, 0,
                         "Found code style errors (and warnings).")


if __name__ == '__main__':
    unittest.main()
