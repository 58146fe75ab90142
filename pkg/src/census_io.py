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

#---------------------------------------------------------------------------
# Census files: graph6 lines sorted by (order, edges, canonical bytes),
# streaming canonical dedup with sorted spill runs, verification against
# a CensusSpec, and the key: value manifest that travels with each file.
#---------------------------------------------------------------------------

import heapq
import logging
import tempfile
from collections import Counter

import psutil

import graph6

from canon import canonical_form
from extender import CensusSpec

TOOL_VERSION = '1.0'


def sort_key(g, form=None):
    if form is None:
        form = canonical_form(g)
    return (g.order, g.edge_count, form)


def read_graphs(path):
    '''Yield (lineno, Graph) from a graph6 file.'''
    with open(path, 'rb') as f:
        yield from graph6.iter_graph6(f)


def read_graph6_file(path):
    return [g for _, g in read_graphs(path)]


def write_census(path, census):
    '''census is {canonical form: graph}.  Returns the (n, e) counts.'''
    keyed = sorted(sort_key(g, form) for form, g in census.items())
    with open(path, 'wb') as f:
        for _, _, form in keyed:
            f.write(form + b'\n')
    counts = Counter((n, e) for n, e, _ in keyed)
    logging.info('%s: wrote %d graphs', path, len(keyed))
    return counts


def counts_table(counts):
    '''Printable per-(n, e) counts, total last.  A zero total is still
       printed.'''
    lines = ['%4s %6s %10s' % ('n', 'e', 'count')]
    for (n, e), k in sorted(counts.items()):
        lines.append('%4d %6d %10d' % (n, e, k))
    lines.append('total %15d' % sum(counts.values()))
    return '\n'.join(lines)

###########################################################################
# Dedup.  Held entries are '%02d %04d <form>' strings, so plain string
# order is (n, e, form) order and spill runs merge with heapq.merge.


class CanonicalDeduper(object):

    _ENTRY_BYTES = 160      # rough cost of one held entry

    def __init__(self, memory_cap=None, workdir=None):
        if memory_cap is None:
            memory_cap = psutil.virtual_memory().available // 4
        if memory_cap <= 0:
            raise ValueError('memory cap must be positive')
        self.max_held = max(1, memory_cap // self._ENTRY_BYTES)
        self.workdir = workdir
        self.inputs = 0
        self.counts = Counter()
        self._held = set()
        self._runs = []

    @staticmethod
    def _entry(g):
        return '%02d %04d %s' % (g.order, g.edge_count,
                                 canonical_form(g).decode('ascii'))

    def add(self, g):
        self.inputs += 1
        self._held.add(self._entry(g))
        if len(self._held) >= self.max_held:
            self._spill()

    @property
    def spilled_runs(self):
        return len(self._runs)

    def _spill(self):
        run = tempfile.TemporaryFile(mode='w+', dir=self.workdir)
        for entry in sorted(self._held):
            run.write(entry + '\n')
        run.seek(0)
        self._runs.append(run)
        logging.info('dedup: spilled run %d with %d entries',
                     len(self._runs), len(self._held))
        self._held = set()

    def _merged(self):
        if not self._runs:
            yield from sorted(self._held)
            return
        if self._held:
            self._spill()
        runs = [(line.rstrip('\n') for line in run) for run in self._runs]
        previous = None
        for entry in heapq.merge(*runs):
            if entry != previous:
                yield entry
            previous = entry

    def __iter__(self):
        '''Unique canonical graph6 bytes in (n, e, form) order.  counts
           is complete once iteration ends.'''
        self.counts = Counter()
        try:
            for entry in self._merged():
                n, e, form = entry.split(' ', 2)
                self.counts[(int(n), int(e))] += 1
                yield form.encode('ascii')
        finally:
            for run in self._runs:
                run.close()
            self._runs = []


def dedup_stream(lines, memory_cap=None, workdir=None):
    '''Feed graph6 lines through a CanonicalDeduper and hand it back for
       iteration.  Decode errors propagate with their line number.'''
    deduper = CanonicalDeduper(memory_cap, workdir)
    for _, g in graph6.iter_graph6(lines):
        deduper.add(g)
    return deduper

###########################################################################


class VerifyReport(object):

    def __init__(self, path, spec):
        self.path = path
        self.spec = spec
        self.total = 0
        self.counts = Counter()
        self.violations = []        # (lineno, reason)

    @property
    def passed(self):
        return not self.violations

    def __str__(self):
        return '%s against R(%s): %d graphs, %d violations' % (
            self.path, self.spec, self.total, len(self.violations))


def verify_file(path, spec, check_duplicates=True):
    '''Check every graph of a graph6 file against spec.  Decode errors
       are violations too; verification goes on at the next line.'''
    report = VerifyReport(path, spec)
    first_seen = {}
    with open(path, 'rb') as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                g = graph6.decode(line, lineno)
            except graph6.Graph6Error as e:
                report.violations.append((lineno, e.msg))
                continue
            report.total += 1
            report.counts[(g.order, g.edge_count)] += 1
            reason = spec.violation(g)
            if reason is not None:
                report.violations.append((lineno, reason))
            if check_duplicates:
                form = canonical_form(g)
                if form in first_seen:
                    report.violations.append(
                        (lineno, 'isomorphic to line %d' % first_seen[form]))
                else:
                    first_seen[form] = lineno
    for lineno, reason in report.violations:
        logging.error('%s:%d: %s', path, lineno, reason)
    logging.warning('%s', report)
    return report


class CensusStats(object):
    '''Counts per (n, e) plus histograms of minimum and maximum degree.'''

    def __init__(self):
        self.counts = Counter()
        self.min_degrees = Counter()
        self.max_degrees = Counter()

    def add(self, g):
        self.counts[(g.order, g.edge_count)] += 1
        self.min_degrees[g.min_degree] += 1
        self.max_degrees[g.max_degree] += 1

    def __str__(self):
        lines = [counts_table(self.counts)]
        for name, hist in (('min degree', self.min_degrees),
                           ('max degree', self.max_degrees)):
            lines.append(name)
            for deg, k in sorted(hist.items()):
                lines.append('%4d %10d' % (deg, k))
        return '\n'.join(lines)


def census_stats(graphs):
    stats = CensusStats()
    for g in graphs:
        stats.add(g)
    return stats

###########################################################################
# Manifests


def manifest_path(path):
    return path + '.manifest'


class CensusFile(object):
    '''Provenance of one census file.  A transient entry has counts but no
       graph payload.'''

    _fields = ('spec', 'seed_spec', 'tool_version', 'completeness',
               'transient', 'schedule')

    def __init__(self, path, spec, counts=None, seed_spec=None,
                 completeness='', transient=False, schedule='',
                 tool_version=TOOL_VERSION):
        self.path = path
        self.spec = spec
        self.counts = Counter(counts or {})
        self.seed_spec = seed_spec
        self.completeness = completeness
        self.transient = transient
        self.schedule = schedule
        self.tool_version = tool_version

    @property
    def total(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, CensusFile):
            return NotImplemented
        return all(getattr(self, f) == getattr(other, f)
                   for f in self._fields + ('counts', ))


def write_manifest(census_file):
    mpath = manifest_path(census_file.path)
    lines = [
        'spec: %s' % census_file.spec,
        'seed_spec: %s' % ('' if census_file.seed_spec is None
                           else census_file.seed_spec),
        'tool_version: %s' % census_file.tool_version,
        'completeness: %s' % census_file.completeness,
        'transient: %s' % ('yes' if census_file.transient else 'no'),
        'schedule: %s' % census_file.schedule,
    ]
    for (n, e), k in sorted(census_file.counts.items()):
        lines.append('count %d %d: %d' % (n, e, k))
    with open(mpath, 'w') as f:
        f.write('\n'.join(lines) + '\n')
    return mpath


def read_manifest(path):
    '''path is the census file; its manifest sits beside it.'''
    values = {}
    counts = Counter()
    with open(manifest_path(path)) as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip():
                continue
            key, sep, value = line.partition(':')
            if not sep:
                raise ValueError('%s line %d: no "key: value"' % (
                    manifest_path(path), lineno))
            value = value.strip()
            if key.startswith('count '):
                try:
                    n, e = (int(x) for x in key.split()[1:])
                    counts[(n, e)] = int(value)
                except ValueError:
                    raise ValueError('%s line %d: bad count line' % (
                        manifest_path(path), lineno))
            elif key in CensusFile._fields:
                values[key] = value
            else:
                raise ValueError('%s line %d: unknown key "%s"' % (
                    manifest_path(path), lineno, key))
    if 'spec' not in values:
        raise ValueError('%s: no spec line' % manifest_path(path))
    seed = values.get('seed_spec')
    return CensusFile(
        path,
        CensusSpec.parse(values['spec']),
        counts,
        seed_spec=CensusSpec.parse(seed) if seed else None,
        completeness=values.get('completeness', ''),
        transient=values.get('transient') == 'yes',
        schedule=values.get('schedule', ''),
        tool_version=values.get('tool_version', ''))
