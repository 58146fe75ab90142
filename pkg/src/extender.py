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
# One-point extension and the bottom-up census built on it.
#---------------------------------------------------------------------------

import logging
import re
from collections import Counter
from functools import partial

import graph6

from canon import canonical_form
from graph_core import Graph, has_independent_set, is_ramsey
from indset_engine import enumerate_independent_sets

# R(3,t) for the t where it is known.
KNOWN_R3 = {
    1: 1,
    2: 3,
    3: 6,
    4: 9,
    5: 14,
    6: 18,
    7: 23,
    8: 28,
    9: 36,
}

_SPEC_RE = re.compile(
    r'^\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+|\?)\s*(?:,\s*e\s*(=|<=)\s*(\d+)\s*)?$')


class CensusSpec(object):
    '''A class like R(3,7,16,e<=24): no s-clique, no independent t-set, n
       vertices, edge count in [min_edges, max_edges].'''

    def __init__(self, s, t, n, max_edges=None, min_edges=None):
        if s < 1 or t < 1:
            raise ValueError('Ramsey parameters must be positive')
        if n is not None and n < 0:
            raise ValueError('negative order %d' % n)
        if max_edges is not None and max_edges < 0:
            raise ValueError('negative edge bound %d' % max_edges)
        self.s = s
        self.t = t
        self.n = n
        self.max_edges = max_edges
        self.min_edges = min_edges

    @classmethod
    def parse(cls, text):
        '''"3,7,16", "3,7,16,e=24" or "3,7,16,e<=24"; "?" for any order.'''
        m = _SPEC_RE.match(text)
        if m is None:
            raise ValueError('bad census class "%s"' % text)
        s, t, n, op, e = m.groups()
        n = None if n == '?' else int(n)
        if e is None:
            return cls(int(s), int(t), n)
        if op == '=':
            return cls(int(s), int(t), n, int(e), int(e))
        return cls(int(s), int(t), n, int(e))

    def __str__(self):
        text = '%d,%d,%s' % (self.s, self.t,
                             '?' if self.n is None else self.n)
        if self.max_edges is None:
            return text
        if self.min_edges == self.max_edges:
            return text + ',e=%d' % self.max_edges
        return text + ',e<=%d' % self.max_edges

    def __repr__(self):
        return 'CensusSpec(%s)' % self

    def __eq__(self, other):
        if not isinstance(other, CensusSpec):
            return NotImplemented
        return str(self) == str(other) and self.min_edges == other.min_edges

    def __hash__(self):
        return hash(str(self))

    def edges_ok(self, e):
        if self.max_edges is not None and e > self.max_edges:
            return False
        return self.min_edges is None or e >= self.min_edges

    def violation(self, g):
        '''Why g is not in this class, or None.'''
        if self.n is not None and g.order != self.n:
            return 'order %d, expected %d' % (g.order, self.n)
        if not self.edges_ok(g.edge_count):
            return '%d edges outside the class' % g.edge_count
        if not is_ramsey(g, self.s, self.t):
            return 'not an R(%d,%d) graph' % (self.s, self.t)
        return None

    def contains(self, g):
        return self.violation(g) is None

###########################################################################


def _is_min_degree_vertex(g, S):
    '''Would a new vertex attached to S have minimum degree?'''
    size = S.bit_count()
    for v, row in enumerate(g.adj):
        if row.bit_count() + (S >> v & 1) < size:
            return False
    return True


def attachment_sets(g, tbound, max_edges=None, min_degree_new=False):
    '''Independent S with alpha(V - S) <= tbound - 2, in (size, mask)
       order.'''
    full = g.all_mask
    room = None if max_edges is None else max_edges - g.edge_count
    for S in enumerate_independent_sets(g, 0):
        if room is not None and S.bit_count() > room:
            break
        if min_degree_new and not _is_min_degree_vertex(g, S):
            continue
        if not has_independent_set(g, full & ~S, tbound - 1):
            yield S


def one_point_extensions(g, tbound, max_edges=None, min_degree_new=False):
    '''{canonical form: graph} of g plus one vertex, staying R(3,tbound).'''
    if not is_ramsey(g, 3, tbound):
        raise ValueError('%r is not an R(3,%d) graph' % (g, tbound))
    results = {}
    for S in attachment_sets(g, tbound, max_edges, min_degree_new):
        h = g.add_vertex(S)
        form = canonical_form(h)
        if form not in results:
            results[form] = h
    return results


def _extension_forms(g, tbound, max_edges, min_degree_new):
    '''Worker side of census(): forms only, they pickle small.  The
       seed's memo goes once its extensions are out.'''
    try:
        return list(one_point_extensions(g, tbound, max_edges,
                                         min_degree_new))
    finally:
        g.forget_oracle()


def count_table(graphs):
    '''Counter (n, e) -> number of graphs.'''
    return Counter((g.order, g.edge_count) for g in graphs)


def census(spec, seeds, min_degree_pruning=True, mapper=map):
    '''Complete spec from seeds = all of R(3,t,n-1,e<=max_edges).  With
       min_degree_pruning only extensions whose new vertex has minimum
       degree are kept; every graph has such a vertex, so nothing is lost.
       mapper lets workers.worker_map run the seeds in parallel.'''
    if spec.s != 3:
        raise ValueError('generation needs s = 3, got %d' % spec.s)
    seeds = list(seeds)
    work = partial(_extension_forms, tbound=spec.t,
                   max_edges=spec.max_edges,
                   min_degree_new=min_degree_pruning)
    results = {}
    for forms in mapper(work, seeds):
        for form in forms:
            if form in results:
                continue
            g = graph6.decode(form)
            if spec.edges_ok(g.edge_count):
                results[form] = g
    logging.info('census %s: %d graphs from %d seeds', spec, len(results),
                 len(seeds))
    return results


def build_census(t, n, max_edges=None, min_degree_pruning=True, mapper=map):
    '''R(3,t,k,e<=max_edges) for k = 0..n, bottom-up from the empty graph,
       as {k: {form: graph}}.'''
    level = {}
    empty = Graph.empty(0)
    if is_ramsey(empty, 3, t):
        level[canonical_form(empty)] = empty
    orders = {0: level}
    for k in range(1, n + 1):
        spec = CensusSpec(3, t, k, max_edges)
        if level:
            level = census(spec, level.values(), min_degree_pruning, mapper)
        orders[k] = level
        logging.warning('R(%s): %d graphs', spec, len(level))
    return orders


def dual_neighbourhood_targets(n, t):
    '''Census classes one of which must hold some dual neighbourhood of
       a hypothetical graph in R(3,t+1,n).  Its maximum degree D is at most
       t; a vertex of degree d has dual order n-1-d < R(3,t), and some
       vertex has a dual neighbourhood with at most floor(nD/2) - dD
       edges.  Degree D itself needs nD even.'''
    if t not in KNOWN_R3:
        raise ValueError('R(3,%d) is not known here' % t)
    D = t
    top = D if n * D % 2 == 0 else D - 1
    bottom = max(0, n - KNOWN_R3[t])
    targets = []
    for d in range(top, bottom - 1, -1):
        order = n - 1 - d
        if order < 0:
            continue
        bound = n * D // 2 - d * D
        if bound < 0:
            continue
        targets.append(CensusSpec(3, t, order, bound))
    return targets


def forget_and_extend(graphs, t, max_edges=None, mapper=map):
    '''Delete each vertex in turn, then one-point extend every distinct
       result in all possible ways.  The inputs are part of the output.'''
    results = {}
    seeds = {}
    for g in graphs:
        results.setdefault(canonical_form(g), g)
        for v in range(g.order):
            h = g.delete_vertex(v)
            seeds.setdefault(canonical_form(h), h)
    logging.info('forget_and_extend: %d inputs, %d distinct deletions',
                 len(results), len(seeds))
    work = partial(_extension_forms, tbound=t, max_edges=max_edges,
                   min_degree_new=False)
    for forms in mapper(work, list(seeds.values())):
        for form in forms:
            if form not in results:
                results[form] = graph6.decode(form)
    return results
