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
# Pair gluing for d-regular targets.  A d-regular Gamma in R(3,t,N) with
# two nonadjacent vertices v, w sharing c neighbours splits into
#
#   core  V - N[v] - N[w], an R(3,t-2) graph on N - 2 - 2d + c vertices
#   G1    Gamma - N[w]: core + v + the d - c private neighbours A of v
#   G2    Gamma - N[v]: core + w + the d - c private neighbours B of w
#   C     the c shared neighbours, each seeing v, w and d - 2 core vertices
#
# G1 and G2 are gluer extensions of the core, both in R(3,t-1) with
# N*d/2 - d*d edges.  Every core vertex has degree d in Gamma, which fixes
# the core degree vector of G2 once G1 and C are chosen, so extensions are
# bucketed by that vector and partners come from one lookup.
#---------------------------------------------------------------------------

import logging
from collections import Counter
from itertools import combinations_with_replacement

from bucket_sqlite3 import SQLiteBucketStore
from canon import canonical_form
from extender import CensusSpec
from graph_core import Graph, bits, dual_edge_count, dual_neighbourhood, \
    is_ramsey
from gluer import GluingProblem, glue_labeled
from indset_engine import independent_sets_of_size
from runlog import PerfMeter

DEFAULT_BUCKET_SPILL = 1000000


class PairGlueProblem(object):
    '''core: an R(3,target_t-2) graph.  shared: common neighbours of the
       two apexes (0 for the disjoint-neighbourhood case).'''

    def __init__(self, core, target_t, target_degree, shared=0):
        if target_t < 3:
            raise ValueError('target independence bound %d below 3' %
                             target_t)
        if target_degree < 0 or not 0 <= shared <= target_degree:
            raise ValueError('degree %d with %d shared neighbours' % (
                target_degree, shared))
        if shared and target_degree < 2:
            raise ValueError('shared neighbours need degree >= 2')
        if not is_ramsey(core, 3, target_t - 2):
            raise ValueError('core %r is not an R(3,%d) graph' % (
                core, target_t - 2))
        self.core = core
        self.target_t = target_t
        self.target_degree = target_degree
        self.shared = shared
        self.target_n = core.order + 2 + 2 * target_degree - shared
        e = self.extension_edges
        self.extension_spec = CensusSpec(3, target_t - 1,
                                         core.order + 1 + self.apex_degree,
                                         max(e, 0), max(e, 0))

    def __str__(self):
        return 'pairglue(core n=%d e=%d, R(3,%d,%d) %d-regular, c=%d)' % (
            self.core.order, self.core.edge_count, self.target_t,
            self.target_n, self.target_degree, self.shared)

    @property
    def apex_degree(self):
        return self.target_degree - self.shared

    @property
    def extension_edges(self):
        d = self.target_degree
        return self.target_n * d // 2 - d * d

    @property
    def feasible(self):
        '''False when no d-regular target can exist at all.'''
        d = self.target_degree
        return (self.target_n * d % 2 == 0 and
                self.apex_degree <= self.target_t - 2 and
                self.extension_edges >= self.core.edge_count)

###########################################################################
# Keys.  A key is one entry per core vertex; buckets index it as bytes.


def pair_key(core, ext, embedding=None):
    '''Degree in ext of every core vertex; embedding[x] is the ext vertex
       playing core vertex x (identity by default).'''
    if embedding is None:
        embedding = range(core.order)
    embedding = tuple(embedding)
    if len(embedding) != core.order or len(set(embedding)) != core.order:
        raise ValueError('embedding is not injective on the core')
    if any(not 0 <= y < ext.order for y in embedding):
        raise ValueError('embedding leaves the extension')
    for x in range(core.order):
        for y in range(x + 1, core.order):
            if core.has_edge(x, y) != ext.has_edge(embedding[x],
                                                   embedding[y]):
                raise ValueError('embedding is not induced at (%d,%d)' % (
                    x, y))
    return tuple(ext.degree(y) for y in embedding)


def complement_key(key, core, d_reg, deficit=None):
    '''The partner key: d_reg + deg_core(x) - key[x] - deficit[x].'''
    if len(key) != core.order:
        raise ValueError('key of length %d for a core of order %d' % (
            len(key), core.order))
    if deficit is None:
        deficit = (0, ) * core.order
    partner = tuple(d_reg + dc - k - r
                    for k, dc, r in zip(key, core.degrees(), deficit))
    if min(partner, default=0) < 0:
        raise ValueError('no partner for key %s at degree %d' % (
            list(key), d_reg))
    return partner


def shared_deficits(core, d_reg, shared):
    '''[(U sets, deficit vector)] for every multiset of `shared`
       independent (d_reg-2)-sets of the core.  A shared neighbour sees
       exactly its U set of the core.'''
    if shared == 0:
        return [((), (0, ) * core.order)]
    found = []
    candidates = independent_sets_of_size(core, d_reg - 2)
    for sets in combinations_with_replacement(candidates, shared):
        deficit = [0] * core.order
        for U in sets:
            for x in bits(U):
                deficit[x] += 1
        found.append((sets, tuple(deficit)))
    return found

###########################################################################
# Bucket stores: add(ext_id, key, graph), lookup(key), iteration over
# (ext_id, key, graph) in id order, len(), close().


class MemoryBucketStore(object):

    def __init__(self):
        self._buckets = {}
        self._rows = []

    def add(self, ext_id, key, g):
        self._buckets.setdefault(bytes(key), []).append((ext_id, g))
        self._rows.append((ext_id, tuple(key), g))

    def lookup(self, key):
        return self._buckets.get(bytes(key), [])

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def bucket_count(self):
        return len(self._buckets)

    def close(self):
        self._buckets = {}
        self._rows = []


class SpillingBucketStore(object):
    '''In memory until more than `spill` rows, then an SQLite table.'''

    def __init__(self, spill=DEFAULT_BUCKET_SPILL, db_file=None):
        if spill < 0:
            raise ValueError('negative spill threshold %d' % spill)
        self.spill = spill
        self.db_file = db_file
        self._store = MemoryBucketStore()

    @property
    def spilled(self):
        return isinstance(self._store, SQLiteBucketStore)

    def add(self, ext_id, key, g):
        self._store.add(ext_id, key, g)
        if not self.spilled and len(self._store) > self.spill:
            self._migrate()

    def _migrate(self):
        disk = SQLiteBucketStore(self.db_file)
        for ext_id, key, g in self._store:
            disk.add(ext_id, key, g)
        disk.flush()
        logging.warning('buckets spilled to %s after %d extensions',
                        disk.db_file, len(disk))
        self._store.close()
        self._store = disk

    def lookup(self, key):
        return self._store.lookup(key)

    def __iter__(self):
        return iter(self._store)

    def __len__(self):
        return len(self._store)

    def close(self):
        self._store.close()

###########################################################################


def is_excluded(g, processed_specs):
    '''Does some vertex of g have its dual neighbourhood in one of the
       processed classes?'''
    if not processed_specs:
        return False
    for u in range(g.order):
        order = g.order - 1 - g.degree(u)
        edges = dual_edge_count(g, u)
        for spec in processed_specs:
            if spec.n is not None and spec.n != order:
                continue
            if not spec.edges_ok(edges):
                continue
            if spec.contains(dual_neighbourhood(g, u)[0]):
                return True
    return False


def exclusion_filter(graphs, processed_specs):
    return [g for g in graphs if not is_excluded(g, processed_specs)]


def extensions(problem, processed_specs=()):
    '''Labeled extensions of the core in the extension class: core on
       0..m-1, apex neighbours next, apex last.  Automorphic copies stay
       distinct so both sides of a pair can use the same core labels.'''
    if not problem.feasible:
        return
    d = problem.target_degree
    gp = GluingProblem(problem.core, problem.apex_degree,
                       problem.target_t - 2,
                       max_edges=problem.extension_edges)
    for g in glue_labeled(gp):
        if g.edge_count != problem.extension_edges or g.max_degree > d:
            continue
        if is_excluded(g, processed_specs):
            continue
        yield g


def merge(core, g1, g2, shared_sets=()):
    '''Gamma_0 with every triangle-free cross edge between the two apex
       neighbourhoods.  Layout: core, A (from g1), B (from g2), C, v, w.'''
    m = core.order
    a = g1.order - m - 1
    c = len(shared_sets)
    core_mask = core.all_mask
    for x in range(m):
        assert g1.adj[x] & core_mask == core.adj[x] and \
            g2.adj[x] & core_mask == core.adj[x], 'extensions disagree on core'
    N = m + 2 * a + c + 2
    v, w = N - 2, N - 1
    adj = list(core.adj) + [0] * (N - m)

    def link(p, q):
        adj[p] |= 1 << q
        adj[q] |= 1 << p

    S = [g1.adj[m + i] & core_mask for i in range(a)]
    T = [g2.adj[m + j] & core_mask for j in range(a)]
    for i in range(a):
        for x in bits(S[i]):
            link(m + i, x)
        link(m + i, v)
    for j in range(a):
        for x in bits(T[j]):
            link(m + a + j, x)
        link(m + a + j, w)
    for k, U in enumerate(shared_sets):
        for x in bits(U):
            link(m + 2 * a + k, x)
        link(m + 2 * a + k, v)
        link(m + 2 * a + k, w)

    # A common neighbour of A_i and B_j can only sit in the core.
    for i in range(a):
        for j in range(a):
            if not S[i] & T[j]:
                link(m + i, m + a + j)
    return Graph(N, adj, check=False)


def edge_removal_closure(g, floor, target_t, seen=None):
    '''{form: graph} of every R(3,target_t) graph reachable from g by
       deleting edges whose ends both have degree > floor.  Forms already
       in `seen` are not revisited; seen is updated.'''
    if not is_ramsey(g, 3, target_t):
        raise ValueError('%r is not an R(3,%d) graph' % (g, target_t))
    if seen is None:
        seen = set()
    found = {}
    start = canonical_form(g)
    if start in seen:
        return found
    seen.add(start)
    found[start] = g
    stack = [g]
    while stack:
        h = stack.pop()
        for u, x in h.edges():
            if h.degree(u) <= floor or h.degree(x) <= floor:
                continue
            k = h.remove_edge(u, x)
            form = canonical_form(k)
            if form in seen:
                continue
            seen.add(form)
            if is_ramsey(k, 3, target_t):
                found[form] = k
                stack.append(k)
    return found


def _check_merge(gamma, problem, key1, key2, deficit, shared_sets):
    m = problem.core.order
    core_degrees = problem.core.degrees()
    for x in range(m):
        assert gamma.degree(x) == key1[x] + key2[x] - core_degrees[x] + \
            deficit[x], 'degree identity fails at core vertex %d' % x
    v, w = gamma.order - 2, gamma.order - 1
    shared_mask = ((1 << len(shared_sets)) - 1) << (m + 2 *
                                                    problem.apex_degree)
    assert not gamma.has_edge(v, w), 'apexes adjacent'
    assert gamma.adj[v] & gamma.adj[w] == shared_mask, \
        'apex neighbourhoods meet outside the shared vertices'


def pair_glue(problem, processed_specs=(), spill=DEFAULT_BUCKET_SPILL,
              seen=None, stats=None):
    '''{form: graph} of the target_degree-regular R(3,target_t,target_n)
       graphs that split over this core.  seen carries the closure memo
       across calls; stats (a Counter) collects the step counts.'''
    if stats is None:
        stats = Counter()
    if seen is None:
        seen = set()
    results = {}
    if not problem.feasible:
        logging.info('%s: infeasible, skipped', problem)
        return results

    d = problem.target_degree
    core = problem.core
    store = SpillingBucketStore(spill)
    try:
        meter = PerfMeter('%s buckets' % problem)
        for ext_id, g in enumerate(extensions(problem, processed_specs)):
            store.add(ext_id, pair_key(core, g), g)
            meter.tick()
        meter.report()
        stats['extensions'] += len(store)
        logging.info('%s: %d extensions', problem, len(store))

        deficits = shared_deficits(core, d, problem.shared)
        meter = PerfMeter('%s merges' % problem)
        for id1, key1, g1 in store:
            for shared_sets, deficit in deficits:
                try:
                    key2 = complement_key(key1, core, d, deficit)
                except ValueError:
                    continue
                stats['lookups'] += 1
                partners = [(id2, g2) for id2, g2 in store.lookup(key2)
                            if id2 >= id1]
                if not partners:
                    stats['empty_buckets'] += 1
                for id2, g2 in partners:
                    stats['merges'] += 1
                    gamma = merge(core, g1, g2, shared_sets)
                    _check_merge(gamma, problem, key1, key2, deficit,
                                 shared_sets)
                    if gamma.min_degree < d:
                        stats['low_degree'] += 1
                        continue
                    if not is_ramsey(gamma, 3, problem.target_t):
                        stats['not_ramsey'] += 1
                        continue
                    closure = edge_removal_closure(gamma, d,
                                                   problem.target_t, seen)
                    stats['closure_graphs'] += len(closure)
                    for form, h in closure.items():
                        if h.min_degree == d and h.max_degree == d:
                            results.setdefault(form, h)
                    meter.tick(len(closure))
        meter.report()
    finally:
        store.close()
    stats['outputs'] += len(results)
    logging.info('%s: %d regular graphs', problem, len(results))
    return results
