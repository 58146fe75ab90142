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
# Neighbourhood gluing.  Given a core G' in R(3,t,n) and an apex degree d,
# find every graph in R(3,t+1,n+1+d) with a degree-d vertex v whose dual
# neighbourhood is G'.  The neighbours v_1..v_d of v each get an
# independent set S_i of G' as their core neighbourhood; the tuple works
# iff alpha(V - union S_k) <= t - |K| for every nonempty K.
#---------------------------------------------------------------------------

import logging

from canon import canonical_form
from graph_core import Graph, is_independent, is_ramsey, bits
from indset_engine import (
    build_index,
    expand_maximal_solution,
    is_compatible,
    search_compatible_maximal_tuples,
)


class GluingProblem(object):

    def __init__(self, core, apex_degree, tbound, max_edges=None,
                 min_degree=None):
        if not 0 <= apex_degree <= tbound:
            raise ValueError('apex degree %d outside 0..%d' % (apex_degree,
                                                               tbound))
        if max_edges is not None and max_edges < 0:
            raise ValueError('negative edge bound %d' % max_edges)
        if not is_ramsey(core, 3, tbound):
            raise ValueError('core %r is not an R(3,%d) graph' % (core,
                                                                  tbound))
        self.core = core
        self.apex_degree = apex_degree
        self.tbound = tbound
        self.max_edges = max_edges
        self.min_degree = min_degree

    def __str__(self):
        return 'glue(n=%d, e=%d, d=%d, t=%d, e<=%s, mindeg=%s)' % (
            self.core.order, self.core.edge_count, self.apex_degree,
            self.tbound, self.max_edges, self.min_degree)

    @property
    def order(self):
        return self.core.order + 1 + self.apex_degree

    @property
    def subset_budget(self):
        '''Upper bound on sum |S_i|, None when unbounded.'''
        if self.max_edges is None:
            return None
        return self.max_edges - self.core.edge_count - self.apex_degree

    @property
    def min_subset_size(self):
        if not self.min_degree:
            return 0
        return max(0, self.min_degree - 1)


def construct_glued_graph(core, sets):
    '''Core on 0..n-1, v_i on n+i, apex v on n+d.'''
    n = core.order
    d = len(sets)
    for S in sets:
        if S & ~core.all_mask:
            raise ValueError('set 0x%x reaches outside the core' % S)
        if not is_independent(core, S):
            raise ValueError('set 0x%x is not independent' % S)
    apex = n + d
    adj = list(core.adj) + [0] * (d + 1)
    for i, S in enumerate(sets):
        vi = n + i
        adj[vi] = S | 1 << apex
        adj[apex] |= 1 << vi
        for x in bits(S):
            adj[x] |= 1 << vi
    return Graph(n + d + 1, adj, check=False)


def glue_labeled(problem, index=None):
    '''Yield every glued graph (layout of construct_glued_graph), one per
       multiset of core neighbourhoods.  Not deduplicated.'''
    core = problem.core
    d = problem.apex_degree
    if problem.min_degree and d < problem.min_degree:
        return
    budget = problem.subset_budget
    if budget is not None and budget < 0:
        return
    if d == 0:
        # alpha(core) <= tbound - 1 is the core precondition
        yield construct_glued_graph(core, [])
        return

    if index is None:
        index = build_index(core, problem.tbound, problem.min_subset_size)
    found = []

    def keep(sets):
        if is_compatible(core, sets, problem.tbound):
            found.append(sets)

    def expand(maximal_tuple):
        expand_maximal_solution(index, maximal_tuple, budget, keep)

    # The maximal-tuple search is depth-first; expansions are buffered per
    # maximal tuple so the generator can hand them out lazily.
    maximal_tuples = []
    search_compatible_maximal_tuples(index, d, maximal_tuples.append)
    logging.info('%s: %d compatible maximal tuples', problem,
                 len(maximal_tuples))
    for maximal_tuple in maximal_tuples:
        expand(maximal_tuple)
        for sets in found:
            g = construct_glued_graph(core, sets)
            if problem.min_degree and g.min_degree < problem.min_degree:
                continue
            yield g
        found.clear()


def glue(problem, index=None, verify=True):
    '''{canonical form: graph} of every graph the problem describes.'''
    results = {}
    for g in glue_labeled(problem, index):
        form = canonical_form(g)
        if form in results:
            continue
        if verify:
            assert is_ramsey(g, 3, problem.tbound + 1), \
                'glued graph %r is not R(3,%d)' % (g, problem.tbound + 1)
        results[form] = g
    logging.info('%s: %d graphs', problem, len(results))
    return results
