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
# Small immutable graphs as one adjacency bitmask per vertex.  A vertex set
# is a plain int; bit v set means vertex v is in the set.  Everything in
# the census tools (gluing, extension, pair gluing, verification) sits on
# the primitives in here.
#---------------------------------------------------------------------------

from collections import Counter

MAX_ORDER = 64

# Flat memo table (one byte per subset) up to this order, dict above it.
# run_config may change it from the INI file.
TABLE_ORDER_MAX = 27

_UNKNOWN = 0xff     # no graph has an independence number this big

#--------------------------------------------------------------------------
# VertexSet helpers


def bits(mask):
    '''Yield the members of a vertex set in ascending order.'''
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return mask.bit_count()


def vertex_set(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask):
    return list(bits(mask))

#--------------------------------------------------------------------------


class Graph(object):
    '''order vertices, adj[v] = bitmask of the neighbours of v.  Treat as
       a value: every "modifier" returns a new Graph.'''

    __slots__ = ('order', 'adj', '_edges', '_oracle')

    def __init__(self, order, adj, check=True):
        self.order = order
        self.adj = tuple(adj)
        self._edges = None
        self._oracle = None
        if check:
            self._check()

    def _check(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise ValueError('order %d outside 0..%d' % (self.order,
                                                         MAX_ORDER))
        if len(self.adj) != self.order:
            raise ValueError('%d adjacency rows for order %d' % (
                len(self.adj), self.order))
        full = self.all_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError('row %d has bits above vertex %d' % (
                    v, self.order - 1))
            if row >> v & 1:
                raise ValueError('vertex %d is its own neighbour' % v)
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError('edge %d-%d is not symmetric' % (v, w))

    # Pickling: the memo oracle stays with the process that built it.
    def __getstate__(self):
        return (self.order, self.adj)

    def __setstate__(self, state):
        self.order, self.adj = state
        self._edges = None
        self._oracle = None

    @classmethod
    def from_edges(cls, order, edges):
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError('loop at vertex %d' % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @classmethod
    def empty(cls, order):
        return cls(order, [0] * order, check=False)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        return 'Graph(order=%d, edges=%d)' % (self.order, self.edge_count)

    @property
    def all_mask(self):
        return (1 << self.order) - 1

    @property
    def edge_count(self):
        if self._edges is None:
            self._edges = sum(row.bit_count() for row in self.adj) // 2
        return self._edges

    @property
    def oracle(self):
        if self._oracle is None:
            self._oracle = IndependenceOracle(self)
        return self._oracle

    def forget_oracle(self):
        '''Free the independence memo; the next query rebuilds it.'''
        self._oracle = None

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return tuple(row.bit_count() for row in self.adj)

    @property
    def max_degree(self):
        return max(self.degrees(), default=0)

    @property
    def min_degree(self):
        return min(self.degrees(), default=0)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        return [(u, v) for u in range(self.order)
                for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, mask):
        '''Induced subgraph on mask, plus new index -> old vertex.'''
        mapping = tuple(bits(mask & self.all_mask))
        position = dict((old, new) for new, old in enumerate(mapping))
        adj = []
        for old in mapping:
            row = 0
            for w in bits(self.adj[old] & mask):
                row |= 1 << position[w]
            adj.append(row)
        return Graph(len(mapping), adj, check=False), mapping

    def relabel(self, perm):
        '''perm[old] = new.'''
        if sorted(perm) != list(range(self.order)):
            raise ValueError('not a permutation of %d vertices' % self.order)
        adj = [0] * self.order
        for old, row in enumerate(self.adj):
            new_row = 0
            for w in bits(row):
                new_row |= 1 << perm[w]
            adj[perm[old]] = new_row
        return Graph(self.order, adj, check=False)

    def add_vertex(self, attach):
        '''New vertex (index order) adjacent to the vertex set attach.'''
        if attach & ~self.all_mask:
            raise ValueError('attachment set outside the graph')
        n = self.order
        adj = [row | ((attach >> v & 1) << n)
               for v, row in enumerate(self.adj)]
        adj.append(attach)
        return Graph(n + 1, adj, check=False)

    def delete_vertex(self, v):
        return self.induced(self.all_mask & ~(1 << v))[0]

    def add_edge(self, u, v):
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.order, adj, check=False)

    def remove_edge(self, u, v):
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.order, adj, check=False)

    def complement(self):
        full = self.all_mask
        return Graph(self.order,
                     [full & ~row & ~(1 << v)
                      for v, row in enumerate(self.adj)],
                     check=False)

###########################################################################
# Independence numbers.  One oracle per graph, memo owned by whichever
# process built the graph; nothing here is shared between workers.


class IndependenceOracle(object):

    def __init__(self, g, table_order_max=None):
        if table_order_max is None:
            table_order_max = TABLE_ORDER_MAX
        self.adj = g.adj
        self.order = g.order
        self.flat = g.order <= table_order_max
        self._table = None      # allocated by the first alpha() call
        self._upper = {}    # subset -> proven strict upper bound on alpha
        self.nodes = 0
        self.hits = 0

    def _lookup(self, subset):
        if self._table is None:
            return None
        if self.flat:
            value = self._table[subset]
            return None if value == _UNKNOWN else value
        return self._table.get(subset)

    def _store(self, subset, value):
        if self._table is None:
            if self.flat:
                self._table = bytearray(b'\xff') * (1 << self.order)
            else:
                self._table = {}
        self._table[subset] = value

    def _branch_vertex(self, subset):
        '''Lowest-index vertex of maximum degree inside subset.'''
        best, best_deg = -1, -1
        adj = self.adj
        for v in bits(subset):
            deg = (adj[v] & subset).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
        return best, best_deg

    def alpha(self, subset):
        if not subset:
            return 0
        known = self._lookup(subset)
        if known is not None:
            self.hits += 1
            return known
        self.nodes += 1
        u, deg = self._branch_vertex(subset)
        if deg == 0:
            value = subset.bit_count()
        else:
            without = subset & ~(1 << u)
            value = max(self.alpha(without),
                        1 + self.alpha(without & ~self.adj[u]))
        self._store(subset, value)
        return value

    def has_at_least(self, subset, k):
        '''True iff subset holds an independent k-set.  Stops at the first
           witness instead of settling the full independence number.'''
        if k <= 0:
            return True
        size = subset.bit_count()
        if size < k:
            return False
        known = self._lookup(subset)
        if known is not None:
            self.hits += 1
            return known >= k
        if self._upper.get(subset, MAX_ORDER + 1) <= k:
            self.hits += 1
            return False
        self.nodes += 1
        u, deg = self._branch_vertex(subset)
        if deg == 0:
            return True     # size >= k and subset is independent
        without = subset & ~(1 << u)
        if (self.has_at_least(without & ~self.adj[u], k - 1) or
                self.has_at_least(without, k)):
            return True
        self._upper[subset] = k     # alpha(subset) < k
        return False

#--------------------------------------------------------------------------


def is_independent(g, subset):
    for v in bits(subset):
        if g.adj[v] & subset:
            return False
    return True


def is_triangle_free(g):
    adj = g.adj
    for u in range(g.order):
        for v in bits(adj[u] >> (u + 1) << (u + 1)):
            if adj[u] & adj[v]:
                return False
    return True


def independence_number(g, subset=None):
    if subset is None:
        subset = g.all_mask
    return g.oracle.alpha(subset & g.all_mask)


def has_independent_set(g, subset, k):
    return g.oracle.has_at_least(subset & g.all_mask, k)


def _has_clique(adj, candidates, k):
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    for v in bits(candidates):
        higher = candidates >> (v + 1) << (v + 1)
        if _has_clique(adj, higher & adj[v], k - 1):
            return True
    return False


def has_clique(g, k):
    if k == 3:
        return not is_triangle_free(g)
    return _has_clique(g.adj, g.all_mask, k)


def is_ramsey(g, s, t):
    '''No clique of size s and no independent set of size t.'''
    if s < 1 or t < 1:
        raise ValueError('Ramsey parameters must be positive, got (%d,%d)'
                         % (s, t))
    if has_clique(g, s):
        return False
    return not has_independent_set(g, g.all_mask, t)

#--------------------------------------------------------------------------
# Dual neighbourhoods and degree deficiency.  With refdeg the largest
# degree a vertex may have, deficiency counts the missing edge ends.


def dual_neighbourhood(g, v):
    '''Induced subgraph on V - N[v] and new index -> old vertex.'''
    if not 0 <= v < g.order:
        raise ValueError('vertex %d not in a graph of order %d' % (
            v, g.order))
    return g.induced(g.all_mask & ~(1 << v) & ~g.adj[v])


def dual_edge_count(g, v):
    '''Edges of the dual neighbourhood without building it.  Only valid
       for triangle-free g, where no edge joins two neighbours of v.'''
    return g.edge_count - sum(g.degree(w) for w in bits(g.adj[v]))


def _check_refdeg(g, refdeg):
    if refdeg < g.max_degree:
        raise ValueError('reference degree %d below maximum degree %d' % (
            refdeg, g.max_degree))


def epsilon(g, v, refdeg):
    _check_refdeg(g, refdeg)
    return sum(refdeg - g.degree(w) for w in bits(g.adj[v]))


def min_epsilon_vertex(g, refdeg):
    '''Vertex of degree < refdeg with the smallest epsilon (lowest index
       on ties), or None when g is refdeg-regular.'''
    _check_refdeg(g, refdeg)
    best = None
    for v in range(g.order):
        if g.degree(v) >= refdeg:
            continue
        eps = epsilon(g, v, refdeg)
        if best is None or eps < best[1]:
            best = (v, eps)
    return None if best is None else best[0]


class DegreeProfile(object):

    __slots__ = ('counts', 'refdeg', 'deficiency')

    def __init__(self, counts, refdeg, deficiency):
        self.counts = counts
        self.refdeg = refdeg
        self.deficiency = deficiency

    def __eq__(self, other):
        return (self.counts, self.refdeg, self.deficiency) == (
            other.counts, other.refdeg, other.deficiency)

    def __repr__(self):
        shown = ', '.join('%d:%d' % kv for kv in sorted(self.counts.items()))
        return 'DegreeProfile({%s}, N=%d wrt %d)' % (
            shown, self.deficiency, self.refdeg)

    @property
    def order(self):
        return sum(self.counts.values())


def degree_profile(g, refdeg):
    _check_refdeg(g, refdeg)
    counts = Counter(g.degrees())
    deficiency = sum((refdeg - d) * k for d, k in counts.items())
    return DegreeProfile(dict(counts), refdeg, deficiency)
