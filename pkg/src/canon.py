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
# Canonical labeling by partition refinement and individualization.
# A leaf of the search tree is a discrete ordered partition, read as a
# labeling.  Its certificate is the graph6 upper-triangle bit string of the
# relabeled graph taken as one integer; the canonical labeling is the leaf
# with the smallest certificate.  The canonical form is the graph6 encoding
# of the canonically relabeled graph, so equal forms <=> isomorphic graphs.
#---------------------------------------------------------------------------

import graph6


def _cell_masks(cells):
    masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        masks.append(m)
    return masks


def refine(adj, cells):
    '''Split cells by neighbour counts into every cell until stable.
       Sub-cells are ordered by their signature so the result does not
       depend on vertex labels.'''
    while True:
        masks = _cell_masks(cells)
        split = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                split.append(cell)
                continue
            groups = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                split.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                split.append(tuple(groups[key]))
        if not changed:
            return split
        cells = split


def degree_partition(g):
    groups = {}
    for v, row in enumerate(g.adj):
        groups.setdefault(row.bit_count(), []).append(v)
    return [tuple(groups[d]) for d in sorted(groups)]


class _Orbits(object):
    '''Union-find over vertices for the group generated by a set of
       permutations.'''

    def __init__(self, n, generators):
        self.parent = list(range(n))
        for gen in generators:
            for v, w in enumerate(gen):
                self._union(v, w)

    def find(self, v):
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def _union(self, v, w):
        rv, rw = self.find(v), self.find(w)
        if rv != rw:
            self.parent[max(rv, rw)] = min(rv, rw)


class Canonizer(object):

    def __init__(self, g):
        self.g = g
        self.n = g.order
        self.adj = g.adj
        self.total_bits = self.n * (self.n - 1) // 2
        self.best = None
        self.best_lab = None
        self.best_path = None
        self.unwind = None
        self.leaves = 0
        self.generators = self._twin_generators()

    def _twin_generators(self):
        '''Transpositions of twins: N(u) - v == N(v) - u.'''
        adj = self.adj
        gens = []
        grouped = 0
        for u in range(self.n):
            if grouped >> u & 1:
                continue
            for v in range(u + 1, self.n):
                if grouped >> v & 1:
                    continue
                if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                    perm = list(range(self.n))
                    perm[u], perm[v] = v, u
                    gens.append(tuple(perm))
                    grouped |= 1 << v
        return gens

    def _certificate(self, lab, upto):
        adj = self.adj
        cert = 0
        for j in range(1, upto):
            row = adj[lab[j]]
            for i in range(j):
                cert = cert << 1 | (row >> lab[i] & 1)
        return cert

    def _leaf(self, cells, fixed):
        lab = [cell[0] for cell in cells]
        self.leaves += 1
        cert = self._certificate(lab, self.n)
        if self.best is None or cert < self.best:
            self.best, self.best_lab, self.best_path = cert, lab, fixed
        elif cert == self.best:
            gamma = [0] * self.n
            for old, new in zip(self.best_lab, lab):
                gamma[old] = new
            gamma = tuple(gamma)
            if any(v != w for v, w in enumerate(gamma)):
                self.generators.append(gamma)
                # gamma fixes the shared prefix and maps the best leaf's
                # branch onto this one, which is then already covered.
                k = 0
                while k < len(fixed) and self.best_path[k] == fixed[k]:
                    k += 1
                self.unwind = k

    def _pruned(self, cells):
        '''Leading singletons fix a prefix of every certificate below.'''
        if self.best is None:
            return False
        k = 0
        while k < len(cells) and len(cells[k]) == 1:
            k += 1
        if k < 2:
            return False
        prefix_bits = k * (k - 1) // 2
        prefix = self._certificate([c[0] for c in cells[:k]], k)
        return prefix > self.best >> (self.total_bits - prefix_bits)

    def _search(self, cells, fixed):
        if self._pruned(cells):
            return
        if len(cells) == self.n:
            self._leaf(cells, fixed)
            return
        target, size = None, self.n + 1
        for pos, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = pos, len(cell)
        explored = []
        for u in cells[target]:
            if explored:
                gens = [gen for gen in self.generators
                        if all(gen[x] == x for x in fixed)]
                orbits = _Orbits(self.n, gens)
                root = orbits.find(u)
                if any(orbits.find(w) == root for w in explored):
                    continue
            explored.append(u)
            rest = tuple(v for v in cells[target] if v != u)
            child = cells[:target] + [(u, ), rest] + cells[target + 1:]
            self._search(refine(self.adj, child), fixed + (u, ))
            if self.unwind is not None:
                if self.unwind < len(fixed):
                    return
                self.unwind = None

    def labeling(self):
        '''lab[i] is the vertex placed at canonical position i.'''
        if self.best_lab is None:
            cells = refine(self.adj, degree_partition(self.g))
            self._search(cells, ())
        return self.best_lab


def canonical_labeling(g):
    return Canonizer(g).labeling()


def canonical_graph(g):
    lab = canonical_labeling(g)
    perm = [0] * g.order
    for new, old in enumerate(lab):
        perm[old] = new
    return g.relabel(perm)


def canonical_form(g):
    '''Bytes equal for two graphs iff they are isomorphic.'''
    return graph6.encode(canonical_graph(g))
