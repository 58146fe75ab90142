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
# Independent sets of a core graph and the compatibility machinery the
# gluer searches with.  Sets S_i, S_j of the core are compatible when
# alpha(V - S_i - S_j) <= tbound - 2, i.e. no independent (tbound-1)-set
# (a "witness") avoids both.  Each maximal set carries a witness bitvector
# (bit j: witness j avoids the set) and a pair bitvector (bit j: maximal
# set j is compatible), so pairwise filtering is one AND per level.
#---------------------------------------------------------------------------

import logging
from itertools import combinations

from graph_core import bits, is_ramsey, independence_number


def enumerate_maximal_independent_sets(g):
    '''Pivoting Bron-Kerbosch on the complement: maximal cliques there
       are maximal independent sets here.  Sorted by mask.'''
    full = g.all_mask
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    found = []

    def expand(R, P, X):
        if not P and not X:
            found.append(R)
            return
        pivot, most = -1, -1
        for u in bits(P | X):
            c = (P & comp[u]).bit_count()
            if c > most:
                pivot, most = u, c
        for v in bits(P & ~comp[pivot]):
            expand(R | 1 << v, P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    expand(0, full, 0)
    return sorted(found)


def _independent_sets(g, min_size, max_size):
    adj = g.adj
    found = []

    def extend(S, size, cand):
        if size >= min_size:
            found.append(S)
        if size == max_size or size + cand.bit_count() < min_size:
            return
        for v in bits(cand):
            higher = cand >> (v + 1) << (v + 1)
            extend(S | 1 << v, size + 1, higher & ~adj[v])

    extend(0, 0, g.all_mask)
    return found


def enumerate_independent_sets(g, min_size=0):
    '''Every independent set with at least min_size vertices (the empty
       set included at min_size 0), sorted by (size, mask).'''
    if min_size < 0:
        raise ValueError('negative minimum size %d' % min_size)
    found = _independent_sets(g, min_size, g.order)
    return sorted(found, key=lambda s: (s.bit_count(), s))


def independent_sets_of_size(g, k):
    if k < 0:
        return []
    return sorted(s for s in _independent_sets(g, k, k)
                  if s.bit_count() == k)

###########################################################################


class MaximalISIndex(object):
    '''Everything the gluer needs about one core.  Built once per core by
       build_index(), read-only afterwards.'''

    def __init__(self, core, tbound, min_subset_size=0):
        self.core = core
        self.tbound = tbound
        self.min_subset_size = min_subset_size
        self.maximal_sets = []
        self.witness_sets = []
        self.witness_bv = []
        self.pair_bv = []
        self.allowed_subsets = None
        self.block_boundaries = []
        self.block_of = []          # -1 in the head, else block number
        self.blocks_after = []

    def __str__(self):
        return 'MaximalISIndex(order=%d, t=%d, maximal=%d, witnesses=%d, ' \
            'blocks=%d)' % (self.core.order, self.tbound,
                            len(self.maximal_sets), len(self.witness_sets),
                            len(self.block_boundaries))

    @property
    def head_size(self):
        if self.block_boundaries:
            return self.block_boundaries[0]
        return len(self.maximal_sets)

    def blocks(self):
        '''(start, end) of every tail block in search order.'''
        ends = self.block_boundaries[1:] + [len(self.maximal_sets)]
        return list(zip(self.block_boundaries, ends))

    def compatible(self, i, j):
        return bool(self.pair_bv[i] >> j & 1)


def _witness_vector(S, witness_sets):
    bv = 0
    for j, T in enumerate(witness_sets):
        if not T & S:
            bv |= 1 << j
    return bv


def _pair_vectors(witness_bv):
    pair_bv = []
    for wi in witness_bv:
        row = 0
        for j, wj in enumerate(witness_bv):
            if not wi & wj:
                row |= 1 << j
        pair_bv.append(row)
    return pair_bv


def order_blocks(index):
    '''Peel off the maximal sets avoided by the most popular witness, then
       again on what is left, while a witness covers two or more.  Blocks
       go last, first-found block at the very end.'''
    M = len(index.maximal_sets)
    cover = [0] * len(index.witness_sets)
    for i, bv in enumerate(index.witness_bv):
        for j in bits(bv):
            cover[j] |= 1 << i

    remaining = (1 << M) - 1
    found = []
    while True:
        best, best_count = -1, 1
        for j, c in enumerate(cover):
            count = (c & remaining).bit_count()
            if count > best_count:
                best, best_count = j, count
        if best < 0:
            break
        members = cover[best] & remaining
        found.append(members)
        remaining &= ~members

    order = list(bits(remaining))
    boundaries = []
    block_of = [-1] * len(order)
    for number, members in enumerate(reversed(found)):
        boundaries.append(len(order))
        for i in bits(members):
            order.append(i)
            block_of.append(number)

    index.maximal_sets = [index.maximal_sets[i] for i in order]
    index.witness_bv = [index.witness_bv[i] for i in order]
    index.pair_bv = _pair_vectors(index.witness_bv)
    index.block_boundaries = boundaries
    index.block_of = block_of
    nblocks = len(boundaries)
    index.blocks_after = [nblocks if b < 0 else nblocks - 1 - b
                          for b in block_of]
    index.allowed_subsets = None
    logging.debug('order_blocks: head %d, block sizes %s', index.head_size,
                  [end - start for start, end in index.blocks()])


def assign_subset_representatives(index, all_sets):
    '''Each set goes to the first maximal set (in index order) that
       contains it.'''
    contains = [0] * index.core.order
    for i, M in enumerate(index.maximal_sets):
        for v in bits(M):
            contains[v] |= 1 << i
    everything = (1 << len(index.maximal_sets)) - 1

    allowed = [[] for _ in index.maximal_sets]
    for S in all_sets:
        holders = everything
        for v in bits(S):
            holders &= contains[v]
        if not holders:
            raise ValueError('set 0x%x is not independent in the core' % S)
        first = (holders & -holders).bit_length() - 1
        allowed[first].append(S)
    for subsets in allowed:
        subsets.sort(key=lambda s: (s.bit_count(), s))
    index.allowed_subsets = allowed


def build_index(core, tbound, min_subset_size=0):
    if tbound < 1:
        raise ValueError('independence bound must be positive, got %d' %
                         tbound)
    if not is_ramsey(core, 3, tbound):
        raise ValueError('core %r is not an R(3,%d) graph' % (core, tbound))
    index = MaximalISIndex(core, tbound, min_subset_size)
    index.maximal_sets = enumerate_maximal_independent_sets(core)
    index.witness_sets = independent_sets_of_size(core, tbound - 1)
    index.witness_bv = [_witness_vector(S, index.witness_sets)
                        for S in index.maximal_sets]
    order_blocks(index)
    assign_subset_representatives(
        index, enumerate_independent_sets(core, min_subset_size))
    logging.info('%s', index)
    return index

###########################################################################
# Full compatibility: alpha(V - union of S_k, k in K) <= tbound - |K| for
# every nonempty K.  |K| = 1 always holds for an R(3,tbound) core.


def _k_subsets(d, smallest):
    return [K for size in range(smallest, d + 1)
            for K in combinations(range(d), size)]


def first_incompatible(core, sets, tbound, smallest=2):
    '''First failing K (ascending size, then lexicographic), or None.'''
    full = core.all_mask
    for K in _k_subsets(len(sets), smallest):
        union = 0
        for p in K:
            union |= sets[p]
        if independence_number(core, full & ~union) > tbound - len(K):
            return K
    return None


def is_compatible(core, sets, tbound):
    return first_incompatible(core, sets, tbound) is None


def search_compatible_maximal_tuples(index, d, visitor):
    '''Call visitor(indices) for every non-decreasing d-tuple of maximal
       set indices that is fully compatible.  Returns the visit count.'''
    if d == 0:
        visitor(())
        return 1
    M = len(index.maximal_sets)
    sets = index.maximal_sets
    pair_bv = index.pair_bv
    block_of = index.block_of
    blocks_after = index.blocks_after
    late_checks = _k_subsets(d, 3)
    full = index.core.all_mask
    chosen = [0] * d
    visits = 0

    def late_check():
        for K in late_checks:
            union = 0
            for p in K:
                union |= sets[chosen[p]]
            if independence_number(index.core, full & ~union) > \
                    index.tbound - len(K):
                return K[-1]
        return None

    def descend(level, start, candidates):
        nonlocal visits
        remaining = d - level - 1
        for i in bits(candidates >> start << start):
            if block_of[i] >= 0 and remaining > blocks_after[i]:
                continue        # one pick per tail block at most
            chosen[level] = i
            if remaining:
                jump = descend(level + 1, i, candidates & pair_bv[i])
            else:
                jump = late_check()
                if jump is None:
                    visits += 1
                    visitor(tuple(chosen))
            if jump is not None and jump < level:
                return jump
        return None

    descend(0, 0, (1 << M) - 1)
    return visits


def expand_maximal_solution(index, maximal_tuple, budget, visitor):
    '''Replace every maximal set by each of its allowed subsets, keeping
       sum |S_i| <= budget (None: no limit).  Equal maximal sets take
       non-decreasing subset positions so each multiset shows up once.
       Nothing is rechecked here.  Returns the visit count.'''
    d = len(maximal_tuple)
    choices = [index.allowed_subsets[i] for i in maximal_tuple]
    if any(not c for c in choices):
        return 0
    min_rest = [0] * (d + 1)
    for p in range(d - 1, -1, -1):
        min_rest[p] = min_rest[p + 1] + choices[p][0].bit_count()
    if budget is not None and min_rest[0] > budget:
        return 0
    picked = [0] * d
    visits = 0

    def pick(p, previous, used):
        nonlocal visits
        if p == d:
            visits += 1
            visitor(tuple(picked))
            return
        first = 0
        if p and maximal_tuple[p] == maximal_tuple[p - 1]:
            first = previous
        for k in range(first, len(choices[p])):
            S = choices[p][k]
            size = S.bit_count()
            if budget is not None and used + size + min_rest[p + 1] > budget:
                break       # sorted by size
            picked[p] = S
            pick(p + 1, k, used + size)

    pick(0, 0, 0)
    return visits
