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

""" Unit tests for pair_gluer.py """

import unittest
from collections import Counter

from test_utils import (
    circulant,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    path,
    star,
)

try:
    from canon import canonical_form
    from extender import CensusSpec, build_census
    from gluer import construct_glued_graph
    from graph_core import is_ramsey
    from pair_gluer import (
        MemoryBucketStore,
        PairGlueProblem,
        SpillingBucketStore,
        complement_key,
        edge_removal_closure,
        exclusion_filter,
        extensions,
        is_excluded,
        merge,
        pair_glue,
        pair_key,
        shared_deficits,
    )
except Exception as e:
    raise SystemExit('Import(s) failed: %s' % str(e))


def two_k2():
    return disjoint_union(complete(2), complete(2))


class TestProblem(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(ValueError):
            PairGlueProblem(edgeless(1), 2, 1)
        with self.assertRaises(ValueError):
            PairGlueProblem(two_k2(), 5, 4, shared=5)
        with self.assertRaises(ValueError):
            PairGlueProblem(two_k2(), 5, 1, shared=1)
        with self.assertRaises(ValueError):
            PairGlueProblem(cycle(6), 5, 4)

    def test_shared_neighbour_case(self):
        problem = PairGlueProblem(two_k2(), 5, 4, shared=1)
        self.assertEqual(problem.target_n, 13)
        self.assertEqual(problem.apex_degree, 3)
        self.assertEqual(problem.extension_edges, 10)
        self.assertEqual(str(problem.extension_spec), '3,4,8,e=10')
        self.assertTrue(problem.feasible)
        self.assertIn('c=1', str(problem))

    def test_disjoint_case(self):
        problem = PairGlueProblem(cycle(5), 5, 4, shared=2)
        self.assertEqual(problem.target_n, 13)
        self.assertTrue(problem.feasible)
        # four private apex neighbours are an independent 4-set
        problem = PairGlueProblem(path(3), 5, 4)
        self.assertEqual(problem.target_n, 13)
        self.assertFalse(problem.feasible)

    def test_odd_degree_sum(self):
        self.assertFalse(PairGlueProblem(cycle(5), 5, 3).feasible)


class TestKeys(unittest.TestCase):

    def test_pair_key(self):
        core = complete(2)
        ext = path(3).relabel([1, 0, 2])    # centre 0 from the core
        self.assertEqual(pair_key(core, ext), (2, 1))
        self.assertEqual(pair_key(core, ext, (1, 0)), (1, 2))

    def test_pair_key_errors(self):
        ext = path(3)
        with self.assertRaises(ValueError):
            pair_key(complete(2), ext, (0, 0))
        with self.assertRaises(ValueError):
            pair_key(complete(2), ext, (0, 3))
        with self.assertRaises(ValueError):
            pair_key(edgeless(2), ext)

    def test_complement_key(self):
        core = complete(2)
        self.assertEqual(complement_key((1, 2), core, 3), (3, 2))
        self.assertEqual(complement_key((1, 2), core, 3, (1, 0)), (2, 2))
        with self.assertRaises(ValueError):
            complement_key((5, 0), core, 3)
        with self.assertRaises(ValueError):
            complement_key((1, ), core, 3)

    def test_complement_is_an_involution(self):
        core = cycle(5)
        key = (3, 2, 4, 2, 3)
        deficit = (1, 0, 1, 0, 0)
        partner = complement_key(key, core, 4, deficit)
        self.assertEqual(complement_key(partner, core, 4, deficit), key)

    def test_shared_deficits(self):
        self.assertEqual(shared_deficits(cycle(5), 4, 0),
                         [((), (0, 0, 0, 0, 0))])
        found = shared_deficits(two_k2(), 4, 1)
        self.assertEqual(len(found), 4)
        for (U, ), deficit in found:
            self.assertEqual(U.bit_count(), 2)
            self.assertEqual(sum(deficit), 2)
        self.assertEqual(len(shared_deficits(two_k2(), 4, 2)), 10)


class TestStores(unittest.TestCase):

    def fill(self, store):
        store.add(0, (1, 2), cycle(5))
        store.add(1, (2, 2), path(4))
        store.add(2, (1, 2), star(3))

    def test_memory(self):
        store = MemoryBucketStore()
        self.fill(store)
        self.assertEqual(len(store), 3)
        self.assertEqual(store.bucket_count, 2)
        self.assertEqual(store.lookup((1, 2)), [(0, cycle(5)), (2, star(3))])
        self.assertEqual(store.lookup((9, 9)), [])
        self.assertEqual([row[0] for row in store], [0, 1, 2])
        store.close()
        self.assertEqual(len(store), 0)

    def test_spilling(self):
        store = SpillingBucketStore(spill=1)
        try:
            store.add(0, (1, 2), cycle(5))
            self.assertFalse(store.spilled)
            store.add(1, (2, 2), path(4))
            self.assertTrue(store.spilled)
            store.add(2, (1, 2), star(3))
            self.assertEqual(len(store), 3)
            self.assertEqual(store.lookup((1, 2)),
                             [(0, cycle(5)), (2, star(3))])
            rows = list(store)
            self.assertEqual([(i, key) for i, key, _ in rows],
                             [(0, (1, 2)), (1, (2, 2)), (2, (1, 2))])
            self.assertEqual(rows[1][2], path(4))
        finally:
            store.close()

    def test_lookup_during_scan(self):
        store = SpillingBucketStore(spill=0)
        try:
            self.fill(store)
            seen = []
            for ext_id, key, _ in store:
                seen.append((ext_id, [i for i, _ in store.lookup(key)]))
            self.assertEqual(seen, [(0, [0, 2]), (1, [1]), (2, [0, 2])])
        finally:
            store.close()

    def test_negative_spill(self):
        with self.assertRaises(ValueError):
            SpillingBucketStore(spill=-1)


class TestExclusion(unittest.TestCase):

    def test_is_excluded(self):
        self.assertTrue(is_excluded(cycle(5), [CensusSpec.parse('3,2,2')]))
        self.assertFalse(is_excluded(cycle(5), [CensusSpec.parse('3,2,3')]))
        self.assertFalse(is_excluded(cycle(5), []))
        self.assertFalse(is_excluded(cycle(5),
                                     [CensusSpec.parse('3,2,2,e=0')]))

    def test_filter(self):
        specs = [CensusSpec.parse('3,2,2')]
        self.assertEqual(exclusion_filter([cycle(5), edgeless(3)], specs),
                         [edgeless(3)])


class TestMerge(unittest.TestCase):

    def test_single_vertex_core(self):
        core = edgeless(1)
        g1 = construct_glued_graph(core, [0b1])
        g2 = construct_glued_graph(core, [0])
        gamma = merge(core, g1, g2)
        self.assertEqual(gamma.order, 5)
        self.assertEqual(sorted(gamma.edges()),
                         [(0, 1), (1, 2), (1, 3), (2, 4)])

    def test_shared_vertex(self):
        core = edgeless(1)
        g1 = construct_glued_graph(core, [0b1])
        g2 = construct_glued_graph(core, [0])
        gamma = merge(core, g1, g2, shared_sets=[0b1])
        self.assertEqual(gamma.order, 6)
        self.assertEqual(gamma.adj[4] & gamma.adj[5], 1 << 3)
        self.assertTrue(gamma.has_edge(3, 0))
        self.assertFalse(gamma.has_edge(4, 5))

    def test_cross_edges_stay_triangle_free(self):
        core = two_k2()
        g1 = construct_glued_graph(core, [0b0101, 0b1010])
        g2 = construct_glued_graph(core, [0b1010, 0b0101])
        gamma = merge(core, g1, g2)
        self.assertEqual(gamma.order, 10)
        self.assertTrue(gamma.has_edge(4, 6))
        self.assertTrue(gamma.has_edge(5, 7))
        self.assertFalse(gamma.has_edge(4, 7))
        self.assertTrue(is_ramsey(gamma, 3, gamma.order + 1))

    def test_disagreeing_cores(self):
        g1 = construct_glued_graph(complete(2), [0])
        g2 = construct_glued_graph(edgeless(2), [0])
        with self.assertRaises(AssertionError):
            merge(complete(2), g1, g2)


class TestClosure(unittest.TestCase):

    def test_nothing_removable(self):
        found = edge_removal_closure(cycle(5), 2, 3)
        self.assertEqual(set(found), {canonical_form(cycle(5))})
        found = edge_removal_closure(complete(2), 0, 2)
        self.assertEqual(set(found), {canonical_form(complete(2))})

    def test_c4_chain(self):
        found = edge_removal_closure(cycle(4), 1, 3)
        self.assertEqual(set(found),
                         {canonical_form(cycle(4)), canonical_form(path(4)),
                          canonical_form(two_k2())})

    def test_seen_memo(self):
        seen = set()
        self.assertEqual(len(edge_removal_closure(cycle(4), 1, 3, seen)), 3)
        self.assertEqual(edge_removal_closure(path(4), 1, 3, seen), {})
        self.assertEqual(len(seen), 3)

    def test_rejects_non_ramsey(self):
        with self.assertRaises(ValueError):
            edge_removal_closure(cycle(6), 2, 3)


class TestPairGlue(unittest.TestCase):

    def test_extensions(self):
        problem = PairGlueProblem(two_k2(), 5, 4, shared=1)
        found = list(extensions(problem))
        self.assertTrue(found)
        for g in found:
            self.assertEqual(g.order, 8)
            self.assertEqual(g.edge_count, 10)
            self.assertLessEqual(g.max_degree, 4)
            self.assertTrue(problem.extension_spec.contains(g))

    def test_infeasible(self):
        stats = Counter()
        problem = PairGlueProblem(path(3), 5, 4)
        self.assertEqual(pair_glue(problem, stats=stats), {})
        self.assertEqual(stats['extensions'], 0)

    def test_staged_r3513(self):
        ''' Every 4-regular R(3,5,13) graph, stage by stage on c '''
        target = canonical_form(circulant(13, (1, 5)))
        stages = (
            (0, '3,3,3', []),
            (1, '3,3,4', ['3,3,3']),
            (2, '3,3,5', ['3,3,3', '3,3,4']),
        )
        seen = set()
        stats = Counter()
        found = {}
        for shared, core_spec, excluded in stages:
            core_spec = CensusSpec.parse(core_spec)
            processed = [CensusSpec.parse(s) for s in excluded]
            cores = build_census(3, core_spec.n)[core_spec.n]
            for core in cores.values():
                problem = PairGlueProblem(core, 5, 4, shared)
                self.assertEqual(problem.target_n, 13)
                found.update(pair_glue(problem, processed, seen=seen,
                                       stats=stats))
        self.assertEqual(set(found), {target})
        self.assertGreater(stats['merges'], 0)
        self.assertEqual(stats['outputs'], 1)

    def test_stages_split_the_extensions(self):
        ''' Exclusions hand each extension to exactly one stage '''
        orders = build_census(3, 5)
        processed = []
        staged = []
        unfiltered = set()
        for shared in range(3):
            n = 3 + shared
            stage = set()
            for core in orders[n].values():
                problem = PairGlueProblem(core, 5, 4, shared)
                stage.update(canonical_form(g)
                             for g in extensions(problem, processed))
                unfiltered.update(canonical_form(g)
                                  for g in extensions(problem))
            staged.append(stage)
            processed.append(CensusSpec(3, 3, n))
        for i in range(3):
            for j in range(i + 1, 3):
                self.assertFalse(staged[i] & staged[j])
        self.assertTrue(unfiltered)
        self.assertEqual(set().union(*staged), unfiltered)

    def test_spilled_buckets_agree(self):
        problem = PairGlueProblem(two_k2(), 5, 4, shared=1)
        in_memory = pair_glue(problem)
        on_disk = pair_glue(problem, spill=0)
        self.assertEqual(set(in_memory), set(on_disk))
        self.assertEqual(set(on_disk),
                         {canonical_form(circulant(13, (1, 5)))})


if __name__ == '__main__':
    unittest.main()
