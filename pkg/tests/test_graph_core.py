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

""" Unit tests for graph_core.py """

import unittest
from itertools import combinations

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from test_utils import (
    brute_alpha,
    circulant,
    complete,
    cycle,
    edgeless,
    graphs,
    path,
    petersen,
    star,
)

try:
    import graph_core
    from graph_core import (
        Graph,
        IndependenceOracle,
        degree_profile,
        dual_edge_count,
        dual_neighbourhood,
        epsilon,
        has_independent_set,
        independence_number,
        is_ramsey,
        is_triangle_free,
        min_epsilon_vertex,
    )
except Exception as e:
    raise SystemExit('Import(s) failed: %s' % str(e))


@st.composite
def triangle_free_graphs(draw, max_order=12):
    '''Edges offered in a drawn order, kept when no triangle appears.'''
    n = draw(st.integers(0, max_order))
    pairs = draw(st.permutations(list(combinations(range(n), 2))))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs),
                         max_size=len(pairs)))
    adj = [0] * n
    for (u, v), k in zip(pairs, keep):
        if k and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


class TestGraph(unittest.TestCase):

    def test_rejects_asymmetric_rows(self):
        with self.assertRaises(ValueError):
            Graph(2, [0b10, 0])

    def test_rejects_loops(self):
        with self.assertRaises(ValueError):
            Graph(1, [0b1])
        with self.assertRaises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_high_bits(self):
        with self.assertRaises(ValueError):
            Graph(2, [0b110, 0b001])

    def test_rejects_oversize(self):
        with self.assertRaises(ValueError):
            Graph.empty(graph_core.MAX_ORDER + 1)._check()

    def test_basic_accessors(self):
        g = petersen()
        self.assertEqual(g.order, 10)
        self.assertEqual(g.edge_count, 15)
        self.assertEqual(g.degrees(), (3, ) * 10)
        self.assertEqual(len(g.edges()), 15)
        self.assertEqual(Graph.empty(0).max_degree, 0)

    def test_induced_mapping(self):
        h, mapping = cycle(5).induced(0b10110)
        self.assertEqual(mapping, (1, 2, 4))
        self.assertEqual(h.edges(), [(0, 1)])

    def test_relabel_keeps_edges(self):
        g = path(4)
        h = g.relabel([3, 2, 1, 0])
        self.assertEqual(h, g)
        with self.assertRaises(ValueError):
            g.relabel([0, 0, 1, 2])

    def test_add_and_delete_vertex(self):
        g = path(3).add_vertex(0b101)
        self.assertEqual(g, cycle(4))
        self.assertEqual(g.delete_vertex(3), path(3))
        with self.assertRaises(ValueError):
            path(2).add_vertex(0b100)

    def test_equality_and_hash(self):
        self.assertEqual(cycle(5), cycle(5))
        self.assertEqual(len({cycle(5), cycle(5), path(5)}), 2)


class TestTriangles(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(is_triangle_free(cycle(5)))
        self.assertFalse(is_triangle_free(complete(3)))
        self.assertTrue(is_triangle_free(petersen()))


class TestIndependence(unittest.TestCase):

    def test_examples(self):
        c5 = cycle(5)
        self.assertEqual(independence_number(c5), 2)
        self.assertEqual(independence_number(c5, c5.all_mask), 2)
        self.assertEqual(independence_number(petersen(), 0), 0)
        self.assertEqual(independence_number(circulant(13, (1, 5))), 4)

    def test_has_independent_set(self):
        c5 = cycle(5)
        self.assertFalse(has_independent_set(c5, c5.all_mask, 3))
        self.assertTrue(has_independent_set(c5, c5.all_mask, 2))
        self.assertTrue(has_independent_set(edgeless(7), 0x7f, 7))
        self.assertTrue(has_independent_set(c5, 0, 0))

    def test_has_at_least_short_circuits(self):
        # An independent subset answers without filling the table.
        oracle = IndependenceOracle(edgeless(30))
        self.assertTrue(oracle.has_at_least((1 << 30) - 1, 3))
        self.assertIsNone(oracle._table)
        self.assertEqual(oracle.nodes, 1)

    def test_flat_threshold(self):
        self.assertTrue(IndependenceOracle(cycle(5)).flat)
        self.assertFalse(IndependenceOracle(cycle(5), 4).flat)

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_order=12), st.integers(0, (1 << 12) - 1))
    def test_memo_matches_exhaustive(self, g, subset):
        subset &= g.all_mask
        self.assertEqual(independence_number(g, subset),
                         brute_alpha(g, subset))

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_order=12), st.integers(0, (1 << 12) - 1))
    def test_hash_memo_matches_flat(self, g, subset):
        subset &= g.all_mask
        flat = IndependenceOracle(g)
        hashed = IndependenceOracle(g, table_order_max=0)
        self.assertEqual(flat.alpha(subset), hashed.alpha(subset))


class TestRamsey(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(is_ramsey(cycle(5), 3, 3))
        self.assertTrue(is_ramsey(circulant(13, (1, 5)), 3, 5))
        self.assertFalse(is_ramsey(complete(4), 4, 2))
        self.assertFalse(is_ramsey(cycle(6), 3, 3))

    def test_bad_parameters(self):
        with self.assertRaises(ValueError):
            is_ramsey(cycle(5), 0, 3)

    @settings(max_examples=200, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much,
                                     HealthCheck.too_slow])
    @given(triangle_free_graphs(max_order=10), st.integers(1, 6))
    def test_dual_ramsey_closure(self, g, t):
        assume(is_ramsey(g, 3, t + 1))
        for v in range(g.order):
            self.assertTrue(is_ramsey(dual_neighbourhood(g, v)[0], 3, t))


class TestDualNeighbourhood(unittest.TestCase):

    def test_examples(self):
        h, mapping = dual_neighbourhood(cycle(5), 0)
        self.assertEqual((h.order, h.edge_count), (2, 1))
        self.assertEqual(mapping, (2, 3))

        h, _ = dual_neighbourhood(petersen(), 4)
        self.assertEqual((h.order, h.edge_count), (6, 6))
        self.assertEqual(h.degrees(), (2, ) * 6)
        self.assertTrue(is_triangle_free(h))

        h, _ = dual_neighbourhood(edgeless(1), 0)
        self.assertEqual(h.order, 0)

    def test_bad_vertex(self):
        with self.assertRaises(ValueError):
            dual_neighbourhood(cycle(5), 5)

    @settings(max_examples=1000, deadline=None)
    @given(triangle_free_graphs())
    def test_dual_edge_identity(self, g):
        for v in range(g.order):
            self.assertEqual(dual_neighbourhood(g, v)[0].edge_count,
                             dual_edge_count(g, v))


class TestDeficiency(unittest.TestCase):

    def test_epsilon_examples(self):
        self.assertEqual(epsilon(petersen(), 0, 3), 0)
        self.assertEqual(epsilon(cycle(5), 2, 2), 0)
        self.assertEqual(epsilon(star(3), 0, 3), 6)
        with self.assertRaises(ValueError):
            epsilon(star(3), 0, 2)

    def test_profile_examples(self):
        p = degree_profile(cycle(5), 2)
        self.assertEqual((p.counts, p.deficiency), ({2: 5}, 0))
        p = degree_profile(path(3), 2)
        self.assertEqual((p.counts, p.deficiency), ({1: 2, 2: 1}, 2))
        p = degree_profile(petersen(), 4)
        self.assertEqual((p.counts, p.deficiency), ({3: 10}, 10))
        self.assertEqual(p.order, 10)

    def test_regular_has_no_deficient_vertex(self):
        self.assertIsNone(min_epsilon_vertex(petersen(), 3))

    @settings(max_examples=1000, deadline=None,
              suppress_health_check=[HealthCheck.filter_too_much,
                                     HealthCheck.too_slow])
    @given(triangle_free_graphs(max_order=11))
    def test_epsilon_minimum_bound(self, g):
        D = g.max_degree
        N = degree_profile(g, D).deficiency
        assume(N % 2 == 1)
        v = min_epsilon_vertex(g, D)
        self.assertIsNotNone(v)
        self.assertLess(g.degree(v), D)
        self.assertLessEqual(epsilon(g, v, D), (N - 1) // 2)


if __name__ == '__main__':
    unittest.main()
