#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 00:31:07 krylon>
#
# /data/code/python/circtotal/src/circtotal/test_hegraph.py
# created on 02. 10. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.test_hegraph

(c) 2025 Benjamin Walkenhorst
"""

import os
import random
import shutil
import unittest
from datetime import datetime
from typing import Final

from circtotal import common
from circtotal.hegraph import (ElementKind, Family, GraphError, HalfEdgeGraph,
                               delete_edge, disjoint_union, gen_classic,
                               gen_complete_bipartite, gen_cycle, gen_gkn,
                               gen_hk, gen_hprime, gen_moebius, gen_prism,
                               gen_random, is_bipartite, is_isomorphic,
                               join_half_edges, relabel, total_conflict_graph)

test_dir: Final[str] = os.path.join(
    "/tmp",
    datetime.now().strftime(f"{common.AppName.lower()}_test_hegraph_%Y%m%d_%H%M%S"))


def _path3() -> HalfEdgeGraph:
    """A path a-b-c with a half-edge at each end."""
    return HalfEdgeGraph.build(vertices=["a", "b", "c"],
                               edges=[("ab", "a", "b"), ("bc", "b", "c")],
                               half_edges=[("ha", "a"), ("hc", "c")])


class TestHalfEdgeGraph(unittest.TestCase):
    """Test building graphs and the operations on them."""

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    def test_01_build(self) -> None:
        """Test building a graph from tuples."""
        g: Final[HalfEdgeGraph] = _path3()
        self.assertEqual(g.vertex_count, 3)
        self.assertEqual(g.edge_count, 2)
        self.assertEqual(g.half_edge_count, 2)
        self.assertEqual(g.labels, frozenset({"a", "b", "c", "ab", "bc", "ha", "hc"}))
        self.assertEqual(g.incident("a"), ["ab", "ha"])
        self.assertEqual(g.neighbours("b"), ["a", "c"])
        self.assertEqual(g.degree("a"), 2)
        self.assertEqual(g.degree("a", half_edges=False), 1)
        self.assertEqual(g.edge("ab").other("a"), "b")

        rep = g.degree_report()
        self.assertEqual(rep.max_degree_with_half_edges, 2)
        self.assertEqual(rep.max_degree_edges_only, 2)

    def test_02_invalid(self) -> None:
        """Test that malformed graphs are rejected."""
        bad: Final[list[tuple[str, dict]]] = [
            ("loop", {"vertices": ["a"], "edges": [("aa", "a", "a")]}),
            ("parallel", {"vertices": ["a", "b"],
                          "edges": [("e1", "a", "b"), ("e2", "b", "a")]}),
            ("dangling", {"vertices": ["a"], "edges": [("ab", "a", "b")]}),
            ("dangling half", {"vertices": ["a"], "half_edges": [("h", "z")]}),
            ("duplicate", {"vertices": ["a", "b"], "edges": [("a", "a", "b")]}),
            ("whitespace", {"vertices": ["a b"]}),
        ]

        for name, args in bad:
            with self.subTest(name=name):
                with self.assertRaises(GraphError):
                    HalfEdgeGraph.build(**args)

    def test_03_join(self) -> None:
        """Test joining half-edges."""
        g: Final[HalfEdgeGraph] = _path3()
        joined: Final[HalfEdgeGraph] = join_half_edges(g, "ha", "hc", "ca")

        self.assertEqual(joined.half_edge_count, 0)
        self.assertEqual(joined.edge_count, 3)
        self.assertTrue(is_isomorphic(joined, gen_cycle(3)))
        # The original is untouched.
        self.assertEqual(g.half_edge_count, 2)

        loop: Final[HalfEdgeGraph] = HalfEdgeGraph.build(vertices=["a"],
                                                         half_edges=[("h1", "a"), ("h2", "a")])
        with self.assertRaises(GraphError):
            join_half_edges(loop, "h1", "h2", "aa")

        par: Final[HalfEdgeGraph] = HalfEdgeGraph.build(vertices=["a", "b"],
                                                        edges=[("ab", "a", "b")],
                                                        half_edges=[("h1", "a"), ("h2", "b")])
        with self.assertRaises(GraphError):
            join_half_edges(par, "h1", "h2", "ab2")

        with self.assertRaises(GraphError):
            join_half_edges(g, "ha", "ha", "x")

    def test_04_union(self) -> None:
        """Test disjoint unions and relabelling."""
        g: Final[HalfEdgeGraph] = _path3()
        u: Final[HalfEdgeGraph] = disjoint_union([g, g], ["", "P"])

        self.assertEqual(u.vertex_count, 6)
        self.assertEqual(u.edge_count, 4)
        self.assertIn("P.ab", u.labels)
        self.assertIn("ab", u.labels)
        self.assertEqual(u.half_edge("P.ha").vertex, "P.a")

        with self.assertRaises(GraphError):
            disjoint_union([g, g], ["P", "P"])
        with self.assertRaises(GraphError):
            disjoint_union([g, g], ["P"])

        r: Final[HalfEdgeGraph] = relabel(g, {"a": "z", "ab": "zb"})
        self.assertEqual(r.edge("zb").ends, ("b", "z"))
        self.assertEqual(r.half_edge("ha").vertex, "z")

        d: Final[HalfEdgeGraph] = delete_edge(g, "ab")
        self.assertEqual(d.edge_count, 1)
        with self.assertRaises(GraphError):
            delete_edge(g, "ab2")


class TestFamilies(unittest.TestCase):
    """Test the graph generators."""

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    def test_01_hk(self) -> None:
        """Test the counts of H_k and H'_k."""
        for k in range(2, 7):
            with self.subTest(k=k):
                g = gen_hk(k)
                self.assertEqual(g.vertex_count, 2*k - 1)
                self.assertEqual(g.edge_count, k * (k-1))
                self.assertEqual(g.half_edge_count, k)
                self.assertEqual(g.max_degree, k)
                for v in g.vertices:
                    self.assertEqual(g.degree(v), k)

                hp = gen_hprime(k)
                self.assertEqual(hp.half_edge_count, 2)
                self.assertEqual({h.label for h in hp.half_edges}, {"e1", f"e{k}"})

        with self.assertRaises(GraphError):
            gen_hk(1)
        with self.assertRaises(GraphError):
            gen_hprime(3, (2, 2))

    def test_02_gkn(self) -> None:
        """Test the counts of G_{k,n}."""
        for k in range(2, 6):
            for n in range(1, 5):
                with self.subTest(k=k, n=n):
                    g = gen_gkn(k, n)
                    self.assertEqual(g.vertex_count, 1 + n*(2*k - 1))
                    self.assertEqual(g.edge_count, n*k*(k-1) + n + 1)
                    self.assertEqual(g.half_edge_count, 0)
                    self.assertEqual(g.max_degree, k)
                    self.assertEqual(g.degree("u"), 2)
                    self.assertIn(f"e{n}", g.labels)

    def test_03_gkn_cycle(self) -> None:
        """G_{2,n} is the cycle C_{3n+1}."""
        for n in range(1, 6):
            with self.subTest(n=n):
                self.assertTrue(is_isomorphic(gen_gkn(2, n), gen_cycle(3*n + 1)))
                self.assertFalse(is_isomorphic(gen_gkn(2, n), gen_cycle(3*n + 2)))

    def test_04_classic(self) -> None:
        """Test the classical families."""
        self.assertEqual(gen_cycle(5).edge_count, 5)
        self.assertEqual(gen_moebius(4).edge_count, 12)
        self.assertEqual(gen_prism(5).vertex_count, 10)
        self.assertEqual(gen_prism(5).max_degree, 3)
        self.assertEqual(gen_complete_bipartite(2, 3).edge_count, 6)
        self.assertTrue(is_isomorphic(gen_moebius(3), gen_complete_bipartite(3, 3)))
        self.assertTrue(is_isomorphic(gen_classic(Family.from_str("kab"), 3, 3),
                                      gen_moebius(3)))

        with self.assertRaises(GraphError):
            gen_cycle(2)
        with self.assertRaises(GraphError):
            gen_classic(Family.Cycle, 3, 4)
        with self.assertRaises(ValueError):
            Family.from_str("petersen")

    def test_05_random(self) -> None:
        """Random graphs stay within their size and repeat for the same seed."""
        for size in (1, 3, 8, 12):
            rng = random.Random(size)
            for _ in range(50):
                with self.subTest(size=size):
                    g = gen_random(rng, size)
                    self.assertGreaterEqual(g.vertex_count, 1)
                    self.assertLessEqual(g.vertex_count + g.edge_count + g.half_edge_count,
                                         size)

        first = [gen_random(random.Random(7)) for _ in range(5)]
        again = [gen_random(random.Random(7)) for _ in range(5)]
        for a, b in zip(first, again):
            self.assertEqual(total_conflict_graph(a).fingerprint,
                             total_conflict_graph(b).fingerprint)
            self.assertEqual(a.labels, b.labels)

        with self.assertRaises(GraphError):
            gen_random(random.Random(1), 0)


class TestConflictGraph(unittest.TestCase):
    """Test the total conflict graph and the structural checks."""

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    def test_01_single_edge(self) -> None:
        """An edge and its two ends form a triangle."""
        g: Final[HalfEdgeGraph] = HalfEdgeGraph.build(vertices=["a", "b"],
                                                      edges=[("ab", "a", "b")])
        t = total_conflict_graph(g)
        self.assertEqual(t.size, 3)
        self.assertEqual(t.pair_count, 3)
        self.assertEqual(t.labels, ["a", "ab", "b"])
        self.assertEqual(t.elements[t.index_of("ab")].kind, ElementKind.Edge)

    def test_02_cycle_degrees(self) -> None:
        """Every element of T(C_m) has degree 4."""
        for m in range(3, 9):
            with self.subTest(m=m):
                t = total_conflict_graph(gen_cycle(m))
                self.assertEqual(t.size, 2*m)
                for i in range(t.size):
                    self.assertEqual(t.degree(i), 4)

    def test_03_half_edges(self) -> None:
        """Half-edges conflict with their vertex and its other edges, nothing else."""
        t = total_conflict_graph(gen_hk(3))
        self.assertTrue(t.adjacent("e1", "x1"))
        self.assertTrue(t.adjacent("e1", "x1y2"))
        self.assertTrue(t.adjacent("e1", "x1y3"))
        self.assertFalse(t.adjacent("e1", "e2"))
        self.assertFalse(t.adjacent("e1", "y2"))
        self.assertEqual(t.degree(t.index_of("e1")), 3)

        star = t.star("x1")
        self.assertEqual(len(star), 4)
        for i in star:
            for j in star:
                if i != j:
                    self.assertIn(j, t.neighbours[i])

        with self.assertRaises(GraphError):
            t.star("e1")
        with self.assertRaises(GraphError):
            t.index_of("nope")

    def test_04_fingerprint(self) -> None:
        """Fingerprints tell graphs apart, but not copies."""
        self.assertEqual(total_conflict_graph(gen_hk(3)).fingerprint,
                         total_conflict_graph(gen_hk(3)).fingerprint)
        self.assertNotEqual(total_conflict_graph(gen_hk(3)).fingerprint,
                            total_conflict_graph(gen_hprime(3)).fingerprint)

    def test_05_bipartite(self) -> None:
        """Test bipartiteness, with witnesses."""
        rep = is_bipartite(gen_hk(4))
        self.assertTrue(rep.bipartite)
        assert rep.parts is not None
        left, right = rep.parts
        self.assertEqual(len(left) + len(right), 7)

        for m in (3, 5, 7):
            with self.subTest(m=m):
                g = gen_cycle(m)
                rep = is_bipartite(g)
                self.assertFalse(rep.bipartite)
                assert rep.odd_cycle is not None
                cyc = rep.odd_cycle
                self.assertEqual(len(cyc) % 2, 1)
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    self.assertIn(b, g.neighbours(a))

        self.assertFalse(is_bipartite(gen_moebius(4)).bipartite)
        self.assertTrue(is_bipartite(gen_moebius(3)).bipartite)

    def test_06_gkn_bipartite(self) -> None:
        """G_{k,n} is bipartite for odd n, G_{3,2} has an odd cycle."""
        for k in range(2, 7):
            for n in (1, 3, 5, 7):
                with self.subTest(k=k, n=n):
                    g = gen_gkn(k, n)
                    rep = is_bipartite(g)
                    self.assertTrue(rep.bipartite)
                    assert rep.parts is not None
                    left, right = rep.parts
                    self.assertEqual(len(left) + len(right), g.vertex_count)
                    for e in g.edges:
                        a, b = e.ends
                        self.assertNotEqual(a in left, b in left)

        g = gen_gkn(3, 2)
        rep = is_bipartite(g)
        self.assertFalse(rep.bipartite)
        self.assertIsNone(rep.parts)
        assert rep.odd_cycle is not None
        cyc = rep.odd_cycle
        self.assertEqual(len(cyc) % 2, 1)
        self.assertEqual(len(set(cyc)), len(cyc))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            self.assertIn(b, g.neighbours(a))


# Local Variables: #
# python-indent: 4 #
# End: #
