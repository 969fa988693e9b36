#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 02:18:40 krylon>
#
# /data/code/python/circtotal/src/circtotal/test_main.py
# created on 11. 10. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.test_main

(c) 2025 Benjamin Walkenhorst
"""

import io
import os
import shutil
import unittest
from contextlib import redirect_stderr, redirect_stdout
from datetime import datetime
from typing import Any, Final
from unittest import mock

from circtotal import common
from circtotal.colouring import CircularColouring
from circtotal.constructions import ConstructionFault, ConstructionIncomplete
from circtotal.fileio import load_colouring, load_graph
from circtotal.hegraph import HalfEdgeGraph, gen_gkn, is_isomorphic
from circtotal.main import run

test_dir: Final[str] = os.path.join(
    "/tmp",
    datetime.now().strftime(f"{common.AppName.lower()}_test_main_%Y%m%d_%H%M%S"))


def _file(name: str) -> str:
    return os.path.join(test_dir, "files", name)


class TestMain(unittest.TestCase):
    """Test the command line interface."""

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)
        os.makedirs(os.path.join(test_dir, "files"), exist_ok=True)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    def cli(self, *args: str) -> tuple[int, str]:
        """Run the CLI, return the exit code and what it printed."""
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(["-b", test_dir, "--no-cache", *args])
        return code, out.getvalue()

    def test_01_gen(self) -> None:
        """Test generating graphs."""
        cases: Final[list[tuple[list[str], str]]] = [
            (["--family", "hk", "-k", "3"], "hk3.heg"),
            (["--family", "hprime", "-k", "4", "--keep", "2", "3"], "hp4.heg"),
            (["--family", "gkn", "-k", "3", "-n", "2"], "g32.heg"),
            (["--family", "cycle", "-m", "7"], "c7.heg"),
            (["--family", "moebius", "-n", "4"], "v8.heg"),
            (["--family", "prism", "-m", "5"], "prism5.heg"),
            (["--family", "kab", "-a", "2", "-b", "3"], "k23.heg"),
        ]

        for args, name in cases:
            with self.subTest(family=args[1]):
                code, out = self.cli("gen", *args, "-o", _file(name))
                self.assertEqual(code, 0)
                self.assertIn("vertices", out)
                self.assertTrue(os.path.exists(_file(name)))

        self.assertTrue(is_isomorphic(load_graph(_file("g32.heg")), gen_gkn(3, 2)))
        self.assertEqual({h.label for h in load_graph(_file("hp4.heg")).half_edges},
                         {"e2", "e3"})

        code, _ = self.cli("gen", "--family", "kab", "-a", "2", "-o", _file("bad.heg"))
        self.assertEqual(code, 2)
        code, _ = self.cli("gen", "--family", "cycle", "-m", "2", "-o", _file("bad.heg"))
        self.assertEqual(code, 2)

    def test_02_construct(self) -> None:
        """Test running constructions."""
        code, out = self.cli("construct", "--method", "thm-k3", "-n", "2",
                             "--graph-out", _file("g32k3.heg"),
                             "-o", _file("g32.pqc"))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "valid (13,3)")
        c = load_colouring(_file("g32.pqc"))
        self.assertEqual((c.p, c.q), (13, 3))

        code, out = self.cli("construct", "--method", "thm-lim", "-k", "3", "-n", "2",
                             "--graph", _file("g32.heg"),
                             "-o", _file("g32lim.pqc"))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "valid (9,2)")

        code, out = self.cli("construct", "--method", "tweak", "-k", "3", "-n", "2",
                             "--graph", _file("g32.heg"),
                             "-o", _file("wrong.pqc"))
        self.assertEqual(code, 1)
        self.assertIn("mismatch", out)

    def test_03_check(self) -> None:
        """Test checking certificates."""
        code, out = self.cli("check", _file("g32.heg"), _file("g32.pqc"))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "valid (13,3)")

        code, out = self.cli("check", _file("hk3.heg"), _file("g32.pqc"))
        self.assertEqual(code, 1)
        self.assertIn("mismatch", out)

        with open(_file("edge.heg"), "w", encoding="utf-8") as fh:
            fh.write("heg 1\nvertex a\nvertex b\nedge ab a b\n")
        with open(_file("edge.pqc"), "w", encoding="utf-8") as fh:
            fh.write("pqc 1\np 3\nq 1\na 0\nab 0\nb 2\n")

        code, out = self.cli("check", _file("edge.heg"), _file("edge.pqc"))
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith("invalid (3,1): 1 violations"))
        self.assertIn("a (0) - ab (0)", out)

        code, _ = self.cli("check", _file("edge.heg"), _file("missing.pqc"))
        self.assertEqual(code, 2)

    def test_04_feasible(self) -> None:
        """Test the feasibility command."""
        code, out = self.cli("feasible", _file("c7.heg"), "-p", "7", "-q", "2",
                             "--expect", "feasible", "-o", _file("c7.pqc"))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("feasible (7,2)"))
        self.assertEqual(load_colouring(_file("c7.pqc")).ratio * 2, 7)

        code, out = self.cli("feasible", _file("c7.heg"), "-p", "10", "-q", "3",
                             "--expect", "feasible")
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith("infeasible (10,3)"))

        code, _ = self.cli("feasible", _file("c7.heg"), "-p", "10", "-q", "3", "--no-symmetry")
        self.assertEqual(code, 0)

    def test_05_chi(self) -> None:
        """Test computing the circular total chromatic number."""
        code, out = self.cli("chi", _file("c7.heg"), "--decimal", "-o", _file("c7chi.pqc"))
        self.assertEqual(code, 0)
        first: Final[str] = out.splitlines()[0]
        self.assertEqual(first, "exact 7/2 ~3.500000")
        self.assertIn("status: exact", out)
        self.assertEqual((load_colouring(_file("c7chi.pqc")).p,
                          load_colouring(_file("c7chi.pqc")).q),
                         (7, 2))

    def test_06_verify(self) -> None:
        """Test verifying the uniformity of half-edge colours."""
        code, out = self.cli("verify-lemma", "all0", "-k", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "true (6 colourings)")

        code, _ = self.cli("verify-lemma", "all0", "-k", "7")
        self.assertEqual(code, 2)

    def test_07_usage(self) -> None:
        """Usage errors exit with 2."""
        for args in (["frobnicate"],
                     ["feasible", _file("c7.heg")],
                     ["construct", "--method", "magic", "-o", _file("x.pqc")],
                     []):
            with self.subTest(args=args):
                code, _ = self.cli(*args)
                self.assertEqual(code, 2)

    def test_08_construct_fails(self) -> None:
        """A failed or invalid construction is a negative result and writes nothing."""
        edge: Final[HalfEdgeGraph] = HalfEdgeGraph.build(vertices=["a", "b"],
                                                         edges=[("ab", "a", "b")])
        flat: Final[CircularColouring] = CircularColouring(p=3,
                                                           q=1,
                                                           assignment={"a": 0, "ab": 0, "b": 0})
        cases: Final[list[tuple[str, dict[str, Any]]]] = [
            ("fault", {"side_effect": ConstructionFault("no valid assembly")}),
            ("incomplete", {"side_effect": ConstructionIncomplete("search came up empty")}),
            ("invalid", {"return_value": (edge, flat)}),
        ]

        for name, behaviour in cases:
            with self.subTest(case=name):
                path = _file(f"{name}.pqc")
                with mock.patch("circtotal.main.construct", **behaviour):
                    code, out = self.cli("construct", "--method", "thm-k3", "-n", "1",
                                         "-o", path)
                self.assertEqual(code, 1)
                self.assertFalse(os.path.exists(path))
                if name == "invalid":
                    self.assertIn("invalid (3,1)", out)
                else:
                    self.assertTrue(out.startswith("failed: "))

        self.assertFalse(os.path.exists(_file("wrong.pqc")))

    def test_09_history(self) -> None:
        """List the ledger instead of replaying."""
        code, out = self.cli("repro", "--history", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "0 of 0 recorded runs")

        code, _ = self.cli("repro", "--history", "0")
        self.assertEqual(code, 2)

    def test_10_version(self) -> None:
        """--version prints the version and exits cleanly."""
        code, out = self.cli("--version")
        self.assertEqual(code, 0)
        self.assertIn(common.AppVersion, out)


# Local Variables: #
# python-indent: 4 #
# End: #
