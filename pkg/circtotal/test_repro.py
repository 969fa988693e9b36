#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 02:03:18 krylon>
#
# /data/code/python/circtotal/src/circtotal/test_repro.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.test_repro

(c) 2025 Benjamin Walkenhorst
"""

import dataclasses
import os
import shutil
import unittest
from datetime import datetime
from fractions import Fraction
from typing import Final
from unittest import mock

from circtotal import common
from circtotal.database import Database, RunRecord
from circtotal.hegraph import HalfEdgeGraph, gen_cycle
from circtotal.repro import (Claim, Runner, Suite, Verdict, _chi_partial,
                             claims, history, table)
from circtotal.solver import (ChiResult, ChiStatus, SearchConfig, SolverError,
                              chi_total)

test_dir: Final[str] = os.path.join(
    "/tmp",
    datetime.now().strftime(f"{common.AppName.lower()}_test_repro_%Y%m%d_%H%M%S"))


def _broken(_cfg: SearchConfig) -> Verdict:
    raise SolverError("out of luck")


def _by_name(name: str) -> Claim:
    for cl in claims(Suite.Fast):
        if cl.name == name:
            return cl
    raise KeyError(name)


class TestRepro(unittest.TestCase):
    """Test replaying claims."""

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    def test_01_claims(self) -> None:
        """The suites list their claims in a fixed order."""
        fast: Final[list[Claim]] = claims(Suite.Fast)
        full: Final[list[Claim]] = claims(Suite.Full)

        self.assertEqual(len(fast), 26)
        self.assertEqual(len(full), 33)
        self.assertEqual(len({c.name for c in fast}), len(fast))
        self.assertEqual([c.name for c in full[:len(fast)]], [c.name for c in fast])
        self.assertGreater(len(full), len(fast))
        self.assertEqual(Suite.from_str("FULL"), Suite.Full)
        with self.assertRaises(ValueError):
            Suite.from_str("medium")

    def test_02_run_claim(self) -> None:
        """Test checking single claims."""
        runner: Final[Runner] = Runner(SearchConfig(), record=False)
        for name in ("all0 H_k, k=2..10",
                     "G_(2,n) ~ C_(3n+1), n=1..5",
                     "heg round trip",
                     "type 2 G_(2,1)",
                     "uniform half-edges H_2",
                     "chi C_6",
                     "shift invariance, 20 x 100 shifts"):
            with self.subTest(name=name):
                res = runner.run_claim(Suite.Fast, _by_name(name))
                self.assertTrue(res.ok, res.outcome)
                self.assertEqual(res.suite, "fast")
                self.assertGreaterEqual(res.seconds, 0)

    def test_03_error(self) -> None:
        """A claim that raises does not hold."""
        runner: Final[Runner] = Runner(SearchConfig(), record=False)
        res = runner.run_claim(Suite.Fast, Claim(name="broken", expected="x", run=_broken))
        self.assertFalse(res.ok)
        self.assertEqual(res.outcome, "error: SolverError")

    def test_04_record(self) -> None:
        """A run goes into the ledger."""
        short: Final[list[Claim]] = [
            _by_name("heg round trip"),
            Claim(name="broken", expected="x", run=_broken),
        ]
        with mock.patch("circtotal.repro.claims", return_value=short):
            results = Runner(SearchConfig()).run(Suite.Full)

        self.assertEqual([r.ok for r in results], [True, False])

        db: Final[Database] = Database()
        try:
            stored = db.run_get_by_suite("full")
            self.assertEqual([r.name for r in stored], ["heg round trip", "broken"])
            self.assertEqual(len(db.run_get_failed()), 1)
        finally:
            db.close()

    def test_05_table(self) -> None:
        """Test rendering the summary table."""
        results: Final[list[RunRecord]] = [
            RunRecord(suite="fast", name="chi C_7", expected="7/2", outcome="exact 7/2",
                      ok=True, nodes=1234, seconds=0.5),
            RunRecord(suite="fast", name="chi V_8", expected="9/2", outcome="bounded (4/1, 5/1]",
                      ok=False, nodes=99, seconds=300),
        ]
        txt: Final[str] = table(results)
        lines: Final[list[str]] = txt.splitlines()

        self.assertTrue(lines[0].startswith("claim"))
        self.assertTrue(set(lines[1]) <= {"-", " "})
        self.assertIn("exact 7/2", lines[2])
        self.assertIn("yes", lines[2])
        self.assertIn("NO", lines[3])
        self.assertIn("300.00", lines[3])
        self.assertEqual(lines[-1], "1/2 claims hold")
        # Columns line up.
        self.assertEqual(lines[2].index("7/2"), lines[3].index("9/2"))

    def test_06_partial(self) -> None:
        """A bracketed value holds if the bracket and the checks below it agree."""
        c7: Final[HalfEdgeGraph] = gen_cycle(7)
        exact: Final[ChiResult] = chi_total(c7)
        bounded: Final[ChiResult] = dataclasses.replace(exact,
                                                        status=ChiStatus.Bounded,
                                                        value=None,
                                                        lower=Fraction(3),
                                                        upper=Fraction(4))

        with mock.patch("circtotal.repro.chi_total", return_value=bounded):
            good = _chi_partial(c7, Fraction(7, 2))(SearchConfig())
            low = _chi_partial(c7, Fraction(10, 3))(SearchConfig())

        self.assertTrue(good.ok, good.outcome)
        self.assertEqual(good.outcome,
                         "bounded (3/1, 4/1], feasible at 7/2, infeasible at 3/3 below")
        self.assertGreater(good.nodes, 0)
        self.assertFalse(low.ok, low.outcome)
        self.assertIn("infeasible at 10/3", low.outcome)

        direct = _chi_partial(c7, Fraction(7, 2))(SearchConfig())
        self.assertTrue(direct.ok)
        self.assertEqual(direct.outcome, "exact 7/2")

    def test_07_history(self) -> None:
        """The ledger lists the recent runs, newest first."""
        txt: Final[str] = history(5)
        lines: Final[list[str]] = txt.splitlines()

        self.assertEqual(lines[-1], "2 of 2 recorded runs")
        self.assertEqual(len(lines), 3)
        self.assertTrue(any("heg round trip" in ln and "yes" in ln for ln in lines[:2]))
        self.assertTrue(any("broken: error: SolverError" in ln and "NO" in ln
                            for ln in lines[:2]))

        short: Final[list[str]] = history(1).splitlines()
        self.assertEqual(len(short), 2)
        self.assertEqual(short[-1], "1 of 2 recorded runs")


# Local Variables: #
# python-indent: 4 #
# End: #
