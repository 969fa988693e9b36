#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 01:41:12 krylon>
#
# /data/code/python/circtotal/src/circtotal/test_cache.py
# created on 05. 11. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.test_cache

(c) 2025 Benjamin Walkenhorst
"""

import os
import shutil
import unittest
from datetime import datetime
from typing import Any, Final, Optional

from circtotal import common
from circtotal.cache import Cache, CacheDB, DBType, get_cache

test_dir: Final[str] = os.path.join(
    "/tmp",
    datetime.now().strftime(f"{common.AppName.lower()}_test_cache_%Y%m%d_%H%M%S"))


class TestCache(unittest.TestCase):
    """Do some rudimentary tests on the Cache."""

    _cache: Optional[Cache] = None

    @classmethod
    def setUpClass(cls) -> None:
        """Prepare the testing environment."""
        common.set_basedir(test_dir)

    @classmethod
    def tearDownClass(cls) -> None:
        """Clean up afterwards."""
        shutil.rmtree(test_dir, ignore_errors=True)

    @classmethod
    def cache(cls) -> Cache:
        """Return the shared instance of the cache environment."""
        if cls._cache is None:
            cls._cache = get_cache()

        return cls._cache

    def test_01_open_env(self) -> None:
        """Test opening the cache environment."""
        env = self.cache()
        self.assertIsNotNone(env)
        self.assertIsInstance(env, Cache)
        self.assertIs(env, get_cache())
        self.assertTrue(env.path.startswith(test_dir))

    def test_02_open_db(self) -> None:
        """Test opening a database within the cache environment."""
        env = self.cache()
        if env is None:
            self.skipTest("Cache Environment is missing.")

        db = env.get_db(DBType.Feasibility)
        self.assertIsNotNone(db)
        self.assertIsInstance(db, CacheDB)

    def test_03_transaction(self) -> None:
        """Test performing a transaction."""
        env = self.cache()
        if env is None:
            self.skipTest("Cache Environment is missing.")
        db = env.get_db(DBType.Feasibility)
        if db is None:
            self.skipTest("Cache DB is missing.")

        test_data: Final[list[tuple[str, dict[str, Any]]]] = [
            ("abc:5:1:1", {"status": 1, "nodes": 17, "assignment": {"a": 0, "b": 2}}),
            ("abc:9:2:1", {"status": 2, "nodes": 4711}),
            ("def:4:1:0", {"status": 2, "nodes": 0}),
        ]

        with db.tx(True) as tx:
            for key, rec in test_data:
                tx[key] = rec

        with db.tx() as tx:
            for key, rec in test_data:
                check = tx[key]
                self.assertIsNotNone(check)
                self.assertIsInstance(check, dict)
                self.assertEqual(check, rec)
                self.assertIn(key, tx)

                check = tx[key.upper()]
                self.assertIsNone(check)

    def test_04_expire(self) -> None:
        """Expired items are gone, purge removes them."""
        env = self.cache()
        db = env.get_db(DBType.Feasibility, ttl=-1)

        with db.tx(True) as tx:
            tx["stale:5:1:1"] = {"status": 2, "nodes": 1}

        with db.tx() as tx:
            self.assertIsNone(tx["stale:5:1:1"])
            self.assertNotIn("stale:5:1:1", tx)

        self.assertGreaterEqual(db.purge(), 1)
        self.assertGreaterEqual(db.purge(complete=True), 3)
        with db.tx() as tx:
            self.assertIsNone(tx["abc:5:1:1"])

    def test_05_readonly(self) -> None:
        """A readonly transaction does not change anything."""
        db = self.cache().get_db(DBType.Feasibility)
        with db.tx() as tx:
            tx["ro:3:1:1"] = {"status": 1, "nodes": 0}

        with db.tx() as tx:
            self.assertIsNone(tx["ro:3:1:1"])

    def test_06_basedir(self) -> None:
        """The Cache follows the base directory around."""
        env = self.cache()
        other: Final[str] = os.path.join(test_dir, "elsewhere")
        common.set_basedir(other)
        try:
            moved = get_cache()
            self.assertIs(moved, env)
            self.assertTrue(moved.path.startswith(other))
            db = moved.get_db(DBType.Feasibility)
            with db.tx(True) as tx:
                tx["moved:3:1:1"] = {"status": 2, "nodes": 3}
            with db.tx() as tx:
                self.assertIn("moved:3:1:1", tx)
        finally:
            common.set_basedir(test_dir)

        back = get_cache()
        self.assertIs(back, env)
        self.assertTrue(back.path.startswith(test_dir))
        self.assertFalse(back.path.startswith(other))
        with back.get_db(DBType.Feasibility).tx() as tx:
            self.assertNotIn("moved:3:1:1", tx)

# Local Variables: #
# python-indent: 4 #
# End: #
