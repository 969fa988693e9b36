#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 22:48:30 krylon>
#
# /data/code/python/circtotal/src/circtotal/database.py
# created on 30. 09. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.database

(c) 2025 Benjamin Walkenhorst

The ledger of experiment runs, kept in SQLite.
"""


import logging
import sqlite3
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum, auto
from pathlib import Path
from threading import Lock
from typing import Final, Optional, Union

import krylib

from circtotal import common


class DatabaseError(common.CircTotalError):
    """Exception class for database-specific errors."""


@dataclass(kw_only=True, slots=True)
class RunRecord:
    """RunRecord is one checked claim of a repro suite."""

    rid: int = 0
    suite: str
    name: str
    expected: str
    outcome: str
    ok: bool
    nodes: int = 0
    seconds: float = 0.0
    stamp: datetime = field(default_factory=datetime.now)


qinit: Final[list[str]] = [
    """
CREATE TABLE run (
    id INTEGER PRIMARY KEY,
    suite TEXT NOT NULL,
    name TEXT NOT NULL,
    expected TEXT NOT NULL,
    outcome TEXT NOT NULL,
    ok INTEGER NOT NULL,
    nodes INTEGER NOT NULL DEFAULT 0,
    seconds REAL NOT NULL DEFAULT 0,
    stamp INTEGER NOT NULL,
    CHECK (ok IN (0, 1)),
    CHECK (nodes >= 0),
    CHECK (seconds >= 0)
) STRICT
    """,
    "CREATE INDEX run_suite_idx ON run (suite)",
    "CREATE INDEX run_stamp_idx ON run (stamp)",
    "CREATE INDEX run_failed_idx ON run (ok = 0)",
]


class Query(Enum):
    """Query identifies the various operations we perform on the database."""

    RunAdd = auto()
    RunGetRecent = auto()
    RunGetBySuite = auto()
    RunGetFailed = auto()
    RunGetCount = auto()


qdb: Final[dict[Query, str]] = {
    Query.RunAdd: """
INSERT INTO run (suite, name, expected, outcome, ok, nodes, seconds, stamp)
VALUES          (    ?,    ?,        ?,       ?,  ?,     ?,       ?,     ?)
RETURNING id
    """,
    Query.RunGetRecent: """
SELECT
    id,
    suite,
    name,
    expected,
    outcome,
    ok,
    nodes,
    seconds,
    stamp
FROM run
ORDER BY stamp DESC, id DESC
LIMIT ?
    """,
    Query.RunGetBySuite: """
SELECT
    id,
    suite,
    name,
    expected,
    outcome,
    ok,
    nodes,
    seconds,
    stamp
FROM run
WHERE suite = ?
ORDER BY id
    """,
    Query.RunGetFailed: """
SELECT
    id,
    suite,
    name,
    expected,
    outcome,
    ok,
    nodes,
    seconds,
    stamp
FROM run
WHERE ok = 0
ORDER BY id
    """,
    Query.RunGetCount: "SELECT COUNT(id) FROM run",
}


open_lock: Final[Lock] = Lock()


def _row_to_run(row: tuple) -> RunRecord:
    return RunRecord(
        rid=row[0],
        suite=row[1],
        name=row[2],
        expected=row[3],
        outcome=row[4],
        ok=bool(row[5]),
        nodes=row[6],
        seconds=row[7],
        stamp=datetime.fromtimestamp(row[8]),
    )


class Database:
    """Database wraps the database connection and the operations we perform on it."""

    __slots__ = [
        "db",
        "log",
        "path",
    ]

    log: logging.Logger
    db: sqlite3.Connection
    path: Path

    def __init__(self, path: Optional[Union[Path, str]] = None) -> None:
        if path is None:
            self.path = common.path.db
        else:
            match path:
                case x if isinstance(x, Path):
                    self.path = x
                case x if isinstance(x, str):
                    self.path = Path(x)

        self.log = common.get_logger("database")
        self.log.debug("Open database at %s", self.path)

        with open_lock:
            exist: Final[bool] = krylib.fexist(str(self.path))
            try:
                self.db = sqlite3.connect(str(self.path))
                self.db.isolation_level = None

                cur: Final[sqlite3.Cursor] = self.db.cursor()
                cur.execute("PRAGMA foreign_keys = true")
                cur.execute("PRAGMA journal_mode = WAL")
            except sqlite3.Error as err:
                cname: Final[str] = err.__class__.__name__
                msg: Final[str] = f"{cname} opening database {self.path}: {err}"
                self.log.error(msg)
                raise DatabaseError(msg) from err

            if not exist:
                self.__create_db()

    def __create_db(self) -> None:
        """Initialize a freshly created database"""
        self.log.debug("Initialize fresh database at %s", self.path)
        with self.db:
            for query in qinit:
                try:
                    cur: sqlite3.Cursor = self.db.cursor()
                    cur.execute(query)
                except sqlite3.OperationalError as operr:
                    self.log.debug("%s executing init query: %s\n%s\n",
                                   operr.__class__.__name__,
                                   operr,
                                   query)
                    raise DatabaseError(f"Cannot initialize database: {operr}") from operr
        self.log.debug("Database initialized successfully.")

    def close(self) -> None:
        """Close the database connection."""
        self.db.close()
        del self.db

    def __enter__(self) -> None:
        self.db.__enter__()

    def __exit__(self, ex_type, ex_val, tb):
        return self.db.__exit__(ex_type, ex_val, tb)

    def run_add(self, run: RunRecord) -> None:
        """Add a RunRecord to the ledger, setting its ID."""
        try:
            cur = self.db.cursor()
            cur.execute(qdb[Query.RunAdd], (run.suite,
                                            run.name,
                                            run.expected,
                                            run.outcome,
                                            int(run.ok),
                                            run.nodes,
                                            run.seconds,
                                            int(run.stamp.timestamp())))
            row = cur.fetchone()
            run.rid = row[0]
        except sqlite3.Error as err:
            cname: Final[str] = err.__class__.__name__
            msg: Final[str] = f"{cname} adding run {run.suite}/{run.name}: {err}"
            self.log.error(msg)
            raise DatabaseError(msg) from err

    def run_get_recent(self, limit: int = 100) -> list[RunRecord]:
        """Load the <limit> most recent RunRecords."""
        try:
            cur = self.db.cursor()
            cur.execute(qdb[Query.RunGetRecent], (limit, ))
            return [_row_to_run(row) for row in cur]
        except sqlite3.Error as err:
            cname: Final[str] = err.__class__.__name__
            msg: Final[str] = f"{cname} trying to load recent runs: {err}"
            self.log.error(msg)
            raise DatabaseError(msg) from err

    def run_get_by_suite(self, suite: str) -> list[RunRecord]:
        """Load all RunRecords of the given suite, oldest first."""
        try:
            cur = self.db.cursor()
            cur.execute(qdb[Query.RunGetBySuite], (suite, ))
            return [_row_to_run(row) for row in cur]
        except sqlite3.Error as err:
            cname: Final[str] = err.__class__.__name__
            msg: Final[str] = f"{cname} trying to load runs of suite {suite}: {err}"
            self.log.error(msg)
            raise DatabaseError(msg) from err

    def run_get_failed(self) -> list[RunRecord]:
        """Load all RunRecords whose claim did not hold."""
        try:
            cur = self.db.cursor()
            cur.execute(qdb[Query.RunGetFailed])
            return [_row_to_run(row) for row in cur]
        except sqlite3.Error as err:
            cname: Final[str] = err.__class__.__name__
            msg: Final[str] = f"{cname} trying to load failed runs: {err}"
            self.log.error(msg)
            raise DatabaseError(msg) from err

    def run_get_count(self) -> int:
        """Return the number of RunRecords in the ledger."""
        try:
            cur = self.db.cursor()
            cur.execute(qdb[Query.RunGetCount])
            row = cur.fetchone()
            return row[0]
        except sqlite3.Error as err:
            cname: Final[str] = err.__class__.__name__
            msg: Final[str] = f"{cname} trying to count runs: {err}"
            self.log.error(msg)
            raise DatabaseError(msg) from err

# Local Variables: #
# python-indent: 4 #
# End: #
