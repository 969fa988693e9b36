#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 19:48:02 krylon>
#
# /data/code/python/circtotal/src/circtotal/fileio.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.fileio

(c) 2025 Benjamin Walkenhorst

Reading and writing graphs ("heg 1") and colourings ("pqc 1").

Both formats are line-oriented UTF-8 text. Everything after a '#' is a
comment, blank lines are ignored, the first meaningful line is the format
header.
"""

import os
from typing import Final, Optional

from circtotal.colouring import CircularColouring, ColouringError
from circtotal.common import CircTotalError
from circtotal.hegraph import GraphError, HalfEdgeGraph

GraphHeader: Final[str] = "heg 1"
CertHeader: Final[str] = "pqc 1"


class FormatError(CircTotalError):
    """FormatError indicates a malformed graph or certificate file."""

    path: str
    lineno: int

    def __init__(self, reason: str, path: str = "<string>", lineno: int = 0) -> None:
        self.path = path
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {reason}")


def _lines(text: str) -> list[tuple[int, list[str]]]:
    """Strip comments and blank lines, split the rest into fields."""
    lines: list[tuple[int, list[str]]] = []
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line != "":
            lines.append((num, line.split()))
    return lines


def _check_header(lines: list[tuple[int, list[str]]], header: str, path: str) -> None:
    if len(lines) == 0:
        raise FormatError(f"Missing header {header!r}", path, 1)
    num, fields = lines[0]
    if " ".join(fields) != header:
        raise FormatError(f"Expected header {header!r}, got {' '.join(fields)!r}", path, num)


def serialize_graph(g: HalfEdgeGraph) -> str:
    """Render <g> in the "heg 1" format: vertices, then edges, then half-edges,
    each sorted by label."""
    out: list[str] = [GraphHeader]
    out.extend(f"vertex {v}" for v in sorted(g.vertices))
    out.extend(f"edge {e.label} {e.u} {e.v}" for e in sorted(g.edges))
    out.extend(f"half {h.label} {h.vertex}" for h in sorted(g.half_edges))
    return "\n".join(out) + "\n"


def parse_graph(text: str, path: str = "<string>") -> HalfEdgeGraph:
    """Parse a graph in the "heg 1" format.

    Vertices must be declared before an edge or half-edge refers to them.
    """
    lines: Final[list[tuple[int, list[str]]]] = _lines(text)
    _check_header(lines, GraphHeader, path)

    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    half_edges: list[tuple[str, str]] = []
    seen: dict[str, int] = {}
    vset: set[str] = set()

    def declare(label: str, num: int) -> None:
        if label in seen:
            raise FormatError(f"Duplicate label {label} (first declared on line {seen[label]})",
                              path,
                              num)
        seen[label] = num

    def known(vertex: str, num: int) -> None:
        if vertex not in vset:
            raise FormatError(f"Unknown vertex {vertex}", path, num)

    for num, fields in lines[1:]:
        match fields:
            case ["vertex", label]:
                declare(label, num)
                vertices.append(label)
                vset.add(label)
            case ["edge", label, u, v]:
                known(u, num)
                known(v, num)
                declare(label, num)
                edges.append((label, u, v))
            case ["half", label, v]:
                known(v, num)
                declare(label, num)
                half_edges.append((label, v))
            case _:
                raise FormatError(f"Cannot parse line: {' '.join(fields)}", path, num)

    try:
        return HalfEdgeGraph.build(vertices, edges, half_edges)
    except GraphError as err:
        raise FormatError(str(err), path, 0) from err


def serialize_colouring(c: CircularColouring) -> str:
    """Render <c> in the "pqc 1" format. meta entries become comments."""
    out: list[str] = [CertHeader]
    out.extend(f"# {key}: {val}" for key, val in sorted(c.meta.items()))
    out.append(f"p {c.p}")
    out.append(f"q {c.q}")
    out.extend(f"{lbl} {col}" for lbl, col in sorted(c.assignment.items()))
    return "\n".join(out) + "\n"


def _int(field: str, what: str, path: str, num: int) -> int:
    try:
        return int(field)
    except ValueError as err:
        raise FormatError(f"Invalid {what} {field!r}", path, num) from err


def parse_colouring(text: str, path: str = "<string>") -> CircularColouring:
    """Parse a colouring in the "pqc 1" format."""
    lines: Final[list[tuple[int, list[str]]]] = _lines(text)
    _check_header(lines, CertHeader, path)

    if len(lines) < 3:
        raise FormatError("Truncated certificate: need p and q", path, lines[-1][0])

    p: Optional[int] = None
    q: Optional[int] = None
    for (num, fields), key in zip(lines[1:3], ("p", "q")):
        if len(fields) != 2 or fields[0] != key:
            raise FormatError(f"Expected '{key} <int>', got {' '.join(fields)!r}", path, num)
        val = _int(fields[1], key, path, num)
        if key == "p":
            p = val
        else:
            q = val

    assert p is not None and q is not None

    colours: dict[str, int] = {}
    for num, fields in lines[3:]:
        if len(fields) != 2:
            raise FormatError(f"Expected '<label> <colour>', got {' '.join(fields)!r}",
                              path,
                              num)
        lbl, col = fields[0], _int(fields[1], "colour", path, num)
        if lbl in colours:
            raise FormatError(f"Element {lbl} is coloured twice", path, num)
        if not 0 <= col < p:
            raise FormatError(f"Colour {col} of {lbl} is out of range 0..{p - 1}", path, num)
        colours[lbl] = col

    try:
        return CircularColouring(p=p, q=q, assignment=colours)
    except ColouringError as err:
        raise FormatError(str(err), path, lines[1][0]) from err


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise FormatError(f"Cannot read file: {err.strerror}", path, 0) from err


def _write(path: str, text: str) -> None:
    try:
        folder: Final[str] = os.path.dirname(path)
        if folder != "":
            os.makedirs(folder, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as err:
        raise FormatError(f"Cannot write file: {err.strerror}", path, 0) from err


def load_graph(path: str) -> HalfEdgeGraph:
    """Read a graph from the file at <path>."""
    return parse_graph(_read(path), path)


def save_graph(g: HalfEdgeGraph, path: str) -> None:
    """Write <g> to the file at <path>."""
    _write(path, serialize_graph(g))


def load_colouring(path: str) -> CircularColouring:
    """Read a certificate from the file at <path>."""
    return parse_colouring(_read(path), path)


def save_colouring(c: CircularColouring, path: str) -> None:
    """Write the certificate <c> to the file at <path>."""
    _write(path, serialize_colouring(c))

# Local Variables: #
# python-indent: 4 #
# End: #
