#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 19:22:35 krylon>
#
# /data/code/python/circtotal/src/circtotal/colouring.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.colouring

(c) 2025 Benjamin Walkenhorst

Circular (p,q)-colourings of total conflict graphs, the checker that
validates them, and the shift, scale and merge operations the constructions
are built from.

A (p,q)-colouring assigns every element a colour in {0, ..., p-1} so that
adjacent elements a, b satisfy q <= |c(a) - c(b)| <= p - q. All arithmetic
is done on integers; ratios are fractions.Fraction.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import Enum, auto
from fractions import Fraction
from typing import Final

from circtotal.common import CircTotalError
from circtotal.hegraph import TotalConflictGraph, prefixed


class ColouringError(CircTotalError):
    """ColouringError indicates a malformed colouring or an impossible operation on one."""


def frac_str(f: Fraction) -> str:
    """Render a fraction as p/q, even if it happens to be an integer."""
    return f"{f.numerator}/{f.denominator}"


def decimal_str(f: Fraction, digits: int = 6) -> str:
    """Render an approximation of <f>, marked as such."""
    with localcontext() as ctx:
        ctx.prec = digits + 8
        val = Decimal(f.numerator) / Decimal(f.denominator)
        return f"~{val:.{digits}f}"


def circular_distance(a: int, b: int, p: int) -> int:
    """Return the distance between colours <a> and <b> on the circle of length <p>."""
    d: Final[int] = abs(a - b) % p
    return min(d, p - d)


class Bound(Enum):
    """Bound names the side of the constraint q <= |c(a)-c(b)| <= p-q that failed."""

    Lower = auto()
    Upper = auto()


@dataclass(frozen=True, slots=True)
class Violation:
    """An adjacent pair of elements whose colours are too close on the circle."""

    a: str
    b: str
    colour_a: int
    colour_b: int
    bound: Bound

    def describe(self, p: int, q: int) -> str:
        """Return a human-readable description of the Violation."""
        d: Final[int] = abs(self.colour_a - self.colour_b)
        match self.bound:
            case Bound.Lower:
                rel = f"< q = {q}"
            case Bound.Upper:
                rel = f"> p-q = {p - q}"
        return f"{self.a} ({self.colour_a}) - {self.b} ({self.colour_b}): " + \
            f"|{self.colour_a}-{self.colour_b}| = {d} {rel}"


@dataclass(frozen=True, slots=True)
class CircularColouring:
    """CircularColouring is a (p,q) pair plus a colour for every element label.

    p >= 2q is required, except for the trivial (1,1)-colouring, which only
    targets without adjacent elements admit. meta carries provenance notes
    (which construction, which orientation) and does not take part in
    comparisons.
    """

    p: int
    q: int
    assignment: Mapping[str, int]
    meta: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.q < 1 or self.p < 1:
            raise ColouringError(f"p and q must be positive, got p = {self.p}, q = {self.q}")
        if self.p < 2 * self.q and not self.p == self.q == 1:
            raise ColouringError(f"A ({self.p},{self.q})-colouring is impossible: p < 2q")

        colours: Final[dict[str, int]] = dict(self.assignment)
        for lbl, col in colours.items():
            if not isinstance(col, int) or not 0 <= col < self.p:
                raise ColouringError(f"Colour {col!r} of {lbl} is out of range 0..{self.p - 1}")
        object.__setattr__(self, "assignment", colours)

    @property
    def ratio(self) -> Fraction:
        """Return p/q."""
        return Fraction(self.p, self.q)

    @property
    def labels(self) -> frozenset[str]:
        """Return the labels of all coloured elements."""
        return frozenset(self.assignment)

    def colour(self, label: str) -> int:
        """Return the colour of the element labelled <label>."""
        try:
            return self.assignment[label]
        except KeyError as err:
            raise ColouringError(f"Element {label} is not coloured") from err

    def recoloured(self, changes: Mapping[str, int]) -> 'CircularColouring':
        """Return a copy with some elements recoloured. Colours are taken mod p,
        so -1 stands for p-1."""
        for lbl in changes:
            if lbl not in self.assignment:
                raise ColouringError(f"Cannot recolour {lbl}: not coloured")
        colours: Final[dict[str, int]] = dict(self.assignment)
        colours.update((lbl, col % self.p) for lbl, col in changes.items())
        return CircularColouring(p=self.p, q=self.q, assignment=colours, meta=dict(self.meta))

    def restricted(self, labels: Iterable[str]) -> 'CircularColouring':
        """Return the colouring restricted to <labels>."""
        keep: Final[set[str]] = set(labels)
        return CircularColouring(p=self.p,
                                 q=self.q,
                                 assignment={lbl: col
                                             for lbl, col in self.assignment.items()
                                             if lbl in keep},
                                 meta=dict(self.meta))

    def relabelled(self, mapping: Mapping[str, str]) -> 'CircularColouring':
        """Rename elements. Labels missing from <mapping> stay as they are."""
        colours: Final[dict[str, int]] = {}
        for lbl, col in self.assignment.items():
            new = mapping.get(lbl, lbl)
            if new in colours:
                raise ColouringError(f"Relabelling maps two elements onto {new}")
            colours[new] = col
        return CircularColouring(p=self.p, q=self.q, assignment=colours, meta=dict(self.meta))

    def with_meta(self, **notes: str) -> 'CircularColouring':
        """Return a copy with additional provenance notes."""
        meta: Final[dict[str, str]] = dict(self.meta)
        meta.update(notes)
        return CircularColouring(p=self.p, q=self.q, assignment=self.assignment, meta=meta)


def check(t: TotalConflictGraph, c: CircularColouring) -> list[Violation]:
    """Return every adjacent pair of <t> that <c> colours too closely.

    An empty list means <c> is a valid (p,q)-colouring of <t>. The colouring
    must cover exactly the elements of <t>.
    """
    labels: Final[list[str]] = t.labels
    missing: Final[list[str]] = sorted(set(labels) - c.labels)
    if len(missing) > 0:
        raise ColouringError(f"{len(missing)} elements are not coloured: "
                             f"{', '.join(missing[:8])}")
    extra: Final[list[str]] = sorted(c.labels - set(labels))
    if len(extra) > 0:
        raise ColouringError(f"{len(extra)} coloured elements are not in the graph: "
                             f"{', '.join(extra[:8])}")

    colours: Final[list[int]] = [c.assignment[lbl] for lbl in labels]
    low: Final[int] = c.q
    high: Final[int] = c.p - c.q
    violations: list[Violation] = []

    for i, j in t.pairs():
        d = abs(colours[i] - colours[j])
        if d < low:
            bound = Bound.Lower
        elif d > high:
            bound = Bound.Upper
        else:
            continue
        violations.append(Violation(a=labels[i],
                                    b=labels[j],
                                    colour_a=colours[i],
                                    colour_b=colours[j],
                                    bound=bound))

    return violations


def is_valid(t: TotalConflictGraph, c: CircularColouring) -> bool:
    """Return True if <c> is a valid colouring of <t>."""
    return len(check(t, c)) == 0


def shift(c: CircularColouring, s: int) -> CircularColouring:
    """Add <s> to every colour, modulo p."""
    return CircularColouring(p=c.p,
                             q=c.q,
                             assignment={lbl: (col + s) % c.p
                                         for lbl, col in c.assignment.items()},
                             meta=dict(c.meta))


def scale(c: CircularColouring, n: int) -> CircularColouring:
    """Multiply every colour by <n>, turning a (p,q)-colouring into an (np+1,nq)-colouring.

    The extra colour leaves a slack of 1 between the largest colour n(p-1)
    and 0 that the boundary tweaks use.
    """
    if n < 1:
        raise ColouringError(f"Scale factor must be positive, got {n}")
    return CircularColouring(p=n * c.p + 1,
                             q=n * c.q,
                             assignment={lbl: col * n for lbl, col in c.assignment.items()},
                             meta=dict(c.meta))


def merge(parts: Sequence[tuple[str, CircularColouring]],
          joins: Sequence[tuple[str, str, str]] = ()) -> CircularColouring:
    """Combine colourings of the blocks of a disjoint union, then join half-edges.

    Each part is (prefix, colouring) with the same prefix convention as
    hegraph.disjoint_union. Each join (h1, h2, label) replaces the half-edges
    h1 and h2, which must carry the same colour, by the edge <label> in that
    colour. The result is not checked; that is up to the caller.
    """
    if len(parts) == 0:
        raise ColouringError("Nothing to merge")

    p: Final[int] = parts[0][1].p
    q: Final[int] = parts[0][1].q
    colours: dict[str, int] = {}

    for pfx, part in parts:
        if (part.p, part.q) != (p, q):
            raise ColouringError(f"Cannot merge a ({part.p},{part.q})-colouring "
                                 f"with a ({p},{q})-colouring")
        for lbl, col in part.assignment.items():
            name = prefixed(pfx, lbl)
            if name in colours:
                raise ColouringError(f"Element {name} is coloured by more than one part")
            colours[name] = col

    for h1, h2, lbl in joins:
        for h in (h1, h2):
            if h not in colours:
                raise ColouringError(f"Cannot join {h}: not coloured")
        if colours[h1] != colours[h2]:
            raise ColouringError(f"Cannot join {h1} (colour {colours[h1]}) with "
                                 f"{h2} (colour {colours[h2]})")
        if lbl in colours:
            raise ColouringError(f"Joined edge {lbl} is already coloured")
        colours[lbl] = colours.pop(h1)
        del colours[h2]

    return CircularColouring(p=p, q=q, assignment=colours)

# Local Variables: #
# python-indent: 4 #
# End: #
