#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 20:41:17 krylon>
#
# /data/code/python/circtotal/src/circtotal/constructions.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.constructions

(c) 2025 Benjamin Walkenhorst

Explicit circular total colourings of H_k and G_{k,n}.

The colourings of H_k all start from a Latin square L of order k:
c(x_i y_j) = l_ij, c(x_i) = l_i1 and every y_j and half-edge gets 0. This
is a (k+1,1)-colouring. Scaling it by n and moving a few colours into the
slack that scaling leaves behind fixes the colours at two half-edges, and
blocks with fixed boundary colours can be chained into G_{k,n}.

Every assembly of G_{k,n} is checked before it is returned.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum, auto
from typing import Final, Optional

from circtotal import common
from circtotal.colouring import (CircularColouring, ColouringError,
                                 Violation, check, merge, scale, shift)
from circtotal.hegraph import (HalfEdgeGraph, TotalConflictGraph,
                               block_prefix, gen_gkn, gen_hk, gen_hprime,
                               gkn_joins, total_conflict_graph)


class ConstructionError(common.CircTotalError):
    """Base class for errors raised by the constructions."""


class ConstructionFault(ConstructionError):
    """An assembly produced no colouring that passes the checker."""


class ConstructionIncomplete(ConstructionError):
    """A bounded search for a colouring came up empty."""


@dataclass(frozen=True, slots=True)
class LatinSquare:
    """LatinSquare is a k x k array over 1..k with no repeats in any row or column.

    Indices are 1-based, as in l_ij.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_latin(self.rows):
            raise ConstructionError(f"Not a Latin square: {self.rows}")

    @property
    def order(self) -> int:
        """Return the order k of the square."""
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Return l_ij."""
        return self.rows[i-1][j-1]

    def row(self, i: int) -> tuple[int, ...]:
        """Return row i."""
        return self.rows[i-1]

    def col(self, j: int) -> tuple[int, ...]:
        """Return column j."""
        return tuple(r[j-1] for r in self.rows)


def is_latin(rows: tuple[tuple[int, ...], ...] | list[list[int]]) -> bool:
    """Return True if <rows> is a Latin square over 1..k."""
    k: Final[int] = len(rows)
    if k == 0:
        return False
    symbols: Final[set[int]] = set(range(1, k+1))
    if any(len(r) != k or set(r) != symbols for r in rows):
        return False
    return all({r[j] for r in rows} == symbols for j in range(k))


@dataclass(frozen=True, slots=True)
class BoundaryProfile:
    """The colours at the two half-edges of a block and at their end vertices."""

    e: int
    e_prime: int
    x: int
    x_prime: int

    def astuple(self) -> tuple[int, int, int, int]:
        """Return (c(e), c(e'), c(x), c(x'))."""
        return (self.e, self.e_prime, self.x, self.x_prime)


def boundary(c: CircularColouring, e: str, e_prime: str, x: str, x_prime: str) -> BoundaryProfile:
    """Read the BoundaryProfile of <c> at the given elements."""
    return BoundaryProfile(e=c.colour(e),
                           e_prime=c.colour(e_prime),
                           x=c.colour(x),
                           x_prime=c.colour(x_prime))


# Latin squares

def back_circulant(k: int) -> LatinSquare:
    """Return the back-circulant Latin square, l_ij = i+j-1 mod k, in 1..k."""
    if k < 1:
        raise ConstructionError(f"A Latin square needs order >= 1, got {k}")
    return LatinSquare(rows=tuple(tuple(((i + j) % k) + 1 for j in range(k))
                                  for i in range(k)))


def constrained_latin(k: int,
                      rows: tuple[int, int] = (1, 2),
                      values: tuple[int, int] = (1, 0)) -> LatinSquare:
    """Return a Latin square whose row rows[0] starts with values[0] and whose
    row rows[1] starts with values[1].

    A value of 0 stands for k, so the default is a square with l_11 = 1 and
    l_21 = k. The square is obtained from back_circulant(k), whose row i
    starts with i, by swapping rows.
    """
    if k < 2:
        raise ConstructionError(f"constrained_latin needs k >= 2, got {k}")

    want: Final[tuple[int, int]] = (values[0] or k, values[1] or k)
    if rows[0] == rows[1] or want[0] == want[1] or \
       not all(1 <= x <= k for x in rows + want):
        raise ConstructionError(f"Invalid constraints for order {k}: "
                                f"rows {rows}, first entries {want}")

    base: Final[LatinSquare] = back_circulant(k)
    perm: list[int] = list(range(1, k+1))  # perm[pos-1] = source row
    for pos, src in zip(rows, want):
        cur = perm.index(src) + 1
        perm[pos-1], perm[cur-1] = perm[cur-1], perm[pos-1]

    return LatinSquare(rows=tuple(base.row(src) for src in perm))


def random_latin(k: int, rng: random.Random) -> LatinSquare:
    """Return a random Latin square of order k: back_circulant(k) with its
    rows, columns and symbols permuted at random."""
    base: Final[LatinSquare] = back_circulant(k)
    rperm: Final[list[int]] = rng.sample(range(k), k)
    cperm: Final[list[int]] = rng.sample(range(k), k)
    sperm: Final[list[int]] = rng.sample(range(1, k+1), k)
    return LatinSquare(rows=tuple(tuple(sperm[base.rows[r][c] - 1] for c in cperm)
                                  for r in rperm))


# Colourings of H_k

def colour_all0(k: int, sq: LatinSquare) -> CircularColouring:
    """Colour H_k with k+1 colours from the Latin square <sq>.

    c(x_i y_j) = l_ij, c(x_i) = l_i1, and all y_j and half-edges get 0.
    """
    if sq.order != k:
        raise ConstructionError(f"Latin square has order {sq.order}, need {k}")
    if k < 2:
        raise ConstructionError(f"H_k needs k >= 2, got {k}")

    colours: dict[str, int] = {}
    for i in range(1, k+1):
        colours[f"x{i}"] = sq.entry(i, 1)
        colours[f"e{i}"] = 0
        for j in range(2, k+1):
            colours[f"x{i}y{j}"] = sq.entry(i, j)
    for j in range(2, k+1):
        colours[f"y{j}"] = 0

    return CircularColouring(p=k+1, q=1, assignment=colours, meta={"method": "all0"})


def colour_tweak(k: int,
                 n: int,
                 pair: tuple[int, int] = (1, 2),
                 second: int = 0) -> CircularColouring:
    """Colour H_k with an (n(k+1)+1, n)-colouring whose half-edges e = e_a and
    e' = e_b, (a, b) = <pair>, get 0 and 1, while x_a gets n+1 and x_b gets
    n*second+1.

    <second> defaults to k, giving the boundary (0, 1, n+1, nk+1).
    """
    if k < 2 or n < 1:
        raise ConstructionError(f"colour_tweak needs k >= 2 and n >= 1, got k = {k}, n = {n}")
    second = second or k
    if not 2 <= second <= k:
        raise ConstructionError(f"First entry of row x' must be in 2..{k}, got {second}")

    a, b = pair
    sq: Final[LatinSquare] = constrained_latin(k, rows=(a, b), values=(1, second))
    c: CircularColouring = scale(colour_all0(k, sq), n)
    # e_a sits at x_a, coloured n; -1 keeps it clear of the row colours 2n..kn.
    c = c.recoloured({f"e{a}": -1})
    c = shift(c, 1)

    return c.with_meta(method="tweak",
                       k=str(k),
                       n=str(n),
                       pair=f"{a},{b}",
                       second=str(second))


def colour_tweak_variant(q: int) -> CircularColouring:
    """Colour H_3 with a (4q+1, q)-colouring with boundary (0, 1, q+1, 2q+1)
    at (e_1, e_2, x_1, x_2)."""
    return colour_tweak(3, q, pair=(1, 2), second=2).with_meta(method="tweak-variant")


def colour_refine(k: int, q: int) -> CircularColouring:
    """Colour H_k with a (q(k+1)+1, q)-colouring with boundary (0, 2, qk+1, q+2)
    at (e_k, e_1, x_k, x_1).

    Scaling the back-circulant colouring by q leaves a slack of 1 between
    qk and 0. At every x_i with i < k the colours at or above c(x_i) move up
    by one into that slack, which frees room for e_1 = 1 and e_k = -1.
    """
    if k < 2 or q < 1:
        raise ConstructionError(f"colour_refine needs k >= 2 and q >= 1, got k = {k}, q = {q}")

    c: CircularColouring = scale(colour_all0(k, back_circulant(k)), q)
    bump: dict[str, int] = {}
    for i in range(1, k):
        bump[f"x{i}"] = c.colour(f"x{i}") + 1
    for i in range(1, k+1):
        for j in range(2, k+2-i):
            bump[f"x{i}y{j}"] = c.colour(f"x{i}y{j}") + 1
    bump["e1"] = 1
    bump[f"e{k}"] = -1

    c = shift(c.recoloured(bump), 1)
    return c.with_meta(method="refine", k=str(k), q=str(q))


def _index_perm(k: int, src: tuple[int, int], dst: tuple[int, int]) -> dict[int, int]:
    perm: dict[int, int] = dict(zip(src, dst))
    if len(perm) != 2 or len(set(perm.values())) != 2 or \
       not all(1 <= x <= k for x in src + dst):
        raise ConstructionError(f"Invalid orientation {src} -> {dst} for k = {k}")
    rest_src: Final[list[int]] = [i for i in range(1, k+1) if i not in perm]
    rest_dst: Final[list[int]] = [i for i in range(1, k+1) if i not in perm.values()]
    perm.update(zip(rest_src, rest_dst))
    return perm


def orient(c: CircularColouring,
           k: int,
           src: tuple[int, int],
           dst: tuple[int, int]) -> CircularColouring:
    """Carry a colouring of (a subgraph of) H_k along the automorphism of H_k
    that permutes the x_i so that x_src[0] goes to x_dst[0] and x_src[1] to
    x_dst[1]. The remaining indices keep their relative order."""
    perm: Final[dict[int, int]] = _index_perm(k, src, dst)
    mapping: dict[str, str] = {}
    for i, t in perm.items():
        mapping[f"x{i}"] = f"x{t}"
        mapping[f"e{i}"] = f"e{t}"
        for j in range(2, k+1):
            mapping[f"x{i}y{j}"] = f"x{t}y{j}"

    return c.relabelled(mapping).with_meta(orientation=f"{src}->{dst}")


# Assemblies of G_{k,n}

def _chain(k: int,
           blocks: list[CircularColouring],
           u_colour: int) -> CircularColouring:
    """Chain colourings of H'_k (half-edges e1 and ek) into a colouring of G_{k,n}.

    Block i is shifted so that its incoming half-edge e1 matches the colour
    the previous block gave its outgoing half-edge ek; block 1 is shifted so
    that e_0 gets 0.
    """
    n: Final[int] = len(blocks)
    p: Final[int] = blocks[0].p
    q: Final[int] = blocks[0].q
    parts: list[tuple[str, CircularColouring]] = []
    carry: int = 0

    for i, blk in enumerate(blocks, 1):
        moved = shift(blk, carry - blk.colour("e1"))
        parts.append((block_prefix(i), moved))
        carry = moved.colour(f"e{k}")

    b0: Final[CircularColouring] = CircularColouring(
        p=p,
        q=q,
        assignment={"u": u_colour % p, "f0": 0, f"f'{n+1}": carry})
    parts.insert(0, ("", b0))

    return merge(parts, gkn_joins(k, n))


def _hprime_block(c: CircularColouring, k: int) -> CircularColouring:
    return c.restricted(gen_hprime(k).labels)


def _try_assembly(k: int,
                  n: int,
                  blocks: list[CircularColouring],
                  u_colour: int,
                  target: Optional[HalfEdgeGraph] = None) -> Optional[CircularColouring]:
    """Chain <blocks> and return the result if it passes the checker."""
    log: Final[logging.Logger] = common.get_logger("constructions")
    if target is None:
        target = gen_gkn(k, n)
    try:
        c: Final[CircularColouring] = _chain(k, blocks, u_colour)
    except ColouringError as err:
        log.debug("Chaining blocks failed: %s", err)
        return None

    violations: Final[list[Violation]] = check(total_conflict_graph(target), c)
    if len(violations) > 0:
        log.debug("Assembly of G_(%d,%d) has %d violations, first: %s",
                  k,
                  n,
                  len(violations),
                  violations[0].describe(c.p, c.q))
        return None
    return c


def _cycle_walk(n: int) -> CircularColouring:
    """Colour G_{2,n}, which is the cycle C_{3n+1}, with a (3n+1, n)-colouring.

    Along the closed walk u, e0, B1.x1, B1.x1y2, B1.y2, B1.x2y2, B1.x2, e1,
    B2.x1, ... the element at position t gets t*n mod (3n+1). Elements that
    conflict are one or two steps apart on the walk.
    """
    p: Final[int] = 3*n + 1
    walk: list[str] = ["u", "e0"]
    for i in range(1, n+1):
        pfx = block_prefix(i)
        walk.extend(f"{pfx}.{lbl}" for lbl in ("x1", "x1y2", "y2", "x2y2", "x2"))
        walk.append(f"e{i}")

    return CircularColouring(p=p,
                             q=n,
                             assignment={lbl: (t * n) % p for t, lbl in enumerate(walk)},
                             meta={"method": "thm-lim", "strategy": "cycle-walk"})


def assemble_thm_lim(k: int, n: int) -> CircularColouring:
    """Return an (n(k+1)+1, n)-colouring of G_{k,n}.

    For k >= 3 every block is a copy of colour_tweak(k, n) cut down to H'_k,
    block i shifted by i-1, so that e_i gets i, and u gets 2n+1. G_{2,n} is a
    cycle, where the block endpoints of e_i come too close; it is coloured
    by walking around the cycle instead.
    """
    if k < 2 or n < 1:
        raise ConstructionError(f"assemble_thm_lim needs k >= 2 and n >= 1, got k = {k}, n = {n}")

    log: Final[logging.Logger] = common.get_logger("constructions")
    target: Final[HalfEdgeGraph] = gen_gkn(k, n)

    if k == 2:
        c = _cycle_walk(n)
        if len(check(total_conflict_graph(target), c)) > 0:
            raise ConstructionFault(f"Cycle walk colouring of G_(2,{n}) is invalid")
        return c

    tweak: Final[CircularColouring] = colour_tweak(k, n)
    for dst in ((1, k), (k, 1)):
        blk = _hprime_block(orient(tweak, k, (1, 2), dst), k)
        c = _try_assembly(k, n, [blk] * n, 2*n + 1, target)
        if c is not None:
            log.debug("G_(%d,%d): tweak blocks oriented e, e' -> x%d, x%d",
                      k, n, dst[0], dst[1])
            return c.with_meta(method="thm-lim",
                               orientation=f"e@x{dst[0]},e'@x{dst[1]}",
                               u=str(2*n + 1))
        log.info("G_(%d,%d): orientation e@x%d, e'@x%d fails the checker",
                 k, n, dst[0], dst[1])

    raise ConstructionFault(f"No orientation of the tweak blocks colours G_({k},{n})")


def assemble_thm_improve(k: int, n: int) -> CircularColouring:
    """Return a (2n(k+1)+1, 2n)-colouring of G_{k,n}, k >= 4.

    Every block is a copy of colour_refine(k, 2n) cut down to H'_k, block i
    shifted by 2i-2, so that e_i gets 2i, and u gets 6n.
    """
    if k < 4 or n < 1:
        raise ConstructionError("assemble_thm_improve needs k >= 4 and n >= 1, "
                                f"got k = {k}, n = {n}")

    log: Final[logging.Logger] = common.get_logger("constructions")
    target: Final[HalfEdgeGraph] = gen_gkn(k, n)
    refine: Final[CircularColouring] = colour_refine(k, 2*n)

    # refine colours e_k with 0 and e_1 with 2.
    for dst in ((1, k), (k, 1)):
        blk = _hprime_block(orient(refine, k, (k, 1), dst), k)
        c = _try_assembly(k, n, [blk] * n, 6*n, target)
        if c is not None:
            log.debug("G_(%d,%d): refine blocks oriented e, e' -> x%d, x%d",
                      k, n, dst[0], dst[1])
            return c.with_meta(method="thm-improve",
                               orientation=f"e@x{dst[0]},e'@x{dst[1]}",
                               u=str(6*n))
        log.info("G_(%d,%d): orientation e@x%d, e'@x%d fails the checker",
                 k, n, dst[0], dst[1])

    raise ConstructionFault(f"No orientation of the refine blocks colours G_({k},{n})")


def assemble_k3(n: int) -> CircularColouring:
    """Return an (8n-3, 2n-1)-colouring of G_{3,n}.

    One block is colour_tweak_variant(2n-1), the other n-1 are copies of
    colour_refine(3, 2n-1). The search runs over the position of the tweak
    block (first or last), the orientation of both kinds of block, and the
    colour of u; the block shifts follow from the joins. The first
    combination the checker accepts is returned.
    """
    if n < 1:
        raise ConstructionError(f"assemble_k3 needs n >= 1, got {n}")

    log: Final[logging.Logger] = common.get_logger("constructions")
    q: Final[int] = 2*n - 1
    p: Final[int] = 8*n - 3
    target: Final[HalfEdgeGraph] = gen_gkn(3, n)
    tconf: Final[TotalConflictGraph] = total_conflict_graph(target)
    tweak: Final[CircularColouring] = colour_tweak_variant(q)
    refine: Final[CircularColouring] = colour_refine(3, q)
    orientations: Final[tuple[tuple[int, int], ...]] = ((1, 3), (3, 1))
    tried: int = 0

    for position in ("first", "last"):
        for tdst in orientations:
            tblk = _hprime_block(orient(tweak, 3, (1, 2), tdst), 3)
            for rdst in orientations:
                rblk = _hprime_block(orient(refine, 3, (3, 1), rdst), 3)
                blocks = [rblk] * (n - 1)
                if position == "first":
                    blocks.insert(0, tblk)
                else:
                    blocks.append(tblk)

                try:
                    base = _chain(3, blocks, 0)
                except ColouringError as err:
                    log.debug("Chaining blocks failed: %s", err)
                    continue

                if any("u" not in (v.a, v.b) for v in check(tconf, base)):
                    tried += 1
                    continue

                for u in range(p):
                    tried += 1
                    c = base.recoloured({"u": u})
                    if len(check(tconf, c)) == 0:
                        log.debug("G_(3,%d): tweak block %s, tweak e@x%d, refine e@x%d, u = %d",
                                  n, position, tdst[0], rdst[0], u)
                        return c.with_meta(method="thm-k3",
                                           tweak_position=position,
                                           tweak_orientation=f"e@x{tdst[0]},e'@x{tdst[1]}",
                                           refine_orientation=f"e@x{rdst[0]},e'@x{rdst[1]}",
                                           u=str(u))

    log.info("G_(3,%d): none of %d combinations passes the checker", n, tried)
    raise ConstructionIncomplete(f"No ({p},{q})-colouring of G_(3,{n}) found "
                                 f"among {tried} combinations")


# Dispatch for the command line

class Method(Enum):
    """The constructions that can be run from the command line."""

    All0 = auto()
    Tweak = auto()
    Refine = auto()
    ThmLim = auto()
    ThmImprove = auto()
    ThmK3 = auto()

    @classmethod
    def from_str(cls, name: str) -> 'Method':
        """Create a Method from its command line name."""
        match name.lower():
            case "all0":
                return cls.All0
            case "tweak":
                return cls.Tweak
            case "refine":
                return cls.Refine
            case "thm-lim":
                return cls.ThmLim
            case "thm-improve":
                return cls.ThmImprove
            case "thm-k3":
                return cls.ThmK3
            case _:
                raise ValueError(f"Invalid construction method '{name}'")


def construct(method: Method, k: int, n: int) -> tuple[HalfEdgeGraph, CircularColouring]:
    """Run a construction, return the target graph and its colouring.

    all0, tweak and refine colour H_k (refine uses q = n, all0 ignores n),
    the assemblies colour G_{k,n} (thm-k3 ignores k).
    """
    match method:
        case Method.All0:
            return gen_hk(k), colour_all0(k, back_circulant(k))
        case Method.Tweak:
            return gen_hk(k), colour_tweak(k, n)
        case Method.Refine:
            return gen_hk(k), colour_refine(k, n)
        case Method.ThmLim:
            return gen_gkn(k, n), assemble_thm_lim(k, n)
        case Method.ThmImprove:
            return gen_gkn(k, n), assemble_thm_improve(k, n)
        case Method.ThmK3:
            return gen_gkn(3, n), assemble_k3(n)

# Local Variables: #
# python-indent: 4 #
# End: #
