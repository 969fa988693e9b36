#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 14:02:37 krylon>
#
# /data/code/python/circtotal/src/circtotal/properties.py
# created on 19. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.properties

(c) 2025 Benjamin Walkenhorst

Randomised and exhaustive checks of properties the colourings and the
solver must have. Each check returns a PropertyReport listing what went
wrong, so the tests and repro can share them.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Final, Optional

from circtotal import common
from circtotal.colouring import CircularColouring, check, frac_str, scale, shift
from circtotal.constructions import (assemble_k3, assemble_thm_improve,
                                     assemble_thm_lim, back_circulant,
                                     colour_all0, colour_refine, colour_tweak)
from circtotal.hegraph import (HalfEdgeGraph, TotalConflictGraph, gen_gkn,
                               gen_hk, gen_random, total_conflict_graph)
from circtotal.solver import (Outcome, SearchConfig, brute_force, feasible)

# A labelled colouring together with the conflict graph it belongs to.
Sample = tuple[str, TotalConflictGraph, CircularColouring]


@dataclass(kw_only=True, slots=True)
class PropertyReport:
    """How many instances a check looked at, and which ones failed."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """Return True if no instance failed."""
        return len(self.failures) == 0

    def fail(self, msg: str) -> None:
        """Note a failed instance."""
        self.failures.append(msg)

    def summary(self) -> str:
        """Return a one-line summary."""
        return f"{self.checked - len(self.failures)}/{self.checked} hold"


def random_graphs(rng: random.Random, count: int, max_elements: int = 12) -> list[HalfEdgeGraph]:
    """Draw <count> graphs with at most <max_elements> elements each."""
    return [gen_random(rng, max_elements) for _ in range(count)]


def random_colourings(rng: random.Random,
                      count: int,
                      cfg: Optional[SearchConfig] = None,
                      max_elements: int = 12) -> list[Sample]:
    """Return valid colourings of <count> random graphs.

    Each graph gets a random ratio of at least D+2, D its maximum degree,
    and the solver supplies the colouring. Graphs without adjacent elements
    or without a colouring at the ratio drawn are skipped.
    """
    log: Final[logging.Logger] = common.get_logger("properties")
    out: list[Sample] = []
    attempts: int = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        g = gen_random(rng, max_elements)
        t = total_conflict_graph(g)
        if t.pair_count == 0:
            continue
        q = rng.randint(1, 3)
        p = (g.degree_report().max_degree_with_half_edges + 2) * q + rng.randint(0, q)
        res = feasible(t, p, q, cfg)
        if res.certificate is None:
            log.debug("No (%d,%d)-colouring of a random graph, skip it", p, q)
            continue
        out.append((f"random #{len(out)} ({p},{q})", t, res.certificate))
    return out


def constructive_colourings(kmax: int = 8, nmax: int = 10) -> list[Sample]:
    """Return the colourings built by the constructions, for k <= kmax and
    n, q <= nmax (n <= 6 for the improved and the k = 3 assemblies)."""
    out: list[Sample] = []
    for k in range(2, kmax+1):
        hk = total_conflict_graph(gen_hk(k))
        out.append((f"all0 k={k}", hk, colour_all0(k, back_circulant(k))))
        for n in range(1, nmax+1):
            out.append((f"tweak k={k} n={n}", hk, colour_tweak(k, n)))
            out.append((f"refine k={k} q={n}", hk, colour_refine(k, n)))
            out.append((f"thm-lim k={k} n={n}",
                        total_conflict_graph(gen_gkn(k, n)),
                        assemble_thm_lim(k, n)))
            if k >= 4 and n <= 6:
                out.append((f"thm-improve k={k} n={n}",
                            total_conflict_graph(gen_gkn(k, n)),
                            assemble_thm_improve(k, n)))
    for n in range(1, min(nmax, 6)+1):
        out.append((f"thm-k3 n={n}", total_conflict_graph(gen_gkn(3, n)), assemble_k3(n)))
    return out


def shift_invariance(samples: list[Sample],
                     rng: random.Random,
                     shifts: int = 100) -> PropertyReport:
    """Shift every sample by <shifts> random amounts, each must stay valid."""
    rep: Final[PropertyReport] = PropertyReport(name="shift invariance")
    for name, t, c in samples:
        for _ in range(shifts):
            s = rng.randint(-3 * c.p, 3 * c.p)
            rep.checked += 1
            violations = check(t, shift(c, s))
            if len(violations) > 0:
                rep.fail(f"{name} shifted by {s}: {violations[0].describe(c.p, c.q)}")
    return rep


def scale_property(samples: list[Sample], nmax: int = 8) -> PropertyReport:
    """A (p,q)-colouring scaled by n must be a valid (np+1,nq)-colouring, n <= nmax."""
    rep: Final[PropertyReport] = PropertyReport(name="scale property")
    for name, t, c in samples:
        for n in range(1, nmax+1):
            rep.checked += 1
            sc = scale(c, n)
            if (sc.p, sc.q) != (n*c.p + 1, n*c.q):
                rep.fail(f"{name} scaled by {n} is a ({sc.p},{sc.q})-colouring")
                continue
            violations = check(t, sc)
            if len(violations) > 0:
                rep.fail(f"{name} scaled by {n}: {violations[0].describe(sc.p, sc.q)}")
    return rep


def _ratios(pmax: int, qmax: int) -> list[tuple[int, int]]:
    return [(p, q) for q in range(1, qmax+1) for p in range(2*q, pmax+1)]


def brute_force_agreement(graphs: list[HalfEdgeGraph],
                          cfg: Optional[SearchConfig] = None,
                          pmax: int = 7,
                          qmax: int = 2) -> PropertyReport:
    """The search and the exhaustive reference must agree on every graph at
    every (p,q) with 2q <= p <= pmax, q <= qmax."""
    rep: Final[PropertyReport] = PropertyReport(name="search = exhaustive")
    for num, g in enumerate(graphs):
        t = total_conflict_graph(g)
        for p, q in _ratios(pmax, qmax):
            rep.checked += 1
            res = feasible(t, p, q, cfg)
            if res.status == Outcome.Timeout:
                rep.fail(f"graph #{num} at ({p},{q}): timeout")
            elif res.feasible != (brute_force(t, p, q) is not None):
                rep.fail(f"graph #{num} at ({p},{q}): search says {res.status.name}")
    return rep


def symmetry_soundness(graphs: list[HalfEdgeGraph],
                       cfg: Optional[SearchConfig] = None,
                       pmax: int = 7,
                       qmax: int = 2) -> PropertyReport:
    """Pinning an element must never change the answer of the search."""
    base: Final[SearchConfig] = cfg if cfg is not None else SearchConfig()
    on: Final[SearchConfig] = SearchConfig(time_budget=base.time_budget, symmetry_breaking=True)
    off: Final[SearchConfig] = SearchConfig(time_budget=base.time_budget, symmetry_breaking=False)
    rep: Final[PropertyReport] = PropertyReport(name="symmetry breaking sound")
    for num, g in enumerate(graphs):
        t = total_conflict_graph(g)
        for p, q in _ratios(pmax, qmax):
            rep.checked += 1
            pinned, free = feasible(t, p, q, on).status, feasible(t, p, q, off).status
            if pinned != free:
                rep.fail(f"graph #{num} at ({p},{q}): {pinned.name} with pin, "
                         f"{free.name} without")
    return rep


def monotonicity(t: TotalConflictGraph,
                 cands: list[Fraction],
                 cfg: Optional[SearchConfig] = None) -> PropertyReport:
    """Above the first feasible candidate, every candidate must be feasible."""
    rep: Final[PropertyReport] = PropertyReport(name="monotonicity")
    first: Optional[Fraction] = None
    for frac in sorted(cands):
        rep.checked += 1
        res = feasible(t, frac.numerator, frac.denominator, cfg)
        if res.feasible:
            first = first if first is not None else frac
        elif first is not None:
            rep.fail(f"{frac_str(frac)} is {res.status.name} "
                     f"above feasible {frac_str(first)}")
    return rep


def determinism(t: TotalConflictGraph,
                ratios: list[tuple[int, int]],
                cfg: Optional[SearchConfig] = None) -> PropertyReport:
    """Running the same search twice must give the same answer, certificate
    and node count."""
    rep: Final[PropertyReport] = PropertyReport(name="determinism")
    for p, q in ratios:
        rep.checked += 1
        a, b = feasible(t, p, q, cfg), feasible(t, p, q, cfg)
        if (a.status, a.nodes, a.certificate) != (b.status, b.nodes, b.certificate):
            rep.fail(f"({p},{q}): {a.status.name}/{a.nodes} then {b.status.name}/{b.nodes}")
    return rep

# Local Variables: #
# python-indent: 4 #
# End: #
