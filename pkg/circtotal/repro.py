#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 23:20:04 krylon>
#
# /data/code/python/circtotal/src/circtotal/repro.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.repro

(c) 2025 Benjamin Walkenhorst

Replay the known results: the constructive upper bounds, the type 2 lower
bounds, and the exact values computed by the solver. Every claim becomes
one row of a summary table and one record in the ledger.
"""

import logging
import random
import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from typing import Final

from circtotal import common
from circtotal.colouring import CircularColouring, frac_str, is_valid
from circtotal.constructions import (assemble_k3, assemble_thm_improve,
                                     assemble_thm_lim, back_circulant,
                                     boundary, colour_all0, colour_refine,
                                     colour_tweak)
from circtotal.database import Database, RunRecord
from circtotal.fileio import parse_graph, serialize_graph
from circtotal.hegraph import (Family, HalfEdgeGraph, gen_classic,
                               gen_complete_bipartite, gen_cycle, gen_gkn,
                               gen_hk, gen_hprime, gen_moebius, gen_prism,
                               is_bipartite, is_isomorphic,
                               total_conflict_graph)
from circtotal.properties import (PropertyReport, Sample,
                                  brute_force_agreement,
                                  constructive_colourings, random_colourings,
                                  random_graphs, scale_property,
                                  shift_invariance, symmetry_soundness)
from circtotal.solver import (ChiStatus, Outcome, SearchConfig,
                              candidate_fractions, chi_total, feasible,
                              verify_half_edge_uniform)


class Suite(Enum):
    """The suites repro can replay."""

    Fast = auto()
    Full = auto()

    @classmethod
    def from_str(cls, name: str) -> 'Suite':
        """Create a Suite from its command line name."""
        match name.lower():
            case "fast":
                return cls.Fast
            case "full":
                return cls.Full
            case _:
                raise ValueError(f"Invalid suite '{name}'")


@dataclass(kw_only=True, slots=True)
class Verdict:
    """What a claim turned out to be."""

    outcome: str
    ok: bool
    nodes: int = 0


@dataclass(kw_only=True, slots=True)
class Claim:
    """A claim to replay: a name, the expected result, and how to check it."""

    name: str
    expected: str
    run: Callable[[SearchConfig], Verdict]


# Constructive upper bounds

def _all0_sweep(_cfg: SearchConfig) -> Verdict:
    good: int = 0
    for k in range(2, 11):
        if is_valid(total_conflict_graph(gen_hk(k)), colour_all0(k, back_circulant(k))):
            good += 1
    return Verdict(outcome=f"{good}/9 valid", ok=good == 9)


def _tweak_sweep(_cfg: SearchConfig) -> Verdict:
    good: int = 0
    total: int = 0
    for k in range(2, 9):
        t = total_conflict_graph(gen_hk(k))
        for n in range(1, 11):
            total += 1
            c = colour_tweak(k, n)
            prof = boundary(c, "e1", "e2", "x1", "x2").astuple()
            if is_valid(t, c) and prof == (0, 1, n+1, n*k+1):
                good += 1
    return Verdict(outcome=f"{good}/{total} valid, boundary exact", ok=good == total)


def _refine_sweep(_cfg: SearchConfig) -> Verdict:
    good: int = 0
    total: int = 0
    for k in range(2, 9):
        t = total_conflict_graph(gen_hk(k))
        for q in range(1, 11):
            total += 1
            c = colour_refine(k, q)
            prof = boundary(c, f"e{k}", "e1", f"x{k}", "x1").astuple()
            if is_valid(t, c) and prof == (0, 2, q*k+1, q+2):
                good += 1
    return Verdict(outcome=f"{good}/{total} valid, boundary exact", ok=good == total)


def _assembly_sweep(params: list[tuple[int, int]],
                    make: Callable[[int, int], CircularColouring],
                    ratio: Callable[[int, int], Fraction]) -> Verdict:
    good: int = 0
    for k, n in params:
        c = make(k, n)
        if c.ratio == ratio(k, n) and is_valid(total_conflict_graph(gen_gkn(k, n)), c):
            good += 1
    return Verdict(outcome=f"{good}/{len(params)} valid", ok=good == len(params))


def _lim_sweep(_cfg: SearchConfig) -> Verdict:
    return _assembly_sweep([(k, n) for k in range(2, 9) for n in range(1, 11)],
                           assemble_thm_lim,
                           lambda k, n: Fraction(n*(k+1)+1, n))


def _improve_sweep(_cfg: SearchConfig) -> Verdict:
    return _assembly_sweep([(k, n) for k in range(4, 9) for n in range(1, 7)],
                           assemble_thm_improve,
                           lambda k, n: Fraction(2*n*(k+1)+1, 2*n))


def _k3_sweep(_cfg: SearchConfig) -> Verdict:
    return _assembly_sweep([(3, n) for n in range(1, 7)],
                           lambda _k, n: assemble_k3(n),
                           lambda _k, n: Fraction(8*n-3, 2*n-1))


# Lower bounds

def _type2(k: int, n: int) -> Callable[[SearchConfig], Verdict]:
    def run(cfg: SearchConfig) -> Verdict:
        res = feasible(total_conflict_graph(gen_gkn(k, n)), k+1, 1, cfg)
        return Verdict(outcome=res.status.name.lower(),
                       ok=res.status == Outcome.Infeasible,
                       nodes=res.nodes)
    return run


def _uniform(k: int) -> Callable[[SearchConfig], Verdict]:
    def run(_cfg: SearchConfig) -> Verdict:
        rep = verify_half_edge_uniform(k)
        return Verdict(outcome=f"{str(rep.uniform).lower()} ({rep.colourings} colourings)",
                       ok=rep.uniform)
    return run


# Exact values

def _chi(g: HalfEdgeGraph, expected: Fraction, strict: bool) -> Callable[[SearchConfig], Verdict]:
    """Compute chi_total of <g>. A bracket counts if <strict> is False and it
    contains <expected>."""
    def run(cfg: SearchConfig) -> Verdict:
        res = chi_total(g, cfg)
        if res.status == ChiStatus.Exact:
            assert res.value is not None
            return Verdict(outcome=f"exact {frac_str(res.value)}",
                           ok=res.value == expected,
                           nodes=res.nodes)
        return Verdict(outcome=f"bounded ({frac_str(res.lower)}, {frac_str(res.upper)}]",
                       ok=not strict and res.lower < expected <= res.upper,
                       nodes=res.nodes)
    return run


def _chi_partial(g: HalfEdgeGraph, expected: Fraction) -> Callable[[SearchConfig], Verdict]:
    """Compute chi_total of <g>. If the search only brackets the value, the
    claim holds when the bracket contains <expected>, <g> is feasible at
    <expected>, and infeasible at the three largest fractions with
    denominator at most 7 between the clique bound and <expected>."""
    def run(cfg: SearchConfig) -> Verdict:
        res = chi_total(g, cfg)
        if res.status == ChiStatus.Exact:
            assert res.value is not None
            return Verdict(outcome=f"exact {frac_str(res.value)}",
                           ok=res.value == expected,
                           nodes=res.nodes)

        t = total_conflict_graph(g)
        clique = Fraction(g.degree_report().max_degree_with_half_edges + 1)
        below = [f for f in candidate_fractions(clique, expected, 7) if f < expected][-3:]
        nodes: int = res.nodes
        at = feasible(t, expected.numerator, expected.denominator, cfg)
        nodes += at.nodes
        infeasible: list[str] = []
        for frac in below:
            sub = feasible(t, frac.numerator, frac.denominator, cfg)
            nodes += sub.nodes
            if sub.status == Outcome.Infeasible:
                infeasible.append(frac_str(frac))
        bracket: Final[bool] = res.lower < expected <= res.upper
        return Verdict(outcome=f"bounded ({frac_str(res.lower)}, {frac_str(res.upper)}], "
                       f"{at.status.name.lower()} at {frac_str(expected)}, "
                       f"infeasible at {len(infeasible)}/{len(below)} below",
                       ok=bracket and at.feasible and len(infeasible) == len(below),
                       nodes=nodes)
    return run


# Properties

def _reference_graphs(cfg: SearchConfig) -> list[HalfEdgeGraph]:
    fixed: Final[list[HalfEdgeGraph]] = [gen_cycle(m) for m in range(3, 7)]
    fixed.extend([gen_hk(2), gen_gkn(2, 1), gen_complete_bipartite(1, 3)])
    return fixed + [g for g in random_graphs(random.Random(cfg.seed), 200)
                    if total_conflict_graph(g).size <= 12]


def _verdict(rep: PropertyReport, nodes: int = 0) -> Verdict:
    outcome: str = rep.summary()
    if not rep.holds:
        outcome += f", first failure: {rep.failures[0]}"
    return Verdict(outcome=outcome, ok=rep.holds and rep.checked > 0, nodes=nodes)


def _shift_claim(cfg: SearchConfig) -> Verdict:
    rng: Final[random.Random] = random.Random(cfg.seed)
    samples: Final[list[Sample]] = random_colourings(rng, 20, cfg)
    rep: Final[PropertyReport] = shift_invariance(samples, rng, 100)
    if len(samples) < 20:
        rep.fail(f"only {len(samples)} random colourings found")
    return _verdict(rep)


def _scale_claim(_cfg: SearchConfig) -> Verdict:
    return _verdict(scale_property(constructive_colourings(), 8))


def _agreement_claim(cfg: SearchConfig) -> Verdict:
    return _verdict(brute_force_agreement(_reference_graphs(cfg), cfg))


def _symmetry_claim(cfg: SearchConfig) -> Verdict:
    return _verdict(symmetry_soundness(_reference_graphs(cfg), cfg))


# Structure

def _cycle_iso(_cfg: SearchConfig) -> Verdict:
    good: Final[int] = sum(1 for n in range(1, 6)
                           if is_isomorphic(gen_gkn(2, n), gen_cycle(3*n+1)))
    return Verdict(outcome=f"{good}/5 isomorphic", ok=good == 5)


def _bipartite(_cfg: SearchConfig) -> Verdict:
    odd: Final[list[tuple[int, int]]] = [(k, n) for k in range(2, 7) for n in (1, 3, 5, 7)]
    good: Final[int] = sum(1 for k, n in odd if is_bipartite(gen_gkn(k, n)).bipartite)
    even: Final[list[tuple[int, int]]] = [(k, n) for k in range(3, 7) for n in (2, 4)]
    witnessed: Final[int] = sum(1 for k, n in even
                                if is_bipartite(gen_gkn(k, n)).odd_cycle is not None)
    return Verdict(outcome=f"{good}/{len(odd)} odd n bipartite, "
                   f"{witnessed}/{len(even)} even n with odd cycle",
                   ok=good == len(odd))


def _roundtrip(_cfg: SearchConfig) -> Verdict:
    graphs: Final[list[HalfEdgeGraph]] = [
        gen_hk(4),
        gen_hprime(5),
        gen_gkn(3, 2),
        gen_gkn(4, 3),
        gen_cycle(7),
        gen_moebius(4),
        gen_prism(5),
        gen_classic(Family.CompleteBipartite, 3, 4),
    ]
    good: Final[int] = sum(1 for g in graphs if parse_graph(serialize_graph(g)) == g)
    return Verdict(outcome=f"{good}/{len(graphs)} identical", ok=good == len(graphs))


def claims(suite: Suite) -> list[Claim]:
    """Return the claims of <suite>, in a fixed order."""
    cl: list[Claim] = [
        Claim(name="all0 H_k, k=2..10", expected="all valid", run=_all0_sweep),
        Claim(name="tweak H_k, k=2..8, n=1..10", expected="all valid", run=_tweak_sweep),
        Claim(name="refine H_k, k=2..8, q=1..10", expected="all valid", run=_refine_sweep),
        Claim(name="thm-lim G_(k,n), k=2..8, n=1..10", expected="all valid", run=_lim_sweep),
        Claim(name="thm-improve G_(k,n), k=4..8, n=1..6",
              expected="all valid",
              run=_improve_sweep),
        Claim(name="thm-k3 G_(3,n), n=1..6", expected="all valid", run=_k3_sweep),
    ]

    for k, n in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)):
        cl.append(Claim(name=f"type 2 G_({k},{n})", expected="infeasible", run=_type2(k, n)))

    for k in (2, 3):
        cl.append(Claim(name=f"uniform half-edges H_{k}", expected="true", run=_uniform(k)))

    exact: list[tuple[str, HalfEdgeGraph, Fraction]] = [
        ("C_4", gen_cycle(4), Fraction(4)),
        ("C_6", gen_cycle(6), Fraction(3)),
        ("C_7", gen_cycle(7), Fraction(7, 2)),
        ("G_(3,1)", gen_gkn(3, 1), Fraction(9, 2)),
        ("V_8", gen_moebius(4), Fraction(9, 2)),
    ]
    for name, g, val in exact:
        cl.append(Claim(name=f"chi {name}", expected=frac_str(val), run=_chi(g, val, True)))

    cl.extend([
        Claim(name="G_(2,n) ~ C_(3n+1), n=1..5", expected="all isomorphic", run=_cycle_iso),
        Claim(name="G_(k,n) bipartite, odd n", expected="all bipartite", run=_bipartite),
        Claim(name="heg round trip", expected="all identical", run=_roundtrip),
        Claim(name="shift invariance, 20 x 100 shifts", expected="all hold", run=_shift_claim),
        Claim(name="scale property, n=1..8", expected="all hold", run=_scale_claim),
        Claim(name="search = exhaustive, p<=7, q<=2", expected="all hold", run=_agreement_claim),
        Claim(name="symmetry breaking sound", expected="all hold", run=_symmetry_claim),
    ])

    if suite == Suite.Full:
        medium: list[tuple[str, HalfEdgeGraph, Fraction]] = [
            ("G_(3,2)", gen_gkn(3, 2), Fraction(13, 3)),
            ("K_2xC_5", gen_prism(5), Fraction(13, 3)),
            ("G_(4,1)", gen_gkn(4, 1), Fraction(11, 2)),
        ]
        for name, g, val in medium:
            cl.append(Claim(name=f"chi {name}", expected=frac_str(val), run=_chi_partial(g, val)))

        stretch: list[tuple[str, HalfEdgeGraph, Fraction]] = [
            ("G_(3,3)", gen_gkn(3, 3), Fraction(21, 5)),
            ("G_(4,2)", gen_gkn(4, 2), Fraction(21, 4)),
            ("V_10", gen_moebius(5), Fraction(9, 2)),
            ("V_12", gen_moebius(6), Fraction(9, 2)),
        ]
        for name, g, val in stretch:
            cl.append(Claim(name=f"chi {name}", expected=frac_str(val), run=_chi(g, val, False)))

    return cl


class Runner:
    """Runner replays the claims of a suite and records the results."""

    __slots__ = [
        "log",
        "cfg",
        "record",
    ]

    log: logging.Logger
    cfg: SearchConfig
    record: bool

    def __init__(self, cfg: SearchConfig, record: bool = True) -> None:
        self.log = common.get_logger("repro")
        self.cfg = cfg
        self.record = record

    def run_claim(self, suite: Suite, claim: Claim) -> RunRecord:
        """Check a single claim. Package errors count as a failed claim."""
        self.log.debug("Check %s", claim.name)
        started: Final[float] = time.monotonic()
        try:
            v: Verdict = claim.run(self.cfg)
        except common.CircTotalError as err:
            cname: Final[str] = err.__class__.__name__
            self.log.error("%s checking %s: %s", cname, claim.name, err)
            v = Verdict(outcome=f"error: {cname}", ok=False)

        return RunRecord(suite=suite.name.lower(),
                         name=claim.name,
                         expected=claim.expected,
                         outcome=v.outcome,
                         ok=v.ok,
                         nodes=v.nodes,
                         seconds=time.monotonic() - started)

    def run(self, suite: Suite) -> list[RunRecord]:
        """Replay every claim of <suite>, in order."""
        self.log.info("Replay %s suite", suite.name.lower())
        results: list[RunRecord] = []
        for claim in claims(suite):
            res = self.run_claim(suite, claim)
            level = logging.INFO if res.ok else logging.ERROR
            self.log.log(level, "%-40s %s", res.name, res.outcome)
            results.append(res)

        if self.record:
            db: Database = Database()
            try:
                with db:
                    for res in results:
                        db.run_add(res)
            finally:
                db.close()

        return results


def table(results: list[RunRecord]) -> str:
    """Render <results> as a fixed-width table."""
    head: Final[tuple[str, ...]] = ("claim", "expected", "outcome", "ok", "nodes", "seconds")
    rows: list[tuple[str, ...]] = [head]
    rows.extend((r.name,
                 r.expected,
                 r.outcome,
                 "yes" if r.ok else "NO",
                 str(r.nodes),
                 f"{r.seconds:.2f}") for r in results)
    widths: Final[list[int]] = [max(len(row[i]) for row in rows) for i in range(len(head))]
    lines: list[str] = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                        for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    failed: Final[int] = sum(1 for r in results if not r.ok)
    lines.append("")
    lines.append(f"{len(results) - failed}/{len(results)} claims hold")
    return "\n".join(lines) + "\n"


def history(limit: int = 20) -> str:
    """Render the <limit> most recent runs in the ledger, newest first."""
    db: Final[Database] = Database()
    try:
        runs: Final[list[RunRecord]] = db.run_get_recent(limit)
        total: Final[int] = db.run_get_count()
    finally:
        db.close()

    lines: Final[list[str]] = [f"{r.stamp.strftime(common.TimeFmt)}  {r.suite:<4}  "
                               f"{'yes' if r.ok else 'NO':<3}  {r.name}: {r.outcome}"
                               for r in runs]
    lines.append(f"{len(runs)} of {total} recorded runs")
    return "\n".join(lines) + "\n"

# Local Variables: #
# python-indent: 4 #
# End: #
