#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 22:17:40 krylon>
#
# /data/code/python/circtotal/src/circtotal/solver.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.solver

(c) 2025 Benjamin Walkenhorst

Exact search for (p,q)-colourings of total conflict graphs, exhaustive
enumeration of all colourings of small instances, and the computation of
circular total chromatic numbers.

The search is a plain backtracking search with forward checking. Every
element carries a domain of the colours still available to it. Colouring an
element with a removes the arc (a-q, a+q) mod p from the domains of its
neighbours; elements whose domain shrinks to a single colour are coloured
right away, until nothing changes. The next element to branch on is the one
with the smallest domain, ties broken by degree, then by index; colours are
tried in ascending order.
"""

import logging
import math
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import IntEnum, auto
from fractions import Fraction
from typing import Any, Final, Optional, Protocol

from circtotal import common
from circtotal.cache import CacheError, DBType, get_cache
from circtotal.colouring import CircularColouring, check, frac_str
from circtotal.common import CircTotalError
from circtotal.hegraph import (HalfEdgeGraph, TotalConflictGraph, gen_hk,
                               total_conflict_graph)

# Above this many colours domains are kept as lists of intervals.
bit_limit: Final[int] = 64
# enumerate_all and brute_force refuse larger instances unless told otherwise.
enumeration_guard: Final[int] = 20


class SolverError(CircTotalError):
    """SolverError indicates invalid input to the solver."""


class EnumerationGuardError(SolverError):
    """The instance is too large to enumerate all its colourings."""


class SearchTimeout(Exception):
    """Raised inside the search when the time budget is used up."""


class Outcome(IntEnum):
    """The outcome of a feasibility call."""

    Feasible = auto()
    Infeasible = auto()
    Timeout = auto()

    @classmethod
    def from_str(cls, name: str) -> 'Outcome':
        """Create an Outcome from its name."""
        match name.lower():
            case "feasible":
                return cls.Feasible
            case "infeasible":
                return cls.Infeasible
            case "timeout":
                return cls.Timeout
            case _:
                raise ValueError(f"Invalid outcome '{name}'")


@dataclass(kw_only=True, slots=True)
class SearchConfig:
    """Parameters of the search."""

    time_budget: float = 300.0
    qmax: Optional[int] = None
    symmetry_breaking: bool = True
    seed: int = 0
    use_cache: bool = False

    def __post_init__(self) -> None:
        if self.time_budget <= 0:
            raise SolverError(f"Time budget must be positive, got {self.time_budget}")
        if self.qmax is not None and self.qmax < 1:
            raise SolverError(f"qmax must be at least 1, got {self.qmax}")

    @classmethod
    def from_config(cls,
                    cfg: Optional[dict[str, Any]] = None,
                    **overrides: Any) -> 'SearchConfig':
        """Build a SearchConfig from the [solver] table of the configuration file.

        Keyword arguments that are not None take precedence.
        """
        if cfg is None:
            cfg = common.load_config()
        table: Final[dict[str, Any]] = cfg.get("solver", {})
        values: dict[str, Any] = {}
        for key, name in (("timeout", "time_budget"),
                          ("qmax", "qmax"),
                          ("symmetry_breaking", "symmetry_breaking"),
                          ("seed", "seed"),
                          ("use_cache", "use_cache")):
            if key in table:
                values[name] = table[key]
        values.update((k, v) for k, v in overrides.items() if v is not None)
        try:
            return cls(**values)
        except TypeError as err:
            raise SolverError(f"Invalid solver configuration: {err}") from err


@dataclass(kw_only=True, slots=True)
class FeasibilityOutcome:
    """The result of a feasibility call. Feasible outcomes carry a certificate."""

    status: Outcome
    p: int
    q: int
    nodes: int = 0
    seconds: float = 0.0
    certificate: Optional[CircularColouring] = None
    reason: str = ""
    cached: bool = False

    @property
    def feasible(self) -> bool:
        """Return True if a colouring was found."""
        return self.status == Outcome.Feasible


# Domains

class Domain(Protocol):
    """The operations the search needs from a domain representation.

    Domain values are immutable, so the search can restore them from a trail.
    """

    def full(self) -> Any:
        """Return the domain holding every colour."""

    def remove_arc(self, dom: Any, a: int) -> Any:
        """Return <dom> without the colours closer than q to <a>."""

    def restrict(self, dom: Any, lo: int, hi: int) -> Any:
        """Return <dom> without the colours outside lo..hi."""

    def size(self, dom: Any) -> int:
        """Return the number of colours in <dom>."""

    def values(self, dom: Any) -> list[int]:
        """Return the colours in <dom>, ascending."""

    def only(self, dom: Any) -> int:
        """Return the colour of a singleton domain."""


class BitDomain:
    """Domains as int bitsets; bit c is set if colour c is available."""

    __slots__ = ["p", "q", "masks"]

    p: int
    q: int
    masks: list[int]

    def __init__(self, p: int, q: int) -> None:
        self.p = p
        self.q = q
        self.masks = []
        for a in range(p):
            keep = 0
            for c in range(p):
                d = abs(a - c)
                if q <= d <= p - q:
                    keep |= 1 << c
            self.masks.append(keep)

    def full(self) -> int:
        """Return the domain holding every colour."""
        return (1 << self.p) - 1

    def remove_arc(self, dom: int, a: int) -> int:
        """Return <dom> without the colours closer than q to <a>."""
        return dom & self.masks[a]

    def restrict(self, dom: int, lo: int, hi: int) -> int:
        """Return <dom> without the colours outside lo..hi."""
        return dom & (((1 << (hi - lo + 1)) - 1) << lo)

    def size(self, dom: int) -> int:
        """Return the number of colours in <dom>."""
        return dom.bit_count()

    def values(self, dom: int) -> list[int]:
        """Return the colours in <dom>, ascending."""
        vals: list[int] = []
        while dom:
            low = dom & -dom
            vals.append(low.bit_length() - 1)
            dom ^= low
        return vals

    def only(self, dom: int) -> int:
        """Return the colour of a singleton domain."""
        return dom.bit_length() - 1


Intervals = tuple[tuple[int, int], ...]


class ArcDomain:
    """Domains as sorted tuples of disjoint closed intervals (lo, hi)."""

    __slots__ = ["p", "q"]

    p: int
    q: int

    def __init__(self, p: int, q: int) -> None:
        self.p = p
        self.q = q

    def full(self) -> Intervals:
        """Return the domain holding every colour."""
        return ((0, self.p - 1), )

    @staticmethod
    def _cut(dom: Intervals, lo: int, hi: int) -> Intervals:
        """Remove lo..hi from <dom>."""
        out: list[tuple[int, int]] = []
        for a, b in dom:
            if b < lo or a > hi:
                out.append((a, b))
                continue
            if a < lo:
                out.append((a, lo - 1))
            if b > hi:
                out.append((hi + 1, b))
        return tuple(out)

    def remove_arc(self, dom: Intervals, a: int) -> Intervals:
        """Return <dom> without the colours closer than q to <a>."""
        lo: Final[int] = a - self.q + 1
        hi: Final[int] = a + self.q - 1
        if lo < 0:
            return self._cut(self._cut(dom, lo + self.p, self.p - 1), 0, hi)
        if hi >= self.p:
            return self._cut(self._cut(dom, lo, self.p - 1), 0, hi - self.p)
        return self._cut(dom, lo, hi)

    def restrict(self, dom: Intervals, lo: int, hi: int) -> Intervals:
        """Return <dom> without the colours outside lo..hi."""
        return tuple((max(a, lo), min(b, hi)) for a, b in dom if b >= lo and a <= hi)

    def size(self, dom: Intervals) -> int:
        """Return the number of colours in <dom>."""
        return sum(b - a + 1 for a, b in dom)

    def values(self, dom: Intervals) -> list[int]:
        """Return the colours in <dom>, ascending."""
        return [c for a, b in dom for c in range(a, b + 1)]

    def only(self, dom: Intervals) -> int:
        """Return the colour of a singleton domain."""
        return dom[0][0]


def make_domain(p: int, q: int) -> Domain:
    """Return the domain representation suited to <p> colours."""
    if p <= bit_limit:
        return BitDomain(p, q)
    return ArcDomain(p, q)


# The search proper

class Solver:
    """Solver searches for (p,q)-colourings of one total conflict graph.

    A Solver is not thread-safe; use one per thread.
    """

    __slots__ = [
        "log",
        "t",
        "p",
        "q",
        "dom",
        "domains",
        "colours",
        "trail",
        "nodes",
        "deadline",
    ]

    log: logging.Logger
    t: TotalConflictGraph
    p: int
    q: int
    dom: Domain
    domains: list[Any]
    colours: list[int]
    trail: list[tuple[int, Any]]
    nodes: int
    deadline: float

    def __init__(self, t: TotalConflictGraph, p: int, q: int) -> None:
        if q < 1 or p < 2 * q:
            raise SolverError(f"Cannot search for a ({p},{q})-colouring: need p >= 2q >= 2")
        self.log = common.get_logger("solver")
        self.t = t
        self.p = p
        self.q = q
        self.dom = make_domain(p, q)
        self._reset()

    def _reset(self) -> None:
        self.domains = [self.dom.full() for _ in range(self.t.size)]
        self.colours = [-1] * self.t.size
        self.trail = []
        self.nodes = 0
        self.deadline = math.inf

    def _assign(self, i: int, a: int) -> bool:
        """Colour element <i> with <a> and propagate. Return False on a wipeout."""
        queue: list[tuple[int, int]] = [(i, a)]
        dom: Final[Domain] = self.dom
        domains: Final[list[Any]] = self.domains
        colours: Final[list[int]] = self.colours

        while len(queue) > 0:
            v, c = queue.pop()
            if colours[v] >= 0:
                if colours[v] != c:
                    return False
                continue
            self.trail.append((v, None))
            colours[v] = c
            for w in self.t.neighbours[v]:
                if colours[w] >= 0:
                    d = abs(c - colours[w])
                    if d < self.q or d > self.p - self.q:
                        return False
                    continue
                old = domains[w]
                new = dom.remove_arc(old, c)
                if new == old:
                    continue
                self.trail.append((w, old))
                domains[w] = new
                size = dom.size(new)
                if size == 0:
                    return False
                if size == 1:
                    queue.append((w, dom.only(new)))

        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v, old = self.trail.pop()
            if old is None:
                self.colours[v] = -1
            else:
                self.domains[v] = old

    def _select(self) -> int:
        """Return the uncoloured element to branch on, or -1 if all are coloured."""
        best: int = -1
        best_key: tuple[int, int] = (0, 0)
        for i, c in enumerate(self.colours):
            if c >= 0:
                continue
            key = (self.dom.size(self.domains[i]), -self.t.degree(i))
            if best < 0 or key < best_key:
                best, best_key = i, key
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes & 0x3ff == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout()

    def _search(self) -> bool:
        self._tick()
        v: Final[int] = self._select()
        if v < 0:
            return True
        for c in self.dom.values(self.domains[v]):
            mark = len(self.trail)
            if self._assign(v, c) and self._search():
                return True
            self._undo(mark)
        return False

    def _enumerate(self, visit: Callable[[list[int]], bool]) -> bool:
        """Visit every completion of the current partial colouring.
        Return False if the visitor asked to stop."""
        self._tick()
        v: Final[int] = self._select()
        if v < 0:
            return visit(self.colours)
        for c in self.dom.values(self.domains[v]):
            mark = len(self.trail)
            go_on = True
            if self._assign(v, c):
                go_on = self._enumerate(visit)
            self._undo(mark)
            if not go_on:
                return False
        return True

    def pin_element(self) -> int:
        """Return the element symmetry breaking pins to 0: the first element of
        maximum degree."""
        degs: Final[list[int]] = [self.t.degree(i) for i in range(self.t.size)]
        return degs.index(max(degs))

    def _break_symmetry(self) -> bool:
        """Pin one element to 0 and restrict its first neighbour to 0..p/2.

        Shifting all colours and reflecting them (c -> -c) both preserve
        validity, so this loses no solution up to symmetry.
        """
        pin: Final[int] = self.pin_element()
        if not self._assign(pin, 0):
            return False
        nbs: Final[tuple[int, ...]] = self.t.neighbours[pin]
        if len(nbs) > 0 and self.colours[nbs[0]] < 0:
            w = nbs[0]
            old = self.domains[w]
            new = self.dom.restrict(old, 0, self.p // 2)
            self.trail.append((w, old))
            self.domains[w] = new
            match self.dom.size(new):
                case 0:
                    return False
                case 1:
                    return self._assign(w, self.dom.only(new))
        return True

    def _certificate(self) -> CircularColouring:
        return CircularColouring(p=self.p,
                                 q=self.q,
                                 assignment=dict(zip(self.t.labels, self.colours)))

    def solve(self, time_budget: float = math.inf, symmetry_breaking: bool = True) \
            -> FeasibilityOutcome:
        """Search for a colouring."""
        self._reset()
        started: Final[float] = time.monotonic()
        self.deadline = started + time_budget
        status: Outcome
        cert: Optional[CircularColouring] = None

        try:
            ok: bool = True
            if symmetry_breaking and self.t.size > 0:
                ok = self._break_symmetry()
            if ok and self._search():
                status = Outcome.Feasible
                cert = self._certificate()
            else:
                status = Outcome.Infeasible
        except SearchTimeout:
            status = Outcome.Timeout
            self.log.warning("Search for a (%d,%d)-colouring timed out after %d nodes",
                             self.p,
                             self.q,
                             self.nodes)

        return FeasibilityOutcome(status=status,
                                  p=self.p,
                                  q=self.q,
                                  nodes=self.nodes,
                                  seconds=time.monotonic() - started,
                                  certificate=cert)

    def enumerate(self, visitor: Callable[[CircularColouring], Optional[bool]]) -> int:
        """Call <visitor> on every valid colouring, return how many were visited.

        The visitor may return False to stop the enumeration.
        """
        self._reset()
        labels: Final[list[str]] = self.t.labels
        count: int = 0

        def visit(colours: list[int]) -> bool:
            nonlocal count
            count += 1
            res = visitor(CircularColouring(p=self.p,
                                            q=self.q,
                                            assignment=dict(zip(labels, colours))))
            return res is not False

        self._enumerate(visit)
        return count


# Module-level operations

def _reduce(p: int, q: int) -> tuple[int, int, int]:
    g: Final[int] = math.gcd(p, q)
    return p // g, q // g, g


def _cache_key(t: TotalConflictGraph, p: int, q: int, sym: bool) -> str:
    return f"{t.fingerprint}:{p}:{q}:{int(sym)}"


def _cache_get(t: TotalConflictGraph, p: int, q: int, cfg: SearchConfig) \
        -> Optional[FeasibilityOutcome]:
    log: Final[logging.Logger] = common.get_logger("solver")
    key: Final[str] = _cache_key(t, p, q, cfg.symmetry_breaking)
    try:
        db = get_cache().get_db(DBType.Feasibility)
        rec: Optional[dict[str, Any]] = None
        with db.tx() as tx:
            if key in tx:
                rec = tx[key]
    except CacheError as err:
        log.error("Cannot read feasibility cache: %s", err)
        return None

    if rec is None:
        return None

    status: Final[Outcome] = Outcome(rec["status"])
    cert: Optional[CircularColouring] = None
    if status == Outcome.Feasible:
        cert = CircularColouring(p=p, q=q, assignment=rec["assignment"])
        if len(check(t, cert)) > 0:
            log.error("Cached certificate for (%d,%d) is invalid, dropping it", p, q)
            with db.tx(True) as tx:
                del tx[key]
            return None

    return FeasibilityOutcome(status=status,
                              p=p,
                              q=q,
                              nodes=rec["nodes"],
                              seconds=0.0,
                              certificate=cert,
                              cached=True)


def _cache_put(t: TotalConflictGraph, res: FeasibilityOutcome, sym: bool) -> None:
    if res.status == Outcome.Timeout:
        return
    log: Final[logging.Logger] = common.get_logger("solver")
    rec: dict[str, Any] = {"status": int(res.status), "nodes": res.nodes}
    if res.certificate is not None:
        rec["assignment"] = dict(res.certificate.assignment)
    try:
        db = get_cache().get_db(DBType.Feasibility)
        with db.tx(True) as tx:
            tx[_cache_key(t, res.p, res.q, sym)] = rec
    except CacheError as err:
        log.error("Cannot write feasibility cache: %s", err)


def feasible(t: TotalConflictGraph,
             p: int,
             q: int,
             cfg: Optional[SearchConfig] = None) -> FeasibilityOutcome:
    """Decide whether <t> has a (p,q)-colouring.

    The search runs on p/q in lowest terms; a certificate found there is
    scaled back up to (p,q). Infeasible is only reported once the search
    space is exhausted; when the time budget runs out first, the status is
    Timeout.
    """
    if cfg is None:
        cfg = SearchConfig()
    if q < 1:
        raise SolverError(f"q must be positive, got {q}")

    log: Final[logging.Logger] = common.get_logger("solver")

    if p < 2 * q:
        if t.pair_count == 0 and p == q == 1:
            return FeasibilityOutcome(status=Outcome.Feasible,
                                      p=1,
                                      q=1,
                                      certificate=CircularColouring(
                                          p=1, q=1, assignment={lbl: 0 for lbl in t.labels}))
        return FeasibilityOutcome(status=Outcome.Infeasible,
                                  p=p,
                                  q=q,
                                  reason=f"p < 2q: {p} < {2*q}")

    rp, rq, g = _reduce(p, q)
    res: Optional[FeasibilityOutcome] = None
    if cfg.use_cache:
        res = _cache_get(t, rp, rq, cfg)

    if res is None:
        res = Solver(t, rp, rq).solve(cfg.time_budget, cfg.symmetry_breaking)
        if cfg.use_cache:
            _cache_put(t, res, cfg.symmetry_breaking)

    log.debug("feasible(%d,%d): %s after %d nodes, %.3f s%s",
              rp,
              rq,
              res.status.name,
              res.nodes,
              res.seconds,
              " (cached)" if res.cached else "")

    cert: Optional[CircularColouring] = res.certificate
    if cert is not None:
        if g > 1:
            cert = CircularColouring(p=p,
                                     q=q,
                                     assignment={lbl: col * g
                                                 for lbl, col in cert.assignment.items()})
        violations = check(t, cert)
        if len(violations) > 0:
            raise SolverError(f"Search returned an invalid ({p},{q})-colouring: "
                              f"{violations[0].describe(p, q)}")

    return FeasibilityOutcome(status=res.status,
                              p=p,
                              q=q,
                              nodes=res.nodes,
                              seconds=res.seconds,
                              certificate=cert,
                              reason=res.reason,
                              cached=res.cached)


def enumerate_all(t: TotalConflictGraph,
                  p: int,
                  q: int,
                  visitor: Callable[[CircularColouring], Optional[bool]],
                  override: bool = False) -> int:
    """Visit every valid (p,q)-colouring of <t> exactly once, without symmetry
    breaking. The visitor may return False to stop early.

    Returns the number of colourings visited.
    """
    if t.size > enumeration_guard and not override:
        raise EnumerationGuardError(f"Refusing to enumerate the colourings of {t.size} "
                                    f"elements (limit {enumeration_guard})")
    return Solver(t, p, q).enumerate(visitor)


@dataclass(kw_only=True, slots=True)
class UniformityReport:
    """Whether all half-edges share a colour in every colouring examined."""

    uniform: bool
    colourings: int
    counterexample: Optional[CircularColouring] = None


def verify_half_edge_uniform(k: int,
                             g: Optional[HalfEdgeGraph] = None,
                             override: bool = False) -> UniformityReport:
    """Check that every (k+1,1)-colouring of H_k gives all half-edges the same colour.

    <g> replaces H_k, for instance by a damaged copy that should fail.
    k <= 4 is allowed without <override>.
    """
    if k < 2:
        raise SolverError(f"H_k needs k >= 2, got {k}")
    if k > 4 and not override:
        raise EnumerationGuardError(f"Refusing to enumerate the colourings of H_{k}")

    if g is None:
        g = gen_hk(k)
    t: Final[TotalConflictGraph] = total_conflict_graph(g)
    halves: Final[list[str]] = sorted(h.label for h in g.half_edges)
    found: list[CircularColouring] = []

    def visit(c: CircularColouring) -> bool:
        if len({c.colour(h) for h in halves}) > 1:
            found.append(c)
            return False
        return True

    cnt: Final[int] = enumerate_all(t, k+1, 1, visit, override=True)
    return UniformityReport(uniform=len(found) == 0,
                            colourings=cnt,
                            counterexample=found[0] if found else None)


def brute_force(t: TotalConflictGraph, p: int, q: int) -> Optional[CircularColouring]:
    """Return a valid (p,q)-colouring of <t>, if there is one.

    Each connected part of <t> is coloured on its own, its elements in index
    order, and a colour is rejected as soon as it clashes with an element
    coloured before. There is no propagation, no ordering heuristic and no
    symmetry breaking, so this serves as the reference the search is checked
    against on small instances.
    """
    if t.size > enumeration_guard:
        raise EnumerationGuardError(f"Refusing to try every colouring of {t.size} "
                                    f"elements (limit {enumeration_guard})")
    if q < 1:
        raise SolverError(f"q must be positive, got {q}")
    if p < 2 * q:
        if t.pair_count == 0 and p == q == 1:
            return CircularColouring(p=1, q=1, assignment={lbl: 0 for lbl in t.labels})
        return None

    colours: Final[list[int]] = [-1] * t.size

    def extend(part: list[int], n: int) -> bool:
        if n == len(part):
            return True
        i = part[n]
        for col in range(p):
            if all(colours[j] < 0 or q <= abs(col - colours[j]) <= p - q
                   for j in t.neighbours[i]):
                colours[i] = col
                if extend(part, n + 1):
                    return True
        colours[i] = -1
        return False

    seen: set[int] = set()
    for root in range(t.size):
        if root in seen:
            continue
        part: list[int] = []
        todo: list[int] = [root]
        seen.add(root)
        while todo:
            i = todo.pop()
            part.append(i)
            for j in t.neighbours[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        if not extend(sorted(part), 0):
            return None

    return CircularColouring(p=p, q=q, assignment=dict(zip(t.labels, colours)))


def candidate_fractions(lower: Fraction,
                        upper: Fraction,
                        qmax: int,
                        pmax: Optional[int] = None) -> list[Fraction]:
    """Return every p/q in lowest terms with lower < p/q <= upper and
    q <= qmax (and p <= pmax, if given), ascending."""
    if not lower < upper:
        raise SolverError(f"Empty range ({frac_str(lower)}, {frac_str(upper)}]")
    if qmax < 1:
        raise SolverError(f"qmax must be at least 1, got {qmax}")

    found: set[Fraction] = set()
    for q in range(1, qmax+1):
        # lower < p/q  <=>  p > lower*q
        p_lo = math.floor(lower * q) + 1
        p_hi = math.floor(upper * q)
        if pmax is not None:
            p_hi = min(p_hi, pmax)
        for p in range(p_lo, p_hi+1):
            if math.gcd(p, q) == 1:
                found.add(Fraction(p, q))
    if len(found) == 0:
        raise SolverError(f"No fraction in ({frac_str(lower)}, {frac_str(upper)}] "
                          f"with denominator at most {qmax}"
                          + ("" if pmax is None else f" and numerator at most {pmax}"))
    return sorted(found)


class ChiStatus(IntEnum):
    """Whether chi_total pinned the value down or only bracketed it."""

    Exact = auto()
    Bounded = auto()


@dataclass(kw_only=True, slots=True)
class CallRecord:
    """One feasibility call made by chi_total."""

    p: int
    q: int
    status: Outcome
    nodes: int
    seconds: float


@dataclass(kw_only=True, slots=True)
class ChiResult:
    """The circular total chromatic number, or an interval containing it.

    If status is Exact, value is feasible and every candidate below it is
    infeasible; lower is then the largest candidate proven infeasible (or
    value itself, when it equals the clique bound). If status is Bounded,
    the number lies in (lower, upper].
    """

    status: ChiStatus
    value: Optional[Fraction]
    lower: Fraction
    upper: Fraction
    qmax: int
    qmax_default: int
    witness: CircularColouring
    calls: list[CallRecord] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def nodes(self) -> int:
        """Return the number of search nodes over all calls."""
        return sum(c.nodes for c in self.calls)

    @property
    def within_bound(self) -> bool:
        """Return True if a smaller denominator bound than the default was used."""
        return self.qmax < self.qmax_default

    def record(self) -> str:
        """Render the result as key: value lines."""
        lines: list[str] = []
        match self.status:
            case ChiStatus.Exact:
                assert self.value is not None
                lines.append("status: exact" + (" within qmax" if self.within_bound else ""))
                lines.append(f"value: {frac_str(self.value)}")
            case ChiStatus.Bounded:
                lines.append("status: bounded")
                lines.append(f"interval: ({frac_str(self.lower)}, {frac_str(self.upper)}]")
        lines.append(f"qmax: {self.qmax}")
        lines.append(f"calls: {len(self.calls)}")
        lines.append(f"nodes: {self.nodes}")
        lines.append(f"seconds: {self.seconds:.3f}")
        return "\n".join(lines)


def _trivial_colouring(t: TotalConflictGraph) -> CircularColouring:
    """Give every element its own colour, a (|T|,1)-colouring."""
    return CircularColouring(p=max(t.size, 2),
                             q=1,
                             assignment={lbl: i for i, lbl in enumerate(t.labels)})


def chi_total(g: HalfEdgeGraph, cfg: Optional[SearchConfig] = None) -> ChiResult:
    """Compute the circular total chromatic number of <g>.

    The vertex of maximum degree D and its incident elements form a clique
    of size D+1, so the value is at least D+1. The first integer m >= D+1
    with an m-colouring bounds it from above. Between m-1 and m, only
    fractions whose numerator is at most the number of elements of T(G)
    can be the value, and a binary search over those settles it, since
    feasibility is monotone in p/q.
    """
    if cfg is None:
        cfg = SearchConfig()
    log: Final[logging.Logger] = common.get_logger("solver")
    started: Final[float] = time.monotonic()
    t: Final[TotalConflictGraph] = total_conflict_graph(g)
    size: Final[int] = t.size
    qmax: Final[int] = cfg.qmax if cfg.qmax is not None else max(size, 1)
    calls: list[CallRecord] = []

    def done(status: ChiStatus,
             value: Optional[Fraction],
             lower: Fraction,
             upper: Fraction,
             witness: CircularColouring) -> ChiResult:
        return ChiResult(status=status,
                         value=value,
                         lower=lower,
                         upper=upper,
                         qmax=qmax,
                         qmax_default=max(size, 1),
                         witness=witness,
                         calls=calls,
                         seconds=time.monotonic() - started)

    def call(frac: Fraction) -> FeasibilityOutcome:
        res = feasible(t, frac.numerator, frac.denominator, cfg)
        calls.append(CallRecord(p=res.p,
                                q=res.q,
                                status=res.status,
                                nodes=res.nodes,
                                seconds=res.seconds))
        return res

    if t.pair_count == 0:
        one: Final[Fraction] = Fraction(1)
        return done(ChiStatus.Exact,
                    one,
                    one,
                    one,
                    CircularColouring(p=1, q=1, assignment={lbl: 0 for lbl in t.labels}))

    clique: Final[int] = g.degree_report().max_degree_with_half_edges + 1
    lower: Fraction = Fraction(clique)
    upper: Fraction = Fraction(max(size, 2))
    witness: CircularColouring = _trivial_colouring(t)

    # Integer phase.
    m: int = clique
    while m < size:
        res = call(Fraction(m))
        match res.status:
            case Outcome.Feasible:
                assert res.certificate is not None
                upper, witness = Fraction(m), res.certificate
                break
            case Outcome.Infeasible:
                lower = Fraction(m)
                m += 1
            case Outcome.Timeout:
                log.info("chi_total: integer phase stopped at %d, bracket (%s, %s]",
                         m, frac_str(lower), frac_str(upper))
                return done(ChiStatus.Bounded, None, lower if m > clique else lower - 1,
                            upper, witness)

    log.debug("chi_total: integer bracket (%s, %s]", frac_str(lower), frac_str(upper))

    if upper == clique:
        return done(ChiStatus.Exact, upper, upper, upper, witness)

    # Fractional phase. lower is proven infeasible, upper feasible.
    cands: Final[list[Fraction]] = candidate_fractions(lower, upper, qmax, pmax=size)
    lo: int = -1
    hi: int = len(cands) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        res = call(cands[mid])
        match res.status:
            case Outcome.Feasible:
                assert res.certificate is not None
                hi, witness = mid, res.certificate
            case Outcome.Infeasible:
                lo = mid
            case Outcome.Timeout:
                low = cands[lo] if lo >= 0 else lower
                log.info("chi_total: stopped at %s, bracket (%s, %s]",
                         frac_str(cands[mid]), frac_str(low), frac_str(cands[hi]))
                return done(ChiStatus.Bounded, None, low, cands[hi], witness)
        log.debug("chi_total: bracket (%s, %s]",
                  frac_str(cands[lo] if lo >= 0 else lower),
                  frac_str(cands[hi]))

    value: Final[Fraction] = cands[hi]
    return done(ChiStatus.Exact, value, cands[lo] if lo >= 0 else lower, value, witness)


def is_type2(g: HalfEdgeGraph, cfg: Optional[SearchConfig] = None) -> Optional[bool]:
    """Return True if <g> has no (D+1)-total colouring, D its maximum degree
    counting half-edges. Returns None if the search timed out."""
    t: Final[TotalConflictGraph] = total_conflict_graph(g)
    if t.pair_count == 0:
        return False
    res: Final[FeasibilityOutcome] = feasible(t, g.max_degree + 1, 1, cfg)
    match res.status:
        case Outcome.Feasible:
            return False
        case Outcome.Infeasible:
            return True
        case _:
            return None

# Local Variables: #
# python-indent: 4 #
# End: #
