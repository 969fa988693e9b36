#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-18 18:41:07 krylon>
#
# /data/code/python/circtotal/src/circtotal/hegraph.py
# created on 18. 10. 2026
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.hegraph

(c) 2025 Benjamin Walkenhorst

Graphs with half-edges, the graph families we colour, and the total
conflict graph whose circular colourings are the circular total colourings
of a graph.

A half-edge has a single end vertex. It occupies a colour slot at that
vertex, just like an ordinary edge, and two half-edges may be joined to
form an edge between their end vertices.
"""

import hashlib
import itertools
import random
import re
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum, IntEnum, auto
from typing import Final, Optional

import networkx as nx

from circtotal import common
from circtotal.common import CircTotalError

label_pat: Final[re.Pattern] = re.compile(r"^\S+$")


class GraphError(CircTotalError):
    """GraphError indicates an invalid graph or an invalid operation on one."""


class ElementKind(IntEnum):
    """ElementKind tells vertices, edges and half-edges apart."""

    Vertex = 0
    Edge = 1
    HalfEdge = 2

    @classmethod
    def from_str(cls, name: str) -> 'ElementKind':
        """Create an ElementKind from its name as used in graph files."""
        match name.lower():
            case "vertex":
                return cls.Vertex
            case "edge":
                return cls.Edge
            case "half" | "halfedge" | "half-edge":
                return cls.HalfEdge
            case _:
                raise ValueError(f"Invalid element kind '{name}'")


@dataclass(frozen=True, slots=True, order=True)
class Edge:
    """Edge is a labelled edge joining two distinct vertices.

    The endpoints are stored in sorted order, so two Edges with the same label
    and the same endpoints are equal no matter how they were given.
    """

    label: str
    u: str
    v: str

    def __post_init__(self) -> None:
        if self.v < self.u:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    @property
    def ends(self) -> tuple[str, str]:
        """Return the endpoints of the Edge."""
        return (self.u, self.v)

    def other(self, vertex: str) -> str:
        """Return the endpoint of the Edge that is not <vertex>."""
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise GraphError(f"Vertex {vertex} is not an endpoint of edge {self.label}")


@dataclass(frozen=True, slots=True, order=True)
class HalfEdge:
    """HalfEdge is a labelled edge with only one end vertex."""

    label: str
    vertex: str


@dataclass(frozen=True, slots=True)
class DegreeReport:
    """Maximum degree, counting half-edges and not counting them."""

    max_degree_with_half_edges: int
    max_degree_edges_only: int


@dataclass(frozen=True, slots=True)
class HalfEdgeGraph:
    """HalfEdgeGraph is a simple graph that may carry half-edges.

    Values are immutable. Every operation on a graph returns a new one.
    """

    vertices: frozenset[str] = frozenset()
    edges: frozenset[Edge] = frozenset()
    half_edges: frozenset[HalfEdge] = frozenset()

    def __post_init__(self) -> None:
        labels: list[str] = list(self.vertices)
        labels.extend(e.label for e in self.edges)
        labels.extend(h.label for h in self.half_edges)

        for lbl in labels:
            if label_pat.match(lbl) is None:
                raise GraphError(f"Invalid label {lbl!r}: labels must be non-empty "
                                 "and must not contain whitespace")

        dupes: Final[list[str]] = sorted(x for x, cnt in Counter(labels).items() if cnt > 1)
        if len(dupes) > 0:
            raise GraphError(f"Duplicate labels: {', '.join(dupes)}")

        pairs: set[tuple[str, str]] = set()
        for e in self.edges:
            if e.u == e.v:
                raise GraphError(f"Edge {e.label} is a loop at {e.u}")
            for end in e.ends:
                if end not in self.vertices:
                    raise GraphError(f"Edge {e.label} refers to unknown vertex {end}")
            if e.ends in pairs:
                raise GraphError(f"Edge {e.label} is parallel to another edge {e.u}-{e.v}")
            pairs.add(e.ends)

        for h in self.half_edges:
            if h.vertex not in self.vertices:
                raise GraphError(f"Half-edge {h.label} refers to unknown vertex {h.vertex}")

    @classmethod
    def build(cls,
              vertices: Iterable[str] = (),
              edges: Iterable[tuple[str, str, str]] = (),
              half_edges: Iterable[tuple[str, str]] = ()) -> 'HalfEdgeGraph':
        """Build a graph from plain tuples.

        Edges are given as (label, u, v), half-edges as (label, vertex).
        """
        return cls(vertices=frozenset(vertices),
                   edges=frozenset(Edge(lbl, u, v) for lbl, u, v in edges),
                   half_edges=frozenset(HalfEdge(lbl, v) for lbl, v in half_edges))

    @property
    def labels(self) -> frozenset[str]:
        """Return the labels of all elements of the graph."""
        return self.vertices \
            | frozenset(e.label for e in self.edges) \
            | frozenset(h.label for h in self.half_edges)

    @property
    def vertex_count(self) -> int:
        """Return the number of vertices."""
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Return the number of (full) edges."""
        return len(self.edges)

    @property
    def half_edge_count(self) -> int:
        """Return the number of half-edges."""
        return len(self.half_edges)

    def edge(self, label: str) -> Edge:
        """Look up an Edge by its label."""
        for e in self.edges:
            if e.label == label:
                return e
        raise GraphError(f"No edge labelled {label}")

    def half_edge(self, label: str) -> HalfEdge:
        """Look up a HalfEdge by its label."""
        for h in self.half_edges:
            if h.label == label:
                return h
        raise GraphError(f"No half-edge labelled {label}")

    def incident(self, vertex: str) -> list[str]:
        """Return the labels of the edges and half-edges at <vertex>, sorted."""
        if vertex not in self.vertices:
            raise GraphError(f"No vertex labelled {vertex}")
        inc: list[str] = [e.label for e in self.edges if vertex in e.ends]
        inc.extend(h.label for h in self.half_edges if h.vertex == vertex)
        inc.sort()
        return inc

    def neighbours(self, vertex: str) -> list[str]:
        """Return the vertices adjacent to <vertex>, sorted."""
        if vertex not in self.vertices:
            raise GraphError(f"No vertex labelled {vertex}")
        return sorted(e.other(vertex) for e in self.edges if vertex in e.ends)

    def degree(self, vertex: str, half_edges: bool = True) -> int:
        """Return the degree of <vertex>. Half-edges count unless <half_edges> is False."""
        if vertex not in self.vertices:
            raise GraphError(f"No vertex labelled {vertex}")
        deg: int = sum(1 for e in self.edges if vertex in e.ends)
        if half_edges:
            deg += sum(1 for h in self.half_edges if h.vertex == vertex)
        return deg

    def degree_report(self) -> DegreeReport:
        """Return the maximum degree under both conventions."""
        full: Counter = Counter()
        for e in self.edges:
            full[e.u] += 1
            full[e.v] += 1
        both: Counter = Counter(full)
        for h in self.half_edges:
            both[h.vertex] += 1

        return DegreeReport(
            max_degree_with_half_edges=max(both.values(), default=0),
            max_degree_edges_only=max(full.values(), default=0),
        )

    @property
    def max_degree(self) -> int:
        """Return the maximum degree, counting half-edges."""
        return self.degree_report().max_degree_with_half_edges


def prefixed(prefix: str, label: str) -> str:
    """Return <label> as it appears inside a disjoint union under <prefix>."""
    if prefix == "":
        return label
    return f"{prefix}.{label}"


def join_half_edges(g: HalfEdgeGraph, h1: str, h2: str, new_edge_label: str) -> HalfEdgeGraph:
    """Join the half-edges <h1> and <h2> to form an edge between their end vertices."""
    if h1 == h2:
        raise GraphError(f"Cannot join half-edge {h1} with itself")

    a: Final[HalfEdge] = g.half_edge(h1)
    b: Final[HalfEdge] = g.half_edge(h2)

    if a.vertex == b.vertex:
        raise GraphError(f"Joining {h1} and {h2} would create a loop at {a.vertex}")

    joined: Final[Edge] = Edge(new_edge_label, a.vertex, b.vertex)
    for e in g.edges:
        if e.ends == joined.ends:
            raise GraphError(f"Joining {h1} and {h2} would create an edge parallel to {e.label}")

    return HalfEdgeGraph(vertices=g.vertices,
                         edges=g.edges | {joined},
                         half_edges=g.half_edges - {a, b})


def delete_edge(g: HalfEdgeGraph, label: str) -> HalfEdgeGraph:
    """Return a copy of <g> without the edge <label>."""
    e: Final[Edge] = g.edge(label)
    return HalfEdgeGraph(vertices=g.vertices,
                         edges=g.edges - {e},
                         half_edges=g.half_edges)


def relabel(g: HalfEdgeGraph, mapping: Mapping[str, str]) -> HalfEdgeGraph:
    """Rename elements of <g>. Labels missing from <mapping> stay as they are."""
    def m(x: str) -> str:
        return mapping.get(x, x)

    return HalfEdgeGraph(
        vertices=frozenset(m(v) for v in g.vertices),
        edges=frozenset(Edge(m(e.label), m(e.u), m(e.v)) for e in g.edges),
        half_edges=frozenset(HalfEdge(m(h.label), m(h.vertex)) for h in g.half_edges),
    )


def disjoint_union(gs: Sequence[HalfEdgeGraph], label_prefixes: Sequence[str]) -> HalfEdgeGraph:
    """Form the disjoint union of several graphs, prefixing every label.

    The prefix "" leaves the labels of its graph as they are.
    """
    if len(gs) != len(label_prefixes):
        raise GraphError(f"Need one prefix per graph, got {len(label_prefixes)} "
                         f"prefixes for {len(gs)} graphs")
    if len(set(label_prefixes)) != len(label_prefixes):
        raise GraphError(f"Duplicate prefixes in {list(label_prefixes)}")

    vertices: set[str] = set()
    edges: set[Edge] = set()
    half_edges: set[HalfEdge] = set()

    for g, pfx in zip(gs, label_prefixes):
        vertices.update(prefixed(pfx, v) for v in g.vertices)
        edges.update(Edge(prefixed(pfx, e.label), prefixed(pfx, e.u), prefixed(pfx, e.v))
                     for e in g.edges)
        half_edges.update(HalfEdge(prefixed(pfx, h.label), prefixed(pfx, h.vertex))
                          for h in g.half_edges)

    return HalfEdgeGraph(vertices=frozenset(vertices),
                         edges=frozenset(edges),
                         half_edges=frozenset(half_edges))


# Graph families

def gen_hk(k: int) -> HalfEdgeGraph:
    """Generate H_k: K_{k,k} with one vertex deleted, its edges kept as half-edges.

    The partite sets are x1..xk and y2..yk, the edges are labelled xiyj, and
    the half-edge at xi is ei.
    """
    if k < 2:
        raise GraphError(f"H_k needs k >= 2, got {k}")

    xs: Final[list[str]] = [f"x{i}" for i in range(1, k+1)]
    ys: Final[list[str]] = [f"y{j}" for j in range(2, k+1)]

    return HalfEdgeGraph.build(
        vertices=xs + ys,
        edges=[(f"x{i}y{j}", f"x{i}", f"y{j}")
               for i in range(1, k+1)
               for j in range(2, k+1)],
        half_edges=[(f"e{i}", f"x{i}") for i in range(1, k+1)],
    )


def gen_hprime(k: int, keep: Optional[tuple[int, int]] = None) -> HalfEdgeGraph:
    """Generate H'_k: H_k with all half-edges but e<keep[0]> and e<keep[1]> deleted.

    The default keeps e1 and ek.
    """
    if k < 2:
        raise GraphError(f"H'_k needs k >= 2, got {k}")
    if keep is None:
        keep = (1, k)

    a, b = keep
    if a == b or not (1 <= a <= k and 1 <= b <= k):
        raise GraphError(f"Invalid half-edges to keep for k = {k}: {keep}")

    hk: Final[HalfEdgeGraph] = gen_hk(k)
    kept: Final[set[str]] = {f"e{a}", f"e{b}"}

    return HalfEdgeGraph(vertices=hk.vertices,
                         edges=hk.edges,
                         half_edges=frozenset(h for h in hk.half_edges if h.label in kept))


def block_prefix(i: int) -> str:
    """Return the label prefix of block B_i in G_{k,n}. B_0 is unprefixed."""
    return "" if i == 0 else f"B{i}"


def gkn_joins(k: int, n: int) -> list[tuple[str, str, str]]:
    """Return the joins that close the blocks of G_{k,n} into one graph.

    Each triple is (f_i, f'_{i+1}, e_i). In block B_i the half-edge f'_i is
    Bi.e1 (at Bi.x1) and f_i is Bi.ek (at Bi.xk); B_0 contributes f0 and f'<n+1>
    at u.
    """
    joins: list[tuple[str, str, str]] = [("f0", prefixed(block_prefix(1), "e1"), "e0")]
    for i in range(1, n):
        joins.append((prefixed(block_prefix(i), f"e{k}"),
                      prefixed(block_prefix(i+1), "e1"),
                      f"e{i}"))
    joins.append((prefixed(block_prefix(n), f"e{k}"), f"f'{n+1}", f"e{n}"))
    return joins


def gen_b0(n: int) -> HalfEdgeGraph:
    """Generate B_0: the vertex u with the half-edges f0 and f'<n+1>."""
    return HalfEdgeGraph.build(vertices=["u"],
                               half_edges=[("f0", "u"), (f"f'{n+1}", "u")])


def gen_gkn(k: int, n: int) -> HalfEdgeGraph:
    """Generate G_{k,n}: n copies of H'_k closed into a ring through the vertex u."""
    if k < 2 or n < 1:
        raise GraphError(f"G_(k,n) needs k >= 2 and n >= 1, got k = {k}, n = {n}")

    blocks: list[HalfEdgeGraph] = [gen_b0(n)]
    blocks.extend(gen_hprime(k, (1, k)) for _ in range(n))

    g: HalfEdgeGraph = disjoint_union(blocks, [block_prefix(i) for i in range(n+1)])
    for h1, h2, lbl in gkn_joins(k, n):
        g = join_half_edges(g, h1, h2, lbl)

    return g


class Family(Enum):
    """The classical graph families we can generate."""

    Cycle = auto()
    Moebius = auto()
    Prism = auto()
    CompleteBipartite = auto()

    @classmethod
    def from_str(cls, name: str) -> 'Family':
        """Create a Family from its command line name."""
        match name.lower():
            case "cycle":
                return cls.Cycle
            case "moebius" | "mobius":
                return cls.Moebius
            case "prism":
                return cls.Prism
            case "kab" | "complete_bipartite" | "complete-bipartite":
                return cls.CompleteBipartite
            case _:
                raise ValueError(f"Invalid graph family '{name}'")


def _ring(names: list[str]) -> list[tuple[str, str, str]]:
    m: Final[int] = len(names)
    return [(f"{names[i]}{names[(i+1) % m]}", names[i], names[(i+1) % m])
            for i in range(m)]


def gen_cycle(m: int) -> HalfEdgeGraph:
    """Generate the cycle C_m on v0..v<m-1>."""
    if m < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {m}")
    vs: Final[list[str]] = [f"v{i}" for i in range(m)]
    return HalfEdgeGraph.build(vertices=vs, edges=_ring(vs))


def gen_moebius(n: int) -> HalfEdgeGraph:
    """Generate the Moebius ladder V_2n: C_2n plus the n long diagonals."""
    if n < 2:
        raise GraphError(f"The Moebius ladder V_2n needs n >= 2, got {n}")
    vs: Final[list[str]] = [f"v{i}" for i in range(2*n)]
    edges: list[tuple[str, str, str]] = _ring(vs)
    edges.extend((f"{vs[i]}{vs[i+n]}", vs[i], vs[i+n]) for i in range(n))
    return HalfEdgeGraph.build(vertices=vs, edges=edges)


def gen_prism(m: int) -> HalfEdgeGraph:
    """Generate the prism K_2 x C_m: two m-cycles a*, b* and the spokes between them."""
    if m < 3:
        raise GraphError(f"The prism K_2 x C_m needs m >= 3, got {m}")
    outer: Final[list[str]] = [f"a{i}" for i in range(m)]
    inner: Final[list[str]] = [f"b{i}" for i in range(m)]
    edges: list[tuple[str, str, str]] = _ring(outer) + _ring(inner)
    edges.extend((f"{outer[i]}{inner[i]}", outer[i], inner[i]) for i in range(m))
    return HalfEdgeGraph.build(vertices=outer + inner, edges=edges)


def gen_complete_bipartite(a: int, b: int) -> HalfEdgeGraph:
    """Generate K_{a,b} on a1..a<a> and b1..b<b>."""
    if a < 1 or b < 1:
        raise GraphError(f"K_(a,b) needs a, b >= 1, got a = {a}, b = {b}")
    left: Final[list[str]] = [f"a{i}" for i in range(1, a+1)]
    right: Final[list[str]] = [f"b{j}" for j in range(1, b+1)]
    return HalfEdgeGraph.build(vertices=left + right,
                               edges=[(f"{x}{y}", x, y) for x in left for y in right])


def gen_classic(family: Family, *params: int) -> HalfEdgeGraph:
    """Generate a member of one of the classical families."""
    match family, params:
        case Family.Cycle, (m, ):
            return gen_cycle(m)
        case Family.Moebius, (n, ):
            return gen_moebius(n)
        case Family.Prism, (m, ):
            return gen_prism(m)
        case Family.CompleteBipartite, (a, b):
            return gen_complete_bipartite(a, b)
        case _:
            raise GraphError(f"Invalid parameters for {family.name}: {params}")


def gen_random(rng: random.Random, max_elements: int = 12) -> HalfEdgeGraph:
    """Draw a graph with at most <max_elements> vertices, edges and half-edges
    in total. Vertices are v0, v1, ..., half-edges h0, h1, ..."""
    if max_elements < 1:
        raise GraphError(f"A graph needs at least one element, got {max_elements}")

    nv: Final[int] = rng.randint(1, min(6, max_elements))
    names: Final[list[str]] = [f"v{i}" for i in range(nv)]
    pairs: Final[list[tuple[str, str]]] = list(itertools.combinations(names, 2))
    rng.shuffle(pairs)
    room: int = max_elements - nv
    ecnt: Final[int] = rng.randint(0, min(len(pairs), room))
    room -= ecnt
    hcnt: Final[int] = rng.randint(0, room)
    return HalfEdgeGraph.build(vertices=names,
                               edges=[(f"{a}{b}", a, b) for a, b in sorted(pairs[:ecnt])],
                               half_edges=[(f"h{i}", rng.choice(names)) for i in range(hcnt)])


# Total conflict graph

@dataclass(frozen=True, slots=True)
class Element:
    """Element is a vertex, edge or half-edge of a graph, as a node of T(G)."""

    label: str
    kind: ElementKind


@dataclass(frozen=True, slots=True)
class TotalConflictGraph:
    """The adjacency structure on V, E and H whose circular colourings are
    the circular total colourings of a graph.

    Elements are sorted by label. neighbours[i] lists the indices of the
    elements adjacent to element i, in ascending order.
    """

    elements: tuple[Element, ...]
    neighbours: tuple[tuple[int, ...], ...]
    index: dict[str, int] = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.index) == 0:
            self.index.update((el.label, i) for i, el in enumerate(self.elements))

    @property
    def size(self) -> int:
        """Return the number of elements."""
        return len(self.elements)

    @property
    def labels(self) -> list[str]:
        """Return the element labels in element order."""
        return [el.label for el in self.elements]

    def index_of(self, label: str) -> int:
        """Return the index of the element labelled <label>."""
        try:
            return self.index[label]
        except KeyError as err:
            raise GraphError(f"No element labelled {label}") from err

    def degree(self, i: int) -> int:
        """Return the number of elements adjacent to element <i>."""
        return len(self.neighbours[i])

    def adjacent(self, a: str, b: str) -> bool:
        """Return True if the elements labelled <a> and <b> are adjacent."""
        return self.index_of(b) in self.neighbours[self.index_of(a)]

    def pairs(self) -> list[tuple[int, int]]:
        """Return every adjacent pair (i, j) with i < j, in lexicographic order."""
        return [(i, j)
                for i, nbs in enumerate(self.neighbours)
                for j in nbs
                if i < j]

    @property
    def pair_count(self) -> int:
        """Return the number of adjacent pairs."""
        return sum(len(nbs) for nbs in self.neighbours) // 2

    def star(self, vertex: str) -> list[int]:
        """Return <vertex> and its incident edges and half-edges.

        These elements are pairwise adjacent, so they form a clique.
        """
        i: Final[int] = self.index_of(vertex)
        if self.elements[i].kind != ElementKind.Vertex:
            raise GraphError(f"{vertex} is not a vertex")
        return [i] + [j for j in self.neighbours[i]
                      if self.elements[j].kind != ElementKind.Vertex]

    @property
    def fingerprint(self) -> str:
        """Return a digest of the labels and the adjacency relation."""
        h = hashlib.sha256()
        for el in self.elements:
            h.update(f"{el.kind.value}:{el.label}\n".encode())
        for i, j in self.pairs():
            h.update(f"{i}-{j}\n".encode())
        return h.hexdigest()


def total_conflict_graph(g: HalfEdgeGraph) -> TotalConflictGraph:
    """Build T(G): adjacent vertices, adjacent edges and incident vertex/edge pairs conflict."""
    kinds: dict[str, ElementKind] = {v: ElementKind.Vertex for v in g.vertices}
    kinds.update((e.label, ElementKind.Edge) for e in g.edges)
    kinds.update((h.label, ElementKind.HalfEdge) for h in g.half_edges)

    elements: Final[tuple[Element, ...]] = tuple(Element(lbl, kinds[lbl])
                                                 for lbl in sorted(kinds))
    idx: Final[dict[str, int]] = {el.label: i for i, el in enumerate(elements)}
    adj: Final[list[set[int]]] = [set() for _ in elements]
    incident: dict[str, list[int]] = {v: [] for v in g.vertices}

    def link(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)

    for e in g.edges:
        u, v, me = idx[e.u], idx[e.v], idx[e.label]
        link(u, v)
        incident[e.u].append(me)
        incident[e.v].append(me)

    for h in g.half_edges:
        incident[h.vertex].append(idx[h.label])

    for v, inc in incident.items():
        vi = idx[v]
        for n, a in enumerate(inc):
            link(vi, a)
            for b in inc[n+1:]:
                link(a, b)

    return TotalConflictGraph(elements=elements,
                              neighbours=tuple(tuple(sorted(nbs)) for nbs in adj),
                              index=idx)


# Structural checks

@dataclass(frozen=True, slots=True)
class BipartiteReport:
    """Outcome of a bipartiteness check, with a witness either way."""

    bipartite: bool
    parts: Optional[tuple[frozenset[str], frozenset[str]]] = None
    odd_cycle: Optional[tuple[str, ...]] = None


def to_networkx(g: HalfEdgeGraph, with_half_edges: bool = False) -> nx.Graph:
    """Convert <g> to a networkx Graph.

    Half-edges are dropped unless <with_half_edges> is True, in which case
    each becomes a pendant node marked kind="half".
    """
    ng = nx.Graph()
    ng.add_nodes_from(sorted(g.vertices), kind="vertex")
    ng.add_edges_from(sorted(e.ends for e in g.edges))
    if with_half_edges:
        for h in sorted(g.half_edges):
            ng.add_node(h.label, kind="half")
            ng.add_edge(h.vertex, h.label)
    return ng


def is_isomorphic(g1: HalfEdgeGraph, g2: HalfEdgeGraph) -> bool:
    """Return True if <g1> and <g2> are isomorphic, half-edges included."""
    if (g1.vertex_count, g1.edge_count, g1.half_edge_count) != \
       (g2.vertex_count, g2.edge_count, g2.half_edge_count):
        return False
    return nx.is_isomorphic(to_networkx(g1, True),
                            to_networkx(g2, True),
                            node_match=lambda a, b: a["kind"] == b["kind"])


def _odd_cycle(ng: nx.Graph, root: str) -> Optional[tuple[str, ...]]:
    """Find an odd cycle in the component of <root>, if there is one."""
    dist: Final[dict[str, int]] = nx.single_source_shortest_path_length(ng, root)
    pred: Final[dict[str, str]] = dict(nx.bfs_predecessors(ng, root))

    def climb(x: str) -> list[str]:
        trail: list[str] = [x]
        while x != root:
            x = pred[x]
            trail.append(x)
        return trail

    for a, b in sorted(ng.subgraph(dist.keys()).edges()):
        if dist[a] != dist[b]:
            continue
        up_a, up_b = climb(a), climb(b)
        common_anc = set(up_a) & set(up_b)
        top = next(x for x in up_a if x in common_anc)
        left = up_a[:up_a.index(top)+1]
        right = up_b[:up_b.index(top)]
        return tuple(left + list(reversed(right)))

    return None


def is_bipartite(g: HalfEdgeGraph) -> BipartiteReport:
    """Check if the underlying simple graph (half-edges ignored) has no odd cycle."""
    log: Final = common.get_logger("hegraph")
    ng: Final[nx.Graph] = to_networkx(g)
    try:
        colour: dict[str, int] = nx.bipartite.color(ng)
    except nx.NetworkXError:
        for comp in sorted(nx.connected_components(ng), key=min):
            cyc = _odd_cycle(ng, min(comp))
            if cyc is not None:
                log.debug("Found odd cycle of length %d", len(cyc))
                return BipartiteReport(bipartite=False, odd_cycle=cyc)
        raise

    left: Final[frozenset[str]] = frozenset(v for v, c in colour.items() if c == 0)
    right: Final[frozenset[str]] = frozenset(v for v, c in colour.items() if c == 1)
    return BipartiteReport(bipartite=True, parts=(left, right))

# Local Variables: #
# python-indent: 4 #
# End: #
