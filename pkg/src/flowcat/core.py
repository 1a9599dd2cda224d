"""Multigraph data model, degree statistics and exact Kostant partition functions.

Graphs live on the vertex set {1, ..., n+1} with every edge directed from its
smaller to its larger endpoint.  An edge (i, j) carries the root e_i - e_j, and
the Kostant partition function K_G(b) counts nonnegative integer combinations
of the edge roots summing to b, where an edge of multiplicity m contributes m
independent slots.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .compositions import compositions_weight, weak_compositions

Edge = tuple[int, int, int]  # (source, target, multiplicity)


@dataclass(frozen=True)
class Multigraph:
    """Loopless directed multigraph on vertices 1..vertex_count, edges i < j.

    Parallel (source, target) entries are merged on construction; the stored
    edge list is sorted and duplicate free.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        merged: dict[tuple[int, int], int] = defaultdict(int)
        for entry in self.edges:
            if len(entry) == 2:
                (i, j), m = entry, 1
            else:
                i, j, m = entry
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise ValueError(f"edge ({i},{j}) uses an invalid vertex label")
            if i >= j:
                raise ValueError(f"edge ({i},{j}) must have source < target")
            if m < 0:
                raise ValueError("edge multiplicity must be nonnegative")
            merged[(i, j)] += m
        canonical = tuple(
            (i, j, m) for (i, j), m in sorted(merged.items()) if m > 0
        )
        object.__setattr__(self, "edges", canonical)

    @property
    def edge_count(self) -> int:
        """Total number of edges N, counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    def out_degree(self, v: int) -> int:
        return sum(m for i, _, m in self.edges if i == v)

    def in_degree(self, v: int) -> int:
        return sum(m for _, j, m in self.edges if j == v)

    def restriction(self, k: int) -> "Multigraph":
        """The induced subgraph on vertices 1..k."""
        return Multigraph(k, tuple(e for e in self.edges if e[1] <= k))

    def is_connected(self) -> bool:
        """Weak connectivity (single vertex counts as connected)."""
        if self.vertex_count == 1:
            return True
        adj: dict[int, set[int]] = defaultdict(set)
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[i, j, m] for i, j, m in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Multigraph":
        return cls(int(data["vertices"]),
                   tuple(tuple(int(x) for x in e) for e in data["edges"]))


@dataclass(frozen=True)
class NetflowVector:
    """Integer netflow (a_1, ..., a_n, -sum a_i); entries must sum to zero."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        if sum(entries) != 0:
            raise ValueError("netflow entries must sum to zero")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_prefix(cls, prefix: Sequence[int]) -> "NetflowVector":
        prefix = tuple(int(x) for x in prefix)
        return cls(prefix + (-sum(prefix),))

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.entries[:-1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def complete_graph(vertices: int) -> Multigraph:
    """K_{n+1}: every pair (i, j), i < j, once."""
    edges = tuple(
        (i, j, 1)
        for i in range(1, vertices + 1)
        for j in range(i + 1, vertices + 1)
    )
    return Multigraph(vertices, edges)


def morris_graph(vertices: int, a: int, b: int, m: int) -> Multigraph:
    """K_{n+1}^{a,b,m}: edges (1,i) x a and (i,n+1) x b for 1 < i < n+1,
    interior pairs (i,j), 1 < i < j < n+1, with multiplicity m.

    There is deliberately no (1, n+1) edge.
    """
    n1 = vertices
    edges: list[Edge] = []
    for i in range(2, n1):
        edges.append((1, i, a))
        edges.append((i, n1, b))
    for i in range(2, n1):
        for j in range(i + 1, n1):
            edges.append((i, j, m))
    return Multigraph(n1, tuple(edges))


def tesler_graph(vertices: int, a: int, b: int) -> Multigraph:
    """K_{n+1}^{a,b}: pairs within [n] with multiplicity a, edges (i,n+1) x b."""
    n1 = vertices
    edges: list[Edge] = []
    for i in range(1, n1):
        for j in range(i + 1, n1):
            edges.append((i, j, a))
        edges.append((i, n1, b))
    return Multigraph(n1, tuple(edges))


def build_graph(kind: str, params: Sequence) -> Multigraph:
    """Build a graph by family name.

    kind is one of "complete", "morris", "tesler", "custom"; params carries
    the family parameters ([n+1], [n+1,a,b,m], [n+1,a,b], or an edge list).
    """
    if kind == "complete":
        if len(params) != 1:
            raise ValueError("complete expects a single parameter n+1")
        return complete_graph(int(params[0]))
    if kind == "morris":
        if len(params) != 4:
            raise ValueError("morris expects parameters n+1, a, b, m")
        return morris_graph(*(int(p) for p in params))
    if kind == "tesler":
        if len(params) != 3:
            raise ValueError("tesler expects parameters n+1, a, b")
        return tesler_graph(*(int(p) for p in params))
    if kind == "custom":
        edges = tuple(tuple(int(x) for x in e) for e in params)
        top = max((j for _, j, *_ in edges), default=1)
        return Multigraph(top, edges)
    raise ValueError(f"unknown graph kind {kind!r}")


def degree_offsets(G: Multigraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(t, d) with t_i = outdeg(i) - 1 over the first n vertices and
    d_i = indeg(i) - 1 over all vertices, multiplicity weighted."""
    n1 = G.vertex_count
    t = tuple(G.out_degree(i) - 1 for i in range(1, n1))
    d = tuple(G.in_degree(i) - 1 for i in range(1, n1 + 1))
    return t, d


def kostant(G: Multigraph, b: Sequence[int]) -> int:
    """Kostant partition function K_G(b).

    Counts assignments of nonnegative integers to the N edge slots whose
    signed root sum equals b.  Evaluated by sweeping vertices in order and
    distributing each vertex's supply (netflow plus accumulated inflow) over
    its out-edges; an edge of multiplicity m receiving total flow f is
    weighted by the number of ordered splits of f into m parts.
    """
    b = tuple(int(x) for x in b)
    if len(b) != G.vertex_count:
        raise ValueError("vector length must equal the vertex count")
    if sum(b) != 0:
        return 0
    n1 = G.vertex_count
    out: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, j, m in G.edges:
        out[i].append((j, m))

    # states: pending inflow for vertices v..n1 -> number of weighted flows
    states: dict[tuple[int, ...], int] = {(0,) * n1: 1}
    for v in range(1, n1 + 1):
        targets = out.get(v, [])
        new: dict[tuple[int, ...], int] = defaultdict(int)
        for pend, cnt in states.items():
            supply = b[v - 1] + pend[0]
            rest = pend[1:]
            if supply < 0:
                continue
            if not targets:
                if supply == 0:
                    new[rest] += cnt
                continue
            for comp in weak_compositions(supply, len(targets)):
                w = cnt
                for flow, (_, mult) in zip(comp, targets):
                    w *= compositions_weight(flow, mult)
                    if w == 0:
                        break
                if w == 0:
                    continue
                nxt = list(rest)
                for flow, (tgt, _) in zip(comp, targets):
                    nxt[tgt - v - 1] += flow
                new[tuple(nxt)] += w
        states = dict(new)
        if not states:
            return 0
    return states.get((), 0)
