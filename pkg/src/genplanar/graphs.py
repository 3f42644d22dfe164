"""Simple undirected graphs over bitmask adjacency, the generating graph
of a group, and deterministic DOT / edge-list export."""

from __future__ import annotations

from typing import Iterable, Iterator

from .groups import FiniteGroup, iter_bits
from .structure import TrivialGroup


class BadVertex(ValueError):
    """A vertex index outside the graph."""


class SimpleGraph:
    """Undirected simple graph; adjacency is one bitmask per vertex.

    Mutated only while being built; treat instances as immutable once
    handed out.
    """

    def __init__(self, vertex_count: int, labels: list[str] | None = None):
        if labels is not None and len(labels) != vertex_count:
            raise ValueError("labels length must equal vertex count")
        self.vertex_count = vertex_count
        self.labels = labels if labels is not None else [str(v) for v in range(vertex_count)]
        self.adj: list[int] = [0] * vertex_count

    def __repr__(self) -> str:
        return f"SimpleGraph(v={self.vertex_count}, e={self.edge_count})"

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise BadVertex(f"vertex {v} not in 0..{self.vertex_count - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ValueError("loops are not allowed")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.vertex_count):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                yield (u, v)

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph(self.vertex_count, list(self.labels))
        g.adj = list(self.adj)
        return g

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.vertex_count) if not self.adj[v]]


def generating_graph(G: FiniteGroup) -> SimpleGraph:
    """The graph on the non-identity elements of G in which two vertices
    are adjacent iff they are distinct and together generate G.

    Vertex v corresponds to element index v + 1.
    """
    if G.order < 2:
        raise TrivialGroup("the trivial group has no generating graph")
    rows = G.generation_rows()
    g = SimpleGraph(G.order - 1, G.element_names[1:])
    for x in range(1, G.order):
        # Drop the identity column, the diagonal, and shift to 0-based.
        g.adj[x - 1] = (rows[x] & ~(1 << x)) >> 1
    return g


def pruned_graph(g: SimpleGraph) -> tuple[SimpleGraph, list[int]]:
    """g with isolated vertices removed, plus the kept-vertex map
    (new index -> old index).  Edges are unchanged."""
    kept = [v for v in range(g.vertex_count) if g.adj[v]]
    return induced_subgraph(g, kept), kept


def complete_graph(n: int) -> SimpleGraph:
    g = SimpleGraph(n)
    full = (1 << n) - 1
    for v in range(n):
        g.adj[v] = full & ~(1 << v)
    return g


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """Restriction of g to the given vertices (taken in sorted order)."""
    verts = sorted(set(vertices))
    for v in verts:
        g.check_vertex(v)
    position = {v: i for i, v in enumerate(verts)}
    sub = SimpleGraph(len(verts), [g.labels[v] for v in verts])
    for v in verts:
        m = 0
        for w in iter_bits(g.adj[v]):
            if w in position:
                m |= 1 << position[w]
        sub.adj[position[v]] = m
    return sub


def is_complete(g: SimpleGraph) -> bool:
    full = (1 << g.vertex_count) - 1
    return all(g.adj[v] == full & ~(1 << v) for v in range(g.vertex_count))


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    """Deterministic DOT text: vertices in index order, then edges with
    u < v in lexicographic order."""
    lines = [f'graph "{name}" {{']
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{g.labels[v]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list_text(g: SimpleGraph) -> str:
    """Edge-list text: header "p edges <n> <m>", then one "u v" per line."""
    lines = [f"p edges {g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
