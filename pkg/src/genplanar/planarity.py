"""Planarity testing with certificates.

The tester is the left-right (DFS orientation) algorithm, linear in
vertices plus edges, run over all components in one DFS forest.  A
planar verdict carries a rotation-system embedding; a non-planar
verdict carries a Kuratowski subdivision obtained by deleting every
edge whose removal keeps the graph non-planar.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional

from .graphs import SimpleGraph, iter_bits


class MalformedRotation(ValueError):
    """A rotation system that does not match the graph's darts."""


class InputPlanar(ValueError):
    """Witness extraction was asked for a planar graph."""


@dataclass(frozen=True)
class RotationEmbedding:
    """Cyclic neighbor order at each vertex, encoding a plane embedding."""

    rotations: list[list[int]]


@dataclass(frozen=True)
class KuratowskiWitness:
    """An edge-minimal non-planar subgraph: a K_5 or K_{3,3} subdivision."""

    kind: str  # "K5" or "K33"
    edges: list[tuple[int, int]]
    branch_vertices: list[int]


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    embedding: Optional[RotationEmbedding] = None
    witness: Optional[KuratowskiWitness] = None


def euler_bound(vertices: int, edges: int) -> bool:
    """True when the edge count does not already rule planarity out
    (planar graphs with n >= 3 vertices have at most 3n - 6 edges)."""
    return vertices < 3 or edges <= 3 * vertices - 6


# -- left-right planarity test ----------------------------------------------


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTester:
    """One run of the left-right test over a whole graph (all roots)."""

    def __init__(self, graph: SimpleGraph):
        self.n = graph.vertex_count
        self.adj = [list(iter_bits(m)) for m in graph.adj]
        self.height: list[Optional[int]] = [None] * self.n
        self.parent_edge: list[Optional[tuple[int, int]]] = [None] * self.n
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting_depth: dict = {}
        self.oriented: set = set()
        self.ordered_adj: list[list[int]] = [[] for _ in range(self.n)]
        self.ref: dict = {}
        self.side: dict = {}
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict = {}
        self.lowpt_edge: dict = {}
        self.roots: list[int] = []

    # phase 1: DFS orientation and nesting order

    def _dfs_orientation(self, root: int) -> None:
        self.height[root] = 0
        stack = [root]
        while stack:
            v = stack[-1]
            advanced = False
            for w in self.adj[v]:
                if frozenset((v, w)) in self.oriented:
                    continue
                ei = (v, w)
                self.oriented.add(frozenset(ei))
                self.lowpt[ei] = self.height[v]
                self.lowpt2[ei] = self.height[v]
                if self.height[w] is None:  # tree edge
                    self.parent_edge[w] = ei
                    self.height[w] = self.height[v] + 1
                    stack.append(w)
                    advanced = True
                    break
                else:  # back edge
                    self.lowpt[ei] = self.height[w]
                    self._finish_edge(ei)
            if not advanced:
                stack.pop()
                pe = self.parent_edge[v]
                if pe is not None:
                    self._finish_edge(pe)

    def _finish_edge(self, ei: tuple[int, int]) -> None:
        """Set nesting depth of ei and fold its lowpts into its parent."""
        v = ei[0]
        self.nesting_depth[ei] = 2 * self.lowpt[ei]
        if self.lowpt2[ei] < self.height[v]:
            self.nesting_depth[ei] += 1  # chordal adjustment
        e = self.parent_edge[v]
        if e is not None:
            if self.lowpt[ei] < self.lowpt[e]:
                self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[ei])
                self.lowpt[e] = self.lowpt[ei]
            elif self.lowpt[ei] > self.lowpt[e]:
                self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[ei])
            else:
                self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[ei])

    # phase 2: testing

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _conflicting(self, interval: _Interval, b: tuple[int, int]) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _dfs_testing(self, root: int) -> bool:
        # Recursive mirror of the orientation DFS over ordered_adj.
        def visit(v: int) -> bool:
            e = self.parent_edge[v]
            for w in self.ordered_adj[v]:
                ei = (v, w)
                self.stack_bottom[ei] = self.S[-1] if self.S else None
                if ei == self.parent_edge[w]:  # tree edge
                    if not visit(w):
                        return False
                else:  # back edge
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                if self.lowpt[ei] < self.height[v]:  # ei has a return edge
                    if w == self.ordered_adj[v][0]:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    else:
                        if not self._add_constraints(ei, e):
                            return False
            if e is not None:
                self._trim_back_edges(e)
                # side of e is side of a highest return edge
                if self.lowpt[e] < self.height[e[0]]:
                    hl = self.S[-1].left.high
                    hr = self.S[-1].right.high
                    if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                        self.ref[e] = hl
                    else:
                        self.ref[e] = hr
            return True

        return visit(root)

    def _add_constraints(self, ei: tuple[int, int], e: tuple[int, int]) -> bool:
        pair = _ConflictPair()
        # merge return edges of ei into pair.right
        while True:
            q = self.S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if self.lowpt[q.right.low] > self.lowpt[e]:
                # merge intervals
                if pair.right.empty():
                    pair.right.high = q.right.high
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                # align
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self.S and self.S[-1] is self.stack_bottom[ei]:
                break
            if not self.S and self.stack_bottom[ei] is None:
                break
        # merge conflicting return edges of previous siblings into pair.left
        while self._conflicting(self.S[-1].left, ei) or self._conflicting(
            self.S[-1].right, ei
        ):
            q = self.S.pop()
            if self._conflicting(q.right, ei):
                q.swap()
            if self._conflicting(q.right, ei):
                return False
            self.ref[pair.right.low] = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left.high = q.left.high
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low
        if not (pair.left.empty() and pair.right.empty()):
            self.S.append(pair)
        return True

    def _trim_back_edges(self, e: tuple[int, int]) -> None:
        u = e[0]
        # drop entire conflict pairs whose lowest return is u
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            pair = self.S.pop()
            if pair.left.low is not None:
                self.side[pair.left.low] = -1
        if self.S:
            pair = self.S.pop()
            while pair.left.high is not None and pair.left.high[1] == u:
                pair.left.high = self.ref[pair.left.high]
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                self.side[pair.left.low] = -1
                pair.left.low = None
            while pair.right.high is not None and pair.right.high[1] == u:
                pair.right.high = self.ref[pair.right.high]
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                self.side[pair.right.low] = -1
                pair.right.low = None
            self.S.append(pair)

    # phase 3: embedding

    def _resolve_sign(self, e: tuple[int, int]) -> int:
        chain = []
        cur = e
        while self.ref.get(cur) is not None:
            chain.append(cur)
            cur = self.ref[cur]
        result = self.side.get(cur, 1)
        for edge in reversed(chain):
            self.side[edge] = self.side.get(edge, 1) * result
            self.ref[edge] = None
            result = self.side[edge]
        return result

    def _dfs_embedding(self, root: int, rotation: list[list[int]]) -> None:
        left_ref: dict[int, int] = {}
        right_ref: dict[int, int] = {}

        def visit(v: int) -> None:
            for w in self.ordered_adj[v]:
                ei = (v, w)
                if ei == self.parent_edge[w]:  # tree edge
                    rotation[w].insert(0, v)
                    left_ref[v] = w
                    right_ref[v] = w
                    visit(w)
                else:  # back edge: insert dart (w, v) into w's rotation
                    if self.side.get(ei, 1) == 1:
                        # clockwise of right_ref[w]
                        pos = rotation[w].index(right_ref[w])
                        rotation[w].insert(pos + 1, v)
                    else:
                        pos = rotation[w].index(left_ref[w])
                        rotation[w].insert(pos, v)
                        left_ref[w] = v

        visit(root)

    def run(self, want_embedding: bool = True) -> Optional[RotationEmbedding]:
        """None if non-planar, else a rotation embedding (or a trivial
        one when want_embedding is False and the graph is planar)."""
        m = sum(len(a) for a in self.adj) // 2
        if self.n >= 3 and m > 3 * self.n - 6:
            return None
        limit = 3 * self.n + 100
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)

        for v in range(self.n):
            if self.height[v] is None:
                self.roots.append(v)
                self._dfs_orientation(v)
        for ei in list(self.lowpt):
            self.side[ei] = 1
            self.ref[ei] = None
        for v in range(self.n):
            self.ordered_adj[v] = sorted(
                (w for w in self.adj[v] if (v, w) in self.lowpt),
                key=lambda w: self.nesting_depth[(v, w)],
            )
        for root in self.roots:
            if not self._dfs_testing(root):
                return None
        if not want_embedding:
            return RotationEmbedding([])

        for ei in self.lowpt:
            self.nesting_depth[ei] *= self._resolve_sign(ei)
        rotation: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            self.ordered_adj[v] = sorted(
                (w for w in self.adj[v] if (v, w) in self.lowpt),
                key=lambda w: self.nesting_depth[(v, w)],
            )
            rotation[v] = list(self.ordered_adj[v])
        for root in self.roots:
            self._dfs_embedding(root, rotation)
        return RotationEmbedding(rotation)


def _lr_planar(graph: SimpleGraph) -> bool:
    return _LRTester(graph).run(want_embedding=False) is not None


def is_planar(graph: SimpleGraph) -> PlanarityVerdict:
    """Planarity verdict with certificate: a rotation embedding when
    planar, a Kuratowski subdivision when not."""
    embedding = _LRTester(graph).run()
    if embedding is not None:
        return PlanarityVerdict(True, embedding=embedding)
    return PlanarityVerdict(False, witness=kuratowski_witness(graph))


def kuratowski_witness(graph: SimpleGraph) -> KuratowskiWitness:
    """Edge-minimal non-planar subgraph of a non-planar graph.

    Deletes, in index order, every edge whose removal keeps the graph
    non-planar; one pass leaves a graph in which every edge is critical,
    i.e. a subdivision of K_5 or K_{3,3} (plus isolated vertices).
    """
    if _lr_planar(graph):
        raise InputPlanar("witness requested for a planar graph")
    work = graph.copy()
    for u, v in list(graph.edges()):
        work.remove_edge(u, v)
        if _lr_planar(work):
            work.add_edge(u, v)
    kind, branch = _classify_subdivision(work)
    return KuratowskiWitness(kind, list(work.edges()), branch)


def _classify_subdivision(g: SimpleGraph) -> tuple[str, list[int]]:
    """Classify a graph whose non-isolated part is a Kuratowski
    subdivision; raises ValueError when it is not one."""
    branch = [v for v in range(g.vertex_count) if g.degree(v) >= 3]
    inner = [v for v in range(g.vertex_count) if g.degree(v) == 2]
    if any(g.degree(v) == 1 for v in range(g.vertex_count)):
        raise ValueError("degree-1 vertex: not a Kuratowski subdivision")

    # Walk maximal paths through degree-2 vertices between branch vertices.
    links: dict[tuple[int, int], int] = {}
    visits = {v: 0 for v in inner}
    edge_steps = 0
    for b in branch:
        for first in g.neighbors(b):
            prev, cur = b, first
            edge_steps += 1
            while g.degree(cur) == 2:
                visits[cur] += 1
                a, c = g.neighbors(cur)
                prev, cur = cur, (c if a == prev else a)
                edge_steps += 1
            if cur == b:
                raise ValueError("self-returning path: not a subdivision")
            key = (min(b, cur), max(b, cur))
            links[key] = links.get(key, 0) + 1
    if any(count != 2 for count in visits.values()):
        raise ValueError("stray degree-2 vertex: not a subdivision")
    if edge_steps != 2 * g.edge_count:
        raise ValueError("edges outside branch paths: not a subdivision")
    if any(count != 2 for count in links.values()):
        raise ValueError("parallel branch paths: not a subdivision")

    degrees = sorted(len([k for k in links if b in k]) for b in branch)
    if len(branch) == 5 and degrees == [4] * 5 and len(links) == 10:
        return "K5", branch
    if len(branch) == 6 and degrees == [3] * 6 and len(links) == 9:
        # check complete bipartiteness via 2-coloring
        color = {branch[0]: 0}
        stack = [branch[0]]
        link_sets = {b: [k[0] if k[1] == b else k[1] for k in links if b in k] for b in branch}
        while stack:
            b = stack.pop()
            for c in link_sets[b]:
                if c not in color:
                    color[c] = 1 - color[b]
                    stack.append(c)
                elif color[c] == color[b]:
                    raise ValueError("odd cycle of branch paths: not K33")
        sides = sorted(sum(1 for b in branch if color[b] == s) for s in (0, 1))
        if sides == [3, 3]:
            return "K33", branch
    raise ValueError("branch structure matches neither K5 nor K33")


def verify_kuratowski(witness: KuratowskiWitness, graph: SimpleGraph) -> None:
    """Raise unless the witness is a subdivision of its declared kind
    whose edges all belong to the graph."""
    w = SimpleGraph(graph.vertex_count, list(graph.labels))
    for u, v in witness.edges:
        if not graph.has_edge(u, v):
            raise ValueError(f"witness edge ({u}, {v}) not in graph")
        w.add_edge(u, v)
    kind, branch = _classify_subdivision(w)
    if kind != witness.kind:
        raise ValueError(f"witness kind {witness.kind} but structure is {kind}")
    if sorted(branch) != sorted(witness.branch_vertices):
        raise ValueError("branch vertices do not match the witness structure")


def faces_from_rotation(embedding: RotationEmbedding, graph: SimpleGraph) -> int:
    """Number of faces traced by the rotation system.

    Every dart is used exactly once; isolated vertices count one face
    each.  For a valid planar embedding v - e + f = 2 holds per
    connected component.
    """
    rot = embedding.rotations
    if len(rot) != graph.vertex_count:
        raise MalformedRotation("rotation system has wrong vertex count")
    position: list[dict[int, int]] = []
    for v in range(graph.vertex_count):
        if sorted(rot[v]) != graph.neighbors(v):
            raise MalformedRotation(f"rotation at {v} does not match adjacency")
        position.append({u: i for i, u in enumerate(rot[v])})

    unused = {(u, v) for u in range(graph.vertex_count) for v in rot[u]}
    faces = 0
    while unused:
        faces += 1
        start = min(unused)
        dart = start
        while True:
            unused.remove(dart)
            u, v = dart
            nxt = rot[v][(position[v][u] + 1) % len(rot[v])]
            dart = (v, nxt)
            if dart == start:
                break
    return faces + sum(1 for v in range(graph.vertex_count) if not rot[v])


def embedding_is_euler_valid(graph: SimpleGraph, embedding: RotationEmbedding) -> bool:
    """Check v - e + f = 2 on every connected component."""
    seen = [False] * graph.vertex_count
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            for w in iter_bits(graph.adj[stack.pop()]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        sub = _component_subgraph(graph, embedding, comp)
        if sub is None:
            return False
        v_c, e_c, f_c = sub
        if v_c - e_c + f_c != 2:
            return False
    return True


def _component_subgraph(graph, embedding, comp) -> tuple[int, int, int] | None:
    mapping = {v: i for i, v in enumerate(sorted(comp))}
    sub = SimpleGraph(len(comp))
    for v in comp:
        for w in iter_bits(graph.adj[v]):
            if v < w:
                sub.add_edge(mapping[v], mapping[w])
    rot = [[] for _ in comp]
    for v in comp:
        rot[mapping[v]] = [mapping[w] for w in embedding.rotations[v]]
    try:
        f = faces_from_rotation(RotationEmbedding(rot), sub)
    except MalformedRotation:
        return None
    return len(comp), sub.edge_count, f
