"""Brute-force planarity oracle by exhaustive forbidden-minor search.

Independent of the left-right tester: a graph is planar iff it has no
K_5 or K_{3,3} minor, and minors are searched by recursive edge
contraction with direct subgraph checks at every step.  Guarded to
small graphs; meant for cross-validation, not production testing.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import SimpleGraph, iter_bits
from .structure import TooLarge

ORACLE_VERTEX_LIMIT = 10


def _has_k5_subgraph(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    for sub in combinations(range(n), 5):
        mask = 0
        for v in sub:
            mask |= 1 << v
        if all(adj[v] & mask == mask ^ (1 << v) for v in sub):
            return True
    return False


def _has_k33_subgraph(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    for a in combinations(range(n), 3):
        amask = (1 << a[0]) | (1 << a[1]) | (1 << a[2])
        common = adj[a[0]] & adj[a[1]] & adj[a[2]] & ~amask
        if common.bit_count() >= 3:
            return True
    return False


def _smooth(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Delete degree <= 1 vertices and suppress degree-2 vertices.

    Neither step changes whether a K_5 or K_{3,3} minor exists (both
    targets have minimum degree 3).
    """
    masks = list(adj)
    changed = True
    while changed:
        changed = False
        for v in range(len(masks)):
            d = masks[v].bit_count()
            if d == 0:
                continue
            if d == 1:
                w = masks[v].bit_length() - 1
                masks[w] &= ~(1 << v)
                masks[v] = 0
                changed = True
            elif d == 2:
                a, b = iter_bits(masks[v])
                masks[a] &= ~(1 << v)
                masks[b] &= ~(1 << v)
                masks[v] = 0
                masks[a] |= 1 << b
                masks[b] |= 1 << a
                changed = True
    alive = [v for v in range(len(masks)) if masks[v]]
    pos = {v: i for i, v in enumerate(alive)}
    out = []
    for v in alive:
        m = 0
        for w in iter_bits(masks[v]):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def _contract(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Contract edge (u, v): v merges into u, then v is removed."""
    n = len(adj)
    tmp = list(adj)
    tmp[u] = (tmp[u] | tmp[v]) & ~(1 << u) & ~(1 << v)
    tmp[v] = 0
    for w in range(n):
        if w != u and tmp[w] >> v & 1:
            tmp[w] = (tmp[w] & ~(1 << v)) | (1 << u)
    low = (1 << v) - 1
    return tuple(
        (tmp[w] & low) | (tmp[w] >> (v + 1)) << v for w in range(n) if w != v
    )


def _has_forbidden_minor(adj: tuple[int, ...], memo: dict) -> bool:
    adj = _smooth(adj)
    n = len(adj)
    m = sum(x.bit_count() for x in adj) // 2
    if n < 5 or m < 9:
        return False
    cached = memo.get(adj)
    if cached is not None:
        return cached
    result = _has_k5_subgraph(adj) or (n >= 6 and _has_k33_subgraph(adj))
    if not result:
        for u in range(n):
            for v in iter_bits(adj[u] >> (u + 1) << (u + 1)):
                if _has_forbidden_minor(_contract(adj, u, v), memo):
                    result = True
                    break
            if result:
                break
    memo[adj] = result
    return result


def planar_oracle(graph: SimpleGraph) -> bool:
    """True iff the graph has no K_5 or K_{3,3} minor."""
    if graph.vertex_count > ORACLE_VERTEX_LIMIT:
        raise TooLarge(
            f"planar oracle guarded to {ORACLE_VERTEX_LIMIT} vertices"
        )
    return not _has_forbidden_minor(tuple(graph.adj), {})
