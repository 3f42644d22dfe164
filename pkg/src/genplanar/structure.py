"""Normal-subgroup structure: closures, minimal normal subgroups,
quotients, chief series, complements, and full subgroup enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .groups import FiniteGroup, Subgroup, from_cayley_table, is_two_generated, iter_bits

# Full subgroup enumeration is refused above this order.
ENUMERATION_LIMIT = 64


class NotNormal(ValueError):
    """The given subgroup is not normal in its parent."""


class TrivialGroup(ValueError):
    """The operation requires a nontrivial group."""


class TooLarge(ValueError):
    """The group exceeds the guard for an exhaustive operation."""


def normal_closure(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    """Least normal subgroup of G containing the seeds.

    Generated by all conjugates of the seeds.
    """
    rows = G.rows
    inv = G.inverses
    gens = set()
    for s in set(seeds):
        for g in range(G.order):
            gens.add(rows[rows[inv[g]][s]][g])
    return Subgroup(G, kernels.closure_mask(G.table, sorted(gens)))


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All minimal normal subgroups, via normal closures of single elements.

    A minimal normal subgroup is the normal closure of each of its
    nontrivial elements, so the inclusion-minimal closures are exactly
    the minimal normal subgroups.  Results are sorted by (size, mask).
    """
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    closures = {normal_closure(G, [g]).mask for g in range(1, G.order)}
    minimal = [
        m for m in closures if not any(c != m and c & m == c for c in closures)
    ]
    minimal.sort(key=lambda m: (m.bit_count(), m))
    return [Subgroup(G, m) for m in minimal]


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """Quotient group G/N and the projection map element -> coset index.

    Cosets are numbered in order of their smallest representative, so
    the identity coset is index 0.  The quotient table is re-validated
    through from_cayley_table.
    """
    if N.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    if not N.is_normal():
        raise NotNormal(f"subgroup of size {N.size} is not normal in {G.name}")
    if N.is_trivial:
        return G, list(range(G.order))
    rows = G.rows
    proj = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if proj[x] == -1:
            cid = len(reps)
            reps.append(x)
            for m in N.members():
                proj[rows[x][m]] = cid
    q = len(reps)
    q_table = [[proj[rows[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    names = [f"[{G.element_names[r]}]" for r in reps]
    Q = from_cayley_table(q_table, name=f"{G.name}/N{N.size}", element_names=names)
    return Q, proj


@dataclass(frozen=True)
class ChiefSeries:
    """A maximal chain of normal subgroups G = N_0 > N_1 > ... > N_t = 1."""

    group: FiniteGroup
    terms: list[Subgroup]
    factor_orders: list[int]

    @property
    def length(self) -> int:
        return len(self.factor_orders)


def chief_series(G: FiniteGroup, reverse_ties: bool = False) -> ChiefSeries:
    """Greedy chief series, built from the bottom up.

    At each step a minimal normal subgroup of the current quotient is
    pulled back.  Ties are broken deterministically: smallest factor
    order first, then smallest pulled-back membership mask
    (reverse_ties flips the choice, for invariance testing).
    """
    ascending = [Subgroup(G, 1)]
    while ascending[-1].size < G.order:
        K = ascending[-1]
        Q, proj = quotient(G, K)
        candidates = []
        for M in minimal_normal_subgroups(Q):
            pullback = 0
            for x in range(G.order):
                if M.mask >> proj[x] & 1:
                    pullback |= 1 << x
            candidates.append((M.size, pullback))
        candidates.sort()
        chosen = candidates[-1] if reverse_ties else candidates[0]
        ascending.append(Subgroup(G, chosen[1]))
    terms = ascending[::-1]
    factors = [
        terms[i - 1].size // terms[i].size for i in range(1, len(terms))
    ]
    return ChiefSeries(G, terms, factors)


def count_complements(G: FiniteGroup, N: Subgroup) -> int:
    """Number of subgroups H with H meet N trivial and H N = G.

    Closes all pairs (x, y): valid whenever G/N is 2-generated, since
    every complement is isomorphic to G/N.  Falls back to full
    enumeration otherwise.
    """
    if not N.is_normal():
        raise NotNormal("complement counting requires a normal subgroup")
    target = G.order // N.size
    Q, _ = quotient(G, N)
    if is_two_generated(Q):
        masks = {1}
        for x in range(G.order):
            for y in range(x, G.order):
                masks.add(kernels.closure_mask(G.table, (x, y)))
        return sum(
            1 for m in masks if m & N.mask == 1 and m.bit_count() == target
        )
    return sum(
        1
        for H in enumerate_subgroups(G)
        if H.mask & N.mask == 1 and H.size == target
    )


def enumerate_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All subgroups of G (guarded to order <= ENUMERATION_LIMIT).

    Cyclic subgroups first, then pairwise joins until a fixpoint; every
    subgroup is a join of cyclic subgroups, so this is exhaustive.
    """
    if G.order > ENUMERATION_LIMIT:
        raise TooLarge(
            f"subgroup enumeration guarded to order <= {ENUMERATION_LIMIT}"
        )
    table = G.table
    subs = {kernels.closure_mask(table, [x]) for x in range(G.order)}
    tried: set[int] = set()
    while True:
        new: set[int] = set()
        current = sorted(subs)
        for i, a in enumerate(current):
            for b in current[i + 1 :]:
                union = a | b
                if union in tried or union in subs:
                    continue
                tried.add(union)
                joined = kernels.closure_mask(table, list(iter_bits(union)))
                if joined not in subs:
                    new.add(joined)
        if not new:
            break
        subs |= new
    return [
        Subgroup(G, m) for m in sorted(subs, key=lambda m: (m.bit_count(), m))
    ]


def has_order2_quotient(G: FiniteGroup) -> bool:
    """Whether G has an epimorphic image of order 2.

    Equivalent to the subgroup generated by all commutators and all
    squares being proper.
    """
    rows = G.rows
    inv = G.inverses
    gens = set()
    for x in range(G.order):
        gens.add(rows[x][x])
        row_inv_x = rows[inv[x]]
        for y in range(G.order):
            gens.add(rows[rows[row_inv_x[inv[y]]][x]][y])
    mask = kernels.closure_mask(G.table, sorted(gens))
    return mask.bit_count() < G.order
