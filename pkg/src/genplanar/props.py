"""Catalog-wide property checks behind the `props` CLI subcommand:
Gaschutz independence, multiplicativity, alpha products, abelian-factor
classification, edge-count relations, the order-6 density inequality,
and tester-vs-oracle planarity agreement."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

from . import kernels
from .genstats import (
    alpha_profile,
    generation_probability,
    ordered_generating_pairs,
    relative_generation_probability,
)
from .graphs import SimpleGraph, generating_graph
from .groups import FiniteGroup, is_cyclic, is_two_generated, totient
from .minors import planar_oracle
from .planarity import (
    embedding_is_euler_valid,
    is_planar,
    verify_kuratowski,
)
from .structure import minimal_normal_subgroups, quotient


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    g = SimpleGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def check_gaschutz_independence(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order == 1:
            continue
        for N in minimal_normal_subgroups(G):
            try:
                relative_generation_probability(G, N, verify=True)
            except AssertionError as exc:
                failures.append(f"{G.name}, |N|={N.size}: {exc}")
    return failures


def check_multiplicativity(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order == 1:
            continue
        p_g = generation_probability(G)
        for N in minimal_normal_subgroups(G):
            Q, _ = quotient(G, N)
            product = generation_probability(Q) * relative_generation_probability(G, N)
            if product != p_g:
                failures.append(
                    f"{G.name}, |N|={N.size}: {product} != {p_g}"
                )
    return failures


def check_alpha_product(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order == 1 or not is_two_generated(G):
            continue
        expected = G.order * generation_probability(G)
        for reverse in (False, True):
            product = Fraction(1)
            for r in alpha_profile(G, reverse_ties=reverse):
                product *= r.alpha
            if product != expected:
                failures.append(
                    f"{G.name} (reverse={reverse}): {product} != {expected}"
                )
    return failures


def check_abelian_factor_cases(groups: Sequence[FiniteGroup]) -> list[str]:
    # Formula, bound and case conditions are asserted inside the profile
    # computation; on top of that, a nonzero complement count must be a
    # power of the factor prime.
    failures = []
    for G in groups:
        if G.order == 1 or not is_two_generated(G):
            continue
        try:
            records = alpha_profile(G)
        except AssertionError as exc:
            failures.append(f"{G.name}: {exc}")
            continue
        for r in records:
            if not r.is_abelian_factor or r.complement_count in (0, None):
                continue
            c = r.complement_count
            while c % r.p == 0:
                c //= r.p
            if c != 1:
                failures.append(
                    f"{G.name} level {r.level}: c={r.complement_count} "
                    f"is not a power of {r.p}"
                )
    return failures


def check_pair_edge_relation(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order == 1:
            continue
        ordered = ordered_generating_pairs(G)
        edges = generating_graph(G).edge_count
        expected = 2 * edges + (3 * totient(G.order) if is_cyclic(G) else 0)
        if ordered != expected:
            failures.append(f"{G.name}: ordered={ordered}, expected {expected}")
    return failures


def check_density_inequality(groups: Sequence[FiniteGroup]) -> list[str]:
    """Planar 2-generated non-cyclic groups satisfy |G| P(2) < 6, and any
    group violating the inequality has a non-planar generating graph."""
    failures = []
    for G in groups:
        if G.order == 1 or not is_two_generated(G):
            continue
        density = G.order * generation_probability(G)
        if density >= 6 and is_planar(generating_graph(G)).planar:
            failures.append(f"{G.name}: |G|P(2) = {density} >= 6 but planar")
    return failures


def check_conjugation_preserves_edges(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order == 1:
            continue
        rows = G.generation_rows()
        for g in range(G.order):
            perm = [G.conjugate(g, x) for x in range(G.order)]
            ok = all(
                rows[x] >> y & 1 == rows[perm[x]] >> perm[y] & 1
                for x in range(G.order)
                for y in range(x, G.order)
            )
            if not ok:
                failures.append(f"{G.name}: conjugation by {g} breaks edges")
                break
    return failures


def check_isolated_vertices(groups: Sequence[FiniteGroup]) -> list[str]:
    failures = []
    for G in groups:
        if G.order < 2:
            continue
        gamma = generating_graph(G)
        for x in range(1, G.order):
            isolated = gamma.adj[x - 1] == 0
            generates_with_some = any(
                kernels.closure_mask(G.table, [x, y]) == G.full_mask()
                for y in range(1, G.order)
                if y != x
            )
            if isolated == generates_with_some:
                failures.append(f"{G.name}: vertex {x} isolation mismatch")
                break
    return failures


def check_planarity_small(max_vertices: int = 4) -> list[str]:
    failures = []
    for n in range(max_vertices + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for bits in range(1 << len(pairs)):
            g = SimpleGraph(n)
            for i, (u, v) in enumerate(pairs):
                if bits >> i & 1:
                    g.add_edge(u, v)
            if is_planar(g).planar != planar_oracle(g):
                failures.append(f"disagreement on n={n}, edges={bits:b}")
    return failures


def check_planarity_random(seed: int, count: int) -> list[str]:
    failures = []
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(8, 10)
        p = rng.choice([0.25, 0.35, 0.5])
        g = random_graph(rng, n, p)
        verdict = is_planar(g)
        if verdict.planar != planar_oracle(g):
            failures.append(f"disagreement on random graph #{i}")
            continue
        if verdict.planar:
            if not embedding_is_euler_valid(g, verdict.embedding):
                failures.append(f"bad embedding on random graph #{i}")
        else:
            try:
                verify_kuratowski(verdict.witness, g)
            except ValueError as exc:
                failures.append(f"bad witness on random graph #{i}: {exc}")
    return failures


def run_property_suite(
    groups: Sequence[FiniteGroup],
    seed: int = 0,
    random_graphs: int = 60,
    report: Callable[[str], None] = print,
) -> bool:
    checks: list[tuple[str, Callable[[], list[str]]]] = [
        ("gaschutz-independence", lambda: check_gaschutz_independence(groups)),
        ("multiplicativity", lambda: check_multiplicativity(groups)),
        ("alpha-product", lambda: check_alpha_product(groups)),
        ("abelian-factor-cases", lambda: check_abelian_factor_cases(groups)),
        ("pair-edge-relation", lambda: check_pair_edge_relation(groups)),
        ("density-inequality", lambda: check_density_inequality(groups)),
        ("conjugation-edges", lambda: check_conjugation_preserves_edges(groups)),
        ("isolated-vertices", lambda: check_isolated_vertices(groups)),
        ("planarity-exhaustive-small", check_planarity_small),
        ("planarity-random", lambda: check_planarity_random(seed, random_graphs)),
    ]
    all_ok = True
    for name, run in checks:
        failures = run()
        if failures:
            all_ok = False
            report(f"FAIL {name}: {len(failures)} failure(s)")
            for f in failures[:5]:
                report(f"     {f}")
        else:
            report(f"PASS {name}")
    return all_ok
