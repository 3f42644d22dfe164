"""Exact generation statistics: generating-pair counts, generation
probabilities, Gaschutz fibers, the alpha edge-density invariant, and
the per-chief-factor alpha profile.

Everything here is exact integer/rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .groups import FiniteGroup, Subgroup, is_two_generated, iter_bits
from .structure import (
    chief_series,
    count_complements,
    has_order2_quotient,
    minimal_normal_subgroups,
    quotient,
)


class NotGeneratingModuloN(ValueError):
    """The chosen pair does not generate the group modulo N."""


class QuotientNotTwoGenerated(ValueError):
    """G/N cannot be generated by two elements."""


class NotTwoGenerated(ValueError):
    """G cannot be generated by two elements."""


class NotAbelianMinimalNormal(ValueError):
    """The subgroup is not an abelian minimal normal subgroup."""


def ordered_generating_pairs(G: FiniteGroup) -> int:
    """Number of ordered pairs (x, y) in G^2 with <x, y> = G."""
    return sum(row.bit_count() for row in G.generation_rows())


def generation_probability(G: FiniteGroup) -> Fraction:
    """Probability that a uniform ordered pair from G^2 generates G."""
    return Fraction(ordered_generating_pairs(G), G.order**2)


def _coset_mask(G: FiniteGroup, g: int, N: Subgroup) -> int:
    row = G.rows[g]
    mask = 0
    for m in N.members():
        mask |= 1 << row[m]
    return mask


def gaschutz_fiber_count(G: FiniteGroup, N: Subgroup, g1: int, g2: int) -> int:
    """Size of {(n1, n2) in N^2 : <g1 n1, g2 n2> = G}.

    Requires that (g1, g2) generates G modulo N; by Gaschutz's theorem
    the count does not depend on which valid pair is chosen.
    """
    seeds = [g1, g2] + list(N.members())
    if kernels.closure_mask(G.table, seeds) != G.full_mask():
        raise NotGeneratingModuloN(
            f"({g1}, {g2}) does not generate {G.name} modulo the subgroup"
        )
    rows = G.generation_rows()
    coset2 = _coset_mask(G, g2, N)
    return sum(
        (rows[u] & coset2).bit_count() for u in iter_bits(_coset_mask(G, g1, N))
    )


def _valid_pair_cosets(G: FiniteGroup, N: Subgroup):
    """Quotient data and the coset pairs that generate G modulo N."""
    Q, proj = quotient(G, N)
    if not is_two_generated(Q):
        raise QuotientNotTwoGenerated(f"{G.name} modulo the subgroup needs > 2 generators")
    reps = [-1] * Q.order
    for x in range(G.order - 1, -1, -1):
        reps[proj[x]] = x
    qrows = Q.generation_rows()
    pairs = [
        (q1, q2)
        for q1 in range(Q.order)
        for q2 in iter_bits(qrows[q1])
    ]
    return Q, proj, reps, pairs


def relative_generation_probability(
    G: FiniteGroup, N: Subgroup, verify: bool = False
) -> Fraction:
    """Conditional probability of generating G given generation modulo N.

    Picks the first valid pair.  With verify=True the fiber is
    recomputed for every generating coset pair of G/N and checked to be
    constant; lifts within fixed cosets count the same set by
    definition, so one representative per coset pair is exhaustive.
    """
    _, _, reps, pairs = _valid_pair_cosets(G, N)
    fibers = [
        gaschutz_fiber_count(G, N, reps[q1], reps[q2])
        for q1, q2 in (pairs if verify else pairs[:1])
    ]
    if verify and len(set(fibers)) != 1:
        raise AssertionError(
            f"Gaschutz fiber count varies over valid pairs in {G.name}: "
            f"{sorted(set(fibers))}"
        )
    return Fraction(fibers[0], N.size**2)


def alpha(G: FiniteGroup, N: Subgroup) -> Fraction:
    """|N| * relative generation probability: the edge-density ratio
    between the generating graphs of G and of G/N."""
    return N.size * relative_generation_probability(G, N)


@dataclass(frozen=True)
class AlphaRecord:
    """Alpha data for one chief factor.

    For abelian factors of order p^a the complement count c satisfies
    alpha = (p^(2a) - c) / p^a, and the value classifies as: "one"
    (|N| = 2, complemented, quotient maps onto C_2), "three_halves"
    (|N| = 2, complemented, no order-2 image), or "at_least_two".
    """

    level: int
    factor_order: int
    fiber_count: int
    alpha: Fraction
    is_abelian_factor: bool
    p: int | None = None
    a: int | None = None
    complement_count: int | None = None
    alpha_case: str = "non_abelian"

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "factor_order": self.factor_order,
            "fiber_count": self.fiber_count,
            "alpha": {"num": self.alpha.numerator, "den": self.alpha.denominator},
            "abelian": self.is_abelian_factor,
            "p": self.p,
            "a": self.a,
            "complements": self.complement_count,
            "case": self.alpha_case,
        }


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            m = n
            while m % p == 0:
                m //= p
                a += 1
            return (p, a) if m == 1 else None
        p += 1
    return (n, 1)


def _factor_record(Q: FiniteGroup, Nbar: Subgroup, level: int) -> AlphaRecord:
    """Alpha record for the minimal normal subgroup Nbar of Q, with the
    complement-count cross-check on abelian factors."""
    fiber = gaschutz_fiber_count(
        Q, Nbar, *_first_valid_pair(Q, Nbar)
    )
    value = Fraction(fiber, Nbar.size)
    if not Nbar.is_abelian():
        if value < 1:
            raise AssertionError(
                f"non-abelian factor with alpha {value} < 1 in {Q.name}"
            )
        return AlphaRecord(level, Nbar.size, fiber, value, False)

    pp = _prime_power(Nbar.size)
    if pp is None:
        raise AssertionError(
            f"abelian minimal normal factor of non-prime-power order {Nbar.size}"
        )
    p, a = pp
    c = count_complements(Q, Nbar)
    formula = Fraction(p ** (2 * a) - c, p**a)
    if value != formula:
        raise AssertionError(
            f"fiber alpha {value} != complement formula {formula} in {Q.name}"
        )
    if value < p**a - p ** (a - 1):
        raise AssertionError(f"alpha {value} below p^a - p^(a-1) in {Q.name}")

    if value < 2:
        if Nbar.size != 2 or c == 0:
            raise AssertionError(
                f"alpha {value} < 2 without |N| = 2 and a complement in {Q.name}"
            )
        R, _ = quotient(Q, Nbar)
        has_c2_image = has_order2_quotient(R)
        if value == 1:
            case = "one"
            ok = has_c2_image
        else:
            case = "three_halves"
            ok = value == Fraction(3, 2) and not has_c2_image
        if not ok:
            raise AssertionError(
                f"alpha {value} inconsistent with order-2-image condition in {Q.name}"
            )
    else:
        case = "at_least_two"
    return AlphaRecord(level, Nbar.size, fiber, value, True, p, a, c, case)


def _first_valid_pair(G: FiniteGroup, N: Subgroup) -> tuple[int, int]:
    _, _, reps, pairs = _valid_pair_cosets(G, N)
    q1, q2 = pairs[0]
    return reps[q1], reps[q2]


def abelian_factor_check(G: FiniteGroup, N: Subgroup) -> AlphaRecord:
    """Validate the complement formula and case classification for an
    abelian minimal normal subgroup N of G (with G/N 2-generated)."""
    if (
        not N.is_normal()
        or not N.is_abelian()
        or N.mask not in {M.mask for M in minimal_normal_subgroups(G)}
    ):
        raise NotAbelianMinimalNormal(
            "expected an abelian minimal normal subgroup"
        )
    return _factor_record(G, N, level=1)


def alpha_profile(G: FiniteGroup, reverse_ties: bool = False) -> list[AlphaRecord]:
    """Alpha records along a chief series of G (level 1 = top factor).

    The product of the alphas is checked against |G| * P_G(2); the two
    are equal exactly, independent of chief-series tie-breaking.
    """
    if G.order == 1:
        raise NotTwoGenerated("alpha profile requires a nontrivial group")
    if not is_two_generated(G):
        raise NotTwoGenerated(f"{G.name} needs more than two generators")
    series = chief_series(G, reverse_ties=reverse_ties)
    records = []
    for i in range(1, len(series.terms)):
        upper = series.terms[i - 1]
        lower = series.terms[i]
        Q, proj = quotient(G, lower)
        bar_mask = 0
        for x in upper.members():
            bar_mask |= 1 << proj[x]
        records.append(_factor_record(Q, Subgroup(Q, bar_mask), level=i))
    product = Fraction(1)
    for r in records:
        product *= r.alpha
    if product != G.order * generation_probability(G):
        raise AssertionError(
            f"alpha product {product} != |G| P(2) for {G.name}"
        )
    return records
