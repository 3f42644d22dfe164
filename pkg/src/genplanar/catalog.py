"""Group constructors, a group-spec mini-language, the complete
order <= 15 corpus, and the planar-classification sweep with reports.

Spec language grammar:  spec := term ('x' term)*  with terms
C:n, D:n (dihedral, order 2n), Dic:n (dicyclic, order 4n), S:n, A:n,
M:m,n,k (metacyclic, C_m acted on by C_n via k), file:path.
Whitespace is ignored; file paths run to the next whitespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Sequence

from .genstats import (
    AlphaRecord,
    alpha_profile,
    generation_probability,
)
from .graphs import SimpleGraph, generating_graph, pruned_graph
from .groups import (
    FiniteGroup,
    are_isomorphic,
    from_cayley_table,
    is_cyclic,
    is_two_generated,
    read_cayley_table_text,
)
from .planarity import KuratowskiWitness, RotationEmbedding, is_planar


class SpecSyntaxError(ValueError):
    """Malformed group spec; carries the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownFamily(ValueError):
    """A family name outside the spec language."""


class BadParameter(ValueError):
    """A family parameter outside its validity range."""


# -- spec language -----------------------------------------------------------


@dataclass(frozen=True)
class FamilyAtom:
    family: str
    params: tuple[int, ...]

    def pretty(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class FileAtom:
    path: str

    def pretty(self) -> str:
        return f"file:{self.path}"


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple["GroupSpec", ...]

    def pretty(self) -> str:
        return " x ".join(f.pretty() for f in self.factors)


GroupSpec = FamilyAtom | FileAtom | ProductSpec

_FAMILIES = {"C": 1, "D": 1, "Dic": 1, "S": 1, "A": 1, "M": 3}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def read_word(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecSyntaxError("expected a decimal number", start)
        return int(self.text[start : self.pos])

    def expect(self, ch: str) -> None:
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise SpecSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the spec mini-language; parsing and pretty() round-trip."""
    sc = _Scanner(text)
    factors = [_parse_term(sc)]
    while not sc.at_end():
        start = sc.pos
        word = sc.read_word()
        if word != "x":
            raise SpecSyntaxError(f"expected 'x' between terms, got {word!r}", start)
        factors.append(_parse_term(sc))
    if len(factors) == 1:
        return factors[0]
    return ProductSpec(tuple(factors))


def _parse_term(sc: _Scanner) -> GroupSpec:
    sc.skip_ws()
    start = sc.pos
    word = sc.read_word()
    if not word:
        raise SpecSyntaxError("expected a family name", start)
    if word == "file":
        sc.expect(":")
        p0 = sc.pos
        while sc.pos < len(sc.text) and not sc.text[sc.pos].isspace():
            sc.pos += 1
        if sc.pos == p0:
            raise SpecSyntaxError("expected a file path", p0)
        return FileAtom(sc.text[p0 : sc.pos])
    if word not in _FAMILIES:
        raise UnknownFamily(f"unknown group family {word!r} (at position {start})")
    sc.expect(":")
    params = [sc.read_int()]
    for _ in range(_FAMILIES[word] - 1):
        sc.expect(",")
        params.append(sc.read_int())
    return FamilyAtom(word, tuple(params))


# -- constructors ------------------------------------------------------------


def _pow_name(sym: str, i: int) -> str:
    if i == 0:
        return "e"
    if i == 1:
        return sym
    return f"{sym}^{i}"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise BadParameter(f"C:n needs n >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [_pow_name("g", i) for i in range(n)]
    return from_cayley_table(table, name=f"C{n}", element_names=names)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations r^i and reflections s r^i."""
    if n < 1:
        raise BadParameter(f"D:n needs n >= 1, got {n}")
    order = 2 * n

    def idx(i: int, j: int) -> int:
        return j * n + i % n

    table = [[0] * order for _ in range(order)]
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    i = i1 + (i2 if j1 == 0 else -i2)
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2)
    names = [_pow_name("r", i) for i in range(n)]
    names += ["s" if i == 0 else "s" + _pow_name("r", i) for i in range(n)]
    return from_cayley_table(table, name=f"D{n}", element_names=names)


def dicyclic_group(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: a^i b^j with b^2 = a^n, b a b^-1 = a^-1."""
    if n < 1:
        raise BadParameter(f"Dic:n needs n >= 1, got {n}")
    order = 4 * n
    m = 2 * n

    def idx(i: int, j: int) -> int:
        return j * m + i % m

    table = [[0] * order for _ in range(order)]
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    i = i1 + (i2 if j1 == 0 else -i2)
                    if j1 and j2:
                        i += n
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2)
    names = [_pow_name("a", i) for i in range(m)]
    names += ["b" if i == 0 else _pow_name("a", i) + "b" for i in range(m)]
    return from_cayley_table(table, name=f"Dic{n}", element_names=names)


def _perm_name(p: Sequence[int]) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cycle = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cycle.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(parts) or "e"


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms
    ]
    names = [_perm_name(p) for p in perms]
    return from_cayley_table(
        table, name=name, element_names=names, unchecked=len(perms) > 256
    )


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise BadParameter(f"S:n needs 1 <= n <= 6 (table size guard), got {n}")
    return _perm_group(sorted(permutations(range(n))), f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise BadParameter(f"A:n needs 1 <= n <= 6 (table size guard), got {n}")
    perms = sorted(p for p in permutations(range(n)) if _perm_sign(p) == 1)
    return _perm_group(perms, f"A{n}")


def metacyclic_group(m: int, n: int, k: int) -> FiniteGroup:
    """C_m semidirect C_n where the C_n generator acts as x -> x^k."""
    if m < 1 or n < 1 or k < 0:
        raise BadParameter(f"M:m,n,k needs m, n >= 1 and k >= 0")
    if pow(k, n, m) != 1 % m:
        raise BadParameter(f"M:{m},{n},{k} needs k^n = 1 mod m")
    order = m * n
    kpow = [pow(k, j, m) for j in range(n)]

    def idx(i: int, j: int) -> int:
        return j * m + i

    table = [[0] * order for _ in range(order)]
    for i1 in range(m):
        for j1 in range(n):
            for i2 in range(m):
                for j2 in range(n):
                    table[idx(i1, j1)][idx(i2, j2)] = idx(
                        (i1 + i2 * kpow[j1]) % m, (j1 + j2) % n
                    )
    names = [_pow_name("a", i) for i in range(m)]
    full = list(names)
    for j in range(1, n):
        bj = _pow_name("b", j)
        full += [bj if i == 0 else names[i] + bj for i in range(m)]
    return from_cayley_table(table, name=f"M({m},{n},{k})", element_names=full)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n1, n2 = G.order, H.order
    order = n1 * n2
    t1, t2 = G.rows, H.rows
    table = [[0] * order for _ in range(order)]
    for x1 in range(n1):
        for x2 in range(n2):
            row = table[x1 * n2 + x2]
            r1, r2 = t1[x1], t2[x2]
            for y1 in range(n1):
                for y2 in range(n2):
                    row[y1 * n2 + y2] = r1[y1] * n2 + r2[y2]
    names = [
        f"({a},{b})" for a in G.element_names for b in H.element_names
    ]
    return from_cayley_table(
        table,
        name=f"{G.name}x{H.name}",
        element_names=names,
        unchecked=order > 256,
    )


def read_cayley_file(path: str | Path) -> FiniteGroup:
    """Load and validate a Cayley-table text file (name = file stem)."""
    p = Path(path)
    text = p.read_text()
    try:
        table = read_cayley_table_text(text)
    except ValueError as exc:
        raise BadParameter(f"{p}: {exc}") from exc
    return from_cayley_table(table, name=p.stem)


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Realize a parsed spec as a validated Cayley-table group."""
    if isinstance(spec, ProductSpec):
        groups = [build_group(f) for f in spec.factors]
        out = groups[0]
        for h in groups[1:]:
            out = direct_product(out, h)
        return out
    if isinstance(spec, FileAtom):
        return read_cayley_file(spec.path)
    family, params = spec.family, spec.params
    if family == "C":
        return cyclic_group(params[0])
    if family == "D":
        return dihedral_group(params[0])
    if family == "Dic":
        return dicyclic_group(params[0])
    if family == "S":
        return symmetric_group(params[0])
    if family == "A":
        return alternating_group(params[0])
    if family == "M":
        return metacyclic_group(*params)
    raise UnknownFamily(f"unknown group family {family!r}")


def group_from_spec(text: str) -> FiniteGroup:
    return build_group(parse_group_spec(text))


# -- the order <= 15 corpus ---------------------------------------------------

# Complete classification of groups of order <= 15 (28 isomorphism types).
_CORPUS_SPECS = [
    ("C1", "C:1"),
    ("C2", "C:2"),
    ("C3", "C:3"),
    ("C4", "C:4"),
    ("C2xC2", "C:2 x C:2"),
    ("C5", "C:5"),
    ("C6", "C:6"),
    ("D3", "D:3"),
    ("C7", "C:7"),
    ("C8", "C:8"),
    ("C4xC2", "C:4 x C:2"),
    ("C2xC2xC2", "C:2 x C:2 x C:2"),
    ("D4", "D:4"),
    ("Q8", "Dic:2"),
    ("C9", "C:9"),
    ("C3xC3", "C:3 x C:3"),
    ("C10", "C:10"),
    ("D5", "D:5"),
    ("C11", "C:11"),
    ("C12", "C:12"),
    ("C6xC2", "C:6 x C:2"),
    ("D6", "D:6"),
    ("A4", "A:4"),
    ("Dic3", "Dic:3"),
    ("C13", "C:13"),
    ("C14", "C:14"),
    ("D7", "D:7"),
    ("C15", "C:15"),
]


def corpus_up_to_15() -> list[FiniteGroup]:
    """All 28 isomorphism types of groups of order 1..15."""
    out = []
    for label, spec in _CORPUS_SPECS:
        g = group_from_spec(spec)
        g.name = label
        out.append(g)
    return out


# Theorem targets: the eleven 2-generated groups with planar generating graph.
THEOREM_SPECS = [
    ("C2", "C:2"),
    ("C3", "C:3"),
    ("C4", "C:4"),
    ("C5", "C:5"),
    ("C6", "C:6"),
    ("C2xC2", "C:2 x C:2"),
    ("D3", "D:3"),
    ("D4", "D:4"),
    ("Q8", "Dic:2"),
    ("C4xC2", "C:4 x C:2"),
    ("D6", "D:6"),
]

THEOREM_LABELS = [label for label, _ in THEOREM_SPECS]


def theorem_groups() -> list[tuple[str, FiniteGroup]]:
    return [(label, group_from_spec(spec)) for label, spec in THEOREM_SPECS]


def cyclic_k5_elements(G: FiniteGroup) -> list[int]:
    """Five elements of a cyclic group of order >= 7 inducing a K_5 in
    the generating graph: four generators plus one other element."""
    n = G.order
    if not is_cyclic(G) or n < 7:
        raise BadParameter("needs a cyclic group of order >= 7")
    gens = [x for x in range(1, n) if G.element_orders[x] == n][:4]
    extra = next(x for x in range(1, n) if x not in gens)
    return gens + [extra]


# -- the classification sweep -------------------------------------------------


def _ratio(f: Fraction | None) -> dict | None:
    if f is None:
        return None
    return {"num": f.numerator, "den": f.denominator}


@dataclass
class GroupRecord:
    name: str
    order: int
    two_generated: bool | None = None
    gamma_vertices: int | None = None
    gamma_edges: int | None = None
    delta_vertices: int | None = None
    delta_edges: int | None = None
    p2: Fraction | None = None
    alpha_records: list[AlphaRecord] | None = None
    alpha_product: Fraction | None = None
    planar: bool | None = None
    embedding: RotationEmbedding | None = None
    witness: KuratowskiWitness | None = None
    matched: str | None = None
    note: str | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "two_generated": self.two_generated,
            "gamma_vertices": self.gamma_vertices,
            "gamma_edges": self.gamma_edges,
            "delta_vertices": self.delta_vertices,
            "delta_edges": self.delta_edges,
            "p2": _ratio(self.p2),
            "alpha_profile": (
                None
                if self.alpha_records is None
                else [r.as_dict() for r in self.alpha_records]
            ),
            "alpha_product": _ratio(self.alpha_product),
            "planar": self.planar,
            "embedding": (
                None if self.embedding is None else self.embedding.rotations
            ),
            "witness_kind": None if self.witness is None else self.witness.kind,
            "witness_edges": (
                None
                if self.witness is None
                else [list(e) for e in self.witness.edges]
            ),
            "matched": self.matched,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    records: list[GroupRecord]
    found: list[str]
    expected: list[str]
    match: bool
    consistent: bool

    def as_dict(self, version: str, corpus: str) -> dict:
        return {
            "version": version,
            "corpus": corpus,
            "records": [r.as_dict() for r in self.records],
            "summary": {
                "found": self.found,
                "expected": self.expected,
                "match": self.match,
                "consistent": self.consistent,
            },
        }


def analyze_group(G: FiniteGroup, targets: list[tuple[str, FiniteGroup]]) -> GroupRecord:
    """Full per-group pipeline: generation stats, graphs, planarity,
    and the match against the theorem targets."""
    rec = GroupRecord(name=G.name, order=G.order)
    if G.order == 1:
        rec.two_generated = True
        rec.note = "vacuous: trivial group outside theorem scope"
        return rec
    rec.two_generated = is_two_generated(G)
    gamma = generating_graph(G)
    delta, _ = pruned_graph(gamma)
    rec.gamma_vertices = gamma.vertex_count
    rec.gamma_edges = gamma.edge_count
    rec.delta_vertices = delta.vertex_count
    rec.delta_edges = delta.edge_count
    rec.p2 = generation_probability(G)
    if not rec.two_generated:
        verdict = is_planar(gamma)  # edgeless, trivially planar
        rec.planar = verdict.planar
        rec.embedding = verdict.embedding
        rec.note = "edgeless-trivially-planar, outside theorem scope"
        return rec
    rec.alpha_records = alpha_profile(G)
    rec.alpha_product = Fraction(1)
    for r in rec.alpha_records:
        rec.alpha_product *= r.alpha
    verdict = is_planar(gamma)
    rec.planar = verdict.planar
    rec.embedding = verdict.embedding
    rec.witness = verdict.witness
    for label, T in targets:
        if are_isomorphic(G, T):
            rec.matched = label
            break
    return rec


def verify_theorem(groups: Sequence[FiniteGroup]) -> VerificationReport:
    """Sweep the groups, classify each, and compare the planar
    2-generated ones against the eleven-group target list.

    Per-group failures are recorded in the record note, never aborting
    the sweep.  An empty input matches vacuously.
    """
    targets = theorem_groups()
    records = []
    for G in groups:
        try:
            records.append(analyze_group(G, targets))
        except Exception as exc:  # record, never abort
            records.append(
                GroupRecord(
                    name=G.name,
                    order=G.order,
                    note=f"error: {type(exc).__name__}: {exc}",
                )
            )
    found = sorted(
        {
            r.matched
            for r in records
            if r.planar and r.two_generated and r.order > 1 and r.matched
        },
        key=THEOREM_LABELS.index,
    )
    consistent = all(
        (r.matched is not None) == bool(r.planar)
        for r in records
        if r.order > 1 and r.two_generated and r.note is None
    )
    match = (not groups) or (set(found) == set(THEOREM_LABELS) and consistent)
    return VerificationReport(
        records=records,
        found=found,
        expected=list(THEOREM_LABELS),
        match=match,
        consistent=consistent,
    )
