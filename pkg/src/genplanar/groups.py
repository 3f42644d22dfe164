"""Finite groups as validated Cayley tables over element indices 0..n-1.

Element index 0 is always the identity (tables are renumbered on
construction if needed).  Subsets of a group are handled as integer
bitmasks: bit i set means element i belongs to the subset.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels

# Exhaustive n^3 associativity checking is refused above this order
# unless the caller passes unchecked=True.
ASSOC_CHECK_LIMIT = 256


class NotLatinSquare(ValueError):
    """Some row or column of the table is not a permutation of 0..n-1."""


class NoIdentity(ValueError):
    """No index acts as a two-sided identity."""


class NotAssociative(ValueError):
    """The table violates associativity; carries one offending triple."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"associativity fails at triple {triple}")


class TableTooLarge(ValueError):
    """Exhaustive validation refused for tables above ASSOC_CHECK_LIMIT."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class FiniteGroup:
    """A finite group given by its Cayley table.

    table[x][y] holds the index of x*y.  Construction validates the
    group axioms (see from_cayley_table); instances are immutable and
    safe to share between threads.
    """

    def __init__(
        self,
        table: np.ndarray,
        inverses: list[int],
        element_orders: list[int],
        name: str,
        element_names: list[str],
    ):
        self.table = table
        self.order = len(table)
        self.inverses = inverses
        self.element_orders = element_orders
        self.name = name
        self.element_names = element_names
        self._rows: list[list[int]] | None = None
        self._generation_rows: list[int] | None = None
        self._is_abelian: bool | None = None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @property
    def rows(self) -> list[list[int]]:
        """Cayley table as plain lists, for index-heavy Python loops."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def conjugate(self, g: int, x: int) -> int:
        """g^-1 * x * g."""
        rows = self.rows
        return rows[rows[self.inverses[g]][x]][g]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        rows = self.rows
        acc = 0
        for _ in range(k):
            acc = rows[acc][x]
        return acc

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = bool(np.array_equal(self.table, self.table.T))
        return self._is_abelian

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def generation_rows(self) -> list[int]:
        """Per-element masks M[x] = {y : <x, y> is the whole group}.

        The symmetric n x n matrix behind every generating-pair count;
        computed once per group by the active kernel backend.
        """
        if self._generation_rows is None:
            self._generation_rows = kernels.generation_row_masks(self.table)
        return self._generation_rows

    def subgroup(self, mask: int) -> "Subgroup":
        return Subgroup(self, mask)


class Subgroup:
    """A subgroup as a membership mask over the parent's element indices.

    Construction verifies closure, identity and Lagrange; build masks
    with generated_closure rather than by hand unless the subset is
    already known to be a subgroup.
    """

    def __init__(self, parent: FiniteGroup, mask: int):
        if not mask & 1:
            raise ValueError("subgroup mask must contain the identity (bit 0)")
        self.parent = parent
        self.mask = mask
        self.size = mask.bit_count()
        if parent.order % self.size != 0:
            raise ValueError(
                f"subset size {self.size} does not divide group order {parent.order}"
            )
        rows = parent.rows
        for x in iter_bits(mask):
            if not mask >> parent.inverses[x] & 1:
                raise ValueError(f"subset not closed under inverses at {x}")
            row = rows[x]
            for y in iter_bits(mask):
                if not mask >> row[y] & 1:
                    raise ValueError(f"subset not closed under product at ({x}, {y})")

    def __repr__(self) -> str:
        return f"Subgroup(size={self.size} of {self.parent.name})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def members(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    @property
    def is_whole_group(self) -> bool:
        return self.size == self.parent.order

    def is_normal(self) -> bool:
        rows = self.parent.rows
        inv = self.parent.inverses
        for g in range(self.parent.order):
            rg = rows[inv[g]]
            for x in self.members():
                if not self.mask >> rows[rg[x]][g] & 1:
                    return False
        return True

    def is_abelian(self) -> bool:
        rows = self.parent.rows
        elems = list(self.members())
        for i, x in enumerate(elems):
            row = rows[x]
            for y in elems[i + 1 :]:
                if row[y] != rows[y][x]:
                    return False
        return True


def _find_identity(table: np.ndarray) -> int | None:
    n = len(table)
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def _check_latin(table: np.ndarray) -> None:
    n = len(table)
    idx = np.arange(n)
    row_ok = np.sort(table, axis=1) == idx
    if not row_ok.all():
        bad = int(np.nonzero(~row_ok.all(axis=1))[0][0])
        raise NotLatinSquare(f"row {bad} is not a permutation of 0..{n - 1}")
    col_ok = np.sort(table.T, axis=1) == idx
    if not col_ok.all():
        bad = int(np.nonzero(~col_ok.all(axis=1))[0][0])
        raise NotLatinSquare(f"column {bad} is not a permutation of 0..{n - 1}")


def _check_associativity(table: np.ndarray) -> None:
    # One x-slice at a time keeps the workspace at O(n^2).
    for x in range(len(table)):
        left = table[table[x]]
        right = table[x][table]
        if not np.array_equal(left, right):
            y, z = map(int, np.argwhere(left != right)[0])
            raise NotAssociative((x, y, z))


def from_cayley_table(
    table: Sequence[Sequence[int]] | np.ndarray,
    name: str = "G",
    element_names: Sequence[str] | None = None,
    unchecked: bool = False,
) -> FiniteGroup:
    """Validate a Cayley table and build the group.

    The identity need not be index 0 in the input; elements are
    renumbered so that it is.  Checks, in order: entry range, Latin
    square, existence of a two-sided identity, associativity
    (exhaustive, n^3).  Tables larger than ASSOC_CHECK_LIMIT are
    refused unless unchecked=True, which skips only the associativity
    sweep (for tables that are associative by construction).
    """
    arr = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"table must be square and non-empty, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"table entries must lie in 0..{n - 1}")
    _check_latin(arr)
    e = _find_identity(arr)
    if e is None:
        raise NoIdentity("no index acts as a two-sided identity")

    names = [str(x) for x in element_names] if element_names is not None else None
    if names is not None and len(names) != n:
        raise ValueError("element_names length must equal the group order")

    if e != 0:
        # Renumber by the transposition 0 <-> e.
        sigma = list(range(n))
        sigma[0], sigma[e] = e, 0
        renum = np.empty_like(arr)
        for x in range(n):
            for y in range(n):
                renum[sigma[x], sigma[y]] = sigma[arr[x, y]]
        arr = np.ascontiguousarray(renum)
        if names is not None:
            names[0], names[e] = names[e], names[0]

    if n > ASSOC_CHECK_LIMIT and not unchecked:
        raise TableTooLarge(
            f"refusing exhaustive associativity check for order {n} > "
            f"{ASSOC_CHECK_LIMIT}; pass unchecked=True for tables known "
            "to be associative by construction"
        )
    if not unchecked:
        _check_associativity(arr)

    rows = arr.tolist()
    inverses = [0] * n
    for x in range(n):
        inverses[x] = rows[x].index(0)
    orders = [1] * n
    for x in range(1, n):
        y = x
        k = 1
        while y != 0:
            y = rows[y][x]
            k += 1
        orders[x] = k

    if names is None:
        names = ["e"] + [f"x{i}" for i in range(1, n)]
    g = FiniteGroup(arr, inverses, orders, name, names)
    g._rows = rows
    return g


def generated_closure(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    """Least subgroup of G containing the seed elements."""
    seed_list = sorted(set(seeds))
    for s in seed_list:
        if not 0 <= s < G.order:
            raise ValueError(f"seed {s} out of range for order {G.order}")
    return Subgroup(G, kernels.closure_mask(G.table, seed_list))


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    """Subgroup of elements commuting with x."""
    rows = G.rows
    row_x = rows[x]
    mask = 0
    for z in range(G.order):
        if rows[z][x] == row_x[z]:
            mask |= 1 << z
    return Subgroup(G, mask)


def center(G: FiniteGroup) -> Subgroup:
    rows = G.rows
    mask = 0
    for z in range(G.order):
        row_z = rows[z]
        if all(row_z[y] == rows[y][z] for y in range(G.order)):
            mask |= 1 << z
    return Subgroup(G, mask)


def commutator(G: FiniteGroup, g: int, n: int) -> int:
    """g^-1 n^-1 g n, so that g * commutator(g, n) = n^-1 g n."""
    rows = G.rows
    return rows[rows[rows[G.inverses[g]][G.inverses[n]]][g]][n]


def is_two_generated(G: FiniteGroup) -> bool:
    """Whether some pair of elements generates G (trivial group: yes)."""
    if G.order == 1:
        return True
    return any(G.generation_rows())


def is_cyclic(G: FiniteGroup) -> bool:
    return G.order in G.element_orders


def totient(n: int) -> int:
    """Euler's totient; the generator count of the cyclic group C_n."""
    if n < 1:
        raise ValueError("totient requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


# -- isomorphism testing ----------------------------------------------------


def _fingerprint(G: FiniteGroup) -> tuple:
    return (G.order, G.is_abelian, tuple(sorted(G.element_orders)))


def _generating_sequence(G: FiniteGroup) -> list[int]:
    """A minimal (for small orders) sequence of generators of G."""
    n = G.order
    if n == 1:
        return []
    full = G.full_mask()
    singles = [kernels.closure_mask(G.table, [x]) for x in range(n)]
    for x in range(n):
        if singles[x] == full:
            return [x]
    for x in range(n):
        row = G.generation_rows()[x]
        if row:
            return [x, (row & -row).bit_length() - 1]
    if n <= 32:
        for x in range(n):
            for y in range(x + 1, n):
                m = kernels.closure_mask(G.table, [x, y])
                if m == full:
                    continue  # unreachable: caught by generation_rows
                for z in range(y + 1, n):
                    if kernels.closure_mask(G.table, [x, y, z]) == full:
                        return [x, y, z]
    # Greedy fallback: repeatedly adjoin the smallest element outside
    # the current closure.  Short but not guaranteed minimum.
    gens: list[int] = []
    mask = 1
    while mask != full:
        x = next(i for i in range(n) if not mask >> i & 1)
        gens.append(x)
        mask = kernels.closure_mask(G.table, gens)
    return gens


def _extend_homomorphism(
    G: FiniteGroup, H: FiniteGroup, gens: list[int], images: tuple[int, ...]
) -> bool:
    """Whether mapping gens -> images extends to an isomorphism G -> H.

    Extends multiplicatively over the Cayley graph of G on gens; the
    extension is a well-defined homomorphism iff no conflict arises,
    and an isomorphism iff additionally the image has full size.
    """
    n = G.order
    rows_g = G.rows
    rows_h = H.rows
    phi = [-1] * n
    phi[0] = 0
    stack = [0]
    seen_count = 1
    while stack:
        x = stack.pop()
        fx = phi[x]
        for g, h in zip(gens, images):
            y = rows_g[x][g]
            fy = rows_h[fx][h]
            if phi[y] == -1:
                phi[y] = fy
                stack.append(y)
                seen_count += 1
            elif phi[y] != fy:
                return False
    if seen_count != n:  # gens did not generate G: caller bug
        raise AssertionError("generator sequence does not generate the group")
    return len(set(phi)) == n


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Exact isomorphism test by backtracking over generator images."""
    if _fingerprint(G) != _fingerprint(H):
        return False
    if G.order == 1:
        return True
    gens = _generating_sequence(G)
    orders = [G.element_orders[g] for g in gens]
    candidates = [
        [y for y in range(H.order) if H.element_orders[y] == k] for k in orders
    ]

    def backtrack(prefix: tuple[int, ...]) -> bool:
        if len(prefix) == len(gens):
            return _extend_homomorphism(G, H, gens, prefix)
        return any(backtrack(prefix + (y,)) for y in candidates[len(prefix)])

    return backtrack(())


# -- Cayley-table text files ------------------------------------------------


def read_cayley_table_text(text: str) -> np.ndarray:
    """Parse the table file format: '#' comments, n, then n rows of n."""
    rows: list[list[int]] = []
    n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValueError(f"line {lineno}: expected group order, got {line!r}")
            if n < 1:
                raise ValueError(f"line {lineno}: order must be >= 1, got {n}")
            continue
        try:
            entries = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer table entry")
        if len(entries) != n:
            raise ValueError(
                f"line {lineno}: expected {n} entries, got {len(entries)}"
            )
        for v in entries:
            if not 0 <= v < n:
                raise ValueError(f"line {lineno}: entry {v} out of range 0..{n - 1}")
        rows.append(entries)
        if len(rows) == n:
            break
    if n is None:
        raise ValueError("no group order found in file")
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, found {len(rows)}")
    return np.array(rows, dtype=np.int32)


def write_cayley_table_text(G: FiniteGroup) -> str:
    lines = [f"# Cayley table of {G.name}", str(G.order)]
    lines += [" ".join(map(str, row)) for row in G.rows]
    return "\n".join(lines) + "\n"
