"""Pure-Python closure kernels; fallback for the compiled extension.

Both backends expose the same two functions with identical semantics;
see kernels.py for the import-time selection.
"""

from __future__ import annotations

from typing import Sequence


def _as_rows(table) -> list[list[int]]:
    return table if isinstance(table, list) else table.tolist()


def closure_mask(table, seeds: Sequence[int]) -> int:
    """Bitmask of the subgroup generated by the seed elements.

    Walks the Cayley graph from the identity, right-multiplying by the
    seeds; in a finite group the words in the seeds form the whole
    generated subgroup.
    """
    rows = _as_rows(table)
    n = len(rows)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    gens = list(seeds)
    while stack:
        row = rows[stack.pop()]
        for g in gens:
            y = row[g]
            if not seen[y]:
                seen[y] = 1
                stack.append(y)
    mask = 0
    for i in range(n - 1, -1, -1):
        mask = mask << 1 | seen[i]
    return mask


def generation_row_masks(table) -> list[int]:
    """For each x, the mask of all y such that {x, y} generates the group.

    The n x n generating-pair matrix (as n row masks), including the
    diagonal and the identity row/column; symmetric by construction.
    """
    rows = _as_rows(table)
    n = len(rows)
    full = (1 << n) - 1
    masks = [0] * n
    seen = [0] * n
    stack = [0] * n
    stamp = 0
    for x in range(n):
        if closure_mask(rows, [x]) == full:
            # x alone generates, so every pair containing x does.
            masks[x] = full
            for y in range(n):
                masks[y] |= 1 << x
            continue
        for y in range(x, n):
            if masks[x] >> y & 1:
                continue
            stamp += 1
            seen[0] = stamp
            stack[0] = 0
            top = 1
            size = 1
            while top:
                top -= 1
                row = rows[stack[top]]
                z = row[x]
                if seen[z] != stamp:
                    seen[z] = stamp
                    stack[top] = z
                    top += 1
                    size += 1
                z = row[y]
                if seen[z] != stamp:
                    seen[z] = stamp
                    stack[top] = z
                    top += 1
                    size += 1
            if size == n:
                masks[x] |= 1 << y
                masks[y] |= 1 << x
    return masks
