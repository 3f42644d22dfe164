# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure kernels; semantics mirror _purekernels exactly."""

import numpy as np


def closure_mask(table, seeds):
    """Bitmask of the subgroup generated by the seed elements."""
    cdef const int[:, ::1] t = np.ascontiguousarray(table, dtype=np.intc)
    cdef int n = t.shape[0]
    cdef int[::1] gens = np.asarray(list(seeds), dtype=np.intc)
    cdef int k = gens.shape[0]
    seen_arr = np.zeros(n, dtype=np.uint8)
    stack_arr = np.empty(n, dtype=np.intc)
    cdef unsigned char[::1] seen = seen_arr
    cdef int[::1] stack = stack_arr
    cdef int top = 1, x, y, i
    seen[0] = 1
    stack[0] = 0
    while top:
        top -= 1
        x = stack[top]
        for i in range(k):
            y = t[x, gens[i]]
            if not seen[y]:
                seen[y] = 1
                stack[top] = y
                top += 1
    mask = 0
    for i in range(n - 1, -1, -1):
        mask = mask << 1 | int(seen[i])
    return mask


def generation_row_masks(table):
    """For each x, the mask of all y such that {x, y} generates the group."""
    cdef const int[:, ::1] t = np.ascontiguousarray(table, dtype=np.intc)
    cdef int n = t.shape[0]
    seen_arr = np.zeros(n, dtype=np.intc)
    stack_arr = np.empty(n, dtype=np.intc)
    cdef int[::1] seen = seen_arr
    cdef int[::1] stack = stack_arr
    cdef int stamp = 0, top, size, x, y, z, w
    full = (1 << n) - 1
    masks = [0] * n
    one = 1
    for x in range(n):
        # Single-generator fast path: every pair containing x generates.
        stamp += 1
        seen[0] = stamp
        stack[0] = 0
        top = 1
        size = 1
        while top:
            top -= 1
            w = stack[top]
            z = t[w, x]
            if seen[z] != stamp:
                seen[z] = stamp
                stack[top] = z
                top += 1
                size += 1
        if size == n:
            masks[x] = full
            for y in range(n):
                masks[y] |= one << x
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
                w = stack[top]
                z = t[w, x]
                if seen[z] != stamp:
                    seen[z] = stamp
                    stack[top] = z
                    top += 1
                    size += 1
                z = t[w, y]
                if seen[z] != stamp:
                    seen[z] = stamp
                    stack[top] = z
                    top += 1
                    size += 1
            if size == n:
                masks[x] |= one << y
                masks[y] |= one << x
    return masks
