"""Pure-Python pairing-composition kernels.

A diagram on two rows of f vertices is stored as a partner array of length
2f over 0-based labels: entry i holds the label matched with i (labels 0..f-1
are the top row, f..2f-1 the bottom row).  Stacking diagram b below diagram a
identifies a's bottom row with b's top row; the composite matching is read off
by tracing paths through that middle layer, and the closed cycles pruned from
the middle are counted separately.

The compiled twin in ``_compose_c`` exposes the same functions.
"""

import numpy as np


def compose_partner(pa, pb, f):
    """Compose two partner arrays; return (composite partner bytes, loop count)."""
    two_f = 2 * f
    out = bytearray(two_f)
    done = bytearray(two_f)
    visited = bytearray(f)

    for start in range(two_f):
        if done[start]:
            continue
        if start < f:
            j = pa[start]
            if j < f:
                end = j
            else:
                m = j - f
                from_a = True
                while True:
                    visited[m] = 1
                    if from_a:
                        j2 = pb[m]
                        if j2 >= f:
                            end = j2
                            break
                        m = j2
                    else:
                        j2 = pa[f + m]
                        if j2 < f:
                            end = j2
                            break
                        m = j2 - f
                    from_a = not from_a
        else:
            j = pb[start]
            if j >= f:
                end = j
            else:
                m = j
                from_a = False
                while True:
                    visited[m] = 1
                    if from_a:
                        j2 = pb[m]
                        if j2 >= f:
                            end = j2
                            break
                        m = j2
                    else:
                        j2 = pa[f + m]
                        if j2 < f:
                            end = j2
                            break
                        m = j2 - f
                    from_a = not from_a
        out[start] = end
        out[end] = start
        done[start] = 1
        done[end] = 1

    loops = 0
    for m in range(f):
        if visited[m]:
            continue
        loops += 1
        cur = m
        from_a = True
        while True:
            visited[cur] = 1
            cur = pb[cur] if from_a else pa[f + cur] - f
            from_a = not from_a
            if cur == m and from_a:
                break
    return bytes(out), loops


def compose_table(partners, f):
    """All-pairs composition table.

    ``partners`` is an (n, 2f) uint8 array whose rows are lexicographically
    sorted partner arrays.  Returns (idx, loops) where idx[i, j] is the row
    index of the composite of row i over row j and loops[i, j] its loop count.
    """
    n = partners.shape[0]
    rows = [bytes(partners[i]) for i in range(n)]
    index = {row: i for i, row in enumerate(rows)}
    idx = np.empty((n, n), dtype=np.int32)
    loops = np.empty((n, n), dtype=np.uint8)
    for i in range(n):
        pa = rows[i]
        for j in range(n):
            comp, c = compose_partner(pa, rows[j], f)
            idx[i, j] = index[comp]
            loops[i, j] = c
    return idx, loops
