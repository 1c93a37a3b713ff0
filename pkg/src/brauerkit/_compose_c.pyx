# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled pairing-composition kernels; same interface as ``_compose_py``."""

import numpy as np


cdef int _compose_into(const unsigned char[:] pa, const unsigned char[:] pb,
                       int f, unsigned char *out, unsigned char *visited) noexcept nogil:
    """Write the composite partner array into ``out``; return the loop count."""
    cdef int two_f = 2 * f
    cdef int start, j, j2, m, end, cur, loops
    cdef bint from_a
    cdef int i
    for i in range(two_f):
        out[i] = 255
    for i in range(f):
        visited[i] = 0

    for start in range(two_f):
        if out[start] != 255:
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
        out[start] = <unsigned char> end
        out[end] = <unsigned char> start

    loops = 0
    for m in range(f):
        if visited[m]:
            continue
        loops += 1
        cur = m
        from_a = True
        while True:
            visited[cur] = 1
            if from_a:
                cur = pb[cur]
            else:
                cur = pa[f + cur] - f
            from_a = not from_a
            if cur == m and from_a:
                break
    return loops


def compose_partner(const unsigned char[:] pa, const unsigned char[:] pb, int f):
    """Compose two partner arrays; return (composite partner bytes, loop count)."""
    cdef unsigned char out[64]
    cdef unsigned char visited[32]
    cdef int loops
    if 2 * f > 64:
        raise ValueError("kernel supports f <= 32")
    loops = _compose_into(pa, pb, f, out, visited)
    return bytes(out[: 2 * f]), loops


cdef int _bisect_row(const unsigned char[:, :] rows, const unsigned char *key,
                     int n, int width) noexcept nogil:
    """Index of ``key`` among the lexicographically sorted ``rows``; -1 if absent."""
    cdef int lo = 0, hi = n, mid, c, k
    cdef int cmp
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = 0
        for k in range(width):
            c = rows[mid, k]
            if c < key[k]:
                cmp = -1
                break
            if c > key[k]:
                cmp = 1
                break
        if cmp < 0:
            lo = mid + 1
        elif cmp > 0:
            hi = mid
        else:
            return mid
    return -1


def compose_table(const unsigned char[:, :] partners, int f):
    """All-pairs composition table over sorted partner rows (see pure twin)."""
    cdef int n = partners.shape[0]
    cdef int width = 2 * f
    cdef unsigned char out[64]
    cdef unsigned char visited[32]
    cdef int i, j, c, pos
    if width > 64:
        raise ValueError("kernel supports f <= 32")
    idx_arr = np.empty((n, n), dtype=np.int32)
    loops_arr = np.empty((n, n), dtype=np.uint8)
    cdef int[:, :] idx = idx_arr
    cdef unsigned char[:, :] loops = loops_arr
    with nogil:
        for i in range(n):
            for j in range(n):
                c = _compose_into(partners[i], partners[j], f, out, visited)
                pos = _bisect_row(partners, out, n, width)
                idx[i, j] = pos
                loops[i, j] = <unsigned char> c
    if n and int(idx_arr.min()) < 0:
        raise ValueError("partner rows must be lexicographically sorted and closed under composition")
    return idx_arr, loops_arr
