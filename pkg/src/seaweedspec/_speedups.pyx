# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: same contract as ``_kernel``, C-speed inner loops.

Keep this file behaviorally identical to ``_kernel.py``; the equivalence is
enforced by tests that run both on the same inputs.
"""

from libc.stdlib cimport calloc, free


cdef int _fill_neighbors(object parts, int* nbr) except -1:
    cdef int s = 1, e, i, j, p
    for part in parts:
        p = part
        e = s + p - 1
        i = s
        j = e
        while i < j:
            nbr[i] = j
            nbr[j] = i
            i += 1
            j -= 1
        s = e + 1
    return 0


cdef int _fill_blocks(object parts, int* blk) except -1:
    cdef int v = 1, idx = 0, p, t
    for part in parts:
        p = part
        idx += 1
        for t in range(p):
            blk[v] = idx
            v += 1
    return 0


def component_counts(top, bottom):
    """Count (cycles, paths); isolated vertices are paths."""
    cdef int n = 0
    for part in top:
        n += part

    cdef int* tnbr = <int*> calloc(n + 1, sizeof(int))
    cdef int* bnbr = <int*> calloc(n + 1, sizeof(int))
    cdef char* visited = <char*> calloc(n + 1, sizeof(char))
    if tnbr == NULL or bnbr == NULL or visited == NULL:
        free(tnbr); free(bnbr); free(visited)
        raise MemoryError()

    cdef int paths = 0, cycles = 0, v, cur, nxt
    cdef bint on_top
    try:
        _fill_neighbors(top, tnbr)
        _fill_neighbors(bottom, bnbr)

        for v in range(1, n + 1):
            if visited[v] or (tnbr[v] and bnbr[v]):
                continue
            paths += 1
            visited[v] = 1
            on_top = tnbr[v] != 0
            cur = v
            while True:
                nxt = tnbr[cur] if on_top else bnbr[cur]
                if nxt == 0:
                    break
                visited[nxt] = 1
                cur = nxt
                on_top = not on_top

        for v in range(1, n + 1):
            if visited[v]:
                continue
            cycles += 1
            visited[v] = 1
            cur = tnbr[v]
            on_top = False
            while cur != v:
                visited[cur] = 1
                nxt = tnbr[cur] if on_top else bnbr[cur]
                cur = nxt
                on_top = not on_top

        return cycles, paths
    finally:
        free(tnbr); free(bnbr); free(visited)


def spectrum_counts(top, bottom):
    """Admissible-position difference counts incl. diagonal, or None."""
    cdef int n = 0
    for part in top:
        n += part

    cdef int* tnbr = <int*> calloc(n + 1, sizeof(int))
    cdef int* bnbr = <int*> calloc(n + 1, sizeof(int))
    cdef int* phi = <int*> calloc(n + 1, sizeof(int))
    cdef int* tb = <int*> calloc(n + 1, sizeof(int))
    cdef int* bb = <int*> calloc(n + 1, sizeof(int))
    cdef char* visited = <char*> calloc(n + 1, sizeof(char))
    cdef long* hist = <long*> calloc(4 * n + 1, sizeof(long))
    if (tnbr == NULL or bnbr == NULL or phi == NULL or tb == NULL
            or bb == NULL or visited == NULL or hist == NULL):
        free(tnbr); free(bnbr); free(phi); free(tb); free(bb); free(visited); free(hist)
        raise MemoryError()

    cdef int paths = 0, v, cur, nxt, step, shift, i, j, ti, bi, pi, off, d
    cdef bint on_top, all_visited
    try:
        _fill_neighbors(top, tnbr)
        _fill_neighbors(bottom, bnbr)

        for v in range(1, n + 1):
            if visited[v] or (tnbr[v] and bnbr[v]):
                continue
            paths += 1
            if paths > 1:
                return None
            visited[v] = 1
            phi[v] = 0
            on_top = tnbr[v] != 0
            cur = v
            while True:
                nxt = tnbr[cur] if on_top else bnbr[cur]
                if nxt == 0:
                    break
                if on_top:
                    step = -1 if cur > nxt else 1
                else:
                    step = -1 if cur < nxt else 1
                phi[nxt] = phi[cur] + step
                visited[nxt] = 1
                cur = nxt
                on_top = not on_top

        all_visited = True
        for v in range(1, n + 1):
            if not visited[v]:
                all_visited = False
                break
        if paths != 1 or not all_visited:
            return None

        shift = phi[n]
        for v in range(1, n + 1):
            phi[v] -= shift

        _fill_blocks(top, tb)
        _fill_blocks(bottom, bb)

        off = 2 * n
        for i in range(1, n + 1):
            ti = tb[i]
            bi = bb[i]
            pi = phi[i]
            for j in range(1, n + 1):
                if ti <= tb[j] and bi >= bb[j]:
                    hist[pi - phi[j] + off] += 1

        out = {}
        for d in range(4 * n + 1):
            if hist[d]:
                out[d - off] = hist[d]
        return out
    finally:
        free(tnbr); free(bnbr); free(phi); free(tb); free(bb); free(visited); free(hist)
