"""Pure-Python kernel: the per-seaweed hot loop of the exhaustive sweeps.

This module mirrors the compiled extension ``_speedups`` exactly; the two are
interchangeable behind ``_engine``. Both work on bare part tuples so the hot
path never touches the higher-level classes.

Conventions baked in here (shared with the full matrix pipeline):
  * vertices are 1..n; each top block [s..e] contributes the nested pairs
    {s,e}, {s+1,e-1}, ... and bottom blocks do the same below the line;
  * walking a top edge from u to v changes the potential by -1 when u > v
    (with the arc) and +1 otherwise; bottom edges are the mirror image;
  * potentials are normalized so vertex n sits at 0;
  * the position (i,j) is admissible when i's top block is at most j's and
    i's bottom block is at least j's.
"""

from __future__ import annotations


def _neighbors(parts, n):
    """Per-vertex partner array for one side, 0 meaning no edge."""
    nbr = [0] * (n + 1)
    s = 1
    for p in parts:
        e = s + p - 1
        i, j = s, e
        while i < j:
            nbr[i] = j
            nbr[j] = i
            i += 1
            j -= 1
        s = e + 1
    return nbr


def component_counts(top, bottom):
    """Count (cycles, paths) of the meander on the two part tuples.

    An isolated vertex counts as a path.
    """
    n = sum(top)
    tnbr = _neighbors(top, n)
    bnbr = _neighbors(bottom, n)
    visited = [False] * (n + 1)
    paths = 0
    cycles = 0

    for v in range(1, n + 1):
        if visited[v] or (tnbr[v] and bnbr[v]):
            continue
        # v is an endpoint (degree <= 1): walk the path it starts.
        paths += 1
        visited[v] = True
        on_top = bool(tnbr[v])
        cur = v
        while True:
            nxt = tnbr[cur] if on_top else bnbr[cur]
            if not nxt:
                break
            visited[nxt] = True
            cur = nxt
            on_top = not on_top

    for v in range(1, n + 1):
        if visited[v]:
            continue
        # Everything left has degree 2, so it closes a cycle.
        cycles += 1
        visited[v] = True
        cur = tnbr[v]
        on_top = False
        while cur != v:
            visited[cur] = True
            nxt = tnbr[cur] if on_top else bnbr[cur]
            cur = nxt
            on_top = not on_top

    return cycles, paths


def spectrum_counts(top, bottom):
    """Full admissible-position difference counts, or None.

    Returns the multiset {phi(i) - phi(j) : (i,j) admissible} as a plain
    value -> count dict, diagonal zeros included. Returns None unless the
    meander is a single path (no cycles), which is exactly when the
    potentials exist.
    """
    n = sum(top)
    tnbr = _neighbors(top, n)
    bnbr = _neighbors(bottom, n)

    phi = [0] * (n + 1)
    visited = [False] * (n + 1)
    paths = 0

    for v in range(1, n + 1):
        if visited[v] or (tnbr[v] and bnbr[v]):
            continue
        paths += 1
        if paths > 1:
            return None
        visited[v] = True
        phi[v] = 0
        on_top = bool(tnbr[v])
        cur = v
        while True:
            nxt = tnbr[cur] if on_top else bnbr[cur]
            if not nxt:
                break
            if on_top:
                step = -1 if cur > nxt else 1
            else:
                step = -1 if cur < nxt else 1
            phi[nxt] = phi[cur] + step
            visited[nxt] = True
            cur = nxt
            on_top = not on_top

    if paths != 1 or not all(visited[1:]):
        return None  # no endpoints at all, or a cycle besides the path

    shift = phi[n]
    for v in range(1, n + 1):
        phi[v] -= shift

    tb = [0] * (n + 1)
    bb = [0] * (n + 1)
    v = 1
    for idx, p in enumerate(top, start=1):
        for _ in range(p):
            tb[v] = idx
            v += 1
    v = 1
    for idx, p in enumerate(bottom, start=1):
        for _ in range(p):
            bb[v] = idx
            v += 1

    # Histogram over [-2n, 2n]; differences of two potentials stay inside.
    hist = [0] * (4 * n + 1)
    off = 2 * n
    for i in range(1, n + 1):
        ti = tb[i]
        bi = bb[i]
        pi = phi[i]
        for j in range(1, n + 1):
            if ti <= tb[j] and bi >= bb[j]:
                hist[pi - phi[j] + off] += 1

    return {d - off: c for d, c in enumerate(hist) if c}
