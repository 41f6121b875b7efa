"""Meander graphs of seaweeds and the component-count index formulas.

The meander of a seaweed puts its n vertices on a line and nests arcs inside
every top block above the line and every bottom block below it, innermost
pairs last. Each vertex meets at most one top arc and at most one bottom
arc, so every connected component is a simple path or an even cycle, and
the index of the seaweed reads off the component census.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._engine import kernel
from .core import Composition, SeaweedSpec


def _block_edges(parts: Composition) -> tuple[tuple[int, int], ...]:
    edges = []
    s = 1
    for p in parts:
        e = s + p - 1
        i, j = s, e
        while i < j:
            edges.append((i, j))
            i += 1
            j -= 1
        s = e + 1
    return tuple(edges)


@dataclass(frozen=True)
class Meander:
    """n vertices plus the top and bottom arc sets, each arc as (low, high)."""

    n: int
    top_edges: tuple[tuple[int, int], ...]
    bottom_edges: tuple[tuple[int, int], ...]

    def top_neighbor(self) -> list[int]:
        """Partner vertex through the top arc, 0 when there is none."""
        nbr = [0] * (self.n + 1)
        for p, q in self.top_edges:
            nbr[p] = q
            nbr[q] = p
        return nbr

    def bottom_neighbor(self) -> list[int]:
        nbr = [0] * (self.n + 1)
        for p, q in self.bottom_edges:
            nbr[p] = q
            nbr[q] = p
        return nbr


def build_meander(g: SeaweedSpec) -> Meander:
    """Arcs of g's meander, in block order with outermost arcs first."""
    return Meander(g.n, _block_edges(g.top), _block_edges(g.bottom))


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components of a meander.

    Paths are listed in vertex order starting from the lower endpoint
    (an isolated vertex is a one-vertex path); cycles start from their
    lowest vertex and step through its top arc first. Both lists are
    ordered by their starting vertex.
    """

    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def n_paths(self) -> int:
        return len(self.paths)

    @property
    def n_cycles(self) -> int:
        return len(self.cycles)


def components(m: Meander) -> ComponentSummary:
    """Walk every component once, alternating arc sides."""
    tnbr = m.top_neighbor()
    bnbr = m.bottom_neighbor()
    visited = [False] * (m.n + 1)
    paths = []
    cycles = []

    # Each path shows up exactly twice as an endpoint; scanning vertices in
    # ascending order therefore starts every walk at its lower endpoint.
    for v in range(1, m.n + 1):
        if visited[v] or (tnbr[v] and bnbr[v]):
            continue
        walk = [v]
        visited[v] = True
        on_top = bool(tnbr[v])
        cur = v
        while True:
            nxt = tnbr[cur] if on_top else bnbr[cur]
            if not nxt:
                break
            walk.append(nxt)
            visited[nxt] = True
            cur = nxt
            on_top = not on_top
        paths.append(tuple(walk))

    for v in range(1, m.n + 1):
        if visited[v]:
            continue
        walk = [v]
        visited[v] = True
        cur = tnbr[v]
        on_top = False
        while cur != v:
            walk.append(cur)
            visited[cur] = True
            cur = tnbr[cur] if on_top else bnbr[cur]
            on_top = not on_top
        cycles.append(tuple(walk))

    return ComponentSummary(tuple(paths), tuple(cycles))


def index_gl(g: SeaweedSpec) -> int:
    """Index of the gl-seaweed: twice the cycles plus the paths."""
    cycles, paths = kernel.component_counts(g.top.parts, g.bottom.parts)
    return 2 * cycles + paths


def index_sl(g: SeaweedSpec) -> int:
    """Index of the sl-seaweed: one less than the gl index."""
    return index_gl(g) - 1


def is_frobenius(g: SeaweedSpec) -> bool:
    """True when the sl index vanishes: one path, no cycles."""
    cycles, paths = kernel.component_counts(g.top.parts, g.bottom.parts)
    return cycles == 0 and paths == 1


def index_gcd_maximal_parabolic(a: int, b: int) -> int:
    """Closed form for the index of a|b / a+b."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be positive")
    return gcd(a, b) - 1


def index_gcd_three_part(a: int, b: int, c: int) -> int:
    """Closed form for the index of a|b|c / a+b+c.

    The same value is the index of a|b / c|d with d = a+b-c, whenever that
    d is positive.
    """
    if a < 1 or b < 1 or c < 1:
        raise ValueError("all parts must be positive")
    return gcd(a + b, b + c) - 1
