"""Spectra of Frobenius seaweeds via meander vertex potentials.

Orient every top arc right-to-left and every bottom arc left-to-right; a
Frobenius seaweed's meander is a single path, and following it assigns each
vertex an integer potential that drops by one along every oriented arc.
The eigenvalue attached to an admissible position (i,j) is then just
phi(i) - phi(j), the mask of admissible positions being the pairs whose
top blocks ascend and bottom blocks descend. The spectrum is that multiset
with one zero removed; the extended spectrum drops the mask and uses all
n^2 positions instead.

All arithmetic is exact: potentials are ints, the principal element is a
tuple of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._engine import kernel
from .core import IntegerMultiset, SeaweedSpec
from .meander import Meander, build_meander, components

NOT_SINGLE_PATH = "spectrum undefined: meander is not a single path"


class SpectrumUndefinedError(ValueError):
    """The meander is not a single path, so no Frobenius structure exists."""


@dataclass(frozen=True)
class OrientedMeander:
    """A meander with every arc directed.

    Top arcs run right-to-left, bottom arcs left-to-right; edges keep the
    construction order (top blocks first, outermost arcs first).
    """

    n: int
    edges: tuple[tuple[int, int], ...]


def orient(g: SeaweedSpec) -> OrientedMeander:
    m = build_meander(g)
    directed = [(q, p) for p, q in m.top_edges]
    directed += [(p, q) for p, q in m.bottom_edges]
    return OrientedMeander(m.n, tuple(directed))


def _single_path(m: Meander) -> tuple[int, ...]:
    summary = components(m)
    if summary.n_cycles or summary.n_paths != 1:
        raise SpectrumUndefinedError(NOT_SINGLE_PATH)
    return summary.paths[0]


def vertex_potentials(g: SeaweedSpec) -> tuple[int, ...]:
    """Integer potential of each vertex (index 0 holds vertex 1).

    Every oriented arc (u, v) satisfies phi(u) - phi(v) = 1, and the
    normalization pins phi(n) = 0, so phi(i) is the signed arc count of the
    meander path from i to n.
    """
    m = build_meander(g)
    path = _single_path(m)
    tnbr = m.top_neighbor()

    phi = [0] * (g.n + 1)
    for u, v in zip(path, path[1:]):
        on_top = tnbr[u] == v
        if on_top:
            step = -1 if u > v else 1
        else:
            step = -1 if u < v else 1
        phi[v] = phi[u] + step
    shift = phi[g.n]
    return tuple(phi[v] - shift for v in range(1, g.n + 1))


def shape_mask(g: SeaweedSpec) -> frozenset[tuple[int, int]]:
    """Admissible 1-based positions (i, j) of the seaweed's shape.

    (i, j) is admissible when i's top block index is at most j's and i's
    bottom block index is at least j's; the diagonal is always included.
    """
    tb = (0,) + g.top.block_of()
    bb = (0,) + g.bottom.block_of()
    n = g.n
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if tb[i] <= tb[j] and bb[i] >= bb[j]
    )


def spectrum_matrix(g: SeaweedSpec) -> tuple[tuple[int | None, ...], ...]:
    """The eigenvalue at every admissible position, None elsewhere.

    Row i, column j (1-based in math terms) sits at [i-1][j-1].
    """
    phi = vertex_potentials(g)
    mask = shape_mask(g)
    n = g.n
    return tuple(
        tuple(phi[i - 1] - phi[j - 1] if (i, j) in mask else None for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def extended_spectrum_matrix(g: SeaweedSpec) -> tuple[tuple[int, ...], ...]:
    """All n^2 potential differences; skew-symmetric by construction."""
    phi = vertex_potentials(g)
    n = g.n
    return tuple(tuple(phi[i] - phi[j] for j in range(n)) for i in range(n))


def matrix_text(rows) -> str:
    """Space-separated rows, a centered dot marking non-admissible cells."""
    return "\n".join(
        " ".join("·" if cell is None else str(cell) for cell in row) for row in rows
    )


def spectrum(g: SeaweedSpec) -> IntegerMultiset:
    """Eigenvalue multiset of the Frobenius seaweed, one zero removed.

    Size is always one less than the number of admissible positions.
    """
    counts = kernel.spectrum_counts(g.top.parts, g.bottom.parts)
    if counts is None:
        raise SpectrumUndefinedError(NOT_SINGLE_PATH)
    return IntegerMultiset(counts).without_one(0)


def extended_spectrum(g: SeaweedSpec) -> IntegerMultiset:
    """All n^2 potential differences, one zero removed (size n^2 - 1)."""
    phi = vertex_potentials(g)
    value_counts: dict[int, int] = {}
    for p in phi:
        value_counts[p] = value_counts.get(p, 0) + 1
    counts: dict[int, int] = {}
    for a, ca in value_counts.items():
        for b, cb in value_counts.items():
            d = a - b
            counts[d] = counts.get(d, 0) + ca * cb
    return IntegerMultiset(counts).without_one(0)


def principal_element(g: SeaweedSpec) -> tuple[Fraction, ...]:
    """Diagonal of the principal element: potentials recentred to trace zero.

    Entries are exact rationals whose common denominator divides n; the
    difference across every oriented arc is exactly 1.
    """
    phi = vertex_potentials(g)
    mean = Fraction(sum(phi), g.n)
    return tuple(Fraction(p) - mean for p in phi)


def frobenius_form_support(g: SeaweedSpec) -> tuple[tuple[int, int], ...]:
    """Positions where the Frobenius functional is 1: the oriented arcs.

    Sorted ascending; a Frobenius seaweed on n vertices has exactly n-1.
    """
    m = build_meander(g)
    _single_path(m)
    om = orient(g)
    return tuple(sorted(om.edges))
