"""Shape predicates for spectra and self-checks of proven identities.

The predicates inspect the multiplicity profile of an eigenvalue multiset
(counts in ascending value order). The verify_* functions recompute both
sides of identities that are theorems, so a mismatch can only mean a bug
in the engine; they raise EngineInvariantError rather than returning False.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Composition, IntegerMultiset, SeaweedSpec, multiset_equal
from .meander import is_frobenius
from .spectrum import (
    extended_spectrum_matrix,
    shape_mask,
    spectrum,
    spectrum_matrix,
)


class EngineInvariantError(RuntimeError):
    """A proven identity failed to verify: the engine itself is wrong."""


def is_unbroken_centered_half(s: IntegerMultiset) -> tuple[bool, bool]:
    """(interval support, endpoints summing to 1) for a nonempty multiset.

    Both hold for every Frobenius seaweed spectrum, so the sweep treats a
    False here as an engine bug, not a finding.
    """
    if not s:
        raise ValueError("predicate undefined for an empty multiset")
    support = s.support()
    lo, hi = support[0], support[-1]
    unbroken = support == tuple(range(lo, hi + 1))
    return unbroken, lo + hi == 1


def is_unimodal(s: IntegerMultiset) -> bool:
    """Multiplicities rise (weakly) then fall, in ascending value order."""
    profile = s.multiplicities()
    descending = False
    for prev, cur in zip(profile, profile[1:]):
        if cur < prev:
            descending = True
        elif descending and cur > prev:
            return False
    return True


def is_log_concave(s: IntegerMultiset) -> bool:
    """Each interior multiplicity squared covers its neighbors' product.

    Evaluated on the value-sorted profile as stored; gaps in the support
    are not filled in. Log-concavity of a positive sequence implies
    unimodality.
    """
    profile = s.multiplicities()
    return all(
        profile[i] * profile[i] >= profile[i - 1] * profile[i + 1]
        for i in range(1, len(profile) - 1)
    )


def is_symmetric_about_half(s: IntegerMultiset) -> bool:
    """Does e -> 1-e preserve all multiplicities? Diagnostic only."""
    return all(s.multiplicity(v) == s.multiplicity(1 - v) for v in s.support())


@dataclass(frozen=True)
class SpectrumReport:
    """Shape summary of one Frobenius seaweed's spectrum.

    The predicate fields are None exactly when the spectrum is empty (the
    one-vertex seaweed); centered_half is only claimed when the support is
    an unbroken interval.
    """

    spec: str
    spectrum: IntegerMultiset
    unbroken: bool | None
    centered_half: bool | None
    unimodal: bool | None
    log_concave: bool | None
    symmetric_about_half: bool | None

    def to_json_obj(self) -> dict:
        return {
            "spec": self.spec,
            "spectrum": self.spectrum.to_json_obj(),
            "unbroken": self.unbroken,
            "centered_half": self.centered_half,
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "symmetric_about_half": self.symmetric_about_half,
        }


def spectrum_report(g: SeaweedSpec) -> SpectrumReport:
    """Compute the spectrum of g and evaluate every shape predicate on it."""
    s = spectrum(g)
    if not s:
        return SpectrumReport(str(g), s, None, None, None, None, None)
    unbroken, centered = is_unbroken_centered_half(s)
    log_concave = is_log_concave(s)
    unimodal = is_unimodal(s)
    if log_concave and not unimodal:
        raise EngineInvariantError(
            f"{g}: log-concave profile {s.multiplicities()} is not unimodal"
        )
    return SpectrumReport(
        spec=str(g),
        spectrum=s,
        unbroken=unbroken,
        centered_half=unbroken and centered,
        unimodal=unimodal,
        log_concave=log_concave,
        symmetric_about_half=is_symmetric_about_half(s),
    )


def _masked_multiset(rows) -> IntegerMultiset:
    return IntegerMultiset([cell for row in rows for cell in row if cell is not None])


def _full_multiset(rows) -> IntegerMultiset:
    return IntegerMultiset([cell for row in rows for cell in row])


def verify_swap_lemma(g: SeaweedSpec) -> bool:
    """Exchanging top and bottom transposes both eigenvalue matrices.

    Checks the masks, the masked matrices, the full matrices, and (as a
    corollary) the spectra of g and its swap. Frobenius g only.
    """
    h = g.swapped()
    rows_g = spectrum_matrix(g)
    rows_h = spectrum_matrix(h)
    n = g.n
    for i in range(n):
        for j in range(n):
            if rows_g[i][j] != rows_h[j][i]:
                raise EngineInvariantError(
                    f"swap failure at {g}: entry ({i + 1},{j + 1}) is "
                    f"{rows_g[i][j]} but transposed swap has {rows_h[j][i]}"
                )
    ext_g = extended_spectrum_matrix(g)
    ext_h = extended_spectrum_matrix(h)
    for i in range(n):
        for j in range(n):
            if ext_g[i][j] != ext_h[j][i]:
                raise EngineInvariantError(
                    f"swap failure at {g}: extended entry ({i + 1},{j + 1}) is "
                    f"{ext_g[i][j]} but transposed swap has {ext_h[j][i]}"
                )
    if not multiset_equal(spectrum(g), spectrum(h)):
        raise EngineInvariantError(f"swap failure at {g}: spectra differ")
    return True


def verify_reverse_lemma(g: SeaweedSpec) -> bool:
    """Reversing both compositions flips both matrices antidiagonally.

    Entry (i,j) of g matches entry (n+1-j, n+1-i) of the reversal, masked
    and full alike. Frobenius g only.
    """
    h = g.reversed()
    rows_g = spectrum_matrix(g)
    rows_h = spectrum_matrix(h)
    n = g.n
    for i in range(n):
        for j in range(n):
            if rows_g[i][j] != rows_h[n - 1 - j][n - 1 - i]:
                raise EngineInvariantError(
                    f"reverse failure at {g}: entry ({i + 1},{j + 1}) is "
                    f"{rows_g[i][j]} but the reversal has {rows_h[n - 1 - j][n - 1 - i]}"
                )
    ext_g = extended_spectrum_matrix(g)
    ext_h = extended_spectrum_matrix(h)
    for i in range(n):
        for j in range(n):
            if ext_g[i][j] != ext_h[n - 1 - j][n - 1 - i]:
                raise EngineInvariantError(
                    f"reverse failure at {g}: extended entry ({i + 1},{j + 1}) is "
                    f"{ext_g[i][j]} but the reversal has {ext_h[n - 1 - j][n - 1 - i]}"
                )
    if not multiset_equal(spectrum(g), spectrum(h)):
        raise EngineInvariantError(f"reverse failure at {g}: spectra differ")
    return True


def verify_skew_symmetry(g: SeaweedSpec) -> bool:
    """The full matrix satisfies A[i][j] = -A[j][i]. Frobenius g only."""
    rows = extended_spectrum_matrix(g)
    n = g.n
    for i in range(n):
        for j in range(n):
            if rows[i][j] != -rows[j][i]:
                raise EngineInvariantError(
                    f"skew failure at {g}: ({i + 1},{j + 1})={rows[i][j]} "
                    f"vs ({j + 1},{i + 1})={rows[j][i]}"
                )
    return True


def _two_part(a: int, b: int, n: int) -> SeaweedSpec:
    return SeaweedSpec(Composition((a, b)), Composition((n,)))


def _submatrix_multiset(rows, row_range, col_range) -> IntegerMultiset:
    values = []
    for i in row_range:
        for j in col_range:
            cell = rows[i - 1][j - 1]
            if cell is None:
                raise EngineInvariantError(
                    f"expected admissible cell ({i},{j}) is outside the mask"
                )
            values.append(cell)
    return IntegerMultiset(values)


def verify_block_lemmas(k1: int, k2: int, m: int) -> list[str]:
    """Check the corner-block identities between consecutive family members.

    With g1 the two-part seaweed (m*k1+k2)|k1 over the full bottom and g2
    its predecessor ((m-1)*k1+k2)|k1, the top-left corner of g1's masked
    matrix reproduces g2's full matrix as a multiset; when k1 > k2, the
    bottom-right corner reproduces the full matrix of (k1-k2)|k2, and the
    top-right corner reproduces a column block of the predecessor's masked
    matrix shifted up by 1. Requires gcd(k1, k2) = 1 so everything in
    sight is Frobenius. Returns the names of the checks performed.
    """
    from math import gcd

    if k1 < 1 or k2 < 1 or m < 1:
        raise ValueError("k1, k2, m must all be at least 1")
    if gcd(k1, k2) != 1:
        raise ValueError(f"k1 and k2 must be coprime, got gcd({k1},{k2})={gcd(k1, k2)}")

    cut = m * k1 + k2
    n1 = (m + 1) * k1 + k2
    g1 = _two_part(cut, k1, n1)
    rows_g1 = spectrum_matrix(g1)
    performed = []

    g2 = _two_part((m - 1) * k1 + k2, k1, cut) if m > 1 else SeaweedSpec(
        Composition((k2, k1)), Composition((cut,))
    )
    top_left = _submatrix_multiset(rows_g1, range(1, cut + 1), range(1, cut + 1))
    ext_g2 = _full_multiset(extended_spectrum_matrix(g2))
    if not multiset_equal(top_left, ext_g2):
        raise EngineInvariantError(
            f"top-left block failure at k1={k1}, k2={k2}, m={m}: "
            f"{top_left.to_text()} vs {ext_g2.to_text()}"
        )
    performed.append("top_left")

    if k1 > k2:
        small = _two_part(k1 - k2, k2, k1)
        bottom_right = _submatrix_multiset(
            rows_g1, range(cut + 1, n1 + 1), range(cut + 1, n1 + 1)
        )
        ext_small = _full_multiset(extended_spectrum_matrix(small))
        if not multiset_equal(bottom_right, ext_small):
            raise EngineInvariantError(
                f"bottom-right block failure at k1={k1}, k2={k2}, m={m}: "
                f"{bottom_right.to_text()} vs {ext_small.to_text()}"
            )
        performed.append("bottom_right")

        top_right = _submatrix_multiset(
            rows_g1, range(1, cut + 1), range(cut + 1, n1 + 1)
        )
        if m == 1:
            ref_rows = spectrum_matrix(_two_part(k1, k2, k1 + k2))
            ref = _submatrix_multiset(ref_rows, range(1, k1 + 1), range(1, k1 + k2 + 1))
        else:
            ref_rows = spectrum_matrix(g2)
            ref = _submatrix_multiset(
                ref_rows, range(1, cut + 1), range((m - 1) * k1 + k2 + 1, cut + 1)
            )
        shifted = IntegerMultiset({v + 1: c for v, c in ref.items()})
        if not multiset_equal(top_right, shifted):
            raise EngineInvariantError(
                f"top-right block failure at k1={k1}, k2={k2}, m={m}: "
                f"{top_right.to_text()} vs {shifted.to_text()}"
            )
        performed.append("top_right")

    return performed
