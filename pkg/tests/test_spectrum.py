from fractions import Fraction

import pytest
from hypothesis import given

import goldens
from oracles import flag_mask, oracle_potentials, oracle_spectrum
from seaweedspec import (
    IntegerMultiset,
    compositions_of,
    extended_spectrum,
    extended_spectrum_matrix,
    frobenius_form_support,
    is_frobenius,
    matrix_text,
    orient,
    parse_seaweed,
    principal_element,
    shape_mask,
    spectrum,
    spectrum_matrix,
    vertex_potentials,
)
from seaweedspec.spectrum import NOT_SINGLE_PATH, SpectrumUndefinedError
from strategies import seaweeds


def frobenius_cases(max_n):
    for n in range(1, max_n + 1):
        for top in compositions_of(n):
            for bottom in compositions_of(n):
                g = parse_seaweed(f"{top} / {bottom}")
                if is_frobenius(g):
                    yield g


class TestOrient:
    def test_golden(self):
        om = orient(parse_seaweed("2|4 / 1|2|3"))
        assert om.n == 6
        assert om.edges == ((2, 1), (6, 3), (5, 4), (2, 3), (4, 6))

    def test_top_arcs_point_left_bottom_arcs_point_right(self):
        om = orient(parse_seaweed("5|2 / 7"))
        assert om.edges == ((5, 1), (4, 2), (7, 6), (1, 7), (2, 6), (3, 5))


class TestVertexPotentials:
    def test_goldens(self):
        assert vertex_potentials(parse_seaweed("2|4 / 1|2|3")) == goldens.PHI_2_4_123
        assert vertex_potentials(parse_seaweed("5|2 / 7")) == goldens.PHI_5_2_7
        assert vertex_potentials(parse_seaweed("3|2 / 5")) == goldens.PHI_3_2_5
        assert vertex_potentials(parse_seaweed("2|1 / 3")) == (1, 2, 0)
        assert vertex_potentials(parse_seaweed("1 / 1")) == (0,)

    def test_undefined_off_single_path(self):
        with pytest.raises(SpectrumUndefinedError) as err:
            vertex_potentials(parse_seaweed("2|2 / 4"))
        assert str(err.value) == NOT_SINGLE_PATH

    def test_exhaustive_against_path_walk_oracle(self):
        for g in frobenius_cases(6):
            assert vertex_potentials(g) == oracle_potentials(g.top.parts, g.bottom.parts)

    @given(seaweeds(max_n=12))
    def test_normalization_and_arc_steps(self, g):
        if not is_frobenius(g):
            with pytest.raises(SpectrumUndefinedError):
                vertex_potentials(g)
            return
        phi = vertex_potentials(g)
        assert phi[g.n - 1] == 0
        for u, v in orient(g).edges:
            assert phi[u - 1] - phi[v - 1] == 1


class TestShapeMask:
    def test_golden(self):
        assert shape_mask(parse_seaweed("2|4 / 1|2|3")) == goldens.MASK_2_4_123
        assert len(goldens.MASK_2_4_123) == 17

    def test_full_algebra_masks_everything(self):
        assert shape_mask(parse_seaweed("3 / 3")) == {
            (i, j) for i in range(1, 4) for j in range(1, 4)
        }

    def test_exhaustive_against_flag_oracle(self):
        for n in range(1, 7):
            for top in compositions_of(n):
                for bottom in compositions_of(n):
                    g = parse_seaweed(f"{top} / {bottom}")
                    assert shape_mask(g) == flag_mask(top.parts, bottom.parts)

    @given(seaweeds(max_n=12))
    def test_against_flag_oracle(self, g):
        assert shape_mask(g) == flag_mask(g.top.parts, g.bottom.parts)

    @given(seaweeds(max_n=12))
    def test_diagonal_always_admissible(self, g):
        mask = shape_mask(g)
        assert all((i, i) in mask for i in range(1, g.n + 1))


class TestMatrices:
    def test_spectrum_matrix_goldens(self):
        assert spectrum_matrix(parse_seaweed("2|4 / 1|2|3")) == goldens.SIGMA_2_4_123
        assert spectrum_matrix(parse_seaweed("5|2 / 7")) == goldens.SIGMA_5_2_7

    def test_extended_matrix_goldens(self):
        g = parse_seaweed("3|2 / 5")
        assert extended_spectrum_matrix(g) == goldens.SIGMAHAT_3_2_5
        g = parse_seaweed("2|4 / 1|2|3")
        assert extended_spectrum_matrix(g) == goldens.SIGMAHAT_2_4_123

    def test_matrix_text(self):
        lines = matrix_text(spectrum_matrix(parse_seaweed("2|4 / 1|2|3"))).splitlines()
        assert len(lines) == 6
        assert lines[0] == "0 · · · · ·"
        assert lines[5] == "· · 1 -1 -2 0"
        lines = matrix_text(spectrum_matrix(parse_seaweed("5|2 / 7"))).splitlines()
        assert lines[5] == "· · · · · 0 -1"
        assert matrix_text(extended_spectrum_matrix(parse_seaweed("1|1 / 2"))) == "0 1\n-1 0"

    def test_matrix_entries_are_potential_differences(self):
        g = parse_seaweed("5|2 / 7")
        phi = vertex_potentials(g)
        rows = extended_spectrum_matrix(g)
        for i in range(7):
            for j in range(7):
                assert rows[i][j] == phi[i] - phi[j]

    @given(seaweeds(max_n=10))
    def test_extended_matrix_is_skew_symmetric(self, g):
        if not is_frobenius(g):
            return
        rows = extended_spectrum_matrix(g)
        for i in range(g.n):
            for j in range(g.n):
                assert rows[i][j] == -rows[j][i]

    @given(seaweeds(max_n=10))
    def test_spectrum_matrix_restricts_extended(self, g):
        if not is_frobenius(g):
            return
        mask = shape_mask(g)
        masked = spectrum_matrix(g)
        full = extended_spectrum_matrix(g)
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if (i, j) in mask:
                    assert masked[i - 1][j - 1] == full[i - 1][j - 1]
                else:
                    assert masked[i - 1][j - 1] is None


class TestSpectrum:
    def test_goldens(self):
        assert spectrum(parse_seaweed("2|4 / 1|2|3")).counts() == goldens.SPECTRUM_2_4_123
        assert spectrum(parse_seaweed("5|2 / 7")).counts() == goldens.SPECTRUM_5_2_7
        for text, want in goldens.SMALL_SPECTRA.items():
            assert spectrum(parse_seaweed(text)).counts() == want, text

    def test_undefined_off_single_path(self):
        with pytest.raises(SpectrumUndefinedError) as err:
            spectrum(parse_seaweed("2|2 / 4"))
        assert str(err.value) == NOT_SINGLE_PATH

    def test_exhaustive_against_oracle(self):
        for g in frobenius_cases(6):
            assert spectrum(g).counts() == oracle_spectrum(g.top.parts, g.bottom.parts)

    @given(seaweeds(max_n=12))
    def test_against_oracle(self, g):
        if not is_frobenius(g):
            return
        assert spectrum(g).counts() == oracle_spectrum(g.top.parts, g.bottom.parts)

    @given(seaweeds(max_n=12))
    def test_size_is_mask_minus_one(self, g):
        if not is_frobenius(g):
            return
        assert spectrum(g).size == len(shape_mask(g)) - 1

    @given(seaweeds(max_n=12))
    def test_matches_masked_matrix_route(self, g):
        if not is_frobenius(g):
            return
        cells = [x for row in spectrum_matrix(g) for x in row if x is not None]
        assert spectrum(g) == IntegerMultiset(cells).without_one(0)


class TestExtendedSpectrum:
    def test_goldens(self):
        assert extended_spectrum(parse_seaweed("3|2 / 5")).counts() == goldens.EXTENDED_3_2_5
        assert (
            extended_spectrum(parse_seaweed("2|4 / 1|2|3")).counts()
            == goldens.EXTENDED_2_4_123
        )

    @given(seaweeds(max_n=12))
    def test_size_and_matrix_route(self, g):
        if not is_frobenius(g):
            return
        ext = extended_spectrum(g)
        assert ext.size == g.n * g.n - 1
        cells = [x for row in extended_spectrum_matrix(g) for x in row]
        assert ext == IntegerMultiset(cells).without_one(0)

    @given(seaweeds(max_n=12))
    def test_contains_spectrum(self, g):
        if not is_frobenius(g):
            return
        assert extended_spectrum(g).contains(spectrum(g))


class TestPrincipalElement:
    def test_goldens(self):
        assert principal_element(parse_seaweed("2|1 / 3")) == (
            Fraction(0),
            Fraction(1),
            Fraction(-1),
        )
        assert principal_element(parse_seaweed("2|4 / 1|2|3")) == (
            Fraction(-7, 6),
            Fraction(-1, 6),
            Fraction(-7, 6),
            Fraction(5, 6),
            Fraction(11, 6),
            Fraction(-1, 6),
        )

    @given(seaweeds(max_n=12))
    def test_trace_zero_and_arc_steps(self, g):
        if not is_frobenius(g):
            return
        diag = principal_element(g)
        assert sum(diag) == 0
        assert all(x.denominator in range(1, g.n + 1) and g.n % x.denominator == 0 for x in diag)
        for u, v in orient(g).edges:
            assert diag[u - 1] - diag[v - 1] == 1


class TestFrobeniusFormSupport:
    def test_golden(self):
        g = parse_seaweed("2|4 / 1|2|3")
        assert frobenius_form_support(g) == goldens.SUPPORT_2_4_123

    @given(seaweeds(max_n=12))
    def test_size_and_unit_differences(self, g):
        if not is_frobenius(g):
            return
        support = frobenius_form_support(g)
        assert len(support) == g.n - 1
        assert support == tuple(sorted(support))
        rows = extended_spectrum_matrix(g)
        assert all(rows[u - 1][v - 1] == 1 for u, v in support)
