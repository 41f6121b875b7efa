import random

import pytest

import goldens
from seaweedspec import (
    EngineInvariantError,
    IntegerMultiset,
    enumerate_frobenius,
    is_log_concave,
    is_symmetric_about_half,
    is_unbroken_centered_half,
    is_unimodal,
    parse_seaweed,
    spectrum_report,
    verify_block_lemmas,
    verify_reverse_lemma,
    verify_skew_symmetry,
    verify_swap_lemma,
)


class TestPredicates:
    def test_unimodal(self):
        assert is_unimodal(IntegerMultiset(goldens.WITNESS_881))
        assert is_unimodal(IntegerMultiset({0: 1, 1: 2, 2: 3}))
        assert is_unimodal(IntegerMultiset({0: 3, 1: 2, 2: 1}))
        assert is_unimodal(IntegerMultiset({0: 5}))
        assert not is_unimodal(IntegerMultiset({0: 1, 1: 3, 2: 2, 3: 3}))

    def test_log_concave(self):
        assert is_log_concave(IntegerMultiset(goldens.SPECTRUM_5_2_7))
        assert not is_log_concave(IntegerMultiset(goldens.SPECTRUM_2_4_123))
        assert not is_log_concave(IntegerMultiset(goldens.WITNESS_881))
        # the witness breaks at the 5, 8, 13 run: 8*8 = 64 < 5*13 = 65
        assert 8 * 8 < 5 * 13

    def test_symmetric_about_half(self):
        assert is_symmetric_about_half(IntegerMultiset(goldens.SPECTRUM_5_2_7))
        assert is_symmetric_about_half(IntegerMultiset({0: 1, 1: 1}))
        assert not is_symmetric_about_half(IntegerMultiset({0: 1, 1: 2}))

    def test_unbroken_centered_half(self):
        assert is_unbroken_centered_half(IntegerMultiset({-1: 1, 0: 2, 1: 2, 2: 1})) == (
            True,
            True,
        )
        assert is_unbroken_centered_half(IntegerMultiset({0: 1, 2: 1})) == (False, False)
        assert is_unbroken_centered_half(IntegerMultiset({0: 1, 1: 1, 2: 1})) == (
            True,
            False,
        )

    def test_empty_multiset_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            is_unbroken_centered_half(IntegerMultiset())

    def test_log_concavity_implies_unimodality(self):
        rng = random.Random(0)
        hits = 0
        for _ in range(10_000):
            width = rng.randint(1, 8)
            profile = [rng.randint(1, 9) for _ in range(width)]
            s = IntegerMultiset({i: c for i, c in enumerate(profile)})
            if is_log_concave(s):
                hits += 1
                assert is_unimodal(s), profile
        assert hits > 100


class TestSpectrumReport:
    def test_golden(self):
        report = spectrum_report(parse_seaweed("2|4 / 1|2|3"))
        assert report.spec == "2|4 / 1|2|3"
        assert report.spectrum.counts() == goldens.SPECTRUM_2_4_123
        assert report.unbroken is True
        assert report.centered_half is True
        assert report.unimodal is True
        assert report.log_concave is False
        assert report.symmetric_about_half is True

    def test_one_vertex_report_has_no_predicates(self):
        report = spectrum_report(parse_seaweed("1 / 1"))
        assert not report.spectrum
        assert report.unbroken is None
        assert report.centered_half is None
        assert report.unimodal is None
        assert report.log_concave is None
        assert report.symmetric_about_half is None

    def test_json_obj_is_flat(self):
        obj = spectrum_report(parse_seaweed("2|4 / 1|2|3")).to_json_obj()
        assert list(obj) == [
            "spec",
            "spectrum",
            "unbroken",
            "centered_half",
            "unimodal",
            "log_concave",
            "symmetric_about_half",
        ]
        assert obj["spec"] == "2|4 / 1|2|3"
        assert obj["spectrum"] == {"-2": 1, "-1": 2, "0": 5, "1": 5, "2": 2, "3": 1}


class TestProvenIdentities:
    def test_exhaustive_through_n7(self):
        for n in range(1, 8):
            for g in enumerate_frobenius(n):
                assert verify_swap_lemma(g)
                assert verify_reverse_lemma(g)
                assert verify_skew_symmetry(g)


class TestBlockLemmas:
    def test_all_three_corners_when_k1_exceeds_k2(self):
        assert verify_block_lemmas(2, 1, 2) == ["top_left", "bottom_right", "top_right"]
        assert verify_block_lemmas(2, 1, 1) == ["top_left", "bottom_right", "top_right"]
        assert verify_block_lemmas(5, 3, 2) == ["top_left", "bottom_right", "top_right"]

    def test_only_top_left_otherwise(self):
        assert verify_block_lemmas(1, 2, 3) == ["top_left"]
        assert verify_block_lemmas(3, 5, 2) == ["top_left"]
        assert verify_block_lemmas(1, 1, 2) == ["top_left"]

    def test_coprime_grid(self):
        from math import gcd

        for k1 in range(1, 7):
            for k2 in range(1, 7):
                if gcd(k1, k2) != 1:
                    continue
                for m in range(1, 4):
                    names = verify_block_lemmas(k1, k2, m)
                    assert names[0] == "top_left"
                    assert (len(names) == 3) == (k1 > k2)

    def test_rejects_common_factor(self):
        with pytest.raises(ValueError, match="coprime"):
            verify_block_lemmas(2, 4, 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError, match="at least 1"):
            verify_block_lemmas(0, 1, 1)
        with pytest.raises(ValueError, match="at least 1"):
            verify_block_lemmas(2, 1, 0)


def test_engine_invariant_error_is_runtime_error():
    assert issubclass(EngineInvariantError, RuntimeError)
