import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from filedrawer.core import StepSelectionModel
from filedrawer.failsafe import (
    StudySet,
    ZScoreFileError,
    darlington_total,
    fail_safe_number,
    implied_ratio,
    load_study_set,
    model_unpublished,
    stouffer_z,
)

z_lists = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
    min_size=1, max_size=50,
)


class TestStudySet:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            StudySet(())

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            StudySet((1.0, math.inf))

    def test_k_is_count(self):
        assert StudySet((0.1, -0.2, 3.0)).k == 3


class TestLoadStudySet:
    def test_parses_with_comments_and_blanks(self, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("# header comment\n1.645\n\n  -0.3\n# trailing\n2.0\n")
        studies = load_study_set(str(path))
        assert studies.z_scores == (1.645, -0.3, 2.0)

    def test_parse_error_reports_line_number(self, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("1.0\n2.0\noops\n")
        with pytest.raises(ZScoreFileError, match="line 3"):
            load_study_set(str(path))

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("# nothing but comments\n")
        with pytest.raises(ZScoreFileError):
            load_study_set(str(path))


class TestStoufferZ:
    def test_single_study_identity(self):
        assert stouffer_z(StudySet((1.645,))) == 1.645

    def test_four_unit_scores(self):
        assert stouffer_z(StudySet((1.0, 1.0, 1.0, 1.0))) == 2.0

    def test_cancellation(self):
        assert stouffer_z(StudySet((2.3, -2.3))) == 0.0

    @given(z_lists, st.integers(min_value=-8, max_value=8))
    def test_scale_covariance_exact_for_binary_scales(self, zs, exponent):
        c = 2.0**exponent
        scaled = StudySet(tuple(c * z for z in zs))
        assert stouffer_z(scaled) == c * stouffer_z(StudySet(tuple(zs)))

    @given(z_lists, st.floats(min_value=0.1, max_value=10.0))
    def test_scale_covariance_general(self, zs, c):
        scaled = StudySet(tuple(c * z for z in zs))
        expected = c * stouffer_z(StudySet(tuple(zs)))
        assert scaled and stouffer_z(scaled) == pytest.approx(expected, rel=1e-12, abs=1e-12)


class TestFailSafeNumber:
    def test_exactly_at_criterion(self):
        report = fail_safe_number(StudySet((1.645,)), z_crit=1.645)
        assert report.fsn == 0.0
        assert report.fsn_floor == 0
        assert report.implied_r == 0.0
        assert report.implied_label == "not-large"

    def test_two_studies_at_criterion(self):
        # closed form k^2 - k when every z equals z_crit
        report = fail_safe_number(StudySet((1.645, 1.645)), z_crit=1.645)
        assert report.fsn == 2.0

    def test_implied_ratio_consistency(self):
        studies = StudySet(tuple([2.0] * 10))
        report = fail_safe_number(studies, z_crit=1.645)
        assert report.implied_r == pytest.approx(report.fsn / 10, abs=1e-12)

    def test_historical_anchor_from_published_pair(self):
        # the famous 345-study case: only (k, fsn) survive, the z-scores don't
        r = implied_ratio(65_122, 345)
        assert 188.0 <= r <= 190.0
        from filedrawer.core import classify_ratio

        assert classify_ratio(r) == "very-large"

    @pytest.mark.parametrize("bad", [0.0, -1.645, math.nan])
    def test_rejects_bad_criterion(self, bad):
        with pytest.raises(ValueError):
            fail_safe_number(StudySet((1.0,)), z_crit=bad)

    def test_floor_never_negative(self):
        report = fail_safe_number(StudySet((0.0, 0.0, 0.0)), z_crit=1.645)
        assert report.fsn == 0.0
        assert report.fsn_floor == 0

    @given(
        st.lists(st.floats(min_value=1.7, max_value=6.0), min_size=1, max_size=20),
        st.floats(min_value=1.7, max_value=5.0),
    )
    def test_adding_strong_study_increases_fsn(self, zs, extra):
        # regime of interest: combined score already positive
        base = fail_safe_number(StudySet(tuple(zs))).fsn
        grown = fail_safe_number(StudySet(tuple(zs) + (extra,))).fsn
        assert grown > base

    @given(st.lists(st.floats(min_value=1.7, max_value=6.0), min_size=2, max_size=20))
    def test_adding_null_study_decreases_fsn(self, zs):
        base = fail_safe_number(StudySet(tuple(zs))).fsn
        assert base > 0
        shrunk = fail_safe_number(StudySet(tuple(zs) + (0.0,))).fsn
        assert shrunk < base


class TestImpliedRatio:
    def test_validates(self):
        with pytest.raises(ValueError):
            implied_ratio(-1.0, 10)
        with pytest.raises(ValueError):
            implied_ratio(10.0, 0)


class TestDarlingtonTotal:
    def test_famous_case(self):
        assert darlington_total(345, 0.05) == 6900.0

    def test_alpha_one_hides_nothing(self):
        assert darlington_total(7, 1.0) == 7.0

    def test_hand_arithmetic(self):
        assert darlington_total(100, 0.10) == pytest.approx(1000.0, rel=1e-15)

    def test_rejects_zero_alpha(self):
        with pytest.raises(ValueError):
            darlington_total(345, 0.0)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            darlington_total(0, 0.05)


class TestModelUnpublished:
    def test_darlington_case(self):
        estimate = model_unpublished(345, StepSelectionModel(0.05, 0.0))
        assert estimate.unpublished == pytest.approx(6555.0, abs=1e-9)
        assert estimate.total == pytest.approx(6900.0, abs=1e-9)

    def test_certain_publication_means_no_hidden_studies(self):
        estimate = model_unpublished(50, StepSelectionModel(1.0, 0.3))
        assert estimate.unpublished == 0.0
        assert estimate.total == 50.0

    def test_table_anchor_cell(self):
        estimate = model_unpublished(345, StepSelectionModel(0.05, 0.05))
        assert estimate.unpublished == pytest.approx(345 * 9.256410256410254, rel=1e-12)
        assert round(estimate.unpublished) == 3193
        assert estimate.total == pytest.approx(3539.0, abs=1.0)

    def test_unbounded_state_propagates(self):
        estimate = model_unpublished(10, StepSelectionModel(0.0, 0.0))
        assert estimate.unbounded
        assert math.isinf(estimate.unpublished)

    @pytest.mark.parametrize("alpha", [0.01, 0.05, 0.10])
    @pytest.mark.parametrize("k", [1, 345, 10_000])
    def test_consistent_with_darlington_when_beta_zero(self, k, alpha):
        estimate = model_unpublished(k, StepSelectionModel(alpha, 0.0))
        assert abs(estimate.total - darlington_total(k, alpha)) <= 1e-9
