# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import pytest

from ccnvkit.families import verify_case_1_2, verify_case_2_1, FamilySpec
from ccnvkit.geometry import CCNVMetric, TransverseFrame
from ccnvkit.killing import KillingCandidate
from ccnvkit.scalarfield import parse_field
from ccnvkit.utils.exceptions import FamilyError


def _case_two_one_metric(chart, frame=None):
    H = parse_field('-u*x3 + x4', chart)
    return CCNVMetric(chart, H, [0, parse_field('u + x4', chart)], frame, name='C21')


@pytest.fixture
def translation(chart):
    """``X = u^2 l + 2 e_3``."""
    return KillingCandidate(chart, 0, parse_field('u^2', chart), 2)


@pytest.fixture
def case_two_one(chart):
    return FamilySpec('C21', chart, {'A3': 'x4', 'E4': 'u + x4'})


class TestCaseTwoOne:

    def test_passes(self, chart, sample, translation, case_two_one):
        report = verify_case_2_1(case_two_one, _case_two_one_metric(chart), translation, sample)
        assert report.passed, str(report)
        assert report.groups() == ['structure', 'transport', 'killing']
        assert 'killing.lie' in report

    def test_off_diagonal_frame_entry(self, chart, sample, translation, case_two_one):
        """``m_34 = 0.2`` leaves ``e_3`` tilted and is reported as a structure residual."""
        frame = TransverseFrame(chart, [[1, 0.2], [0, 1]])
        report = verify_case_2_1(case_two_one, _case_two_one_metric(chart, frame), translation, sample,
                                 killing=False)
        assert not report.passed
        assert report['m3r'].residual == pytest.approx(0.2)
        assert not report.group_passed('structure')

    def test_wrong_integration_slot(self, chart, sample, translation):
        spec = FamilySpec('C21', chart, {'A3': 'x4 + 1', 'E4': 'u + x4'})
        report = verify_case_2_1(spec, _case_two_one_metric(chart), translation, sample, killing=False)
        assert report['H'].residual == pytest.approx(1.0)
        assert report.group_passed('structure')

    def test_needs_x1_zero(self, chart, sample, case_two_one):
        with pytest.raises(FamilyError):
            verify_case_2_1(case_two_one, _case_two_one_metric(chart), KillingCandidate.n(chart), sample)

    def test_wrong_case(self, chart, sample, translation):
        with pytest.raises(FamilyError):
            verify_case_2_1(FamilySpec('C12iii', chart), _case_two_one_metric(chart), translation, sample)


class TestCaseOneTwo:

    def test_dilation_with_a_transverse_shift(self, chart, flat, sample):
        """``u d/du - v d/dv + d/dx3`` on flat space."""
        X = KillingCandidate(chart, parse_field('u', chart), 0, 1)
        report = verify_case_1_2(FamilySpec('C12i', chart), flat, X, sample)
        assert report.passed, str(report)
        assert report.groups() == ['frame', 'H', 'W', 'killing']

    def test_null_translation_of_a_pp_wave(self, chart, sample):
        """``d/du + d/dx3`` with ``H = x4^2`` integrates to ``A_2 = -1/2``."""
        metric = CCNVMetric(chart, parse_field('x4^2', chart), name='pp-wave')
        X = KillingCandidate(chart, 1, parse_field('x4^2', chart), 1)
        report = verify_case_1_2(FamilySpec('C12ii', chart, {'A2': '-1/2'}), metric, X, sample)
        assert report.passed, str(report)
        assert report['W4'].group == 'W'

        report = verify_case_1_2(FamilySpec('C12ii', chart), metric, X, sample, killing=False)
        assert report['H0'].residual == pytest.approx(0.5)
        assert report['F2_F3'].passed

    def test_transport_subcase(self, chart, sample, translation):
        spec = FamilySpec('C12iii', chart, {'A3': 'x4', 'E4': 'u + x4'})
        report = verify_case_1_2(spec, _case_two_one_metric(chart), translation, sample)
        assert report.passed, str(report)
        assert 'm33_log' in report

    def test_subcase_must_match_x1(self, chart, flat, sample):
        with pytest.raises(FamilyError) as info:
            verify_case_1_2(FamilySpec('C12ii', chart), flat, KillingCandidate(chart, parse_field('u', chart), 0, 1),
                            sample)
        assert 'C12ii' in str(info.value)

    def test_transport_divides_by_f3(self, chart, flat, sample):
        with pytest.raises(FamilyError):
            verify_case_1_2(FamilySpec('C12iii', chart), flat, KillingCandidate.ell(chart), sample)

    def test_wrong_case(self, chart, flat, sample):
        with pytest.raises(FamilyError):
            verify_case_1_2(FamilySpec('C21', chart), flat, KillingCandidate.ell(chart), sample)
