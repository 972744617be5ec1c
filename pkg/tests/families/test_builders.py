# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import numpy as np
import pytest

from ccnvkit.families import build_case_1_1_i, build_case_1_1_ii, build_case_2_2, build_family, build_null_n, \
    build_null_transport, verify_case_1_2, FamilySpec
from ccnvkit.killing import frame_norms_on, killing_report, norms_on
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import parse_field
from ccnvkit.utils import FamilyCase, init_seed, KillingForm
from ccnvkit.utils.exceptions import FamilyError, MaskError

POSITIVE_U = {'u': [0.5, 2.0]}


@pytest.fixture
def positive(chart):
    return RegionSampler(chart, POSITIVE_U, seed=5).sample(15)


class TestFamilySpec:

    def test_unknown_slot(self, chart):
        with pytest.raises(FamilyError) as info:
            FamilySpec('C11i', chart, {'A0': 'u'})
        assert 'A0' in str(info.value)

    def test_slot_masks(self, chart):
        with pytest.raises(MaskError) as info:
            FamilySpec('C11i', chart, {'g2': 'u*x3'})
        assert info.value.slot == 'g2'
        with pytest.raises(MaskError):
            FamilySpec('C11ii', chart, {'A0': 'x3'})
        with pytest.raises(MaskError):
            FamilySpec('C22', chart, {'F1': 'u + x4'})

    def test_frame_mask(self, chart):
        with pytest.raises(MaskError):
            FamilySpec('C11i', chart, frame=[['1 + u', 0], [0, 1]])

    def test_defaults(self, chart):
        spec = FamilySpec(FamilyCase.C21, chart, {'A3': 'x4'})
        assert spec['E4'].is_zero()
        assert spec['A3'].expr == chart.symbol('x4')
        with pytest.raises(FamilyError):
            spec['B3']


class TestCaseOneOneI:

    def test_metric_and_vector(self, chart, positive):
        """``g_2 = u^2`` gives ``H = f_2 / u^2 - 1`` and ``W_i = B_i / u``."""
        spec = FamilySpec('C11i', chart, {'f2': 'x3^2 + x4^2', 'g2': 'u^2', 'B4': 'x3'}, region=POSITIVE_U)
        metric, X = build_case_1_1_i(spec)
        p = chart.point(u=1.5, v=0.2, x3=0.4, x4=-0.3)
        assert metric.H.evaluate(p) == pytest.approx(0.25 / 1.5**2 - 1)
        assert metric.W_hat[0].is_zero()
        assert metric.W_hat[1].evaluate(p) == pytest.approx(0.4 / 1.5)
        assert X.form == KillingForm.B
        assert X.F2.evaluate(p) == pytest.approx((0.25 + 1.5**2) / 1.5)
        assert killing_report(X, metric, positive).passed

    def test_with_a_frame(self, chart, positive):
        spec = FamilySpec('C11i', chart, {'f2': 'x3*x4', 'g2': 'sin(u)', 'B3': 'x4', 'B4': 'x3^2'},
                          frame=[['2 + x4^2', 'x3'], [0, '1 + x3^2']], region=POSITIVE_U)
        metric, X = build_case_1_1_i(spec)
        assert not metric.w3_gauge
        assert killing_report(X, metric, positive).passed

    def test_singular_region(self, chart):
        with pytest.raises(FamilyError) as info:
            build_case_1_1_i(FamilySpec('C11i', chart, {'f2': 'x3'}, region={'u': [-1.0, 1.0]}))
        assert 'u = 0' in str(info.value)

    def test_wrong_case(self, chart):
        with pytest.raises(FamilyError):
            build_case_1_1_i(FamilySpec('C11ii', chart))


class TestCaseOneOneII:

    def test_metric_and_vector(self, chart, sample):
        """``A_0 = u x4`` integrates to ``W_4 = u^2 / 2 + C_4``."""
        spec = FamilySpec('C11ii', chart, {'F2': 'x3*x4', 'A0': 'u*x4', 'C4': 'sin(x3)'})
        metric, X = build_case_1_1_ii(spec)
        p = chart.point(u=1.2, v=0.0, x3=0.5, x4=0.7)
        assert metric.H.evaluate(p) == pytest.approx(0.5 * 0.7 + 1.2 * 0.7)
        assert metric.W_hat[1].evaluate(p) == pytest.approx(1.2**2 / 2 + np.sin(0.5))
        assert metric.uses_quadrature()
        assert X.form == KillingForm.A
        assert killing_report(X, metric, sample, 1e-7).passed

    def test_frame_must_not_depend_on_u(self, chart):
        with pytest.raises(MaskError) as info:
            FamilySpec('C11ii', chart, {'F2': 'x3'}, frame=[[1, 'u*x4'], [0, 1]])
        assert info.value.slot == 'm34'
        assert info.value.coordinate == 'u'


class TestCaseTwoTwo:

    def test_constant_h(self, chart, sample):
        """``F_1 = u + x3`` and ``F_2 = k (u + x3) + c`` give ``H = -k``."""
        spec = FamilySpec('C22', chart, {'F1': 'u + x3', 'F2': '2*(u + x3) + 1'})
        metric, X = build_case_2_2(spec)
        assert np.allclose(metric.H.evaluate_many(sample), -2.0)
        assert np.allclose(metric.frame.entries[0][0].evaluate_many(sample), 1.0)
        assert X.form == KillingForm.C
        assert killing_report(X, metric, sample).passed

    def test_u_dependent_frame(self, chart, sample):
        """``F_1 = u x3`` gives ``m_33 = u`` and ``F_3 = -u x3^2 / 2``; ``F_2 = -2 u x3 + 1`` gives ``H = 2``."""
        spec = FamilySpec('C22', chart, {'F1': 'u*x3', 'F2': '-2*u*x3 + 1'})
        metric, X = build_case_2_2(spec)
        p = sample[0]
        assert metric.frame.entries[0][0].evaluate(p) == pytest.approx(p[0])
        assert X.F3.evaluate(p) == pytest.approx(-p[0] * p[2]**2 / 2)
        assert np.allclose(metric.H.evaluate_many(sample), 2.0)
        assert all(np.allclose(w.evaluate_many(sample), 0.0) for w in metric.W_hat)
        assert killing_report(X, metric, sample).passed

    def test_incompatible_f2(self, chart):
        """``H_,3 != 0`` breaks the ``uu`` Killing equation."""
        with pytest.raises(FamilyError) as info:
            build_case_2_2(FamilySpec('C22', chart, {'F1': 'u + x3', 'F2': 'x3^2'}))
        assert 'incompatible' in str(info.value)

    def test_f1_needs_x3(self, chart):
        with pytest.raises(FamilyError):
            build_case_2_2(FamilySpec('C22', chart, {'F1': 'u'}))


class TestDispatch:

    def test_builders(self, chart):
        metric, X = build_family(FamilySpec('C11ii', chart, {'F2': 'x4'}))
        assert metric.name == 'C11ii'
        assert X.F1.value == 1.0

    @pytest.mark.parametrize('case', ['C12i', 'C12ii', 'C12iii', 'C21'])
    def test_verifier_only_families(self, chart, case):
        with pytest.raises(FamilyError) as info:
            build_family(FamilySpec(case, chart))
        assert 'only a verifier' in str(info.value)

    @pytest.mark.parametrize('case, slots', [('N0', {'A0': 'u*x4'}), ('N1', {'eps': 1, 'P': '2 + x4^2'})])
    def test_null_families(self, chart, case, slots):
        metric, X = build_family(FamilySpec(case, chart, slots))
        assert metric.name == case
        assert X.F1.value == 1.0


class TestNullFamilies:

    def test_null_n(self, chart, sample):
        """``X = n`` is the ``F_2 = 0`` member of ``C11ii``."""
        slots = {'A0': 'u*x4^2', 'C3': 'x4', 'C4': 'cos(x3)'}
        frame = [['2 + x4^2', 'x3'], [0, '1 + x3^2']]
        metric, X = build_null_n(FamilySpec('N0', chart, slots, frame=frame))
        assert X.form == KillingForm.A
        assert killing_report(X, metric, sample, 1e-7).passed
        assert np.allclose(frame_norms_on(X, metric, sample), 0.0)
        assert np.allclose(norms_on(X, metric, sample[:5]), 0.0, atol=1e-9)

        same, _ = build_case_1_1_ii(FamilySpec('C11ii', chart, dict(slots, F2=0), frame=frame))
        assert np.allclose(metric.H.evaluate_many(sample), same.H.evaluate_many(sample))
        for w, expected in zip(metric.W_hat, same.W_hat):
            assert np.allclose(w.evaluate_many(sample[:5]), expected.evaluate_many(sample[:5]))

    def test_transport(self, chart, sample):
        """``m_33 = 1 + (x3 - u)^2`` and ``F_3 = m_33``."""
        spec = FamilySpec('N1', chart, {'eps': 1, 'P': '1 + x3^2', 'A2': 'u*x4', 'E4': 'x3'})
        metric, X = build_null_transport(spec)
        p = chart.point(u=1.5, v=0.3, x3=0.2, x4=-0.4)
        m33 = 1 + (0.2 - 1.5)**2
        assert metric.frame.entries[0][0].evaluate(p) == pytest.approx(m33)
        assert X.F3.evaluate(p) == pytest.approx(m33)
        assert metric.H.evaluate(p) == pytest.approx(-m33**2 / 2 + 1.5 * -0.4)
        assert metric.W_hat[0].is_zero()
        assert metric.W_hat[1].evaluate(p) == pytest.approx(1.5**2 / 2 + 0.2 - 1.5)
        assert metric.w3_gauge
        assert X.form == KillingForm.A
        assert killing_report(X, metric, sample, 1e-7).passed
        assert np.allclose(frame_norms_on(X, metric, sample), 0.0, atol=1e-9)
        assert np.allclose(norms_on(X, metric, sample), 0.0, atol=1e-9)

    def test_transport_solves_case_1_2_ii(self, chart, sample):
        """The ``A_2`` slot of ``C12ii`` absorbs ``-eps^2 P(-eps u)^2 / 2``."""
        metric, X = build_null_transport(FamilySpec('N1', chart, {'eps': 1, 'P': '1 + x3^2', 'A2': 'u*x4',
                                                                  'E4': 'x3'}))
        verifier = FamilySpec('C12ii', chart, {'A2': 'u*x4 - (1 + u^2)^2/2'})
        report = verify_case_1_2(verifier, metric, X, sample, tolerance=1e-7)
        assert report.passed, str(report)
        assert report.group_passed('H')

    def test_transport_in_five_dimensions(self, chart5, sample5):
        spec = FamilySpec('N1', chart5, {'eps': '-1/2', 'P': '1 + x3^2 + x4^2', 'A2': 'u*x4*x5',
                                         'E4': 'x3*x5', 'E5': 'x4'},
                          frame=[['1 + x5^2', 'x4'], [0, 1]])
        metric, X = build_null_transport(spec)
        assert metric.frame.entries[1][1].evaluate(sample5[0]) == pytest.approx(1 + sample5[0][4]**2)
        assert metric.frame.entries[0][1].is_zero()
        assert killing_report(X, metric, sample5, 1e-7).passed
        assert np.allclose(norms_on(X, metric, sample5), 0.0, atol=1e-9)

    def test_eps(self, chart):
        with pytest.raises(FamilyError) as info:
            build_null_transport(FamilySpec('N1', chart, {'P': '1 + x3^2'}))
        assert 'eps' in str(info.value)
        with pytest.raises(MaskError) as info:
            FamilySpec('N1', chart, {'eps': 'u', 'P': '1'})
        assert info.value.slot == 'eps'

    def test_zero_profile(self, chart):
        with pytest.raises(FamilyError):
            build_null_transport(FamilySpec('N1', chart, {'eps': 1}))
        with pytest.raises(FamilyError) as info:
            build_null_transport(FamilySpec('N1', chart, {'eps': 1, 'P': 'x3 - x3'}))
        assert 'nonzero' in str(info.value)

    def test_block_frame_only(self, chart):
        with pytest.raises(MaskError):
            FamilySpec('N1', chart, {'eps': 1, 'P': '1'}, frame=[['1 + x3^2']])


def _random_frame(draw):
    r"""A ``u``-independent upper-triangular frame with a positive diagonal."""
    return [['{} + x4^2'.format(np.random.randint(1, 4)), draw(['x3', 'x4'], 1, ('poly', 'trig'))],
            [0, '{} + sin(x3)'.format(np.random.randint(2, 4))]]


def _random_case_2_2(chart):
    r"""``F_1 = phi(x3) + a u`` or ``b u x3`` with ``F_2 = k F_1 + c``, so that ``H = -k``."""
    if np.random.randint(2):
        F1 = '{}*x3 + {}*u + {}'.format(np.random.randint(2, 4), np.random.randint(0, 3),
                                        np.random.choice(['sin(x3)', 'cos(x3)', 'x3^3']))
    else:
        F1 = '{}*u*x3'.format(np.random.randint(1, 4))
    k, c = np.random.randint(-3, 4), np.random.randint(-3, 4)
    m44 = '{} + {}'.format(np.random.randint(2, 4), np.random.choice(['sin(x4)', 'x4^2', 'exp(x4)/3']))
    spec = FamilySpec('C22', chart, {'F1': F1, 'F2': '{}*({}) + {}'.format(k, F1, c)}, frame=[[m44]])
    return build_case_2_2(spec), -k


def draw_family(case, chart, draw, seed):
    init_seed(seed, True)
    transverse = list(chart.transverse)
    if case == 'C11i':
        slots = {'f2': draw(transverse), 'g2': draw(['u']), 'B3': draw(transverse, 2), 'B4': draw(transverse, 2)}
        return build_case_1_1_i(FamilySpec(case, chart, slots, _random_frame(draw), POSITIVE_U))
    if case == 'C11ii':
        slots = {'F2': draw(transverse), 'A0': draw(['u', 'x4'], 2), 'C3': draw(transverse, 1),
                 'C4': draw(transverse, 1)}
        return build_case_1_1_ii(FamilySpec(case, chart, slots, _random_frame(draw)))
    return _random_case_2_2(chart)[0]


class TestRandomDraws:

    @pytest.mark.parametrize('seed', range(10))
    @pytest.mark.parametrize('case', ['C11i', 'C11ii', 'C22'])
    def test_killing(self, chart, positive, random_expression, case, seed):
        metric, X = draw_family(case, chart, random_expression, seed)
        report = killing_report(X, metric, positive[:8])
        assert report.passed, str(report)

    @pytest.mark.parametrize('seed', range(10))
    def test_case_2_2_has_constant_h(self, chart, positive, seed):
        init_seed(seed, True)
        (metric, X), H = _random_case_2_2(chart)
        assert np.allclose(metric.H.evaluate_many(positive), H)
        assert X.form == KillingForm.C

    @pytest.mark.parametrize('seed', range(10))
    @pytest.mark.parametrize('case', ['C11i', 'C11ii', 'C22'])
    def test_v_dependent_mutation(self, chart, positive, random_expression, case, seed):
        r"""``H + a v (1 + x3^2)`` leaves ``(L_X g)_uv = -X_1 a (1 + x3^2)``."""
        metric, X = draw_family(case, chart, random_expression, seed)
        a = np.random.randint(1, 10)
        broken = metric.mutated(H=metric.H + parse_field('{}/10*v*(1 + x3^2)'.format(a), chart))
        report = killing_report(X, broken, positive[:6])
        assert not report.passed
        assert report['lie'].residual > 1e-3
