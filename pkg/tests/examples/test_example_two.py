# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import logging

import numpy as np
import pytest

from ccnvkit.examples import build_example_II, build_example_II_analytic, ExampleIISpec
from ccnvkit.killing import killing_report, norms_on, to_coordinate_vector
from ccnvkit.scalarfield import parse_field
from ccnvkit.utils import init_seed
from ccnvkit.utils.exceptions import FamilyError, MaskError


class TestQuadratureForm:

    def test_translation(self, chart, sample):
        """``H = 0``, ``f = 0`` and ``F_2 = -1`` give ``X = d/du + d/dx3`` with norm ``-1``."""
        metric, X, norm = build_example_II(ExampleIISpec(chart, 1, F2=-1))
        p = sample[0]
        assert to_coordinate_vector(X, metric).evaluate(p).tolist() == pytest.approx([1.0, 0.0, 1.0, 0.0])
        assert metric.W_hat[0].evaluate(p) == pytest.approx(-1.0)
        assert norm.evaluate(p) == pytest.approx(-1.0)
        assert killing_report(X, metric, sample).passed

    def test_integrated_w(self, chart, sample):
        metric, X, norm = build_example_II(ExampleIISpec(chart, 1, H='x3*x4', F2=-1, f='x4'))
        assert metric.uses_quadrature()
        report = killing_report(X, metric, sample[:8], 1e-7)
        assert report.passed, str(report)
        assert np.allclose(norm.evaluate_many(sample), -1.0)

    def test_profile_and_e(self, chart, sample):
        spec = ExampleIISpec(chart, 0.5, profile=[['1 + x4^2', 0], [0, 1]], H='u*x4', F2='x3', E={'x4': 'x3'})
        metric, X, norm = build_example_II(spec)
        assert np.allclose(norms_on(X, metric, sample[:8]), norm.evaluate_many(sample[:8]), atol=1e-7)


    def test_shifted_profile_is_killing(self, chart, sample):
        """A profile depending on ``x3`` is shifted along with ``F_2`` and ``E_4``."""
        spec = ExampleIISpec(chart, 1, profile=[['2 + x3^2', 0], [0, '1 + x4^2']], H='u*x4', F2='x3',
                             E={'x4': 'x3'})
        metric, X, norm = build_example_II(spec)
        p = sample[0]
        assert metric.frame.entries[0][0].evaluate(p) == pytest.approx(2 + (p[2] - p[0])**2)
        report = killing_report(X, metric, sample[:8], 1e-7)
        assert report.passed, str(report)
        assert np.allclose(norms_on(X, metric, sample[:8]), norm.evaluate_many(sample[:8]), atol=1e-7)

class TestAnalyticForm:

    def test_exact_series(self, chart, sample):
        """``f = x3 x4`` has ``d_4 f = x3`` so the series of ``W_4`` stops at ``x3^2 / 2``."""
        spec = ExampleIISpec(chart, 1, H='x3 + x4^2', F2=-1, f='x3*x4', analytic=True)
        metric, X, norm = build_example_II_analytic(spec)
        assert not metric.uses_quadrature()
        p = sample[0]
        assert metric.H.evaluate(p) == pytest.approx(p[2] - p[0] + p[3]**2)
        assert metric.W_hat[1].evaluate(p) == pytest.approx(p[2]**2 / 2)
        assert killing_report(X, metric, sample).passed

    def test_null_vector(self, chart, sample):
        spec = ExampleIISpec(chart, 1, H='x3 + x4^2', F2='-1/2', f='x3*x4', analytic=True)
        metric, X, norm = build_example_II_analytic(spec)
        assert np.allclose(norm.evaluate_many(sample), 0.0)
        assert np.allclose(norms_on(X, metric, sample), 0.0)

    def test_truncation_warning(self, chart, caplog):
        spec = ExampleIISpec(chart, 1, f='sin(x3)*x4', analytic=True, order=2)
        with caplog.at_level(logging.WARNING):
            build_example_II_analytic(spec)
        assert 'truncated at order 3' in caplog.text

    def test_needs_analytic_spec(self, chart):
        with pytest.raises(FamilyError):
            build_example_II_analytic(ExampleIISpec(chart, 1, H='x3'))

    def test_analytic_h_is_shifted(self, chart):
        with pytest.raises(MaskError):
            ExampleIISpec(chart, 1, H='u*x3', analytic=True)


class TestInputs:

    def test_eps_must_be_nonzero(self, chart):
        with pytest.raises(FamilyError):
            ExampleIISpec(chart, 0)

    def test_order(self, chart):
        with pytest.raises(FamilyError):
            ExampleIISpec(chart, 1, order=-1, analytic=True)

    def test_e_index(self, chart):
        with pytest.raises(FamilyError):
            ExampleIISpec(chart, 1, E={'x5': 1})


def draw_example(chart, draw, seed):
    init_seed(seed, True)
    eps = [1, -1, 0.5, 2][np.random.randint(4)]
    profile = None
    if np.random.randint(2):
        profile = [['{} + {}^2'.format(np.random.randint(1, 3), np.random.choice(['x3', 'x4'])), 0], [0, 1]]
    spec = ExampleIISpec(chart, eps, profile=profile, H=draw(['u', 'x3', 'x4'], 2, ('poly', 'trig', 'exp')),
                         F2=draw(['x3', 'x4'], 2), f=draw(['x3', 'x4'], 1, ('poly', 'trig')),
                         E={'x4': draw(['x3', 'x4'], 1, ('poly', 'trig'))})
    return build_example_II(spec)


class TestRandomDraws:

    @pytest.mark.parametrize('seed', range(10))
    def test_killing(self, chart, sample, random_expression, seed):
        metric, X, norm = draw_example(chart, random_expression, seed)
        report = killing_report(X, metric, sample[:6], 1e-7)
        assert report.passed, str(report)

    @pytest.mark.parametrize('seed', range(10))
    def test_v_dependent_mutation(self, chart, sample, random_expression, seed):
        """``(L_X g)_uv = -a (1 + x3^2)`` for ``X_1 = 1``."""
        metric, X, _ = draw_example(chart, random_expression, seed)
        a = np.random.randint(1, 10)
        broken = metric.mutated(H=metric.H + parse_field('{}/10*v*(1 + x3^2)'.format(a), chart))
        report = killing_report(X, broken, sample[:4], 1e-7)
        assert not report.passed
        assert report['lie'].residual >= a / 10 - 1e-9
