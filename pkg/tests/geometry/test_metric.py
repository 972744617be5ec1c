# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import numpy as np
import pytest

from ccnvkit.geometry import assemble_metric, fd_metric_derivative, CCNVMetric, TransverseFrame
from ccnvkit.scalarfield import antiderivative, parse_field
from ccnvkit.utils.exceptions import MaskError, SingularFrameError


@pytest.fixture
def frame(chart):
    return TransverseFrame(chart, [[parse_field('3 + u*x4', chart), parse_field('x3', chart)], [0, 1]])


@pytest.fixture
def metric(chart, frame):
    """``H = u x3^2``, ``W = (x4, u)`` on a ``u``-dependent frame."""
    return CCNVMetric(chart, parse_field('u*x3^2', chart), [parse_field('x4', chart), parse_field('u', chart)], frame)


class TestTransverseFrame:

    def test_identity(self, chart5):
        frame = TransverseFrame.identity(chart5)
        assert frame.size == 3
        assert frame.values(chart5.point()).tolist() == np.eye(3).tolist()
        assert not frame.u_dependent

    def test_entry_indexing(self, chart, frame):
        assert frame.entry(3, 4).expr == chart.symbol('x3')
        assert frame.u_dependent

    def test_inverse_matches_numpy(self, chart, frame):
        """``inverse[i][e] = m_i^e`` is the transposed inverse of ``m_ie``."""
        p = chart.point(u=1.3, x3=0.4, x4=-0.6)
        exact = np.array([[entry.evaluate(p) for entry in row] for row in frame.inverse])
        assert np.allclose(exact, np.linalg.inv(frame.values(p)).T)

    def test_rejects_lower_entries(self, chart):
        with pytest.raises(ValueError):
            TransverseFrame(chart, [[1, 0], [parse_field('x3', chart), 1]])

    def test_rejects_vanishing_diagonal(self, chart):
        with pytest.raises(SingularFrameError):
            TransverseFrame(chart, [[0, 1], [0, 1]])

    def test_rejects_v_dependence(self, chart):
        with pytest.raises(MaskError) as info:
            TransverseFrame(chart, [[parse_field('1 + v^2', chart), 0], [0, 1]])
        assert info.value.slot == 'm_33'

    def test_singular_at_a_point(self, chart):
        frame = TransverseFrame(chart, [[parse_field('x3', chart), 0], [0, 1]])
        with pytest.raises(SingularFrameError):
            frame.jet(chart.point(u=1.0, x3=0.0))

    def test_positive_definite(self, chart, frame):
        assert frame.is_positive_definite(chart.point(u=1.0, x3=0.5, x4=0.5))


class TestCCNVMetric:

    def test_layout(self, chart, metric):
        """``g_uv = 1``, ``g_uu = 2H``, ``g_ue = W_e`` and ``g_ef = (M^T M)_ef``."""
        p = chart.point(u=1.5, v=0.7, x3=0.2, x4=-0.4)
        g = assemble_metric(metric, p)
        M = np.array([[3 + 1.5 * -0.4, 0.2], [0.0, 1.0]])
        assert g[0, 1] == g[1, 0] == 1.0
        assert g[1, 1] == 0.0
        assert g[0, 0] == pytest.approx(2 * 1.5 * 0.2**2)
        assert g[0, 2:].tolist() == pytest.approx([-0.4, 1.5])
        assert np.allclose(g[2:, 2:], M.T @ M)
        assert np.allclose(g, g.T)

    def test_exact_derivatives(self, chart, metric, sample):
        for p in sample[:4]:
            g, dg, ddg = metric.jet(p, order=2)
            assert np.allclose(dg, fd_metric_derivative(metric, p), atol=1e-8)
            assert ddg.shape == (4, 4, 4, 4)
            assert np.allclose(ddg, ddg.transpose(1, 0, 2, 3))

    def test_gauge_is_read_from_w3(self, chart, metric):
        assert not metric.w3_gauge
        gauged = CCNVMetric(chart, 0, [0, parse_field('x3', chart)])
        assert gauged.w3_gauge
        assert CCNVMetric(chart, 0, [parse_field('x4', chart), 0], gauge=True).w3_gauge

    def test_strict_metric_rejects_v(self, chart):
        with pytest.raises(MaskError) as info:
            CCNVMetric(chart, parse_field('v*x3', chart))
        assert info.value.slot == 'H'
        with pytest.raises(MaskError) as info:
            CCNVMetric(chart, 0, [0, parse_field('v', chart)])
        assert info.value.slot == 'W4'

    def test_mutation_is_not_strict(self, chart, metric):
        broken = metric.mutated(H=metric.H + parse_field('v/10', chart))
        assert broken.v_dependent == ['H']
        assert not broken.strict
        assert broken.name == 'metric*'
        assert broken.W_hat[0] is metric.W_hat[0]

    def test_component_count(self, chart):
        with pytest.raises(ValueError):
            CCNVMetric(chart, 0, [0])

    def test_quadrature_flag(self, chart, metric):
        assert not metric.uses_quadrature()
        assert CCNVMetric(chart, antiderivative(parse_field('x3*u', chart), 'u')).uses_quadrature()

    def test_components_grid(self, metric, sample):
        grid = metric.components_grid(sample[:3])
        assert grid.shape == (3, 4, 4)
        assert np.allclose(grid[1], assemble_metric(metric, sample[1]))
