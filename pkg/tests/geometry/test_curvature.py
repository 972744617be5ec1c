# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import numpy as np
import pytest

from ccnvkit.geometry import curvature_at, fd_riemann, symmetry_violations, vsi_csi_probe, CCNVMetric, \
    TransverseFrame
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import parse_field


@pytest.fixture
def pp_wave(chart):
    """Vacuum pp-wave ``H = x3^2 - x4^2``."""
    return CCNVMetric(chart, parse_field('x3^2 - x4^2', chart), name='pp-wave')


@pytest.fixture
def inhomogeneous(chart):
    """Transverse metric ``(1 + x4^2)^2 dx3^2 + dx4^2`` whose Gauss curvature varies with ``x4``."""
    frame = TransverseFrame(chart, [[parse_field('1 + x4^2', chart), 0], [0, 1]])
    return CCNVMetric(chart, 0, frame=frame, name='inhomogeneous')


@pytest.fixture
def invariant_sample(chart):
    return RegionSampler(chart, seed=11).sample(12)


class TestRiemann:

    def test_flat(self, flat, sample):
        curvature = curvature_at(flat, sample[0])
        assert np.max(np.abs(curvature.riemann)) == 0.0
        assert curvature.kretschmann == 0.0

    def test_pp_wave_is_ricci_flat(self, pp_wave, sample):
        """``R_uu = -(H_,33 + H_,44)`` vanishes for a harmonic profile."""
        for p in sample[:5]:
            curvature = curvature_at(pp_wave, p)
            assert np.max(np.abs(curvature.ricci)) < 1e-12
            assert np.max(np.abs(curvature.riemann)) > 1.0

    def test_pp_wave_ricci(self, chart):
        metric = CCNVMetric(chart, parse_field('x3^2 + x4^2', chart))
        curvature = curvature_at(metric, chart.point(u=1.0, x3=0.3, x4=0.2))
        assert curvature.ricci[0, 0] == pytest.approx(-4.0)
        assert curvature.scalar == pytest.approx(0.0, abs=1e-12)

    def test_matches_finite_differences(self, inhomogeneous, sample):
        for p in sample[:3]:
            assert np.allclose(curvature_at(inhomogeneous, p).riemann, fd_riemann(inhomogeneous, p), atol=1e-6)

    def test_symmetries(self, chart, sample):
        frame = TransverseFrame(chart, [[parse_field('2 + u*x4^2', chart), parse_field('x3', chart)], [0, 1]])
        metric = CCNVMetric(chart, parse_field('u*x3*x4', chart), [parse_field('u*x4', chart), 0], frame)
        for p in sample[:3]:
            curvature = curvature_at(metric, p)
            g = metric.jet(p, order=0)[0]
            violations = symmetry_violations(curvature, g)
            assert set(violations) == {'christoffel', 'ricci', 'pair', 'bianchi', 'lowered_pair'}
            assert max(violations.values()) < 1e-9


class TestInvariantChecks:

    def test_pp_wave_is_vsi(self, pp_wave, invariant_sample):
        report = vsi_csi_probe(pp_wave, invariant_sample)
        assert report.vanishing
        assert report.constant

    def test_inhomogeneous_is_not_csi(self, inhomogeneous, invariant_sample):
        """``R = 2K`` with ``K = -2 / (1 + x4^2)`` changes over the sample."""
        report = vsi_csi_probe(inhomogeneous, invariant_sample)
        assert not report.constant
        assert not report.vanishing
        p = invariant_sample[0]
        assert report.values['scalar'][0] == pytest.approx(-4.0 / (1 + p[3]**2))

    def test_report_layout(self, pp_wave, invariant_sample):
        record = vsi_csi_probe(pp_wave, invariant_sample).to_dict()
        assert record['kind'] == 'probe'
        assert set(record['spread']) == {'scalar', 'ricci_square', 'kretschmann'}

    def test_needs_ten_points(self, pp_wave, invariant_sample):
        with pytest.raises(ValueError):
            vsi_csi_probe(pp_wave, invariant_sample[:9])
