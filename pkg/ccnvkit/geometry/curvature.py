# -*- coding: utf-8 -*-
# @Time   : 2026/9/17
# @Author : ccnvkit developers

"""
ccnvkit.geometry.curvature
##########################
"""

from collections import namedtuple
from logging import getLogger

import numpy as np

from ccnvkit.geometry.connection import inverse_metric, lowered_christoffel
from ccnvkit.utils.utils import to_float_list

CurvatureSample = namedtuple(
    'CurvatureSample', ['point', 'gamma', 'riemann', 'ricci', 'scalar', 'ricci_square', 'kretschmann']
)
CurvatureSample.__doc__ = r"""Curvature at a point.

- ``gamma[a, b, c] = Gamma^a_bc``.
- ``riemann[a, b, c, d] = R^a_bcd`` with ``R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb``.
- ``ricci[b, d] = R^a_bad``.
- ``scalar``, ``ricci_square``, ``kretschmann``: ``R``, ``R_ab R^ab``, ``R_abcd R^abcd``.
"""


def riemann_from_jet(g, dg, ddg, p=None):
    r"""Christoffels and the Riemann tensor from the metric jet.

    Args:
        g (numpy.ndarray): ``[D, D]``.
        dg (numpy.ndarray): ``dg[c, a, b] = d_c g_ab``.
        ddg (numpy.ndarray): ``ddg[e, c, a, b] = d_e d_c g_ab``.
        p (numpy.ndarray, optional): the point, for error messages.

    Returns:
        tuple: ``(ginv, gamma, riemann)``
    """
    ginv = inverse_metric(g, p)
    low = lowered_christoffel(dg)
    gamma = np.einsum('ad,dbc->abc', ginv, low)

    dlow = 0.5 * (np.einsum('ebdc->edbc', ddg) + np.einsum('ecdb->edbc', ddg) - ddg)
    dginv = -np.einsum('ai,eij,jd->ead', ginv, dg, ginv)
    dgamma = np.einsum('ead,dbc->eabc', dginv, low) + np.einsum('ad,edbc->eabc', ginv, dlow)

    riemann = (
        np.einsum('cadb->abcd', dgamma) - np.einsum('dacb->abcd', dgamma) +
        np.einsum('ace,edb->abcd', gamma, gamma) - np.einsum('ade,ecb->abcd', gamma, gamma)
    )
    return ginv, gamma, riemann


def curvature_from_jet(g, dg, ddg, p=None):
    ginv, gamma, riemann = riemann_from_jet(g, dg, ddg, p)
    ricci = np.einsum('abad->bd', riemann)
    scalar = np.einsum('bd,bd->', ginv, ricci)
    ricci_up = np.einsum('ac,bd,cd->ab', ginv, ginv, ricci)
    ricci_square = np.einsum('ab,ab->', ricci, ricci_up)
    riemann_low = np.einsum('ae,ebcd->abcd', g, riemann)
    riemann_up = np.einsum('ea,bf,cg,dh,efgh->abcd', ginv, ginv, ginv, ginv, riemann_low, optimize=True)
    kretschmann = np.einsum('abcd,abcd->', riemann_low, riemann_up)
    return CurvatureSample(
        None if p is None else np.asarray(p), gamma, riemann, ricci, float(scalar), float(ricci_square),
        float(kretschmann)
    )


def curvature_at(m, p):
    r"""Curvature of ``m`` at ``p`` from exact first and second derivatives of the metric functions.

    Args:
        m (CCNVMetric): the metric.
        p (array-like): the point.

    Returns:
        CurvatureSample: Christoffels, Riemann, Ricci and the three scalar invariants

    Raises:
        SingularFrameError: singular frame or metric at ``p``.
    """
    p = m.chart.point(p)
    g, dg, ddg = m.jet(p, order=2)
    return curvature_from_jet(g, dg, ddg, p)


def symmetry_violations(sample, g=None):
    r"""Largest violations of the algebraic symmetries of a :class:`CurvatureSample`.

    Returns:
        dict: ``christoffel`` (``Gamma^a_bc - Gamma^a_cb``), ``ricci`` (``R_ab - R_ba``), ``pair``
        (``R^a_bcd + R^a_bdc``), ``bianchi`` (``R^a_[bcd]``) and, with ``g``, ``lowered_pair``
        (``R_abcd + R_bacd``)
    """
    riemann = sample.riemann
    violations = {
        'christoffel': np.max(np.abs(sample.gamma - sample.gamma.transpose(0, 2, 1))),
        'ricci': np.max(np.abs(sample.ricci - sample.ricci.T)),
        'pair': np.max(np.abs(riemann + riemann.transpose(0, 1, 3, 2))),
        'bianchi': np.max(np.abs(riemann + riemann.transpose(0, 2, 3, 1) + riemann.transpose(0, 3, 1, 2))),
    }
    if g is not None:
        lowered = np.einsum('ae,ebcd->abcd', g, riemann)
        violations['lowered_pair'] = np.max(np.abs(lowered + lowered.transpose(1, 0, 2, 3)))
    return {name: float(value) for name, value in violations.items()}


class InvariantProbe(object):
    r"""Outcome of :func:`vsi_csi_probe`.

    This is a numerical probe over a finite sample, not a proof of constancy or vanishing.

    Args:
        values (dict): invariant name to the list of its values over the sample.
        tolerance (float): threshold of both the spread and the magnitude tests.
    """
    names = ('scalar', 'ricci_square', 'kretschmann')

    def __init__(self, values, points, tolerance):
        self.values = {name: to_float_list(values[name]) for name in self.names}
        self.points = np.asarray(points)
        self.tolerance = float(tolerance)
        self.spread = {name: float(np.ptp(self.values[name])) for name in self.names}
        self.magnitude = {name: float(np.max(np.abs(self.values[name]))) for name in self.names}

    @property
    def constant(self):
        return max(self.spread.values()) < self.tolerance

    @property
    def vanishing(self):
        return max(self.magnitude.values()) < self.tolerance

    def to_dict(self):
        return {
            'kind': 'probe',
            'constant': self.constant,
            'vanishing': self.vanishing,
            'spread': self.spread,
            'magnitude': self.magnitude,
            'tolerance': self.tolerance,
        }

    def __repr__(self):
        return 'InvariantProbe(constant={}, vanishing={})'.format(self.constant, self.vanishing)


def vsi_csi_probe(m, sample, tolerance=1e-8):
    r"""Evaluate ``R``, ``R_ab R^ab`` and ``R_abcd R^abcd`` over a sample.

    Reports the spread of each invariant (constant invariants, CSI) and its largest magnitude (vanishing
    invariants, VSI).

    Args:
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points, ``N >= 10``.
        tolerance (float): threshold of both tests.

    Returns:
        InvariantProbe: the probe outcome
    """
    sample = np.atleast_2d(np.asarray(sample, dtype=float))
    if sample.shape[0] < 10:
        raise ValueError('the invariant probe needs at least 10 sample points, got {}'.format(sample.shape[0]))
    values = {name: [] for name in InvariantProbe.names}
    for p in sample:
        curvature = curvature_at(m, p)
        for name in InvariantProbe.names:
            values[name].append(getattr(curvature, name))
    probe = InvariantProbe(values, sample, tolerance)
    getLogger().debug('invariant probe of [{}]: {!r}'.format(m.name, probe))
    return probe
