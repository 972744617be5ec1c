# -*- coding: utf-8 -*-
# @Time   : 2026/9/17
# @Author : ccnvkit developers

"""
ccnvkit.geometry.oracle
#######################

Finite-difference counterparts of the exact geometry, used to cross-check it. Central differences are
Richardson-extrapolated, the base step along coordinate ``c`` is ``step * (1 + |p_c|)``.
"""

import numpy as np

from ccnvkit.geometry.connection import christoffel_at, christoffel_from_jet
from ccnvkit.geometry.metric import assemble_metric


def fd_derivative(function, p, coord, step=1e-4):
    r"""Richardson-extrapolated central difference of ``function`` along coordinate ``coord`` at ``p``.

    Args:
        function (callable): point to float or numpy array.
        p (numpy.ndarray): the point.
        coord (int): coordinate position.
        step (float): relative base step.

    Returns:
        float or numpy.ndarray: the derivative estimate
    """
    p = np.asarray(p, dtype=float)
    h = step * (1.0 + abs(p[coord]))

    def central(width):
        forward, backward = p.copy(), p.copy()
        forward[coord] += width
        backward[coord] -= width
        return (np.asarray(function(forward)) - np.asarray(function(backward))) / (2.0 * width)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def fd_gradient(function, p, step=1e-4):
    r"""Stacked :func:`fd_derivative` along every coordinate, the derivative index comes first."""
    return np.array([fd_derivative(function, p, c, step) for c in range(len(p))])


def fd_metric_derivative(m, p, step=1e-4):
    r"""``dg[c, a, b] = d_c g_ab`` by finite differences of :func:`assemble_metric`."""
    return fd_gradient(lambda q: assemble_metric(m, q), m.chart.point(p), step)


def fd_christoffel(m, p, step=1e-4):
    r"""Christoffel symbols from finite-difference metric derivatives."""
    p = m.chart.point(p)
    return christoffel_from_jet(assemble_metric(m, p), fd_metric_derivative(m, p, step), p).gamma


def fd_riemann(m, p, step=1e-4):
    r"""``R^a_bcd`` from exact Christoffels and their finite-difference derivatives."""
    p = m.chart.point(p)
    gamma = christoffel_at(m, p).gamma
    dgamma = fd_gradient(lambda q: christoffel_at(m, q).gamma, p, step)
    return (
        np.einsum('cadb->abcd', dgamma) - np.einsum('dacb->abcd', dgamma) +
        np.einsum('ace,edb->abcd', gamma, gamma) - np.einsum('ade,ecb->abcd', gamma, gamma)
    )
