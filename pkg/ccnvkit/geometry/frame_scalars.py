# -*- coding: utf-8 -*-
# @Time   : 2026/9/17
# @Author : ccnvkit developers

"""
ccnvkit.geometry.frame_scalars
##############################

Frame ``(l, n, e_3, ..., e_D)`` of a CCNV metric, stored at positions ``0, 1, 2, ..., D - 1``::

    l   = d_v
    n   = d_u - H d_v
    e_i = m_i^e (d_e - W_e d_v)

The only nonzero inner products are ``g(l, n) = 1`` and ``g(e_i, e_j) = delta_ij``.
"""

import numpy as np

from ccnvkit.scalarfield.jet import field_jet, fields_jet


class FrameScalars(object):
    r"""Frame scalars of a metric at one point.

    Transverse indices ``i, j, k`` run over ``3..D`` and are stored at position ``i - 3``.

    Attributes:
        B (numpy.ndarray): ``B_ij = m_ie,u m_j^e``.
        W (numpy.ndarray): ``W_i = m_i^e W_e``.
        J (numpy.ndarray): ``J_i = D_i H - D_2 W_i - B_ji W_j``.
        A (numpy.ndarray): ``A_ij = D_j W_i - D_i W_j + D_kij W_k``, antisymmetric.
        D (numpy.ndarray): ``D_ijk = m_ie,f (m_j^e m_k^f - m_k^e m_j^f)``, antisymmetric in ``j, k``.
        C (numpy.ndarray): ``C[a, b, c] = g([e_a, e_b], e_c)`` in frame positions.
        gamma (numpy.ndarray): ``gamma[a, b, c] = g(e_a, nabla_{e_c} e_b)``.
    """

    def __init__(self, metric, p):
        self.metric = metric
        self.point = p
        dimension = metric.chart.dimension
        self.dimension = dimension

        self.h, self.dh, _ = field_jet(metric.H, p, 1)
        self.w_hat, self.dw_hat, _ = fields_jet(metric.W_hat, p, 1)
        self.M, self.dM, _ = metric.frame.jet(p, 1)
        self.N = np.linalg.inv(self.M).T
        self.dN = -np.einsum('ia,cba,bj->cij', self.N, self.dM, self.N)

        self.B = self.dM[0] @ self.N.T
        self.W = self.N @ self.w_hat
        # dW[c, i] = d_c W_i
        self.dW = np.einsum('cie,e->ci', self.dN, self.w_hat) + np.einsum('ie,ce->ci', self.N, self.dw_hat)
        frame_w = np.array([self.derive(self.dW[:, i]) for i in range(dimension - 2)])

        x = np.einsum('fke,ie,jf->kij', self.dM[2:], self.N, self.N)
        self.D = x - x.transpose(0, 2, 1)
        self.J = self.derive(self.dh)[2:] - frame_w[:, 1] - self.B.T @ self.W
        # frame_w[i, 2 + j] = D_j W_i
        self.A = frame_w[:, 2:] - frame_w[:, 2:].T + np.einsum('kij,k->ij', self.D, self.W)

        self.C = self._structure_constants()
        self.gamma = 0.5 * (
            np.einsum('cba->abc', self.C) - np.einsum('bac->abc', self.C) + np.einsum('acb->abc', self.C)
        )

    def derive(self, gradient):
        r"""Frame derivatives ``[D_1 f, D_2 f, D_3 f, ..., D_D f]`` from the coordinate gradient of ``f``."""
        gradient = np.asarray(gradient, dtype=float)
        transverse = gradient[2:] - self.w_hat * gradient[1]
        return np.concatenate([[gradient[1], gradient[0] - self.h * gradient[1]], self.N @ transverse])

    def _structure_constants(self):
        dimension = self.dimension
        C = np.zeros((dimension, dimension, dimension))
        # [n, e_i] = J_i l - B_ji e_j
        C[1, 2:, 1] = self.J
        C[1, 2:, 2:] = -self.B.T
        # [e_i, e_j] = A_ij l + D_kij e_k
        C[2:, 2:, 1] = self.A
        C[2:, 2:, 2:] = np.einsum('kij->ijk', self.D)
        C[2:, 1, :] = -C[1, 2:, :]
        return C

    @property
    def frame_metric(self):
        eta = np.eye(self.dimension)
        eta[:2, :2] = [[0.0, 1.0], [1.0, 0.0]]
        return eta

    def vectors(self):
        r"""Coordinate components of the frame vectors, row ``a`` is ``e_a``."""
        dimension = self.dimension
        E = np.zeros((dimension, dimension))
        E[0, 1] = 1.0
        E[1, 0], E[1, 1] = 1.0, -self.h
        E[2:, 2:] = self.N
        E[2:, 1] = -self.N @ self.w_hat
        return E

    def gamma_3n2(self, n):
        r"""``Gamma_{3n2}`` for ``n`` in ``4..D``."""
        return self.gamma[2, n - 1, 1]

    def gamma_3n3(self, n):
        return self.gamma[2, n - 1, 2]

    def gamma_3nm(self, n, m):
        return self.gamma[2, n - 1, m - 1]

    def violations(self):
        r"""Largest violations of the antisymmetries of ``A``, ``D`` and ``C``."""
        return {
            'A': float(np.max(np.abs(self.A + self.A.T))),
            'D': float(np.max(np.abs(self.D + self.D.transpose(0, 2, 1)))),
            'C': float(np.max(np.abs(self.C + self.C.transpose(1, 0, 2)))),
        }

    def is_finite(self):
        return all(np.all(np.isfinite(array)) for array in (self.B, self.W, self.J, self.A, self.D, self.gamma))


def frame_scalars_at(m, p):
    r"""Frame scalars of ``m`` at ``p``.

    Args:
        m (CCNVMetric): the metric.
        p (array-like): the point.

    Returns:
        FrameScalars: ``B``, ``W``, ``J``, ``A``, ``D`` and the frame connection

    Raises:
        SingularFrameError: the frame is singular at ``p``.
    """
    return FrameScalars(m, m.chart.point(p))
