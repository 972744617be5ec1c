# -*- coding: utf-8 -*-
# @Time   : 2026/9/16
# @Author : ccnvkit developers

"""
ccnvkit.geometry.frame
######################
"""

import numpy as np

from ccnvkit.scalarfield import as_field, Constant
from ccnvkit.scalarfield.jet import field_jet
from ccnvkit.utils.exceptions import MaskError, SingularFrameError


class TransverseFrame(object):
    r"""Upper-triangular transverse frame ``m_ie``.

    Row ``i`` and column ``e`` both run over ``3..D`` and are stored at position ``i - 3`` and ``e - 3``.
    The transverse metric is ``g_ef = sum_i m_ie m_if`` and the inverse frame ``m_i^e`` is available as
    exact fields.

    Args:
        chart (Chart): the chart.
        entries (list of list): ``(D-2) x (D-2)`` fields or numbers, zero below the diagonal.
    """

    def __init__(self, chart, entries):
        size = chart.dimension - 2
        if len(entries) != size or any(len(row) != size for row in entries):
            raise ValueError('the frame of {} must be {}x{}'.format(chart, size, size))
        self.chart = chart
        self.size = size
        self.entries = [[as_field(chart, entry) for entry in row] for row in entries]
        for i in range(size):
            for e in range(size):
                entry = self.entries[i][e]
                if e < i and not entry.is_zero():
                    raise ValueError('the frame must be upper-triangular, m_{}{} = {} is not zero'.format(
                        i + 3, e + 3, entry))
                if entry.depends_on('v'):
                    raise MaskError('m_{}{}'.format(i + 3, e + 3), 'v', [c for c in chart.labels if c != 'v'])
            if self.entries[i][i].is_zero():
                raise SingularFrameError('diagonal entry m_{}{} vanishes identically'.format(i + 3, i + 3))
        self.u_dependent = any(entry.depends_on('u') for row in self.entries for entry in row)
        self._inverse = None

    @classmethod
    def identity(cls, chart):
        size = chart.dimension - 2
        return cls(chart, [[1 if i == e else 0 for e in range(size)] for i in range(size)])

    def entry(self, i, e):
        r"""``m_ie`` with ``i, e`` in ``3..D``."""
        return self.entries[i - 3][e - 3]

    @property
    def inverse(self):
        r"""Exact inverse frame, ``inverse[i][e] = m_i^e``, found by back substitution.

        ``m_i^e`` is the transpose of the inverse of the matrix ``m_ie`` and is lower-triangular.
        """
        if self._inverse is None:
            n = self.size
            p = [[Constant(self.chart, 0) for _ in range(n)] for _ in range(n)]
            for j in range(n):
                p[j][j] = 1 / self.entries[j][j]
                for i in range(j - 1, -1, -1):
                    acc = Constant(self.chart, 0)
                    for k in range(i + 1, j + 1):
                        if not self.entries[i][k].is_zero() and not p[k][j].is_zero():
                            acc = acc + self.entries[i][k] * p[k][j]
                    p[i][j] = -acc / self.entries[i][i] if not acc.is_zero() else acc
            self._inverse = [[p[e][i] for e in range(n)] for i in range(n)]
        return self._inverse

    def values(self, p):
        return np.array([[entry._evaluate(p) for entry in row] for row in self.entries])

    def jet(self, p, order=1):
        r"""Frame values and exact coordinate derivatives at ``p``.

        Returns:
            tuple: ``(M[n, n], dM[D, n, n], ddM[D, D, n, n])``, ``dM[c]`` is the derivative along coordinate ``c``
        """
        n, dimension = self.size, self.chart.dimension
        matrix = np.zeros((n, n))
        first = np.zeros((dimension, n, n))
        second = np.zeros((dimension, dimension, n, n))
        for i in range(n):
            for e in range(i, n):
                entry = self.entries[i][e]
                if entry.is_zero():
                    continue
                value, gradient, hessian = field_jet(entry, p, order)
                matrix[i, e] = value
                if order >= 1:
                    first[:, i, e] = gradient
                if order >= 2:
                    second[:, :, i, e] = hessian
        self.check_invertible(matrix, p)
        return matrix, first, second

    def check_invertible(self, matrix, p, tol=1e-12):
        diagonal = np.abs(np.diag(matrix))
        if np.any(diagonal <= tol * max(1.0, np.max(np.abs(matrix)))):
            raise SingularFrameError('the transverse frame is singular at {}: diagonal {}'.format(
                list(p), np.diag(matrix).tolist()))

    def transverse_metric(self, p):
        matrix = self.values(p)
        return matrix.T @ matrix

    def is_positive_definite(self, p):
        try:
            np.linalg.cholesky(self.transverse_metric(p))
        except np.linalg.LinAlgError:
            return False
        return True
