# -*- coding: utf-8 -*-
# @Time   : 2026/9/15
# @Author : ccnvkit developers

"""
ccnvkit.scalarfield.chart
#########################
"""

import numpy as np
import sympy


class Chart(object):
    r"""Coordinate chart ``(u, v, x3, ..., xD)`` of a ``D``-dimensional Kundt spacetime.

    Coordinates are addressed either by label or by position; ``u`` is 0, ``v`` is 1 and ``x{e}`` is ``e - 1``.

    Args:
        dimension (int): spacetime dimension ``D``, at least 4.
    """

    def __init__(self, dimension):
        if int(dimension) != dimension or dimension < 4:
            raise ValueError('`dimension` [{}] must be an integer not smaller than 4.'.format(dimension))
        self.dimension = int(dimension)
        self.labels = ('u', 'v') + tuple('x{}'.format(e) for e in range(3, self.dimension + 1))
        self.transverse = self.labels[2:]
        self.symbols = tuple(sympy.Symbol(label, real=True) for label in self.labels)
        self._index = {label: i for i, label in enumerate(self.labels)}

    def index(self, coord):
        r"""Position of a coordinate.

        Args:
            coord (str or int): label or position

        Returns:
            int: position in ``labels``
        """
        if isinstance(coord, (int, np.integer)):
            if not 0 <= coord < self.dimension:
                raise KeyError('coordinate index [{}] is out of range for D = {}'.format(coord, self.dimension))
            return int(coord)
        try:
            return self._index[coord]
        except KeyError:
            raise KeyError('[{}] is not a coordinate of this chart {}'.format(coord, self.labels))

    def label(self, coord):
        return self.labels[self.index(coord)]

    def symbol(self, coord):
        return self.symbols[self.index(coord)]

    def point(self, values=None, **coords):
        r"""Build and validate a point.

        Args:
            values (array-like, optional): one value per coordinate, in chart order.
            **coords: coordinate values by label; unspecified coordinates are 0.

        Returns:
            numpy.ndarray: float array of length ``D``
        """
        if values is None:
            p = np.zeros(self.dimension)
            for label, value in coords.items():
                p[self.index(label)] = value
        else:
            p = np.asarray(values, dtype=float).copy()
            if p.shape != (self.dimension, ):
                raise ValueError('a point must have {} coordinates, got shape {}'.format(self.dimension, p.shape))
        if not np.all(np.isfinite(p)):
            raise ValueError('point {} is not finite'.format(p.tolist()))
        return p

    def __eq__(self, other):
        return isinstance(other, Chart) and other.dimension == self.dimension

    def __hash__(self):
        return hash(('Chart', self.dimension))

    def __repr__(self):
        return 'Chart(D={})'.format(self.dimension)
