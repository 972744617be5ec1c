# -*- coding: utf-8 -*-
# @Time   : 2026/9/17
# @Author : ccnvkit developers

"""
ccnvkit.sampler
###############
"""

import numpy as np

default_region = {'u': (0.5, 2.0), 'v': (-2.0, 2.0), 'x': (-1.0, 1.0)}


class RegionSampler(object):
    r""":class:`RegionSampler` draws points uniformly from a box of the chart.

    Every sampler owns a ``numpy.random.Generator`` on ``PCG64(seed)``, so the points it returns only depend on
    the region, the seed and the order of the calls.

    Args:
        chart (Chart): the chart.
        region (dict, optional): label to ``(low, high)``. Transverse coordinates fall back to the ``'x'`` entry.
        seed (int): seed of the generator.
    """

    def __init__(self, chart, region=None, seed=2026):
        self.chart = chart
        self.seed = int(seed)
        region = dict(region or {})
        bounds = []
        for label in chart.labels:
            fallback = region.get('x', default_region['x']) if label in chart.transverse else default_region[label]
            low, high = region.get(label, fallback)
            if not low <= high:
                raise ValueError('empty sample interval [{}, {}] for [{}]'.format(low, high, label))
            bounds.append((float(low), float(high)))
        self.bounds = np.array(bounds)
        self.generator = np.random.Generator(np.random.PCG64(self.seed))

    @classmethod
    def from_config(cls, chart, config, region=None, seed=None):
        r"""Sampler with the default region of ``config`` (``region_u``, ``region_v``, ``region_x``), updated
        by ``region``."""
        base = {'u': config['region_u'], 'v': config['region_v'], 'x': config['region_x']}
        base = {key: tuple(value) for key, value in base.items() if value is not None}
        base.update(region or {})
        return cls(chart, base, config['seed'] if seed is None else seed)

    def sample(self, n):
        r"""Draw ``n`` points.

        Returns:
            numpy.ndarray: shape ``[n, D]``
        """
        if n < 1:
            raise ValueError('`n` [{}] must be positive'.format(n))
        unit = self.generator.random((int(n), self.chart.dimension))
        return self.bounds[:, 0] + unit * (self.bounds[:, 1] - self.bounds[:, 0])

    def grid(self, points_per_axis, coords=None):
        r"""Regular grid over the region.

        Args:
            points_per_axis (int): grid points along each gridded coordinate.
            coords (list of str, optional): coordinates to grid; the others sit at the middle of their interval.

        Returns:
            numpy.ndarray: shape ``[points_per_axis ** len(coords), D]``
        """
        coords = list(self.chart.labels if coords is None else coords)
        axes = []
        for label in self.chart.labels:
            low, high = self.bounds[self.chart.index(label)]
            if label in coords:
                axes.append(np.linspace(low, high, int(points_per_axis)))
            else:
                axes.append(np.array([(low + high) / 2.0]))
        mesh = np.meshgrid(*axes, indexing='ij')
        return np.stack([axis.ravel() for axis in mesh], axis=1)

    def __repr__(self):
        return 'RegionSampler({}, seed={})'.format(self.chart, self.seed)
