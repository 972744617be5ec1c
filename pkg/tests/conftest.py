# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import os

import numpy as np
import pytest

from ccnvkit.geometry import CCNVMetric
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import Chart

scene_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'scenes')


@pytest.fixture
def chart():
    """The four dimensional chart (u, v, x3, x4)."""
    return Chart(4)


@pytest.fixture
def chart5():
    """The five dimensional chart (u, v, x3, x4, x5)."""
    return Chart(5)


@pytest.fixture
def sample(chart):
    """Twenty points of the default region, u in [0.5, 2]."""
    return RegionSampler(chart, seed=7).sample(20)


@pytest.fixture
def sample5(chart5):
    return RegionSampler(chart5, seed=7).sample(20)


@pytest.fixture
def flat(chart):
    """Minkowski space, H = 0 and W = 0 with the identity frame."""
    return CCNVMetric(chart, 0, name='flat')


@pytest.fixture
def scenes():
    """Absolute path of a file in the shipped ``scenes`` directory."""
    return lambda name: os.path.join(scene_dir, name)


@pytest.fixture
def quiet(tmp_path):
    """Config overrides that keep logs out of the working tree."""
    return {'log_root': str(tmp_path / 'log'), 'save_log': False}


def _random_term(coords, kind):
    c = np.random.randint(1, 4)
    a, b = (coords[i] for i in np.random.randint(len(coords), size=2))
    if kind == 'poly':
        return '{}*{}^{}*{}'.format(c, a, np.random.randint(1, 4), b)
    if kind == 'trig':
        return '{}*{}({}*{} + {})'.format(c, np.random.choice(['sin', 'cos']), np.random.randint(1, 3), a, b)
    if kind == 'exp':
        return '{}*exp({}/2)*{}'.format(c, a, b)
    # nested tree
    return '{}({}*exp({}/{}))'.format(np.random.choice(['sin', 'cos']), a, b, np.random.randint(2, 4))


@pytest.fixture
def random_expression():
    """Draw the DSL text of a random sum of monomials, sines, cosines, exponentials and nested trees from
    ``np.random``; seed it with :func:`ccnvkit.utils.init_seed`."""

    def draw(coords, terms=3, kinds=('poly', 'trig', 'exp', 'tree')):
        if not coords:
            return str(np.random.randint(1, 4))
        text = _random_term(coords, kinds[np.random.randint(len(kinds))])
        for _ in range(terms - 1):
            kind = kinds[np.random.randint(len(kinds))]
            text += (' - ' if np.random.randint(2) else ' + ') + _random_term(coords, kind)
        return text

    return draw
