# -*- coding: utf-8 -*-
# @Time   : 2026/9/21
# @Author : ccnvkit developers

"""
ccnvkit.data.scene
##################

A scene is a YAML document describing a chart, a metric, optional mutations of it and a list of Killing vector
candidates. A minimal scene reads::

    format_version: 1
    chart:
      dimension: 4
    metric:
      source: raw
      H: "0"
    killing: []
"""

import hashlib
import os
import re
from logging import getLogger

import yaml

from ccnvkit.examples import ExampleISpec, ExampleIISpec, build_example_I, build_example_I_separable, \
    build_example_II, build_example_II_analytic
from ccnvkit.families import FamilySpec, build_family
from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.geometry.metric import CCNVMetric
from ccnvkit.killing.candidate import KillingCandidate
from ccnvkit.killing.causal import null_normalize
from ccnvkit.sampler import RegionSampler, default_region
from ccnvkit.scalarfield import as_field, parse_field, Chart
from ccnvkit.utils import FamilyCase, MetricSource
from ccnvkit.utils.exceptions import CCNVError, MaskError, ParseError, SceneError

supported_versions = (1, )

examples = {
    'exampleI': (ExampleISpec, build_example_I, False),
    'exampleI_separable': (ExampleISpec, build_example_I_separable, False),
    'exampleII': (ExampleIISpec, build_example_II, False),
    'exampleII_analytic': (ExampleIISpec, build_example_II_analytic, True),
}

example_params = {
    ExampleISpec: ('eps', 'profile', 'F2', 'A', 'B', 'p', 'h', 'g'),
    ExampleIISpec: ('eps', 'profile', 'H', 'F2', 'f', 'E', 'order'),
}

quadrature_examples = ('exampleI', 'exampleII')


class _SceneLoader(yaml.SafeLoader):
    """Safe loader that also reads ``1e-3`` style numbers as floats."""


_SceneLoader.add_implicit_resolver(
    u'tag:yaml.org,2002:float',
    re.compile(
        u'''^(?:
     [-+]?(?:[0-9][0-9_]*)\\.[0-9_]*(?:[eE][-+]?[0-9]+)?
    |[-+]?(?:[0-9][0-9_]*)(?:[eE][-+]?[0-9]+)
    |\\.[0-9_]+(?:[eE][-+][0-9]+)?
    |[-+]?\\.(?:inf|Inf|INF)
    |\\.(?:nan|NaN|NAN))$''', re.X
    ), list(u'-+0123456789.')
)


class Scene(object):
    r"""A loaded and fully validated scene.

    Attributes:
        path (str): the scene file.
        digest (str): sha256 of the file contents.
        format_version (int): declared format version.
        chart (Chart): the chart.
        region (dict): sample region, label (or ``'x'``) to ``(low, high)``.
        samples (int): number of random sample points.
        seed (int): seed of the sample points.
        grid_points (int): grid points per axis of ``classify``.
        source (MetricSource): where the metric came from.
        tag (str): family case or example name, ``'raw'`` for raw metrics.
        metric (CCNVMetric): the metric, with mutations applied.
        pristine (CCNVMetric): the metric before mutations.
        mutations (dict): slot name to the field added to it.
        candidates (list of KillingCandidate): the Killing vector blocks in file order.
        built (KillingCandidate): the Killing vector of a family or example, ``None`` for raw metrics.
        norm (ScalarField): closed-form norm of ``built`` for examples, else ``None``.
        family_check (tuple): ``(FamilySpec, candidate name)`` for scenes that ask for a family verifier.
    """

    def __init__(self, path, digest):
        self.path = path
        self.digest = digest
        self.format_version = None
        self.chart = None
        self.region = dict()
        self.samples = 100
        self.seed = 2026
        self.grid_points = 5
        self.source = None
        self.tag = None
        self.metric = None
        self.pristine = None
        self.mutations = dict()
        self.candidates = []
        self.built = None
        self.norm = None
        self.family_check = None

    def sampler(self, seed=None):
        return RegionSampler(self.chart, self.region, self.seed if seed is None else seed)

    def sample(self, n=None):
        r"""``n`` (default ``samples``) points drawn with the scene seed, always the same for one scene."""
        return self.sampler().sample(self.samples if n is None else n)

    def grid(self, points_per_axis=None, coords=None):
        return self.sampler().grid(self.grid_points if points_per_axis is None else points_per_axis, coords)

    def candidate(self, name):
        for candidate in self.candidates:
            if candidate.name == name:
                return candidate
        raise KeyError('scene [{}] has no Killing vector named [{}]'.format(self.path, name))

    def __repr__(self):
        return 'Scene({}, {}, {}, {} Killing vectors)'.format(self.path, self.chart, self.tag, len(self.candidates))


class _Reader(object):
    r"""Walks the composed YAML node tree next to the constructed data to report line and column of errors."""

    def __init__(self, path, root):
        self.path = path
        self.root = root

    def node(self, *keys):
        node = self.root
        for key in keys:
            if isinstance(node, yaml.MappingNode):
                match = [value for name, value in node.value if name.value == key]
                if not match:
                    return node
                node = match[0]
            elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and key < len(node.value):
                node = node.value[key]
            else:
                return node
        return node

    def error(self, message, *keys, offset=0):
        node = self.node(*keys)
        if node is None:
            return SceneError(self.path, message)
        mark = node.start_mark
        quoted = 1 if getattr(node, 'style', None) in ('"', "'") else 0
        return SceneError(self.path, message, mark.line + 1, mark.column + 1 + quoted + offset)

    def field(self, chart, value, *keys):
        if isinstance(value, str):
            try:
                return parse_field(value, chart)
            except ParseError as e:
                raise self.error('cannot parse [{}]: {}'.format('.'.join(str(k) for k in keys), e.message), *keys,
                                 offset=e.position) from e
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.error('[{}] must be an expression or a number, got {!r}'.format(
                '.'.join(str(k) for k in keys), value), *keys)
        return as_field(chart, value)

    def fields(self, chart, value, *keys):
        r"""Parse every string of a nested list or mapping, keeping its shape."""
        if isinstance(value, dict):
            return {name: self.fields(chart, item, *keys, name) for name, item in value.items()}
        if isinstance(value, list):
            return [self.fields(chart, item, *keys, i) for i, item in enumerate(value)]
        return self.field(chart, value, *keys)


def load_scene(path, seed=None, samples=None, config=None):
    r"""Read, parse and validate a scene file.

    Args:
        path (str): the YAML scene.
        seed (int, optional): overrides ``chart.seed``.
        samples (int, optional): overrides ``chart.samples``.
        config (Config, optional): quadrature settings of the examples that integrate numerically.

    Returns:
        Scene: the scene with its metric built and every Killing vector block parsed

    Raises:
        SceneError: malformed file, unsupported version, unknown tag, unparseable expression or mask violation,
            with the line and column of the offending node.
        OSError: the file cannot be read.
    """
    logger = getLogger()
    with open(path, 'rb') as f:
        raw = f.read()
    scene = Scene(str(path), hashlib.sha256(raw).hexdigest())
    text = raw.decode('utf-8')
    loader = _SceneLoader(text)
    try:
        root = loader.get_single_node()
        data = loader.construct_document(root) if root is not None else None
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        line, column = (mark.line + 1, mark.column + 1) if mark is not None else (None, None)
        raise SceneError(scene.path, 'invalid YAML: {}'.format(e.problem), line, column) from e
    finally:
        loader.dispose()
    reader = _Reader(scene.path, root)
    if not isinstance(data, dict):
        raise reader.error('a scene must be a mapping')

    version = data.get('format_version')
    if version is None:
        raise reader.error('missing `format_version`')
    if version not in supported_versions:
        raise reader.error('unsupported format_version [{}], supported: {}'.format(version, supported_versions),
                           'format_version')
    scene.format_version = version
    unknown = set(data) - {'format_version', 'chart', 'metric', 'mutations', 'killing', 'family_check'}
    if unknown:
        raise reader.error('unknown sections {}'.format(sorted(unknown)), sorted(unknown)[0])

    _read_chart(scene, reader, data.get('chart'))
    if seed is not None:
        scene.seed = int(seed)
    if samples is not None:
        if int(samples) < 1:
            raise SceneError(scene.path, '`samples` [{}] must be positive'.format(samples))
        scene.samples = int(samples)
    if 'metric' not in data:
        raise reader.error('missing section `metric`')
    _read_metric(scene, reader, data['metric'], config)
    _read_mutations(scene, reader, data.get('mutations') or {})
    _read_killing(scene, reader, data.get('killing') or [])
    if 'family_check' in data:
        _read_family_check(scene, reader, data['family_check'])
    logger.debug('loaded {!r} (sha256 {})'.format(scene, scene.digest))
    return scene


def _read_chart(scene, reader, section):
    if not isinstance(section, dict):
        raise reader.error('section `chart` must be a mapping with at least `dimension`', 'chart')
    dimension = section.get('dimension')
    if isinstance(dimension, bool) or not isinstance(dimension, int) or dimension < 4:
        raise reader.error('`dimension` [{}] must be an integer not smaller than 4'.format(dimension), 'chart',
                           'dimension')
    scene.chart = Chart(dimension)
    region = section.get('region') or {}
    if not isinstance(region, dict):
        raise reader.error('`region` must map coordinates to [low, high]', 'chart', 'region')
    allowed = set(scene.chart.labels) | set(default_region)
    for label, interval in region.items():
        if label not in allowed:
            raise reader.error('[{}] is not a coordinate of {}'.format(label, scene.chart), 'chart', 'region', label)
        if not (isinstance(interval, list) and len(interval) == 2 and all(
                isinstance(bound, (int, float)) for bound in interval) and interval[0] <= interval[1]):
            raise reader.error('region of [{}] must be [low, high], got {!r}'.format(label, interval), 'chart',
                               'region', label)
        scene.region[label] = (float(interval[0]), float(interval[1]))
    for key in ('samples', 'seed', 'grid_points'):
        if key in section:
            value = section[key]
            if isinstance(value, bool) or not isinstance(value, int) or value < (0 if key == 'seed' else 1):
                raise reader.error('`{}` must be a positive integer, got {!r}'.format(key, value), 'chart', key)
            setattr(scene, key, value)


def _read_metric(scene, reader, section, config):
    if not isinstance(section, dict):
        raise reader.error('section `metric` must be a mapping', 'metric')
    try:
        source = MetricSource(section.get('source', 'raw'))
    except ValueError:
        raise reader.error('unknown metric source [{}], expected one of {}'.format(
            section.get('source'), [s.value for s in MetricSource]), 'metric', 'source')
    scene.source = source
    try:
        if source == MetricSource.RAW:
            scene.tag = 'raw'
            scene.metric = _raw_metric(scene, reader, section)
        elif source == MetricSource.FAMILY:
            _family_metric(scene, reader, section)
        else:
            _example_metric(scene, reader, section, config)
    except MaskError as e:
        raise reader.error('mask violation: {}'.format(e), 'metric', *_slot_keys(section, e.slot)) from e
    except SceneError:
        raise
    except (CCNVError, ValueError) as e:
        raise reader.error('cannot build the {} metric: {}'.format(source.value, e), 'metric') from e
    scene.pristine = scene.metric


def _slot_keys(section, slot):
    for key in ('slots', 'params'):
        if isinstance(section.get(key), dict) and slot in section[key]:
            return key, slot
    return (slot, ) if slot in section else ()


def _raw_metric(scene, reader, section):
    chart = scene.chart
    size = chart.dimension - 2
    H = reader.field(chart, section.get('H', 0), 'metric', 'H')
    W = section.get('W', [0] * size)
    if isinstance(W, dict):
        unknown = set(W) - set(chart.transverse)
        if unknown:
            raise reader.error('W is indexed by {}, got {}'.format(list(chart.transverse), sorted(unknown)), 'metric',
                               'W')
        W = [W.get(label, 0) for label in chart.transverse]
    if not isinstance(W, list) or len(W) != size:
        raise reader.error('W needs {} components for {}'.format(size, chart), 'metric', 'W')
    W_hat = [reader.field(chart, w, 'metric', 'W', e) for e, w in enumerate(W)]
    frame = _frame(scene, reader, section.get('frame'), ('metric', 'frame'))
    gauge = section.get('gauge')
    return CCNVMetric(chart, H, W_hat, frame, gauge=gauge if gauge is None else bool(gauge), name='raw')


def _frame(scene, reader, rows, keys):
    if rows is None:
        return None
    size = scene.chart.dimension - 2
    if not isinstance(rows, list) or len(rows) != size or any(not isinstance(r, list) or len(r) != size
                                                                for r in rows):
        raise reader.error('the frame must be a {0}x{0} list of rows'.format(size), *keys)
    return TransverseFrame(scene.chart, reader.fields(scene.chart, rows, *keys))


def _family_metric(scene, reader, section):
    try:
        case = FamilyCase(section.get('case'))
    except ValueError:
        raise reader.error('unknown family tag [{}], expected one of {}'.format(
            section.get('case'), [c.value for c in FamilyCase]), 'metric', 'case')
    scene.tag = case.value
    spec = _family_spec(scene, reader, case, section, ('metric', ))
    scene.metric, built = build_family(spec)
    scene.built = built


def _family_spec(scene, reader, case, section, keys):
    slots = section.get('slots') or {}
    if not isinstance(slots, dict):
        raise reader.error('`slots` must map slot names to expressions', *keys, 'slots')
    parsed = {name: reader.field(scene.chart, value, *keys, 'slots', name) for name, value in slots.items()}
    frame = section.get('frame')
    if frame is not None:
        frame = reader.fields(scene.chart, frame, *keys, 'frame')
    return FamilySpec(case, scene.chart, parsed, frame, scene.region)


def _example_metric(scene, reader, section, config):
    name = section.get('example')
    if name not in examples:
        raise reader.error('unknown example [{}], expected one of {}'.format(name, sorted(examples)), 'metric',
                           'example')
    scene.tag = name
    spec_class, builder, analytic = examples[name]
    params = dict(section.get('params') or {})
    unknown = set(params) - set(example_params[spec_class])
    if unknown:
        raise reader.error('example [{}] has no parameters {}'.format(name, sorted(unknown)), 'metric', 'params',
                           sorted(unknown)[0])
    if 'eps' not in params:
        raise reader.error('example [{}] needs `eps`'.format(name), 'metric', 'params')
    for key, value in list(params.items()):
        if key in ('eps', 'order', 'p'):
            continue
        params[key] = reader.fields(scene.chart, value, 'metric', 'params', key)
    if analytic:
        params['analytic'] = True
    spec = spec_class(scene.chart, region=scene.region, **params)
    if name in quadrature_examples and config is not None:
        metric, built, norm = builder(spec, config['quadrature_tolerance'], config['quadrature_limit'])
    else:
        metric, built, norm = builder(spec)
    scene.metric, scene.built, scene.norm = metric, built, norm


def _read_mutations(scene, reader, section):
    if not isinstance(section, dict):
        raise reader.error('`mutations` must map metric slots to expressions', 'mutations')
    if not section:
        return
    metric = scene.metric
    slots = dict(metric.slots())
    for slot, value in section.items():
        if slot not in slots:
            raise reader.error('[{}] is not a metric slot, expected one of {}'.format(slot, sorted(slots)),
                               'mutations', slot)
        scene.mutations[slot] = reader.field(scene.chart, value, 'mutations', slot)
    H = metric.H + scene.mutations['H'] if 'H' in scene.mutations else None
    W_hat = [w + scene.mutations[name] if name in scene.mutations else w
             for name, w in list(slots.items())[1:]]
    scene.metric = metric.mutated(H=H, W_hat=W_hat, name='{}+mutation'.format(metric.name))
    getLogger().warning('scene [{}] mutates {}'.format(scene.path, ', '.join(sorted(scene.mutations))))


def _read_killing(scene, reader, blocks):
    if not isinstance(blocks, list):
        raise reader.error('`killing` must be a list of blocks', 'killing')
    names = set()
    for index, block in enumerate(blocks):
        try:
            candidate = _killing_block(scene, reader, block, index)
        except SceneError:
            raise
        except MaskError as e:
            raise reader.error('mask violation in Killing vector block {}: {}'.format(index, e), 'killing', index,
                               e.slot) from e
        except CCNVError as e:
            raise reader.error('invalid Killing vector block {}: {}'.format(index, e), 'killing', index) from e
        if candidate.name in names:
            raise reader.error('duplicate Killing vector name [{}]'.format(candidate.name), 'killing', index)
        names.add(candidate.name)
        scene.candidates.append(candidate)


def _killing_block(scene, reader, block, index):
    chart = scene.chart
    if block == 'ell':
        return KillingCandidate.ell(chart)
    if block == 'n':
        return KillingCandidate.n(chart)
    if block == 'built':
        block = {'built': True}
    if not isinstance(block, dict):
        raise reader.error('a Killing vector block is `ell`, `n`, `built` or a mapping, got {!r}'.format(block),
                           'killing', index)
    unknown = set(block) - {'built', 'name', 'F1', 'F2', 'F3', 'form', 'scale', 'null_normalize'}
    if unknown:
        raise reader.error('unknown keys {} in Killing vector block {}'.format(sorted(unknown), index), 'killing',
                           index, sorted(unknown)[0])
    if block.get('built'):
        if scene.built is None:
            raise reader.error('a raw metric has no built Killing vector', 'killing', index)
        candidate = scene.built
    else:
        components = [reader.field(chart, block.get(key, 0), 'killing', index, key) for key in ('F1', 'F2', 'F3')]
        candidate = KillingCandidate(chart, *components, form=block.get('form'),
                                     name=block.get('name') or 'X{}'.format(index))
    if 'scale' in block:
        scale = block['scale']
        if isinstance(scale, bool) or not isinstance(scale, (int, float)):
            raise reader.error('`scale` must be a number, got {!r}'.format(scale), 'killing', index, 'scale')
        candidate = candidate.scale(scale)
    if block.get('null_normalize'):
        candidate = null_normalize(candidate)
    if block.get('name') and candidate.name != block['name']:
        candidate = candidate.replace(name=block['name'])
    return candidate


def _read_family_check(scene, reader, section):
    if not isinstance(section, dict):
        raise reader.error('`family_check` must be a mapping', 'family_check')
    try:
        case = FamilyCase(section.get('case'))
    except ValueError:
        raise reader.error('unknown family tag [{}]'.format(section.get('case')), 'family_check', 'case')
    if case not in (FamilyCase.C12i, FamilyCase.C12ii, FamilyCase.C12iii, FamilyCase.C21):
        raise reader.error('family [{}] is built, not verified; use `metric.source: family`'.format(case.value),
                           'family_check', 'case')
    name = section.get('kv', 'X')
    if name not in {candidate.name for candidate in scene.candidates}:
        raise reader.error('family_check refers to the unknown Killing vector [{}]'.format(name), 'family_check',
                           'kv')
    try:
        spec = _family_spec(scene, reader, case, section, ('family_check', ))
    except MaskError as e:
        raise reader.error('mask violation: {}'.format(e), 'family_check', 'slots', e.slot) from e
    scene.family_check = (spec, name)


def scene_files(directory):
    r"""Scene files of a directory, sorted by name."""
    return sorted(os.path.join(directory, name) for name in os.listdir(directory) if name.endswith('.yaml'))
