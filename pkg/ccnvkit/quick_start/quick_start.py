# -*- coding: utf-8 -*-
# @Time   : 2026/9/21
# @Author : ccnvkit developers

"""
ccnvkit.quick_start
########################
"""

import argparse
import sys
import time
from logging import getLogger

import numpy as np
import pandas as pd
from tqdm import tqdm

import ccnvkit
from ccnvkit.config import Config
from ccnvkit.data import load_scene
from ccnvkit.evaluator import Report, ResidualReport
from ccnvkit.families import verify_case_1_2, verify_case_2_1
from ccnvkit.geometry import ccnv_residual, christoffel_at, curvature_at, fd_christoffel, symmetry_violations, \
    vsi_csi_probe
from ccnvkit.killing import KillingCandidate, bracket_with_ell, case_evidence, causal_classify, classify_case, \
    dual_path_report, frame_norms_on, killing_report, norms_on
from ccnvkit.utils import init_logger, init_seed, set_color, FamilyCase
from ccnvkit.utils.exceptions import CCNVError, FieldEvaluationError, SceneError

oracle_points = 10
symmetry_points = 10


def _config(config):
    return config if config is not None else Config()


def _killing_tolerance(config, metric):
    return config.tolerance('quadrature_killing' if metric.uses_quadrature() else 'killing')


def _with_ell(scene):
    r"""The scene's Killing vectors, with ``l`` added in front when no block names it."""
    candidates = list(scene.candidates)
    if 'ell' not in {candidate.name for candidate in candidates}:
        candidates.insert(0, KillingCandidate.ell(scene.chart))
    return candidates


def _require_candidates(scene, command):
    if not scene.candidates:
        raise SceneError(scene.path, '`{}` needs at least one Killing vector block'.format(command))


def cmd_verify(scene, config=None):
    r"""Check the CCNV conditions, every Killing vector by both paths and the exact geometry against finite
    differences.

    Checks:

    - ``ccnv.nabla_ell`` and ``ccnv.ell_norm``.
    - ``killing.<kv>.lie`` and the four frame groups ``killing.<kv>.<group>`` (``l`` is always included).
    - ``agreement.<kv>``: frame Killing matrix against the frame projection of the Lie derivative.
    - ``oracle.christoffel``: exact Christoffels against Richardson differences of the metric.
    - ``norm.<kv>``: closed-form norm of an example's Killing vector against the full contraction.
    - ``family.<case>.*``: the family verifier, when the scene asks for one.

    Args:
        scene (Scene): the scene.
        config (Config, optional): tolerances, defaults to ``overall.yaml``.

    Returns:
        Report: the report
    """
    config = _config(config)
    logger = getLogger()
    metric = scene.metric
    report = Report('verify', scene, ccnvkit.__version__)
    sample = scene.sample()

    report.add_residuals(ccnv_residual(metric, sample, config.tolerance('ccnv')), 'ccnv')

    tolerance = _killing_tolerance(config, metric)
    for candidate in _with_ell(scene):
        killing = killing_report(candidate, metric, sample, tolerance, allow_ungauged=True,
                                 show_progress=config['show_progress'])
        report.add_residuals(killing, 'killing.{}'.format(candidate.name))
        agreement = dual_path_report(candidate, metric, sample, tolerance)
        report.add_check('agreement.{}'.format(candidate.name), agreement.max(), tolerance,
                         point=agreement['agreement'].point)

    report.add_residuals(_oracle_report(metric, sample, config), 'oracle')

    if scene.norm is not None and scene.built is not None:
        for candidate in scene.candidates:
            if candidate is scene.built:
                _closed_form_norm(report, candidate, scene, sample, config.tolerance('norm'))

    if scene.family_check is not None:
        spec, name = scene.family_check
        verifier = verify_case_2_1 if spec.case == FamilyCase.C21 else verify_case_1_2
        residuals = verifier(spec, metric, scene.candidate(name), sample, tolerance)
        report.add_residuals(residuals, 'family.{}'.format(spec.case.value))

    report.add_detail('metric', {
        'source': scene.source.value,
        'tag': scene.tag,
        'w3_gauge': metric.w3_gauge,
        'uses_quadrature': metric.uses_quadrature(),
        'mutated_slots': sorted(scene.mutations),
    })
    report.add_detail('killing_vectors', {c.name: c.form.value for c in _with_ell(scene)})
    logger.debug('verify of [{}] done with {} checks'.format(scene.path, len(report.checks)))
    return report


def _oracle_report(metric, sample, config):
    tolerance = config.tolerance('fd')
    if metric.uses_quadrature():
        tolerance = max(tolerance, 10.0 * config['quadrature_tolerance'] / config['fd_step'])
    report = ResidualReport('oracle')
    for p in sample[:oracle_points]:
        exact = christoffel_at(metric, p).gamma
        approximate = fd_christoffel(metric, p, config['fd_step'])
        report.collect('christoffel', exact - approximate, p, tolerance, group='oracle')
    return report


def _closed_form_norm(report, candidate, scene, sample, tolerance):
    residual = np.abs(norms_on(candidate, scene.metric, sample) - scene.norm.evaluate_many(sample))
    worst = int(np.argmax(residual))
    report.add_check('norm.{}'.format(candidate.name), residual[worst], tolerance, point=sample[worst])


def cmd_classify(scene, config=None, grid_out=None):
    r"""Case split and causal character of every Killing vector.

    Each vector gets its case tag and the evidence behind it, the share of timelike, null and spacelike grid
    nodes and both non-spacelike flags. The checks compare the frame norm ``2 X_1 X_2 + X_3^2`` with the full
    contraction over the grid (``frame_norm.<kv>``).

    Args:
        scene (Scene): the scene, with at least one Killing vector block.
        config (Config, optional): tolerances, defaults to ``overall.yaml``.
        grid_out (str, optional): CSV file receiving the grid with columns ``kv, u, v, x3, ..., norm, label``.

    Returns:
        Report: the report
    """
    _require_candidates(scene, 'classify')
    config = _config(config)
    metric = scene.metric
    report = Report('classify', scene, ccnvkit.__version__)
    sample = scene.sample()
    grid = scene.grid()
    frames = []
    candidates = scene.candidates
    if config['show_progress']:
        candidates = tqdm(candidates, desc=set_color('classify', 'pink'), ncols=100)
    for candidate in candidates:
        tag = classify_case(candidate, metric, sample, config.tolerance('case'))
        causal = causal_classify(candidate, metric, grid, config.tolerance('null'))
        total = float(len(causal.labels))
        summary = {
            'form': candidate.form.value,
            'case': tag.value,
            'evidence': case_evidence(candidate, metric, sample),
            'percent': {label: 100.0 * count / total for label, count in causal.counts().items()},
        }
        summary.update(causal.to_dict())
        report.add_detail(candidate.name, summary)

        residual = np.abs(frame_norms_on(candidate, metric, causal.points) - causal.norms)
        worst = int(np.argmax(residual))
        report.add_check('frame_norm.{}'.format(candidate.name), residual[worst],
                         config.tolerance('identity') * (1.0 + float(np.max(np.abs(causal.norms)))),
                         point=causal.points[worst])
        frames.append(causal.to_frame())

    if grid_out:
        pd.concat(frames, ignore_index=True).to_csv(grid_out, index=False, float_format='%.17g')
        getLogger().info(set_color('grid written to', 'blue') + ' [{}]'.format(grid_out))
    return report


def cmd_invariants(scene, config=None):
    r"""Probe the curvature invariants ``R``, ``R_ab R^ab`` and ``R_abcd R^abcd`` over the sample.

    The CSI and VSI verdicts are reported as details; they are answers, not failures. The checks are the
    algebraic symmetries of the Riemann tensor (``curvature.*``), relative to its size.

    Args:
        scene (Scene): the scene.
        config (Config, optional): tolerances, defaults to ``overall.yaml``.

    Returns:
        Report: the report
    """
    config = _config(config)
    metric = scene.metric
    report = Report('invariants', scene, ccnvkit.__version__)
    sample = scene.sample(max(scene.samples, 10))
    probe = vsi_csi_probe(metric, sample, config.tolerance('invariant'))

    worst = dict()
    for p in sample[:symmetry_points]:
        curvature = curvature_at(metric, p)
        g = metric.jet(p, order=0)[0]
        scale = 1.0 + float(np.max(np.abs(curvature.riemann)))
        for name, value in symmetry_violations(curvature, g).items():
            if name not in worst or value / scale > worst[name][0]:
                worst[name] = (value / scale, p)
    for name, (value, point) in worst.items():
        report.add_check('curvature.{}'.format(name), value, config.tolerance('identity'), point=point)

    verdicts = probe.to_dict()
    verdicts['csi'] = verdicts.pop('constant')
    verdicts['vsi'] = verdicts.pop('vanishing')
    verdicts['values'] = probe.values
    report.add_detail('invariants', verdicts)
    return report


def cmd_bracket(scene, config=None):
    r"""Bracket of every Killing vector (and ``l``) with ``l``.

    Forms A and B must give ``sigma l`` with constant ``sigma`` (0 and ``|sigma| = 1``). Other forms are
    decomposed as ``Y_C = a l + b e_3`` and compared with ``(D_2 F_1, D_3 F_1)``; the norm of ``Y_C`` must be
    ``(D_3 F_1)^2``.

    Args:
        scene (Scene): the scene, with at least one Killing vector block.
        config (Config, optional): tolerances, defaults to ``overall.yaml``.

    Returns:
        Report: the report
    """
    _require_candidates(scene, 'bracket')
    config = _config(config)
    metric = scene.metric
    report = Report('bracket', scene, ccnvkit.__version__)
    sample = scene.sample()
    for candidate in _with_ell(scene):
        summary = bracket_with_ell(candidate, metric, sample, config.tolerance('bracket'),
                                   _killing_tolerance(config, metric))
        report.add_residuals(summary.residuals, 'bracket.{}'.format(candidate.name))
        detail = summary.to_dict()
        if summary.coefficients:
            a, b = np.array(summary.coefficients).T
            detail['ell_coefficient'] = [float(np.min(a)), float(np.max(a))]
            detail['e3_coefficient'] = [float(np.min(b)), float(np.max(b))]
        report.add_detail(candidate.name, detail)
    return report


commands = {
    'verify': cmd_verify,
    'classify': cmd_classify,
    'invariants': cmd_invariants,
    'bracket': cmd_bracket,
}


def run_ccnvkit(command, scene, seed=None, samples=None, report_path=None, grid_out=None, config_file_list=None,
                config_dict=None):
    r"""Run one command on one scene: configuration, logging, loading, the command and the report.

    Args:
        command (str): ``verify``, ``classify``, ``invariants`` or ``bracket``.
        scene (str): path of the scene file.
        seed (int, optional): overrides the scene seed.
        samples (int, optional): overrides the scene sample count.
        report_path (str, optional): where the YAML report goes.
        grid_out (str, optional): CSV grid export of ``classify``.
        config_file_list (list): config files used to modify the tolerances.
        config_dict (dict): parameters dictionary used to modify the tolerances.

    Returns:
        Report: the report
    """
    if command not in commands:
        raise ValueError('`command` [{}] is not one of {}'.format(command, sorted(commands)))
    config = Config(config_file_list=config_file_list, config_dict=config_dict)
    init_seed(config['seed'], config['reproducibility'])
    init_logger(config, command)
    logger = getLogger()
    logger.info(config)

    start = time.time()
    scene = load_scene(scene, seed=seed, samples=samples, config=config)
    logger.info(set_color('scene', 'pink') + ': {!r}'.format(scene))
    if command == 'classify':
        report = cmd_classify(scene, config, grid_out=grid_out)
    else:
        if grid_out:
            logger.warning('`--grid-out` is only used by classify')
        report = commands[command](scene, config)
    report.wall_time = time.time() - start

    logger.info(report.render())
    if report_path:
        report.dump(report_path)
        logger.info(set_color('report written to', 'blue') + ' [{}]'.format(report_path))
    for failure in report.failures():
        logger.error('check [{}] failed: residual {!r} > {!r} at {}'.format(
            failure['name'], failure['residual'], failure['tolerance'], failure['worst_point']))
    return report


def main(argv=None):
    r"""Command line entry point; returns the exit status.

    0 when every check passes. 1 when a check fails or a field cannot be evaluated on the sample while a
    command runs. 2 when the scene cannot be read or built.
    """
    parser = argparse.ArgumentParser(prog='ccnvkit')
    parser.add_argument('command', choices=sorted(commands), help='what to run on the scene')
    parser.add_argument('scene', type=str, help='scene file')
    parser.add_argument('--seed', type=int, default=None, help='overrides the scene seed')
    parser.add_argument('--samples', type=int, default=None, help='overrides the scene sample count')
    parser.add_argument('--report', type=str, default=None, help='YAML report file')
    parser.add_argument('--grid-out', dest='grid_out', type=str, default=None, help='CSV grid export of classify')
    parser.add_argument('--config_files', type=str, default=None, help='config files')
    parser.add_argument('--state', type=str, default=None, help='logging level')

    args, _ = parser.parse_known_args(argv)

    config_file_list = args.config_files.strip().split(' ') if args.config_files else None
    config_dict = {'state': args.state} if args.state else None
    try:
        report = run_ccnvkit(args.command, args.scene, args.seed, args.samples, args.report, args.grid_out,
                             config_file_list, config_dict)
    except FieldEvaluationError as e:
        getLogger().error('check aborted, {}: {}'.format(type(e).__name__, e))
        sys.stderr.write('ccnvkit: {}\n'.format(e))
        return 1
    except (CCNVError, OSError) as e:
        getLogger().error('{}: {}'.format(type(e).__name__, e))
        sys.stderr.write('ccnvkit: {}\n'.format(e))
        return 2
    return 0 if report.passed else 1
