# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import pandas as pd
import pytest
import yaml

from ccnvkit.config import Config
from ccnvkit.data import load_scene
from ccnvkit.quick_start import cmd_bracket, cmd_classify, cmd_invariants, cmd_verify, main, run_ccnvkit
from ccnvkit.utils.exceptions import SceneError


@pytest.fixture
def config(quiet):
    return Config(config_dict=quiet)


def _checks(report):
    return {check['name']: check for check in report.checks}


class TestVerify:

    @pytest.mark.parametrize('name', ['flat.yaml', 'pp_wave.yaml', 'case_1_1_i.yaml', 'case_2_2.yaml',
                                      'case_2_1.yaml', 'example_two_analytic.yaml', 'case_1_1_i_5d.yaml',
                                      'null_transport_5d.yaml'])
    def test_passes(self, scenes, config, name):
        report = cmd_verify(load_scene(scenes(name)), config)
        assert report.passed, report.render()

    def test_checks(self, scenes, config):
        checks = _checks(cmd_verify(load_scene(scenes('pp_wave.yaml')), config))
        for name in ('ccnv.nabla_ell', 'ccnv.ell_norm', 'killing.ell.lie', 'killing.X.lie', 'agreement.X',
                     'oracle.christoffel'):
            assert name in checks

    def test_ell_is_always_checked(self, scenes, config):
        report = cmd_verify(load_scene(scenes('flat.yaml')), config)
        assert 'killing.ell.lie' in _checks(report)
        assert report.details['killing_vectors'] == {'ell': 'A'}

    def test_family_and_norm_checks(self, scenes, config):
        checks = _checks(cmd_verify(load_scene(scenes('case_2_1.yaml')), config))
        assert checks['family.C21.m3r']['passed']
        checks = _checks(cmd_verify(load_scene(scenes('example_two_analytic.yaml')), config))
        assert checks['norm.X']['passed']

    def test_mutation_is_caught(self, scenes, config):
        """``H + 0.1 v`` gives ``nabla l = 0.1 du du``."""
        report = cmd_verify(load_scene(scenes('example_two_mutated.yaml')), config)
        assert not report.passed
        check = _checks(report)['ccnv.nabla_ell']
        assert not check['passed']
        assert check['residual'] == pytest.approx(0.1)
        assert report.details['metric']['mutated_slots'] == ['H']

    def test_deterministic(self, scenes, config):
        first = cmd_verify(load_scene(scenes('case_2_2.yaml')), config)
        second = cmd_verify(load_scene(scenes('case_2_2.yaml')), config)
        assert first.dumps(include_wall_time=False) == second.dumps(include_wall_time=False)
        assert 'wall_time' not in yaml.safe_load(first.dumps(include_wall_time=False))


class TestClassify:

    def test_null_vector(self, scenes, config):
        report = cmd_classify(load_scene(scenes('example_two_null.yaml')), config)
        assert report.passed, report.render()
        detail = report.details['Xnull']
        assert detail['percent']['null'] == pytest.approx(100.0)
        assert detail['form'] == 'A'

    def test_timelike_patch(self, scenes, config):
        report = cmd_classify(load_scene(scenes('example_one_separable.yaml')), config)
        assert report.passed
        assert report.details['X']['percent']['timelike'] == pytest.approx(100.0)

    def test_grid_export(self, scenes, config, tmp_path):
        path = tmp_path / 'grid.csv'
        scene = load_scene(scenes('pp_wave.yaml'))
        cmd_classify(scene, config, grid_out=str(path))
        frame = pd.read_csv(path)
        assert list(frame.columns) == ['kv', 'u', 'v', 'x3', 'x4', 'norm', 'label']
        assert len(frame) == 2 * scene.grid_points**4
        assert set(frame['kv']) == {'ell', 'X'}

    def test_needs_candidates(self, scenes, config):
        with pytest.raises(SceneError):
            cmd_classify(load_scene(scenes('flat.yaml')), config)


class TestInvariants:

    def test_pp_wave_is_vsi(self, scenes, config):
        report = cmd_invariants(load_scene(scenes('pp_wave.yaml')), config)
        assert report.passed
        assert report.details['invariants']['vsi']
        assert report.details['invariants']['csi']

    def test_inhomogeneous_is_not_csi(self, scenes, config):
        report = cmd_invariants(load_scene(scenes('inhomogeneous.yaml')), config)
        assert report.passed, report.render()
        assert not report.details['invariants']['csi']
        assert not report.details['invariants']['vsi']


class TestBracket:

    def test_forms(self, scenes, config):
        report = cmd_bracket(load_scene(scenes('case_2_2.yaml')), config)
        assert report.passed, report.render()
        assert set(report.details) == {'ell', 'X'}
        assert 'e3_coefficient' in report.details['X']

    def test_needs_candidates(self, scenes, config):
        with pytest.raises(SceneError):
            cmd_bracket(load_scene(scenes('flat.yaml')), config)


class TestEntryPoints:

    def test_run_writes_a_report(self, scenes, quiet, tmp_path):
        path = tmp_path / 'report.yaml'
        report = run_ccnvkit('verify', scenes('pp_wave.yaml'), seed=3, samples=10, report_path=str(path),
                             config_dict=quiet)
        assert report.passed
        written = yaml.safe_load(path.read_text(encoding='utf-8'))
        assert written['passed']
        assert (written['seed'], written['samples']) == (3, 10)
        assert written['command'] == 'verify'
        assert 'wall_time' in written

    def test_unknown_command(self, scenes, quiet):
        with pytest.raises(ValueError):
            run_ccnvkit('plot', scenes('flat.yaml'), config_dict=quiet)

    def test_exit_codes(self, scenes, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(['verify', scenes('flat.yaml')]) == 0
        assert main(['verify', scenes('example_two_mutated.yaml'), '--samples', '10']) == 1
        assert main(['verify', str(tmp_path / 'missing.yaml')]) == 2
        (tmp_path / 'broken.yaml').write_text('format_version: 9\n', encoding='utf-8')
        assert main(['classify', str(tmp_path / 'broken.yaml')]) == 2

    def test_evaluation_error_is_a_failed_check(self, tmp_path, monkeypatch):
        """``log(x4)`` loads fine but cannot be evaluated on the negative half of the region."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / 'singular.yaml').write_text(
            'format_version: 1\n'
            'chart: {dimension: 4, region: {x4: [-1.0, 1.0]}, samples: 20}\n'
            'metric: {source: raw, H: "log(x4)"}\n',
            encoding='utf-8')
        assert main(['verify', str(tmp_path / 'singular.yaml')]) == 1
