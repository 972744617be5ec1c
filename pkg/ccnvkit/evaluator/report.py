# -*- coding: utf-8 -*-
# @Time   : 2026/9/16
# @Author : ccnvkit developers

"""
ccnvkit.evaluator.report
########################
"""

import numpy as np
import yaml

from ccnvkit.utils.exceptions import FieldEvaluationError
from ccnvkit.utils.utils import set_color, to_float_list


class ResidualRecord(object):
    r"""Largest residual of one check over a sample and the point where it occurred.

    Args:
        name (str): check name.
        tolerance (float): pass threshold.
        group (str, optional): group the check belongs to.
    """

    def __init__(self, name, tolerance, group=None):
        self.name = name
        self.tolerance = float(tolerance)
        self.group = group
        self.residual = 0.0
        self.point = None
        self.count = 0

    def update(self, value, point):
        value = abs(float(value))
        if not np.isfinite(value):
            raise FieldEvaluationError('residual `{}` is not finite at {}'.format(self.name, point))
        if self.point is None or value > self.residual:
            self.residual = value
            self.point = None if point is None else to_float_list(point)
        self.count += 1

    @property
    def passed(self):
        return self.residual < self.tolerance

    def to_dict(self):
        return {
            'name': self.name,
            'group': self.group,
            'residual': self.residual,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'worst_point': self.point,
        }


class ResidualReport(object):
    r"""Per-check maximum absolute residuals over a sample.

    Points are visited in sample order and the first point reaching the maximum is kept, so the report does
    not depend on how the sample was evaluated.

    Args:
        name (str, optional): what is being checked.
    """

    def __init__(self, name=None):
        self.name = name
        self.records = dict()

    def collect(self, name, value, point, tolerance, group=None):
        r"""Fold one residual value into the record ``name``.

        Args:
            name (str): check name.
            value (float or numpy.ndarray): residual(s) at ``point``; arrays are reduced by max-abs.
            point (array-like): where the residual was measured.
            tolerance (float): pass threshold.
            group (str, optional): group of the check.
        """
        if name not in self.records:
            self.records[name] = ResidualRecord(name, tolerance, group)
        # np.max propagates nan, so update sees any non-finite entry
        self.records[name].update(np.max(np.abs(to_float_list(value)), initial=0.0), point)
        return self

    def merge(self, other, prefix=None):
        for name, record in other.records.items():
            key = '{}.{}'.format(prefix, name) if prefix else name
            if key not in self.records:
                self.records[key] = ResidualRecord(key, record.tolerance, record.group)
            self.records[key].update(record.residual, record.point)
        return self

    def __getitem__(self, name):
        return self.records[name]

    def __contains__(self, name):
        return name in self.records

    def groups(self):
        return list(dict.fromkeys(record.group for record in self.records.values()))

    def max(self, group=None):
        values = [record.residual for record in self.records.values() if group is None or record.group == group]
        return max(values, default=0.0)

    def worst(self, group=None):
        records = [record for record in self.records.values() if group is None or record.group == group]
        return max(records, key=lambda record: record.residual, default=None)

    def group_passed(self, group):
        return all(record.passed for record in self.records.values() if record.group == group)

    @property
    def passed(self):
        return all(record.passed for record in self.records.values())

    def to_dict(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'records': [record.to_dict() for record in self.records.values()],
        }

    def __str__(self):
        lines = [set_color('{} residuals'.format(self.name or 'check'), 'pink')]
        for record in self.records.values():
            verdict = set_color('pass', 'green') if record.passed else set_color('FAIL', 'red')
            lines.append('  {} {} = {!r} (tol {!r}) at {}'.format(
                verdict, set_color(record.name, 'cyan'), record.residual, record.tolerance, record.point))
        return '\n'.join(lines)


class Report(object):
    r"""Outcome of one CLI command on one scene.

    Args:
        command (str): ``verify``, ``classify``, ``invariants`` or ``bracket``.
        scene (Scene): the scene the command ran on.
        tool_version (str): ccnvkit version.
    """

    def __init__(self, command, scene, tool_version):
        self.command = command
        self.scene_path = str(scene.path)
        self.scene_digest = scene.digest
        self.seed = int(scene.seed)
        self.samples = int(scene.samples)
        self.tool_version = tool_version
        self.checks = []
        self.details = dict()
        self.wall_time = 0.0

    def add_check(self, name, residual, tolerance, passed=None, point=None, kind='residual'):
        r"""Record a check; by default it passes when ``residual < tolerance``."""
        residual = float(residual)
        self.checks.append({
            'name': name,
            'kind': kind,
            'residual': residual,
            'tolerance': float(tolerance),
            'passed': bool(residual < tolerance) if passed is None else bool(passed),
            'worst_point': None if point is None else to_float_list(point),
        })

    def add_residuals(self, report, prefix):
        for record in report.records.values():
            self.add_check('{}.{}'.format(prefix, record.name), record.residual, record.tolerance, record.passed,
                           record.point)

    def add_detail(self, key, value):
        self.details[key] = value

    @property
    def passed(self):
        return all(check['passed'] for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check['passed']]

    def to_dict(self, include_wall_time=True):
        result = {
            'command': self.command,
            'tool_version': self.tool_version,
            'scene': self.scene_path,
            'scene_digest': self.scene_digest,
            'seed': self.seed,
            'samples': self.samples,
            'checks': self.checks,
            'records': self.details,
            'passed': self.passed,
        }
        if include_wall_time:
            result['wall_time'] = float(self.wall_time)
        return result

    def dumps(self, include_wall_time=True):
        return yaml.safe_dump(self.to_dict(include_wall_time), sort_keys=False, default_flow_style=None)

    def dump(self, path):
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.dumps())

    def render(self):
        lines = [set_color('{} [{}]'.format(self.command, self.scene_path), 'pink')]
        for check in self.checks:
            verdict = set_color('pass', 'green') if check['passed'] else set_color('FAIL', 'red')
            lines.append('  {} {}: {!r} (tol {!r}) worst point {}'.format(
                verdict, set_color(check['name'], 'cyan'), check['residual'], check['tolerance'],
                check['worst_point']))
        for key, value in self.details.items():
            lines.append('  {} = {}'.format(set_color(key, 'yellow'), value))
        lines.append('  passed = {}  wall time = {!r}s'.format(self.passed, self.wall_time))
        return '\n'.join(lines)
