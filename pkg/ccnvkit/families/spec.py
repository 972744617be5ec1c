# -*- coding: utf-8 -*-
# @Time   : 2026/9/19
# @Author : ccnvkit developers

"""
ccnvkit.families.spec
#####################
"""

from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.scalarfield import as_field, parse_field, require_mask, Constant
from ccnvkit.utils import FamilyCase
from ccnvkit.utils.exceptions import FamilyError

# families that fix m_33 and m_3r and only take the block m_nr, n, r >= 4
block_cases = (FamilyCase.C22, FamilyCase.N1)


def slot_masks(case, chart):
    r"""Free-function slots of a family and the coordinates each may depend on.

    ``x^e`` runs over all transverse coordinates and ``x^r`` over those after ``x3``. Indexed slots
    (``B3``, ``C4``, ``E5``, ...) exist for every transverse index the family uses.
    """
    transverse = list(chart.transverse)
    rest = transverse[1:]
    u_transverse = ['u'] + transverse
    u_rest = ['u'] + rest
    case = FamilyCase(case)
    if case == FamilyCase.C11i:
        masks = {'f2': transverse, 'g2': ['u']}
        masks.update({'B{}'.format(e[1:]): transverse for e in transverse})
    elif case == FamilyCase.C11ii:
        masks = {'F2': transverse, 'A0': u_rest}
        masks.update({'C{}'.format(e[1:]): transverse for e in transverse})
    elif case == FamilyCase.C22:
        masks = {'F1': ['u', 'x3'], 'F2': u_transverse, 'A6': u_rest}
    elif case == FamilyCase.N0:
        masks = {'A0': u_rest}
        masks.update({'C{}'.format(e[1:]): transverse for e in transverse})
    elif case == FamilyCase.N1:
        masks = {'eps': [], 'P': transverse, 'A2': u_rest}
        masks.update({'E{}'.format(e[1:]): transverse for e in rest})
    else:
        masks = {'A2': u_rest, 'A3': u_rest}
        masks.update({'E{}'.format(e[1:]): u_rest for e in rest})
    return masks


def frame_mask(case, chart):
    r"""Coordinates the transverse frame entries given to a family may depend on."""
    case = FamilyCase(case)
    if case in block_cases:
        return list(chart.transverse[1:])
    if case in (FamilyCase.C11i, FamilyCase.C11ii, FamilyCase.N0):
        return list(chart.transverse)
    return ['u'] + list(chart.transverse)


class FamilySpec(object):
    r"""Free functions of one Killing vector family.

    Slots left out default to 0; every given slot is checked against :func:`slot_masks` before anything is
    built.

    Args:
        case (FamilyCase or str): the family.
        chart (Chart): the chart.
        slots (dict, optional): slot name to field, number or DSL string.
        frame (list of list, optional): transverse frame entries. For ``C22`` and ``N1`` only the block
            ``m_nr`` with ``n, r >= 4`` is given; ``m_33`` and ``m_3r`` are fixed by the family.
        region (dict, optional): sample region as for :class:`RegionSampler`, used by regularity checks.
    """

    def __init__(self, case, chart, slots=None, frame=None, region=None):
        self.case = FamilyCase(case)
        self.chart = chart
        self.region = dict(region or {})
        self.masks = slot_masks(self.case, chart)
        self.slots = dict()
        for name, value in (slots or {}).items():
            if name not in self.masks:
                raise FamilyError('family {} has no slot [{}]; known slots are {}'.format(
                    self.case.value, name, sorted(self.masks)))
            field = parse_field(value, chart) if isinstance(value, str) else as_field(chart, value)
            self.slots[name] = require_mask(field, name, self.masks[name])
        self.frame_entries = None if frame is None else self._frame_entries(frame)

    def _frame_entries(self, frame):
        allowed = frame_mask(self.case, self.chart)
        entries = []
        for i, row in enumerate(frame):
            values = []
            for e, value in enumerate(row):
                field = parse_field(value, self.chart) if isinstance(value, str) else as_field(self.chart, value)
                offset = 4 if self.case in block_cases else 3
                values.append(require_mask(field, 'm{}{}'.format(i + offset, e + offset), allowed))
            entries.append(values)
        return entries

    def __getitem__(self, name):
        if name not in self.masks:
            raise FamilyError('family {} has no slot [{}]'.format(self.case.value, name))
        return self.slots.get(name, Constant(self.chart, 0))

    def indexed(self, prefix, labels):
        return [self['{}{}'.format(prefix, label[1:])] for label in labels]

    def transverse_frame(self):
        r"""The full transverse frame for families that take it as given (identity when omitted)."""
        if self.frame_entries is None:
            return TransverseFrame.identity(self.chart)
        return TransverseFrame(self.chart, self.frame_entries)

    def __repr__(self):
        return 'FamilySpec({}, {})'.format(self.case.value, ', '.join(
            '{}={}'.format(name, field) for name, field in self.slots.items()))
