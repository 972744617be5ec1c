# -*- coding: utf-8 -*-
# @Time   : 2026/9/14
# @Author : ccnvkit developers

"""
ccnvkit.utils.enum_type
#######################
"""

from enum import Enum


class FieldType(Enum):
    """Variants of scalar fields.

    - ``CONSTANT``: A literal value with an empty dependency mask.
    - ``SYMBOLIC``: An expression tree over chart coordinates.
    - ``SHIFTED``: A base field evaluated at x3 - eps * u.
    - ``QUADRATURE``: A definite integral along one coordinate.
    - ``COMPOUND``: Arithmetic over fields that are not all symbolic.
    """

    CONSTANT = 1
    SYMBOLIC = 2
    SHIFTED = 3
    QUADRATURE = 4
    COMPOUND = 5


class FamilyCase(Enum):
    """Case tags of the Killing vector families.

    - ``C11i``, ``C11ii``: Case 1, F_3 = 0, with X_1 = u or X_1 = 1.
    - ``C12i``, ``C12ii``, ``C12iii``: Case 1, F_3 != 0, with X_1 = u, 1 or 0.
    - ``C21``, ``C22``: Case 2, with X_1 = 0 or B_(mn) = 0.
    - ``N0``, ``N1``: null Killing vectors with X_1 = 1, either X = n or F_3 != 0 with F_2 = -F_3^2 / 2.
    """

    C11i = 'C11i'
    C11ii = 'C11ii'
    C12i = 'C12i'
    C12ii = 'C12ii'
    C12iii = 'C12iii'
    C21 = 'C21'
    C22 = 'C22'
    N0 = 'N0'
    N1 = 'N1'


class KillingForm(Enum):
    """Canonical shapes of an additional Killing vector.

    - ``A``: X_1 constant.
    - ``B``: X_1 = u.
    - ``C``: X_1 = F_1(u, x3).
    - ``GENERAL``: Anything else.
    """

    A = 'A'
    B = 'B'
    C = 'C'
    GENERAL = 'general'


class CaseTag(Enum):
    """Outcome of the case split."""

    CASE1 = 'Case1'
    CASE2 = 'Case2'
    BOTH = 'both'
    NEITHER = 'neither'


class CausalLabel(Enum):
    """Causal character of a vector at a point."""

    TIMELIKE = 'timelike'
    NULL = 'null'
    SPACELIKE = 'spacelike'


class MetricSource(Enum):
    """Where a scene takes its metric from.

    - ``RAW``: H, W and the frame given as expressions.
    - ``FAMILY``: One of the family builders.
    - ``EXAMPLE``: One of the closed-form examples.
    """

    RAW = 'raw'
    FAMILY = 'family'
    EXAMPLE = 'example'
