# -*- coding: utf-8 -*-
# @Time   : 2026/9/14
# @Author : ccnvkit developers

"""
ccnvkit.utils.exceptions
########################
"""


class CCNVError(Exception):
    """Base class of every error raised by ccnvkit."""


class ParseError(CCNVError, ValueError):
    r"""An expression could not be parsed.

    Args:
        message (str): what went wrong.
        position (int): zero-based offset in ``text`` where it went wrong.
        text (str): the expression being parsed.
    """

    def __init__(self, message, position, text):
        self.message = message
        self.position = position
        self.text = text
        super(ParseError, self).__init__('{} at column {} in [{}]'.format(message, position + 1, text))


class FieldEvaluationError(CCNVError, ArithmeticError):
    """A field could not be evaluated at a point (division by zero, log of a non-positive number, ...)."""


class QuadratureError(FieldEvaluationError):
    """Adaptive quadrature did not converge within the subdivision limit."""


class MaskError(CCNVError, ValueError):
    r"""A field depends on a coordinate it is not allowed to depend on.

    Args:
        slot (str): name of the offending function.
        coordinate (str): the forbidden coordinate.
        allowed (iterable of str): the coordinates the slot may depend on.
    """

    def __init__(self, slot, coordinate, allowed):
        self.slot = slot
        self.coordinate = coordinate
        self.allowed = tuple(allowed)
        super(MaskError, self).__init__(
            '`{}` depends on [{}] but may only depend on [{}]'.format(slot, coordinate, ', '.join(self.allowed))
        )


class SingularFrameError(CCNVError, ArithmeticError):
    """The transverse frame or the metric is not invertible at a point."""


class GaugeError(CCNVError, ValueError):
    """An operation needs the W_3 = 0 gauge but the metric does not record it."""


class CandidateError(CCNVError, ValueError):
    """A Killing vector candidate does not have the shape an operation requires."""


class FamilyError(CCNVError, ValueError):
    """A family builder or verifier was given inputs outside its domain."""


class SceneError(CCNVError, ValueError):
    r"""A scene file is malformed.

    Args:
        path (str): the scene file.
        message (str): what went wrong.
        line (int, optional): one-based line of the offending node.
        column (int, optional): one-based column of the offending node.
    """

    def __init__(self, path, message, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = '{}:{}:{}'.format(path, line, column) if line is not None else str(path)
        super(SceneError, self).__init__('{}: {}'.format(where, message))
