# -*- coding: utf-8 -*-
# @Time   : 2026/9/16
# @Author : ccnvkit developers

"""
ccnvkit.scalarfield.jet
#######################
"""

import numpy as np


def field_jet(field, p, order=1):
    r"""Value, gradient and (for ``order=2``) Hessian of a field at a point, from exact derivatives.

    Derivatives along coordinates outside the mask are skipped and left at 0.

    Args:
        field (ScalarField): the field.
        p (numpy.ndarray): the point.
        order (int): 0, 1 or 2.

    Returns:
        tuple: ``(value, gradient[D], hessian[D, D])``; missing orders are ``None``
    """
    labels = field.chart.labels
    dimension = len(labels)
    value = field._evaluate(p)
    gradient = np.zeros(dimension) if order >= 1 else None
    hessian = np.zeros((dimension, dimension)) if order >= 2 else None
    if order >= 1:
        for a, label in enumerate(labels):
            if label not in field.mask:
                continue
            first = field.differentiate(label)
            gradient[a] = first._evaluate(p)
            if order < 2:
                continue
            for b in range(a, dimension):
                if labels[b] not in first.mask:
                    continue
                hessian[a, b] = hessian[b, a] = first.differentiate(labels[b])._evaluate(p)
    return value, gradient, hessian


def fields_jet(fields, p, order=1):
    r"""Stacked :func:`field_jet` of a list of fields.

    Returns:
        tuple: ``(values[K], gradients[D, K], hessians[D, D, K])``
    """
    dimension = len(p)
    count = len(fields)
    values = np.zeros(count)
    gradients = np.zeros((dimension, count))
    hessians = np.zeros((dimension, dimension, count))
    for k, field in enumerate(fields):
        if field.is_zero():
            continue
        value, gradient, hessian = field_jet(field, p, order)
        values[k] = value
        if order >= 1:
            gradients[:, k] = gradient
        if order >= 2:
            hessians[:, :, k] = hessian
    return values, gradients, hessians
