from ccnvkit.scalarfield.chart import Chart
from ccnvkit.scalarfield.field import ScalarField, SymbolicTree, Constant, Compound, ShiftedComposite, \
    QuadratureField, symbolic, as_field, combine, apply, exp, log, sin, cos, sqrt, shift, antiderivative, integral, \
    require_mask, exact_number
from ccnvkit.scalarfield.parser import parse_field, parse_expr, print_field
from ccnvkit.scalarfield.jet import field_jet, fields_jet


def eval_field(field, point):
    r"""Value of ``field`` at ``point``."""
    return field.evaluate(point)


def differentiate(field, coord):
    r"""Exact partial derivative of ``field`` along ``coord``."""
    return field.differentiate(coord)
