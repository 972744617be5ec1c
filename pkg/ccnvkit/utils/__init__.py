from ccnvkit.utils.logger import init_logger
from ccnvkit.utils.utils import get_local_time, ensure_dir, dict2str, init_seed, set_color, to_float_list
from ccnvkit.utils.enum_type import *
from ccnvkit.utils.argument_list import *
from ccnvkit.utils.exceptions import *

__all__ = [
    'init_logger', 'get_local_time', 'ensure_dir', 'dict2str', 'init_seed', 'set_color', 'to_float_list', 'Enum',
    'FieldType', 'FamilyCase', 'KillingForm', 'CaseTag', 'CausalLabel', 'MetricSource', 'general_arguments',
    'sampling_arguments', 'tolerance_arguments', 'quadrature_arguments', 'CCNVError', 'ParseError',
    'FieldEvaluationError', 'QuadratureError', 'MaskError', 'SingularFrameError', 'GaugeError', 'CandidateError',
    'FamilyError', 'SceneError'
]
