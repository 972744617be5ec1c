# @Time   : 2026/9/14
# @Author : ccnvkit developers

# yapf: disable

general_arguments = [
    'seed',
    'reproducibility',
    'state',
    'log_root', 'save_log',
    'show_progress',
]

sampling_arguments = [
    'samples',
    'region_u', 'region_v', 'region_x',
    'grid_points',
]

tolerance_arguments = [
    'ccnv_tolerance',
    'killing_tolerance', 'quadrature_killing_tolerance',
    'norm_tolerance', 'null_tolerance',
    'invariant_tolerance', 'identity_tolerance',
    'case_tolerance', 'bracket_tolerance',
    'fd_tolerance',
]

quadrature_arguments = [
    'quadrature_tolerance', 'quadrature_limit',
    'fd_step',
]
