from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.geometry.metric import CCNVMetric, assemble_metric
from ccnvkit.geometry.connection import ConnectionTable, christoffel_at, christoffel_from_jet, ccnv_residual
from ccnvkit.geometry.curvature import CurvatureSample, InvariantProbe, curvature_at, vsi_csi_probe, \
    symmetry_violations
from ccnvkit.geometry.frame_scalars import FrameScalars, frame_scalars_at
from ccnvkit.geometry.oracle import fd_derivative, fd_gradient, fd_metric_derivative, fd_christoffel, fd_riemann
