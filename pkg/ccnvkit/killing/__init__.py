from ccnvkit.killing.candidate import KillingCandidate, CoordinateVector, to_coordinate_vector, coordinate_vector
from ccnvkit.killing.equations import lie_residual_at, frame_killing_residuals_at, frame_killing_matrix, \
    frame_projection, frame_components_jet, killing_report, dual_path_report
from ccnvkit.killing.classify import classify_case, case_evidence
from ccnvkit.killing.algebra import commutator_at, bracket_with_ell, bracket_vector, BracketSummary, ell_vector
from ccnvkit.killing.causal import norm_at, frame_norm_at, norms_on, frame_norms_on, causal_classify, null_normalize, \
    CausalReport
