from ccnvkit.families.spec import FamilySpec, slot_masks, frame_mask
from ccnvkit.families.builders import build_case_1_1_i, build_case_1_1_ii, build_case_2_2, build_null_n, \
    build_null_transport, build_family
from ccnvkit.families.verifiers import verify_case_1_2, verify_case_2_1
