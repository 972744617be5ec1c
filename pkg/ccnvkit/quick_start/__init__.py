from ccnvkit.quick_start.quick_start import run_ccnvkit, cmd_verify, cmd_classify, cmd_invariants, cmd_bracket, main
