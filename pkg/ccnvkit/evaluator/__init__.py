from ccnvkit.evaluator.report import ResidualRecord, ResidualReport, Report
