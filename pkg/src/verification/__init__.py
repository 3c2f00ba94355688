from src.verification.suites import SUITES, SuiteReport, run_suite

__all__ = ["SUITES", "SuiteReport", "run_suite"]
