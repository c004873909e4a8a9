"""Verification suites."""

from .suites import SUITES, SuiteFailure, SuiteResult, VerifyContext, format_suite_result, run_suites

__all__ = ["SUITES", "SuiteFailure", "SuiteResult", "VerifyContext", "format_suite_result", "run_suites"]
