"""Verification suite assembly."""

from .runner import CHECK_GROUPS, SuiteContext, build_context, run_suite, select_groups

__all__ = ["CHECK_GROUPS", "SuiteContext", "build_context", "run_suite", "select_groups"]
