"""Verification report models."""

from .models import REPORT_VERSION, Check, ReportMetadata, VerificationReport

__all__ = ["REPORT_VERSION", "Check", "ReportMetadata", "VerificationReport"]
