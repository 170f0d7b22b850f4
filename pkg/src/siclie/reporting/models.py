"""Pydantic models for verification reports."""

import json
import math
from typing import Iterable, List, Optional

from pydantic import BaseModel, Field, model_validator

REPORT_VERSION = "1.0"


class Check(BaseModel):
    """Outcome of one named numerical check."""

    name: str = Field(description="Unique dotted check name, e.g. adjoint.hs.jj")
    max_error: Optional[float] = Field(
        default=None, description="Largest absolute deviation found; None if skipped"
    )
    tolerance: float = Field(description="Pass threshold for max_error")
    passed: Optional[bool] = Field(
        default=None, description="True/False for run checks, None for skipped"
    )
    skipped_reason: Optional[str] = Field(default=None)
    detail: Optional[str] = Field(default=None, description="Free-form context")

    @model_validator(mode="after")
    def _consistent(self) -> "Check":
        if self.skipped_reason is not None:
            if self.passed is not None or self.max_error is not None:
                raise ValueError(f"Skipped check {self.name} carries a result")
            return self
        if self.max_error is None:
            raise ValueError(f"Check {self.name} has neither a result nor a reason")
        expected = math.isfinite(self.max_error) and self.max_error <= self.tolerance
        if self.passed != expected:
            raise ValueError(f"Check {self.name}: passed must equal error <= tol")
        return self

    @classmethod
    def measure(
        cls, name: str, error: float, tolerance: float, detail: Optional[str] = None
    ) -> "Check":
        error = float(error)
        passed = math.isfinite(error) and error <= tolerance
        return cls(
            name=name, max_error=error, tolerance=tolerance, passed=passed, detail=detail
        )

    @classmethod
    def skipped(cls, name: str, reason: str, tolerance: float = 0.0) -> "Check":
        return cls(name=name, tolerance=tolerance, skipped_reason=reason)

    @property
    def is_skipped(self) -> bool:
        return self.skipped_reason is not None


class ReportMetadata(BaseModel):
    """Context for a report."""

    d: Optional[int] = None
    fiducial_hash: Optional[str] = None
    seed: Optional[int] = None
    wall_time: Optional[float] = Field(default=None, description="Seconds")


def _check_row(check: Check) -> dict:
    row = check.model_dump(mode="json")
    # non-finite errors become null; passed stays false
    if check.max_error is not None and not math.isfinite(check.max_error):
        row["max_error"] = None
    return row


class VerificationReport(BaseModel):
    """Named checks plus run metadata."""

    metadata: ReportMetadata = Field(default_factory=ReportMetadata)
    checks: List[Check] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_names(self) -> "VerificationReport":
        names = [c.name for c in self.checks]
        if len(names) != len(set(names)):
            raise ValueError("Duplicate check names in report")
        return self

    def add(self, check: Check) -> Check:
        if any(c.name == check.name for c in self.checks):
            raise ValueError(f"Duplicate check name: {check.name}")
        self.checks.append(check)
        return check

    def measure(self, name: str, error: float, tolerance: float, **kwargs) -> Check:
        return self.add(Check.measure(name, error, tolerance, **kwargs))

    def skip(self, name: str, reason: str, tolerance: float = 0.0) -> Check:
        return self.add(Check.skipped(name, reason, tolerance))

    def extend(self, checks: Iterable[Check]) -> None:
        for check in checks:
            self.add(check)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.extend(other.checks)
        return self

    @classmethod
    def worst_of(
        cls, reports: Iterable["VerificationReport"], label: str = "cases"
    ) -> "VerificationReport":
        """Fold same-named checks from many reports into their largest error."""
        grouped: dict = {}
        for report in reports:
            for check in report.checks:
                grouped.setdefault(check.name, []).append(check)
        merged = cls()
        for name, checks in grouped.items():
            run = [c for c in checks if not c.is_skipped]
            if not run:
                merged.skip(name, checks[0].skipped_reason, checks[0].tolerance)
                continue
            worst = max(
                run,
                key=lambda c: c.max_error if math.isfinite(c.max_error) else math.inf,
            )
            merged.measure(
                name,
                worst.max_error,
                worst.tolerance,
                detail=f"worst of {len(run)} {label}",
            )
        return merged

    def get(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.passed is False]

    def skipped_checks(self) -> List[Check]:
        return [c for c in self.checks if c.is_skipped]

    @property
    def passed(self) -> bool:
        return not self.failures()

    def sorted(self) -> "VerificationReport":
        return VerificationReport(
            metadata=self.metadata, checks=sorted(self.checks, key=lambda c: c.name)
        )

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "metadata": self.metadata.model_dump(mode="json"),
            "checks": [_check_row(c) for c in self.checks],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, allow_nan=False)

    def summary(self) -> str:
        n_skip = len(self.skipped_checks())
        n_fail = len(self.failures())
        n_pass = len(self.checks) - n_skip - n_fail
        return f"{n_pass} passed, {n_fail} failed, {n_skip} skipped"
