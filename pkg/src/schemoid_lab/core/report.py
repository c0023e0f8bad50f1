"""
Module for validation reports returned by every checking operation.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    """Collected violations of a structural check. Empty means valid."""

    subject: str
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(f"{other.subject}: {v}" for v in other.violations)

    def to_json(self) -> Dict[str, Any]:
        return {"subject": self.subject, "ok": self.ok, "violations": list(self.violations)}


def log_report(report: ValidationReport, limit: int = 20) -> None:
    """
    Log a validation report in a readable format.

    Args:
        report: Report to log
        limit: Maximum number of violations written to the log
    """
    if report.ok:
        logger.info(f"{report.subject}: valid")
        return
    logger.warning(f"{report.subject}: {len(report.violations)} violation(s)")
    for violation in report.violations[:limit]:
        logger.warning(f"  {violation}")
    if len(report.violations) > limit:
        logger.warning(f"  ... {len(report.violations) - limit} more")
