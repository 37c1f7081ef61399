"""Report and fixture models for the workbench."""

from .schemas import (
    Certificate,
    CheckResult,
    ClassificationReport,
    OrbitReport,
    RootData,
    StablyFreeReport,
    Suite,
    TableFixture,
    TableFixtureRow,
    TableReport,
    TableRowResult,
    VerificationReport,
    Verdict,
)

__all__ = [
    "Certificate",
    "CheckResult",
    "ClassificationReport",
    "OrbitReport",
    "RootData",
    "StablyFreeReport",
    "Suite",
    "TableFixture",
    "TableFixtureRow",
    "TableReport",
    "TableRowResult",
    "VerificationReport",
    "Verdict",
]
