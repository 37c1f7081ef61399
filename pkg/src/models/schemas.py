"""Pydantic models for the workbench reports and fixtures."""

from enum import StrEnum, auto

from pydantic import BaseModel, Field, model_validator

TOOL_VERSION = "0.1.0"


class Verdict(StrEnum):
    """Outcome of a single check."""

    PASS = auto()
    FAIL = auto()
    SKIPPED = auto()


class Suite(StrEnum):
    """Groups of checks run by `dua verify`."""

    ALL = auto()
    GAMMA_NONZERO = "section3_1"
    GAMMA_ZERO = "section3_2"
    DYNAMICS = "section4"
    ENGINE = auto()


class Certificate(BaseModel):
    """An identity lhs = rhs re-verified by normal-form multiplication."""

    lhs: str = Field(..., description="Left-hand side in canonical text")
    rhs: str = Field(..., description="Right-hand side in canonical text")
    cofactors: list[str] = Field(default_factory=list, description="Cofactors used")
    degree_bound: int | None = Field(None, description="Degree bound of the check")
    verdict: Verdict = Field(..., description="Whether the identity holds exactly")


class CheckResult(BaseModel):
    """One entry of a verification report."""

    id: str = Field(..., description="Stable check identifier")
    citation: str = Field(..., description="Mathematical statement the check reproduces")
    verdict: Verdict
    witness: Certificate | str | None = Field(
        None, description="Certificate on success or counterexample on failure"
    )
    reason: str | None = Field(None, description="Why the check was skipped")
    ms: float = Field(0.0, description="Elapsed wall time in milliseconds")


class VerificationReport(BaseModel):
    """All checks of one `dua verify` run, sorted by id."""

    tool_version: str = TOOL_VERSION
    suite: Suite
    bound: int
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.verdict is not Verdict.FAIL for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if check.verdict is Verdict.FAIL]


class RootData(BaseModel):
    """Roots of t^2 - alpha*t - beta and their multiplicative orders."""

    lam: str
    mu: str
    field: str = Field(..., description="Field the roots live in, e.g. QQ(sqrt(-3))")
    lam_order: int | None = Field(None, description="Order of lambda as a root of unity")
    mu_order: int | None = Field(None, description="Order of mu as a root of unity")
    ratio_order: int | None = Field(None, description="Order of lambda/mu as a root of unity")


class ClassificationReport(BaseModel):
    """Stable-rank bounds for A(alpha, beta, gamma)."""

    alpha: str
    beta: str
    gamma: str
    noetherian: bool
    krull_dim: int | None = Field(None, description="2 or 3; None when not noetherian")
    roots: RootData | None = None
    sr_lower: int | None = None
    sr_upper: int | None = None
    exact: bool = False
    rule_trace: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_bounds(self) -> "ClassificationReport":
        if (self.sr_lower is None) != (self.sr_upper is None):
            raise ValueError("sr bounds come in pairs")
        if self.sr_lower is not None:
            if self.sr_lower > self.sr_upper:
                raise ValueError("sr_lower exceeds sr_upper")
            if self.exact != (self.sr_lower == self.sr_upper):
                raise ValueError("exact must mean sr_lower == sr_upper")
        elif self.exact:
            raise ValueError("exact report without bounds")
        return self


class OrbitReport(BaseModel):
    """Orbit of a point (s0, s1) of K^2 under the affine automorphism."""

    point: tuple[str, str]
    horizon: int
    orbit: list[tuple[str, str]] = Field(default_factory=list)
    period: int | None = Field(None, description="Least n >= 1 returning to the start")
    zero_x_hits: list[int] = Field(default_factory=list, description="n with s_n = 0")
    horizon_bounded: bool = Field(
        True, description="Conclusions only cover n <= horizon"
    )


class StablyFreeReport(BaseModel):
    """Certified content of K = {f : r*f in z*S} = sum of g_i*S."""

    presentation: str
    r: str
    z: str
    degree_bound: int
    generator_certificates: list[Certificate] = Field(default_factory=list)
    kernel_dimension: int
    generated_dimension: int
    unreduced: list[str] = Field(
        default_factory=list, description="Kernel elements with nonzero remainder"
    )
    properness_remainder: str = Field(..., description="Remainder of 1 modulo the generators")
    citations: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            all(c.verdict is Verdict.PASS for c in self.generator_certificates)
            and not self.unreduced
            and self.kernel_dimension == self.generated_dimension
            and self.properness_remainder != "0"
        )


class TableFixtureRow(BaseModel):
    """One row of the stable-rank table with a concrete witness."""

    family: str
    condition: str = Field(..., description="Row condition as stated for the family")
    witness: dict[str, str] = Field(
        default_factory=dict, description="Auxiliary parameter values realizing the condition"
    )
    alpha: str
    beta: str
    gamma: str
    sr_lower: int
    sr_upper: int
    exact: bool = False


class TableFixture(BaseModel):
    rows: list[TableFixtureRow]


class TableRowResult(BaseModel):
    """Classifier output next to the expected bounds of one fixture row."""

    family: str
    condition: str
    parameters: tuple[str, str, str] = Field(..., description="(alpha, beta, gamma)")
    expected: tuple[int, int]
    actual: tuple[int, int] | None = Field(None, description="None when classify raised")
    error: str | None = None

    @property
    def matches(self) -> bool:
        return self.error is None and self.actual == self.expected


class TableReport(BaseModel):
    """The whole stable-rank table run."""

    tool_version: str = TOOL_VERSION
    rows: list[TableRowResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.matches for row in self.rows)
