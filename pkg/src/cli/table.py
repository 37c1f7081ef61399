"""The stable-rank table: fixture rows run through the classifier."""

from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from src.cli.classifier import classify
from src.cli.grammar import parse_scalar
from src.errors import DownUpError, FixtureMissing
from src.models.schemas import TableFixture, TableReport, TableRowResult

HEADER = ("family", "condition", "(alpha, beta, gamma)", "expected", "actual", "")


def load_fixture(path: Path) -> TableFixture:
    """Read and validate the fixture file.

    Raises:
        FixtureMissing: if the file is absent or not a valid fixture.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FixtureMissing(f"cannot read stable-rank fixture {path}: {e}")
    try:
        fixture = TableFixture.model_validate_json(text)
    except ValidationError as e:
        raise FixtureMissing(f"invalid stable-rank fixture {path}: {e.error_count()} errors")
    logger.debug(f"loaded {len(fixture.rows)} table rows from {path}")
    return fixture


def run_table(fixture: TableFixture) -> TableReport:
    """Classify every row in strict mode and record the comparison."""
    results = []
    for row in fixture.rows:
        parameters = (row.alpha, row.beta, row.gamma)
        expected = (row.sr_lower, row.sr_upper)
        try:
            report = classify(*(parse_scalar(text) for text in parameters), strict=True)
        except DownUpError as e:
            logger.warning(f"{row.family} [{row.condition}]: {e}")
            results.append(
                TableRowResult(
                    family=row.family,
                    condition=row.condition,
                    parameters=parameters,
                    expected=expected,
                    error=f"{type(e).__name__}: {e}",
                )
            )
            continue
        result = TableRowResult(
            family=row.family,
            condition=row.condition,
            parameters=parameters,
            expected=expected,
            actual=(report.sr_lower, report.sr_upper),
        )
        if report.exact != row.exact:
            result.error = f"exact is {report.exact}, fixture says {row.exact}"
        if not result.matches:
            logger.warning(
                f"{row.family} [{row.condition}]: expected {expected}, got {result.actual}"
            )
        results.append(result)
    return TableReport(rows=results)


def _bounds(bounds: tuple[int, int] | None) -> str:
    if bounds is None:
        return "-"
    lower, upper = bounds
    return f"sr = {lower}" if lower == upper else f"{lower} <= sr <= {upper}"


def render_table(report: TableReport) -> str:
    """Plain-text table, one line per row, widths fitted to the content."""
    lines = [HEADER]
    for row in report.rows:
        lines.append(
            (
                row.family.split(":")[0],
                row.condition or "-",
                f"({', '.join(row.parameters)})",
                _bounds(row.expected),
                _bounds(row.actual),
                "ok" if row.matches else f"MISMATCH {row.error or ''}".rstrip(),
            )
        )
    widths = [max(len(line[i]) for line in lines) for i in range(len(HEADER))]
    rendered = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in lines
    ]
    rendered.insert(1, "  ".join("-" * width for width in widths).rstrip())
    return "\n".join(rendered) + "\n"
