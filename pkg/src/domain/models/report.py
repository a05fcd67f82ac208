"""
Check reports and stage descriptors.

Every check in the model layer returns a CheckReport instead of raising:
a failed check is a result, not an error, and carries the assignment
that refutes it.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

CheckResult = Literal["pass", "fail", "unknown"]


class CheckReport(BaseModel):
    """
    Outcome of a finite check.

    Attributes:
        subject: What was checked, e.g. 'axiom:pairing' or 'roundtrip:ab_add'
        n: Stage or range parameter of the check
        bump: Stage offset allowed for existential witnesses
        result: pass, fail or unknown
        cases: Number of cases examined
        counterexample: Refuting assignment, present exactly when result is fail
        seed: Seed of a sampled check
        elapsed_ms: Wall-clock time of the check
        notes: Free-form remarks (sampling, guard trips, skipped cases)
    """

    subject: str = Field(..., min_length=1, description="What was checked")
    n: Optional[int] = Field(default=None, ge=0, description="Stage or range parameter")
    bump: Optional[int] = Field(default=None, ge=0, description="Witness stage offset")
    result: CheckResult = Field(..., description="pass, fail or unknown")
    cases: int = Field(default=0, ge=0, description="Cases examined")
    counterexample: Optional[Dict[str, Any]] = Field(
        default=None, description="Refuting assignment"
    )
    seed: Optional[int] = Field(default=None, description="Seed of a sampled check")
    elapsed_ms: float = Field(default=0.0, ge=0.0, description="Elapsed time in ms")
    notes: List[str] = Field(default_factory=list, description="Remarks")

    @model_validator(mode="after")
    def validate_counterexample(self) -> "CheckReport":
        if self.result == "fail" and self.counterexample is None:
            raise ValueError("A failed check must carry a counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.result == "pass"

    def to_json(self) -> Dict[str, Any]:
        """Report as a JSON-ready dict without empty optional fields."""
        return self.model_dump(exclude_none=True)


class Stage(BaseModel):
    """
    Finite stage D_n of the cumulative hierarchy of decidable sets.

    The codes of D_n are exactly the numbers below bound.

    Attributes:
        n: Stage index
        bound: t_n, with t_0 = 0 and t_{n+1} = 2^{t_n}
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Stage index")
    bound: int = Field(..., ge=0, description="t_n")

    def __contains__(self, code: int) -> bool:
        return 0 <= code < self.bound

    @property
    def size(self) -> int:
        return self.bound

    def codes(self) -> range:
        return range(self.bound)


class CriterionResult(BaseModel):
    """
    Outcome of one acceptance criterion of the self-test suite.

    Attributes:
        number: Criterion number
        title: Short description
        primary: Whether the criterion decides the suite's exit status
        result: fail if any report failed, unknown if any stayed
            undecided, pass otherwise
        reports: The underlying check reports
        elapsed_ms: Wall-clock time of the criterion
    """

    number: int = Field(..., ge=1)
    title: str = Field(..., min_length=1)
    primary: bool = Field(default=True)
    result: CheckResult = Field(...)
    reports: List[CheckReport] = Field(default_factory=list)
    elapsed_ms: float = Field(default=0.0, ge=0.0)

    @classmethod
    def from_reports(
        cls, number: int, title: str, reports: List[CheckReport],
        elapsed_ms: float, primary: bool = True,
    ) -> "CriterionResult":
        results = {report.result for report in reports}
        if "fail" in results:
            result = "fail"
        elif "unknown" in results:
            result = "unknown"
        else:
            result = "pass"
        return cls(
            number=number, title=title, primary=primary, result=result,
            reports=reports, elapsed_ms=elapsed_ms,
        )


class SelftestReport(BaseModel):
    """Outcome of the whole self-test suite."""

    quick: bool = Field(default=False)
    criteria: List[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff every primary criterion passed."""
        return all(c.result == "pass" for c in self.criteria if c.primary)

    def to_json(self) -> Dict[str, Any]:
        data = self.model_dump(exclude_none=True)
        data["passed"] = self.passed
        return data
