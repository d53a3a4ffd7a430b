from pydantic import BaseModel, Field
from typing import List, Optional, Dict, Literal


class TermDocument(BaseModel):
    monomial: List[int] = Field(default_factory=list)
    coeff: str = Field(..., description='Lowest-terms rational "a/b"')


class ElementDocument(BaseModel):
    genus: int = Field(..., description="Range-checked by build_context when the document is parsed")
    gonality: Optional[int] = None
    side: Literal["newton", "pontryagin"]
    terms: List[TermDocument] = Field(default_factory=list)


class DimensionRow(BaseModel):
    p: int  # codimension
    s: int  # level
    dim: int


class DimensionTable(BaseModel):
    genus: int
    gonality: Optional[int] = None
    rows: List[DimensionRow] = Field(default_factory=list)

    def entry(self, p: int, s: int) -> int:
        for row in self.rows:
            if row.p == p and row.s == s:
                return row.dim
        return 0


class GeneratorSpec(BaseModel):
    name: str  # theta, eta
    p: int
    s: int


class MonomialRelation(BaseModel):
    # theta^r eta^s = 0
    theta_exponent: int
    eta_exponent: int = 0

    def label(self) -> str:
        parts = []
        if self.theta_exponent:
            parts.append(f"theta^{self.theta_exponent}")
        if self.eta_exponent:
            parts.append(f"eta^{self.eta_exponent}")
        return "*".join(parts) or "1"


class PresentationReport(BaseModel):
    genus: int
    gonality: int
    generators: List[GeneratorSpec] = Field(default_factory=list)
    relations: List[MonomialRelation] = Field(default_factory=list)
    k: Optional[int] = Field(default=None, description="Model-maximal k (trigonal case)")
    lambda_table: Dict[str, str] = Field(
        default_factory=dict, description='Chain coefficients keyed "a" or "a,b"'
    )
    verdict: bool
    diagnostics: List[str] = Field(default_factory=list)
    findings: List[str] = Field(default_factory=list)


class IdentityCheck(BaseModel):
    identity: str
    passed: bool
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


class SuiteResult(BaseModel):
    name: str
    checks: List[IdentityCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class SuiteReport(BaseModel):
    genus: int
    gonality: Optional[int] = None
    suites: List[SuiteResult] = Field(default_factory=list)
    passed: bool = True

    def failures(self) -> List[IdentityCheck]:
        return [check for suite in self.suites for check in suite.checks if not check.passed]
