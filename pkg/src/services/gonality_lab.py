"""
d-gonal quotients: dimension tables, the hyperelliptic and trigonal
presentations, and the generator-count bound.

With gonality d the curve class has no components of level >= d-1, so the
convolution side is spanned by <s1..sr> with parts <= d-2. For d = 2 this
leaves <0^a>, one class per codimension; for d = 3 it leaves <0^a 1^b>,
at most one class per bidegree. Multiplication by theta walks these
one-dimensional pieces, and the coefficients of that walk (the chain
coefficients) decide which monomials in theta and eta vanish.

All statements are about the model: vanishing here holds for every curve
of that gonality, non-vanishing is only an upper bound.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Set, Tuple

from src.models.context import JacobianContext, build_context
from src.models.response_models import (
    DimensionRow,
    DimensionTable,
    GeneratorSpec,
    MonomialRelation,
    PresentationReport,
)
from src.services.theta_calculus import ThetaCalculus
from src.utils.exceptions import DomainError
from src.utils.exact_kernel import format_rational

logger = logging.getLogger(__name__)


def apply_gonality(context: JacobianContext, d: int) -> JacobianContext:
    """Same genus, with N^k = 0 for k >= d and C_(s) = 0 for s >= d-1."""
    return build_context(context.genus, d)


@lru_cache(maxsize=None)
def _multiset_count(size: int, total: int, top: int) -> int:
    # multisets of `size` values in 0..top summing to `total`
    if top < 0:
        return 1 if size == 0 and total == 0 else 0
    if size == 0:
        return 1 if total == 0 else 0
    count = _multiset_count(size, total, top - 1)
    if top <= total:
        count += _multiset_count(size - 1, total - top, top)
    return count


def dimension_table(context: JacobianContext) -> DimensionTable:
    """Number of surviving Pontryagin monomials per bidegree (p, s)."""
    g = context.genus
    rows: List[DimensionRow] = []
    for p in range(g + 1):
        for s in range(g):
            dim = 0
            if not context.kills_bidegree(p, s):
                dim = _multiset_count(g - p, s, context.max_part)
            rows.append(DimensionRow(p=p, s=s, dim=dim))
    return DimensionTable(genus=g, gonality=context.gonality, rows=rows)


def generator_bound(genus: int) -> int:
    """R is generated by w^1, ..., w^[(g+1)/2]."""
    if genus < 2:
        raise DomainError(f"generator_bound needs g >= 2, got {genus}")
    return (genus + 1) // 2


def hyperelliptic_report(genus: int) -> PresentationReport:
    """Check R = Q[theta]/(theta^(g+1)) in the gonality-2 model."""
    context = build_context(genus, 2)
    calculus = ThetaCalculus(context)
    diagnostics: List[str] = []

    table = dimension_table(context)
    for row in table.rows:
        expected = 1 if row.s == 0 else 0
        if row.dim != expected:
            diagnostics.append(f"dim R^{row.p}_({row.s}) = {row.dim}, expected {expected}")

    lambda_table: Dict[str, str] = {}
    for a in range(1, genus + 1):
        lam, clean = calculus.chain_coefficient((0,) * a)
        lambda_table[str(a)] = format_rational(lam)
        if not lam:
            diagnostics.append(f"chain coefficient lambda_{a} vanishes")
        if not clean:
            diagnostics.append(f"theta.<0^{a}> has terms besides <0^{a - 1}>")

    top = calculus.intersection_number(calculus.theta_power(genus))
    if top != factorial(genus):
        diagnostics.append(f"theta^{genus} has degree {top}, expected {factorial(genus)}")
    if not calculus.theta_power(genus + 1).is_zero():
        diagnostics.append(f"theta^{genus + 1} does not vanish")

    verdict = not diagnostics
    logger.info(
        "[gonality] hyperelliptic report",
        extra={"genus": genus, "verdict": verdict, "diagnostics": len(diagnostics)},
    )
    return PresentationReport(
        genus=genus,
        gonality=2,
        generators=[GeneratorSpec(name="theta", p=1, s=0)],
        relations=[MonomialRelation(theta_exponent=genus + 1)],
        lambda_table=lambda_table,
        verdict=verdict,
        diagnostics=diagnostics,
    )


def trigonal_pattern(genus: int) -> List[Tuple[int, int]]:
    """(theta^(g+1), theta^(g-2) eta, ..., theta^(g+1-3k) eta^k, eta^(k+1)) as exponent pairs."""
    k = genus // 3
    return [(genus + 1 - 3 * s, s) for s in range(k + 1)] + [(0, k + 1)]


class TrigonalAnalyzer:
    """
    Works on the trigonal model of one genus. eta^s is identified
    projectively with <0^(g-3s) 1^s>, the only class at bidegree (2s, s),
    so theta^r eta^s is a product of chain coefficients times <0^(g-3s-r) 1^s>.
    """

    def __init__(self, genus: int):
        if genus < 3:
            raise DomainError(f"trigonal_report needs g >= 3, got {genus}")
        self.genus = genus
        self.context = build_context(genus, 3)
        self.calculus = ThetaCalculus(self.context)
        self.logger = logging.getLogger(__name__)
        self._lambdas: Dict[Tuple[int, int], Fraction] = {}
        self.leaks: List[Tuple[int, int]] = []

    def survives(self, a: int, b: int) -> bool:
        return a >= 0 and b >= 0 and not self.context.kills_pontryagin((0,) * a + (1,) * b)

    def lambda_value(self, a: int, b: int) -> Fraction:
        """theta . <0^a 1^b> = lambda(a, b) <0^(a-1) 1^b>; lambda(0, b) = 0."""
        if (a, b) not in self._lambdas:
            lam, clean = self.calculus.chain_coefficient((0,) * a + (1,) * b)
            if not clean:
                self.logger.warning(
                    "[gonality] theta product left the chain", extra={"a": a, "b": b}
                )
                self.leaks.append((a, b))
            self._lambdas[(a, b)] = lam
        return self._lambdas[(a, b)]

    def theta_eta_vanishes(self, r: int, s: int) -> bool:
        a0 = self.genus - 3 * s
        if a0 < 0 or not self.survives(a0, s):
            return True
        if r > a0:
            return True
        return any(not self.lambda_value(a0 - i, s) for i in range(r))

    def vanishing_set(self) -> Set[Tuple[int, int]]:
        k = self.genus // 3
        return {
            (r, s)
            for s in range(k + 2)
            for r in range(self.genus + 2)
            if self.theta_eta_vanishes(r, s)
        }

    def minimal_relations(self) -> List[Tuple[int, int]]:
        """Minimal generators of the monomial ideal of vanishing theta^r eta^s."""
        relations: List[Tuple[int, int]] = []
        previous = None
        s = 0
        while True:
            r_min = next(r for r in range(self.genus + 2) if self.theta_eta_vanishes(r, s))
            if previous is None or r_min < previous:
                relations.append((r_min, s))
            if r_min == 0:
                return relations
            previous = r_min
            s += 1

    def model_k(self) -> int:
        return max(s for s in range(self.genus // 3 + 1) if self.survives(self.genus - 3 * s, s))

    def report(self) -> PresentationReport:
        g = self.genus
        diagnostics: List[str] = []
        findings: List[str] = []

        lambda_table: Dict[str, str] = {}
        for b in range(g + 1):
            for a in range(g + 1 - b):
                if not self.survives(a, b):
                    continue
                lam = self.lambda_value(a, b)
                lambda_table[f"{a},{b}"] = format_rational(lam)
                if a == 0 or lam:
                    continue
                if a + 3 * b <= g:
                    diagnostics.append(f"lambda({a},{b}) = 0 inside the theta/eta span")
                else:
                    findings.append(
                        f"lambda({a},{b}) = 0: theta.<0^{a} 1^{b}> vanishes (outside the theta/eta span)"
                    )

        table = dimension_table(self.context)
        for row in table.rows:
            if row.p + row.s > g and row.dim:
                diagnostics.append(f"dim R^{row.p}_({row.s}) = {row.dim} although p+s > g")

        k = self.model_k()
        if k != g // 3:
            diagnostics.append(f"model k = {k}, expected {g // 3}")

        vanishing = self.vanishing_set()
        expected = {(r, s) for s in range(g // 3 + 2) for r in range(g + 2) if r + 3 * s > g}
        if vanishing != expected:
            diagnostics.append(
                f"vanishing set differs from r+3s > g: extra {sorted(vanishing - expected)}, "
                f"missing {sorted(expected - vanishing)}"
            )
        for a, b in self.leaks:
            diagnostics.append(f"theta.<0^{a} 1^{b}> has terms besides <0^{a - 1} 1^{b}>")

        relations = self.minimal_relations()
        if relations != trigonal_pattern(g):
            diagnostics.append(f"relations {relations} differ from {trigonal_pattern(g)}")

        verdict = not diagnostics
        self.logger.info(
            "[gonality] trigonal report",
            extra={"genus": g, "k": k, "verdict": verdict, "findings": len(findings)},
        )
        return PresentationReport(
            genus=g,
            gonality=3,
            generators=[GeneratorSpec(name="theta", p=1, s=0), GeneratorSpec(name="eta", p=2, s=1)],
            relations=[MonomialRelation(theta_exponent=r, eta_exponent=s) for r, s in relations],
            k=k,
            lambda_table=lambda_table,
            verdict=verdict,
            diagnostics=diagnostics,
            findings=findings,
        )


def trigonal_report(genus: int) -> PresentationReport:
    """Check the theta/eta presentation of the trigonal model."""
    return TrigonalAnalyzer(genus).report()
