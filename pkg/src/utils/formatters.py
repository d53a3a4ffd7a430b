import csv
import io
import json
import logging
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from src.models.context import JacobianContext, build_context
from src.models.elements import NElement, PElement
from src.models.response_models import (
    DimensionTable,
    ElementDocument,
    PresentationReport,
    SuiteReport,
    TermDocument,
)
from src.utils.exceptions import DomainError, ElementParseError
from src.utils.exact_kernel import format_rational, parse_rational
from src.utils.validators import ElementDocumentValidator

logger = logging.getLogger(__name__)

Element = Union[NElement, PElement]


class ElementFormatter:
    """Convert elements and reports to and from their JSON, CSV and text forms"""

    @staticmethod
    def serialize_element(x: Element) -> ElementDocument:
        """Canonical document: terms in canonical order, coefficients as 'a/b'."""
        side = "newton" if isinstance(x, NElement) else "pontryagin"
        return ElementDocument(
            genus=x.context.genus,
            gonality=x.context.gonality,
            side=side,
            terms=[TermDocument(monomial=list(m), coeff=format_rational(c)) for m, c in x.items()],
        )

    @staticmethod
    def load_document(raw: Union[str, Dict[str, Any], ElementDocument]) -> ElementDocument:
        if isinstance(raw, ElementDocument):
            return raw
        try:
            data = json.loads(raw) if isinstance(raw, str) else raw
            return ElementDocument.model_validate(data)
        except json.JSONDecodeError as e:
            raise ElementParseError(f"Element document is not valid JSON: {e}") from e
        except ValidationError as e:
            raise ElementParseError(f"Malformed element document: {e.errors()[0]['msg']}") from e

    @staticmethod
    def parse_element(
        raw: Union[str, Dict[str, Any], ElementDocument],
        context: Optional[JacobianContext] = None,
    ) -> Element:
        """
        Build an element from a document. Killed monomials are dropped with a
        warning; out-of-range entries and bad coefficients raise ElementParseError.
        """
        document = ElementFormatter.load_document(raw)
        doc_context = build_context(document.genus, document.gonality)
        if context is not None and context != doc_context:
            raise DomainError(
                f"Document context {doc_context.describe()} does not match {context.describe()}"
            )

        report = ElementDocumentValidator.validate_document(document, doc_context)
        if not report['valid']:
            raise ElementParseError("; ".join(report['errors']))
        for warning in report['warnings']:
            logger.warning(f"[parse] dropping killed monomial: {warning}")

        terms = {}
        for term in document.terms:
            key = tuple(sorted(term.monomial))
            terms[key] = terms.get(key, 0) + parse_rational(term.coeff)
        element_type = NElement if document.side == "newton" else PElement
        return element_type(doc_context, terms)

    # --- output -----------------------------------------------------------

    @staticmethod
    def to_json(model: BaseModel) -> str:
        return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True)

    @staticmethod
    def element_csv(document: ElementDocument) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["side", "monomial", "coeff"])
        for term in document.terms:
            writer.writerow([document.side, " ".join(map(str, term.monomial)), term.coeff])
        return buffer.getvalue()

    @staticmethod
    def dimension_csv(table: DimensionTable) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["p", "s", "dim"])
        for row in table.rows:
            writer.writerow([row.p, row.s, row.dim])
        return buffer.getvalue()

    @staticmethod
    def _render(table: Table) -> str:
        console = Console(file=io.StringIO(), width=120, color_system=None, force_terminal=False)
        console.print(table)
        return console.file.getvalue()

    @staticmethod
    def element_text(document: ElementDocument) -> str:
        symbol = "N" if document.side == "newton" else "<>"
        table = Table(title=f"{document.side} element, g={document.genus}")
        table.add_column("monomial")
        table.add_column("coeff", justify="right")
        for term in document.terms:
            if document.side == "newton":
                label = "*".join(f"N{i}" for i in term.monomial) or "1"
            else:
                label = "<" + ",".join(map(str, term.monomial)) + ">"
            table.add_row(label, term.coeff)
        if not document.terms:
            table.add_row(symbol, "0/1")
        return ElementFormatter._render(table)

    @staticmethod
    def dimension_text(table_model: DimensionTable) -> str:
        g = table_model.genus
        table = Table(title=f"dim R^p_(s), g={g}, gonality={table_model.gonality}")
        table.add_column("p \\ s")
        for s in range(g):
            table.add_column(str(s), justify="right")
        for p in range(g + 1):
            table.add_row(str(p), *(str(table_model.entry(p, s)) for s in range(g)))
        return ElementFormatter._render(table)

    @staticmethod
    def report_text(report: PresentationReport) -> str:
        table = Table(title=f"gonality {report.gonality} presentation, g={report.genus}")
        table.add_column("field")
        table.add_column("value")
        table.add_row("generators", ", ".join(f"{gen.name}({gen.p},{gen.s})" for gen in report.generators))
        table.add_row("relations", ", ".join(rel.label() for rel in report.relations))
        if report.k is not None:
            table.add_row("model-maximal k", str(report.k))
        table.add_row("verdict", "match" if report.verdict else "mismatch")
        for line in report.diagnostics:
            table.add_row("diagnostic", line)
        for line in report.findings:
            table.add_row("finding", line)
        return ElementFormatter._render(table)

    @staticmethod
    def suite_text(report: SuiteReport) -> str:
        table = Table(title=f"identity suites, g={report.genus}")
        table.add_column("suite")
        table.add_column("checks", justify="right")
        table.add_column("failed", justify="right")
        for suite in report.suites:
            failed = sum(1 for c in suite.checks if not c.passed)
            table.add_row(suite.name, str(len(suite.checks)), str(failed))
        return ElementFormatter._render(table)

    @staticmethod
    def suite_csv(report: SuiteReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["suite", "identity", "passed"])
        for suite in report.suites:
            for check in suite.checks:
                writer.writerow([suite.name, check.identity, "true" if check.passed else "false"])
        return buffer.getvalue()
