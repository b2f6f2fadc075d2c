"""Report objects and their text, json and yaml renderings."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
import json
from typing import Any

import yaml

from .algebra import AlgebraElement, Monomial, NormalFormAlgebra, format_monomial
from .checks import AssociativityReport, ConjugationReport, PbwReport
from .classify import ClassReport, FamilyReport, FormFamily
from .cocycle import TwoCocycle
from .const import Command, EmitFormat, ExitStatus
from .cyclo import to_literal
from .lusztig import PhiReport, RootSystem
from .matgroup import FiniteMatrixGroup


@dataclass(slots=True)
class Report:
    """Result of one command: an optional table, summary lines and an exit status."""

    command: Command
    title: str
    columns: tuple[str, ...] = ()
    rows: list[tuple[str, ...]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    exit_status: ExitStatus = ExitStatus.OK
    body: str | None = None

    def as_dict(self) -> dict[str, Any]:
        """Return plain data for the structured renderings."""
        data: dict[str, Any] = {"command": str(self.command), "title": self.title, "passed": self.passed}
        if self.columns:
            data["rows"] = [dict(zip(self.columns, row, strict=True)) for row in self.rows]
        data.update(self.summary)
        if self.body is not None:
            data["body"] = self.body
        return data


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return "-" if value is None else str(value)


def render_text(report: Report) -> str:
    """Render a report with fixed-width columns followed by key: value lines."""
    if report.body is not None and not report.columns and not report.summary:
        return report.body
    lines = [report.title]
    if report.columns:
        table = [report.columns, *report.rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(report.columns))]
        for row in table:
            lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True)).rstrip())
    for key, value in report.summary.items():
        lines.append(f"{key}: {_cell(value)}")
    if report.body:
        lines.append(report.body.rstrip("\n"))
    return "\n".join(lines) + "\n"


def render(report: Report, emit: EmitFormat) -> str:
    """Render a report in the requested format."""
    match emit:
        case EmitFormat.JSON:
            return json.dumps(report.as_dict(), indent=2) + "\n"
        case EmitFormat.YAML:
            return yaml.safe_dump(report.as_dict(), sort_keys=False)
    return render_text(report)


def _word(group: FiniteMatrixGroup, g: int | None) -> str | None:
    return None if g is None else group.word(g)


def classify_report(
    group: FiniteMatrixGroup,
    alpha: TwoCocycle,
    result: ClassReport,
    stable: bool | None = None,
) -> Report:
    """Build the per-class admissibility table."""
    rows = [
        (
            entry.word,
            str(entry.size),
            str(entry.codim),
            _cell(entry.admissible),
            _cell(entry.regular),
            _cell(_word(group, entry.witness)),
        )
        for entry in result.classes
    ]
    summary: dict[str, Any] = {"d": result.d, "inv2dim": result.inv2dim, "total": result.total}
    if stable is not None:
        summary["coboundary_stable"] = stable
    return Report(
        Command.CLASSIFY,
        f"{group.name} (order {group.order}) with {alpha.name}",
        ("class", "size", "codim", "admissible", "regular", "witness"),
        rows,
        summary,
        passed=stable is not False,
        exit_status=ExitStatus.OK if stable is not False else ExitStatus.INTERNAL,
    )


def verify_report(
    family: FormFamily,
    result: FamilyReport,
    associativity: AssociativityReport | None = None,
    pbw: PbwReport | None = None,
) -> Report:
    """Build the family verification report."""
    group = family.group
    summary: dict[str, Any] = {
        "support": [_word(group, g) for g in result.support],
        "conjugation_pairs": result.conjugation_pairs,
        "jacobi_triples": result.jacobi_triples,
        "family": "PASS" if result.passed else f"FAIL {result.violation}",
    }
    passed = result.passed
    if associativity is not None:
        summary.update(_associativity_summary(associativity, group))
        passed = passed and associativity.passed
    if pbw is not None:
        summary.update(_pbw_summary(pbw))
        passed = passed and pbw.passed
    return Report(
        Command.VERIFY,
        f"{group.name} with {family.cocycle.name}",
        summary=summary,
        passed=passed,
        exit_status=ExitStatus.OK if passed else ExitStatus.FAMILY,
    )


def forms_report(family: FormFamily, text: str, destination: str | None = None) -> Report:
    """Wrap emitted forms text, or note where it was written."""
    if destination is None:
        return Report(Command.FORMS, family.group.name, body=text)
    return Report(
        Command.FORMS,
        family.group.name,
        summary={"forms": len(family.support()), "written": destination},
    )


def multiply_report(algebra: NormalFormAlgebra, products: Sequence[tuple[str, AlgebraElement]]) -> Report:
    """Build the normal form listing."""
    return Report(
        Command.MULTIPLY,
        f"{algebra.group.name} normal forms",
        ("expression", "normal form"),
        [(text, algebra.format(element)) for text, element in products],
    )


def mu_report(
    algebra: NormalFormAlgebra,
    entries: Sequence[tuple[str, str, Sequence[AlgebraElement]]],
) -> Report:
    """Build the table of nonzero deformation coefficients."""
    rows = [
        (x, y, str(i), algebra.format(value))
        for x, y, values in entries
        for i, value in enumerate(values, start=1)
        if value
    ]
    return Report(
        Command.MU,
        f"{algebra.group.name} deformation coefficients",
        ("r", "s", "i", "mu_i(r, s)"),
        rows,
        {"pairs": len(entries), "degree_law": "PASS"},
    )


def _associativity_summary(result: AssociativityReport, group: FiniteMatrixGroup) -> dict[str, Any]:
    summary: dict[str, Any] = {
        "associativity": "PASS" if result.passed else "FAIL",
        "triples_checked": result.triples_checked,
        "jacobi_triples": result.jacobi_triples,
    }
    if result.witness is not None:
        summary["associativity_witness"] = [format_monomial(m, group) for m in result.witness]
    if result.jacobi_witness is not None:
        summary["jacobi_witness"] = [f"v{i + 1}" for i in result.jacobi_witness]
    return summary


def _pbw_summary(result: PbwReport) -> dict[str, Any]:
    return {
        "pbw": "PASS" if result.passed else "FAIL",
        "pbw_counts": [f"{c.degree}:{c.observed}/{c.expected}" for c in result.counts],
        "first_collapse": result.first_collapse,
    }


def pbw_report(
    algebra: NormalFormAlgebra,
    associativity: AssociativityReport,
    pbw: PbwReport,
    conjugation: ConjugationReport,
) -> Report:
    """Build the flatness report."""
    summary = {**_associativity_summary(associativity, algebra.group), **_pbw_summary(pbw)}
    summary["conjugation"] = "PASS" if conjugation.passed else f"FAIL at {conjugation.witness}"
    passed = associativity.passed and pbw.passed and conjugation.passed
    return Report(
        Command.PBW_CHECK,
        f"{algebra.group.name} with {algebra.cocycle.name}",
        summary=summary,
        passed=passed,
        exit_status=ExitStatus.OK if passed else ExitStatus.FAMILY,
    )


def lusztig_forms_report(system: RootSystem, images: Sequence[tuple[str, AlgebraElement, AlgebraElement]]) -> Report:
    """List the nonzero Ram-Shepler forms and any requested images under Phi_t."""
    group = system.weyl
    rows = []
    for g in system.forms.support():
        matrix = system.forms.forms[g].matrix
        entries = "; ".join(" ".join(to_literal(x) for x in row) for row in matrix.rows)
        rows.append((group.word(g), entries))
    lusztig, drinfeld = system.lusztig, system.drinfeld
    summary: dict[str, Any] = {
        "order": group.order,
        "positive_roots": len(system.positive_roots),
        "parameters": [str(k) for k in system.parameters],
    }
    for text, element, image in images:
        summary[f"{text} (Lusztig)"] = lusztig.format(element)
        summary[f"Phi_t({text})"] = drinfeld.format(image)
    return Report(Command.LUSZTIG, f"{group.name} Ram-Shepler forms", ("element", "form"), rows, summary)


def lusztig_check_report(system: RootSystem, result: PhiReport, bound: int) -> Report:
    """Build the Phi_t verification summary."""
    summary: dict[str, Any] = {
        "bound": bound,
        "pairs_checked": result.pairs_checked,
        "relations_checked": result.relations_checked,
        "identities_checked": result.identities_checked,
        "word_independent": result.word_independent,
        "parity": result.parity,
        "result": "PASS" if result.passed else f"FAIL {result.failure}",
    }
    if result.witness:
        summary["witness"] = [
            format_monomial(w, system.weyl) if isinstance(w, Monomial) else str(w) for w in result.witness
        ]
    return Report(
        Command.LUSZTIG,
        f"Phi_t for {system.root_type}",
        summary=summary,
        passed=result.passed,
        exit_status=ExitStatus.OK if result.passed else ExitStatus.FAMILY,
    )
