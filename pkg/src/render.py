"""
Serialization of results: JSON (schema 1), LaTeX table bodies and coloured text.
"""

import json
from typing import Any, Dict, List, Optional

from colorama import Fore, Style

from .bott import BottOutcome, CohomologyDescription
from .oracle import CheckReport, SweepSummary
from .repcalc import weyl_dimension
from .rootsys import RootSystem, Weight

SCHEMA_VERSION = 1
INT64_MAX = 2**63 - 1

_use_color = True

_LATEX_ESCAPES = {
    "\\": r"\textbackslash{}",
    "_": r"\_",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "{": r"\{",
    "}": r"\}",
    "~": r"\textasciitilde{}",
    "^": r"\textasciicircum{}",
}


def set_color(enabled: bool):
    global _use_color
    _use_color = enabled


def _paint(color: str, text: str) -> str:
    if not _use_color:
        return text
    return f"{color}{text}{Style.RESET_ALL}"


def good(text: str) -> str:
    return _paint(Fore.GREEN, text)


def bad(text: str) -> str:
    return _paint(Fore.RED, text)


def heading(text: str) -> str:
    return _paint(Fore.CYAN, text)


def verdict_text(verdict: str) -> str:
    return good(verdict) if verdict == "pass" else bad(verdict)


def dimension_field(n: int):
    """Dimensions beyond signed 64-bit range are emitted as decimal strings."""
    return n if abs(n) <= INT64_MAX else str(n)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cohomology_to_json(desc: CohomologyDescription) -> List[Dict[str, Any]]:
    blocks = []
    for degree, module in desc.by_degree:
        constituents = [
            {
                "highest_weight": weight.to_list(),
                "multiplicity": mult,
                "dimension": dimension_field(weyl_dimension(desc.rs, weight)),
            }
            for weight, mult in module.terms
        ]
        blocks.append({"degree": degree, "constituents": constituents})
    return blocks


def envelope(query: Dict[str, Any], **fields) -> Dict[str, Any]:
    out: Dict[str, Any] = {"schema": SCHEMA_VERSION, "query": query}
    out.update(fields)
    return out


def bott_fields(outcome: BottOutcome) -> Dict[str, Any]:
    if outcome.is_zero:
        return {"status": "singular"}
    return {
        "status": "regular",
        "degree": outcome.degree,
        "highest_weight": outcome.highest_weight.to_list(),
        "dimension": dimension_field(outcome.dimension),
    }


def report_to_json(report: CheckReport) -> Dict[str, Any]:
    return {
        "check": report.check,
        "query": report.query,
        "case": report.case,
        "verdict": report.verdict,
        "lhs": report.lhs,
        "rhs": report.rhs,
    }


def summary_to_json(summary: SweepSummary, limit: int = 10) -> Dict[str, Any]:
    return {
        "name": summary.name,
        "root_system": summary.root_system,
        "checks": summary.checks,
        "passed": summary.passed,
        "verdict": "pass" if summary.ok else "fail",
        "failures": [report_to_json(rep) for rep in summary.failures[:limit]],
    }


def roots_to_json(rs: RootSystem) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "type": rs.cartan_type.series,
        "rank": rs.rank,
        "cartan_matrix": [[int(x) for x in row] for row in rs.cartan_matrix],
        "symmetrizers": list(rs.symmetrizers),
        "positive_roots": [list(beta.simple_coords) for beta in rs.positive_roots],
    }


# LaTeX


def latex_escape(text: str) -> str:
    return "".join(_LATEX_ESCAPES.get(ch, ch) for ch in text)


def latex_table(desc: CohomologyDescription, comment: str, case: Optional[str] = None) -> str:
    """Table body with columns degree, highest weight, multiplicity, dimension."""
    lines = ["% " + comment.replace("\n", " "), r"\begin{tabular}{rlrr}", r"\hline"]
    if case:
        lines.append(r"\multicolumn{4}{l}{case " + latex_escape(case) + r"} \\")
        lines.append(r"\hline")
    lines.append(r"$i$ & highest weight & mult. & dim \\")
    lines.append(r"\hline")
    if desc.is_zero():
        lines.append(r"\multicolumn{4}{l}{zero in all degrees} \\")
    for degree, module in desc.by_degree:
        for weight, mult in module.terms:
            dim = weyl_dimension(desc.rs, weight)
            lines.append(f"{degree} & ${weight}$ & {mult} & {dim} \\\\")
    lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


# Text


def text_cohomology(desc: CohomologyDescription) -> List[str]:
    if desc.is_zero():
        return ["zero in all degrees"]
    lines = []
    for degree, module in desc.by_degree:
        lines.append(f"H^{degree} = {module}   [dim {module.dimension()}]")
    return lines


def text_roots(rs: RootSystem) -> str:
    lines = [heading(f"Root system {rs}")]
    lines.append("Cartan matrix (A[i][j] = <alpha_j, alpha_i^v>):")
    for row in rs.cartan_matrix:
        lines.append("  " + " ".join(f"{int(x):>3}" for x in row))
    lines.append(f"symmetrizers: {list(rs.symmetrizers)}")
    lines.append(f"positive roots ({rs.num_positive_roots}, simple-root coordinates):")
    for beta in rs.positive_roots:
        lines.append(f"  {beta}  height {beta.height}")
    return "\n".join(lines) + "\n"


def text_bott(lam: Weight, outcome: BottOutcome) -> str:
    lines = [heading(f"H^*{lam}")]
    if outcome.is_zero:
        lines.append("singular: zero in all degrees")
    else:
        lines.append(
            f"degree {outcome.degree}, highest weight {outcome.highest_weight}, dimension {outcome.dimension}"
        )
    return "\n".join(lines) + "\n"


def text_report(report: CheckReport) -> str:
    q = report.query
    lines = [heading(f"{report.check} for lambda={tuple(q['lambda'])} alpha={q.get('alpha')} r={q.get('r')}")]
    if report.case:
        lines.append(f"case: {report.case}")
    lines.append(f"lhs: {report.lhs}")
    lines.append(f"rhs: {report.rhs}")
    lines.append(f"verdict: {verdict_text(report.verdict)} ({report.elapsed:.4f}s)")
    return "\n".join(lines) + "\n"


def text_summary(summary: SweepSummary) -> str:
    mark = good("✓") if summary.ok else bad("✗")
    line = f"{mark} {summary.name} on {summary.root_system}: {summary.passed}/{summary.checks} passed ({summary.elapsed:.2f}s)"
    if summary.first_failure is not None:
        first = summary.first_failure
        line += "\n  first failure: " + bad(f"{first.check} {first.query} lhs={first.lhs} rhs={first.rhs}")
    return line + "\n"
