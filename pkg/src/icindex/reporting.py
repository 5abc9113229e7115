"""Structured analysis reports with a deterministic JSON rendering."""

from __future__ import annotations

import json
from typing import Any

from .conditions import ConditionReport, check_conditions, theorem1_predict
from .construction import IndexCode, build_code
from .decoding import DecodeReport, decode_all
from .digraph import Digraph
from .oracle import SIZE_CAP_DEFAULT, OracleOutcome, oracle_report
from .structure import (
    ICycleFound,
    IPathDuplicated,
    IPathMissing,
    UncoveredArc,
    UncoveredVertex,
    ValidationReport,
    ic_structure,
    validate,
)


def _violation_dict(v: object) -> dict[str, Any]:
    if isinstance(v, ICycleFound):
        return {"kind": "i_cycle_found", "cycle": list(v.cycle)}
    if isinstance(v, IPathMissing):
        return {"kind": "i_path_missing", "source": v.source, "target": v.target}
    if isinstance(v, IPathDuplicated):
        return {
            "kind": "i_path_duplicated",
            "source": v.source,
            "target": v.target,
            "path_a": list(v.path_a),
            "path_b": list(v.path_b),
        }
    if isinstance(v, UncoveredArc):
        return {"kind": "uncovered_arc", "tail": v.tail, "head": v.head}
    if isinstance(v, UncoveredVertex):
        return {"kind": "uncovered_vertex", "vertex": v.vertex}
    raise TypeError(f"unknown violation {v!r}")


def validation_section(report: ValidationReport) -> dict[str, Any]:
    return {
        "is_ic": report.is_ic,
        "violations": [_violation_dict(v) for v in report.violations],
    }


def code_section(code: IndexCode) -> dict[str, Any]:
    return {
        "length": code.length,
        "symbols": [
            {"label": s.label, "support": sorted(s.support)} for s in code.symbols
        ],
    }


def decode_section(report: DecodeReport) -> dict[str, Any]:
    return {
        "all_decodable": report.all_decodable,
        "outcomes": [
            {
                "vertex": o.vertex,
                "combination": list(o.combination),
                "residual": sorted(o.residual_support),
                "decodable": o.decodable,
                "blocking": sorted(o.blocking),
            }
            for o in report.outcomes
        ],
    }


def conditions_section(report: ConditionReport) -> dict[str, Any]:
    return {
        "a": [
            {"i": i, "j": j, "count": c}
            for (i, j), c in sorted(report.a_table.items())
        ],
        "b": [
            {"i": i, "j": j, "count": c}
            for (i, j), c in sorted(report.b_table.items())
        ],
        "c1_holds": report.c1_holds,
        "c2_holds": report.c2_holds,
        "c1_violations": [list(v) for v in report.c1_violations],
        "c2_violations": [list(v) for v in report.c2_violations],
        "noninner_cycle_free": report.noninner_cycle_free,
        "theorem1_predict": theorem1_predict(report),
    }


def oracle_section(outcomes: tuple[OracleOutcome, ...]) -> dict[str, Any]:
    return {
        "outcomes": [
            {
                "vertex": o.vertex,
                "decodable": o.decodable,
                "witness": list(o.witness) if o.witness is not None else None,
                "witness_residual": sorted(o.witness_residual)
                if o.witness_residual is not None
                else None,
                "combinations_checked": o.combinations_checked,
            }
            for o in outcomes
        ]
    }


def analyze(g: Digraph, k: int, cap: int = SIZE_CAP_DEFAULT) -> dict[str, Any]:
    """Run the whole pipeline; non-qualifying graphs get a validation-only report."""
    report: dict[str, Any] = {
        "graph": {"n": g.n, "k": k, "arcs": [list(a) for a in g.sorted_arcs()]},
        "validation": validation_section(validate(g, k)),
    }
    if not report["validation"]["is_ic"]:
        return report
    ic = ic_structure(g, k)
    code = build_code(ic)
    report["code"] = code_section(code)
    report["decode"] = decode_section(decode_all(ic, code))
    report["conditions"] = conditions_section(check_conditions(ic))
    report["oracle"] = oracle_section(oracle_report(code, g, cap=cap))
    return report


def to_json(report: dict[str, Any]) -> str:
    """Byte-stable rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
