"""Text and JSON renderings of ring reports and suite results."""

from __future__ import annotations

import json
import sys

from .classify import RingReport
from .errors import IoError
from .homological import HullResult
from .predicate import ScanResult
from .suites import SuiteResult


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _kv(d: dict) -> str:
    return " ".join(f"{k}={_fmt(v)}" for k, v in sorted(d.items()) if not isinstance(v, (dict, list)))


def _witness_block(detail: dict, indent: str = "    ") -> list[str]:
    lines = []
    scalars = _kv({k: v for k, v in detail.items() if k != "reason"})
    if scalars:
        lines.append(f"{indent}{scalars}")
    for key in ("witness", "violating_module"):
        if detail.get(key):
            lines.append(f"{indent}{key}: {json.dumps(detail[key], sort_keys=True)}")
    for f in detail.get("failures", []):
        lines.append(f"{indent}failure: {json.dumps(f, sort_keys=True)}")
    if detail.get("reason") and len(detail) == 1:
        lines.append(f"{indent}reason: {detail['reason']}")
    return lines


def ring_json(report: RingReport) -> dict:
    return {**report.to_json(), "timing": report.timing}


def suite_json(result: SuiteResult) -> dict:
    return {
        "rings": [result.reports[n].to_json() for n in result.reports],
        "theorems": result.aggregate(),
        "checks": [c.to_json() for c in result.checks],
        "witnesses": [
            {"ring": c.ring, "theorem": c.theorem, **f}
            for c in result.checks if c.status == "fail" for f in c.detail.get("failures", [])
        ],
        "exit_code": result.exit_code,
        "timing": result.timing,
    }


def hull_json(ring_spec: str, module_spec: str, h: HullResult) -> dict:
    from .homological import is_essential, is_injective

    return {
        "ring": ring_spec,
        "module": module_spec,
        "module_size": h.embedding.source.size,
        "hull_size": h.hull.size,
        "hull_orders": h.hull.ords.tolist(),
        "embedding": h.embedding.images.tolist(),
        "image": h.embedding.image().elems.tolist(),
        "injective": bool(is_injective(h.hull)),
        "essential": bool(is_essential(h.embedding.image(), h.hull)),
    }


def render_text(result) -> str:
    lines: list[str] = []
    if isinstance(result, RingReport):
        lines.extend(_ring_lines(result.ring.name, result))
        for tid, status, detail in result.theorem_results:
            lines.append(f"{result.ring.name}  {tid}  {status.upper()}")
            lines.extend(_witness_block(detail))
    elif isinstance(result, SuiteResult):
        for name, report in result.reports.items():
            lines.extend(_ring_lines(name, report))
        for c in result.checks:
            lines.append(f"{c.ring}  {c.theorem}  {c.status.upper()}")
            lines.extend(_witness_block(c.detail))
        for agg in result.aggregate():
            lines.append(
                f"summary {agg['id']}: checked={agg['rings_checked']} passes={agg['passes']} "
                f"failures={len(agg['failures'])} skips={len(agg['skips'])} n/a={agg['not_applicable']}"
            )
    elif isinstance(result, ScanResult):
        lines.append(f"predicate: {result.predicate}")
        for name in result.values:
            lines.append(f"{name}  {'HIT' if name in result.hits else 'no'}")
        for name, reason in result.skipped.items():
            lines.append(f"{name}  SKIP")
            lines.append(f"    reason: {reason}")
        lines.append(f"hits: {len(result.hits)}" + (f" ({', '.join(result.hits)})" if result.hits else ""))
    elif isinstance(result, dict):
        lines.append(_kv(result))
    else:
        raise TypeError(f"cannot render {type(result).__name__}")
    return "\n".join(lines) + "\n"


def _ring_lines(name: str, report: RingReport) -> list[str]:
    v = report.verdict
    lines = [
        f"ring {name} (|R| = {report.ring.size})",
        f"  classifiers: {_kv(report.classifiers)}",
        f"  verdict: kind={v.kind} splits={_fmt(v.splits)} cohereditary={_fmt(v.cohereditary)} "
        f"stable={_fmt(v.stable)} goldie_leq_cg={_fmt(v.goldie_leq_cg)} radical_size={v.radical_of_R.size} "
        f"scope=corpus-extensional",
        f"  splitting witness: {json.dumps(v.witness, sort_keys=True)}",
    ]
    if not report.classifiers.get("regular_in_primitive", False):
        lines.append("  regular element in a primitive ideal: none (hypothesis vacuous)")
    if report.module is not None:
        lines.append(f"  module {report.module.get('spec')}: {_kv(report.module)}")
    return lines


def render_json(result) -> str:
    if isinstance(result, RingReport):
        doc = ring_json(result)
    elif isinstance(result, SuiteResult):
        doc = suite_json(result)
    elif isinstance(result, ScanResult):
        doc = {**result.to_json(), "timing": result.timing}
    elif isinstance(result, dict):
        doc = result
    else:
        raise TypeError(f"cannot render {type(result).__name__}")
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit_report(result, fmt: str = "text", path=None) -> None:
    """Write ``result`` as ``text`` or ``json`` to ``path`` (stdout when None)."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown report format {fmt!r}")
    text = render_json(result) if fmt == "json" else render_text(result)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(path, exc.strerror or str(exc)) from exc
