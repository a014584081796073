"""
모듈 F: 보고서 출력
검증 결과를 JSON / CSV / 텍스트로 저장하거나 출력
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from app import config

FORMATS = ("json", "csv", "text")


def resolve_output_path(out: str) -> Path:
    """디렉토리 없이 파일명만 주어지면 REPORTS_DIR 아래에 저장"""
    path = Path(out)
    if not path.is_absolute() and path.parent == Path("."):
        return config.REPORTS_DIR / path
    return path


def results_payload(results: List, include_timing: bool = False) -> Dict[str, Any]:
    """결과 목록을 JSON 문서로 (타임스탬프/호스트 정보 없음)"""
    return {
        "status": "pass" if all(r.passed for r in results) else "fail",
        "results": [r.to_dict(include_timing=include_timing) for r in results],
    }


def results_csv_rows(results: List) -> List[Dict[str, Any]]:
    """
    CSV 행: 켤레류 분류표가 있는 결과는 류마다 한 행, 나머지는 결과마다 한 행
    """
    rows: List[Dict[str, Any]] = []
    for r in results:
        base = {"target": r.target, "parameters": json.dumps(r.parameters, ensure_ascii=False), "status": r.status}
        report = r.details.get("report")
        if report:
            for cls in report["classes"]:
                row = dict(base)
                row.update(cls)
                row["rep_generators"] = " ".join(cls["rep_generators"])
                rows.append(row)
        else:
            row = dict(base)
            row["counterexamples"] = len(r.counterexamples)
            row["notes"] = " | ".join(r.notes)
            rows.append(row)
    return rows


def render_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render_csv(rows: List[Dict[str, Any]]) -> str:
    fieldnames: List[str] = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render_text(results: List) -> str:
    lines = []
    for r in results:
        lines.append(r.summary())
        for c in r.counterexamples:
            lines.append(f"   ✗ 반례: {json.dumps(c, ensure_ascii=False)}")
        for note in r.notes:
            lines.append(f"   ⚠️ {note}")
    return "\n".join(lines) + "\n"


def render_results(results: List, output_format: str, include_timing: bool = False) -> str:
    if output_format == "json":
        return render_json(results_payload(results, include_timing))
    if output_format == "csv":
        return render_csv(results_csv_rows(results))
    if output_format == "text":
        return render_text(results)
    raise ValueError(f"지원하지 않는 형식: {output_format} (json, csv, text)")


def write_report(content: str, out: Optional[str]) -> Optional[Path]:
    """
    보고서 저장. out 이 None 이면 표준 출력

    Returns:
        저장한 경로 (표준 출력이면 None)
    """
    if out is None:
        print(content, end="")
        return None
    output_path = resolve_output_path(out)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w', encoding='utf-8', newline="") as f:
        f.write(content)
    return output_path
