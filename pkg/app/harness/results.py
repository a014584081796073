"""
검증 결과 타입
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class VerificationResult:
    """
    하나의 검증 대상(군, 매개변수)에 대한 결과

    counterexamples 가 비어 있으면 pass. notes 는 증명 내부 주장과의 차이를 기록할 뿐
    상태에 영향을 주지 않는다.
    """

    target: str
    parameters: Dict[str, Any]
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.target}({params})"

    def to_dict(self, include_timing: bool = False, include_details: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "target": self.target,
            "parameters": self.parameters,
            "status": self.status,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
            "notes": self.notes,
        }
        if include_details and self.details:
            data["details"] = self.details
        if include_timing:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def summary(self) -> str:
        marker = "✓" if self.passed else "✗"
        stats = ", ".join(f"{k}={v}" for k, v in self.stats.items() if not isinstance(v, (dict, list)))
        return f"{marker} {self.label()}: {self.status} ({stats}; {self.wall_time:.1f}초)"


def overall_passed(results: List[VerificationResult]) -> bool:
    return all(r.passed for r in results)


def failing_labels(results: List[VerificationResult]) -> List[str]:
    return [r.label() for r in results if not r.passed]
