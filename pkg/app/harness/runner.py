"""
검증 실행기
군 하나의 격자를 만들고 켤레류마다 FF 여부를 분류해 VerificationResult 로 정리
"""
import sys
import time
from typing import Any, Dict, Optional, TextIO, Tuple

from app import config
from app.modules.ff_analysis import classify_generating_pairs
from app.modules.group_engine import PermutationGroup, group_label
from app.modules.lattice import SubgroupLattice, all_subgroups
from .results import VerificationResult


class VerificationRunner:
    """검증 명령들이 공유하는 실행 설정 (작업 수, 상한, 시드, 로그)"""

    def __init__(
        self,
        workers: Optional[int] = None,
        cap: Optional[int] = None,
        seed: Optional[int] = None,
        verbose: bool = False,
        stream: Optional[TextIO] = None,
    ):
        self.workers = config.MAX_WORKERS if workers is None else workers
        self.cap = config.LATTICE_CAP if cap is None else cap
        self.seed = config.SPOT_CHECK_SEED if seed is None else seed
        self.verbose = verbose
        self.stream = stream

    def log(self, message: str):
        if self.verbose:
            print(message, file=self.stream or sys.stdout)

    def section(self, title: str):
        self.log("━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━")
        self.log(title)
        self.log("━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━")

    def lattice(self, group: PermutationGroup) -> SubgroupLattice:
        self.log(f"🔍 {group_label(group)} (위수 {group.order}) 부분군 격자 계산 중...")
        lattice = all_subgroups(group, cap=self.cap, verbose=self.verbose)
        self.log(f"   부분군 {len(lattice)}개, 켤레류 {len(lattice.classes())}개, 극대 {len(lattice.maximal_indices())}개")
        return lattice

    def check_ff(
        self,
        group: PermutationGroup,
        target: str,
        parameters: Dict[str, Any],
        lattice: Optional[SubgroupLattice] = None,
    ) -> Tuple[VerificationResult, SubgroupLattice]:
        """
        진부분군이면서 비자명한 모든 켤레류의 FF 여부 검사

        한 행이라도 FF 가 아니거나, 생성 원소 전수 조사가 Δ 의 여집합과 다르거나,
        켤레 등변성 표본 검사가 실패하면 반례로 기록한다.
        """
        start_time = time.time()
        lattice = lattice or self.lattice(group)
        report = classify_generating_pairs(
            group, lattice, workers=self.workers, seed=self.seed, verbose=self.verbose
        )

        result = VerificationResult(target, parameters)
        for row in report.rows:
            if row.passed:
                continue
            result.counterexamples.append({
                "subgroup": f"deg={group.degree};gens=" + ";".join(row.rep_generators),
                "order": row.subgroup_order,
                "is_ff": row.is_ff,
                "complement_consistent": row.complement_consistent,
                "equivariance_ok": row.equivariance_ok,
            })

        result.stats = {
            "order": lattice.order,
            "subgroups": len(lattice),
            "classes": len(lattice.classes()),
            "classes_checked": len(report.rows),
            "maximal_subgroups": len(lattice.maximal_indices()),
        }
        result.details["report"] = report.to_dict()
        result.wall_time = time.time() - start_time

        marker = "✓" if result.passed else "✗"
        self.log(f"{marker} {result.label()}: 켤레류 {len(report.rows)}개 검사, 반례 {len(result.counterexamples)}개")
        return result, lattice
