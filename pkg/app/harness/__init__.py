"""
검증 하네스
정리 검증, 증명 중간 주장 확인, 단순군/2-생성 군 탐색, 탐색 명령
"""
from .results import VerificationResult, failing_labels, overall_passed
from .runner import VerificationRunner
from .theorems import (
    conjecture_scan,
    verify_theorem_alternating,
    verify_theorem_psl2,
    verify_theorem_symmetric,
)
from .witnesses import witness_cycle_type_checks, witness_order_checks
from .question_scan import question_scan
from .explore import CoverReport, cover_command, lattice_command

__all__ = [
    'VerificationResult',
    'VerificationRunner',
    'failing_labels',
    'overall_passed',
    'verify_theorem_symmetric',
    'verify_theorem_alternating',
    'verify_theorem_psl2',
    'conjecture_scan',
    'witness_cycle_type_checks',
    'witness_order_checks',
    'question_scan',
    'CoverReport',
    'cover_command',
    'lattice_command',
]
