"""
정리 검증: S_n, A_n, PSL(2,q) 의 모든 비자명 진부분군이 FF-부분군인지 전수 확인,
그리고 유한 단순군 목록에 대한 같은 검사
"""
import sys
from collections import Counter
from typing import List, Optional, Sequence

from app import config
from app.modules.constructors import (
    alternating,
    describe_psl2,
    psl2,
    psl2_order,
    resolve_group_spec,
    symmetric,
)
from app.modules.fingerprint import fingerprint_mask, match_inventory, psl2_maximal_inventory
from app.modules.finite_field import prime_power
from app.modules.group_engine import is_2_transitive
from .results import VerificationResult
from .runner import VerificationRunner

# S_4 의 V4 와 그 안의 이중 호환 부분군은 A_4 와 세 D_8 로 덮인다 (S_4/V4 ≅ S_3 는 비순환)
_SYMMETRIC_NON_FF_NOTES = {
    4: "S4: V4 = ⟨(1 2)(3 4),(1 3)(2 4)⟩ 와 ⟨(1 2)(3 4)⟩ 류는 A4 ∪ D8 ×3 = S4 로 덮여 FF 가 아님 (S4/V4 ≅ S3)",
}

# PSL(2,q) 와 위수가 같은 교대군
_ALTERNATING_TWINS = {5: 5, 9: 6}


def _check_range(name: str, low: int, high: int, bounds) -> None:
    lower, upper = bounds
    if not lower <= low <= high <= upper:
        raise ValueError(f"{name} 범위는 {lower} ≤ 최소 ≤ 최대 ≤ {upper} 이어야 합니다: {low}..{high} (--min-n 확인)")


def verify_theorem_symmetric(
    n_max: int,
    n_min: Optional[int] = None,
    runner: Optional[VerificationRunner] = None,
) -> List[VerificationResult]:
    """
    S_n (n_min ≤ n ≤ n_max) 검증

    n_min 기본값은 SYMMETRIC_DEFAULT_MIN_N (5). S_4 는 FF 가 아닌 부분군이 있어 실패로 보고된다.

    Raises:
        ValueError: 범위가 2..7 을 벗어날 때
        CapExceededError: 위수가 상한을 넘을 때
    """
    runner = runner or VerificationRunner()
    n_min = config.SYMMETRIC_DEFAULT_MIN_N if n_min is None else n_min
    _check_range("n", n_min, n_max, config.SYMMETRIC_N_RANGE)
    runner.section(f"🧮 대칭군 S_{n_min}..S_{n_max}")
    results = []
    for n in range(n_min, n_max + 1):
        result, _ = runner.check_ff(symmetric(n), "symmetric-ff", {"n": n})
        if not result.passed and n in _SYMMETRIC_NON_FF_NOTES:
            result.notes.append(_SYMMETRIC_NON_FF_NOTES[n])
        results.append(result)
    return results


def verify_theorem_alternating(
    n_max: int,
    n_min: Optional[int] = None,
    runner: Optional[VerificationRunner] = None,
) -> List[VerificationResult]:
    """A_n (n_min ≤ n ≤ n_max, 3..7) 검증. A_3 은 비자명 진부분군이 없어 0개 류로 통과"""
    runner = runner or VerificationRunner()
    n_min = config.ALTERNATING_N_RANGE[0] if n_min is None else n_min
    _check_range("n", n_min, n_max, config.ALTERNATING_N_RANGE)
    runner.section(f"🧮 교대군 A_{n_min}..A_{n_max}")
    return [runner.check_ff(alternating(n), "alternating-ff", {"n": n})[0] for n in range(n_min, n_max + 1)]


def check_psl2_q(q: int, allow_large: bool = False) -> None:
    """
    기본 허용 범위: 4 ≤ q ≤ 13 인 소수 거듭제곱. 그보다 큰 q 는 allow_large 필요

    Raises:
        FieldError: 소수 거듭제곱이 아닐 때
        ValueError: 범위 밖
    """
    prime_power(q)
    if q < 4:
        raise ValueError(f"q ≥ 4 이어야 합니다: {q}")
    largest = max(config.DEFAULT_PSL2_Q)
    if q > largest and not (allow_large and q <= max(config.LARGE_PSL2_Q)):
        raise ValueError(f"q={q}은(는) 기본 범위(≤ {largest})를 넘습니다. --allow-large 와 --cap 을 함께 지정하세요")


def verify_theorem_psl2(
    q_list: Optional[Sequence[int]] = None,
    allow_large: bool = False,
    runner: Optional[VerificationRunner] = None,
) -> List[VerificationResult]:
    """
    PSL(2,q) 검증과 구성 교차 검사

    위수 공식, 2-추이성, 극대 부분군 목록과의 대조를 함께 기록한다.
    위수 공식이나 2-추이성이 어긋나면 구성 자체의 오류이므로 반례로 취급한다.
    """
    runner = runner or VerificationRunner()
    q_list = list(config.DEFAULT_PSL2_Q if q_list is None else q_list)
    for q in q_list:
        check_psl2_q(q, allow_large)
    runner.section(f"🧮 PSL(2,q), q ∈ {q_list}")

    results = []
    for q in q_list:
        group = psl2(q)
        result, lattice = runner.check_ff(group, "psl2-ff", {"q": q})

        expected = psl2_order(q)
        two_transitive = is_2_transitive(group)
        if group.order != expected:
            result.counterexamples.append({"construction": "order", "expected": expected, "actual": group.order})
        if not two_transitive:
            result.counterexamples.append({"construction": "2-transitive", "degree": group.degree})
        result.stats.update({"degree": group.degree, "expected_order": expected, "two_transitive": two_transitive})
        result.details["construction"] = describe_psl2(q)

        if q in _ALTERNATING_TWINS:
            k = _ALTERNATING_TWINS[q]
            twin = alternating(k).order
            relation = "=" if twin == group.order else "≠"
            result.notes.append(f"|PSL(2,{q})| = {group.order} {relation} |A{k}| = {twin}")

        # 극대 부분군 목록과 대조
        inventory = psl2_maximal_inventory(q)
        realized = set()
        found = Counter()
        for j in lattice.maximal_indices():
            fp = fingerprint_mask(lattice.table, lattice.records[j].mask)
            found[f"{fp.order}:{fp.label}"] += 1
            entry = match_inventory(inventory, fp)
            if entry is None:
                result.notes.append(f"목록에 없는 극대 부분군: 위수 {fp.order}, 지문 {fp.label}")
            else:
                realized.add(entry)
        for entry in inventory:
            if entry not in realized:
                result.notes.append(f"목록의 극대 부분군 유형이 발견되지 않음: {entry.description} (위수 {entry.order})")
        result.stats["maximal_types"] = dict(sorted(found.items()))
        results.append(result)
    return results


def conjecture_scan(
    specs: Optional[Sequence[str]] = None,
    runner: Optional[VerificationRunner] = None,
) -> List[VerificationResult]:
    """
    유한 단순군 목록에 대한 FF 검사

    반례는 곧 발견이므로 크게 경고하고, bsgs 백엔드로 재확인하라는 메모를 남긴다.
    """
    runner = runner or VerificationRunner()
    specs = list(config.CONJECTURE_GROUPS if specs is None else specs)
    groups = [(spec, resolve_group_spec(spec)) for spec in specs]
    runner.section(f"🔭 단순군 검사: {', '.join(specs)}")

    results = []
    for spec, group in groups:
        result, lattice = runner.check_ff(group, "simple-conjecture", {"group": spec})
        simple = lattice.is_simple()
        result.stats["simple"] = simple
        if not simple:
            result.notes.append(f"{spec}은(는) 단순군이 아닙니다 (FF 검사는 그대로 수행)")
        if not result.passed:
            message = f"🚨 {spec}: FF 가 아닌 부분군 발견 ({len(result.counterexamples)}개 류)"
            print(message, file=sys.stderr)
            result.notes.append("반례 후보: generating_elements(backend='bsgs') 로 수동 확인 필요")
        results.append(result)
    return results
