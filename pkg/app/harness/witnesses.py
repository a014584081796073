"""
증명 중간 주장 확인
특정 순환 구조(S_n) 또는 특정 위수(PSL(2,q))의 원소가 어느 극대 부분군에 들어가는지 조사
"""
import math
import time
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np

from app import config
from app.modules.constructors import psl2, symmetric
from app.modules.fingerprint import (
    ALTERNATING_5,
    DIHEDRAL,
    SYMMETRIC_4,
    StructureFingerprint,
    fingerprint_mask,
)
from app.modules.lattice import SubgroupLattice, maximal_type_label
from app.modules.perm_core import CycleType, cycle_type, render
from .results import VerificationResult
from .runner import VerificationRunner
from .theorems import check_psl2_q


def _intransitive(a: int, b: int) -> str:
    return f"intransitive({max(a, b)},{min(a, b)})"


def _maximal_matrix(lattice: SubgroupLattice) -> Tuple[List[int], np.ndarray]:
    """극대 부분군 번호와 행렬 matrix[k, x] = x ∈ M_k"""
    maximals = lattice.maximal_indices()
    return maximals, np.stack([lattice.records[j].mask for j in maximals])


def expected_even_labels(n: int) -> List[str]:
    """짝수 n 에서 (n-3,2,1) 원소를 포함한다고 증명이 나열하는 극대 부분군 유형"""
    if n == 4:
        return [_intransitive(3, 1)]
    return sorted({_intransitive(n - 1, 1), _intransitive(n - 2, 2), _intransitive(n - 3, 3)})


def witness_cycle_type_checks(n: int, runner: Optional[VerificationRunner] = None) -> VerificationResult:
    """
    S_n 의 순환 구조 증인 검사

    홀수 n: (n-2,2) 원소마다 자신을 포함하는 극대 부분군이 정확히 하나이고
    그 유형이 intransitive(n-2,2) 여야 한다 (어긋나면 반례).
    짝수 n: (n-3,2,1) 원소를 포함하는 극대 부분군 유형의 중복집합을 기록하고
    증명의 목록과 다르면 메모로 남긴다.

    Raises:
        ValueError: n 이 4..7 밖
    """
    low, high = config.WITNESS_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"n은 {low}..{high} 범위여야 합니다: {n}")
    runner = runner or VerificationRunner()
    start_time = time.time()

    group = symmetric(n)
    lattice = runner.lattice(group)
    table = lattice.table
    maximals, matrix = _maximal_matrix(lattice)
    labels: Dict[int, str] = {j: str(maximal_type_label(group, lattice.subgroup(j))) for j in maximals}

    pattern = CycleType.from_lengths((n - 2, 2) if n % 2 else (n - 3, 2, 1))
    witnesses = [x for x, p in enumerate(table.elements) if cycle_type(p) == pattern]
    result = VerificationResult("cycle-witness", {"n": n, "cycle_type": str(pattern)})

    distribution: Counter = Counter()
    for x in witnesses:
        containing = [maximals[k] for k in np.flatnonzero(matrix[:, x])]
        found = tuple(sorted(labels[j] for j in containing))
        distribution[found] += 1
        if n % 2 and (len(containing) != 1 or found[0] != _intransitive(n - 2, 2)):
            result.counterexamples.append({"element": render(table.elements[x]), "maximal_types": list(found)})

    result.stats = {
        "elements_checked": len(witnesses),
        "maximal_subgroups": len(maximals),
        "type_distribution": {" + ".join(k): v for k, v in sorted(distribution.items())},
    }

    if n % 2:
        expected_count = math.factorial(n) // (2 * (n - 2))
        pair_maximals = [j for j in maximals if labels[j] == _intransitive(n - 2, 2)]
        intersection = np.logical_and.reduce([lattice.records[j].mask for j in pair_maximals])
        result.stats.update({
            "expected_elements": expected_count,
            "pair_maximals": len(pair_maximals),
            "pair_intersection_trivial": int(intersection.sum()) == 1,
        })
        if len(witnesses) != expected_count:
            result.counterexamples.append({"count": len(witnesses), "expected": expected_count})
    else:
        expected = expected_even_labels(n)
        for found, count in sorted(distribution.items()):
            extra = sorted(set(found) - set(expected))
            if extra:
                result.notes.append(
                    f"{pattern} 원소 {count}개가 {list(found)} 극대 부분군에 포함 "
                    f"(증명의 목록 {expected} 밖의 유형: {extra})"
                )
        if n == 4:
            result.notes.append(f"n=4 에서 순환 구조 {pattern} 는 길이 1 이 두 번 나타납니다")

    result.wall_time = time.time() - start_time
    runner.log(result.summary())
    return result


def designated_witness(q: int) -> Optional[Tuple[int, int, str]]:
    """
    PSL(2,q) 에서 (원소 위수, 극대 부분군 위수, 지문 라벨). q ∈ {5, 9} 는 None
    """
    if q % 2 == 0:
        return q + 1, 2 * (q + 1), DIHEDRAL
    if q == 7:
        return 4, 24, SYMMETRIC_4
    if q == 11:
        return 6, 12, DIHEDRAL
    if q in (5, 9):
        return None
    return (q + 1) // 2, q + 1, DIHEDRAL


def witness_order_checks(
    q: int,
    allow_large: bool = False,
    runner: Optional[VerificationRunner] = None,
) -> VerificationResult:
    """
    지정된 위수의 원소가 지정된 유형의 극대 부분군에만 포함되는지 검사

    q=5, 9 는 교대군 검증으로 대신하므로 건너뛴다.
    """
    check_psl2_q(q, allow_large)
    runner = runner or VerificationRunner()
    start_time = time.time()

    designated = designated_witness(q)
    if designated is None:
        twin = {5: "A5", 9: "A6"}[q]
        result = VerificationResult("order-witness", {"q": q})
        result.stats = {"skipped": True}
        result.notes.append(f"PSL(2,{q}) ≅ {twin}: 교대군 검증이 이 경우를 다룹니다")
        return result

    element_order, maximal_order, label = designated
    result = VerificationResult(
        "order-witness",
        {"q": q, "element_order": element_order, "maximal_order": maximal_order, "label": label},
    )

    group = psl2(q)
    lattice = runner.lattice(group)
    table = lattice.table
    maximals, matrix = _maximal_matrix(lattice)
    fingerprints: Dict[int, StructureFingerprint] = {
        j: fingerprint_mask(table, lattice.records[j].mask) for j in maximals
    }

    witnesses = np.flatnonzero(lattice.records[lattice.root].mask & (table.orders == element_order))
    in_a5 = 0
    for x in witnesses:
        containing = [maximals[k] for k in np.flatnonzero(matrix[:, x])]
        wrong = [fingerprints[j] for j in containing
                 if fingerprints[j].order != maximal_order or fingerprints[j].label != label]
        if any(fp.label == ALTERNATING_5 for fp in wrong):
            in_a5 += 1
        if wrong:
            result.counterexamples.append({
                "element": render(table.elements[int(x)]),
                "maximal_types": [f"{fp.order}:{fp.label}" for fp in wrong],
            })

    result.stats = {
        "elements_checked": len(witnesses),
        "maximal_subgroups": len(maximals),
        "maximal_types": dict(sorted(Counter(f"{fp.order}:{fp.label}" for fp in fingerprints.values()).items())),
    }
    if q == 11 and in_a5:
        result.notes.append(f"위수 6 원소 {in_a5}개가 alternating-5 극대 부분군에도 포함됩니다")

    result.wall_time = time.time() - start_time
    runner.log(result.summary())
    return result
