"""
2-생성 군 탐색
S_n 의 2-생성 부분군 G 마다 Φ(G) 에 포함되지 않으면서 FF 도 아닌 비자명 부분군을 찾는다
"""
import time
from typing import Optional

import numpy as np

from app import config
from app.modules.constructors import symmetric
from app.modules.ff_analysis import cover_mask, frattini_subgroups_non_ff
from app.modules.group_engine import CapExceededError
from app.modules.lattice import ElementTable, mask_key
from app.modules.perm_core import render
from .results import VerificationResult
from .runner import VerificationRunner


def is_two_generated(table: ElementTable, mask: np.ndarray) -> bool:
    """원소 두 개로 생성되는지 (첫 원소는 순환 부분군마다 하나만 시도)"""
    members = np.flatnonzero(mask)
    size = len(members)
    if size == 1 or int(table.orders[members].max()) == size:
        return True
    tried = set()
    for a in members[1:]:
        cyclic = table.generated([int(a)])
        key = mask_key(cyclic)
        if key in tried:
            continue
        tried.add(key)
        for b in members:
            if cyclic[b]:
                continue
            if int(table.closure(cyclic, [int(a), int(b)]).sum()) == size:
                return True
    return False


def question_scan(
    degree_max: int,
    order_max: Optional[int] = None,
    runner: Optional[VerificationRunner] = None,
) -> VerificationResult:
    """
    S_n (n ≤ degree_max) 의 부분군 켤레류 대표 중 2-생성인 G 를 조사

    후보 H: 비자명, H ⊄ Φ(G), Δ_H(G) = G. 후보가 있으면 G 안의 켤레류마다 한 행씩
    반례로 보고한다. S_4 (V4 와 ⟨(1 2)(3 4)⟩) 처럼 실제 후보가 있는 군이 있다.

    Raises:
        ValueError: degree_max 가 1..7 밖
        CapExceededError: order_max 가 상한을 넘을 때
    """
    if not 1 <= degree_max <= config.QUESTION_MAX_DEGREE:
        raise ValueError(f"차수는 1..{config.QUESTION_MAX_DEGREE} 범위여야 합니다: {degree_max}")
    runner = runner or VerificationRunner()
    order_max = runner.cap if order_max is None else order_max
    if order_max > runner.cap:
        raise CapExceededError("order_max", order_max, runner.cap)
    start_time = time.time()
    runner.section(f"❓ 2-생성 군 탐색 (차수 ≤ {degree_max}, 위수 ≤ {order_max})")

    result = VerificationResult("two-generator-scan", {"degree_max": degree_max, "order_max": order_max})
    groups_scanned = 0
    frattini_checked = 0
    for n in range(1, degree_max + 1):
        lattice = runner.lattice(symmetric(n))
        table = lattice.table
        for cls in lattice.classes():
            record = lattice.records[cls.representative]
            if record.order > order_max or not is_two_generated(table, record.mask):
                continue
            groups_scanned += 1
            sub = lattice.sublattice(cls.representative)
            phi_index = sub.index_of_mask(sub.frattini_mask())
            # Φ 포함 여부와 |Δ_H| 는 G 안의 켤레류 위에서 상수
            for sub_class in sub.classes():
                r = sub.records[sub_class.representative]
                if r.order == 1 or r.index == sub.root or sub.contains(phi_index, r.index):
                    continue
                if int(cover_mask(sub, r.index).sum()) == sub.order:
                    result.counterexamples.append({
                        "degree": n,
                        "group": [render(p) for p in table.permutations(table.canonical_generators(record.mask))],
                        "subgroup": [render(p) for p in table.permutations(table.canonical_generators(r.mask))],
                        "subgroup_order": r.order,
                        "class_size": sub_class.size,
                    })

            # 비순환이고 Φ 가 비자명하면 Φ 의 부분군은 FF 가 아니어야 한다
            cyclic = int(table.orders[np.flatnonzero(record.mask)].max()) == record.order
            if not cyclic and sub.records[phi_index].order > 1:
                frattini_checked += 1
                if not frattini_subgroups_non_ff(sub.ambient, sub):
                    result.notes.append(f"S{n} 의 류 {cls.class_id}: Frattini 부분군 안에 FF 부분군이 있습니다")

    result.stats = {"groups_scanned": groups_scanned, "frattini_checked": frattini_checked}
    if result.passed:
        result.notes.append("후보 없음")
    result.wall_time = time.time() - start_time
    runner.log(result.summary())
    return result
