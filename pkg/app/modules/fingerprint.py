"""
모듈 D-2: 구조 지문
원소 위수 분포, 가환성, 중심의 위수로 작은 군에 라벨을 붙이고
PSL(2,q) 극대 부분군 목록과 대조
"""
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Dict, FrozenSet, List, Optional

import numpy as np
from sympy import primefactors

from app.modules.finite_field import prime_power
from app.modules.group_engine import PermutationGroup
from app.modules.lattice import ElementTable, element_table

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"
EA_EXTENSION = "elementary-abelian-extension"
ALTERNATING_4 = "alternating-4"
SYMMETRIC_4 = "symmetric-4"
ALTERNATING_5 = "alternating-5"
OTHER = "other"

# 원소 위수 분포로 판정하는 라벨
_HISTOGRAM_LABELS = [
    (ALTERNATING_4, {1: 1, 2: 3, 3: 8}),
    (SYMMETRIC_4, {1: 1, 2: 9, 3: 8, 4: 6}),
    (ALTERNATING_5, {1: 1, 2: 15, 3: 20, 5: 24}),
]


@dataclass(frozen=True)
class StructureFingerprint:
    order: int
    element_order_histogram: Dict[int, int]
    abelian: bool
    center_order: int
    label: str

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["element_order_histogram"] = {str(k): v for k, v in self.element_order_histogram.items()}
        return data


def _is_dihedral(table: ElementTable, members: np.ndarray, orders: np.ndarray) -> bool:
    """위수 2m (m ≥ 3), 위수 m 원소 c 와 ⟨c⟩ 밖의 대합 t 가 t c t = c⁻¹"""
    n = len(members)
    if n % 2 or n < 6:
        return False
    m = n // 2
    involutions = members[orders == 2]
    for c in members[orders == m]:
        rotations = table.generated([int(c)])
        for t in involutions:
            if rotations[t]:
                continue
            if table.table[table.table[t, c], t] == table.inverse[c]:
                return True
    return False


def _is_ea_extension(table: ElementTable, members: np.ndarray, orders: np.ndarray) -> bool:
    """
    어떤 소수 p 에 대해 위수가 p 를 나누는 원소들이 비자명 기본 아벨 부분군 N 을 이루고
    G/N 이 순환군
    """
    n = len(members)
    mask = np.zeros(table.size, dtype=bool)
    mask[members] = True
    for p in primefactors(n):
        normal = members[(orders == 1) | (orders == p)]
        if len(normal) < 2:
            continue
        products = table.table[np.ix_(normal, normal)]
        in_normal = np.zeros(table.size, dtype=bool)
        in_normal[normal] = True
        if not in_normal[products].all() or not (products == products.T).all():
            continue
        index = n // len(normal)
        if index == 1:
            return True
        for g in members:
            x, j = g, 1
            while j < index and not in_normal[x]:
                x = table.table[x, g]
                j += 1
            if j == index:
                return True
    return False


def fingerprint_mask(table: ElementTable, mask: np.ndarray) -> StructureFingerprint:
    """원소표 위의 부분군 마스크에 대한 지문"""
    members = np.flatnonzero(mask)
    orders = table.orders[members]
    n = len(members)
    histogram = dict(sorted(Counter(orders.tolist()).items()))

    gens = table.canonical_generators(mask)
    if gens:
        left = table.table[np.ix_(members, gens)]
        right = table.table[np.ix_(gens, members)].T
        center_order = int((left == right).all(axis=1).sum())
    else:
        center_order = n
    abelian = center_order == n

    if int(orders.max()) == n:
        label = CYCLIC
    elif _is_dihedral(table, members, orders):
        label = DIHEDRAL
    else:
        label = next((name for name, h in _HISTOGRAM_LABELS if histogram == h), None)
        if label is None:
            label = EA_EXTENSION if _is_ea_extension(table, members, orders) else OTHER
    return StructureFingerprint(n, histogram, abelian, center_order, label)


def structure_fingerprint(group: PermutationGroup) -> StructureFingerprint:
    table = element_table(group)
    return fingerprint_mask(table, table.full_mask())


# ===== PSL(2,q) 극대 부분군 목록 =====

@dataclass(frozen=True)
class MaximalType:
    description: str
    order: int
    labels: FrozenSet[str]

    def matches(self, fingerprint: StructureFingerprint) -> bool:
        return fingerprint.order == self.order and fingerprint.label in self.labels


_STABILIZER_LABELS = frozenset({EA_EXTENSION, DIHEDRAL, ALTERNATING_4})


def _subfield_labels(q0: int, projective: bool) -> FrozenSet[str]:
    """PGL(2,q0) / PSL(2,q0) 에 기대되는 지문 라벨"""
    known = {
        (3, True): SYMMETRIC_4,
        (3, False): ALTERNATING_4,
        (4, True): ALTERNATING_5,
        (4, False): ALTERNATING_5,
        (5, False): ALTERNATING_5,
    }
    return frozenset({known.get((q0, projective), OTHER)})


def psl2_maximal_inventory(q: int) -> List[MaximalType]:
    """
    PSL(2,q) 의 극대 부분군 유형 목록 (위수와 허용 라벨)

    Args:
        q: 4 이상의 소수 거듭제곱
    """
    p, f = prime_power(q)
    entries: List[MaximalType] = []
    if p == 2:
        entries.append(MaximalType("point stabilizer", q * (q - 1), _STABILIZER_LABELS))
        entries.append(MaximalType(f"dihedral of order {2 * (q - 1)}", 2 * (q - 1), frozenset({DIHEDRAL})))
        entries.append(MaximalType(f"dihedral of order {2 * (q + 1)}", 2 * (q + 1), frozenset({DIHEDRAL})))
        for r in primefactors(f):
            q0 = 2 ** (f // r)
            if q0 != 2:
                entries.append(MaximalType(f"PGL(2,{q0})", q0 * (q0 * q0 - 1), _subfield_labels(q0, True)))
        return entries

    entries.append(MaximalType("point stabilizer", q * (q - 1) // 2, _STABILIZER_LABELS))
    if q >= 13:
        entries.append(MaximalType(f"dihedral of order {q - 1}", q - 1, frozenset({DIHEDRAL})))
    if q not in (7, 9):
        entries.append(MaximalType(f"dihedral of order {q + 1}", q + 1, frozenset({DIHEDRAL})))
    if f % 2 == 0:
        q0 = p ** (f // 2)
        entries.append(MaximalType(f"PGL(2,{q0})", q0 * (q0 * q0 - 1), _subfield_labels(q0, True)))
    for r in primefactors(f):
        if r != 2:
            q0 = p ** (f // r)
            entries.append(MaximalType(f"PSL(2,{q0})", q0 * (q0 * q0 - 1) // 2, _subfield_labels(q0, False)))
    if (f == 1 and q % 10 in (1, 9)) or (f == 2 and p % 10 in (3, 7)):
        entries.append(MaximalType("A5", 60, frozenset({ALTERNATING_5})))
    if f == 1 and q % 8 in (3, 5) and q % 10 not in (1, 9):
        entries.append(MaximalType("A4", 12, frozenset({ALTERNATING_4})))
    if f == 1 and q % 8 in (1, 7):
        entries.append(MaximalType("S4", 24, frozenset({SYMMETRIC_4})))
    return entries


def match_inventory(inventory: List[MaximalType], fingerprint: StructureFingerprint) -> Optional[MaximalType]:
    return next((entry for entry in inventory if entry.matches(fingerprint)), None)


if __name__ == "__main__":
    # 테스트 코드
    for q in (4, 5, 7, 8, 9, 11, 13):
        print(f"PSL(2,{q}): {[(e.description, e.order) for e in psl2_maximal_inventory(q)]}")
