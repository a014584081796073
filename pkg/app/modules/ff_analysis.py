"""
모듈 E: FF 분석
극대 덮개 Δ_H(G), FF-부분군 판정, 생성 원소 집합, 켤레류별 생성쌍 분류
"""
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
from tqdm import tqdm

from app import config
from app.modules.group_engine import (
    NotInGroupError,
    PermutationGroup,
    equals,
    group_label,
    is_subgroup,
    join,
)
from app.modules.lattice import (
    ElementTable,
    ProperSubgroupError,
    SubgroupLattice,
    all_subgroups,
    element_table,
    maximal_overgroup_masks,
    proper_subgroup_mask,
)
from app.modules.perm_core import Permutation, render


@dataclass
class MaximalCover:
    """(G, H) 의 극대 상위군과 그 합집합 Δ_H(G)"""

    ambient: str
    ambient_order: int
    subgroup_generators: List[str]
    subgroup_order: int
    maximal_overgroups: List[PermutationGroup]
    cover_elements: List[Permutation]
    cover_size: int
    is_ff: bool
    mask: np.ndarray = field(repr=False)

    def to_dict(self, type_labels: Optional[List[str]] = None) -> Dict[str, Any]:
        overgroups = []
        for i, m in enumerate(self.maximal_overgroups):
            entry = {"order": m.order, "generators": [render(g) for g in m.generators]}
            if type_labels is not None:
                entry["type_label"] = type_labels[i]
            overgroups.append(entry)
        return {
            "ambient": self.ambient,
            "order": self.ambient_order,
            "subgroup": {"generators": self.subgroup_generators, "order": self.subgroup_order},
            "maximal_overgroups": overgroups,
            "cover_size": self.cover_size,
            "is_ff": self.is_ff,
            "cover_elements": [render(p) for p in self.cover_elements],
        }


def cover_mask(lattice: SubgroupLattice, index: int) -> np.ndarray:
    """격자의 H_index 를 포함하는 극대 부분군들의 합집합"""
    masks = [lattice.records[j].mask for j in lattice.maximal_overgroup_indices(index)]
    if not masks:
        return lattice.table.empty_mask()
    return np.logical_or.reduce(masks)


def generating_mask(table: ElementTable, mask: np.ndarray, gens: List[int], root: Optional[np.ndarray] = None) -> np.ndarray:
    """
    ⟨H, a⟩ = root 인 a 의 마스크 (전수 조사)

    ⟨H, a⟩ 는 이중 잉여류 HaH 에만 의존하므로 이중 잉여류마다 한 번씩 닫힘을 계산한다.
    """
    root = table.full_mask() if root is None else root
    target = int(root.sum())
    members = np.flatnonzero(mask)
    result = table.empty_mask()
    decided = mask.copy()
    for a in np.flatnonzero(root):
        if decided[a]:
            continue
        coset = table.double_coset(members, int(a))
        decided[coset] = True
        if int(table.closure(mask, gens + [int(a)]).sum()) == target:
            result[coset] = True
    return result


def maximal_cover(
    group: PermutationGroup,
    subgroup: PermutationGroup,
    backend: str = "bfs",
    lattice: Optional[SubgroupLattice] = None,
) -> MaximalCover:
    """
    Δ_H(G) 계산

    Args:
        group: G
        subgroup: H (G 의 진부분군)
        backend: "bfs" 또는 "filter" (격자 사용)
        lattice: 이미 계산한 G 의 격자 (있으면 filter 사용)

    Raises:
        NotInGroupError: H ≰ G
        ProperSubgroupError: H = G
    """
    table = lattice.table if lattice is not None else element_table(group)
    mask, gens = proper_subgroup_mask(table, group, subgroup)

    if lattice is not None or backend == "filter":
        lattice = lattice or all_subgroups(group)
        index = lattice.index_of_mask(mask)
        overgroup_masks = [lattice.records[j].mask for j in lattice.maximal_overgroup_indices(index)]
    elif backend == "bfs":
        overgroup_masks = maximal_overgroup_masks(table, mask, gens)
    else:
        raise ValueError(f"지원하지 않는 백엔드: {backend}")

    cover = np.logical_or.reduce(overgroup_masks)
    cover_size = int(cover.sum())
    return MaximalCover(
        ambient=group_label(group),
        ambient_order=group.order,
        subgroup_generators=[render(g) for g in subgroup.generators],
        subgroup_order=int(mask.sum()),
        maximal_overgroups=[table.to_group(m) for m in overgroup_masks],
        cover_elements=table.permutations(np.flatnonzero(cover)),
        cover_size=cover_size,
        is_ff=cover_size < group.order,
        mask=cover,
    )


def is_ff(group: PermutationGroup, subgroup: PermutationGroup, **kwargs) -> bool:
    """Δ_H(G) ≠ G 이면 FF-부분군"""
    return maximal_cover(group, subgroup, **kwargs).is_ff


def generating_elements(group: PermutationGroup, subgroup: PermutationGroup, backend: str = "table") -> List[Permutation]:
    """
    {a ∈ G : ⟨H, a⟩ = G} 를 전수 조사로 계산 (Δ 와 독립)

    Args:
        backend: "table" (원소표, 이중 잉여류 단위) 또는 "bsgs" (원소마다 Schreier-Sims 결합)
    """
    if backend == "table":
        table = element_table(group)
        mask, gens = proper_subgroup_mask(table, group, subgroup)
        return table.permutations(np.flatnonzero(generating_mask(table, mask, gens)))
    if backend == "bsgs":
        if not is_subgroup(subgroup, group):
            raise NotInGroupError(f"부분군이 {group_label(group)}에 포함되지 않습니다")
        if equals(subgroup, group):
            raise ProperSubgroupError(f"부분군이 {group_label(group)} 전체와 같습니다 (진부분군이 필요)")
        return [a for a in group.elements() if join(group, subgroup, [a]).order == group.order]
    raise ValueError(f"지원하지 않는 백엔드: {backend}")


def is_generating_pair(group: PermutationGroup, subgroup: PermutationGroup, element: Permutation) -> bool:
    """⟨H, a⟩ = G 여부"""
    if not group.contains(element):
        raise NotInGroupError(f"{render(element)}이(가) {group_label(group)}에 속하지 않습니다")
    return join(group, subgroup, [element]).order == group.order


def frattini_subgroups_non_ff(group: PermutationGroup, lattice: Optional[SubgroupLattice] = None) -> bool:
    """
    비순환군에서 Frattini 부분군의 모든 비자명 부분군이 FF 가 아닌지 검사 (Φ 가 자명하면 참)

    Raises:
        ValueError: 순환군 (이 성질이 성립하지 않는 경우)
    """
    lattice = lattice or all_subgroups(group)
    table = lattice.table
    if int(table.orders[np.flatnonzero(lattice.records[lattice.root].mask)].max()) == lattice.order:
        raise ValueError(f"{group_label(group)}은(는) 순환군입니다")
    phi = lattice.frattini_mask()
    phi_index = lattice.index_of_mask(phi)
    for i, r in enumerate(lattice.records):
        if r.order > 1 and lattice.contains(phi_index, i):
            if int(cover_mask(lattice, i).sum()) < lattice.order:
                return False
    return True


# ===== 생성쌍 분류 =====

@dataclass
class ClassRow:
    class_id: int
    rep_generators: List[str]
    subgroup_order: int
    class_size: int
    is_ff: bool
    cover_size: int
    generating_count: int
    complement_consistent: bool
    equivariance_ok: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rep_generators": self.rep_generators,
            "subgroup_order": self.subgroup_order,
            "class_size": self.class_size,
            "is_ff": self.is_ff,
            "cover_size": self.cover_size,
            "generating_count": self.generating_count,
            "complement_consistent": self.complement_consistent,
            "equivariance_ok": self.equivariance_ok,
        }

    @property
    def passed(self) -> bool:
        return self.is_ff and self.complement_consistent and self.equivariance_ok


@dataclass
class GeneratingPairReport:
    """켤레류마다 한 행: (H, a) 생성쌍의 개수와 Δ 여집합과의 일치 여부"""

    ambient: str
    order: int
    rows: List[ClassRow]

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient": self.ambient, "order": self.order, "classes": [r.to_dict() for r in self.rows]}

    def csv_rows(self) -> List[Dict[str, Any]]:
        result = []
        for r in self.rows:
            row = {"ambient": self.ambient, "order": self.order}
            row.update(r.to_dict())
            row["rep_generators"] = " ".join(r.rep_generators)
            result.append(row)
        return result


def _classify_class(lattice: SubgroupLattice, class_id: int, seed: int) -> ClassRow:
    """켤레류 하나의 작업 단위 (순수 함수)"""
    cls = lattice.classes()[class_id]
    table = lattice.table
    record = lattice.records[cls.representative]
    root = lattice.records[lattice.root].mask

    cover = cover_mask(lattice, record.index)
    cover_size = int(cover.sum())
    generating = generating_mask(table, record.mask, table.canonical_generators(record.mask), root)

    # 켤레 하나를 골라 Δ 의 등변성 재확인
    rng = random.Random(f"{seed}:{class_id}")
    g = int(rng.choice(np.flatnonzero(root).tolist()))
    conjugate_index = lattice.index_of_mask(table.conjugate_mask(record.mask, g))
    equivariant = np.array_equal(cover_mask(lattice, conjugate_index), table.conjugate_mask(cover, g))

    return ClassRow(
        class_id=class_id,
        rep_generators=[render(p) for p in table.permutations(table.canonical_generators(record.mask))],
        subgroup_order=record.order,
        class_size=cls.size,
        is_ff=cover_size < lattice.order,
        cover_size=cover_size,
        generating_count=int(generating.sum()),
        complement_consistent=np.array_equal(generating, root & ~cover),
        equivariance_ok=bool(equivariant),
    )


def classify_generating_pairs(
    group: PermutationGroup,
    lattice: Optional[SubgroupLattice] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None,
    verbose: bool = False,
) -> GeneratingPairReport:
    """
    진부분군이면서 비자명한 부분군의 켤레류마다 FF 여부와 생성 원소 수 계산

    Args:
        group: G
        lattice: G 의 격자 (없으면 계산)
        workers: 병렬 작업 수 (결과는 작업 수와 무관)
        seed: 등변성 표본 검사 시드
        verbose: 진행률 표시

    Returns:
        GeneratingPairReport (행은 켤레류 번호 순)
    """
    lattice = lattice or all_subgroups(group, verbose=verbose)
    workers = config.MAX_WORKERS if workers is None else max(1, workers)
    seed = config.SPOT_CHECK_SEED if seed is None else seed

    classes = lattice.classes()
    targets = [
        c.class_id for c in classes
        if 1 < lattice.records[c.representative].order and c.representative != lattice.root
    ]

    rows: List[ClassRow] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(_classify_class, lattice, class_id, seed): class_id for class_id in targets}
        for future in tqdm(
            as_completed(futures), total=len(futures),
            desc=f"생성쌍 분류 {group_label(group)}", unit="류",
            disable=not (verbose and config.SHOW_PROGRESS),
        ):
            rows.append(future.result())

    # 켤레류 번호 순서대로 정렬
    rows.sort(key=lambda r: r.class_id)
    return GeneratingPairReport(group_label(group), lattice.order, rows)


if __name__ == "__main__":
    # 테스트 코드
    from app.modules.constructors import symmetric
    from app.modules.group_engine import build_group
    from app.modules.perm_core import parse

    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    cover = maximal_cover(s4, h)
    print(f"Δ 크기 {cover.cover_size}, FF={cover.is_ff}, 생성 원소 {len(generating_elements(s4, h))}개")
