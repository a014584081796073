"""
모듈 D: 부분군 격자
작은 군의 모든 부분군 열거, 극대 부분군, 주어진 부분군의 극대 상위군,
Frattini 부분군, 부분군 켤레류, 극대 부분군 유형 라벨과 격자 내보내기
"""
import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from app import config
from app.modules.group_engine import (
    CapExceededError,
    NotInGroupError,
    PermutationGroup,
    build_group,
    group_label,
    is_transitive,
)
from app.modules.perm_core import Permutation, element_order, render


# ===== 원소표 (Cayley 표) =====

class ElementTable:
    """
    군의 원소를 사전식 순서로 번호 매긴 곱셈표

    원소 집합은 길이 |G|의 bool 마스크로 다룬다. 항등원은 항상 0번.
    """

    def __init__(self, group: PermutationGroup, cap: Optional[int] = None):
        """
        Args:
            group: 대상 군
            cap: 원소 나열 상한 (None이면 config.ENUM_CAP)
        """
        self.group = group
        self.elements: List[Permutation] = group.elements(cap)
        self.size = len(self.elements)
        self.degree = group.degree

        images = np.array([e.images for e in self.elements], dtype=np.int64) - 1
        self._images = images

        # 자릿수 d의 d진 부호로 행을 정수화 (사전식 순서 보존). 차수 16 이상은 bytes 사전 사용
        d = self.degree
        if d ** d < 2 ** 62:
            self._powers = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
            self._codes = images @ self._powers
            self._by_bytes = None
        else:
            self._powers = None
            self._codes = None
            raw = images.astype(np.uint8)
            self._by_bytes = {raw[i].tobytes(): i for i in range(self.size)}

        dtype = np.int16 if self.size < 2 ** 15 else np.int32
        table = np.empty((self.size, self.size), dtype=dtype)
        for a in range(self.size):
            # compose(a, b)[i] = b[a[i]]
            table[a] = self._lookup(images[:, images[a]])
        self.table = table
        self.inverse = self._lookup(np.argsort(images, axis=1))
        self.orders = np.array([element_order(e) for e in self.elements], dtype=np.int64)

    def _lookup(self, rows: np.ndarray) -> np.ndarray:
        if self._powers is not None:
            return np.searchsorted(self._codes, rows @ self._powers)
        d = self.degree
        raw = np.ascontiguousarray(rows, dtype=np.uint8).tobytes()
        return np.fromiter(
            (self._by_bytes[raw[k * d:(k + 1) * d]] for k in range(len(rows))),
            dtype=np.int64, count=len(rows),
        )

    def find(self, p: Permutation) -> Optional[int]:
        """원소의 번호 (군에 없으면 None)"""
        if p.degree != self.degree:
            return None
        row = np.array(p.images, dtype=np.int64) - 1
        if self._powers is not None:
            code = int(row @ self._powers)
            i = int(np.searchsorted(self._codes, code))
            if i < self.size and self._codes[i] == code:
                return i
            return None
        return self._by_bytes.get(row.astype(np.uint8).tobytes())

    def index_of(self, p: Permutation) -> int:
        i = self.find(p)
        if i is None:
            raise NotInGroupError(f"{render(p)}이(가) {group_label(self.group)}에 속하지 않습니다")
        return i

    # ===== 마스크 연산 =====

    def empty_mask(self) -> np.ndarray:
        return np.zeros(self.size, dtype=bool)

    def identity_mask(self) -> np.ndarray:
        mask = self.empty_mask()
        mask[0] = True
        return mask

    def full_mask(self) -> np.ndarray:
        return np.ones(self.size, dtype=bool)

    def closure(self, start: np.ndarray, gens: Sequence[int]) -> np.ndarray:
        """start(부분군)와 gens가 생성하는 부분군의 마스크"""
        mask = start.copy()
        if not len(gens):
            return mask
        gens = np.asarray(gens, dtype=np.int64)
        frontier = np.flatnonzero(mask)
        while frontier.size:
            products = self.table[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(products[~mask[products]])
            mask[fresh] = True
            frontier = fresh
        return mask

    def generated(self, gens: Sequence[int]) -> np.ndarray:
        return self.closure(self.identity_mask(), gens)

    def mask_of_group(self, subgroup: PermutationGroup) -> Tuple[np.ndarray, List[int]]:
        """부분군의 마스크와 생성원 번호 (군 밖의 생성원이면 NotInGroupError)"""
        gens = [self.index_of(g) for g in subgroup.generators]
        return self.generated(gens), gens

    def double_coset(self, members: np.ndarray, g: int) -> np.ndarray:
        """HgH 의 원소 번호"""
        return np.unique(self.table[np.ix_(self.table[members, g], members)])

    def conjugate_mask(self, mask: np.ndarray, g: int) -> np.ndarray:
        """g⁻¹ X g"""
        members = np.flatnonzero(mask)
        result = self.empty_mask()
        result[self.table[self.table[self.inverse[g], members], g]] = True
        return result

    def canonical_generators(self, mask: np.ndarray) -> List[int]:
        """원소 순서대로 훑으며 아직 생성되지 않은 원소를 추가 (탐색 순서와 무관)"""
        target = int(mask.sum())
        current = self.identity_mask()
        gens: List[int] = []
        for x in np.flatnonzero(mask):
            if current[x]:
                continue
            gens.append(int(x))
            current = self.closure(current, gens)
            if int(current.sum()) == target:
                break
        return gens

    def permutations(self, indices: Iterable[int]) -> List[Permutation]:
        return [self.elements[int(i)] for i in indices]

    def to_group(self, mask: np.ndarray, name: Optional[str] = None) -> PermutationGroup:
        return build_group(self.degree, self.permutations(self.canonical_generators(mask)), name=name)


def mask_key(mask: np.ndarray) -> bytes:
    return np.packbits(mask).tobytes()


def canonical_sort_key(mask: np.ndarray) -> Tuple[int, Tuple[int, ...]]:
    """(위수, 원소 번호 목록)"""
    members = np.flatnonzero(mask)
    return len(members), tuple(int(x) for x in members)


@lru_cache(maxsize=8)
def element_table(group: PermutationGroup) -> ElementTable:
    """군마다 한 번만 만드는 원소표 (ENUM_CAP 적용)"""
    return ElementTable(group)


# ===== 합집합-찾기 (궤도/블록 계산) =====

class UnionFind:
    def __init__(self, items: Iterable[Any]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def classes(self) -> List[List[Any]]:
        groups: Dict[Any, List[Any]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((sorted(c) for c in groups.values()), key=lambda c: c[0])


# ===== 부분군 격자 =====

@dataclass
class SubgroupRecord:
    index: int
    mask: np.ndarray
    order: int
    key: bytes


@dataclass
class SubgroupClass:
    class_id: int
    representative: int
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class SubgroupLattice:
    """
    중복 없는 모든 부분군 (표준 순서: 위수, 원소 번호 목록)

    마지막 원소가 격자의 꼭대기(ambient)이다. 모든 마스크는 같은 원소표 위에서 정의되므로
    부분 격자(sublattice)도 상위 격자의 원소표를 공유한다.
    """

    def __init__(self, ambient: PermutationGroup, table: ElementTable, masks: Iterable[np.ndarray]):
        self.ambient = ambient
        self.table = table
        ordered = sorted(masks, key=canonical_sort_key)
        self.records = [
            SubgroupRecord(i, m, int(m.sum()), mask_key(m)) for i, m in enumerate(ordered)
        ]
        self._by_key = {r.key: r.index for r in self.records}
        self.root = len(self.records) - 1

        # 포함 관계: matrix[j, x] = x ∈ H_j
        matrix = np.stack([r.mask for r in self.records])
        self.overgroups: List[Tuple[int, ...]] = []
        for r in self.records:
            supersets = matrix[:, np.flatnonzero(r.mask)].all(axis=1)
            supersets[r.index] = False
            self.overgroups.append(tuple(int(j) for j in np.flatnonzero(supersets)))
        self.maximal_flags = [
            r.index != self.root and self.overgroups[r.index] == (self.root,)
            for r in self.records
        ]
        self._groups: Dict[int, PermutationGroup] = {}
        self._classes: Optional[List[SubgroupClass]] = None

    def __len__(self) -> int:
        return len(self.records)

    @property
    def order(self) -> int:
        return self.records[self.root].order

    def subgroup(self, i: int) -> PermutationGroup:
        if i not in self._groups:
            name = self.ambient.name if i == self.root else None
            self._groups[i] = self.table.to_group(self.records[i].mask, name=name)
        return self._groups[i]

    @property
    def subgroups(self) -> List[PermutationGroup]:
        return [self.subgroup(i) for i in range(len(self.records))]

    def index_of_mask(self, mask: np.ndarray) -> int:
        key = mask_key(mask)
        if key not in self._by_key:
            raise NotInGroupError("격자에 없는 원소 집합입니다")
        return self._by_key[key]

    def index_of(self, subgroup: PermutationGroup) -> int:
        mask, _ = self.table.mask_of_group(subgroup)
        return self.index_of_mask(mask)

    def maximal_indices(self) -> List[int]:
        return [i for i, flag in enumerate(self.maximal_flags) if flag]

    def maximal_overgroup_indices(self, i: int) -> List[int]:
        """H_i 를 포함하는 극대 부분군 (H_i 자신 포함)"""
        candidates = [i] + list(self.overgroups[i])
        return [j for j in candidates if self.maximal_flags[j]]

    def frattini_mask(self) -> np.ndarray:
        maximals = self.maximal_indices()
        if not maximals:
            return self.records[self.root].mask.copy()
        return np.logical_and.reduce([self.records[j].mask for j in maximals])

    def contains(self, outer: int, inner: int) -> bool:
        return outer == inner or outer in self.overgroups[inner]

    # ===== 켤레류 =====

    def classes(self) -> List[SubgroupClass]:
        """꼭대기 군의 켤레 작용에 대한 궤도. 대표는 표준 순서상 가장 앞선 원소"""
        if self._classes is None:
            conjugators = self.table.canonical_generators(self.records[self.root].mask)
            uf = UnionFind(range(len(self.records)))
            for r in self.records:
                for g in conjugators:
                    uf.union(r.index, self.index_of_mask(self.table.conjugate_mask(r.mask, g)))
            self._classes = [
                SubgroupClass(class_id, members[0], tuple(members))
                for class_id, members in enumerate(uf.classes())
            ]
        return self._classes

    def class_ids(self) -> List[int]:
        ids = [0] * len(self.records)
        for c in self.classes():
            for i in c.members:
                ids[i] = c.class_id
        return ids

    def normal_indices(self) -> List[int]:
        """정규 부분군 = 크기 1인 켤레류"""
        return [c.representative for c in self.classes() if c.size == 1]

    def is_simple(self) -> bool:
        return len(self) > 1 and len(self.normal_indices()) == 2

    def sublattice(self, i: int) -> "SubgroupLattice":
        """H_i 의 부분군 격자"""
        members = [j for j in range(len(self.records)) if self.contains(i, j)]
        return SubgroupLattice(self.subgroup(i), self.table, [self.records[j].mask for j in members])


# ===== 격자 구성 =====

def _enumerate_masks(table: ElementTable, root: np.ndarray, desc: str, verbose: bool) -> List[np.ndarray]:
    """
    순환 부분군을 씨앗으로 ⟨H, g⟩ 확장을 반복. 같은 HgH 는 같은 결과이므로 한 번만 계산
    """
    target = int(root.sum())
    candidates = np.flatnonzero(root)
    found: Dict[bytes, np.ndarray] = {}
    gens_of: Dict[bytes, List[int]] = {}
    queue: deque = deque()

    def register(mask: np.ndarray, gens: List[int]):
        key = mask_key(mask)
        if key in found:
            return
        found[key] = mask
        gens_of[key] = gens
        if 1 < int(mask.sum()) < target:
            queue.append(key)

    register(table.identity_mask(), [])
    for g in candidates:
        register(table.generated([int(g)]), [int(g)])

    with tqdm(desc=desc, unit="군", disable=not (verbose and config.SHOW_PROGRESS)) as progress:
        while queue:
            key = queue.popleft()
            mask, gens = found[key], gens_of[key]
            members = np.flatnonzero(mask)
            covered = mask.copy()
            for g in candidates:
                if covered[g]:
                    continue
                covered[table.double_coset(members, int(g))] = True
                register(table.closure(mask, gens + [int(g)]), gens + [int(g)])
            progress.update(1)
    return list(found.values())


def all_subgroups(group: PermutationGroup, cap: Optional[int] = None, verbose: bool = False) -> SubgroupLattice:
    """
    모든 부분군 격자

    Args:
        group: 대상 군
        cap: 위수 상한 (None이면 config.LATTICE_CAP)
        verbose: 진행률 표시

    Raises:
        CapExceededError: |G| > cap
    """
    cap = config.LATTICE_CAP if cap is None else cap
    if group.order > cap:
        raise CapExceededError(f"부분군 격자 {group_label(group)}", group.order, cap)
    table = element_table(group)
    masks = _enumerate_masks(table, table.full_mask(), f"부분군 열거 {group_label(group)}", verbose)
    return SubgroupLattice(group, table, masks)


def maximal_subgroups(group: PermutationGroup, lattice: Optional[SubgroupLattice] = None) -> List[PermutationGroup]:
    lattice = lattice or all_subgroups(group)
    return [lattice.subgroup(i) for i in lattice.maximal_indices()]


class ProperSubgroupError(ValueError):
    """진부분군이 필요한 곳에 군 전체가 주어졌을 때"""


def proper_subgroup_mask(table: ElementTable, group: PermutationGroup, subgroup: PermutationGroup) -> Tuple[np.ndarray, List[int]]:
    if subgroup.degree != group.degree:
        raise NotInGroupError(f"차수가 다른 부분군입니다: {subgroup.degree} != {group.degree}")
    mask, gens = table.mask_of_group(subgroup)
    if mask.all():
        raise ProperSubgroupError(f"부분군이 {group_label(group)} 전체와 같습니다 (진부분군이 필요)")
    return mask, gens


def maximal_overgroup_masks(table: ElementTable, mask: np.ndarray, gens: List[int], root: Optional[np.ndarray] = None) -> List[np.ndarray]:
    """
    상위군 포셋의 너비 우선 탐색. 모든 확장이 꼭대기가 되는 노드가 극대 상위군
    """
    root = table.full_mask() if root is None else root
    target = int(root.sum())
    candidates = np.flatnonzero(root)
    seen = {mask_key(mask)}
    queue = deque([(mask, gens)])
    maximal: Dict[bytes, np.ndarray] = {}
    while queue:
        current, current_gens = queue.popleft()
        members = np.flatnonzero(current)
        covered = current.copy()
        is_maximal = True
        for g in candidates:
            if covered[g]:
                continue
            covered[table.double_coset(members, int(g))] = True
            joined = table.closure(current, current_gens + [int(g)])
            if int(joined.sum()) == target:
                continue
            is_maximal = False
            key = mask_key(joined)
            if key not in seen:
                seen.add(key)
                queue.append((joined, current_gens + [int(g)]))
        if is_maximal:
            maximal[mask_key(current)] = current
    return sorted(maximal.values(), key=canonical_sort_key)


def maximal_overgroups(
    group: PermutationGroup,
    subgroup: PermutationGroup,
    backend: str = "bfs",
    lattice: Optional[SubgroupLattice] = None,
) -> List[PermutationGroup]:
    """
    H 를 포함하는 G 의 극대 부분군

    Args:
        backend: "bfs" (상위군 포셋 탐색, 기본) 또는 "filter" (전체 격자에서 거르기)

    Raises:
        NotInGroupError: H ≰ G
        ProperSubgroupError: H = G
    """
    table = lattice.table if lattice is not None else element_table(group)
    mask, gens = proper_subgroup_mask(table, group, subgroup)
    if backend == "bfs":
        return [table.to_group(m) for m in maximal_overgroup_masks(table, mask, gens)]
    if backend == "filter":
        lattice = lattice or all_subgroups(group)
        return [lattice.subgroup(j) for j in lattice.maximal_overgroup_indices(lattice.index_of_mask(mask))]
    raise ValueError(f"지원하지 않는 백엔드: {backend}")


def frattini(group: PermutationGroup, lattice: Optional[SubgroupLattice] = None) -> PermutationGroup:
    """극대 부분군의 교집합 (자명군이면 G 자신)"""
    lattice = lattice or all_subgroups(group)
    return lattice.table.to_group(lattice.frattini_mask())


def subgroup_classes(group: PermutationGroup, lattice: Optional[SubgroupLattice] = None) -> List[SubgroupClass]:
    lattice = lattice or all_subgroups(group)
    return lattice.classes()


# ===== 극대 부분군 유형 =====

@dataclass(frozen=True)
class TypeLabel:
    kind: str  # intransitive / imprimitive / primitive
    sizes: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "primitive":
            return "primitive"
        return f"{self.kind}({','.join(str(s) for s in self.sizes)})"


def minimal_block(degree: int, generators: Sequence[Permutation], a: int, b: int) -> List[List[int]]:
    """a, b 를 같은 블록에 두는 가장 작은 블록계"""
    uf = UnionFind(range(1, degree + 1))
    uf.union(a, b)
    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        for s in generators:
            u, v = s(x), s(y)
            if uf.union(u, v):
                pending.append((u, v))
    return uf.classes()


def maximal_type_label(ambient: PermutationGroup, subgroup: PermutationGroup) -> TypeLabel:
    """
    궤도가 둘 이상이면 intransitive(궤도 크기, 내림차순),
    비자명 블록계를 보존하면 imprimitive(블록 크기), 아니면 primitive
    """
    orbits = subgroup.orbits()
    if len(orbits) > 1:
        return TypeLabel("intransitive", tuple(sorted((len(o) for o in orbits), reverse=True)))
    n = subgroup.degree
    for x in range(2, n + 1):
        blocks = minimal_block(n, subgroup.generators, 1, x)
        if len(blocks) > 1:
            return TypeLabel("imprimitive", (len(blocks[0]),))
    return TypeLabel("primitive")


# ===== 내보내기 =====

def lattice_to_dict(lattice: SubgroupLattice) -> Dict[str, Any]:
    """격자 JSON: ambient, 부분군 목록(위수, 생성원, 극대 여부, 류 번호, 유형), Frattini"""
    table = lattice.table
    label_types = is_transitive(lattice.ambient)
    class_ids = lattice.class_ids()
    subgroups = []
    for r in lattice.records:
        maximal = lattice.maximal_flags[r.index]
        type_label = None
        if maximal and label_types:
            type_label = str(maximal_type_label(lattice.ambient, lattice.subgroup(r.index)))
        subgroups.append({
            "index": r.index,
            "order": r.order,
            "generators": [render(p) for p in table.permutations(table.canonical_generators(r.mask))],
            "maximal": maximal,
            "class_id": class_ids[r.index],
            "type_label": type_label,
        })
    phi = lattice.frattini_mask()
    return {
        "ambient": group_label(lattice.ambient),
        "order": lattice.order,
        "subgroup_count": len(lattice),
        "class_count": len(lattice.classes()),
        "subgroups": subgroups,
        "frattini": {
            "order": int(phi.sum()),
            "generators": [render(p) for p in table.permutations(table.canonical_generators(phi))],
        },
    }


def write_lattice_json(lattice: SubgroupLattice, output_path: Path) -> Path:
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(lattice_to_dict(lattice), f, ensure_ascii=False, indent=2)
    print(f"✓ 격자 저장: {output_path}")
    return output_path


if __name__ == "__main__":
    # 테스트 코드
    from app.modules.constructors import symmetric

    lat = all_subgroups(symmetric(4), verbose=True)
    print(f"S4: 부분군 {len(lat)}개, 극대 {len(lat.maximal_indices())}개, 켤레류 {len(lat.classes())}개")
