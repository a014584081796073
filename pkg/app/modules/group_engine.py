"""
모듈 B: 군 엔진
결정적 Schreier-Sims 안정자 사슬(BSGS)로 위수, 소속 판정, 생성 부분군,
원소 나열, 추이성 검사, 켤레를 제공
"""
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from app import config
from app.modules.perm_core import (
    DegreeMismatchError,
    Permutation,
    conjugate_element,
    render,
)

Images = Tuple[int, ...]


class NotInGroupError(ValueError):
    """원소 또는 부분군이 주어진 군에 속하지 않을 때"""


class CapExceededError(RuntimeError):
    """군의 위수가 설정된 상한을 넘을 때"""

    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what}: 위수 {order}이(가) 상한 {cap}을(를) 초과합니다 (--cap 또는 FFGROUPS_CAP로 조정)")
        self.order = order
        self.cap = cap


# ===== 상 튜플 위의 저수준 연산 (1부터 시작하는 점) =====

def _mul(a: Images, b: Images) -> Images:
    return tuple(b[x - 1] for x in a)


def _inv(a: Images) -> Images:
    inv = [0] * len(a)
    for i, x in enumerate(a, 1):
        inv[x - 1] = i
    return tuple(inv)


def _is_identity(a: Images) -> bool:
    return all(x == i for i, x in enumerate(a, 1))


def _first_moved(a: Images) -> int:
    for i, x in enumerate(a, 1):
        if x != i:
            return i
    raise ValueError("항등원은 움직이는 점이 없습니다")


@dataclass
class StabilizerLevel:
    """안정자 사슬의 한 단계: 기저점, 이 단계의 강생성원, 궤도 횡단"""

    base_point: int
    degree: int
    generators: List[Images] = field(default_factory=list)
    transversal: Dict[int, Images] = field(default_factory=dict)
    inverses: Dict[int, Images] = field(default_factory=dict)

    def __post_init__(self):
        ident = tuple(range(1, self.degree + 1))
        self.transversal[self.base_point] = ident
        self.inverses[self.base_point] = ident

    def extend_orbit(self):
        """기존 대표원은 유지한 채 궤도를 확장"""
        queue = deque(self.transversal)
        while queue:
            point = queue.popleft()
            rep = self.transversal[point]
            for s in self.generators:
                image = s[point - 1]
                if image not in self.transversal:
                    u = _mul(rep, s)
                    self.transversal[image] = u
                    self.inverses[image] = _inv(u)
                    queue.append(image)


class PermutationGroup:
    """
    생성원과 안정자 사슬을 가진 순열군

    생성 후에는 불변이며 모든 질의는 읽기 전용이다.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), name: Optional[str] = None):
        """
        Args:
            degree: 작용하는 점의 개수
            generators: 생성원 (모두 같은 차수)
            name: 보고서용 이름 ("S4", "PSL(2,7)" 등)
        """
        if degree < 1:
            raise ValueError(f"차수는 1 이상이어야 합니다: {degree}")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
        self.degree = degree
        self.generators = gens
        self.name = name
        self._levels: List[StabilizerLevel] = []
        self._schreier_sims()
        self._order = 1
        for level in self._levels:
            self._order *= len(level.transversal)

    # ===== Schreier-Sims =====

    def _schreier_sims(self):
        gens = [g.images for g in self.generators if not g.is_identity()]
        levels = self._levels

        # 어떤 생성원도 모든 기저점을 고정하지 않도록 기저 선택 (가장 작은 움직이는 점)
        base: List[int] = []
        for g in gens:
            if all(g[b - 1] == b for b in base):
                base.append(_first_moved(g))
        for depth, b in enumerate(base):
            level = StabilizerLevel(b, self.degree)
            fixed = base[:depth]
            level.generators = [g for g in gens if all(g[x - 1] == x for x in fixed)]
            level.extend_orbit()
            levels.append(level)

        checked: List[Set[Tuple[int, int]]] = [set() for _ in levels]
        i = len(levels) - 1
        while i >= 0:
            level = levels[i]
            restart = False
            for point in list(level.transversal):
                u = level.transversal[point]
                for gi, s in enumerate(level.generators):
                    if (point, gi) in checked[i]:
                        continue
                    image = s[point - 1]
                    schreier = _mul(_mul(u, s), level.inverses[image])
                    residue, depth = self._strip(schreier, i + 1)
                    if not _is_identity(residue):
                        if depth == len(levels):
                            levels.append(StabilizerLevel(_first_moved(residue), self.degree))
                            checked.append(set())
                        for j in range(i + 1, depth + 1):
                            levels[j].generators.append(residue)
                            levels[j].extend_orbit()
                        i = depth
                        restart = True
                        break
                    checked[i].add((point, gi))
                if restart:
                    break
            if not restart:
                i -= 1

    def _strip(self, g: Images, start: int = 0) -> Tuple[Images, int]:
        """사슬을 따라 체질(sift): (잔여, 실패한 단계)"""
        for depth in range(start, len(self._levels)):
            level = self._levels[depth]
            image = g[level.base_point - 1]
            if image not in level.transversal:
                return g, depth
            g = _mul(g, level.inverses[image])
        return g, len(self._levels)

    # ===== 속성 =====

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> List[int]:
        return [level.base_point for level in self._levels]

    @property
    def strong_generators(self) -> List[Permutation]:
        seen: Set[Images] = set()
        result = []
        for level in self._levels:
            for s in level.generators:
                if s not in seen:
                    seen.add(s)
                    result.append(Permutation(s))
        return result

    @property
    def transversals(self) -> List[Dict[int, Permutation]]:
        return [
            {point: Permutation(u) for point, u in level.transversal.items()}
            for level in self._levels
        ]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self._order == 1

    # ===== 질의 =====

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(self.degree, p.degree)
        residue, depth = self._strip(p.images)
        return depth == len(self._levels) and _is_identity(residue)

    __contains__ = contains

    def orbit(self, point: int) -> List[int]:
        orbit = [point]
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    queue.append(y)
        return sorted(orbit)

    def orbits(self) -> List[List[int]]:
        """궤도 분할 (최소점 순)"""
        seen: Set[int] = set()
        result = []
        for point in range(1, self.degree + 1):
            if point not in seen:
                orb = self.orbit(point)
                seen.update(orb)
                result.append(orb)
        return result

    def elements(self, cap: Optional[int] = None) -> List[Permutation]:
        """
        모든 원소를 사전식 순서로 나열

        g = u_k ... u_1 u_0 형태의 분해를 사슬 아래에서부터 조립한다.
        """
        cap = config.ENUM_CAP if cap is None else cap
        if self._order > cap:
            raise CapExceededError(f"원소 나열 {group_label(self)}", self._order, cap)
        current: List[Images] = [tuple(range(1, self.degree + 1))]
        for level in reversed(self._levels):
            reps = list(level.transversal.values())
            current = [_mul(e, u) for e in current for u in reps]
        return sorted(Permutation(e) for e in current)

    def random_element(self, rng: random.Random) -> Permutation:
        g: Images = tuple(range(1, self.degree + 1))
        for level in reversed(self._levels):
            points = sorted(level.transversal)
            g = _mul(g, level.transversal[rng.choice(points)])
        return Permutation(g)

    def __repr__(self) -> str:
        return f"PermutationGroup({group_label(self)}, degree={self.degree}, order={self._order})"


# ===== 모듈 수준 연산 =====

def build_group(degree: int, generators: Iterable[Permutation] = (), name: Optional[str] = None) -> PermutationGroup:
    return PermutationGroup(degree, generators, name=name)


def group_order(group: PermutationGroup) -> int:
    return group.order


def contains(group: PermutationGroup, p: Permutation) -> bool:
    return group.contains(p)


def _require_inside(ambient: PermutationGroup, elements: Iterable[Permutation], what: str):
    for g in elements:
        if g.degree != ambient.degree:
            raise DegreeMismatchError(ambient.degree, g.degree)
        if not ambient.contains(g):
            raise NotInGroupError(f"{what} {render(g)}이(가) {group_label(ambient)}에 속하지 않습니다")


def join(ambient: PermutationGroup, subgroup: PermutationGroup, extra: Sequence[Permutation] = ()) -> PermutationGroup:
    """
    ⟨H, extra⟩ 생성

    Raises:
        DegreeMismatchError: 차수 불일치
        NotInGroupError: H 또는 extra가 ambient 밖에 있을 때
    """
    if subgroup.degree != ambient.degree:
        raise DegreeMismatchError(ambient.degree, subgroup.degree)
    _require_inside(ambient, subgroup.generators, "부분군 생성원")
    _require_inside(ambient, extra, "추가 원소")
    return PermutationGroup(ambient.degree, tuple(subgroup.generators) + tuple(extra))


def enumerate_elements(group: PermutationGroup, cap: Optional[int] = None) -> List[Permutation]:
    return group.elements(cap)


def is_subgroup(a: PermutationGroup, b: PermutationGroup) -> bool:
    """A ≤ B 여부"""
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)
    return all(b.contains(g) for g in a.generators)


def equals(a: PermutationGroup, b: PermutationGroup) -> bool:
    return a.order == b.order and is_subgroup(a, b)


def is_transitive(group: PermutationGroup) -> bool:
    return len(group.orbit(1)) == group.degree


def is_2_transitive(group: PermutationGroup) -> bool:
    """순서쌍 (서로 다른 두 점) 위의 작용이 추이적인지"""
    n = group.degree
    if n < 2:
        raise ValueError(f"2-추이성 검사에는 차수 2 이상이 필요합니다: {n}")
    start = (1, 2)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for g in group.generators:
            pair = (g(x), g(y))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return len(seen) == n * (n - 1)


def conjugate(group: PermutationGroup, g: Permutation) -> PermutationGroup:
    """g⁻¹ G g"""
    if g.degree != group.degree:
        raise DegreeMismatchError(group.degree, g.degree)
    return PermutationGroup(group.degree, [conjugate_element(x, g) for x in group.generators])


def group_label(group: PermutationGroup) -> str:
    """
    보고서용 군 표기: 이름이 있으면 이름, 없으면 "deg=<n>;gens=<perm>;..."
    """
    if group.name:
        return group.name
    gens = ";".join(render(g) for g in group.generators)
    return f"deg={group.degree};gens={gens}"


if __name__ == "__main__":
    # 테스트 코드
    from app.modules.perm_core import parse

    s4 = build_group(4, [parse("(1 2)", 4), parse("(1 2 3 4)", 4)], name="S4")
    print(f"{s4}: base={s4.base}, 2-추이적={is_2_transitive(s4)}")
