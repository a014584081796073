"""
모듈 A: 순열 코어
순열의 합성/역원, 순환 구조, 홀짝성, 위수, 고정점과 순환 표기 텍스트 코덱
"""
import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Set, Tuple


class PermutationError(ValueError):
    """순열 관련 오류의 기본 클래스"""


class DegreeMismatchError(PermutationError):
    """차수가 서로 다른 순열끼리 연산할 때"""

    def __init__(self, left: int, right: int):
        super().__init__(f"차수 불일치: {left} != {right}")
        self.left = left
        self.right = right


class PermutationParseError(PermutationError):
    """순환 표기 텍스트를 해석할 수 없을 때"""


class Parity(str, Enum):
    """순열의 홀짝성"""

    EVEN = "even"
    ODD = "odd"

    def combine(self, other: "Parity") -> "Parity":
        """합성의 홀짝성 (XOR)"""
        return Parity.EVEN if self is other else Parity.ODD


@dataclass(frozen=True)
class CycleType:
    """
    순환 구조: 고정점(길이 1)까지 포함한 순환 길이의 중복집합, 내림차순
    """

    lengths: Tuple[int, ...]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(sorted(lengths, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.lengths) + "]"


@dataclass(frozen=True, order=True)
class Permutation:
    """
    {1..n} 위의 전단사. images[i-1]이 점 i의 상 (점은 1부터 시작)

    합성은 오른쪽 작용 규약: p * q 는 p를 먼저, q를 나중에 적용한다.
    정렬 순서는 상 수열의 사전식 순서 (표준 원소 순서)와 같다.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise PermutationError("차수는 1 이상이어야 합니다")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"전단사가 아닙니다: {images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """서로소 순환들의 곱으로부터 생성"""
        images = list(range(1, degree + 1))
        seen: Set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 1 or point > degree:
                    raise PermutationParseError(f"점 {point}이(가) 차수 {degree}의 범위를 벗어났습니다")
                if point in seen:
                    raise PermutationParseError(f"반복된 점: {point}")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else inverse(self)
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent) % element_order(self)):
            result = compose(result, base)
        return result

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """
        표준형 순환 목록 (고정점 제외, 최소점으로 시작, 최소점 순 정렬)
        """
        seen = [False] * (self.degree + 1)
        result = []
        for start in range(1, self.degree + 1):
            if seen[start] or self.images[start - 1] == start:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point - 1]
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Permutation({render(self)}, degree={self.degree})"


def _check_degree(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p를 먼저, q를 나중에 적용한 순열"""
    _check_degree(p, q)
    qi = q.images
    return Permutation(tuple(qi[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def conjugate_element(p: Permutation, g: Permutation) -> Permutation:
    """g⁻¹ p g"""
    return compose(compose(inverse(g), p), g)


def cycle_type(p: Permutation) -> CycleType:
    lengths = [len(c) for c in p.cycles()]
    lengths.extend([1] * (p.degree - sum(lengths)))
    return CycleType.from_lengths(lengths)


def parity(p: Permutation) -> Parity:
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return Parity.EVEN if transpositions % 2 == 0 else Parity.ODD


def element_order(p: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)


def fixed_points(p: Permutation) -> Set[int]:
    return {i for i, x in enumerate(p.images, 1) if x == i}


# ===== 텍스트 코덱 =====

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")
_POINT_SEPARATOR = re.compile(r"[\s,]+")


def render(p: Permutation) -> str:
    """
    표준 순환 표기: "(1 2 3)(4 5)", 항등원은 "()"
    """
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse(text: str, degree: Optional[int] = None) -> Permutation:
    """
    순환 표기 텍스트를 순열로 변환

    Args:
        text: "(1 2 3)(4 5)" 형태 (공백 무시, 점 사이에 쉼표 허용)
        degree: 차수 (None이면 텍스트에 나온 최대 점)

    Returns:
        Permutation

    Raises:
        PermutationParseError: 형식 오류, 반복된 점, 차수 초과
    """
    stripped = text.strip()
    if not stripped:
        raise PermutationParseError("빈 순열 텍스트")

    cycles: List[List[int]] = []
    position = 0
    for match in _CYCLE_PATTERN.finditer(stripped):
        gap = stripped[position:match.start()]
        if gap.strip():
            raise PermutationParseError(f"순환 표기 형식 오류: {text!r}")
        body = match.group(1).strip()
        if body:
            try:
                cycles.append([int(tok) for tok in _POINT_SEPARATOR.split(body)])
            except ValueError:
                raise PermutationParseError(f"정수가 아닌 점: {text!r}") from None
        position = match.end()
    if position == 0 or stripped[position:].strip():
        raise PermutationParseError(f"순환 표기 형식 오류: {text!r}")

    points = [x for c in cycles for x in c]
    if degree is None:
        degree = max(points, default=1)
    if degree < 1:
        raise PermutationParseError(f"차수는 1 이상이어야 합니다: {degree}")
    return Permutation.from_cycles(cycles, degree)


def parse_list(text: str, degree: Optional[int] = None) -> List[Permutation]:
    """
    쉼표/세미콜론으로 구분된 순열 목록 해석: "(1 2),(1 2 3 4)"

    괄호 안의 쉼표는 점 구분자로, 괄호 밖의 쉼표/세미콜론은 순열 구분자로 본다.
    degree가 None이면 목록 전체의 최대 점을 공통 차수로 쓴다.
    """
    chunks: List[str] = []
    depth = 0
    current: List[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PermutationParseError(f"괄호 짝이 맞지 않습니다: {text!r}")
        if depth == 0 and ch in ",;":
            chunks.append("".join(current))
            current = []
            continue
        current.append(ch)
    if depth != 0:
        raise PermutationParseError(f"괄호 짝이 맞지 않습니다: {text!r}")
    chunks.append("".join(current))
    chunks = [c for c in chunks if c.strip()]
    if not chunks:
        raise PermutationParseError("빈 순열 목록")

    if degree is None:
        degree = max(parse(c).degree for c in chunks)
    return [parse(c, degree) for c in chunks]


if __name__ == "__main__":
    # 테스트 코드
    p = parse("(1 2 3)(4 5)", 6)
    print(f"p = {p}, 순환 구조 {cycle_type(p)}, {parity(p).value}, 위수 {element_order(p)}")
    print(f"(1 2) * (2 3) = {parse('(1 2)', 3) * parse('(2 3)', 3)}")
