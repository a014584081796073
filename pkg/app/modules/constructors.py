"""
모듈 C-2: 군 생성기
S_n, A_n, 순환군/이면체군, Young 부분군, 점 안정자, 사영직선 위의 PSL(2,q),
그리고 CLI용 군 표기 해석
"""
import math
import re
from collections import deque
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from app.modules.finite_field import (
    FiniteField,
    make_field,
    mobius_image,
    prime_power,
    projective_line,
)
from app.modules.group_engine import PermutationGroup, build_group
from app.modules.perm_core import Permutation, PermutationError, parse


class GroupSpecError(ValueError):
    """군 표기를 해석할 수 없을 때"""


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    return Permutation.from_cycles([list(points)], degree)


def symmetric(n: int) -> PermutationGroup:
    """S_n: 생성원 (1 2), (1 2 ... n)"""
    if n < 1:
        raise ValueError(f"n은 1 이상이어야 합니다: {n}")
    gens = []
    if n >= 2:
        gens.append(_cycle([1, 2], n))
    if n >= 3:
        gens.append(_cycle(range(1, n + 1), n))
    return build_group(n, gens, name=f"S{n}")


def alternating(n: int) -> PermutationGroup:
    """A_n: 생성원 (1 2 k), k = 3..n"""
    if n < 1:
        raise ValueError(f"n은 1 이상이어야 합니다: {n}")
    gens = [_cycle([1, 2, k], n) for k in range(3, n + 1)]
    return build_group(n, gens, name=f"A{n}")


def cyclic(n: int) -> PermutationGroup:
    """C_n = ⟨(1 2 ... n)⟩"""
    if n < 1:
        raise ValueError(f"n은 1 이상이어야 합니다: {n}")
    gens = [_cycle(range(1, n + 1), n)] if n >= 2 else []
    return build_group(n, gens, name=f"C{n}")


def dihedral(order: int) -> PermutationGroup:
    """
    위수 2m의 이면체군 (정 m각형, m ≥ 3). 이름의 첨자는 군의 위수

    생성원: 회전 (1 2 ... m), 반사 i ↦ m+2-i (점 1 고정)
    """
    if order % 2 or order < 6:
        raise ValueError(f"이면체군의 위수는 6 이상의 짝수여야 합니다: {order}")
    m = order // 2
    rotation = _cycle(range(1, m + 1), m)
    reflection = Permutation(tuple((m + 1 - i) % m + 1 for i in range(1, m + 1)))
    return build_group(m, [rotation, reflection], name=f"D{order}")


def young_subgroup(n: int, blocks: Sequence[Iterable[int]]) -> PermutationGroup:
    """
    두 블록 위의 S_A × S_B

    Args:
        n: 차수
        blocks: [n]의 두 부분 분할 (둘 다 비어 있지 않음)

    Raises:
        ValueError: 올바른 분할이 아닐 때
    """
    parts = [sorted(set(b)) for b in blocks]
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"비어 있지 않은 두 블록이 필요합니다: {blocks}")
    points = parts[0] + parts[1]
    if sorted(points) != list(range(1, n + 1)):
        raise ValueError(f"블록이 [{n}]의 분할이 아닙니다: {blocks}")
    gens = []
    for part in parts:
        if len(part) >= 2:
            gens.append(_cycle(part[:2], n))
        if len(part) >= 3:
            gens.append(_cycle(part, n))
    return build_group(n, gens)


def point_stabilizer(group: PermutationGroup, point: int) -> PermutationGroup:
    """
    점 안정자 G_x. 궤도 횡단으로 만든 Schreier 생성원 사용

    Raises:
        ValueError: 점이 범위를 벗어날 때
    """
    n = group.degree
    if not 1 <= point <= n:
        raise ValueError(f"점 {point}이(가) 1..{n} 범위를 벗어났습니다")
    ident = Permutation.identity(n)
    transversal: Dict[int, Permutation] = {point: ident}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for s in group.generators:
            y = s(x)
            if y not in transversal:
                transversal[y] = transversal[x] * s
                queue.append(y)

    gens: List[Permutation] = []
    seen = set()
    for x in sorted(transversal):
        for s in group.generators:
            h = transversal[x] * s * ~transversal[s(x)]
            if not h.is_identity() and h not in seen:
                seen.add(h)
                gens.append(h)
    return build_group(n, gens)


# ===== PSL(2,q) =====

Matrix = Tuple[Any, Any, Any, Any]


def sl2_generators(field: FiniteField) -> List[Matrix]:
    """
    SL(2,q) 생성 행렬 (a, b, c, d)

    [[1,1],[0,1]], [[0,1],[-1,0]] 두 개는 SL(2,p)만 생성하므로
    확대체에서는 대각 행렬 diag(ω, ω⁻¹)를 추가한다.
    """
    zero, one = field.zero, field.one
    gens: List[Matrix] = [(one, one, zero, one), (zero, one, field.neg(one), zero)]
    if field.f > 1:
        omega = field.primitive_element()
        gens.append((omega, zero, zero, field.inv(omega)))
    return gens


def _matrix_permutation(field: FiniteField, matrix: Matrix) -> Permutation:
    points = projective_line(field)
    infinity = field.q + 1
    images = []
    for point in points:
        image = mobius_image(field, matrix, point)
        images.append(infinity if image is None else field.index(image) + 1)
    return Permutation(tuple(images))


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def psl2(q: int) -> PermutationGroup:
    """
    PG(1,q) 위의 PSL(2,q) (차수 q+1)

    Raises:
        FieldError: q가 소수의 거듭제곱이 아닐 때
        ValueError: q < 4
    """
    prime_power(q)
    if q < 4:
        raise ValueError(f"PSL(2,{q})은(는) 지원하지 않습니다 (q ≥ 4 필요)")
    field = make_field(q)
    gens = [_matrix_permutation(field, m) for m in sl2_generators(field)]
    return build_group(q + 1, gens, name=f"PSL(2,{q})")


def describe_psl2(q: int) -> Dict[str, Any]:
    """보고서용: 체 정보와 점 번호 매기기 (번호 순 점 표기)"""
    field = make_field(q)
    labels = ["inf" if pt.is_infinity else field.format(pt.label) for pt in projective_line(field)]
    return {"field": field.describe(), "points": labels}


# ===== 군 표기 해석 =====

_NAMED_SPEC = re.compile(r"^\s*([SACD])\s*(\d+)\s*$", re.IGNORECASE)
_PSL_SPEC = re.compile(r"^\s*PSL\s*\(\s*2\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)
_GENS_SPEC = re.compile(r"^\s*deg\s*=\s*(\d+)\s*;\s*gens\s*=(.*)$", re.IGNORECASE | re.DOTALL)


def resolve_group_spec(text: str) -> PermutationGroup:
    """
    "S<n>", "A<n>", "C<n>", "D<위수>", "PSL(2,<q>)", "deg=<n>;gens=<perm>;<perm>;..." 해석

    Raises:
        GroupSpecError: 표기를 해석할 수 없을 때
    """
    match = _NAMED_SPEC.match(text)
    if match:
        kind, n = match.group(1).upper(), int(match.group(2))
        builders = {"S": symmetric, "A": alternating, "C": cyclic, "D": dihedral}
        try:
            return builders[kind](n)
        except ValueError as e:
            raise GroupSpecError(f"군 표기 {text!r}: {e}") from e

    match = _PSL_SPEC.match(text)
    if match:
        try:
            return psl2(int(match.group(1)))
        except ValueError as e:
            raise GroupSpecError(f"군 표기 {text!r}: {e}") from e

    match = _GENS_SPEC.match(text)
    if match:
        degree = int(match.group(1))
        if degree < 1:
            raise GroupSpecError(f"차수는 1 이상이어야 합니다: {text!r}")
        chunks = [c for c in match.group(2).split(";") if c.strip()]
        try:
            gens = [parse(c, degree) for c in chunks]
        except PermutationError as e:
            raise GroupSpecError(f"군 표기 {text!r}: {e}") from e
        return build_group(degree, gens)

    raise GroupSpecError(f"알 수 없는 군 표기: {text!r} (예: S5, A6, PSL(2,7), deg=4;gens=(1 2);(3 4))")


if __name__ == "__main__":
    # 테스트 코드
    for q in (4, 5, 7, 8, 9):
        g = psl2(q)
        print(f"{g}: 기대 위수 {psl2_order(q)}")
