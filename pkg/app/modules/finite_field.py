"""
모듈 C-1: 유한체와 사영직선
GF(p^f) 다항식 산술과 PG(1,q)의 q+1개 점의 표준 번호 매기기
"""
import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint

Element = Tuple[int, ...]  # 계수 수열 (상수항부터), 길이 f


class FieldError(ValueError):
    """유한체를 만들 수 없을 때 (q가 소수의 거듭제곱이 아님 등)"""


def prime_power(q: int) -> Tuple[int, int]:
    """
    q = p^f 분해

    Raises:
        FieldError: q가 소수의 거듭제곱이 아닐 때
    """
    if q < 2:
        raise FieldError(f"q는 2 이상이어야 합니다: {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise FieldError(f"q={q}은(는) 소수의 거듭제곱이 아닙니다")
    (p, f), = factors.items()
    return int(p), int(f)


# ===== GF(p) 위의 다항식 (계수 리스트, 상수항부터) =====

def _trim(poly: List[int]) -> List[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(poly: Sequence[int], divisor: Sequence[int], p: int) -> List[int]:
    """poly mod divisor (divisor는 모닉)"""
    rem = _trim([c % p for c in poly])
    d = len(divisor) - 1
    while len(rem) - 1 >= d and rem:
        coef = rem[-1]
        shift = len(rem) - 1 - d
        for i, c in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - coef * c) % p
        _trim(rem)
    return rem


def _monic_polys(degree: int, p: int):
    """차수 degree의 모닉 다항식을 (c0, c1, ...) 사전식 순서로"""
    for coeffs in itertools.product(range(p), repeat=degree):
        yield tuple(coeffs) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """차수 1..deg/2 의 모든 모닉 인수로 나누어 보는 전수 검사"""
    degree = len(poly) - 1
    if degree <= 1:
        return degree == 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


class FiniteField:
    """
    GF(p^f): 원소는 길이 f의 계수 튜플, 법 다항식은 모닉 기약 다항식
    """

    def __init__(self, p: int, f: int, modulus: Sequence[int]):
        """
        Args:
            p: 표수 (소수)
            f: 확대 차수
            modulus: 상수항부터의 계수 (길이 f+1, 최고차 계수 1)
        """
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise FieldError(f"법 다항식은 차수 {f}의 모닉 다항식이어야 합니다: {modulus}")
        if f > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"법 다항식이 기약이 아닙니다: {modulus}")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus: Tuple[int, ...] = tuple(modulus)
        # 표준 원소 순서: 계수 튜플 (c0, c1, ...)의 사전식 순서
        self.elements: List[Element] = [tuple(c) for c in itertools.product(range(p), repeat=f)]
        self._index: Dict[Element, int] = {e: i for i, e in enumerate(self.elements)}

    @property
    def zero(self) -> Element:
        return (0,) * self.f

    @property
    def one(self) -> Element:
        return (1,) + (0,) * (self.f - 1)

    def index(self, x: Element) -> int:
        return self._index[x]

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % self.p for a in x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, x: Element, y: Element) -> Element:
        product = [0] * (2 * self.f - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    product[i + j] += a * b
        rem = _poly_mod(product, self.modulus, self.p)
        return tuple(rem) + (0,) * (self.f - len(rem))

    def pow(self, x: Element, exponent: int) -> Element:
        result = self.one
        base = x
        while exponent > 0:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def inv(self, x: Element) -> Element:
        if x == self.zero:
            raise ZeroDivisionError("0의 역원은 없습니다")
        return self.pow(x, self.q - 2)

    def div(self, x: Element, y: Element) -> Element:
        return self.mul(x, self.inv(y))

    def multiplicative_order(self, x: Element) -> int:
        if x == self.zero:
            raise ZeroDivisionError("0은 곱셈군의 원소가 아닙니다")
        k, y = 1, x
        while y != self.one:
            y = self.mul(y, x)
            k += 1
        return k

    def primitive_element(self) -> Element:
        """표준 순서에서 가장 앞선 원시원 (곱셈 위수 q-1)"""
        for x in self.elements[1:]:
            if self.multiplicative_order(x) == self.q - 1:
                return x
        raise FieldError(f"GF({self.q})에서 원시원을 찾지 못했습니다")

    def format(self, x: Element) -> str:
        """사람이 읽는 표기: 소체는 정수, 확대체는 다항식 (예: "x+1")"""
        if self.f == 1:
            return str(x[0])
        terms = []
        for power in range(self.f - 1, -1, -1):
            c = x[power]
            if not c:
                continue
            coef = "" if c == 1 and power else str(c)
            var = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            terms.append(f"{coef}{var}")
        return "+".join(terms) if terms else "0"

    def describe(self) -> Dict[str, object]:
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus)}

    def __repr__(self) -> str:
        return f"FiniteField(GF({self.q}), modulus={list(self.modulus)})"


def make_field(q: int) -> FiniteField:
    """
    GF(q) 생성. 법 다항식은 사전식으로 가장 작은 모닉 기약 다항식

    Args:
        q: 소수의 거듭제곱

    Returns:
        FiniteField (소체는 법 x)
    """
    p, f = prime_power(q)
    if f == 1:
        return FiniteField(p, 1, (0, 1))
    for modulus in _monic_polys(f, p):
        if is_irreducible(modulus, p):
            return FiniteField(p, f, modulus)
    raise FieldError(f"GF({p})에서 차수 {f}의 기약 다항식을 찾지 못했습니다")


@dataclass(frozen=True)
class ProjectivePoint:
    """PG(1,q)의 점: 아핀점 z 또는 ∞ (label=None)"""

    label: Optional[Element]
    index: int

    @property
    def is_infinity(self) -> bool:
        return self.label is None


def projective_line(field: FiniteField) -> List[ProjectivePoint]:
    """아핀점은 표준 원소 순서로 1..q, ∞는 q+1"""
    points = [ProjectivePoint(z, i) for i, z in enumerate(field.elements, 1)]
    points.append(ProjectivePoint(None, field.q + 1))
    return points


def mobius_image(field: FiniteField, matrix: Sequence[Element], point: ProjectivePoint) -> Optional[Element]:
    """
    z ↦ (az+b)/(cz+d). None은 ∞

    Args:
        matrix: (a, b, c, d)
    """
    a, b, c, d = matrix
    if point.is_infinity:
        if c == field.zero:
            return None
        return field.div(a, c)
    z = point.label
    denominator = field.add(field.mul(c, z), d)
    if denominator == field.zero:
        return None
    return field.div(field.add(field.mul(a, z), b), denominator)


if __name__ == "__main__":
    # 테스트 코드
    for q in (4, 5, 8, 9):
        field = make_field(q)
        print(f"GF({q}): modulus={list(field.modulus)}, 원시원={field.format(field.primitive_element())}")
