"""모듈 B: 군 엔진 (sympy 를 독립 오라클로 사용)"""
import random

import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup as SymGroup

from app.modules.constructors import alternating, cyclic, dihedral, psl2, symmetric
from app.modules.group_engine import (
    CapExceededError,
    NotInGroupError,
    build_group,
    conjugate,
    contains,
    enumerate_elements,
    equals,
    group_order,
    group_label,
    is_2_transitive,
    is_subgroup,
    is_transitive,
    join,
)
from app.modules.perm_core import DegreeMismatchError, Permutation, parse, parse_list


def sympy_order(group):
    gens = [SymPermutation([x - 1 for x in g.images]) for g in group.generators]
    if not gens:
        return 1
    return SymGroup(gens).order()


TEST_GROUPS = [
    symmetric(1), symmetric(2), symmetric(4), symmetric(6), alternating(5), alternating(7),
    cyclic(6), dihedral(10), psl2(7), psl2(8),
    build_group(6, parse_list("(1 2)(3 4),(1 3)(2 4),(5 6)")),
    build_group(7, parse_list("(1 2 3 4 5 6 7),(2 3 5)(4 7 6)")),
]


@pytest.mark.parametrize("group", TEST_GROUPS, ids=group_label)
def test_order_matches_sympy(group):
    assert group.order == sympy_order(group)


@pytest.mark.parametrize("group", [symmetric(3), symmetric(4), dihedral(8), alternating(4), psl2(4)], ids=group_label)
def test_order_matches_brute_force_closure(group, closure):
    elements = closure(group.generators, group.degree)
    assert group.order == len(elements)
    assert set(group.elements()) == elements


def test_trivial_group():
    g = build_group(3)
    assert g.order == 1
    assert g.is_trivial()
    assert g.elements() == [Permutation.identity(3)]
    assert g.contains(Permutation.identity(3))


def test_membership():
    a5 = alternating(5)
    assert a5.contains(parse("(1 2 3)", 5))
    assert parse("(1 2)(3 4)", 5) in a5
    assert not a5.contains(parse("(1 2)", 5))
    with pytest.raises(DegreeMismatchError):
        a5.contains(parse("(1 2)", 4))


def test_base_and_strong_generators():
    s4 = symmetric(4)
    assert s4.base[0] == 1
    size = 1
    for t in s4.transversals:
        size *= len(t)
    assert size == 24
    assert build_group(4, s4.strong_generators).order == 24


def test_elements_sorted_with_identity_first():
    elements = symmetric(4).elements()
    assert elements == sorted(elements)
    assert elements[0].is_identity()
    assert len(set(elements)) == 24


def test_elements_cap():
    with pytest.raises(CapExceededError) as exc:
        symmetric(5).elements(cap=100)
    assert exc.value.order == 120
    assert exc.value.cap == 100


def test_join():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    joined = join(s4, h, [parse("(1 2)", 4)])
    assert joined.order == 6
    assert join(s4, h, [parse("(1 4)", 4)]).order == 24


def test_join_rejects_outside_elements():
    a4 = alternating(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    with pytest.raises(NotInGroupError):
        join(a4, h, [parse("(1 2)", 4)])


def test_subgroup_and_equality():
    s4 = symmetric(4)
    a4 = alternating(4)
    assert is_subgroup(a4, s4)
    assert not is_subgroup(s4, a4)
    other = build_group(4, parse_list("(1 2 3),(2 3 4)"))
    assert equals(a4, other)


def test_transitivity():
    assert is_transitive(symmetric(5))
    assert not is_transitive(build_group(4, [parse("(1 2)", 4)]))
    assert is_2_transitive(symmetric(4))
    assert is_2_transitive(alternating(4))
    assert not is_2_transitive(cyclic(5))
    with pytest.raises(ValueError):
        is_2_transitive(symmetric(1))


def test_conjugate():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2)", 4)])
    g = parse("(2 3)", 4)
    c = conjugate(h, g)
    assert c.contains(parse("(1 3)", 4))
    assert c.order == 2


def test_random_element_is_member():
    rng = random.Random(7)
    g = psl2(7)
    for _ in range(20):
        assert g.contains(g.random_element(rng))


def test_group_label():
    assert group_label(symmetric(4)) == "S4"
    assert group_label(build_group(4, parse_list("(1 2),(3 4)"))) == "deg=4;gens=(1 2);(3 4)"


def test_module_level_wrappers():
    s3 = symmetric(3)
    assert group_order(symmetric(5)) == 120
    elements = enumerate_elements(s3)
    assert [str(g) for g in elements] == ["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]
    assert contains(s3, parse("(1 3)", 3))
    with pytest.raises(CapExceededError):
        enumerate_elements(symmetric(5), cap=24)


@pytest.mark.parametrize(
    "group",
    [alternating(5), dihedral(10), psl2(7), build_group(6, parse_list("(1 2)(3 4),(1 3)(2 4),(5 6)"))],
    ids=group_label,
)
def test_contains_agrees_with_enumeration(group):
    members = set(enumerate_elements(group))
    assert all(contains(group, g) for g in members)
    rng = random.Random(2024)
    points = list(range(1, group.degree + 1))
    outside = 0
    while outside < 100:
        rng.shuffle(points)
        p = Permutation(tuple(points))
        assert contains(group, p) == (p in members)
        outside += p not in members


def test_join_with_nothing_is_the_subgroup():
    s4 = symmetric(4)
    for h in (alternating(4), build_group(4, [parse("(1 2)", 4)]), build_group(4)):
        assert equals(join(s4, h, []), h)


def test_join_is_monotone():
    s5 = symmetric(5)
    h = build_group(5, [parse("(1 2 3)", 5)])
    k = build_group(5, parse_list("(1 2 3),(1 2)", 5))
    assert is_subgroup(h, k)
    for extra in ([parse("(4 5)", 5)], [parse("(3 4)", 5)], [parse("(1 2 3 4 5)", 5)]):
        assert is_subgroup(join(s5, h, extra), join(s5, k, extra))


def test_subgroup_orders_divide_group_order():
    s4 = symmetric(4)
    for gens in ["(1 2)", "(1 2 3)", "(1 2)(3 4),(1 3)(2 4)", "(1 2 3 4)", "(1 2 3),(1 2)", "(1 2 3),(2 3 4)"]:
        h = build_group(4, parse_list(gens, 4))
        assert is_subgroup(h, s4)
        assert s4.order % h.order == 0


def test_normal_subgroup_is_conjugation_invariant():
    a4 = alternating(4)
    assert equals(conjugate(a4, parse("(1 2)", 4)), a4)
