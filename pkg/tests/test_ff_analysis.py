"""모듈 E: 극대 덮개, FF 판정, 생성 원소, 생성쌍 분류"""
import random

import numpy as np
import pytest

from app.modules.constructors import alternating, cyclic, dihedral, psl2, symmetric
from app.modules.ff_analysis import (
    classify_generating_pairs,
    cover_mask,
    frattini_subgroups_non_ff,
    generating_elements,
    is_ff,
    is_generating_pair,
    maximal_cover,
)
from app.modules.group_engine import NotInGroupError, build_group
from app.modules.lattice import ProperSubgroupError, all_subgroups, frattini
from app.modules.perm_core import parse, parse_list


@pytest.fixture(scope="module")
def s4_lattice():
    return all_subgroups(symmetric(4))


def test_cover_of_three_cycle_in_s4():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    cover = maximal_cover(s4, h)
    assert cover.cover_size == 15
    assert cover.is_ff
    assert sorted(m.order for m in cover.maximal_overgroups) == [6, 12]
    assert len(generating_elements(s4, h)) == 9


def test_cover_in_s5_unique_maximal():
    s5 = symmetric(5)
    h = build_group(5, [parse("(1 2 3)(4 5)", 5)])
    cover = maximal_cover(s5, h)
    assert [m.order for m in cover.maximal_overgroups] == [12]
    assert cover.cover_size == 12
    assert len(generating_elements(s5, h)) == 108


def test_maximal_subgroup_covers_itself():
    s3 = symmetric(3)
    h = build_group(3, [parse("(1 2)", 3)])
    cover = maximal_cover(s3, h)
    assert cover.cover_size == 2
    assert len(generating_elements(s3, h)) == 4


def test_cover_to_dict():
    s3 = symmetric(3)
    data = maximal_cover(s3, build_group(3, [parse("(1 2)", 3)])).to_dict(["intransitive(2,1)"])
    assert data["ambient"] == "S3"
    assert data["subgroup"] == {"generators": ["(1 2)"], "order": 2}
    assert data["maximal_overgroups"] == [{"order": 2, "generators": ["(1 2)"], "type_label": "intransitive(2,1)"}]
    assert data["cover_elements"] == ["()", "(1 2)"]


def test_cover_backends_agree(s4_lattice):
    s4 = symmetric(4)
    for i in range(1, len(s4_lattice) - 1):
        h = s4_lattice.subgroup(i)
        a = maximal_cover(s4, h, backend="bfs")
        b = maximal_cover(s4, h, backend="filter")
        assert np.array_equal(a.mask, b.mask)


def test_cover_errors():
    s4 = symmetric(4)
    with pytest.raises(ProperSubgroupError):
        maximal_cover(s4, build_group(4, parse_list("(1 2),(1 2 3 4)")))
    with pytest.raises(NotInGroupError):
        maximal_cover(alternating(4), build_group(4, [parse("(1 2)", 4)]))


def test_complement_identity_over_s4(s4_lattice):
    """생성 원소 집합 = G ∖ Δ_H(G) (모든 비자명 진부분군)"""
    s4 = symmetric(4)
    non_ff = []
    for i in range(1, len(s4_lattice) - 1):
        h = s4_lattice.subgroup(i)
        cover = maximal_cover(s4, h, lattice=s4_lattice)
        generating = set(generating_elements(s4, h))
        assert generating == set(s4.elements()) - set(cover.cover_elements)
        if not cover.is_ff:
            assert generating == set()
            non_ff.append(sorted(str(g) for g in s4_lattice.table.permutations(np.flatnonzero(s4_lattice.records[i].mask))))
    # V4 ◁ S4 와 그 안의 이중 호환 부분군 셋: A4 ∪ D8 ×3 = S4
    assert sorted(non_ff) == sorted([
        ["()", "(1 2)(3 4)"],
        ["()", "(1 3)(2 4)"],
        ["()", "(1 4)(2 3)"],
        ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"],
    ])


def test_double_transposition_cover_in_s4():
    s4 = symmetric(4)
    cover = maximal_cover(s4, build_group(4, [parse("(1 2)(3 4)", 4)]))
    assert sorted(m.order for m in cover.maximal_overgroups) == [8, 8, 8, 12]
    assert cover.cover_size == 24
    assert not cover.is_ff
    assert not is_generating_pair(s4, build_group(4, parse_list("(1 2)(3 4),(1 3)(2 4)")), parse("(1 2 3 4)", 4))


@pytest.mark.parametrize("group", [alternating(5), psl2(5)], ids=lambda g: g.name)
def test_complement_identity_on_class_representatives(group):
    lattice = all_subgroups(group)
    for cls in lattice.classes():
        i = cls.representative
        if i in (0, lattice.root):
            continue
        h = lattice.subgroup(i)
        cover = maximal_cover(group, h, lattice=lattice)
        assert set(generating_elements(group, h)) == set(group.elements()) - set(cover.cover_elements)


def test_bsgs_backend_agrees():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2)(3 4)", 4)])
    assert generating_elements(s4, h, backend="bsgs") == generating_elements(s4, h, backend="table")
    with pytest.raises(ValueError):
        generating_elements(s4, h, backend="magic")


def test_cover_monotone(s4_lattice):
    """H ≤ K 이면 Δ_K ⊆ Δ_H"""
    n = len(s4_lattice)
    covers = [cover_mask(s4_lattice, i) for i in range(n)]
    for k in range(1, n - 1):
        for h in range(1, n - 1):
            if s4_lattice.contains(k, h):
                assert not (covers[k] & ~covers[h]).any()


def test_cover_contains_frattini(s4_lattice):
    phi = s4_lattice.frattini_mask()
    for i in range(len(s4_lattice) - 1):
        assert not (phi & ~cover_mask(s4_lattice, i)).any()


def test_cover_conjugation_equivariant(s4_lattice):
    table = s4_lattice.table
    for i in range(len(s4_lattice) - 1):
        cover = cover_mask(s4_lattice, i)
        for g in range(table.size):
            j = s4_lattice.index_of_mask(table.conjugate_mask(s4_lattice.records[i].mask, g))
            assert np.array_equal(cover_mask(s4_lattice, j), table.conjugate_mask(cover, g))


def test_frattini_of_dihedral_is_not_ff():
    d8 = dihedral(8)
    phi = frattini(d8)
    assert not is_ff(d8, phi)
    assert generating_elements(d8, phi) == []
    assert frattini_subgroups_non_ff(d8)


def test_frattini_check_rejects_cyclic():
    with pytest.raises(ValueError):
        frattini_subgroups_non_ff(cyclic(4))


def test_cyclic_subgroups_are_ff():
    c4 = cyclic(4)
    assert is_ff(c4, frattini(c4))
    assert [str(a) for a in generating_elements(c4, frattini(c4))] == ["(1 2 3 4)", "(1 4 3 2)"]


def test_is_generating_pair():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    assert is_generating_pair(s4, h, parse("(1 4)", 4))
    assert not is_generating_pair(s4, h, parse("(1 2)", 4))
    with pytest.raises(NotInGroupError):
        is_generating_pair(alternating(4), h, parse("(1 4)", 4))


def test_classify_s3():
    report = classify_generating_pairs(symmetric(3))
    assert [(r.subgroup_order, r.class_size) for r in report.rows] == [(2, 3), (3, 1)]
    assert [r.generating_count for r in report.rows] == [4, 3]
    assert all(r.passed for r in report.rows)
    assert report.to_dict()["classes"][0] == {
        "rep_generators": ["(2 3)"],
        "subgroup_order": 2,
        "class_size": 3,
        "is_ff": True,
        "cover_size": 2,
        "generating_count": 4,
        "complement_consistent": True,
        "equivariance_ok": True,
    }


def test_classify_s4(s4_lattice):
    report = classify_generating_pairs(symmetric(4), s4_lattice)
    assert len(report.rows) == 9
    assert all(r.complement_consistent and r.equivariance_ok for r in report.rows)
    failing = sorted((r.subgroup_order, r.class_size) for r in report.rows if not r.is_ff)
    assert failing == [(2, 3), (4, 1)]
    assert [r.passed for r in report.rows].count(False) == 2
    assert all(r.generating_count == 0 for r in report.rows if not r.is_ff)
    assert sum(r.class_size for r in report.rows) == 28
    assert len(report.csv_rows()) == 9


def test_classify_independent_of_workers(s4_lattice):
    s4 = symmetric(4)
    one = classify_generating_pairs(s4, s4_lattice, workers=1).to_dict()
    many = classify_generating_pairs(s4, s4_lattice, workers=8).to_dict()
    assert one == many


def test_classify_flags_non_ff_class():
    report = classify_generating_pairs(dihedral(8))
    centre = [r for r in report.rows if r.rep_generators == ["(1 3)(2 4)"]]
    assert len(centre) == 1
    assert not centre[0].is_ff
    assert centre[0].generating_count == 0
    assert centre[0].complement_consistent
    assert not centre[0].passed


def test_trivial_subgroup_cover():
    c4 = cyclic(4)
    cover = maximal_cover(c4, build_group(4))
    assert cover.cover_size == 2 and cover.is_ff
    assert not is_ff(symmetric(3), build_group(3))


def test_cover_bounds_over_s4(s4_lattice):
    for i in range(len(s4_lattice) - 1):
        size = int(cover_mask(s4_lattice, i).sum())
        assert s4_lattice.records[i].order <= size <= 24


def test_generating_pair_with_four_cycle():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    assert is_generating_pair(s4, h, parse("(1 2 3 4)", 4))
    assert not is_generating_pair(s4, h, parse("(1 3 2)", 4))


@pytest.mark.slow
def test_complement_identity_over_s5():
    """S5 의 모든 비자명 진부분군에서 생성 원소 집합 = G ∖ Δ_H(G)"""
    s5 = symmetric(5)
    lattice = all_subgroups(s5)
    elements = set(s5.elements())
    for i in range(1, len(lattice) - 1):
        h = lattice.subgroup(i)
        cover = maximal_cover(s5, h, lattice=lattice)
        assert cover.is_ff
        assert set(generating_elements(s5, h)) == elements - set(cover.cover_elements)


@pytest.fixture(scope="module", params=["S5", "PSL(2,7)"])
def sampled_lattice(request):
    group = symmetric(5) if request.param == "S5" else psl2(7)
    lattice = all_subgroups(group)
    rng = random.Random(1729)
    sample = rng.sample(range(1, len(lattice) - 1), 25)
    return lattice, sample, rng


def test_cover_monotone_on_sample(sampled_lattice):
    lattice, sample, _ = sampled_lattice
    for h in sample:
        cover_h = cover_mask(lattice, h)
        for k in lattice.overgroups[h]:
            if k != lattice.root:
                assert not (cover_mask(lattice, k) & ~cover_h).any()


def test_cover_equivariant_on_sample(sampled_lattice):
    lattice, sample, rng = sampled_lattice
    table = lattice.table
    for h in sample:
        cover = cover_mask(lattice, h)
        for g in rng.sample(range(table.size), 5):
            j = lattice.index_of_mask(table.conjugate_mask(lattice.records[h].mask, g))
            assert np.array_equal(cover_mask(lattice, j), table.conjugate_mask(cover, g))


def test_cover_contains_frattini_on_sample(sampled_lattice):
    lattice, sample, _ = sampled_lattice
    phi = lattice.frattini_mask()
    for h in sample:
        assert not (phi & ~cover_mask(lattice, h)).any()
