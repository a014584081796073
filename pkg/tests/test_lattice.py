"""모듈 D: 원소표와 부분군 격자"""
import json
from collections import Counter

import numpy as np
import pytest

from app.modules.constructors import alternating, cyclic, dihedral, psl2, symmetric
from app.modules.group_engine import CapExceededError, NotInGroupError, build_group
from app.modules.lattice import (
    ElementTable,
    ProperSubgroupError,
    TypeLabel,
    all_subgroups,
    frattini,
    lattice_to_dict,
    maximal_overgroups,
    maximal_subgroups,
    maximal_type_label,
    minimal_block,
    subgroup_classes,
    write_lattice_json,
)
from app.modules.perm_core import Permutation, parse, parse_list


@pytest.fixture(scope="module")
def s4_lattice():
    return all_subgroups(symmetric(4))


# ===== 원소표 =====

def test_element_table_matches_composition():
    table = ElementTable(symmetric(4))
    assert table.elements[0].is_identity()
    for a in range(0, table.size, 5):
        for b in range(table.size):
            assert table.elements[table.table[a, b]] == table.elements[a] * table.elements[b]
        assert table.table[a, table.inverse[a]] == 0


def test_element_table_find():
    table = ElementTable(alternating(4))
    assert table.find(parse("(1 2)", 4)) is None
    assert table.elements[table.index_of(parse("(1 2 3)", 4))] == parse("(1 2 3)", 4)
    with pytest.raises(NotInGroupError):
        table.index_of(parse("(1 2)", 4))


def test_element_table_orders():
    table = ElementTable(symmetric(4))
    assert Counter(table.orders.tolist()) == {1: 1, 2: 9, 3: 8, 4: 6}


def test_closure_and_double_coset():
    table = ElementTable(symmetric(3))
    h = table.generated([table.index_of(parse("(1 2)", 3))])
    assert int(h.sum()) == 2
    coset = table.double_coset(np.flatnonzero(h), table.index_of(parse("(1 3)", 3)))
    assert len(set(coset.tolist())) == 4


# ===== 격자 =====

@pytest.mark.parametrize("group,count", [
    (symmetric(3), 6), (cyclic(4), 3), (symmetric(4), 30), (alternating(4), 10),
    (dihedral(8), 10), (alternating(5), 59), (symmetric(5), 156), (psl2(7), 179),
])
def test_subgroup_counts(group, count):
    assert len(all_subgroups(group)) == count


def test_s4_lattice_structure(s4_lattice):
    assert len(s4_lattice.classes()) == 11
    maximal_orders = sorted(s4_lattice.records[i].order for i in s4_lattice.maximal_indices())
    assert maximal_orders == [6, 6, 6, 6, 8, 8, 8, 12]
    assert int(s4_lattice.frattini_mask().sum()) == 1
    assert s4_lattice.records[0].order == 1
    assert s4_lattice.records[s4_lattice.root].order == 24


def test_canonical_order(s4_lattice):
    keys = [(r.order, tuple(np.flatnonzero(r.mask))) for r in s4_lattice.records]
    assert keys == sorted(keys)


def test_class_sizes(s4_lattice):
    sizes = Counter((s4_lattice.records[c.representative].order, c.size) for c in s4_lattice.classes())
    # 위수 2: 호환 6개, (2 2) 꼴 3개 / 위수 4: 순환 3개, 정규 V4 1개, 비정규 V4 3개
    assert sizes[(2, 6)] == 1 and sizes[(2, 3)] == 1
    assert sizes[(4, 3)] == 2 and sizes[(4, 1)] == 1
    assert sizes[(8, 3)] == 1 and sizes[(12, 1)] == 1


def test_normal_subgroups_and_simplicity(s4_lattice):
    normal_orders = sorted(s4_lattice.records[i].order for i in s4_lattice.normal_indices())
    assert normal_orders == [1, 4, 12, 24]
    assert not s4_lattice.is_simple()
    assert all_subgroups(alternating(5)).is_simple()
    assert all_subgroups(cyclic(5)).is_simple()


def test_sublattice_shares_table(s4_lattice):
    i = s4_lattice.index_of(alternating(4))
    sub = s4_lattice.sublattice(i)
    assert sub.table is s4_lattice.table
    assert len(sub) == 10
    assert sub.order == 12


def test_cap_exceeded():
    with pytest.raises(CapExceededError):
        all_subgroups(symmetric(5), cap=100)


def test_maximal_subgroups():
    orders = sorted(m.order for m in maximal_subgroups(alternating(5)))
    assert Counter(orders) == {6: 10, 10: 6, 12: 5}


def test_maximal_overgroups_backends_agree(s4_lattice):
    s4 = symmetric(4)
    for i, record in enumerate(s4_lattice.records[:-1]):
        h = s4_lattice.subgroup(i)
        bfs = [s4_lattice.index_of(m) for m in maximal_overgroups(s4, h, backend="bfs")]
        filtered = [s4_lattice.index_of(m) for m in maximal_overgroups(s4, h, backend="filter", lattice=s4_lattice)]
        assert sorted(bfs) == sorted(filtered)


def test_maximal_overgroups_of_three_cycle():
    s4 = symmetric(4)
    h = build_group(4, [parse("(1 2 3)", 4)])
    orders = sorted(m.order for m in maximal_overgroups(s4, h))
    assert orders == [6, 12]


def test_maximal_overgroups_errors():
    s4 = symmetric(4)
    with pytest.raises(ProperSubgroupError):
        maximal_overgroups(s4, build_group(4, parse_list("(1 2),(1 2 3 4)")))
    with pytest.raises(NotInGroupError):
        maximal_overgroups(alternating(4), build_group(4, [parse("(1 2)", 4)]))
    with pytest.raises(ValueError):
        maximal_overgroups(s4, build_group(4, [parse("(1 2)", 4)]), backend="magic")


def test_frattini():
    assert frattini(symmetric(4)).order == 1
    assert frattini(cyclic(4)).order == 2
    phi = frattini(dihedral(8))
    assert phi.order == 2
    assert phi.contains(parse("(1 3)(2 4)", 4))
    assert frattini(cyclic(8)).order == 4


def test_subgroup_classes():
    classes = subgroup_classes(symmetric(3))
    assert [c.size for c in classes] == [1, 3, 1, 1]


# ===== 극대 부분군 유형 =====

def test_type_labels_in_s4(s4_lattice):
    s4 = symmetric(4)
    labels = Counter(str(maximal_type_label(s4, s4_lattice.subgroup(i))) for i in s4_lattice.maximal_indices())
    assert labels == {"intransitive(3,1)": 4, "imprimitive(2)": 3, "primitive": 1}


def test_type_labels_in_s5():
    s5 = symmetric(5)
    h = build_group(5, parse_list("(1 2 3),(1 2),(4 5)"))
    assert maximal_type_label(s5, h) == TypeLabel("intransitive", (3, 2))
    assert str(maximal_type_label(s5, alternating(5))) == "primitive"


def test_minimal_block():
    d8 = dihedral(8)
    blocks = minimal_block(4, d8.generators, 1, 3)
    assert blocks == [[1, 3], [2, 4]]
    assert minimal_block(4, symmetric(4).generators, 1, 2) == [[1, 2, 3, 4]]


# ===== 내보내기 =====

@pytest.mark.parametrize("group,name", [(symmetric(3), "S3"), (cyclic(4), "C4")])
def test_lattice_export_golden(group, name, golden_dir):
    with open(golden_dir / f"lattice_{name}.json", encoding="utf-8") as f:
        expected = json.load(f)
    assert lattice_to_dict(all_subgroups(group)) == expected


def test_lattice_export_s4(s4_lattice):
    data = lattice_to_dict(s4_lattice)
    assert data["subgroup_count"] == 30
    assert data["class_count"] == 11
    assert data["frattini"] == {"order": 1, "generators": []}
    maximal = [s for s in data["subgroups"] if s["maximal"]]
    assert len(maximal) == 8
    assert all(s["type_label"] for s in maximal)
    assert all(s["type_label"] is None for s in data["subgroups"] if not s["maximal"])
    assert data["subgroups"][0]["generators"] == []


def test_write_lattice_json(tmp_path):
    path = write_lattice_json(all_subgroups(symmetric(3)), tmp_path / "out" / "s3.json")
    with open(path, encoding="utf-8") as f:
        assert json.load(f)["subgroup_count"] == 6


@pytest.mark.slow
def test_s6_subgroup_count():
    lattice = all_subgroups(symmetric(6))
    assert len(lattice) == 1455
    assert len(lattice.classes()) == 56


def test_maximal_subgroup_is_its_own_overgroup():
    s3 = symmetric(3)
    a3 = alternating(3)
    overgroups = maximal_overgroups(s3, build_group(3, a3.generators))
    assert [m.order for m in overgroups] == [3]


@pytest.mark.parametrize("group", [alternating(5), psl2(5)], ids=lambda g: g.name)
def test_overgroup_backends_agree_on_class_representatives(group):
    lattice = all_subgroups(group)
    for cls in lattice.classes():
        i = cls.representative
        if i == lattice.root:
            continue
        h = lattice.subgroup(i)
        bfs = sorted(lattice.index_of(m) for m in maximal_overgroups(group, h))
        assert bfs == lattice.maximal_overgroup_indices(i)


def test_frattini_of_simple_group_is_trivial():
    assert frattini(alternating(5)).order == 1


def test_class_sizes_partition(s4_lattice):
    assert sum(c.size for c in s4_lattice.classes()) == len(s4_lattice)
    assert [c.size for c in all_subgroups(cyclic(4)).classes()] == [1, 1, 1]
