"""
탐색 명령: 주어진 (G, H) 의 극대 덮개, 주어진 G 의 부분군 격자
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from app import config
from app.modules.constructors import resolve_group_spec
from app.modules.ff_analysis import MaximalCover, generating_elements, maximal_cover
from app.modules.fingerprint import structure_fingerprint
from app.modules.group_engine import CapExceededError, build_group, group_label, is_transitive
from app.modules.lattice import SubgroupLattice, all_subgroups, maximal_type_label
from app.modules.perm_core import parse_list


@dataclass
class CoverReport:
    cover: MaximalCover
    type_labels: List[str]
    generating_count: int

    def to_dict(self) -> Dict[str, Any]:
        data = self.cover.to_dict(self.type_labels)
        data["generating_count"] = self.generating_count
        return data

    def lines(self) -> List[str]:
        c = self.cover
        lines = [
            f"🔍 G = {c.ambient} (위수 {c.ambient_order})",
            f"   H = ⟨{', '.join(c.subgroup_generators)}⟩ (위수 {c.subgroup_order})",
            f"   극대 상위군 {len(c.maximal_overgroups)}개:",
        ]
        for m, label in zip(c.maximal_overgroups, self.type_labels):
            lines.append(f"     - 위수 {m.order}, {label}")
        lines.append(f"   |Δ_H(G)| = {c.cover_size}")
        lines.append(f"   {'✓ FF-부분군' if c.is_ff else '✗ FF-부분군 아님'}")
        lines.append(f"   생성 원소 {self.generating_count}개")
        return lines


def cover_command(group_spec: str, subgroup_text: str, cap: Optional[int] = None) -> CoverReport:
    """
    "S5" + "(1 2 3)(4 5)" 같은 입력으로 Δ_H(G) 와 생성 원소 수 계산

    Raises:
        GroupSpecError, PermutationError: 표기 오류
        NotInGroupError: H ≰ G
        ProperSubgroupError: H = G
        CapExceededError: |G| 가 상한 초과
    """
    cap = config.LATTICE_CAP if cap is None else cap
    group = resolve_group_spec(group_spec)
    if group.order > cap:
        raise CapExceededError(group_label(group), group.order, cap)
    subgroup = build_group(group.degree, parse_list(subgroup_text, group.degree))

    cover = maximal_cover(group, subgroup)
    if is_transitive(group):
        labels = [str(maximal_type_label(group, m)) for m in cover.maximal_overgroups]
    else:
        labels = [structure_fingerprint(m).label for m in cover.maximal_overgroups]
    generating = generating_elements(group, subgroup)
    return CoverReport(cover, labels, len(generating))


def lattice_command(group_spec: str, cap: Optional[int] = None, verbose: bool = False) -> SubgroupLattice:
    """군 표기로 격자 계산 (내보내기는 lattice_to_dict)"""
    return all_subgroups(resolve_group_spec(group_spec), cap=cap, verbose=verbose)
