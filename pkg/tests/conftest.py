"""
공통 픽스처: 프로젝트 루트 경로, 전수 닫힘 오라클, slow 마커
"""
from pathlib import Path
import sys

import pytest

# 프로젝트 루트를 Python path에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from app.modules.perm_core import Permutation  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: S_6, PSL(2,13) 같은 큰 전수 검사")


def brute_force_closure(generators, degree):
    """생성원의 곱으로 닫힐 때까지 확장한 원소 집합 (Schreier-Sims 와 무관한 오라클)"""
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return elements


@pytest.fixture
def closure():
    return brute_force_closure


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
