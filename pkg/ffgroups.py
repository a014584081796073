#!/usr/bin/env python3
"""
FF-부분군 검증 CLI

사용법:
  python ffgroups.py verify sym --max-n 6
  python ffgroups.py verify alt --max-n 6
  python ffgroups.py verify psl2 --q 4,5,7,8,9,11,13
  python ffgroups.py witness cycles --n 5
  python ffgroups.py witness orders --q 7
  python ffgroups.py scan conjecture
  python ffgroups.py scan two-generator --max-degree 5
  python ffgroups.py cover --group S5 --subgroup "(1 2 3)(4 5)"
  python ffgroups.py lattice --group S4
"""
from pathlib import Path
import sys

# 프로젝트 루트를 Python path에 추가
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from app.main import main


if __name__ == "__main__":
    main()
