"""
프로젝트 설정 파일
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# 환경 변수 로드
load_dotenv()

# 프로젝트 루트 디렉토리
PROJECT_ROOT = Path(__file__).parent.parent

# 데이터 디렉토리
DATA_DIR = PROJECT_ROOT / "data"
REPORTS_DIR = Path(os.getenv("FFGROUPS_REPORTS_DIR", str(DATA_DIR / "reports")))

# 상한 설정 (군의 위수 기준)
LATTICE_CAP = int(os.getenv("FFGROUPS_CAP", "5040"))  # 부분군 격자 전체 열거 상한 (S_7)
ENUM_CAP = int(os.getenv("FFGROUPS_ENUM_CAP", "10080"))  # 원소 나열 상한

# 병렬 처리 설정
MAX_WORKERS = int(os.getenv("FFGROUPS_WORKERS", "4"))

# 켤레 등변성 표본 검사 시드
SPOT_CHECK_SEED = int(os.getenv("FFGROUPS_SEED", "1729"))

# 진행률 표시 (tqdm)
SHOW_PROGRESS = os.getenv("FFGROUPS_PROGRESS", "true").lower() == "true"

# 검증 대상 기본값
SYMMETRIC_N_RANGE = (2, 7)
SYMMETRIC_DEFAULT_MIN_N = 5  # S_4 는 FF 가 아닌 부분군이 있어 --min-n 으로 명시해야 포함
ALTERNATING_N_RANGE = (3, 7)
WITNESS_N_RANGE = (4, 7)
QUESTION_MAX_DEGREE = 7
DEFAULT_PSL2_Q = (4, 5, 7, 8, 9, 11, 13)
LARGE_PSL2_Q = (16,)  # --allow-large 플래그가 있어야 허용
CONJECTURE_GROUPS = ("A5", "A6", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)")

# 디버그 모드
DEBUG = os.getenv("DEBUG", "false").lower() == "true"
