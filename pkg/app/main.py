"""
메인 CLI 엔트리포인트
정리 검증, 증명 중간 주장 확인, 단순군/2-생성 군 탐색, 극대 덮개와 격자 탐색
"""
import argparse
from pathlib import Path
import sys
import time
from typing import List

# 프로젝트 루트를 Python path에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from app import config
from app.harness import (
    VerificationRunner,
    conjecture_scan,
    cover_command,
    failing_labels,
    lattice_command,
    question_scan,
    verify_theorem_alternating,
    verify_theorem_psl2,
    verify_theorem_symmetric,
    witness_cycle_type_checks,
    witness_order_checks,
)
from app.modules.lattice import lattice_to_dict
from app.modules.report_writer import (
    FORMATS,
    render_csv,
    render_json,
    render_results,
    write_report,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


class FFGroupsCLI:
    """명령 하나를 실행하고 보고서를 내보내는 CLI"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.debug = args.debug or config.DEBUG
        self.output_format = args.format
        self.out = args.out
        self.timing = args.timing

        if args.cap is not None:
            config.LATTICE_CAP = args.cap
            config.ENUM_CAP = max(config.ENUM_CAP, args.cap)

        # 표준 출력으로 JSON/CSV 를 낼 때는 로그를 표준 에러로
        self.stream = sys.stdout if (self.out or self.output_format == "text") else sys.stderr
        self.runner = VerificationRunner(
            workers=args.workers,
            cap=args.cap,
            seed=args.seed,
            verbose=not args.quiet,
            stream=self.stream,
        )

    def log(self, message: str):
        if not self.args.quiet:
            print(message, file=self.stream)

    def print_step(self, step_num: int, total_steps: int, message: str):
        """단계 출력"""
        self.log(f"\n{'='*60}")
        self.log(f"[{step_num}/{total_steps}] {message}")
        self.log(f"{'='*60}")

    # ===== 명령 =====

    def collect_results(self) -> List:
        args = self.args
        if args.command == "verify":
            if args.target == "sym":
                return verify_theorem_symmetric(args.max_n, args.min_n, runner=self.runner)
            if args.target == "alt":
                return verify_theorem_alternating(args.max_n, args.min_n, runner=self.runner)
            return verify_theorem_psl2(args.q, allow_large=args.allow_large, runner=self.runner)

        if args.command == "witness":
            if args.target == "cycles":
                return [witness_cycle_type_checks(n, runner=self.runner) for n in args.n]
            return [witness_order_checks(q, allow_large=args.allow_large, runner=self.runner) for q in args.q]

        if args.target == "conjecture":
            return conjecture_scan(args.groups, runner=self.runner)
        return [question_scan(args.max_degree, args.max_order, runner=self.runner)]

    def run_verification(self) -> int:
        start_time = time.time()
        self.print_step(1, 2, f"{self.args.command} {self.args.target}")
        results = self.collect_results()

        self.print_step(2, 2, "보고서 출력")
        content = render_results(results, self.output_format, include_timing=self.timing)
        saved = write_report(content, self.out)
        if saved:
            self.log(f"✓ 보고서 저장: {saved}")

        failing = failing_labels(results)
        self.log(f"\n{'='*60}")
        if failing:
            self.log(f"✗ 실패한 대상 {len(failing)}개 / 전체 {len(results)}개")
            for label in failing:
                print(f"✗ 실패: {label}", file=sys.stderr)
        else:
            self.log(f"✓ 전체 {len(results)}개 대상 통과")
        self.log(f"소요 시간: {time.time() - start_time:.1f}초")
        self.log(f"{'='*60}\n")
        return EXIT_FAIL if failing else EXIT_PASS

    def run_cover(self) -> int:
        report = cover_command(self.args.group, self.args.subgroup)
        if self.output_format == "json":
            content = render_json(report.to_dict())
        elif self.output_format == "csv":
            content = render_csv([
                {"order": m.order, "type_label": label, "cover_size": report.cover.cover_size,
                 "is_ff": report.cover.is_ff, "generating_count": report.generating_count}
                for m, label in zip(report.cover.maximal_overgroups, report.type_labels)
            ])
        else:
            content = "\n".join(report.lines()) + "\n"
        saved = write_report(content, self.out)
        if saved:
            self.log(f"✓ 보고서 저장: {saved}")
        return EXIT_PASS

    def run_lattice(self) -> int:
        lattice = lattice_command(self.args.group, verbose=not self.args.quiet)
        data = lattice_to_dict(lattice)
        if self.output_format == "json":
            content = render_json(data)
        elif self.output_format == "csv":
            content = render_csv([
                dict(s, generators=" ".join(s["generators"])) for s in data["subgroups"]
            ])
        else:
            lines = [f"🔍 {data['ambient']} (위수 {data['order']}): 부분군 {data['subgroup_count']}개, "
                     f"켤레류 {data['class_count']}개"]
            for s in data["subgroups"]:
                if s["maximal"]:
                    lines.append(f"   극대: 위수 {s['order']}, {s['type_label'] or '-'}, ⟨{', '.join(s['generators'])}⟩")
            lines.append(f"   Frattini: 위수 {data['frattini']['order']}")
            content = "\n".join(lines) + "\n"
        saved = write_report(content, self.out)
        if saved:
            self.log(f"✓ 격자 저장: {saved}")
        return EXIT_PASS

    def run(self) -> int:
        try:
            if self.args.command == "cover":
                return self.run_cover()
            if self.args.command == "lattice":
                return self.run_lattice()
            return self.run_verification()
        except Exception as e:
            print(f"\n✗ 에러 발생: {e}", file=sys.stderr)
            if self.debug:
                import traceback
                traceback.print_exc()
            return EXIT_ERROR


def int_list(text: str) -> List[int]:
    """쉼표로 구분된 정수: 4,5,7 → [4, 5, 7]"""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수 목록이 아닙니다: {text!r}")


def str_list(text: str) -> List[str]:
    """군 표기 목록. PSL(2,q) 안의 쉼표는 구분자가 아님"""
    items, depth, current = [], 0, ""
    for ch in text:
        depth += (ch == "(") - (ch == ")")
        if ch == "," and depth == 0:
            items.append(current.strip())
            current = ""
        else:
            current += ch
    items.append(current.strip())
    return [x for x in items if x]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None, help=f"병렬 작업 수 (기본: {config.MAX_WORKERS})")
    common.add_argument("--cap", type=int, default=None, help=f"격자 계산 위수 상한 (기본: {config.LATTICE_CAP})")
    common.add_argument("--seed", type=int, default=None, help=f"등변성 표본 검사 시드 (기본: {config.SPOT_CHECK_SEED})")
    common.add_argument("--format", choices=FORMATS, default="json", help="출력 형식 (기본: json)")
    common.add_argument("--out", default=None, help="보고서 파일 (파일명만 주면 REPORTS_DIR 아래)")
    common.add_argument("--timing", action="store_true", help="JSON 에 소요 시간 포함")
    common.add_argument("--quiet", action="store_true", help="진행 로그 끄기")
    common.add_argument("-d", "--debug", action="store_true", help="디버그 모드")

    parser = argparse.ArgumentParser(
        prog="ffgroups",
        description="FF-부분군과 생성쌍 검증 도구",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
예제:
  python ffgroups.py verify sym --max-n 6 --out report.json
  python ffgroups.py verify psl2 --q 4,5,7,8,9,11,13 --workers 8
  python ffgroups.py witness cycles --n 5
  python ffgroups.py scan conjecture --groups "A5,PSL(2,7)"
  python ffgroups.py cover --group S5 --subgroup "(1 2 3)(4 5)" --format text
  python ffgroups.py lattice --group S4 --out lattice_S4.json
        """
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="정리 검증").add_subparsers(dest="target", required=True)
    for name, (low, high) in (("sym", config.SYMMETRIC_N_RANGE), ("alt", config.ALTERNATING_N_RANGE)):
        p = verify.add_parser(name, parents=[common], help=f"{'S_n' if name == 'sym' else 'A_n'} ({low} ≤ n ≤ {high})")
        p.add_argument("--max-n", type=int, required=True)
        default_min = config.SYMMETRIC_DEFAULT_MIN_N if name == "sym" else low
        p.add_argument("--min-n", type=int, default=None, help=f"최소 n (기본: {default_min})")
    p = verify.add_parser("psl2", parents=[common], help="PSL(2,q)")
    p.add_argument("--q", type=int_list, default=None, help="q 목록 (기본: 4,5,7,8,9,11,13)")
    p.add_argument("--allow-large", action="store_true", help="q=16 허용 (위수 4080)")

    witness = commands.add_parser("witness", help="증명 중간 주장 확인").add_subparsers(dest="target", required=True)
    p = witness.add_parser("cycles", parents=[common], help="S_n 순환 구조 증인")
    p.add_argument("--n", type=int_list, required=True)
    p = witness.add_parser("orders", parents=[common], help="PSL(2,q) 원소 위수 증인")
    p.add_argument("--q", type=int_list, required=True)
    p.add_argument("--allow-large", action="store_true")

    scan = commands.add_parser("scan", help="탐색").add_subparsers(dest="target", required=True)
    p = scan.add_parser("conjecture", parents=[common], help="유한 단순군 목록의 FF 검사")
    p.add_argument("--groups", type=str_list, default=None, help="군 표기 목록 (기본: A5,A6,PSL(2,7),...)")
    p = scan.add_parser("two-generator", parents=[common], help="2-생성 군에서 Φ 밖의 비-FF 부분군 탐색")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-order", type=int, default=None)

    p = commands.add_parser("cover", parents=[common], help="Δ_H(G) 계산")
    p.add_argument("--group", required=True, help="예: S5, A6, PSL(2,7), deg=4;gens=(1 2);(3 4)")
    p.add_argument("--subgroup", required=True, help='부분군 생성원, 예: "(1 2),(3 4)"')

    p = commands.add_parser("lattice", parents=[common], help="부분군 격자 내보내기")
    p.add_argument("--group", required=True)
    return parser


def main(argv=None):
    """CLI 메인 함수"""
    args = build_parser().parse_args(argv)
    cli = FFGroupsCLI(args)
    sys.exit(cli.run())


if __name__ == "__main__":
    main()
