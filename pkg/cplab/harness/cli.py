"""
命令行入口

    cplab --experiment theta-curve --lambda-grid 0.5:2.0:0.5 --n-list 4,8 --replicas 200 --seed 1 --out theta.csv

退出码：0 成功，2 参数校验失败，3 运行时错误。失败时向 stderr 打印一行
error=<validation|runtime> reason=<text>。
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from ..errors import ParameterError, PartitionError, SeparationError
from ..logging_utils import get_logger
from .config import load_config_file, resolve_config
from .experiment import run_experiment

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_RUNTIME = 3

VALIDATION_ERRORS = (ValidationError, ParameterError, PartitionError, SeparationError)


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误时按校验失败处理，而不是直接退出"""

    def error(self, message):
        raise ParameterError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="cplab", description="接触过程渗流实验")
    parser.add_argument("--experiment", help="实验名")
    parser.add_argument("--d", type=int, help="维度，缺省 2")
    parser.add_argument("--lambda", dest="lam", type=float, help="感染率 λ")
    parser.add_argument("--lambda-grid", dest="lambda_grid", help="λ 网格 lo:hi:step")
    parser.add_argument("--n", type=int)
    parser.add_argument("--n-list", dest="n_list", help="n 列表，a,b,c 或 lo:hi")
    parser.add_argument("--k", type=int, help="决策树起始半径")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--epsilon", type=float, help="块长度，缺省 n^α/8")
    parser.add_argument("--cap-N", dest="cap_n", type=int, help="重整化尺度 N（正偶数）")
    parser.add_argument("--replicas", type=int)
    parser.add_argument("--seed", dest="master_seed", type=int)
    parser.add_argument("--workers", type=int, help="进程数，缺省为可用 CPU 数")
    parser.add_argument("--out", dest="output_path", help="CSV 输出路径")
    parser.add_argument("--config", help="JSON 配置文件或侧车文件，命令行参数优先")
    parser.add_argument("--h", type=float, help="Russo 检验的差分步长")
    parser.add_argument("--sizes", help="尾部大小列表")
    parser.add_argument("--box-radius", dest="box_radius", type=int)
    parser.add_argument("--ref-multiplier", dest="ref_multiplier", type=float)
    parser.add_argument("--vertex", help="揭示度目标顶点，如 1,0")
    parser.add_argument("--field-radius", dest="field_radius", type=int)
    return parser


def parse_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """命令行参数转成配置字段（未给出的为 None）"""
    overrides = {key: value for key, value in vars(args).items() if key != "config"}
    if overrides.get("vertex") is not None:
        overrides["vertex"] = [int(a) for a in overrides["vertex"].split(",")]
    return overrides


def _reason(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(f"{'.'.join(str(p) for p in e['loc']) or 'config'}: {e['msg']}" for e in exc.errors())
    return str(exc)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        file_values = load_config_file(args.config) if args.config else None
        config = resolve_config(file_values, parse_overrides(args))
    except VALIDATION_ERRORS as exc:
        print(f"error=validation reason={_reason(exc)}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:
        print(f"error=runtime reason={_reason(exc)}", file=sys.stderr)
        return EXIT_RUNTIME

    try:
        run_experiment(config)
    except VALIDATION_ERRORS as exc:
        print(f"error=validation reason={_reason(exc)}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:
        logger.exception(f"实验 {config.experiment} 失败")
        print(f"error=runtime reason={_reason(exc)}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
