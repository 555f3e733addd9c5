# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
命令行入口 satotate

用法示例:
    satotate eigen --curve 0,-1,1,-10,-20 --X 1000
    satotate equidist --eta 1:2,11:2 --level 11 --X 10000 --workers 4
    satotate tset --degree 2
    satotate weightlat --n 3 --t 2,1,0 --b 2,1,0
    satotate --list-commands

stdout 只输出最终报告路径；日志写到 stderr。
退出码：0 成功，1 数值约定失败，2 用法错误，3 I/O 或网络错误。
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..exceptions import SatoTateError
from .commands import (
    cmd_eigen,
    cmd_equidist,
    cmd_density,
    cmd_tset,
    cmd_lfunc,
    cmd_cgcheck,
    cmd_weightlat,
)
from .registry import CommandRegistry
from .run_config import RunConfig, load_config_file

logger = logging.getLogger(__name__)


def default_registry() -> CommandRegistry:
    registry = CommandRegistry()
    registry.register("eigen", cmd_eigen, category="forms")
    registry.register("equidist", cmd_equidist, category="statistics")
    registry.register("density", cmd_density, category="ordinarity")
    registry.register("tset", cmd_tset, category="ordinarity")
    registry.register("lfunc", cmd_lfunc, category="lfunc")
    registry.register("cgcheck", cmd_cgcheck, category="lfunc")
    registry.register("weightlat", cmd_weightlat, category="weightlat")
    return registry


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value 配置文件，命令行参数优先")
    p.add_argument("--cache-dir", dest="cache_dir", help="缓存目录（默认读取 SATOTATE_CACHE_DIR）")
    p.add_argument("--out", help="报告输出目录")
    p.add_argument("--seed", help="equidist 报告中 Haar 基线抽样的随机种子")
    p.add_argument("--workers", help="进程数")
    p.add_argument("--log-level", dest="log_level", default="WARNING",
                   choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="日志级别")


def _add_form(p: argparse.ArgumentParser) -> None:
    p.add_argument("--curve", help="椭圆曲线系数 a1,a2,a3,a4,a6 或 A,B")
    p.add_argument("--eta", help="eta 乘积因子 d:r,d:r,...（需 --level）")
    p.add_argument("--label", help="远程数据库 newform 标签，如 11.2.a.a")
    p.add_argument("--level", help="级 N")
    p.add_argument("--steinberg", help="eta 后端声明的 Steinberg 素数，逗号分隔")
    p.add_argument("--method", choices=["count", "charsum"], help="曲线点计数方法")
    p.add_argument("--embedding-index", dest="embedding_index", help="系数域复嵌入的下标")
    p.add_argument("--base-url", dest="base_url", help="远程 API 地址（默认读取 SATOTATE_BASE_URL）")
    p.add_argument("--timeout", help="HTTP 超时秒数")
    p.add_argument("--X", dest="X", help="素数上界")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satotate",
        description="模形式 Sato–Tate 数值验证工具",
        argument_default=argparse.SUPPRESS
    )
    parser.add_argument("--list-commands", dest="list_commands", action="store_true",
                        default=False, help="列出全部子命令")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("eigen", help="计算并缓存 a_p", argument_default=argparse.SUPPRESS)
    _add_form(p)
    _add_common(p)

    p = sub.add_parser("equidist", help="等分布报告", argument_default=argparse.SUPPRESS)
    _add_form(p)
    p.add_argument("--a-max", dest="a_max", help="Weyl 表 a 的上界（默认 m-1）")
    p.add_argument("--b-max", dest="b_max", help="Weyl 表 b 的上界")
    _add_common(p)

    p = sub.add_parser("density", help="普通素数密度", argument_default=argparse.SUPPRESS)
    _add_form(p)
    _add_common(p)

    p = sub.add_parser("tset", help="T 集", argument_default=argparse.SUPPRESS)
    p.add_argument("--degree", help="次数 1..6")
    _add_common(p)

    p = sub.add_parser("lfunc", help="对称幂 L 函数非零性扫描", argument_default=argparse.SUPPRESS)
    _add_form(p)
    p.add_argument("--a", help="扭指数")
    p.add_argument("--b", help="对称幂次数")
    p.add_argument("--sigma", help="实部（默认收敛横坐标 + 0.5）")
    p.add_argument("--t-min", dest="t_min", help="虚部下界")
    p.add_argument("--t-max", dest="t_max", help="虚部上界")
    p.add_argument("--t-step", dest="t_step", help="虚部步长")
    _add_common(p)

    p = sub.add_parser("cgcheck", help="Clebsch–Gordan 局部因子检查", argument_default=argparse.SUPPRESS)
    _add_form(p)
    p.add_argument("--b-max", dest="b_max", help="b 的上界")
    _add_common(p)

    p = sub.add_parser("weightlat", help="权格单项式赋值", argument_default=argparse.SUPPRESS)
    p.add_argument("--n", help="矩阵维数")
    p.add_argument("--t", help="支配权 t_1,...,t_n")
    p.add_argument("--b", dest="tplus", help="T+ 指数 b_1,...,b_n")
    _add_common(p)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    CLI 主函数

    Returns:
        退出码
    """
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    registry = default_registry()

    if args.pop("list_commands", False):
        for info in registry.list_commands():
            print(f"{info['command_id']:<10} [{info['category']}] {info['description']}")
        return 0

    command = args.pop("command", None)
    if command is None:
        parser.print_usage(sys.stderr)
        return 2

    configure_logging(args.pop("log_level", "WARNING"))
    try:
        values = {}
        config_file = args.pop("config", None)
        if config_file:
            values.update(load_config_file(config_file))
        values.update(args)
        config = RunConfig.from_mapping(command, values)
        path = registry.get(command)(config)
    except SatoTateError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return e.exit_code
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
