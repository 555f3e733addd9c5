# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
运行配置

RunConfig 汇总一次命令的全部参数。命令行参数与 key=value 配置文件都先得到字符串映射，
再由 RunConfig.from_mapping 统一解析，两条路径行为一致。
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ..config import ToolkitSettings
from ..exceptions import DataIOError, InputError

FORM_COMMANDS = ("eigen", "equidist", "density", "lfunc", "cgcheck")
DEFAULT_OUTPUT_DIR = "./satotate_reports"


def parse_int_list(text: Union[str, List[int], Tuple[int, ...]], name: str) -> Tuple[int, ...]:
    """'0,-1,1' -> (0, -1, 1)"""
    if isinstance(text, (list, tuple)):
        return tuple(int(v) for v in text)
    try:
        return tuple(int(v) for v in str(text).replace(" ", "").split(",") if v != "")
    except ValueError as e:
        raise InputError(f"{name} 需要逗号分隔的整数，当前为 {text!r}") from e


def parse_eta_factors(text: Union[str, Tuple]) -> Tuple[Tuple[int, int], ...]:
    """'1:2,11:2' -> ((1, 2), (11, 2))"""
    if isinstance(text, tuple):
        return text
    factors = []
    for item in str(text).replace(" ", "").split(","):
        d, sep, r = item.partition(":")
        if not sep:
            raise InputError(f"eta 因子格式为 d:r，当前为 {item!r}")
        try:
            factors.append((int(d), int(r)))
        except ValueError as e:
            raise InputError(f"eta 因子必须为整数: {item!r}") from e
    return tuple(factors)


def load_config_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    读取 key=value 配置文件

    '#' 开头的行和空行被忽略；键中的 '-' 视为 '_'。

    Raises:
        DataIOError: 文件不可读
        InputError: 行格式错误
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataIOError(f"无法读取配置文件 {path}: {e}") from e
    values = {}
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise InputError(f"{path}:{number} 不是 key=value 格式: {line!r}")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


@dataclass
class RunConfig:
    """
    一次命令的配置

    三种 form 描述（curve / eta / label）恰好设置一个；X >= 2；workers >= 1。
    """
    command: str
    curve: Optional[Tuple[int, ...]] = None
    eta: Optional[Tuple[Tuple[int, int], ...]] = None
    label: Optional[str] = None
    level: Optional[int] = None
    steinberg: Tuple[int, ...] = ()
    method: str = "count"
    embedding_index: Optional[int] = None
    X: int = 1000
    a: int = 0
    b: int = 0
    a_max: Optional[int] = None
    b_max: int = 6
    sigma: Optional[float] = None
    t_min: float = 0.0
    t_max: float = 10.0
    t_step: float = 0.1
    degree: int = 1
    n: Optional[int] = None
    t: Tuple[int, ...] = (1, 0)
    tplus: Tuple[int, ...] = (1, 0)
    cache_dir: Optional[str] = None
    base_url: Optional[str] = None
    out: str = DEFAULT_OUTPUT_DIR
    seed: int = 0
    workers: int = 1
    timeout: float = 30.0

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        """验证配置参数"""
        if self.command in FORM_COMMANDS:
            given = [name for name in ("curve", "eta", "label") if getattr(self, name) is not None]
            if len(given) != 1:
                raise InputError(f"命令 {self.command} 需要恰好一个 --curve / --eta / --label，当前为 {given or '无'}")
            if self.eta is not None and self.level is None:
                raise InputError("--eta 需要同时给出 --level")
        if self.X < 2:
            raise InputError(f"X 必须 >= 2，当前为 {self.X}")
        if self.seed < 0:
            raise InputError(f"seed 必须 >= 0，当前为 {self.seed}")
        if self.workers < 1:
            raise InputError(f"workers 必须 >= 1，当前为 {self.workers}")
        if self.timeout <= 0:
            raise InputError(f"timeout 必须大于 0，当前为 {self.timeout}")
        if self.b < 0 or self.a < 0 or self.b_max < 0:
            raise InputError("a, b, b_max 必须非负")

    @property
    def form_kind(self) -> Optional[str]:
        for name in ("curve", "eta", "label"):
            if getattr(self, name) is not None:
                return name
        return None

    def settings(self) -> ToolkitSettings:
        """合并环境变量后的工具包配置；cache_dir / base_url 未给出时读取环境变量"""
        return ToolkitSettings.from_env(
            cache_dir=self.cache_dir,
            base_url=self.base_url,
            timeout=self.timeout,
            workers=self.workers
        )

    def to_dict(self) -> Dict[str, Any]:
        """写入报告的配置；workers 只影响执行方式，不写入，保证不同并行度报告逐字节相同"""
        return {
            "command": self.command,
            "curve": list(self.curve) if self.curve is not None else None,
            "eta": [list(f) for f in self.eta] if self.eta is not None else None,
            "label": self.label,
            "level": self.level,
            "steinberg": list(self.steinberg),
            "method": self.method,
            "embedding_index": self.embedding_index,
            "X": self.X,
            "a": self.a,
            "b": self.b,
            "a_max": self.a_max,
            "b_max": self.b_max,
            "sigma": self.sigma,
            "t_min": self.t_min,
            "t_max": self.t_max,
            "t_step": self.t_step,
            "degree": self.degree,
            "n": self.n,
            "t": list(self.t),
            "tplus": list(self.tplus),
            "seed": self.seed
        }

    @classmethod
    def from_mapping(cls, command: str, values: Mapping[str, Any]) -> "RunConfig":
        """
        由字符串映射（命令行或配置文件）构造

        Raises:
            InputError: 值无法解析或验证失败
        """
        parsers = {
            "curve": lambda v: parse_int_list(v, "curve"),
            "eta": parse_eta_factors,
            "label": str,
            "level": int,
            "steinberg": lambda v: parse_int_list(v, "steinberg"),
            "method": str,
            "embedding_index": int,
            "X": int,
            "a": int,
            "b": int,
            "a_max": int,
            "b_max": int,
            "sigma": float,
            "t_min": float,
            "t_max": float,
            "t_step": float,
            "degree": int,
            "n": int,
            "t": lambda v: parse_int_list(v, "t"),
            "tplus": lambda v: parse_int_list(v, "b"),
            "cache_dir": str,
            "base_url": str,
            "out": str,
            "seed": int,
            "workers": int,
            "timeout": float
        }
        kwargs = {}
        for key, value in values.items():
            if key not in parsers or value is None:
                continue
            try:
                kwargs[key] = parsers[key](value)
            except (TypeError, ValueError) as e:
                raise InputError(f"参数 {key} 的值无效: {value!r}") from e
        return cls(command=command, **kwargs)
