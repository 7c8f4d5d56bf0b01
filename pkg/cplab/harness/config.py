"""
实验配置与结果行
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import ParameterError
from ..lattice import Vertex
from .runner import default_workers
from .seeding import MAX_SEED

ExperimentName = Literal[
    "theta-curve",
    "tail",
    "tv-gap",
    "osss-check",
    "russo-check",
    "revealment",
    "renorm-independence",
    "renorm-tail",
]

# 需要 n（或 n 列表）的实验
NEEDS_N = {"theta-curve", "tv-gap", "osss-check", "russo-check", "revealment"}
# 需要块划分 ε 的实验
NEEDS_EPSILON = {"osss-check", "revealment"}
# 需要 k 的实验
NEEDS_K = {"osss-check", "revealment"}
# 需要重整化尺度 N 的实验
NEEDS_CAP_N = {"renorm-independence", "renorm-tail"}

# n^α/ε 的缺省值
DEFAULT_SLOTS = 8

# 单值与列表二选一；命令行给出其中一个时丢弃配置文件里的另一个
EXCLUSIVE_FIELDS = {"lam": "lambda_grid", "lambda_grid": "lam", "n": "n_list", "n_list": "n"}

CSV_COLUMNS = [
    "experiment",
    "d",
    "lambda",
    "n",
    "k",
    "alpha",
    "epsilon",
    "N",
    "estimate",
    "stderr",
    "replicas",
    "diagnostics",
    "wall_time",
]


def parse_grid(text: str) -> List[float]:
    """解析 lo:hi:step 形式的 λ 网格（包含 hi）"""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"λ 网格格式应为 lo:hi:step: {text}")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0 or hi < lo:
        raise ValueError(f"λ 网格需要 step > 0 且 hi ≥ lo: {text}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 10) for i in range(count)]


def parse_int_list(text: str) -> List[int]:
    """解析逗号分隔的整数列表，也接受 lo:hi 形式的闭区间"""
    text = text.strip()
    if ":" in text:
        lo, hi = (int(p) for p in text.split(":"))
        return list(range(lo, hi + 1))
    return [int(p) for p in text.split(",") if p.strip()]


class ExperimentConfig(BaseModel):
    """一次实验运行的完整配置

    字段别名与命令行一致：lambda、seed、N、out。
    """

    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    experiment: ExperimentName
    d: int = 2
    lam: Optional[float] = Field(default=None, alias="lambda")
    lambda_grid: Optional[List[float]] = None
    n: Optional[int] = None
    n_list: Optional[List[int]] = None
    k: Optional[int] = None
    alpha: float = 0.5
    epsilon: Optional[float] = None
    cap_n: Optional[int] = Field(default=None, alias="N")
    replicas: int
    master_seed: int = Field(default=0, alias="seed")
    workers: int = Field(default_factory=default_workers)
    output_path: str = Field(default="results.csv", alias="out")
    h: float = 0.05
    sizes: List[int] = Field(default_factory=lambda: list(range(13)))
    box_radius: int = 8
    ref_multiplier: float = 2.0
    vertex: Optional[List[int]] = None
    field_radius: Optional[int] = None

    @field_validator("lambda_grid", mode="before")
    @classmethod
    def _parse_lambda_grid(cls, value: Any):
        if isinstance(value, str):
            return parse_grid(value)
        return value

    @field_validator("n_list", "sizes", mode="before")
    @classmethod
    def _parse_int_list(cls, value: Any):
        if isinstance(value, str):
            return parse_int_list(value)
        return value

    @model_validator(mode="after")
    def _check(self) -> "ExperimentConfig":
        if self.d < 2:
            raise ValueError(f"维度必须 ≥ 2: {self.d}")
        if not 0 < self.alpha < 1.0 / (self.d - 1):
            raise ValueError(f"α 必须满足 0 < α < 1/(d-1) = {1.0 / (self.d - 1):.4g}: {self.alpha}")
        if self.replicas < 1:
            raise ValueError(f"副本数必须为正整数: {self.replicas}")
        if not 0 <= self.master_seed < MAX_SEED:
            raise ValueError(f"主种子必须是 64 位非负整数: {self.master_seed}")
        if self.workers < 1:
            raise ValueError(f"worker 数必须为正整数: {self.workers}")
        if self.lam is not None and self.lambda_grid:
            raise ValueError(f"lambda 与 lambda_grid 只能给出一个: {self.lam}, {self.lambda_grid}")
        if self.n is not None and self.n_list:
            raise ValueError(f"n 与 n_list 只能给出一个: {self.n}, {self.n_list}")

        lambdas = self.lambdas
        if not lambdas:
            raise ValueError("必须给出 lambda 或 lambda_grid")
        if any(lam <= 0 for lam in lambdas):
            raise ValueError(f"λ 必须为正数: {lambdas}")
        if any(a >= b for a, b in zip(lambdas, lambdas[1:])):
            raise ValueError(f"λ 网格必须严格递增: {lambdas}")

        ns = self.ns
        if self.experiment in NEEDS_N:
            if not ns:
                raise ValueError(f"实验 {self.experiment} 需要 n 或 n_list")
            if ns[0] < 1 or any(a >= b for a, b in zip(ns, ns[1:])):
                raise ValueError(f"n 列表必须是严格递增的正整数: {ns}")
        if self.experiment in NEEDS_K:
            if self.k is None:
                self.k = max(1, ns[0] // 2)
            if any(not 1 <= self.k <= n for n in ns):
                raise ValueError(f"k 必须满足 1 ≤ k ≤ n: k={self.k}, n={ns}")
        if self.experiment in NEEDS_EPSILON:
            # 延迟导入，避免 harness 与 osss 的循环依赖
            from ..osss.blocks import BlockPartition

            for n in ns:
                BlockPartition(n, self.alpha, self.epsilon_for(n), self.d)
        if self.experiment in NEEDS_CAP_N:
            if self.cap_n is None or self.cap_n < 2 or self.cap_n % 2:
                raise ValueError(f"实验 {self.experiment} 需要正偶数 N: {self.cap_n}")
        if self.experiment == "russo-check" and any(lam - self.h <= 0 for lam in lambdas):
            raise ValueError(f"h 过大，需要 λ - h > 0: λ={lambdas}, h={self.h}")
        if self.experiment == "tv-gap" and self.ref_multiplier <= 1:
            raise ValueError(f"参考半径倍数必须大于 1: {self.ref_multiplier}")
        if self.experiment in {"tail", "renorm-tail"}:
            if not self.sizes or self.sizes[0] < 0 or any(a >= b for a, b in zip(self.sizes, self.sizes[1:])):
                raise ValueError(f"sizes 必须是严格递增的非负整数: {self.sizes}")
        if self.box_radius < 1:
            raise ValueError(f"盒子半径必须为正整数: {self.box_radius}")
        if self.vertex is not None and len(self.vertex) != self.d:
            raise ValueError(f"vertex 维度与 d 不一致: {self.vertex}")
        return self

    @property
    def lambdas(self) -> List[float]:
        if self.lambda_grid:
            return list(self.lambda_grid)
        return [self.lam] if self.lam is not None else []

    @property
    def ns(self) -> List[int]:
        if self.n_list:
            return list(self.n_list)
        return [self.n] if self.n is not None else []

    @property
    def gamma(self) -> float:
        """γ = 1 - α(d-1)"""
        return 1 - self.alpha * (self.d - 1)

    @property
    def target_vertex(self) -> Optional[Vertex]:
        return tuple(self.vertex) if self.vertex is not None else None

    def epsilon_for(self, n: int) -> float:
        """块长度 ε，缺省取 n^α/8"""
        if self.epsilon is not None:
            return self.epsilon
        return float(n) ** self.alpha / DEFAULT_SLOTS

    def sidecar_path(self) -> Path:
        return Path(self.output_path).with_suffix(".json")

    def echo(self) -> Dict[str, Any]:
        """可回读的配置字典（字段按别名）"""
        return self.model_dump(by_alias=True, mode="json")


class ResultRow(BaseModel):
    """结果表中的一行"""

    model_config = ConfigDict(populate_by_name=True)

    experiment: str
    d: int
    lam: Optional[float] = Field(default=None, alias="lambda")
    n: Optional[int] = None
    k: Optional[int] = None
    alpha: float
    epsilon: Optional[float] = None
    cap_n: Optional[int] = Field(default=None, alias="N")
    estimate: float
    stderr: float = Field(ge=0)
    replicas: int = Field(ge=1)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)
    wall_time: float = 0.0

    def to_record(self) -> Dict[str, Any]:
        """CSV 记录，diagnostics 写成 key=value; 列表"""
        record = self.model_dump(by_alias=True)
        record["diagnostics"] = format_diagnostics(self.diagnostics)
        return {column: record[column] for column in CSV_COLUMNS}


def format_diagnostics(diagnostics: Dict[str, Any]) -> str:
    return "".join(f"{key}={value};" for key, value in diagnostics.items())


def parse_diagnostics(text: str) -> Dict[str, str]:
    """format_diagnostics 的逆操作（值保持为字符串）"""
    result = {}
    for item in (text or "").split(";"):
        if "=" in item:
            key, value = item.split("=", 1)
            result[key] = value
    return result


def load_config_file(path: str) -> Dict[str, Any]:
    """读取 JSON 配置；侧车文件取其 config 键"""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ParameterError(f"配置文件必须是 JSON 对象: {path}")
    if "config" in data and isinstance(data["config"], dict):
        return dict(data["config"])
    return data


def resolve_config(file_values: Optional[Dict[str, Any]], overrides: Dict[str, Any]) -> ExperimentConfig:
    """缺省值 ← 配置文件 ← 命令行参数

    配置文件的键可以是别名（lambda、seed、N、out）或字段名，统一换成字段名后再合并。
    命令行给出 lambda 时丢弃文件中的 lambda_grid，反之亦然；n 与 n_list 同理。
    """
    aliases = {info.alias: name for name, info in ExperimentConfig.model_fields.items() if info.alias}
    values: Dict[str, Any] = {aliases.get(key, key): value for key, value in (file_values or {}).items()}
    given = {key: value for key, value in overrides.items() if value is not None}
    for key in given:
        if key in EXCLUSIVE_FIELDS:
            values.pop(EXCLUSIVE_FIELDS[key], None)
    values.update(given)
    return ExperimentConfig.model_validate(values)


def row_key(row: Dict[str, Any]) -> Tuple:
    """用于比较两次运行的行键（不含 wall_time）"""
    return tuple(row[column] for column in CSV_COLUMNS if column != "wall_time")
