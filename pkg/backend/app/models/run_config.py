"""
命令行运行配置模型
键名与命令行参数一一对应（去掉前导 --，连字符保留）
"""
from typing import Dict, Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from backend.app.models.errors import UsageError

COMMANDS = ("plan-inertial", "plan-accel", "simulate", "race", "scenario", "sweep")

# 配置文件 / 命令行键名 -> RunConfig 字段名
FLAG_FIELDS: Dict[str, str] = {
    "command": "command",
    "queries": "queries",
    "order": "order",
    "query-time-s": "query_time_s",
    "rest-mass-kg": "rest_mass_kg",
    "units": "units",
    "step": "step",
    "format": "output_format",
    "output": "output_path",
    "path": "path",
    "accel": "accel",
    "proper-time": "proper_time",
    "scenario": "scenario",
}


class RunConfig(BaseModel):
    """一次命令行调用的完整配置"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Literal["plan-inertial", "plan-accel", "simulate", "race", "scenario", "sweep"]
    queries: List[int] = Field(default_factory=list, description="N；sweep 时可多个")
    order: List[float] = Field(default_factory=list, description="n；sweep 时可多个")
    query_time_s: float = Field(1.0, description="单次查询时间 Δt（秒）")
    rest_mass_kg: Optional[float] = Field(None, description="O 的静止质量（SI 模式必填）")
    units: Literal["natural", "si"] = "natural"
    step: Optional[float] = Field(None, description="世界线积分的 τ 步长")
    output_format: Literal["json", "csv"] = "json"
    output_path: Optional[str] = None
    path: int = Field(1, description="simulate 的路径：1 匀速往返，2 四段加速")
    accel: Optional[float] = Field(None, description="显式给定的固有加速度 g")
    proper_time: Optional[float] = Field(None, description="显式给定的固有时 T")
    scenario: Optional[str] = None

    @field_validator("queries", "order", mode="before")
    @classmethod
    def _split_list(cls, v):
        # "100,1000" / 100 / [100, 1000] 都接受
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        if isinstance(v, (int, float)):
            return [v]
        return v

    @field_validator("path")
    @classmethod
    def _check_path(cls, v: int) -> int:
        if v not in (1, 2):
            raise ValueError(f"--path must be 1 or 2, got {v}")
        return v

    @model_validator(mode="after")
    def _check_units(self):
        if self.units == "si" and self.rest_mass_kg is None:
            raise ValueError("--units si requires --rest-mass-kg")
        return self

    def single(self, name: str):
        """非 sweep 命令只取一个值"""
        values = getattr(self, name)
        if not values:
            raise UsageError(f"missing required flag --{name}", key=name)
        if len(values) != 1:
            raise UsageError(f"--{name} takes a single value for {self.command}", key=name)
        return values[0]

    def to_flag_dict(self) -> Dict[str, Any]:
        """以命令行键名导出（用于输出文档回读）"""
        data: Dict[str, Any] = {}
        for flag, name in FLAG_FIELDS.items():
            value = getattr(self, name)
            if value is None or value == []:
                continue
            data[flag] = list(value) if isinstance(value, list) else value
        return data
