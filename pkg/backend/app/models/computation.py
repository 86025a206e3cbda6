"""
计算任务模型
工作量：查询次数 N、单次查询时间 Δt、期望的约化阶数 n
"""
import math
import sys
from dataclasses import dataclass
from typing import Dict, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Δt·N 必须能表示为 float
LOG_FLOAT_MAX = math.log(sys.float_info.max)


class ComputationSpec(BaseModel):
    """计算任务（输入，校验后不可变）"""
    model_config = ConfigDict(frozen=True)

    queries: int = Field(..., description="黑盒查询次数 N")
    query_time: float = Field(1.0, description="单次查询时间 Δt（秒）")
    order: float = Field(..., description="约化阶数 n，实数，n >= 1")

    @field_validator("queries")
    @classmethod
    def _check_queries(cls, v: int) -> int:
        if v < 1:
            raise ValueError("queries must be ≥ 1")
        return v

    @field_validator("query_time")
    @classmethod
    def _check_query_time(cls, v: float) -> float:
        if not (math.isfinite(v) and v > 0.0):
            raise ValueError("query time must be > 0")
        return v

    @field_validator("order")
    @classmethod
    def _check_order(cls, v: float) -> float:
        if not (math.isfinite(v) and v >= 1.0):
            raise ValueError("order must be ≥ 1")
        return v

    @model_validator(mode="after")
    def _check_time_budget(self):
        if self.log_coordinate_time >= LOG_FLOAT_MAX:
            raise ValueError(
                f"workload outside the float range: ln(Δt·N) = {self.log_coordinate_time:.6g}"
            )
        # n > 1 要求 T = (ΔtN)^(1/n) > 1
        if self.order > 1.0 and self.log_proper_time <= 0.0:
            raise ValueError(
                f"sub-unit time budget: T = {self.proper_time:.6g} must exceed 1 for order > 1"
            )
        return self

    @property
    def log_coordinate_time(self) -> float:
        """ln(Δt·N)"""
        return math.log(self.query_time) + math.log(self.queries)

    @property
    def coordinate_time(self) -> float:
        """惯性系 I 中的总运行时间 Tⁿ = Δt·N"""
        return self.query_time * self.queries

    @property
    def log_proper_time(self) -> float:
        """ln T = ln(Δt·N) / n"""
        return self.log_coordinate_time / self.order

    @property
    def proper_time(self) -> float:
        """旅行者 O 经历的时间 T = (Δt·N)^(1/n)"""
        return math.exp(self.log_proper_time)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "queries": self.queries,
            "query_time": self.query_time,
            "order": self.order,
        }


@dataclass(frozen=True)
class EnergyRequirement:
    """最小相对论能量（自然单位，E = ratio * m0 * c^2，c = 1）"""
    energy_ratio: float
    rest_mass: float

    @property
    def energy(self) -> float:
        return self.energy_ratio * self.rest_mass

    def to_dict(self) -> Dict[str, float]:
        return {
            "energy_ratio": self.energy_ratio,
            "rest_mass": self.rest_mass,
            "energy": self.energy,
        }
