"""
匀加速（双曲运动）相关模型
加速度单位：自然单位下为 c/秒
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from backend.app.models.computation import ComputationSpec

# 加速度直接用 float 表示；> 0 为双曲运动，= 0 为惯性退化情形
ProperAcceleration = float


class WorldlineSegment(BaseModel):
    """分段常固有加速度的一段世界线"""
    model_config = ConfigDict(frozen=True)

    proper_accel: float = Field(0.0, description="带符号的固有加速度（沿 I 系 x 轴）")
    proper_duration: float = Field(..., description="本段固有时长 τ")
    rapidity_jump: float = Field(0.0, description="本段开始时的瞬时快度跳变（冲量式加速）")

    @field_validator("proper_duration")
    @classmethod
    def _check_duration(cls, v: float) -> float:
        if not (math.isfinite(v) and v >= 0.0):
            raise ValueError("proper_duration must be ≥ 0")
        return v

    def to_dict(self) -> Dict[str, float]:
        return {
            "proper_accel": self.proper_accel,
            "proper_duration": self.proper_duration,
            "rapidity_jump": self.rapidity_jump,
        }


@dataclass(frozen=True)
class TimeMap:
    """同一条双曲世界线上的三个量：坐标时 t、固有时 τ、位移 d"""
    t: float
    tau: float
    d: float

    def to_dict(self) -> Dict[str, float]:
        return {"t": self.t, "tau": self.tau, "d": self.d}


@dataclass(frozen=True)
class FuelAccount:
    """光子火箭单段燃料账（单位 m0, m0c²；c = 1）"""
    initial_fuel_mass: float      # M
    radiated_energy: float        # E_l
    payload: float                # m0
    gamma: float                  # 段末洛伦兹因子
    gamma_beta: float             # 段末 γβ

    def energy_residual(self) -> float:
        """(M + m0) - (γ m0 + E_l)，相对值"""
        lhs = self.initial_fuel_mass + self.payload
        rhs = self.gamma * self.payload + self.radiated_energy
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))

    def momentum_residual(self) -> float:
        """0 = γ m0 u - E_l，相对于 E_l（E_l = 0 时取绝对值）"""
        diff = abs(self.gamma_beta * self.payload - self.radiated_energy)
        scale = abs(self.radiated_energy)
        return diff / scale if scale > 0.0 else diff

    def to_dict(self) -> Dict[str, float]:
        return {
            "initial_fuel_mass": self.initial_fuel_mass,
            "radiated_energy": self.radiated_energy,
            "payload": self.payload,
            "gamma": self.gamma,
            "gamma_beta": self.gamma_beta,
        }


@dataclass(frozen=True)
class AccelPlan:
    """四段加速方案（路径 2）"""
    accel: float                          # g
    legs: Tuple[WorldlineSegment, ...]    # I 系带符号：(+g, -g, -g, +g)
    proper_time: float                    # T
    coordinate_time: float                # 4 (c/g) sinh(gT/4c)
    max_beta: float                       # tanh(gT/4c)
    max_distance: float                   # 分段组合：2 (c²/g)(cosh(gT/4c) - 1)
    max_distance_single_burn: float       # 连续加速 T/2 的位移：(c²/g)(cosh(gT/2c) - 1)
    fuel_single_leg: float                # 单段燃料 M（τ = T/4）
    fuel_per_leg_sum: float               # 4 × 单段（不复利）
    fuel_full_path: float                 # 四段复利：m0 (exp(gT/c) - 1)
    spec: Optional[ComputationSpec] = None
    coupling_accel: Optional[float] = None  # 单段耦合 (t = ΔtN, τ = T) 的解 a
    burn_pattern: Tuple[float, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        data: Dict[str, Any] = {
            "accel": self.accel,
            "legs": [leg.to_dict() for leg in self.legs],
            "burn_pattern": list(self.burn_pattern),
            "proper_time": self.proper_time,
            "coordinate_time": self.coordinate_time,
            "max_beta": self.max_beta,
            "max_distance": self.max_distance,
            "max_distance_single_burn": self.max_distance_single_burn,
            "fuel_single_leg": self.fuel_single_leg,
            "fuel_per_leg_sum": self.fuel_per_leg_sum,
            "fuel_full_path": self.fuel_full_path,
        }
        if self.spec is not None:
            data["spec"] = self.spec.to_dict()
        if self.coupling_accel is not None:
            data["coupling_accel"] = self.coupling_accel
        return data
