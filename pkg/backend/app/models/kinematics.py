"""
运动学数据模型
速度统一用 beta（光速的分数）表示；近光速时同时保存 1 - beta，保证精度
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Literal

from config import config
from backend.app.models.errors import DomainError, SaturationError


@dataclass(frozen=True)
class Beta:
    """速度（光速的分数），0 <= value < 1"""
    value: float
    # 1 - value；上游由定义式直接算出时传入，否则由 value 推出
    deficit: float = None

    def __post_init__(self):
        deficit = self.deficit
        if deficit is None:
            deficit = 1.0 - self.value
            object.__setattr__(self, "deficit", deficit)

        if not (math.isfinite(self.value) and math.isfinite(deficit)):
            raise DomainError(f"superluminal or negative velocity: beta={self.value}")
        if self.value < 0.0 or self.value > 1.0 or deficit <= 0.0:
            raise DomainError(f"superluminal or negative velocity: beta={self.value}")
        if deficit < config.BETA_DEFICIT_FLOOR:
            raise SaturationError(
                f"required beta exceeds cap 1 - {config.BETA_DEFICIT_FLOOR:g} (1 - beta = {deficit:.3e})"
            )

    def __float__(self) -> float:
        return self.value

    @classmethod
    def of(cls, beta) -> "Beta":
        """接受 Beta 或 float"""
        if isinstance(beta, Beta):
            return beta
        return cls(float(beta))


@dataclass(frozen=True)
class KinematicState:
    """同一相对速度下一致的 (beta, gamma, rapidity, k)"""
    beta: Beta
    gamma: float
    rapidity: float
    k: float

    def to_dict(self) -> Dict[str, float]:
        """转换为字典"""
        return {
            "beta": self.beta.value,
            "gamma": self.gamma,
            "rapidity": self.rapidity,
            "k": self.k,
        }


@dataclass(frozen=True)
class UnitSystem:
    """
    单位制。内部一律自然单位：c = 1，时间以秒计，长度以光秒计。
    SI 只在命令行边界做换算。
    """
    mode: Literal["natural", "si"] = "natural"
    c: float = field(default=1.0)

    @classmethod
    def from_mode(cls, mode: str) -> "UnitSystem":
        if mode == "natural":
            return cls("natural", 1.0)
        if mode == "si":
            return cls("si", config.SPEED_OF_LIGHT_SI)
        raise DomainError(f"unknown unit system: {mode}")

    @property
    def is_si(self) -> bool:
        return self.mode == "si"

    def seconds(self, t: float) -> float:
        """内部时间已经是秒"""
        return t

    def meters(self, d: float) -> float:
        """光秒 -> 米（自然单位下原样返回）"""
        return d * self.c

    def joules(self, energy_ratio: float, rest_mass: float) -> float:
        """E/m0c^2 -> 焦耳（自然单位下即 ratio * m0）"""
        return energy_ratio * rest_mass * self.c * self.c

    def si_acceleration(self, a: float) -> float:
        """c/s -> m/s^2"""
        return a * self.c
