"""
匀速方案模型
"""
from dataclasses import dataclass
from typing import Dict, Any, Optional, Tuple

from backend.app.models.computation import ComputationSpec
from backend.app.models.kinematics import KinematicState


@dataclass(frozen=True)
class FourMomentum:
    """四动量 (E/c, p1, p2, p3)，单位 m0·c；运动沿 x 轴"""
    components: Tuple[float, float, float, float]
    # 光锥分量 E/c - p1 = γ(1 - β)，单独保存以避免相消
    lightcone_minus: float

    def norm(self) -> float:
        """闵可夫斯基模 (E/c)^2 - |p|^2，应等于 (m0·c)^2 = 1"""
        e, p1, p2, p3 = self.components
        return (e + p1) * self.lightcone_minus - p2 * p2 - p3 * p3

    def to_dict(self) -> Dict[str, Any]:
        return {
            "components": list(self.components),
            "norm": self.norm(),
        }


@dataclass(frozen=True)
class InertialPlan:
    """匀速往返方案（自然单位：时间秒，距离光秒）"""
    spec: ComputationSpec
    proper_time: float            # T，O 的固有时
    coordinate_time: float        # Tⁿ = Δt·N，I 的坐标时
    state: KinematicState
    distance: float               # d = β·Tⁿ（I 系中的总路程）
    energy: float                 # E / m0c² = γ
    rest_mass: float = 1.0
    energy_joules: Optional[float] = None

    @property
    def turnaround_distance(self) -> float:
        """折返点位移 d/2"""
        return 0.5 * self.distance

    @property
    def energy_ratio(self) -> float:
        return self.energy

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        data = {
            "spec": self.spec.to_dict(),
            "proper_time": self.proper_time,
            "coordinate_time": self.coordinate_time,
            "state": self.state.to_dict(),
            "distance": self.distance,
            "turnaround_distance": self.turnaround_distance,
            "energy_ratio": self.energy,
            "rest_mass": self.rest_mass,
        }
        if self.energy_joules is not None:
            data["energy_joules"] = self.energy_joules
        return data
