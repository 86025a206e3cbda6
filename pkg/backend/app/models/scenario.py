"""
场景模型：与 Grover 搜索的比赛、LHC 例子、扫描表
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Any, List, Optional, Tuple


class Winner(Enum):
    """比赛结果"""
    RELATIVISTIC_CLASSICAL = "relativistic_classical"
    QUANTUM = "quantum"
    TIE = "tie"


@dataclass(frozen=True)
class RaceReport:
    """经典计算机 + 相对论效应 vs 量子搜索（时间以 Δt 计，能量以 m0c² 计）"""
    queries: int
    order: float
    classical_proper_runtime: float       # N^(1/n)
    quantum_runtime: int                  # ceil(√N)
    classical_energy: float               # N^(1 - 1/n)
    grover_equivalent_energy: float       # √N
    winner: Winner
    # 平滑：两段旅程，各占一半固有时与一半能量
    leg_proper_durations: Tuple[float, float] = (0.0, 0.0)
    leg_energy: float = 0.0
    rest_mass: float = 1.0

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "queries": self.queries,
            "order": self.order,
            "classical_proper_runtime": self.classical_proper_runtime,
            "quantum_runtime": self.quantum_runtime,
            "classical_energy": self.classical_energy,
            "grover_equivalent_energy": self.grover_equivalent_energy,
            "winner": self.winner.value,
            "leg_proper_durations": list(self.leg_proper_durations),
            "leg_energy": self.leg_energy,
            "rest_mass": self.rest_mass,
        }


@dataclass(frozen=True)
class LhcScenario:
    """随粒子绕 LHC 运动的计算机，每圈检索一条记录（SI 单位）"""
    circumference: float                  # m
    beta: float
    books: int                            # N
    laps: int
    gamma: float
    lab_time_per_lap: float               # s
    proper_time_per_lap: float            # s
    proper_centripetal_accel: float       # m/s²，γ²β²c²/R
    computed_order: float                 # 1 + ln γ / ln(laps)
    runtime_order: float = 0.0            # ln N / ln(laps)
    radius: float = 0.0                   # m
    classical_centripetal_accel: float = 0.0  # β²c²/R
    quoted_order: float = 2.99
    order_reproduced: bool = False
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "circumference": self.circumference,
            "radius": self.radius,
            "beta": self.beta,
            "books": self.books,
            "laps": self.laps,
            "gamma": self.gamma,
            "lab_time_per_lap": self.lab_time_per_lap,
            "proper_time_per_lap": self.proper_time_per_lap,
            "classical_centripetal_accel": self.classical_centripetal_accel,
            "proper_centripetal_accel": self.proper_centripetal_accel,
            "computed_order": self.computed_order,
            "runtime_order": self.runtime_order,
            "quoted_order": self.quoted_order,
            "order_reproduced": self.order_reproduced,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class SweepRow:
    """扫描表的一行；单元格出错时记录在 error 中，不中断扫描"""
    queries: int
    order: float
    proper_time: Optional[float] = None
    beta: Optional[float] = None
    energy_ratio: Optional[float] = None
    energy: Optional[float] = None        # E / c²，即 m0 · energy_ratio
    distance: Optional[float] = None
    a_solved: Optional[float] = None      # n = 1 时缺省
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "queries": self.queries,
            "order": self.order,
            "proper_time": self.proper_time,
            "beta": self.beta,
            "energy_ratio": self.energy_ratio,
            "energy": self.energy,
            "distance": self.distance,
            "a_solved": self.a_solved,
            "error": self.error,
        }
