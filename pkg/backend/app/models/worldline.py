"""
世界线数值积分结果模型
"""
from dataclasses import dataclass, field
from typing import Dict, Any, List, Tuple

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class WorldlineTrace:
    """按固有时采样的 (tau, t, x, beta)"""
    tau: np.ndarray
    t: np.ndarray
    x: np.ndarray
    beta: np.ndarray
    step: float
    path_label: str
    final_rapidity: float = 0.0   # 末端（含零时长跳变）之后的快度

    def __len__(self) -> int:
        return int(self.tau.shape[0])

    @property
    def samples(self) -> List[Tuple[float, float, float, float]]:
        return list(zip(self.tau.tolist(), self.t.tolist(), self.x.tolist(), self.beta.tolist()))

    @property
    def terminal(self) -> Tuple[float, float, float, float]:
        return float(self.tau[-1]), float(self.t[-1]), float(self.x[-1]), float(np.tanh(self.final_rapidity))

    def to_frame(self) -> pd.DataFrame:
        """CSV 导出用，列顺序固定为 tau,t,x,beta"""
        return pd.DataFrame({"tau": self.tau, "t": self.t, "x": self.x, "beta": self.beta})


@dataclass(frozen=True)
class ErrorReport:
    """数值积分与闭式解的比较"""
    max_rel_error_t: float = 0.0
    max_rel_error_x: float = 0.0
    max_rel_error_beta: float = 0.0
    max_rel_error_gamma: float = 0.0
    terminal_beta: float = 0.0
    terminal_x: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def max_rel_error(self) -> float:
        return max(self.max_rel_error_t, self.max_rel_error_x,
                   self.max_rel_error_beta, self.max_rel_error_gamma)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_rel_error_t": self.max_rel_error_t,
            "max_rel_error_x": self.max_rel_error_x,
            "max_rel_error_beta": self.max_rel_error_beta,
            "max_rel_error_gamma": self.max_rel_error_gamma,
            "terminal_beta": self.terminal_beta,
            "terminal_x": self.terminal_x,
            "notes": list(self.notes),
        }
