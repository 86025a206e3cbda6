"""
匀速方案服务
工作量 (N, Δt)、约化阶数 n、速度、k 因子、距离、能量、四动量之间的正反向换算
"""
import logging
import math
from typing import Optional

from backend.app.models.computation import ComputationSpec, EnergyRequirement
from backend.app.models.errors import DomainError
from backend.app.models.inertial_plan import InertialPlan, FourMomentum
from backend.app.models.kinematics import Beta, UnitSystem
from backend.app.utils.kinematics import beta_from_log_gamma, kinematic_state
from backend.app.utils.stable_math import log_half_k_sum

logger = logging.getLogger(__name__)


def _check_time(T: float) -> float:
    """T > 1 时返回 ln T，否则报错（ln T <= 0 使公式奇异）"""
    if not (math.isfinite(T) and T > 1.0):
        raise DomainError(f"sub-unit time budget: T = {T} must exceed 1")
    return math.log(T)


class InertialPlanner:
    """匀速方案"""

    def beta_required(self, T: float, n: float) -> Beta:
        """
        固有时 T、阶数 n 所需的速度 β = sqrt(1 - T^(2-2n))，在对数空间计算

        Args:
            T: 旅行者 O 的固有时（秒）
            n: 约化阶数

        Returns:
            Beta（带精确的 1 - β）

        Raises:
            DomainError: n < 1，或 n > 1 且 T <= 1
            SaturationError: 所需 β 超过上限
        """
        if not (math.isfinite(n) and n >= 1.0):
            raise DomainError("order must be ≥ 1")
        if n == 1.0:
            # 经典极限：不需要运动
            return Beta(0.0)
        log_T = _check_time(T)
        return beta_from_log_gamma((n - 1.0) * log_T)

    def plan_inertial(
        self,
        spec: ComputationSpec,
        rest_mass: float = 1.0,
        units: Optional[UnitSystem] = None,
    ) -> InertialPlan:
        """
        构建完整的匀速方案

        Args:
            spec: 计算任务
            rest_mass: O 的静止质量（自然单位下为 1；SI 模式下为 kg）
            units: 单位制；SI 模式下额外给出焦耳能量

        Returns:
            InertialPlan
        """
        log_T = spec.log_proper_time
        if spec.order == 1.0:
            beta = Beta(0.0)
        else:
            beta = beta_from_log_gamma((spec.order - 1.0) * log_T)
        state = kinematic_state(beta)
        coordinate_time = spec.coordinate_time
        distance = beta.value * coordinate_time

        energy_joules = None
        if units is not None and units.is_si:
            energy_joules = units.joules(state.gamma, rest_mass)

        plan = InertialPlan(
            spec=spec,
            proper_time=math.exp(log_T),
            coordinate_time=coordinate_time,
            state=state,
            distance=distance,
            energy=state.gamma,
            rest_mass=rest_mass,
            energy_joules=energy_joules,
        )
        logger.info(
            f"[PLAN] N={spec.queries} n={spec.order:g}: T={plan.proper_time:.6g} "
            f"beta={beta.value:.12g} gamma={state.gamma:.6g}"
        )
        return plan

    def order_from_k(self, k: float, T: float) -> float:
        """n = 1 + log(k/2 + 1/(2k)) / log T"""
        if not (math.isfinite(k) and k >= 1.0):
            raise DomainError(f"k-factor must be >= 1, got {k}")
        log_T = _check_time(T)
        return 1.0 + log_half_k_sum(k) / log_T

    def k_from_order(self, n: float, T: float) -> float:
        """k = T^(n-1) (1 + sqrt(1 - T^(2-2n)))，即 γ(1 + β)"""
        if not (math.isfinite(n) and n >= 1.0):
            raise DomainError("order must be ≥ 1")
        log_T = _check_time(T)
        log_gamma = (n - 1.0) * log_T
        s = -2.0 * log_gamma
        gamma = math.exp(log_gamma)
        beta = math.sqrt(-math.expm1(s))
        return gamma + gamma * beta

    def order_from_distance(self, d: float, T: float) -> float:
        """与速度无关的表达式 n = 1 + log(1 + d²/(cT)²) / log(T²)"""
        if not (math.isfinite(d) and d >= 0.0):
            raise DomainError(f"distance must be >= 0, got {d}")
        log_T = _check_time(T)
        ratio = d / T
        return 1.0 + math.log1p(ratio * ratio) / (2.0 * log_T)

    def order_from_energy(self, energy_ratio: float, T: float) -> float:
        """n(E, T) = 1 + log(E/m0c²) / log T"""
        if not (math.isfinite(energy_ratio) and energy_ratio >= 1.0):
            raise DomainError(f"below rest energy: E/m0c² = {energy_ratio}")
        log_T = _check_time(T)
        return 1.0 + math.log(energy_ratio) / log_T

    def energy_required(self, spec: ComputationSpec, rest_mass: float = 1.0) -> EnergyRequirement:
        """E/m0c² = (Δt·N)^(1 - 1/n)，Δt = 1 时即 N^(1 - 1/n)"""
        ratio = math.exp((1.0 - 1.0 / spec.order) * spec.log_coordinate_time)
        return EnergyRequirement(energy_ratio=ratio, rest_mass=rest_mass)

    def four_momentum(self, plan: InertialPlan) -> FourMomentum:
        """P = γ (m0 c, m0 u, 0, 0)，单位 m0·c"""
        gamma = plan.state.gamma
        beta = plan.state.beta
        return FourMomentum(
            components=(gamma, gamma * beta.value, 0.0, 0.0),
            lightcone_minus=gamma * beta.deficit,
        )


# 全局实例（单例模式）
_inertial_planner_instance: Optional[InertialPlanner] = None


def get_inertial_planner() -> InertialPlanner:
    """获取匀速方案服务实例（单例）"""
    global _inertial_planner_instance
    if _inertial_planner_instance is None:
        _inertial_planner_instance = InertialPlanner()
    return _inertial_planner_instance
