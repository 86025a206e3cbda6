"""
匀加速（双曲运动）服务
世界线闭式解、固有时/坐标时换算、所需加速度求根、四段路径、光子火箭燃料、弱场引力钟速
自然单位：c = 1，时间秒，长度光秒，加速度 c/秒（gravitational_rate 除外，用 SI）
"""
import logging
import math
from dataclasses import replace
from typing import Dict, Optional

import numpy as np
from scipy.optimize import brentq

from config import config
from backend.app.models.accel_plan import AccelPlan, FuelAccount, TimeMap, WorldlineSegment
from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import DomainError, InfeasibleError, WeakFieldError
from backend.app.models.kinematics import Beta
from backend.app.utils.kinematics import beta_from_rapidity
from backend.app.utils.stable_math import acosh_one_plus, cosh_minus_one, hypot_one_minus_one

logger = logging.getLogger(__name__)


def _check_accel(a: float) -> None:
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError(
            f"proper acceleration must be > 0 for hyperbolic motion, got {a} "
            f"(use a zero-acceleration segment for inertial motion)"
        )


def _check_non_negative(name: str, value: float) -> None:
    if not (math.isfinite(value) and value >= 0.0):
        raise DomainError(f"{name} must be >= 0, got {value}")


def _sinh(u: float) -> float:
    try:
        return math.sinh(u)
    except OverflowError:
        raise DomainError(f"rapidity {u:.6g} overflows the float range")


class AccelPlanner:
    """双曲运动方案"""

    # ---- 世界线闭式解 ----

    def worldline_point(self, a: float, tau: float):
        """
        固有时 τ 处的 (t, x)，x 为相对出发点的位移 (c²/a)(cosh(aτ/c) - 1)

        Returns:
            (t, x) 元组
        """
        _check_accel(a)
        _check_non_negative("tau", tau)
        u = a * tau
        return _sinh(u) / a, cosh_minus_one(u) / a

    def velocity_at(self, a: float, tau: float) -> Beta:
        """u(τ) = c·tanh(aτ/c)"""
        _check_accel(a)
        _check_non_negative("tau", tau)
        return beta_from_rapidity(a * tau)

    def velocity_at_coordinate_time(self, a: float, t: float) -> Beta:
        """u(t) = at / sqrt(1 + (at/c)²)"""
        _check_accel(a)
        _check_non_negative("t", t)
        x = a * t
        h = math.sqrt(1.0 + x * x)
        return Beta(x / h, deficit=1.0 / (h * (h + x)))

    def gamma_at(self, a: float, tau: float) -> float:
        """γ = cosh(aτ/c)"""
        _check_accel(a)
        _check_non_negative("tau", tau)
        return math.cosh(a * tau)

    def gamma_at_coordinate_time(self, a: float, t: float) -> float:
        """γ = sqrt(1 + (at/c)²)"""
        _check_accel(a)
        _check_non_negative("t", t)
        return math.hypot(1.0, a * t)

    def gamma_at_position(self, a: float, x_abs: float) -> float:
        """γ = a·x/c²，x 为绝对坐标（τ = 0 时位于 c²/a）"""
        _check_accel(a)
        return a * x_abs

    def gamma_at_displacement(self, a: float, d: float) -> float:
        """γ = a·d/c² + 1，d 为相对出发点的位移"""
        _check_accel(a)
        _check_non_negative("d", d)
        return a * d + 1.0

    def time_maps(
        self,
        a: float,
        t: Optional[float] = None,
        tau: Optional[float] = None,
        d: Optional[float] = None,
    ) -> TimeMap:
        """
        已知坐标时 t、固有时 τ、位移 d 之一，求另外两个

        Args:
            a: 固有加速度 (> 0)
            t / tau / d: 恰好给出一个 (>= 0)

        Returns:
            TimeMap
        """
        _check_accel(a)
        given = [v for v in (t, tau, d) if v is not None]
        if len(given) != 1:
            raise DomainError("time_maps needs exactly one of t, tau, d")

        if t is not None:
            _check_non_negative("t", t)
            x = a * t
            return TimeMap(t=t, tau=math.asinh(x) / a, d=hypot_one_minus_one(x) / a)
        if tau is not None:
            _check_non_negative("tau", tau)
            u = a * tau
            return TimeMap(t=_sinh(u) / a, tau=tau, d=cosh_minus_one(u) / a)

        _check_non_negative("d", d)
        y = a * d
        return TimeMap(t=math.sqrt(y * (y + 2.0)) / a, tau=acosh_one_plus(y) / a, d=d)

    # ---- 加速度求解 ----

    def solve_acceleration(self, spec: ComputationSpec) -> float:
        """
        求 a 使 (c/a)·asinh(a·Δt·N/c) = (Δt·N)^(1/n)

        残差 r(a) 对 a 严格递减；从 a0 = 1/(ΔtN) 倍增（或减半）找到变号区间，再用 brentq 求根。
        n = 1 时返回 0（惯性退化情形）。

        Raises:
            InfeasibleError: ROOT_MAX_DOUBLINGS 次倍增内没有变号
        """
        if spec.order == 1.0:
            return 0.0

        coordinate_time = spec.coordinate_time
        target = spec.proper_time

        def residual(a: float) -> float:
            return math.asinh(a * coordinate_time) / a - target

        a0 = 1.0 / coordinate_time
        lo = hi = a0
        r0 = residual(a0)
        if r0 == 0.0:
            return a0

        limit = config.ROOT_MAX_DOUBLINGS
        if r0 > 0.0:
            for _ in range(limit):
                hi *= 2.0
                if residual(hi) < 0.0:
                    lo = hi / 2.0
                    break
            else:
                raise InfeasibleError(
                    f"no sign change within {limit} bracket doublings for N={spec.queries}, n={spec.order:g}"
                )
        else:
            for _ in range(limit):
                lo /= 2.0
                if residual(lo) > 0.0:
                    hi = lo * 2.0
                    break
            else:
                raise InfeasibleError(
                    f"no sign change within {limit} bracket halvings for N={spec.queries}, n={spec.order:g}"
                )

        a = brentq(residual, lo, hi, xtol=1e-300, rtol=4.0 * np.finfo(float).eps, maxiter=200)
        rel = abs(residual(a)) / target
        logger.info(f"[SOLVE] N={spec.queries} n={spec.order:g}: a={a:.12g} (bracket [{lo:.3g}, {hi:.3g}], residual {rel:.2e})")
        return float(a)

    def implied_order(self, a: float, coordinate_time: float) -> float:
        """固定加速度 a 下，坐标时 t 对应的阶数 n = ln t / ln τ"""
        tau = self.time_maps(a, t=coordinate_time).tau
        if coordinate_time <= 1.0 or tau <= 1.0:
            raise DomainError(f"implied order needs t > 1 and tau > 1 (t={coordinate_time}, tau={tau:.6g})")
        return math.log(coordinate_time) / math.log(tau)

    def solve_path2_acceleration(self, spec: ComputationSpec) -> float:
        """
        四段路径复现工作量所需的 g。
        每段坐标时 ΔtN/4、固有时 T/4，同一耦合关系在 (ΔtN/4, T/4) 上成立，故 g = 4a。
        """
        return 4.0 * self.solve_acceleration(spec)

    # ---- 四段路径 ----

    def path2_itinerary(self, g: float, T: float, m0: float = 1.0) -> AccelPlan:
        """
        四段路径：τ ∈ [0,T/4] 加速离开，[T/4,T/2] 减速到最远点，[T/2,3T/4] 加速返回，[3T/4,T] 减速停在原点。
        相对运动方向的推力模式为 (+g, -g, +g, -g)；I 系 x 轴上的带符号加速度为 (+g, -g, -g, +g)。

        Args:
            g: 固有加速度大小 (> 0)
            T: 总固有时 (>= 0)
            m0: 载荷静止质量
        """
        _check_accel(g)
        _check_non_negative("T", T)

        quarter = T / 4.0
        u = g * quarter
        legs = tuple(
            WorldlineSegment(proper_accel=sign * g, proper_duration=quarter)
            for sign in (1.0, -1.0, -1.0, 1.0)
        )
        leg_coordinate_time = _sinh(u) / g
        single = self.fuel_single_leg(g, tau=quarter, m0=m0).initial_fuel_mass

        plan = AccelPlan(
            accel=g,
            legs=legs,
            burn_pattern=(g, -g, g, -g),
            proper_time=T,
            coordinate_time=4.0 * leg_coordinate_time,
            max_beta=math.tanh(u),
            max_distance=2.0 * cosh_minus_one(u) / g,
            max_distance_single_burn=cosh_minus_one(2.0 * u) / g,
            fuel_single_leg=single,
            fuel_per_leg_sum=4.0 * single,
            fuel_full_path=self.fuel_full_path(g, T, m0),
        )
        logger.debug(
            f"[PLAN] path2 g={g:.6g} T={T:.6g}: max_distance={plan.max_distance:.12g} "
            f"(single-burn formula {plan.max_distance_single_burn:.12g})"
        )
        return plan

    def plan_accel(self, spec: ComputationSpec, m0: float = 1.0) -> AccelPlan:
        """为工作量构建四段方案：g = solve_path2_acceleration(spec)，总固有时 T"""
        if spec.order == 1.0:
            raise DomainError("order 1 needs no acceleration; use plan-inertial")
        g = self.solve_path2_acceleration(spec)
        plan = self.path2_itinerary(g, spec.proper_time, m0)
        return replace(plan, spec=spec, coupling_accel=g / 4.0)

    # ---- 光子火箭燃料 ----

    def fuel_single_leg(
        self,
        a: float,
        tau: Optional[float] = None,
        m0: float = 1.0,
        t: Optional[float] = None,
    ) -> FuelAccount:
        """
        单段光子火箭：M = m0 (exp(aτ/c) - 1)，用坐标时形式 m0 (at/c + sqrt(1 + (at/c)²) - 1) 计算

        Args:
            a: 固有加速度 (> 0)
            tau: 本段固有时（与 t 二选一）
            m0: 载荷静止质量
            t: 本段坐标时（与 tau 二选一）
        """
        _check_accel(a)
        if (tau is None) == (t is None):
            raise DomainError("fuel_single_leg needs exactly one of tau, t")
        if tau is not None:
            _check_non_negative("tau", tau)
            at = _sinh(a * tau)
        else:
            _check_non_negative("t", t)
            at = a * t

        gamma = math.hypot(1.0, at)
        mass = m0 * (at + hypot_one_minus_one(at))
        return FuelAccount(
            initial_fuel_mass=mass,
            radiated_energy=m0 * at,   # 动量守恒：E_l / c = γ m0 u
            payload=m0,
            gamma=gamma,
            gamma_beta=at,
        )

    def fuel_full_path(self, g: float, T: float, m0: float = 1.0) -> float:
        """四段复利：每段快度变化 gT/4c，总质量比 exp(gT/c)，M_total = m0 (exp(gT/c) - 1)"""
        _check_accel(g)
        _check_non_negative("T", T)
        try:
            return m0 * math.expm1(g * T)
        except OverflowError:
            raise DomainError(f"fuel mass overflows the float range (gT = {g * T:.6g})")

    def fuel_d_form_erratum(self, a: float, d: float, m0: float = 1.0) -> Dict[str, float]:
        """
        位移形式的燃料质量：守恒律给出 m0 (ad/c² + sqrt(a²d²/c⁴ + 2ad/c²))；
        同时给出印刷形式 m0 (ad/c² + sqrt(a²d²/c⁴ - 1) - 1)（ad/c² < 1 时无定义，记为 nan）
        """
        _check_accel(a)
        _check_non_negative("d", d)
        y = a * d
        consistent = m0 * (y + math.sqrt(y * (y + 2.0)))
        printed = m0 * (y + math.sqrt(y * y - 1.0) - 1.0) if y >= 1.0 else math.nan
        return {"consistent": consistent, "printed": printed}

    # ---- 弱场引力钟速 ----

    def gravitational_shift(self, g: float, h: float) -> float:
        """gh/c²（SI 输入）"""
        _check_non_negative("g", g)
        _check_non_negative("h", h)
        c = config.SPEED_OF_LIGHT_SI
        return g * h / (c * c)

    def gravitational_rate(self, g: float, h: float) -> float:
        """
        t = τ (1 - gh/c²)，忽略 (gh/c²)² 项

        Raises:
            WeakFieldError: gh/c² >= WEAK_FIELD_LIMIT
        """
        shift = self.gravitational_shift(g, h)
        if shift >= config.WEAK_FIELD_LIMIT:
            raise WeakFieldError(f"outside weak-field regime: gh/c² = {shift:.3g}")
        return 1.0 - shift


# 全局实例（单例模式）
_accel_planner_instance: Optional[AccelPlanner] = None


def get_accel_planner() -> AccelPlanner:
    """获取匀加速方案服务实例（单例）"""
    global _accel_planner_instance
    if _accel_planner_instance is None:
        _accel_planner_instance = AccelPlanner()
    return _accel_planner_instance
