"""
世界线数值积分服务（独立校验器）
沿分段常固有加速度的世界线积分 dt/dτ = cosh φ(τ)、dx/dτ = c·sinh φ(τ)，φ 分段线性；
用来校验 inertial_service / accel_service 中的全部闭式解
"""
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import config
from backend.app.models.accel_plan import WorldlineSegment
from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import DomainError, SimulationConfigError
from backend.app.models.worldline import ErrorReport, WorldlineTrace
from backend.app.services.accel_service import AccelPlanner, get_accel_planner
from backend.app.services.inertial_service import InertialPlanner, get_inertial_planner
from backend.app.utils.stable_math import cosh_minus_one, rel_error

logger = logging.getLogger(__name__)


def _rk4_segment(phi0: float, a: float, duration: float, n_steps: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    单段固定步长 RK4。右端只依赖 τ，k2 = k3，每步增量为 h (f0 + 4 f_mid + f1) / 6。

    Returns:
        (局部 τ 节点, 局部 t, 局部 x)，均从 0 开始
    """
    s = np.linspace(0.0, duration, n_steps + 1)
    if a == 0.0:
        # 常数右端，RK4 精确
        return s, s * math.cosh(phi0), s * math.sinh(phi0)

    h = duration / n_steps
    phi_nodes = phi0 + a * s
    phi_mid = phi0 + a * (s[:-1] + 0.5 * h)

    ch = np.cosh(phi_nodes)
    sh = np.sinh(phi_nodes)
    dt = h * ((ch[:-1] + 4.0 * np.cosh(phi_mid) + ch[1:]) / 6.0)
    dx = h * ((sh[:-1] + 4.0 * np.sinh(phi_mid) + sh[1:]) / 6.0)

    t = np.concatenate(([0.0], np.cumsum(dt)))
    x = np.concatenate(([0.0], np.cumsum(dx)))
    return s, t, x


def _steps_for(duration: float, step: float) -> int:
    # 容忍 duration/step 的舍入误差，避免多出一步
    return max(1, int(math.ceil(duration / step * (1.0 - 1e-12))))


class WorldlineSimulator:
    """世界线积分器"""

    def __init__(
        self,
        inertial_planner: Optional[InertialPlanner] = None,
        accel_planner: Optional[AccelPlanner] = None,
    ):
        self.inertial_planner = inertial_planner or get_inertial_planner()
        self.accel_planner = accel_planner or get_accel_planner()

    def integrate_worldline(
        self,
        segments: Sequence[WorldlineSegment],
        initial_rapidity: float = 0.0,
        step: float = 1e-3,
        path_label: str = "custom",
    ) -> WorldlineTrace:
        """
        积分一条分段世界线

        Args:
            segments: 依次执行的段；每段开始时先施加 rapidity_jump
            initial_rapidity: 初始快度
            step: τ 步长；每段实际步长为 duration / ceil(duration / step)
            path_label: 轨迹标签

        Returns:
            WorldlineTrace

        Raises:
            SimulationConfigError: 步长非正或总步数超出 MAX_INTEGRATION_STEPS
        """
        if not (math.isfinite(step) and step > 0.0):
            raise SimulationConfigError(f"step must be > 0, got {step}")
        total = sum(seg.proper_duration for seg in segments)
        if total / step > config.MAX_INTEGRATION_STEPS:
            raise SimulationConfigError(
                f"step budget exceeded: {total / step:.3g} steps > {config.MAX_INTEGRATION_STEPS:.3g}"
            )

        phi = float(initial_rapidity)
        taus: List[np.ndarray] = [np.zeros(1)]
        ts: List[np.ndarray] = [np.zeros(1)]
        xs: List[np.ndarray] = [np.zeros(1)]
        betas: List[np.ndarray] = [np.array([math.tanh(phi)])]
        tau0 = t0 = x0 = 0.0

        for seg in segments:
            phi += seg.rapidity_jump
            duration = seg.proper_duration
            if duration == 0.0:
                continue
            a = seg.proper_accel
            s, t_loc, x_loc = _rk4_segment(phi, a, duration, _steps_for(duration, step))

            taus.append(tau0 + s[1:])
            ts.append(t0 + t_loc[1:])
            xs.append(x0 + x_loc[1:])
            betas.append(np.tanh(phi + a * s[1:]))

            tau0 += duration
            t0 += float(t_loc[-1])
            x0 += float(x_loc[-1])
            phi += a * duration

        trace = WorldlineTrace(
            tau=np.concatenate(taus),
            t=np.concatenate(ts),
            x=np.concatenate(xs),
            beta=np.concatenate(betas),
            step=step,
            path_label=path_label,
            final_rapidity=phi,
        )
        logger.debug(f"[SIM] {path_label}: {len(trace)} samples, terminal tau={tau0:.12g} t={t0:.12g}")
        return trace

    def simulate_path1(self, spec: ComputationSpec, step: Optional[float] = None) -> Tuple[WorldlineTrace, ErrorReport]:
        """
        冲量式往返：出发时 0 -> φ，τ = T/2 时 φ -> -φ，到达时 -φ -> 0，其间惯性滑行

        Returns:
            (轨迹, 与 plan_inertial 的误差报告)
        """
        plan = self.inertial_planner.plan_inertial(spec)
        phi = plan.state.rapidity
        half = 0.5 * plan.proper_time
        if step is None:
            step = plan.proper_time / config.PATH_STEPS

        segments = [
            WorldlineSegment(proper_accel=0.0, proper_duration=half, rapidity_jump=phi),
            WorldlineSegment(proper_accel=0.0, proper_duration=half, rapidity_jump=-2.0 * phi),
            WorldlineSegment(proper_accel=0.0, proper_duration=0.0, rapidity_jump=phi),
        ]
        trace = self.integrate_worldline(segments, 0.0, step, path_label="path1")

        turnaround = float(np.max(trace.x))
        report = ErrorReport(
            max_rel_error_t=rel_error(float(trace.t[-1]), plan.coordinate_time),
            max_rel_error_x=rel_error(turnaround, plan.turnaround_distance),
            terminal_beta=math.tanh(trace.final_rapidity),
            terminal_x=float(trace.x[-1]),
        )
        logger.info(
            f"[SIM] path1 N={spec.queries} n={spec.order:g}: tau={trace.tau[-1]:.12g} t={trace.t[-1]:.12g} "
            f"turnaround x={turnaround:.12g}"
        )
        return trace, report

    def simulate_path2(self, g: float, T: float, step: Optional[float] = None) -> Tuple[WorldlineTrace, ErrorReport]:
        """
        四段加速路径，并与 path2_itinerary 的分段组合闭式解比较

        Args:
            g: 固有加速度 (> 0)
            T: 总固有时 (> 0)
            step: τ 步长，默认 T / PATH_STEPS
        """
        if not (math.isfinite(T) and T > 0.0):
            raise DomainError(f"T must be > 0, got {T}")
        plan = self.accel_planner.path2_itinerary(g, T)
        if step is None:
            step = T / config.PATH_STEPS
        trace = self.integrate_worldline(plan.legs, 0.0, step, path_label="path2")

        x_max = float(np.max(trace.x))
        beta_max = float(np.max(np.abs(trace.beta)))
        gamma_max = float(np.max(1.0 / np.sqrt((1.0 - trace.beta) * (1.0 + trace.beta))))
        single_burn_gap = rel_error(x_max, plan.max_distance_single_burn)

        notes = [
            f"simulated max distance {x_max:.12g} vs leg-composed {plan.max_distance:.12g}; "
            f"single-burn formula {plan.max_distance_single_burn:.12g} is off by {single_burn_gap:.3g} (relative)"
        ]
        report = ErrorReport(
            max_rel_error_t=rel_error(float(trace.t[-1]), plan.coordinate_time),
            max_rel_error_x=rel_error(x_max, plan.max_distance),
            max_rel_error_beta=rel_error(beta_max, plan.max_beta),
            max_rel_error_gamma=rel_error(gamma_max, math.cosh(g * T / 4.0)),
            terminal_beta=math.tanh(trace.final_rapidity),
            terminal_x=float(trace.x[-1]),
            notes=notes,
        )
        if single_burn_gap > 1e-6:
            logger.warning(f"[SIM] path2 g={g:.6g} T={T:.6g}: {notes[0]}")
        return trace, report

    def verify_closed_forms(
        self,
        a_grid: Iterable[float],
        tau_grid: Iterable[float],
        step: Optional[float] = None,
    ) -> ErrorReport:
        """
        在 (a, τ) 网格上比较积分终点与闭式 (t, x, β, γ)

        Args:
            a_grid: 固有加速度 (>= 0)
            tau_grid: 固有时 (>= 0)
            step: τ 步长；缺省时每个 a 取 1e-4·c/a（a = 0 时取 τ / PATH_STEPS）
        """
        a_values = [float(a) for a in a_grid]
        tau_values = [float(tau) for tau in tau_grid]
        if not a_values or not tau_values:
            raise SimulationConfigError("verify_closed_forms needs non-empty grids")

        err_t = err_x = err_beta = err_gamma = 0.0
        terminal_beta = terminal_x = 0.0
        for a in a_values:
            if not (math.isfinite(a) and a >= 0.0):
                raise DomainError(f"acceleration grid values must be >= 0, got {a}")
            for tau in tau_values:
                if not (math.isfinite(tau) and tau >= 0.0):
                    raise DomainError(f"tau grid values must be >= 0, got {tau}")
                if step is not None:
                    h = step
                elif a > 0.0:
                    h = 1e-4 / a
                else:
                    h = tau / config.PATH_STEPS if tau > 0.0 else 1.0

                trace = self.integrate_worldline(
                    [WorldlineSegment(proper_accel=a, proper_duration=tau)], 0.0, h, path_label="verify"
                )
                if a > 0.0:
                    u = a * tau
                    t_ref, x_ref = math.sinh(u) / a, cosh_minus_one(u) / a
                    beta_ref, gamma_ref = math.tanh(u), math.cosh(u)
                else:
                    t_ref, x_ref, beta_ref, gamma_ref = tau, 0.0, 0.0, 1.0

                beta_end = float(trace.beta[-1])
                # 近光速时由 beta 反推 gamma 会丢精度，直接用积分得到的快度
                gamma_end = math.cosh(trace.final_rapidity)
                err_t = max(err_t, rel_error(float(trace.t[-1]), t_ref))
                err_x = max(err_x, rel_error(float(trace.x[-1]), x_ref))
                err_beta = max(err_beta, rel_error(beta_end, beta_ref))
                err_gamma = max(err_gamma, rel_error(gamma_end, gamma_ref))
                terminal_beta, terminal_x = beta_end, float(trace.x[-1])

        logger.info(
            f"[SIM] verify {len(a_values)}x{len(tau_values)} grid: "
            f"t {err_t:.2e}, x {err_x:.2e}, beta {err_beta:.2e}, gamma {err_gamma:.2e}"
        )
        return ErrorReport(
            max_rel_error_t=err_t,
            max_rel_error_x=err_x,
            max_rel_error_beta=err_beta,
            max_rel_error_gamma=err_gamma,
            terminal_beta=terminal_beta,
            terminal_x=terminal_x,
        )


# 全局实例（单例模式）
_worldline_simulator_instance: Optional[WorldlineSimulator] = None


def get_worldline_simulator() -> WorldlineSimulator:
    """获取世界线积分器实例（单例）"""
    global _worldline_simulator_instance
    if _worldline_simulator_instance is None:
        _worldline_simulator_instance = WorldlineSimulator()
    return _worldline_simulator_instance
