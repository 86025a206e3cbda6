"""
场景服务
与 Grover 搜索的比赛、LHC 例子、(N, n) 扫描表
"""
import logging
import math
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from config import config
from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import DomainError, error_message
from backend.app.models.kinematics import Beta
from backend.app.models.scenario import LhcScenario, RaceReport, SweepRow, Winner
from backend.app.services.accel_service import AccelPlanner, get_accel_planner
from backend.app.services.inertial_service import InertialPlanner, get_inertial_planner
from backend.app.utils.kinematics import gamma_of_beta

logger = logging.getLogger(__name__)

# LHC 例子的固定常数
LHC_CIRCUMFERENCE_M = 26659.0
LHC_BETA = 0.999999991
LHC_BETA_DEFICIT = 9e-9
LHC_BOOKS = 32332832
LHC_LAPS = 4386
LHC_QUOTED_ORDER = 2.99

# 判定平局的相对容差
TIE_TOLERANCE = 1e-12

# 能无溢出转成 float 的整数位数上限
FLOAT_INT_BITS = 1023


def _check_race_inputs(N: int, n: float, m0: float) -> None:
    if int(N) != N or N < 1:
        raise DomainError("queries must be ≥ 1")
    if not (math.isfinite(n) and n >= 1.0):
        raise DomainError("order must be ≥ 1")
    if not (math.isfinite(m0) and m0 > 0.0):
        raise DomainError(f"rest mass must be > 0, got {m0}")


def _nth_root(N: int, n: float) -> float:
    # n = 2 且 N 可转为 float 时走 sqrt，使完全平方数得到精确结果；其余在对数空间计算
    if n == 2.0 and N.bit_length() <= FLOAT_INT_BITS:
        return math.sqrt(N)
    return math.exp(math.log(N) / n)


class ScenarioService:
    """比较性场景"""

    def __init__(
        self,
        inertial_planner: Optional[InertialPlanner] = None,
        accel_planner: Optional[AccelPlanner] = None,
    ):
        self.inertial_planner = inertial_planner or get_inertial_planner()
        self.accel_planner = accel_planner or get_accel_planner()

    def race_grover(self, N: int, n: float, m0: float = 1.0) -> RaceReport:
        """
        相对论加速的经典搜索 vs Grover 搜索，以 O 系中重聚时的固有时判定胜负

        Args:
            N: 查询次数
            n: 约化阶数
            m0: O 的静止质量（能量字段以 m0c² 为单位，不随 m0 变化）

        Returns:
            RaceReport（时间以 Δt 计）
        """
        _check_race_inputs(N, n, m0)
        N = int(N)

        quantum = math.isqrt(N - 1) + 1          # ceil(√N)
        try:
            classical = _nth_root(N, n)
            quantum_time = float(quantum)
            grover_energy = _nth_root(N, 2.0)
            if N.bit_length() <= FLOAT_INT_BITS:
                energy = N / classical            # N^(1 - 1/n)，完全平方数在 n = 2 时精确
            else:
                energy = math.exp((1.0 - 1.0 / n) * math.log(N))
        except OverflowError:
            raise DomainError(f"race outside the float range (log10 N = {math.log10(N):.1f}, n = {n:g})")

        if abs(classical - quantum_time) <= TIE_TOLERANCE * quantum_time:
            winner = Winner.TIE
        elif classical < quantum_time:
            winner = Winner.RELATIVISTIC_CLASSICAL
        else:
            winner = Winner.QUANTUM

        report = RaceReport(
            queries=N,
            order=n,
            classical_proper_runtime=classical,
            quantum_runtime=quantum,
            classical_energy=energy,
            grover_equivalent_energy=grover_energy,
            winner=winner,
            leg_proper_durations=(classical / 2.0, classical / 2.0),
            leg_energy=energy / 2.0,
            rest_mass=m0,
        )
        logger.info(f"[PLAN] race N={N} n={n:g}: classical {classical:.6g} vs quantum {quantum} -> {winner.value}")
        return report

    def lhc_scenario(self) -> LhcScenario:
        """随 LHC 质子运动的计算机：每圈查一本书，常数固定"""
        c = config.SPEED_OF_LIGHT_SI
        beta = Beta(LHC_BETA, deficit=LHC_BETA_DEFICIT)
        gamma = gamma_of_beta(beta)

        radius = LHC_CIRCUMFERENCE_M / (2.0 * math.pi)
        lab_time = LHC_CIRCUMFERENCE_M / (beta.value * c)
        classical_accel = (beta.value * c) ** 2 / radius

        computed_order = 1.0 + math.log(gamma) / math.log(LHC_LAPS)
        runtime_order = math.log(LHC_BOOKS) / math.log(LHC_LAPS)
        reproduced = any(abs(value - LHC_QUOTED_ORDER) < 0.005 for value in (computed_order, runtime_order))

        notes = [
            f"order from gamma: 1 + ln({gamma:.6g}) / ln({LHC_LAPS}) = {computed_order:.5g}",
            f"order from lookups per lap: ln({LHC_BOOKS}) / ln({LHC_LAPS}) = {runtime_order:.5g}",
            f"quoted order {LHC_QUOTED_ORDER} is {'reproduced' if reproduced else 'not reproduced'} by either convention",
        ]
        if not reproduced:
            logger.warning(f"[WARN] LHC quoted order {LHC_QUOTED_ORDER} not reproduced (computed {computed_order:.5g})")

        return LhcScenario(
            circumference=LHC_CIRCUMFERENCE_M,
            beta=beta.value,
            books=LHC_BOOKS,
            laps=LHC_LAPS,
            gamma=gamma,
            lab_time_per_lap=lab_time,
            proper_time_per_lap=lab_time / gamma,
            proper_centripetal_accel=gamma * gamma * classical_accel,
            computed_order=computed_order,
            runtime_order=runtime_order,
            radius=radius,
            classical_centripetal_accel=classical_accel,
            quoted_order=LHC_QUOTED_ORDER,
            order_reproduced=reproduced,
            notes=notes,
        )

    def _sweep_row(self, N: int, n: float, m0: float) -> SweepRow:
        values: Dict[str, Any] = {}
        try:
            spec = ComputationSpec(queries=N, order=n)
            values["proper_time"] = spec.proper_time
            ratio = self.inertial_planner.energy_required(spec, m0).energy_ratio
            values["energy_ratio"] = ratio
            values["energy"] = ratio * m0

            plan = self.inertial_planner.plan_inertial(spec, rest_mass=m0)
            values["beta"] = plan.state.beta.value
            values["distance"] = plan.distance
            if n > 1.0:
                values["a_solved"] = self.accel_planner.solve_acceleration(spec)
        except ValueError as exc:
            # 速度饱和时已算出的对数空间能量保留在行内
            values["error"] = error_message(exc)
        return SweepRow(queries=N, order=n, **values)

    def sweep_table(self, N_values: Iterable[int], n_values: Iterable[float], m0: float = 1.0) -> List[SweepRow]:
        """
        (N, n) 网格上每个单元一行，按 N 外层、n 内层的输入顺序排列；单元出错写入该行 error，不中断扫描
        """
        if not (math.isfinite(m0) and m0 > 0.0):
            raise DomainError(f"rest mass must be > 0, got {m0}")
        n_list = list(n_values)
        rows = [self._sweep_row(int(N), float(n), m0) for N in N_values for n in n_list]
        failed = sum(1 for row in rows if row.error)
        if failed:
            logger.warning(f"[WARN] sweep: {failed}/{len(rows)} cells flagged")
        return rows

    def sweep_frame(self, N_values: Iterable[int], n_values: Iterable[float], m0: float = 1.0) -> pd.DataFrame:
        """sweep_table 的 DataFrame 形式（CSV 输出用）"""
        rows = self.sweep_table(N_values, n_values, m0)
        return pd.DataFrame([row.to_dict() for row in rows], columns=list(SweepRow.__dataclass_fields__))


# 全局实例（单例模式）
_scenario_service_instance: Optional[ScenarioService] = None


def get_scenario_service() -> ScenarioService:
    """获取场景服务实例（单例）"""
    global _scenario_service_instance
    if _scenario_service_instance is None:
        _scenario_service_instance = ScenarioService()
    return _scenario_service_instance
