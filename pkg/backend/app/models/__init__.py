"""数据模型模块"""
from backend.app.models.errors import (
    SpeedupError,
    DomainError,
    SaturationError,
    InfeasibleError,
    WeakFieldError,
    SimulationConfigError,
    UsageError,
    error_message,
)
from backend.app.models.kinematics import Beta, KinematicState, UnitSystem
from backend.app.models.computation import ComputationSpec, EnergyRequirement
from backend.app.models.inertial_plan import InertialPlan, FourMomentum
from backend.app.models.accel_plan import (
    ProperAcceleration,
    WorldlineSegment,
    TimeMap,
    FuelAccount,
    AccelPlan,
)
from backend.app.models.worldline import WorldlineTrace, ErrorReport
from backend.app.models.scenario import Winner, RaceReport, LhcScenario, SweepRow
from backend.app.models.run_config import RunConfig

__all__ = [
    'SpeedupError',
    'DomainError',
    'SaturationError',
    'InfeasibleError',
    'WeakFieldError',
    'SimulationConfigError',
    'UsageError',
    'error_message',
    'Beta',
    'KinematicState',
    'UnitSystem',
    'ComputationSpec',
    'EnergyRequirement',
    'InertialPlan',
    'FourMomentum',
    'ProperAcceleration',
    'WorldlineSegment',
    'TimeMap',
    'FuelAccount',
    'AccelPlan',
    'WorldlineTrace',
    'ErrorReport',
    'Winner',
    'RaceReport',
    'LhcScenario',
    'SweepRow',
    'RunConfig',
]
