"""业务逻辑服务模块"""
from backend.app.services.inertial_service import InertialPlanner, get_inertial_planner
from backend.app.services.accel_service import AccelPlanner, get_accel_planner
from backend.app.services.worldline_service import WorldlineSimulator, get_worldline_simulator
from backend.app.services.scenario_service import ScenarioService, get_scenario_service

__all__ = [
    'InertialPlanner',
    'get_inertial_planner',
    'AccelPlanner',
    'get_accel_planner',
    'WorldlineSimulator',
    'get_worldline_simulator',
    'ScenarioService',
    'get_scenario_service'
]
