"""
命令行接口
子命令：plan-inertial / plan-accel / simulate / race / scenario / sweep
退出码：0 成功，1 用法错误，2 定义域错误（stdout 输出单行 JSON 错误对象）
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import pandas as pd
from dotenv import dotenv_values
from pydantic import ValidationError

from config import config
from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import UsageError, error_message
from backend.app.models.kinematics import UnitSystem
from backend.app.models.run_config import COMMANDS, FLAG_FIELDS, RunConfig
from backend.app.services import (
    get_accel_planner,
    get_inertial_planner,
    get_scenario_service,
    get_worldline_simulator,
)
from backend.app.utils.output_util import dumps_csv, dumps_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

SCENARIOS = ("lhc",)
TABULAR_COMMANDS = ("simulate", "sweep")

# RunConfig 字段名 -> 命令行键名
_FIELD_FLAGS = {name: flag for flag, name in FLAG_FIELDS.items()}

Result = Tuple[Dict[str, Any], Optional[pd.DataFrame]]


class CliArgumentParser(argparse.ArgumentParser):
    """解析失败时抛 UsageError，由 run() 统一映射为退出码 1"""

    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> CliArgumentParser:
    """构建参数解析器；所有参数默认 None，只有显式给出的才参与覆盖"""
    common = CliArgumentParser(add_help=False)
    common.add_argument("--queries", help="查询次数 N（sweep 可用逗号分隔多个）")
    common.add_argument("--order", help="约化阶数 n（sweep 可用逗号分隔多个）")
    common.add_argument("--query-time-s", type=float, help="单次查询时间 Δt（秒），默认 1")
    common.add_argument("--rest-mass-kg", type=float, help="O 的静止质量（kg），--units si 时必填")
    common.add_argument("--units", choices=("natural", "si"))
    common.add_argument("--step", type=float, help="世界线积分的 τ 步长")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--output", help="输出文件路径（默认 stdout）")
    common.add_argument("--config", help="配置文件（key=value 或 JSON）")
    common.add_argument("--path", type=int, help="simulate 的路径：1 或 2")
    common.add_argument("--accel", type=float, help="显式固有加速度 g（与 --proper-time 一起用）")
    common.add_argument("--proper-time", type=float, help="显式总固有时 T（与 --accel 一起用）")

    parser = CliArgumentParser(
        prog="python -m backend.app.main",
        description="Relativistic computational speedup planner",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "plan-inertial": "constant-velocity round trip for (N, n)",
        "plan-accel": "four-leg accelerated round trip for (N, n) or (g, T)",
        "simulate": "integrate a path numerically and compare with closed forms",
        "race": "relativistic classical search vs quadratic quantum search",
        "scenario": "fixed worked scenarios (lhc)",
        "sweep": "(N, n) table of T, beta, energy, distance and solved acceleration",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "scenario":
            p.add_argument("scenario", nargs="?", help="scenario name (default: lhc)")
    return parser


def read_config_file(path: str) -> Dict[str, Any]:
    """
    读取配置文件：扁平 key=value 文本，或 JSON 对象（含 run_config 键的输出文档也可直接回读）

    Raises:
        UsageError: 文件不存在、格式错误、出现未知键
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise UsageError(f"config file not found: {path}", key="config")

    text = file_path.read_text(encoding="utf-8")
    if file_path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"malformed config file {path}: {e}", key="config")
        if not isinstance(data, dict):
            raise UsageError(f"malformed config file {path}: expected an object", key="config")
        if isinstance(data.get("run_config"), dict):
            data = data["run_config"]
    else:
        data = dict(dotenv_values(file_path))
        for key, value in data.items():
            if value is None:
                raise UsageError(f"malformed config line for key '{key}' (expected key=value)", key=key)

    for key in data:
        if key not in FLAG_FIELDS:
            raise UsageError(f"unknown config key '{key}'", key=key)
    return data


def resolve_config(file_values: Dict[str, Any], cli_values: Dict[str, Any]) -> RunConfig:
    """命令行 > 配置文件 > 默认值"""
    merged = {**file_values, **cli_values}
    try:
        return RunConfig(**{FLAG_FIELDS[key]: value for key, value in merged.items()})
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = first.get("loc") or ()
        if loc:
            flag = _FIELD_FLAGS.get(str(loc[0]), str(loc[0]))
            raise UsageError(f"--{flag}: {error_message(exc)}", key=flag)
        raise UsageError(error_message(exc))


def load_config(path: str, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """读取配置文件并叠加命令行覆盖值，返回完整的 RunConfig"""
    return resolve_config(read_config_file(path), overrides or {})


def parse_run_config(argv: List[str]) -> RunConfig:
    """argv -> RunConfig"""
    namespace = vars(build_parser().parse_args(argv))
    cli_values = {}
    for flag in FLAG_FIELDS:
        value = namespace.get(flag.replace("-", "_"))
        if value is not None:
            cli_values[flag] = value

    config_path = namespace.get("config")
    if config_path:
        return load_config(config_path, cli_values)
    return resolve_config({}, cli_values)


# ---- 子命令 ----

def _spec(cfg: RunConfig) -> ComputationSpec:
    return ComputationSpec(queries=cfg.single("queries"), query_time=cfg.query_time_s, order=cfg.single("order"))


def _rest_mass(cfg: RunConfig) -> float:
    return cfg.rest_mass_kg if cfg.rest_mass_kg is not None else 1.0


def _explicit_path2(cfg: RunConfig) -> Optional[Tuple[float, float]]:
    """--accel 与 --proper-time 同时给出时返回 (g, T)"""
    if cfg.accel is None and cfg.proper_time is None:
        return None
    if cfg.accel is None or cfg.proper_time is None:
        raise UsageError("--accel and --proper-time must be given together", key="accel")
    return cfg.accel, cfg.proper_time


def cmd_plan_inertial(cfg: RunConfig, units: UnitSystem) -> Result:
    planner = get_inertial_planner()
    plan = planner.plan_inertial(_spec(cfg), rest_mass=_rest_mass(cfg), units=units)
    document: Dict[str, Any] = {
        "plan": plan.to_dict(),
        "four_momentum": planner.four_momentum(plan).to_dict(),
    }
    if units.is_si:
        document["si"] = {
            "proper_time_s": units.seconds(plan.proper_time),
            "coordinate_time_s": units.seconds(plan.coordinate_time),
            "distance_m": units.meters(plan.distance),
            "turnaround_distance_m": units.meters(plan.turnaround_distance),
            "energy_joules": plan.energy_joules,
        }
    return document, None


def cmd_plan_accel(cfg: RunConfig, units: UnitSystem) -> Result:
    planner = get_accel_planner()
    m0 = _rest_mass(cfg)
    explicit = _explicit_path2(cfg)
    if explicit is not None:
        plan = planner.path2_itinerary(explicit[0], explicit[1], m0)
    else:
        plan = planner.plan_accel(_spec(cfg), m0)

    document: Dict[str, Any] = {"plan": plan.to_dict()}
    if plan.spec is not None and plan.coupling_accel is not None:
        # 单段持续加速覆盖整个工作量时的燃料（随 N 线性增长）
        fuel = planner.fuel_single_leg(plan.coupling_accel, t=plan.spec.coordinate_time, m0=m0)
        document["single_burn_fuel"] = fuel.to_dict()
    if units.is_si:
        document["si"] = {
            "accel_m_s2": units.si_acceleration(plan.accel),
            "coordinate_time_s": units.seconds(plan.coordinate_time),
            "max_distance_m": units.meters(plan.max_distance),
            "fuel_full_path_kg": plan.fuel_full_path,
            "fuel_full_path_joules": units.joules(plan.fuel_full_path, 1.0),
        }
    return document, None


def cmd_simulate(cfg: RunConfig, units: UnitSystem) -> Result:
    simulator = get_worldline_simulator()
    if cfg.path == 1:
        trace, report = simulator.simulate_path1(_spec(cfg), cfg.step)
    else:
        explicit = _explicit_path2(cfg)
        if explicit is not None:
            g, T = explicit
        else:
            spec = _spec(cfg)
            g, T = get_accel_planner().solve_path2_acceleration(spec), spec.proper_time
        trace, report = simulator.simulate_path2(g, T, cfg.step)

    tau, t, x, beta = trace.terminal
    document = {
        "path": cfg.path,
        "step": trace.step,
        "samples": len(trace),
        "terminal": {"tau": tau, "t": t, "x": units.meters(x), "beta": beta},
        "report": report.to_dict(),
    }
    frame = trace.to_frame()
    if units.is_si:
        frame["x"] = units.meters(frame["x"])
    return document, frame


def cmd_race(cfg: RunConfig, units: UnitSystem) -> Result:
    report = get_scenario_service().race_grover(cfg.single("queries"), cfg.single("order"), _rest_mass(cfg))
    return {"race": report.to_dict()}, None


def cmd_scenario(cfg: RunConfig, units: UnitSystem) -> Result:
    name = cfg.scenario or "lhc"
    if name not in SCENARIOS:
        raise UsageError(f"unknown scenario '{name}' (available: {', '.join(SCENARIOS)})", key="scenario")
    return {"scenario": get_scenario_service().lhc_scenario().to_dict()}, None


def cmd_sweep(cfg: RunConfig, units: UnitSystem) -> Result:
    if not cfg.queries:
        raise UsageError("missing required flag --queries", key="queries")
    if not cfg.order:
        raise UsageError("missing required flag --order", key="order")
    service = get_scenario_service()
    if cfg.output_format == "csv":
        frame = service.sweep_frame(cfg.queries, cfg.order, _rest_mass(cfg))
        return {}, frame
    rows = service.sweep_table(cfg.queries, cfg.order, _rest_mass(cfg))
    return {"rows": [row.to_dict() for row in rows]}, None


HANDLERS: Dict[str, Callable[[RunConfig, UnitSystem], Result]] = {
    "plan-inertial": cmd_plan_inertial,
    "plan-accel": cmd_plan_accel,
    "simulate": cmd_simulate,
    "race": cmd_race,
    "scenario": cmd_scenario,
    "sweep": cmd_sweep,
}


def execute(cfg: RunConfig) -> str:
    """执行一个 RunConfig，返回输出文档文本"""
    if cfg.output_format == "csv" and cfg.command not in TABULAR_COMMANDS:
        raise UsageError(f"--format csv is only available for {', '.join(TABULAR_COMMANDS)}", key="format")

    units = UnitSystem.from_mode(cfg.units)
    document, frame = HANDLERS[cfg.command](cfg, units)
    if cfg.output_format == "csv":
        return dumps_csv(frame)
    return dumps_json({"command": cfg.command, "run_config": cfg.to_flag_dict(), **document})


def _emit_error(stream: TextIO, kind: str, exc: Exception) -> None:
    stream.write(json.dumps({"error": kind, "detail": error_message(exc)}, ensure_ascii=False, sort_keys=True) + "\n")


def _check_settings() -> None:
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(f"invalid environment setting: {exc}") from exc


def _setup_logging() -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=config.LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
    )


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    命令行入口

    Args:
        argv: 参数列表（不含程序名），默认 sys.argv[1:]
        stdout: 输出流，默认 sys.stdout

    Returns:
        退出码：0 成功，1 用法错误，2 定义域错误
    """
    stdout = stdout or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        _check_settings()
        _setup_logging()
        cfg = parse_run_config(argv)
        text = execute(cfg)
        if cfg.output_path:
            Path(cfg.output_path).write_text(text, encoding="utf-8")
            logger.info(f"[PLAN] {cfg.command}: wrote {cfg.output_path}")
        else:
            stdout.write(text)
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except UsageError as exc:
        _emit_error(stdout, "UsageError", exc)
        return EXIT_USAGE
    except ValidationError as exc:
        _emit_error(stdout, "DomainError", exc)
        return EXIT_DOMAIN
    except ValueError as exc:
        _emit_error(stdout, exc.__class__.__name__, exc)
        return EXIT_DOMAIN
    except OverflowError as exc:
        _emit_error(stdout, "DomainError", exc)
        return EXIT_DOMAIN
    except OSError as exc:
        _emit_error(stdout, "UsageError", exc)
        return EXIT_USAGE
    return EXIT_OK
