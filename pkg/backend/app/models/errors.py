"""
异常定义模块
所有异常都继承 ValueError，调用方可以只捕获一个基类
"""
from pydantic import ValidationError


class SpeedupError(ValueError):
    """基类"""


class DomainError(SpeedupError):
    """输入超出公式定义域（超光速、k < 1、T <= 1、低于静能等）"""


class SaturationError(DomainError):
    """要求的速度比 BETA_DEFICIT_FLOOR 更接近光速"""


class InfeasibleError(DomainError):
    """加速度求根在括区倍增上限内没有找到变号"""


class WeakFieldError(DomainError):
    """gh/c^2 超出弱场近似窗口"""


class SimulationConfigError(SpeedupError):
    """积分步长非正或步数超出预算"""


class UsageError(SpeedupError):
    """命令行 / 配置文件用法错误"""

    def __init__(self, message: str, key: str = None):
        super().__init__(message)
        self.key = key


def error_message(exc: Exception) -> str:
    """单行错误信息；pydantic 校验错误只取第一条并去掉 "Value error, " 前缀"""
    if isinstance(exc, ValidationError):
        first = exc.errors()[0]
        return str(first.get("msg", exc)).removeprefix("Value error, ")
    return str(exc).splitlines()[0] if str(exc) else exc.__class__.__name__
