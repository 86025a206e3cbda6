"""
配置文件
从环境变量读取数值与输出配置
"""
import os
from dotenv import load_dotenv
from scipy import constants

# 加载 .env 文件
load_dotenv()


class Config:
    """应用配置"""

    # 光速（SI，定义值，不允许覆盖）
    SPEED_OF_LIGHT_SI = constants.c

    # 近光速精度：允许的最小 1 - beta，小于它报 SaturationError
    BETA_DEFICIT_FLOOR = float(os.getenv('BETA_DEFICIT_FLOOR', 1e-15))

    # 加速度求根：括区倍增上限
    ROOT_MAX_DOUBLINGS = int(os.getenv('ROOT_MAX_DOUBLINGS', 60))

    # 世界线积分
    MAX_INTEGRATION_STEPS = int(float(os.getenv('MAX_INTEGRATION_STEPS', 1e8)))
    PATH_STEPS = int(float(os.getenv('PATH_STEPS', 1e5)))  # 未显式给出 step 时，每条路径的步数

    # 弱场近似窗口 gh/c^2
    WEAK_FIELD_LIMIT = float(os.getenv('WEAK_FIELD_LIMIT', 0.01))

    # CLI 输出
    OUTPUT_SIGNIFICANT_DIGITS = int(os.getenv('OUTPUT_SIGNIFICANT_DIGITS', 12))
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def validate(cls):
        """验证配置"""
        if not 0.0 < cls.BETA_DEFICIT_FLOOR < 1.0:
            raise ValueError(f"BETA_DEFICIT_FLOOR 必须在 (0, 1) 内: {cls.BETA_DEFICIT_FLOOR}")

        if cls.ROOT_MAX_DOUBLINGS <= 0:
            raise ValueError(f"ROOT_MAX_DOUBLINGS 必须为正: {cls.ROOT_MAX_DOUBLINGS}")

        if cls.MAX_INTEGRATION_STEPS <= 0 or cls.PATH_STEPS <= 0:
            raise ValueError("MAX_INTEGRATION_STEPS / PATH_STEPS 必须为正")

        if cls.PATH_STEPS > cls.MAX_INTEGRATION_STEPS:
            raise ValueError("PATH_STEPS 不能超过 MAX_INTEGRATION_STEPS")

        if not 0.0 < cls.WEAK_FIELD_LIMIT < 1.0:
            raise ValueError(f"WEAK_FIELD_LIMIT 必须在 (0, 1) 内: {cls.WEAK_FIELD_LIMIT}")

        if not 1 <= cls.OUTPUT_SIGNIFICANT_DIGITS <= 17:
            raise ValueError(f"OUTPUT_SIGNIFICANT_DIGITS 必须在 [1, 17] 内: {cls.OUTPUT_SIGNIFICANT_DIGITS}")

        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"未知的 LOG_LEVEL: {cls.LOG_LEVEL}")

        return True


# 创建配置实例
config = Config()
