"""
输出格式工具
浮点数统一保留 OUTPUT_SIGNIFICANT_DIGITS 位有效数字；JSON 键排序，保证同一输入得到逐字节相同的输出
"""
import json
import math
from enum import Enum
from typing import Any, Optional

import numpy as np
import pandas as pd

from config import config


def round_sig(value: float, digits: Optional[int] = None) -> Any:
    """按有效数字取整；非有限值转成字符串（JSON 不支持 inf/nan）"""
    digits = digits or config.OUTPUT_SIGNIFICANT_DIGITS
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    return float(f"{value:.{digits}g}")


def normalize(obj: Any, digits: Optional[int] = None) -> Any:
    """递归地把结果对象转换成可 JSON 序列化的纯 Python 结构"""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(obj, digits)
    if isinstance(obj, dict):
        return {str(k): normalize(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [normalize(v, digits) for v in obj]
    if hasattr(obj, "to_dict"):
        return normalize(obj.to_dict(), digits)
    return obj


def dumps_json(document: Any, digits: Optional[int] = None) -> str:
    """输出单个 JSON 文档（末尾带换行）"""
    return json.dumps(normalize(document, digits), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dumps_csv(frame: pd.DataFrame, digits: Optional[int] = None) -> str:
    """输出 CSV 表格，首行为表头"""
    digits = digits or config.OUTPUT_SIGNIFICANT_DIGITS
    return frame.to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n")
