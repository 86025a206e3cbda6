"""
命令行主入口
用法：python -m backend.app.main <command> [flags]
"""
import sys
from pathlib import Path

# 添加项目根目录到路径
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from backend.app.api.cli import run


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
