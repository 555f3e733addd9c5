# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
命令注册表
"""

from typing import Callable, Dict, List, Optional


class CommandRegistry:
    """
    子命令管理器

    使用示例:
        >>> registry = CommandRegistry()
        >>> registry.register('eigen', cmd_eigen, description='计算并缓存 a_p', category='forms')
        >>> registry.get('eigen')(config)
        >>> registry.list_commands(category='forms')
    """

    def __init__(self):
        self._commands: Dict[str, Dict[str, object]] = {}

    def register(
        self,
        command_id: str,
        func: Callable,
        description: str = "",
        category: str = "",
        update: bool = False
    ) -> None:
        """
        注册一个命令

        Args:
            command_id: 命令名（如 'eigen'）
            func: 接受 RunConfig、返回报告路径的函数
            description: 描述（选填，缺省取函数 docstring 首行）
            category: 分类（选填）
            update: 是否允许覆盖已注册命令
        """
        if command_id in self._commands and not update:
            raise ValueError(
                f"命令 '{command_id}' 已存在。"
                f"已注册信息: category='{self._commands[command_id]['category']}'。"
                f"如需更新，请设置 update=True"
            )
        if not callable(func):
            raise TypeError("func 必须可调用")
        if not description and func.__doc__:
            description = func.__doc__.strip().splitlines()[0]
        self._commands[command_id] = {
            "func": func,
            "description": description,
            "category": category
        }

    def get(self, command_id: str) -> Callable:
        if command_id not in self._commands:
            raise KeyError(f"命令 '{command_id}' 未注册")
        return self._commands[command_id]["func"]

    def has(self, command_id: str) -> bool:
        return command_id in self._commands

    def list_commands(self, category: Optional[str] = None) -> List[Dict[str, str]]:
        """
        列出已注册命令

        Returns:
            [{command_id, description, category}, ...]，按注册顺序
        """
        commands = [
            {
                "command_id": command_id,
                "description": info["description"],
                "category": info["category"]
            }
            for command_id, info in self._commands.items()
        ]
        if category is not None:
            commands = [c for c in commands if c["category"] == category]
        return commands
