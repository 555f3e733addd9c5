# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
特征值后端基类

所有 a_p 来源（点计数、eta 乘积、远程数据库）的统一接口。
素数传入，EigenvalueRecord 列表传出。
"""

from abc import ABC, abstractmethod
from typing import Iterable, List

from .types import EigenvalueRecord, NewformDescriptor


class BaseEigenBackend(ABC):
    """
    特征值后端抽象类

    所有后端都需要继承此类并实现抽象方法。
    """

    # 能否按素数区间切块并行计算
    parallelizable: bool = False

    @property
    @abstractmethod
    def tag(self) -> str:
        """后端标识，写入每条记录的 backend 字段"""
        pass

    @abstractmethod
    def descriptor(self) -> NewformDescriptor:
        """
        返回该 newform 的描述信息

        Returns:
            NewformDescriptor
        """
        pass

    @abstractmethod
    def compute_records(self, primes: Iterable[int]) -> List[EigenvalueRecord]:
        """
        计算给定素数处的特征值

        Args:
            primes: 升序素数序列

        Returns:
            好素数处的记录列表，按素数升序；坏素数被跳过
        """
        pass
