# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
异常定义

工具包内所有错误都继承自 SatoTateError，并带有 CLI 退出码：
    1 - 数值约定被违反（如 Ramanujan 界失败）
    2 - 输入/用法错误
    3 - I/O 或网络错误
"""


class SatoTateError(Exception):
    """工具包异常基类"""

    exit_code = 1


# ==================== 数值约定 ====================

class NumericContractError(SatoTateError):
    """数值约定被违反"""

    exit_code = 1


class RamanujanViolation(NumericContractError):
    """cos θ 超出 [-1, 1] 且超过容差：数据错误或归一化错误"""


class NonRealDefect(NumericContractError):
    """a_p·ζ^{-1/2} 的虚部超过容差：嵌入或特征值错误"""


class NotOrdinary(NumericContractError):
    """l | a_l，不存在单位根"""


class SingularFactorError(NumericContractError):
    """Euler 因子 1 - x 在数值上为 0"""


# ==================== 输入错误 ====================

class InputError(SatoTateError, ValueError):
    """前置条件或用法错误"""

    exit_code = 2


class BadReductionError(InputError):
    """素数整除判别式，曲线在该素数处坏约化"""


class SingularCurveError(InputError):
    """短 Weierstrass 方程模 p 奇异"""


class NonIntegralOffsetError(InputError):
    """eta 乘积的 q 幂偏移 Σd·r/24 不是整数"""


class UnknownLabelError(InputError):
    """远程数据库中不存在该 newform 标签"""


# ==================== I/O 错误 ====================

class DataIOError(SatoTateError):
    """缓存或网络错误"""

    exit_code = 3


class CacheChecksumError(DataIOError):
    """缓存文件校验和不匹配（文件被截断或损坏）"""


class CacheVersionError(DataIOError):
    """缓存文件版本不受支持"""


class RemoteUnavailableError(DataIOError):
    """远程数据库不可达且没有缓存"""


class MalformedResponseError(DataIOError):
    """远程响应格式不符合预期"""
