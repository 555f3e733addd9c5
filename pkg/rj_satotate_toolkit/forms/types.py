# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

"""
newform 数据类型

Nebentypus、系数域、NewformDescriptor、EigenvalueRecord 和 EllipticCurve。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import sympy

from ..exceptions import InputError
from ..numtheory import RootOfUnity, kronecker_symbol

NEBENTYPUS_KINDS = ("trivial", "kronecker", "table")


@dataclass(frozen=True)
class Nebentypus:
    """
    Dirichlet 特征 χ_f

    kind:
        - "trivial": m = 1
        - "kronecker": χ(p) = (D|p)，D 为基本判别式，m <= 2
        - "table": 素数 -> 指数 (mod m) 的显式表
    """
    modulus: int = 1
    order: int = 1
    kind: str = "trivial"
    discriminant: Optional[int] = None
    table: Dict[int, int] = field(default_factory=dict, compare=False, hash=False)
    conductor: Optional[int] = None

    def __post_init__(self):
        if self.modulus < 1 or self.order < 1:
            raise InputError(f"模和阶必须 >= 1: modulus={self.modulus}, order={self.order}")
        if self.kind not in NEBENTYPUS_KINDS:
            raise InputError(f"不支持的 nebentypus 类型: {self.kind}")
        if self.kind == "trivial" and self.order != 1:
            raise InputError("平凡特征的阶必须为 1")
        if self.kind == "kronecker":
            if self.discriminant is None or self.order > 2:
                raise InputError("kronecker 特征需要判别式 D 且阶 <= 2")

    @classmethod
    def trivial(cls, modulus: int = 1) -> "Nebentypus":
        return cls(modulus=modulus, order=1, kind="trivial", conductor=1)

    @classmethod
    def from_kronecker(cls, discriminant: int, modulus: Optional[int] = None) -> "Nebentypus":
        """由基本判别式 D 构造二次特征 (D|·)，D = 1 时为平凡特征"""
        if discriminant == 1:
            return cls.trivial(modulus or 1)
        return cls(
            modulus=modulus or abs(discriminant),
            order=2,
            kind="kronecker",
            discriminant=discriminant,
            conductor=abs(discriminant)
        )

    @property
    def effective_conductor(self) -> int:
        if self.conductor is not None:
            return self.conductor
        return 1 if self.kind == "trivial" else self.modulus

    def is_defined_at(self, p: int) -> bool:
        if self.kind == "trivial":
            return True
        if self.kind == "kronecker":
            return self.discriminant % p != 0
        return p in self.table

    def value(self, p: int) -> RootOfUnity:
        """
        χ_f(p) 作为 m 次单位根

        Args:
            p: 与模互素的素数

        Returns:
            RootOfUnity(e, m)

        Raises:
            InputError: p 处特征无定义或表中无此素数
        """
        if not self.is_defined_at(p):
            raise InputError(f"χ 在 p={p} 处无定义（{self.kind} 特征，模 {self.modulus}）")
        if self.kind == "trivial":
            return RootOfUnity(0, self.order)
        if self.kind == "kronecker":
            symbol = kronecker_symbol(self.discriminant, p)
            return RootOfUnity(0 if symbol == 1 else 1, 2) if self.order == 2 else RootOfUnity(0, 1)
        return RootOfUnity.of(self.table[p], self.order)


@dataclass(frozen=True)
class CoefficientField:
    """
    系数域 K_f = Q[x]/(poly) 及选定的复嵌入

    poly 按升幂排列的首一整系数多项式；root 为选定复根，root_error 为其误差界。
    """
    poly: Tuple[int, ...] = (0, 1)
    root: complex = 0j
    root_error: float = 0.0

    def __post_init__(self):
        if len(self.poly) < 2 or self.poly[-1] != 1:
            raise InputError(f"系数域多项式必须首一且次数 >= 1: {self.poly}")

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls()

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def embed(self, coords: Sequence[Fraction]) -> Tuple[complex, float]:
        """
        把幂基坐标嵌入 C

        Args:
            coords: 幂基 1, x, x^2, ... 下的有理坐标

        Returns:
            (复数值, 绝对误差界)
        """
        value = 0j
        error = 0.0
        magnitude = abs(self.root) + self.root_error
        for i, c in enumerate(coords):
            value += float(c) * self.root ** i
            if i:
                error += abs(float(c)) * i * magnitude ** (i - 1) * self.root_error
        error += 4e-16 * max(1.0, sum(abs(float(c)) * magnitude ** i for i, c in enumerate(coords)))
        return value, error


@dataclass(frozen=True)
class NewformDescriptor:
    """newform 的身份信息：级、权、nebentypus、系数域、CM 与 Steinberg 标记"""
    label: str
    level: int
    weight: int
    nebentypus: Nebentypus = field(default_factory=Nebentypus.trivial)
    coefficient_field: CoefficientField = field(default_factory=CoefficientField.rationals)
    is_cm: Optional[bool] = None
    steinberg_primes: FrozenSet[int] = frozenset()
    source: str = ""

    def __post_init__(self):
        if self.level < 1:
            raise InputError(f"级必须 >= 1，当前为 {self.level}")
        if self.weight not in (2, 3):
            raise InputError(f"只支持权 2 或 3，当前为 {self.weight}")
        if self.weight == 3 and self.nebentypus.order % 2 != 0:
            raise InputError("权 3 要求奇特征，特征阶必须为偶数")
        bad = [q for q in self.steinberg_primes if self.level % q != 0]
        if bad:
            raise InputError(f"Steinberg 素数 {bad} 不整除级 {self.level}")

    @property
    def character_order(self) -> int:
        return self.nebentypus.order

    def is_good(self, p: int) -> bool:
        """p 不整除级"""
        return self.level % p != 0

    def level_primes(self) -> Tuple[int, ...]:
        return tuple(sorted(sympy.primefactors(self.level)))


@dataclass(frozen=True)
class EigenvalueRecord:
    """单个素数处的 Hecke 特征值 a_p"""
    p: int
    embedded: complex
    error: float = 0.0
    exact: Optional[Tuple[Fraction, ...]] = None
    backend: str = ""

    @classmethod
    def from_integer(cls, p: int, a_p: int, backend: str) -> "EigenvalueRecord":
        return cls(p=p, embedded=complex(a_p, 0.0), error=0.0,
                   exact=(Fraction(a_p),), backend=backend)

    @property
    def exact_integer(self) -> Optional[int]:
        """系数为有理整数时返回 a_p，否则 None"""
        if self.exact is None or len(self.exact) != 1:
            return None
        if self.exact[0].denominator != 1:
            return None
        return self.exact[0].numerator


@dataclass(frozen=True)
class EllipticCurve:
    """长 Weierstrass 方程 y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6"""
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    discriminant: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "discriminant", self._compute_discriminant())
        if self.discriminant == 0:
            raise InputError(f"曲线奇异（判别式为 0）: {self.coefficients}")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "EllipticCurve":
        if len(coeffs) == 2:
            return cls(0, 0, 0, int(coeffs[0]), int(coeffs[1]))
        if len(coeffs) != 5:
            raise InputError(f"需要 [a1,a2,a3,a4,a6] 或 [A,B]，当前为 {list(coeffs)}")
        return cls(*(int(c) for c in coeffs))

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self) -> Tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self) -> Tuple[int, int]:
        b2, b4, b6, _ = self.b_invariants()
        return b2 * b2 - 24 * b4, -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    def _compute_discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def short_weierstrass(self) -> Tuple[int, int]:
        """
        同构的短 Weierstrass 模型 y^2 = x^3 + Ax + B（在 p > 3 时有效）

        Returns:
            (A, B) = (-27·c4, -54·c6)
        """
        c4, c6 = self.c_invariants()
        return -27 * c4, -54 * c6

    def is_good(self, p: int) -> bool:
        return self.discriminant % p != 0

    def multiplicative_primes(self) -> Tuple[int, ...]:
        """p | Δ 且 p ∤ c4：乘法约化，即 Steinberg 的非分歧扭"""
        c4, _ = self.c_invariants()
        return tuple(p for p in sympy.primefactors(abs(self.discriminant)) if c4 % p != 0)

    def is_semistable(self) -> bool:
        return len(self.multiplicative_primes()) == len(sympy.primefactors(abs(self.discriminant)))
