"""Quantum integers and q-powers over the whole range q in [0, inf].

Values are carried as :class:`LogScalar` (sign and natural-log magnitude) so
that long products of quantum integers never overflow binary64.  The two
crystal endpoints are symbolic tags on :class:`QParam`; raw formulas are never
evaluated at tiny or huge finite q to imitate them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


class DivergentLimitError(ArithmeticError):
    """A quantity has no finite limit at a symbolic endpoint q = 0 or q = inf."""


@dataclass(frozen=True)
class QParam:
    """The deformation parameter: a positive real, or one of the limits 0, inf."""

    kind: str
    value: float | None = None

    def __post_init__(self):
        if self.kind == "finite":
            if self.value is None or not math.isfinite(self.value) or self.value <= 0:
                raise ValueError(f"finite q must be a positive real, got {self.value!r}")
            object.__setattr__(self, "value", float(self.value))
        elif self.kind in ("zero", "infinity"):
            if self.value is not None:
                raise ValueError("symbolic q carries no value")
        else:
            raise ValueError(f"unknown q kind {self.kind!r}")

    @classmethod
    def finite(cls, value: float) -> QParam:
        return cls("finite", value)

    @classmethod
    def zero(cls) -> QParam:
        return cls("zero")

    @classmethod
    def infinity(cls) -> QParam:
        return cls("infinity")

    @classmethod
    def parse(cls, text: str | float | QParam) -> QParam:
        """Accept ``"zero"``, ``"infinity"`` (or ``"inf"``), or a positive decimal."""
        if isinstance(text, QParam):
            return text
        if isinstance(text, (int, float)):
            return cls.finite(float(text))
        s = text.strip().lower()
        if s in ("zero", "0"):
            return cls.zero()
        if s in ("infinity", "inf"):
            return cls.infinity()
        try:
            v = float(s)
        except ValueError:
            raise ValueError(f"cannot parse q from {text!r}") from None
        return cls.finite(v)

    @property
    def is_symbolic(self) -> bool:
        return self.kind != "finite"

    @property
    def log(self) -> float:
        if self.is_symbolic:
            raise DivergentLimitError(f"log q undefined at q={self.kind}")
        return math.log(self.value)

    def tag(self) -> str:
        """Stable text form: "zero", "infinity" or 17 significant digits."""
        if self.is_symbolic:
            return self.kind
        return f"{self.value:.17g}"

    def __str__(self) -> str:
        return self.tag()


def as_q(q) -> QParam:
    return QParam.parse(q)


@dataclass(frozen=True)
class LogScalar:
    """A real number stored as sign in {-1, 0, 1} and log of its magnitude."""

    sign: int
    log_mag: float = 0.0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.sign == 0:
            object.__setattr__(self, "log_mag", -math.inf)

    @classmethod
    def from_float(cls, x: float) -> LogScalar:
        if x == 0:
            return ZERO
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def __mul__(self, other: LogScalar) -> LogScalar:
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return LogScalar(self.sign * other.sign, self.log_mag + other.log_mag)

    def __truediv__(self, other: LogScalar) -> LogScalar:
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogScalar")
        if self.sign == 0:
            return ZERO
        return LogScalar(self.sign * other.sign, self.log_mag - other.log_mag)

    def __neg__(self) -> LogScalar:
        return LogScalar(-self.sign, self.log_mag)

    def sqrt(self) -> LogScalar:
        if self.sign < 0:
            raise ValueError("square root of a negative LogScalar")
        if self.sign == 0:
            return ZERO
        return LogScalar(1, 0.5 * self.log_mag)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_mag)

    def __repr__(self) -> str:
        return f"LogScalar({float(self)!r})"


ZERO = LogScalar(0)
ONE = LogScalar(1, 0.0)


def product(factors: Iterable[LogScalar]) -> LogScalar:
    out = ONE
    for f in factors:
        out = out * f
    return out


def _log_qint_finite(n: int, q: QParam) -> float:
    # log [n] for n >= 1, symmetric in q <-> 1/q
    L = abs(q.log)
    if L == 0.0:
        return math.log(n)
    # [n] = q^(n-1) (1 - q^-2n) / (1 - q^-2) for q > 1
    return (n - 1) * L + math.log(-math.expm1(-2 * n * L)) - math.log(-math.expm1(-2 * L))


def qint(n: int, q) -> LogScalar:
    """The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^-(n-1)."""
    q = as_q(q)
    if n < 0:
        raise ValueError(f"qint needs n >= 0, got {n}; use qint_signed")
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    if q.is_symbolic:
        raise DivergentLimitError(f"[{n}] diverges at q={q.kind}; use qint_ratio")
    return LogScalar(1, _log_qint_finite(n, q))


def qint_signed(m: int, q) -> LogScalar:
    """[m] for any integer m, using [-m] = -[m]."""
    if m < 0:
        return -qint(-m, q)
    return qint(m, q)


def qint_ratio(a: int, b: int, q) -> LogScalar:
    """[a]/[b] for positive a, b, with the exact limits at q = 0 and q = inf."""
    q = as_q(q)
    if a < 1 or b < 1:
        raise ValueError("qint_ratio needs a, b >= 1")
    if q.is_symbolic:
        # [n] ~ q^(n-1) at inf and q^-(n-1) at 0: ratio ~ q^(+-(a-b))
        if a == b:
            return ONE
        if a < b:
            return ZERO
        raise DivergentLimitError(f"[{a}]/[{b}] diverges at q={q.kind}")
    return qint(a, q) / qint(b, q)


def qpow_half(e: int, q) -> LogScalar:
    """q^(e/2)."""
    q = as_q(q)
    if q.kind == "zero":
        if e > 0:
            return ZERO
        if e == 0:
            return ONE
        raise DivergentLimitError(f"q^({e}/2) diverges at q=0")
    if q.kind == "infinity":
        if e < 0:
            return ZERO
        if e == 0:
            return ONE
        raise DivergentLimitError(f"q^({e}/2) diverges at q=inf")
    return LogScalar(1, 0.5 * e * q.log)


def qint_float(n: int, q) -> float:
    """Plain float [n] for signed n (convenience for matrix assembly)."""
    return float(qint_signed(n, q))
