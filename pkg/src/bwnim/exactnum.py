"""Exact arithmetic for quadratic irrationals of the form (p + q*sqrt(d)) / r.

Every operation here is pure integer arithmetic on unbounded ints, so floors
of multiples, comparisons, and complements carry no rounding error at any
scale.  Rationals embed as q = 0 so the same interface covers them.
"""

from __future__ import annotations

import math
import re
from typing import Optional


def isqrt(m: int) -> int:
    """Floor of the square root of a nonnegative integer.

    Newton iteration on integers with a final correction step; exact for
    arbitrarily large inputs (no float anywhere on the path).
    """
    if m < 0:
        raise ValueError("isqrt of a negative number")
    if m < 2:
        return m
    # initial guess from the bit length, then contract
    x = 1 << ((m.bit_length() + 1) // 2)
    while True:
        y = (x + m // x) // 2
        if y >= x:
            break
        x = y
    # x is now floor(sqrt(m)) or one off; correct exactly
    while x * x > m:
        x -= 1
    while (x + 1) * (x + 1) <= m:
        x += 1
    return x


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    s = isqrt(m)
    return s * s == m


_QI_RE = re.compile(
    r"^\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(-?\d+)$"
)


class QuadraticIrrational:
    """Immutable value (p + q*sqrt(d)) / r with d a nonsquare integer >= 2.

    Normalized on construction: r > 0 and gcd(p, q, r) = 1, so equality is
    decidable directly from the fields.  q = 0 denotes a rational value.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int, d: int, r: int):
        if r == 0:
            raise ValueError("zero denominator")
        if d < 2 or is_perfect_square(d):
            raise ValueError("not irrational: d must be a nonsquare integer >= 2")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r // g)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticIrrational is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_int(cls, n: int, d: int = 2) -> "QuadraticIrrational":
        return cls(n, 0, d, 1)

    @classmethod
    def from_fraction(cls, num: int, den: int, d: int = 2) -> "QuadraticIrrational":
        return cls(num, 0, d, den)

    @classmethod
    def parse(cls, text: str) -> "QuadraticIrrational":
        """Parse the textual form "(p+q*sqrt(d))/r", e.g. "(1+1*sqrt(2))/1"."""
        m = _QI_RE.match(text.strip())
        if m is None:
            raise ValueError(f"bad quadratic irrational literal: {text!r}")
        p, sign, q, d, r = m.groups()
        qv = int(q) if sign == "+" else -int(q)
        return cls(int(p), qv, int(d), int(r))

    def __str__(self) -> str:
        sign = "+" if self.q >= 0 else "-"
        return f"({self.p}{sign}{abs(self.q)}*sqrt({self.d}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadraticIrrational({self.p}, {self.q}, {self.d}, {self.r})"

    # -- predicates ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """Exact sign of the value: -1, 0, or 1."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2 d (never equal, d nonsquare)
        if p > 0:  # q < 0: positive iff p > |q| sqrt(d)
            return 1 if p * p > q * q * d else -1
        return 1 if q * q * d > p * p else -1  # p < 0 < q

    # -- field arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "QuadraticIrrational":
        if isinstance(other, QuadraticIrrational):
            return other
        if isinstance(other, int):
            return QuadraticIrrational(other, 0, self.d, 1)
        return NotImplemented  # type: ignore[return-value]

    def _join_d(self, other: "QuadraticIrrational") -> int:
        if self.d == other.d or other.q == 0:
            return self.d
        if self.q == 0:
            return other.d
        raise ValueError("incomparable representation: mixed sqrt(d) fields")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        return QuadraticIrrational(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            d,
            self.r * other.r,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        return QuadraticIrrational(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
            self.r * other.r,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticIrrational":
        """Exact 1/x via conjugate rationalization."""
        if self.sign() == 0:
            raise ZeroDivisionError("reciprocal of zero")
        den = self.p * self.p - self.q * self.q * self.d
        return QuadraticIrrational(self.r * self.p, -self.r * self.q, self.d, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    # -- ordering ------------------------------------------------------------

    def compare(self, other) -> int:
        """Exact three-way comparison; rationals embed into either field."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare with {type(other).__name__}")
        return (self - other).sign()

    def __eq__(self, other):
        try:
            return self.compare(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        # rationals hash independently of the stored d
        return hash((self.p, self.q, self.r, 0 if self.q == 0 else self.d))

    # -- floors and complements ----------------------------------------------

    def floor_times(self, n: int) -> int:
        """Exact floor(n * x) for n >= 0 and x > 0.

        The irrational part n*q*sqrt(d) is floored through the integer square
        root of n^2 q^2 d; since the value is irrational when q != 0, the
        fractional part never lands on an integer and the division below is
        exact floor division.
        """
        if n < 0:
            raise ValueError("n must be nonnegative")
        if self.sign() <= 0:
            raise ValueError("floor_times requires a positive value")
        if n == 0:
            return 0
        if self.q == 0:
            return (n * self.p) // self.r
        s = isqrt(n * n * self.q * self.q * self.d)
        if self.q > 0:
            return (n * self.p + s) // self.r
        return (n * self.p - s - 1) // self.r

    def complement(self) -> "QuadraticIrrational":
        """The Beatty partner a = x/(x-1), so that 1/a + 1/x = 1 exactly.

        Only defined for irrational x > 1.
        """
        if self.q == 0:
            raise ValueError("no Beatty complement: value is rational")
        if self.compare(1) <= 0:
            raise ValueError("no Beatty complement: value must exceed 1")
        p, q, d, r = self.p, self.q, self.d, self.r
        den = (p - r) * (p - r) - q * q * d
        return QuadraticIrrational(p * p - p * r - q * q * d, -q * r, d, den)


def compare(x: QuadraticIrrational, y) -> int:
    return x.compare(y)


def parse_quadratic(text: str) -> QuadraticIrrational:
    return QuadraticIrrational.parse(text)


def sqrt_of(d: int) -> QuadraticIrrational:
    """Convenience constructor for sqrt(d)."""
    return QuadraticIrrational(0, 1, d, 1)


def beatty_floor(x: QuadraticIrrational, n: int) -> int:
    """Module-level alias for x.floor_times(n)."""
    return x.floor_times(n)


def maybe_parse_quadratic(text: str) -> Optional[QuadraticIrrational]:
    try:
        return QuadraticIrrational.parse(text)
    except ValueError:
        return None
