"""Black-index sets: which token heights carry a black token.

Four flavors: multiples of an integer, floors of multiples of a quadratic
irrational (Beatty sets), floors of multiples of a rational, and explicit
finite sets.  Membership and prefix enumeration are two independent code
paths on purpose; the test suite holds them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .exactnum import QuadraticIrrational


class ColoringSet:
    """Base for the black-index set S of positive integers."""

    def contains(self, m: int) -> bool:
        raise NotImplementedError

    def prefix(self, bound: int) -> list[int]:
        """All members <= bound, ascending, built by direct generation."""
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def _check_index(self, m: int) -> None:
        if m <= 0:
            raise ValueError("token index must be positive")


@dataclass(frozen=True)
class Modular(ColoringSet):
    """S = all positive multiples of an integer beta >= 2."""

    beta: int

    def __post_init__(self):
        if self.beta < 2:
            raise ValueError("modular coloring needs beta >= 2")

    def contains(self, m: int) -> bool:
        self._check_index(m)
        return m % self.beta == 0

    def prefix(self, bound: int) -> list[int]:
        return list(range(self.beta, bound + 1, self.beta))

    def spec_string(self) -> str:
        return f"modular:{self.beta}"


@dataclass(frozen=True)
class BeattyIrrational(ColoringSet):
    """S = { floor(beta * n) : n >= 1 } for irrational beta > 1."""

    beta: QuadraticIrrational

    def __post_init__(self):
        if self.beta.is_rational:
            raise ValueError("beatty coloring needs an irrational beta")
        if self.beta.compare(1) <= 0:
            raise ValueError("beatty coloring needs beta > 1")

    @cached_property
    def _inv_beta(self) -> QuadraticIrrational:
        return self.beta.reciprocal()

    def contains(self, m: int) -> bool:
        # m is a floor of some beta*n exactly when the count of multiples of
        # beta below m+1 exceeds the count below m; both counts are exact
        # floors of an irrational, so no boundary case arises.
        self._check_index(m)
        inv = self._inv_beta
        return inv.floor_times(m + 1) > inv.floor_times(m)

    def prefix(self, bound: int) -> list[int]:
        out = []
        n = 1
        while True:
            v = self.beta.floor_times(n)
            if v > bound:
                return out
            out.append(v)
            n += 1

    def spec_string(self) -> str:
        return f"beatty:{self.beta}"


@dataclass(frozen=True)
class RationalBeatty(ColoringSet):
    """S = { floor(num/den * n) : n >= 1 } for a non-integer rational > 2.

    Exists to probe the open rational case; all arithmetic is plain integer.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0 or self.num <= 0:
            raise ValueError("rational coloring needs positive num/den")
        if self.num % self.den == 0:
            raise ValueError("rational coloring must not be an integer")
        if self.num <= 2 * self.den:
            raise ValueError("rational coloring needs num/den > 2")

    def contains(self, m: int) -> bool:
        # count of n >= 1 with n*num/den < v equals (v*den - 1) // num, so m
        # is hit exactly when the count steps between m and m+1.  The naive
        # floor comparison misfires when m*den is a multiple of num.
        self._check_index(m)
        num, den = self.num, self.den
        return ((m + 1) * den - 1) // num > (m * den - 1) // num

    def prefix(self, bound: int) -> list[int]:
        out = []
        n = 1
        while True:
            v = (n * self.num) // self.den
            if v > bound:
                return out
            out.append(v)
            n += 1

    def spec_string(self) -> str:
        return f"rational:{self.num}/{self.den}"


@dataclass(frozen=True)
class Explicit(ColoringSet):
    """A finite, explicitly listed S; handy for desk-scale experiments."""

    members: tuple[int, ...]

    def __post_init__(self):
        if any(m < 1 for m in self.members):
            raise ValueError("explicit coloring members must be >= 1")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def contains(self, m: int) -> bool:
        self._check_index(m)
        return m in self._member_set

    def prefix(self, bound: int) -> list[int]:
        return [m for m in self.members if m <= bound]

    def spec_string(self) -> str:
        return "explicit:" + ",".join(str(m) for m in self.members)


def parse_coloring(text: str) -> ColoringSet:
    """Parse the config grammar: modular:3, beatty:(1+1*sqrt(2))/1,
    rational:5/2, explicit:2,5,9."""
    kind, sep, payload = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bad coloring spec {text!r}: missing ':'")
    kind = kind.strip().lower()
    payload = payload.strip()
    if kind == "modular":
        return Modular(int(payload))
    if kind == "beatty":
        return BeattyIrrational(QuadraticIrrational.parse(payload))
    if kind == "rational":
        num, sep, den = payload.partition("/")
        if not sep:
            raise ValueError(f"bad rational coloring {payload!r}: expected num/den")
        return RationalBeatty(int(num), int(den))
    if kind == "explicit":
        return Explicit(tuple(int(v) for v in payload.split(",") if v.strip()))
    raise ValueError(f"unknown coloring kind {kind!r}")


@dataclass(frozen=True)
class ComplementarityReport:
    """Coverage defects of two floor sequences over [1, bound]."""

    bound: int
    missing: tuple[int, ...] = field(default_factory=tuple)
    doubled: tuple[int, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.doubled

    def __str__(self) -> str:
        if self.ok:
            return f"complementary on [1, {self.bound}]"
        parts = [f"{m} missing" for m in self.missing]
        parts += [f"{m} doubled" for m in self.doubled]
        return "; ".join(parts)


def verify_complementary(
    alpha: QuadraticIrrational, beta: QuadraticIrrational, bound: int
) -> ComplementarityReport:
    """Check that floor(alpha*n) and floor(beta*n) jointly cover each integer
    in [1, bound] exactly once."""
    if bound <= 0:
        return ComplementarityReport(bound=bound)
    counts = [0] * (bound + 1)
    for seq in (alpha, beta):
        n = 1
        while True:
            v = seq.floor_times(n)
            if v > bound:
                break
            if v >= 1:
                counts[v] += 1
            n += 1
    missing = tuple(v for v in range(1, bound + 1) if counts[v] == 0)
    doubled = tuple(v for v in range(1, bound + 1) if counts[v] >= 2)
    return ComplementarityReport(bound=bound, missing=missing, doubled=doubled)


def iter_members(s: ColoringSet) -> Iterator[int]:
    """Ascending members of S, unbounded (finite for Explicit)."""
    if isinstance(s, Explicit):
        yield from s.members
        return
    m = 0
    while True:
        m += 1
        if s.contains(m):
            yield m
