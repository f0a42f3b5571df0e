"""
File: foundations.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Exact rationals, link index ranges and the algebra of eventually periodic
    subsets of the natural numbers. Everything here is immutable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from continua.errors import ConfigError, DomainError

Q = Fraction  # rational type alias


def to_q(value: int | str | Fraction) -> Fraction:
    """
    Converts an integer, a "p/q" string or a Fraction to an exact rational.
    Floats are refused, there is no rounding anywhere in this project.

    :param value: Value to convert.
    :return: Exact rational.
    """
    if isinstance(value, float):
        raise DomainError(f"Refusing float {value!r}, pass a 'p/q' string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as err:
        raise DomainError(f"Not a rational: {value!r}") from err


def qstr(q: Fraction) -> str:
    """Serializes a rational as "p/q" (always with a denominator)."""
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class IndexRange:
    """Links holding a point: one link, or two adjacent ones."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo or self.hi > self.lo + 1:
            raise DomainError(f"Invalid index range [{self.lo}, {self.hi}]")

    def shifted(self, offset: int) -> IndexRange:
        return IndexRange(self.lo + offset, self.hi + offset)

    def reversed(self, k: int) -> IndexRange:
        return IndexRange(k - self.hi + 1, k - self.lo + 1)

    def to_list(self) -> list[int]:
        return [self.lo, self.hi]


@dataclass(frozen=True, slots=True)
class EventuallyPeriodicSet:
    """
    A subset of {0, 1, 2, ...} given by a finite prefix of membership bits
    followed by a repeating pattern. Instances are normalized on construction
    (shortest period, then shortest prefix) so equal sets compare equal.
    """

    prefix: tuple[bool, ...]
    pattern: tuple[bool, ...]

    def __post_init__(self):
        if not self.pattern:
            raise DomainError("Pattern of an eventually periodic set cannot be empty")
        prefix, pattern = _normalize(tuple(map(bool, self.prefix)), tuple(map(bool, self.pattern)))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "pattern", pattern)

    @property
    def period(self) -> int:
        return len(self.pattern)

    @property
    def preperiod(self) -> int:
        return len(self.prefix)

    def __contains__(self, n: int) -> bool:
        return self.member(n)

    def member(self, n: int) -> bool:
        if n < 0:
            raise DomainError(f"Negative index {n}")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.pattern[(n - len(self.prefix)) % len(self.pattern)]

    def bits(self, length: int) -> tuple[bool, ...]:
        return tuple(self.member(n) for n in range(length))

    def members(self, start: int, stop: int) -> list[int]:
        return [n for n in range(start, stop) if self.member(n)]

    # -- algebra -------------------------------------------------------------

    def complement(self) -> EventuallyPeriodicSet:
        return EventuallyPeriodicSet(
            tuple(not b for b in self.prefix), tuple(not b for b in self.pattern)
        )

    def union(self, other: EventuallyPeriodicSet) -> EventuallyPeriodicSet:
        return _combine(self, other, lambda a, b: a or b)

    def intersection(self, other: EventuallyPeriodicSet) -> EventuallyPeriodicSet:
        return _combine(self, other, lambda a, b: a and b)

    def difference(self, other: EventuallyPeriodicSet) -> EventuallyPeriodicSet:
        return _combine(self, other, lambda a, b: a and not b)

    __or__ = union
    __and__ = intersection
    __invert__ = complement
    __sub__ = difference

    def shift(self, k: int) -> EventuallyPeriodicSet:
        """Returns {n + k : n in self} for k >= 0."""
        if k < 0:
            raise DomainError(f"Shift must be non-negative, got {k}")
        return EventuallyPeriodicSet((False,) * k + self.prefix, self.pattern)

    def truncated_below(self, n0: int) -> EventuallyPeriodicSet:
        """Drops every member smaller than n0."""
        return self & cofinite(n0)

    def is_subset(self, other: EventuallyPeriodicSet) -> bool:
        return (self - other).is_empty()

    def is_empty(self) -> bool:
        return not any(self.prefix) and not any(self.pattern)

    def is_finite(self) -> bool:
        return not any(self.pattern)

    def is_cofinite(self) -> bool:
        return all(self.pattern)

    def is_infinite_coinfinite(self) -> bool:
        return not self.is_finite() and not self.is_cofinite()

    def tail_start(self) -> int:
        """First index from which membership is purely periodic."""
        return len(self.prefix)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "prefix": [int(b) for b in self.prefix],
            "period": len(self.pattern),
            "pattern": [int(b) for b in self.pattern],
        }

    @classmethod
    def from_dict(cls, data: dict) -> EventuallyPeriodicSet:
        pattern = data.get("pattern", [])
        if data.get("period", len(pattern)) != len(pattern):
            raise ConfigError(f"Period {data.get('period')} does not match pattern {pattern}")
        return cls(tuple(bool(b) for b in data.get("prefix", [])), tuple(bool(b) for b in pattern))

    @classmethod
    def parse(cls, text: str) -> EventuallyPeriodicSet:
        """
        Parses the command-line set syntax.

        :param text: One of ``even``, ``odd``, ``all``, ``empty``,
            ``cofinite:N``, ``finite:a,b,c``, ``mod:M:R`` or
            ``bits:PREFIX|PATTERN`` (bits written as 0/1 characters).
        :return: The parsed set.
        """
        text = text.strip().lower()
        try:
            if text in ("even", "evens"):
                return residue_class(2, 0)
            if text in ("odd", "odds"):
                return residue_class(2, 1)
            if text == "all":
                return cofinite(0)
            if text == "empty":
                return finite(())
            kind, _, rest = text.partition(":")
            if kind == "cofinite":
                return cofinite(int(rest))
            if kind == "finite":
                return finite(int(n) for n in rest.split(",") if n)
            if kind == "mod":
                m, r = rest.split(":")
                return residue_class(int(m), int(r))
            if kind == "bits":
                prefix, _, pattern = rest.partition("|")
                return cls(tuple(c == "1" for c in prefix), tuple(c == "1" for c in pattern))
        except (ValueError, DomainError) as err:
            raise ConfigError(f"Malformed set '{text}': {err}") from err
        raise ConfigError(f"Unknown set syntax '{text}'")

    def describe(self) -> str:
        prefix = "".join("1" if b else "0" for b in self.prefix)
        pattern = "".join("1" if b else "0" for b in self.pattern)
        return f"bits:{prefix}|{pattern}"


def _normalize(
    prefix: tuple[bool, ...], pattern: tuple[bool, ...]
) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    m = len(pattern)
    for d in range(1, m + 1):
        if m % d == 0 and pattern == pattern[:d] * (m // d):
            pattern = pattern[:d]
            break
    # fold the prefix into the rotating pattern while the last bits agree
    while prefix and prefix[-1] == pattern[-1]:
        prefix = prefix[:-1]
        pattern = pattern[-1:] + pattern[:-1]
    return prefix, pattern


def _combine(s: EventuallyPeriodicSet, t: EventuallyPeriodicSet, op) -> EventuallyPeriodicSet:
    p = max(s.preperiod, t.preperiod)
    m = lcm(s.period, t.period)
    prefix = tuple(op(s.member(n), t.member(n)) for n in range(p))
    pattern = tuple(op(s.member(n), t.member(n)) for n in range(p, p + m))
    return EventuallyPeriodicSet(prefix, pattern)


def set_membership(s: EventuallyPeriodicSet, n: int) -> bool:
    return s.member(n)


def set_algebra(
    s: EventuallyPeriodicSet, t: EventuallyPeriodicSet | None, op: str
) -> EventuallyPeriodicSet:
    """
    Applies a Boolean operation by name.

    :param s: Left operand.
    :param t: Right operand (ignored for complement).
    :param op: ``union``, ``intersection`` or ``complement``.
    :return: The resulting set.
    """
    if op == "complement":
        return s.complement()
    if t is None:
        raise DomainError(f"Operation {op} needs two operands")
    if op == "union":
        return s.union(t)
    if op == "intersection":
        return s.intersection(t)
    raise DomainError(f"Unknown set operation {op!r}")


def cofinite(n0: int) -> EventuallyPeriodicSet:
    """{n : n >= n0}"""
    return EventuallyPeriodicSet((False,) * n0, (True,))


def finite(elements) -> EventuallyPeriodicSet:
    elements = sorted(set(elements))
    if elements and elements[0] < 0:
        raise DomainError(f"Negative element in {elements}")
    size = elements[-1] + 1 if elements else 0
    members = set(elements)
    return EventuallyPeriodicSet(tuple(n in members for n in range(size)), (False,))


def residue_class(m: int, r: int) -> EventuallyPeriodicSet:
    """{n : n = r (mod m)}"""
    if m < 1 or not 0 <= r < m:
        raise DomainError(f"Bad residue class {r} mod {m}")
    return EventuallyPeriodicSet((), tuple(i == r for i in range(m)))


def random_set(rng: random.Random, max_prefix: int = 4, max_period: int = 6) -> EventuallyPeriodicSet:
    """A seeded random eventually periodic set, for sweeps that must replay."""
    prefix = tuple(rng.random() < 0.5 for _ in range(rng.randint(0, max_prefix)))
    pattern = tuple(rng.random() < 0.5 for _ in range(rng.randint(1, max_period)))
    return EventuallyPeriodicSet(prefix, pattern)
