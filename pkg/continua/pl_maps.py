"""
File: pl_maps.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Piecewise-linear self-maps of [0, 1] with rational breakpoints:
    evaluation, composition, exact preimages and iterated preimage sets.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from continua.errors import DomainError
from continua.foundations import qstr, to_q


@dataclass(frozen=True, slots=True)
class PLMap:
    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        b, v = self.breakpoints, self.values
        if len(b) < 2 or len(b) != len(v):
            raise DomainError("A PL map needs at least two breakpoints, one value each")
        if b[0] != 0 or b[-1] != 1:
            raise DomainError(f"Breakpoints must start at 0 and end at 1, got {b[0]}..{b[-1]}")
        if any(lo >= hi for lo, hi in zip(b, b[1:])):
            raise DomainError("Breakpoints must be strictly increasing")
        if any(not 0 <= y <= 1 for y in v):
            raise DomainError("Values must lie in [0, 1]")

    @classmethod
    def from_points(cls, points) -> PLMap:
        """Builds a map from (breakpoint, value) pairs given as rationals or strings."""
        pairs = [(to_q(t), to_q(y)) for t, y in points]
        return cls(tuple(t for t, _ in pairs), tuple(y for _, y in pairs))

    def segments(self):
        return zip(
            zip(self.breakpoints, self.breakpoints[1:]), zip(self.values, self.values[1:])
        )

    def __call__(self, t: Fraction) -> Fraction:
        return evaluate(self, t)

    def lipschitz(self) -> Fraction:
        return max(abs(v1 - v0) / (b1 - b0) for (b0, b1), (v0, v1) in self.segments())

    def to_dict(self) -> dict:
        return {
            "breakpoints": [qstr(b) for b in self.breakpoints],
            "values": [qstr(v) for v in self.values],
        }

    @classmethod
    def from_dict(cls, data: dict) -> PLMap:
        return cls.from_points(zip(data["breakpoints"], data["values"]))


TENT = PLMap((Fraction(0), Fraction(1, 2), Fraction(1)), (Fraction(0), Fraction(1), Fraction(0)))


def evaluate(f: PLMap, t: Fraction) -> Fraction:
    if not 0 <= t <= 1:
        raise DomainError(f"t = {t} is outside [0, 1]")
    i = min(bisect_right(f.breakpoints, t) - 1, len(f.breakpoints) - 2)
    b0, b1 = f.breakpoints[i], f.breakpoints[i + 1]
    v0, v1 = f.values[i], f.values[i + 1]
    return v0 + (v1 - v0) * (t - b0) / (b1 - b0)


def preimages(f: PLMap, y: Fraction) -> list[Fraction]:
    """
    All t with f(t) = y, ascending and exact.

    :param f: The map.
    :param y: Target value in [0, 1].
    :return: Sorted list of solutions, possibly empty.
    """
    if not 0 <= y <= 1:
        raise DomainError(f"y = {y} is outside [0, 1]")
    found: set[Fraction] = set()
    for (b0, b1), (v0, v1) in f.segments():
        if v0 == v1:
            if v0 == y:
                raise DomainError(f"Map is constant {y} on [{b0}, {b1}], infinitely many preimages")
            continue
        if min(v0, v1) <= y <= max(v0, v1):
            found.add(b0 + (y - v0) * (b1 - b0) / (v1 - v0))
    return sorted(found)


def compose(f: PLMap, g: PLMap) -> PLMap:
    """Returns f after g as a PL map."""
    points = set(g.breakpoints)
    for (b0, b1), (v0, v1) in g.segments():
        if v0 == v1:
            continue
        for c in f.breakpoints:
            if min(v0, v1) < c < max(v0, v1):
                points.add(b0 + (c - v0) * (b1 - b0) / (v1 - v0))
    ordered = sorted(points)
    return PLMap(tuple(ordered), tuple(evaluate(f, evaluate(g, t)) for t in ordered))


def iterated_preimage_set(f: PLMap, seed: Fraction, i: int) -> list[Fraction]:
    """The set B_i with B_0 = {seed} and B_(j+1) = f^-1[B_j], ascending."""
    if i < 0:
        raise DomainError(f"Iteration count must be non-negative, got {i}")
    level = [seed]
    for _ in range(i):
        level = sorted({t for y in level for t in preimages(f, y)})
    return level
