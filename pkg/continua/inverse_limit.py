"""
File: inverse_limit.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Threads of inverse limits of PL interval maps, the level-wise coordinate
    order and its ultrafilter limit, and the fiber estimates used to pull
    interval chains back to the limit space.

    The metric on the limit is d(x, y) = sum_i 2^-i |x_i - y_i|.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Callable

from continua.errors import CertificateError, DepthError, DomainError, PreconditionError
from continua.foundations import EventuallyPeriodicSet, cofinite, qstr
from continua.pl_maps import TENT, PLMap, evaluate, preimages
from continua.ultrafilter import (
    Certificate,
    Comparison,
    ComparisonVerdict,
    SimulatedUltrafilter,
    unknown,
    verdict_from_certificate,
)
from utils.logger import logger


@dataclass(frozen=True)
class InverseSystem:
    """Bonding maps f_i with f_i(x_(i+1)) = x_i."""

    name: str
    rule: Callable[[int], PLMap]
    constant_map: PLMap | None = None

    @classmethod
    def constant(cls, f: PLMap, name: str = "constant") -> InverseSystem:
        return cls(name, lambda i: f, f)

    @classmethod
    def tent(cls) -> InverseSystem:
        return cls.constant(TENT, "tent")

    @property
    def is_tent(self) -> bool:
        return self.constant_map == TENT

    def bonding(self, i: int) -> PLMap:
        return self.rule(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InverseSystem):
            return NotImplemented
        if self.constant_map is not None or other.constant_map is not None:
            return self.constant_map == other.constant_map
        return self.rule is other.rule

    def __hash__(self) -> int:
        return hash(self.constant_map) if self.constant_map is not None else id(self.rule)


TENT_SYSTEM = InverseSystem.tent()


class TailKind(str, Enum):
    NONE = "none"
    ZERO = "zero"
    BRANCH = "branch"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class ThreadPoint:
    """
    A point of the inverse limit: explicit coordinates x_0..x_N followed by a
    tail rule. Branch bits pick the smaller (0) or larger (1) preimage of the
    previous coordinate; periodic tails index their bits by absolute level.
    """

    stem: tuple[Fraction, ...]
    tail: TailKind = TailKind.NONE
    word: tuple[int, ...] | EventuallyPeriodicSet = ()
    system: InverseSystem = TENT_SYSTEM

    def __post_init__(self):
        if not self.stem:
            raise DomainError("A thread needs at least the coordinate x_0")
        if any(not 0 <= c <= 1 for c in self.stem):
            raise DomainError(f"Coordinates must lie in [0, 1]: {[qstr(c) for c in self.stem]}")
        for i, (lower, upper) in enumerate(zip(self.stem, self.stem[1:])):
            if evaluate(self.system.bonding(i), upper) != lower:
                raise DomainError(f"Thread condition fails between levels {i} and {i + 1}")
        if self.tail is TailKind.ZERO and self.stem[-1] != 0:
            raise DomainError("A zero tail must follow a zero coordinate")
        if self.tail is TailKind.PERIODIC and not isinstance(self.word, EventuallyPeriodicSet):
            raise DomainError("A periodic tail needs an eventually periodic branch word")

    @classmethod
    def zero(cls, system: InverseSystem = TENT_SYSTEM) -> ThreadPoint:
        return cls((Fraction(0),), TailKind.ZERO, (), system)

    @classmethod
    def from_stem(cls, coordinates, system: InverseSystem = TENT_SYSTEM) -> ThreadPoint:
        return cls(tuple(Fraction(c) for c in coordinates), TailKind.NONE, (), system)

    @classmethod
    def from_branches(
        cls,
        seed: Fraction,
        word: list[int] | tuple[int, ...] | EventuallyPeriodicSet,
        system: InverseSystem = TENT_SYSTEM,
    ) -> ThreadPoint:
        """
        Thread starting at x_0 = seed. A finite word gives a stem-only point
        of depth len(word); an eventually periodic set gives an infinite
        thread whose bit at level n is membership of n.
        """
        if isinstance(word, EventuallyPeriodicSet):
            return cls((Fraction(seed),), TailKind.PERIODIC, word, system)
        return cls((Fraction(seed),), TailKind.BRANCH, tuple(int(b) for b in word), system)

    @property
    def max_depth(self) -> int | None:
        if self.tail is TailKind.NONE:
            return len(self.stem) - 1
        if self.tail is TailKind.BRANCH:
            return len(self.stem) - 1 + len(self.word)
        return None

    @property
    def is_infinite(self) -> bool:
        return self.max_depth is None

    def branch_bit(self, n: int) -> int:
        """Preimage choice producing coordinate n (n beyond the stem)."""
        if self.tail is TailKind.ZERO:
            return 0
        if self.tail is TailKind.PERIODIC:
            return int(self.word.member(n))
        return self.word[n - len(self.stem)]

    def coordinates(self, depth: int) -> list[Fraction]:
        """x_0..x_depth."""
        if self.max_depth is not None and depth > self.max_depth:
            raise DepthError(f"Thread is only computable to level {self.max_depth}, asked {depth}")
        coords = list(self.stem[: depth + 1])
        for n in range(len(coords), depth + 1):
            options = preimages(self.system.bonding(n - 1), coords[-1])
            coords.append(options[min(self.branch_bit(n), len(options) - 1)])
        return coords

    def coordinate(self, n: int) -> Fraction:
        return self.coordinates(n)[n]

    def with_stem(self, depth: int) -> ThreadPoint:
        """Same point with coordinates up to depth stored explicitly."""
        coords = tuple(self.coordinates(depth))
        if self.tail in (TailKind.NONE, TailKind.ZERO, TailKind.PERIODIC):
            return ThreadPoint(coords, self.tail, self.word, self.system)
        return ThreadPoint(coords, TailKind.BRANCH, self.word[depth - len(self.stem) + 1 :], self.system)

    def to_dict(self) -> dict:
        tail: dict = {"kind": self.tail.value}
        if self.tail is TailKind.BRANCH:
            tail["word"] = list(self.word)
        elif self.tail is TailKind.PERIODIC:
            tail["word"] = self.word.to_dict()
        return {"stem": [qstr(c) for c in self.stem], "tail": tail}


def coordinate(p: ThreadPoint, n: int) -> Fraction:
    return p.coordinate(n)


@dataclass(frozen=True)
class LevelComparisonTrace:
    outcomes: tuple[Comparison, ...]

    @property
    def depth(self) -> int:
        return len(self.outcomes) - 1

    def le_levels(self) -> list[int]:
        return [n for n, c in enumerate(self.outcomes) if c is not Comparison.GT]

    def to_list(self) -> list[str]:
        return [c.value for c in self.outcomes]


def compare_level(x: ThreadPoint, y: ThreadPoint, n: int) -> Comparison:
    return Comparison.of(x.coordinate(n), y.coordinate(n))


def level_trace(x: ThreadPoint, y: ThreadPoint, depth: int) -> LevelComparisonTrace:
    xs, ys = x.coordinates(depth), y.coordinates(depth)
    return LevelComparisonTrace(tuple(Comparison.of(a, b) for a, b in zip(xs, ys)))


# -- exact traces for the tent system ---------------------------------------

_ZERO, _ONE, _OTHER = "zero", "one", "other"


def _value_class(v: Fraction) -> str:
    return _ZERO if v == 0 else _ONE if v == 1 else _OTHER


def _tent_step(state: tuple[Comparison, str | None], bx: int, by: int):
    relation, value = state
    if relation is Comparison.LT:
        return (Comparison.LT if bx == 0 else Comparison.GT), None
    if relation is Comparison.GT:
        return (Comparison.GT if by == 0 else Comparison.LT), None
    if value == _ONE:
        return Comparison.EQ, _OTHER
    if bx == by:
        if value == _ZERO:
            return Comparison.EQ, (_ZERO if bx == 0 else _ONE)
        return Comparison.EQ, _OTHER
    return (Comparison.LT if bx == 0 else Comparison.GT), None


def tent_index_sets(
    x: ThreadPoint, y: ThreadPoint
) -> tuple[EventuallyPeriodicSet, EventuallyPeriodicSet]:
    """
    Exact sets {n : x_n <= y_n} and {n : x_n >= y_n} for two infinite threads
    of the tent system. On the tent map the comparison at level n + 1 depends
    only on the comparison at level n, the branch bits and (when equal)
    whether the common value is 0, 1 or neither, so the trace is eventually
    periodic and this small automaton finds its period.
    """
    if not (x.system.is_tent and y.system.is_tent):
        raise DomainError("Exact index sets are only available for the tent system")
    if not (x.is_infinite and y.is_infinite):
        raise DepthError("Exact index sets need two infinite threads")
    start = max(len(x.stem), len(y.stem)) - 1
    xs, ys = x.coordinates(start), y.coordinates(start)
    relations = [Comparison.of(a, b) for a, b in zip(xs, ys)]
    state = (relations[-1], _value_class(xs[-1]) if relations[-1] is Comparison.EQ else None)

    def tail_params(p: ThreadPoint) -> tuple[int, int]:
        if p.tail is TailKind.PERIODIC:
            return p.word.preperiod, p.word.period
        return 0, 1

    (px, mx), (py, my) = tail_params(x), tail_params(y)
    periodic_from = max(px, py, start + 1)
    modulus = lcm(mx, my)
    seen: dict[tuple, int] = {}
    n = start + 1
    while True:
        if n >= periodic_from:
            key = (state, n % modulus)
            if key in seen:
                cycle_start = seen[key]
                break
            seen[key] = n
        state = _tent_step(state, x.branch_bit(n), y.branch_bit(n))
        relations.append(state[0])
        n += 1
    le = [r is not Comparison.GT for r in relations]
    ge = [r is not Comparison.LT for r in relations]
    return (
        EventuallyPeriodicSet(tuple(le[:cycle_start]), tuple(le[cycle_start:n])),
        EventuallyPeriodicSet(tuple(ge[:cycle_start]), tuple(ge[cycle_start:n])),
    )


def certify_threads(x: ThreadPoint, y: ThreadPoint) -> Certificate | None:
    if x == y:
        everything = cofinite(0)
        return Certificate(0, everything, everything, "identical threads")
    if x.system.is_tent and y.system.is_tent and x.is_infinite and y.is_infinite:
        le, ge = tent_index_sets(x, y)
        return Certificate(max(le.preperiod, ge.preperiod), le, ge, "periodic branch words")
    return None


def inverse_limit_order(
    x: ThreadPoint, y: ThreadPoint, u: SimulatedUltrafilter, depth: int
) -> ComparisonVerdict:
    """
    Compares two threads in the ultrafilter limit of the coordinate orders.

    :param x: First thread.
    :param y: Second thread.
    :param u: Tower deciding index sets that are neither finite nor cofinite.
    :param depth: Levels 0..depth are computed and checked.
    :return: Stabilized, ultrafilter-dependent or Unknown(depth).
    """
    trace = level_trace(x, y, depth)
    cert = certify_threads(x, y)
    if cert is None:
        logger.debug(f"No certificate for threads, trace {trace.to_list()}")
        return unknown(depth)
    for n, outcome in enumerate(trace.outcomes):
        if n >= cert.threshold and cert.relation_at(n) is not outcome:
            raise CertificateError(f"Certificate says {cert.relation_at(n)} at level {n}, trace says {outcome}")
    return verdict_from_certificate(cert, u, depth)


def fiber_diameter_bound(system: InverseSystem, n: int) -> Fraction:
    """
    Upper bound for the diameter of p_n^-1(t). Coordinates 0..n of such a
    fiber are determined by x_n, the remaining ones contribute at most the
    tail mass sum_(i>n) 2^-i = 2^-n.
    """
    if n < 0:
        raise DomainError(f"Level must be non-negative, got {n}")
    return Fraction(1, 2**n)


def _spread_factor(system: InverseSystem, n: int) -> Fraction:
    # sum_(i<=n) 2^-i * (Lipschitz constant of f_i o ... o f_(n-1))
    total, product = Fraction(0), Fraction(1)
    for i in range(n, -1, -1):
        total += product / 2**i
        if i > 0:
            product *= system.bonding(i - 1).lipschitz()
    return total


def epsilon_map_modulus(system: InverseSystem, n: int, eps: Fraction) -> Fraction:
    """
    Returns delta such that every U in I_n with diam(U) < delta has
    diam(p_n^-1(U)) < eps.

    :param system: The inverse system.
    :param n: Level of the projection.
    :param eps: Target diameter, must exceed the fiber bound at level n.
    :return: A positive rational delta, at most 1.
    """
    gamma = fiber_diameter_bound(system, n)
    if eps <= gamma:
        raise PreconditionError(f"eps = {eps} does not exceed the fiber bound {gamma} at level {n}")
    return min(Fraction(1), (eps - gamma) / _spread_factor(system, n))


def metric_upper_bound(x: ThreadPoint, y: ThreadPoint, depth: int) -> Fraction:
    """Partial sum of the metric up to depth plus the largest possible tail."""
    xs, ys = x.coordinates(depth), y.coordinates(depth)
    partial = sum((abs(a - b) / 2**i for i, (a, b) in enumerate(zip(xs, ys))), Fraction(0))
    return partial + Fraction(1, 2**depth)


def is_zero_minimal(points, u: SimulatedUltrafilter, depth: int) -> bool:
    """True when the zero thread is below or equal to every given thread."""
    zero = ThreadPoint.zero()
    for p in points:
        verdict = inverse_limit_order(zero, p, u, depth)
        if not verdict.decided or verdict.relation is Comparison.GT:
            logger.debug(f"Zero thread is not below {p.to_dict()}: {verdict}")
            return False
    return True
