"""
File: knaster_witness.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Pairs of threads in the tent inverse limit whose coordinate order follows
    a prescribed index set A: x_n > y_n exactly for n in A. Two ultrafilters
    that disagree on A then order the pair in opposite ways.

    Both threads start at 1/2. At every level y takes the smaller preimage
    unless no choice for x realizes the wanted sign, in which case y takes
    the larger one; x then takes the first preimage with the wanted sign.
    The choice at level n only depends on whether n - 1 and n lie in A, so
    both branch words are eventually periodic and the threads are infinite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from continua.errors import DomainError, PreconditionError
from continua.foundations import EventuallyPeriodicSet, cofinite, finite, qstr
from continua.inverse_limit import (
    TENT_SYSTEM,
    ThreadPoint,
    certify_threads,
    inverse_limit_order,
    is_zero_minimal,
    level_trace,
)
from continua.pl_maps import TENT, preimages
from continua.ultrafilter import Certificate, Comparison, ComparisonVerdict, SimulatedUltrafilter, decides
from utils.logger import logger

SEED = Fraction(1, 2)


@dataclass(frozen=True)
class WitnessPair:
    A: EventuallyPeriodicSet
    depth: int
    x: ThreadPoint
    y: ThreadPoint
    x_word: tuple[int, ...]
    y_word: tuple[int, ...]
    flags: tuple[str, ...] = ()

    def greater_levels(self) -> list[int]:
        """Levels 1..depth with x_n > y_n."""
        xs, ys = self.x.coordinates(self.depth), self.y.coordinates(self.depth)
        return [n for n in range(1, self.depth + 1) if xs[n] > ys[n]]

    def target_levels(self) -> list[int]:
        return self.A.members(1, self.depth + 1)

    def is_consistent(self) -> bool:
        """Coordinates differ on 1..depth and x_n > y_n exactly for n in A."""
        xs, ys = self.x.coordinates(self.depth), self.y.coordinates(self.depth)
        distinct = all(xs[n] != ys[n] for n in range(1, self.depth + 1))
        return distinct and self.greater_levels() == self.target_levels()

    def certificate(self) -> Certificate | None:
        """Exact LE/GE index sets read off the two periodic branch words."""
        return certify_threads(self.x, self.y)

    def to_dict(self) -> dict:
        xs, ys = self.x.coordinates(self.depth), self.y.coordinates(self.depth)
        return {
            "A": self.A.to_dict(),
            "depth": self.depth,
            "x": [qstr(c) for c in xs],
            "y": [qstr(c) for c in ys],
            "x_word": list(self.x_word),
            "y_word": list(self.y_word),
            "greater_levels": self.greater_levels(),
            "flags": list(self.flags),
        }


def branch_sets(A: EventuallyPeriodicSet) -> tuple[EventuallyPeriodicSet, EventuallyPeriodicSet]:
    """
    Levels where x and y take the larger preimage.

    From equal values (level 0) the wanted sign alone fixes the bits: 1/0
    for x > y, 0/1 for x < y. From x_(n-1) < y_(n-1), x goes up to get above
    and both stay low otherwise; from x_(n-1) > y_(n-1), y goes up to get
    above x and both stay low otherwise.
    """
    wanted = A & cofinite(1)
    after_above = wanted.shift(1)
    x_bits = wanted - after_above
    y_bits = ~A & cofinite(1) & (after_above | finite([1]))
    return x_bits, y_bits


def build_witness(A: EventuallyPeriodicSet, depth: int) -> WitnessPair:
    """
    Builds the infinite threads x and y from their periodic branch words.

    :param A: Levels where x must exceed y.
    :param depth: Levels past x_0 = y_0 = 1/2 that are reported and checked.
    :return: The pair with the first depth branch bits (1 = larger preimage).
    """
    if depth < 1:
        raise DomainError(f"Witness depth must be at least 1, got {depth}")
    flags = []
    if A.is_finite():
        flags.append("A is finite: every ultrafilter puts x below y")
    elif A.is_cofinite():
        flags.append("A is cofinite: every ultrafilter puts x above y")
    for flag in flags:
        logger.warning(f"Witness for {A.describe()}: {flag}")
    x_bits, y_bits = branch_sets(A)
    return WitnessPair(
        A,
        depth,
        ThreadPoint.from_branches(SEED, x_bits, TENT_SYSTEM),
        ThreadPoint.from_branches(SEED, y_bits, TENT_SYSTEM),
        tuple(int(x_bits.member(n)) for n in range(1, depth + 1)),
        tuple(int(y_bits.member(n)) for n in range(1, depth + 1)),
        tuple(flags),
    )


@dataclass
class DistinctOrdersReport:
    pair: WitnessPair
    trace: list[str]
    matches: bool
    first: ComparisonVerdict
    second: ComparisonVerdict
    oracle: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def opposite(self) -> bool:
        return (
            self.first.decided
            and self.second.decided
            and self.first.relation is self.second.relation.flipped()
            and self.first.relation is not Comparison.EQ
        )

    @property
    def passed(self) -> bool:
        return self.matches and self.opposite and self.oracle is not False

    def to_dict(self) -> dict:
        return {
            "pair": self.pair.to_dict(),
            "trace": self.trace,
            "matches": self.matches,
            "u1": self.first.to_dict(),
            "u2": self.second.to_dict(),
            "opposite": self.opposite,
            "oracle": self.oracle,
            "notes": self.notes,
        }


def pair_order(pair: WitnessPair, u: SimulatedUltrafilter) -> ComparisonVerdict:
    # the certificate starts once the prefix of A has passed
    return inverse_limit_order(pair.x, pair.y, u, max(pair.depth, pair.A.preperiod + 1))


def demonstrate_distinct_orders(
    A: EventuallyPeriodicSet,
    depth: int,
    u1: SimulatedUltrafilter,
    u2: SimulatedUltrafilter,
    oracle_depth: int = 0,
) -> DistinctOrdersReport:
    """
    Builds the witness pair for A and orders it under two ultrafilters that
    disagree on A.

    :param A: Index set with A in u1 and A not in u2.
    :param depth: Levels traced and checked against the certificate.
    :param u1: Tower containing A.
    :param u2: Tower not containing A.
    :param oracle_depth: When positive, also confirm the pair by brute force at this depth.
    :return: Trace, both verdicts and the oracle result.
    """
    if not decides(u1, A) or decides(u2, A):
        raise PreconditionError(
            f"Ultrafilters must disagree on {A.describe()} with A in u1: "
            f"u1 {decides(u1, A)}, u2 {decides(u2, A)}"
        )
    pair = build_witness(A, depth)
    trace = level_trace(pair.x, pair.y, depth)
    report = DistinctOrdersReport(
        pair,
        trace.to_list(),
        pair.is_consistent(),
        pair_order(pair, u1),
        pair_order(pair, u2),
    )
    if oracle_depth > 0:
        small = build_witness(A, oracle_depth)
        report.oracle = (small.x_word, small.y_word) in realizing_pairs(A, oracle_depth)
    logger.info(f"Witness for {A.describe()}: u1 {report.first}, u2 {report.second}")
    return report


def _stem(word: tuple[int, ...]) -> list[Fraction]:
    coords = [SEED]
    for bit in word:
        options = preimages(TENT, coords[-1])
        coords.append(options[min(bit, len(options) - 1)])
    return coords


def realizing_pairs(A: EventuallyPeriodicSet, depth: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All branch-word pairs of length depth whose strict signs on 1..depth follow A."""
    if depth > 12:
        raise DomainError(f"Brute force over 4^{depth} word pairs is too large")
    stems = {word: _stem(word) for word in product((0, 1), repeat=depth)}
    wanted = [A.member(n) for n in range(1, depth + 1)]
    found = set()
    for (wx, xs), (wy, ys) in product(stems.items(), repeat=2):
        if all(xs[n] != ys[n] and (xs[n] > ys[n]) == wanted[n - 1] for n in range(1, depth + 1)):
            found.add((wx, wy))
    return found


def zero_thread_minimal(samples: dict[str, ThreadPoint], u: SimulatedUltrafilter, depth: int) -> dict:
    """Orders the zero thread against each sample; it should never be above one."""
    return {
        "minimal": is_zero_minimal(samples.values(), u, depth),
        "samples": sorted(samples),
    }
