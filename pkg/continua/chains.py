"""
File: chains.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Chains as link-index assignments. A point of a chain lies in one link or
    in two adjacent links; x <= y at a level when some link of x does not come
    after some link of y. Sequences of chains with mesh going to zero give the
    ultrafilter order, decided here from certificates supplied by the chain
    families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from math import ceil, floor
from typing import Any, Callable, Hashable, Sequence

from continua.errors import CertificateError, DepthError, DomainError, PreconditionError
from continua.foundations import IndexRange, qstr
from continua.inverse_limit import InverseSystem, ThreadPoint, epsilon_map_modulus, fiber_diameter_bound
from continua.ultrafilter import (
    Certificate,
    Comparison,
    ComparisonVerdict,
    SimulatedUltrafilter,
    verdict_from_certificate,
)
from utils.logger import logger


class LevelRelation(str, Enum):
    LE_ONLY = "LE_only"
    GE_ONLY = "GE_only"
    BOTH = "BOTH"

    def as_comparison(self) -> Comparison:
        return {
            LevelRelation.LE_ONLY: Comparison.LT,
            LevelRelation.GE_ONLY: Comparison.GT,
            LevelRelation.BOTH: Comparison.EQ,
        }[self]


@dataclass(frozen=True)
class ChainLevel:
    level: int
    k: int
    mesh_bound: Fraction
    locate: Callable[[Any], IndexRange]
    label: str = ""

    def index_of(self, point) -> IndexRange:
        rng = self.locate(point)
        if rng.hi > self.k:
            raise DomainError(f"Link {rng.hi} beyond the {self.k} links of {self.label} level {self.level}")
        return rng


def level_preorder(d: ChainLevel, x, y) -> LevelRelation:
    ix, iy = d.index_of(x), d.index_of(y)
    le = ix.lo <= iy.hi
    ge = iy.lo <= ix.hi
    if le and ge:
        return LevelRelation.BOTH
    return LevelRelation.LE_ONLY if le else LevelRelation.GE_ONLY


def reverse(d: ChainLevel) -> ChainLevel:
    return ChainLevel(
        d.level, d.k, d.mesh_bound, lambda p: d.index_of(p).reversed(d.k), f"{d.label} reversed"
    )


@dataclass(frozen=True)
class IntervalChain:
    """Links e_i = ((i-1)/k - 1/(4k), i/k + 1/(4k)) intersected with [0, 1]."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"A chain needs at least one link, got {self.k}")

    def link(self, i: int) -> tuple[Fraction, Fraction, bool, bool]:
        """(left, right, left_closed, right_closed) of link i."""
        k = self.k
        left = Fraction(i - 1, k) - Fraction(1, 4 * k)
        right = Fraction(i, k) + Fraction(1, 4 * k)
        return max(left, Fraction(0)), min(right, Fraction(1)), left < 0, right > 1

    def contains(self, i: int, t: Fraction) -> bool:
        left, right, lc, rc = self.link(i)
        return (left < t or (lc and t == left)) and (t < right or (rc and t == right))

    def intersects(self, i: int, j: int) -> bool:
        li, ri, lci, rci = self.link(i)
        lj, rj, lcj, rcj = self.link(j)
        left, right = max(li, lj), min(ri, rj)
        if left < right:
            return True
        if left > right:
            return False
        left_closed = (lci if li == left else True) and (lcj if lj == left else True)
        right_closed = (rci if ri == right else True) and (rcj if rj == right else True)
        return left_closed and right_closed

    def covers_unit(self) -> bool:
        if not self.contains(1, Fraction(0)) or not self.contains(self.k, Fraction(1)):
            return False
        return all(self.link(i)[1] > self.link(i + 1)[0] for i in range(1, self.k))

    def mesh(self) -> Fraction:
        return Fraction(1, self.k) + Fraction(1, 2 * self.k)

    def index_range(self, t: Fraction) -> IndexRange:
        if not 0 <= t <= 1:
            raise DomainError(f"t = {t} is outside [0, 1]")
        # integers i with t*k - 1/4 < i < t*k + 5/4
        lo = max(1, floor(t * self.k - Fraction(1, 4)) + 1)
        hi = min(self.k, ceil(t * self.k + Fraction(5, 4)) - 1)
        return IndexRange(lo, hi)


def canonical_interval_chain(k: int) -> IntervalChain:
    return IntervalChain(k)


def pullback_chain(system: InverseSystem, n: int, chain: IntervalChain) -> ChainLevel:
    """
    Pulls an interval chain on I_n back along the projection p_n. The target
    mesh is eps_n = gamma_n + 1/n and the interval chain must be finer than
    the modulus of p_n for that eps_n.
    """
    if n < 1:
        raise DomainError(f"Pullback levels start at 1, got {n}")
    eps = fiber_diameter_bound(system, n) + Fraction(1, n)
    delta = epsilon_map_modulus(system, n, eps)
    if chain.mesh() >= delta:
        raise PreconditionError(
            f"Interval chain mesh {chain.mesh()} is not below the modulus {delta} at level {n}"
        )
    return ChainLevel(
        n, chain.k, eps, lambda p: chain.index_range(p.coordinate(n)), f"pullback of {chain.k} links"
    )


def finest_needed(system: InverseSystem, n: int) -> IntervalChain:
    """Smallest canonical chain that pullback_chain accepts at level n."""
    eps = fiber_diameter_bound(system, n) + Fraction(1, n)
    delta = epsilon_map_modulus(system, n, eps)
    return IntervalChain(floor(Fraction(3, 2) / delta) + 1)


@dataclass(frozen=True)
class ChainSequence:
    name: str
    generator: Callable[[int], ChainLevel]
    certify: Callable[[Any, Any], Certificate | None] | None = None
    max_level: int | None = None

    def level(self, n: int) -> ChainLevel:
        if n < 1:
            raise DomainError(f"Chain levels start at 1, got {n}")
        if self.max_level is not None and n > self.max_level:
            raise DepthError(f"{self.name} is only defined up to level {self.max_level}")
        return self.generator(n)

    def mesh_is_shrinking(self, depth: int) -> bool:
        meshes = [self.level(n).mesh_bound for n in range(1, depth + 1)]
        return all(b <= a for a, b in zip(meshes, meshes[1:])) and meshes[-1] < meshes[0]


@dataclass(frozen=True)
class LevelRecord:
    level: int
    k: int
    mesh: Fraction
    idx_x: IndexRange
    idx_y: IndexRange
    relation: LevelRelation

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "k": self.k,
            "mesh": qstr(self.mesh),
            "idx_x": self.idx_x.to_list(),
            "idx_y": self.idx_y.to_list(),
            "relation": self.relation.value,
        }


def chain_trace(seq: ChainSequence, x, y, depth: int) -> list[LevelRecord]:
    records = []
    for n in range(1, depth + 1):
        d = seq.level(n)
        records.append(LevelRecord(n, d.k, d.mesh_bound, d.index_of(x), d.index_of(y), level_preorder(d, x, y)))
    return records


def check_certificate(cert: Certificate, records: Sequence[LevelRecord]) -> None:
    for rec in records:
        if rec.level >= cert.threshold and cert.relation_at(rec.level) is not rec.relation.as_comparison():
            raise CertificateError(
                f"Certificate ({cert.basis}) says {cert.relation_at(rec.level).value} at level "
                f"{rec.level}, the chain says {rec.relation.value}"
            )


def chain_order_compare(
    seq: ChainSequence, x, y, u: SimulatedUltrafilter, depth: int
) -> ComparisonVerdict:
    """
    Compares x and y in the ultrafilter order of a chain sequence.

    :param seq: The chain sequence.
    :param x: First point.
    :param y: Second point.
    :param u: Tower deciding index sets that are neither finite nor cofinite.
    :param depth: Levels 1..depth are evaluated and checked against the certificate.
    :return: Stabilized, ultrafilter-dependent or Unknown(depth).
    """
    records = chain_trace(seq, x, y, depth)
    cert = seq.certify(x, y) if seq.certify else None
    if cert is None:
        logger.debug(f"{seq.name}: no certificate for {x} vs {y}")
        return verdict_from_certificate(None, u, depth)
    if cert.threshold <= depth:
        check_certificate(cert, records)
    return verdict_from_certificate(cert, u, depth)


@dataclass(frozen=True)
class BetweennessResult:
    holds: bool
    first_failure: int | None
    levels_checked: tuple[int, ...]


def never_between_after(
    seq: ChainSequence, x, y, z, threshold_mesh: Fraction, depth: int
) -> BetweennessResult:
    """
    Checks that z is not between x and y (in either direction) at every level
    up to depth whose mesh is below threshold_mesh.
    """
    if z == x or z == y:
        raise PreconditionError("z must differ from x and y")
    checked = []
    for n in range(1, depth + 1):
        d = seq.level(n)
        if d.mesh_bound >= threshold_mesh:
            continue
        checked.append(n)
        xz, zy = level_preorder(d, x, z), level_preorder(d, z, y)
        forward = xz is not LevelRelation.GE_ONLY and zy is not LevelRelation.GE_ONLY
        backward = xz is not LevelRelation.LE_ONLY and zy is not LevelRelation.LE_ONLY
        if forward or backward:
            return BetweennessResult(False, n, tuple(checked))
    return BetweennessResult(True, None, tuple(checked))


def _positions(order: Sequence[Hashable]) -> dict:
    positions = {e: i for i, e in enumerate(order)}
    if len(positions) != len(order):
        raise DomainError(f"Order {list(order)} repeats an element")
    return positions


def equal_or_opposite(order1: Sequence[Hashable], order2: Sequence[Hashable]) -> str:
    """
    Classifies two total orders on the same finite set, each given as the
    list of its elements in increasing order.

    :return: "equal", "opposite" or "neither".
    """
    p1, p2 = _positions(order1), _positions(order2)
    if p1.keys() != p2.keys():
        raise DomainError("Orders are not on the same set of elements")
    agree = disagree = 0
    for a, b in combinations(order1, 2):
        if (p1[a] < p1[b]) == (p2[a] < p2[b]):
            agree += 1
        else:
            disagree += 1
    if disagree == 0:
        return "equal"
    if agree == 0:
        return "opposite"
    return "neither"


def triple_hypothesis(order1: Sequence[Hashable], order2: Sequence[Hashable]) -> bool:
    """Every triple increasing in order1 is monotone (either way) in order2."""
    p2 = _positions(order2)
    for a, b, c in combinations(order1, 3):
        if not (p2[a] < p2[b] < p2[c] or p2[a] > p2[b] > p2[c]):
            return False
    return True


def all_total_orders(elements: Sequence[Hashable]):
    return permutations(elements)


@dataclass
class OrderCheck:
    """Pairwise verdicts of a finite point list arranged into one order."""

    labels: tuple[str, ...]
    order: tuple[tuple[str, ...], ...] = ()
    undecided: list[tuple[str, str]] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def total(self) -> bool:
        return not self.undecided

    @property
    def passed(self) -> bool:
        return self.total and not self.violations

    def to_dict(self) -> dict:
        return {
            "order": [list(group) for group in self.order],
            "undecided": [list(pair) for pair in self.undecided],
            "violations": list(self.violations),
        }


def sorted_order(
    labels: Sequence[str],
    points: Sequence[Any],
    compare: Callable[[Any, Any], ComparisonVerdict],
    both_ways: bool = False,
) -> OrderCheck:
    """
    Builds the order on points from pairwise verdicts and checks totality
    and transitivity on every decided pair and triple.

    :param labels: Names of the points, in the same order.
    :param points: The points.
    :param compare: Verdict for one ordered pair.
    :param both_ways: Also compare (y, x) and check antisymmetry. Otherwise
        each unordered pair is compared once and (y, x) is the flipped verdict.
    :return: The order, undecided pairs and axiom violations.
    """
    size = len(points)
    check = OrderCheck(tuple(labels))
    rel: dict[tuple[int, int], Comparison] = {}
    for i in range(size):
        rel[i, i] = Comparison.EQ
        for j in range(i + 1, size):
            forward = compare(points[i], points[j])
            backward = compare(points[j], points[i]) if both_ways else None
            if not forward.decided or (backward is not None and not backward.decided):
                check.undecided.append((labels[i], labels[j]))
                continue
            rel[i, j] = forward.relation
            rel[j, i] = backward.relation if backward is not None else forward.relation.flipped()
            if rel[j, i] is not forward.relation.flipped():
                check.violations.append(f"antisymmetry {labels[i]} / {labels[j]}")
    le = {pair for pair, r in rel.items() if r is not Comparison.GT}
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if (a, b) in le and (b, c) in le and (a, c) in rel and (a, c) not in le:
                    check.violations.append(f"transitivity {labels[a]} <= {labels[b]} <= {labels[c]}")
    if check.total and not check.violations:
        below = {i: sum(1 for j in range(size) if rel[j, i] is Comparison.LT) for i in range(size)}
        groups: dict[int, list[str]] = {}
        for i in sorted(range(size), key=lambda i: (below[i], labels[i])):
            groups.setdefault(below[i], []).append(labels[i])
        check.order = tuple(tuple(g) for _, g in sorted(groups.items()))
    return check
