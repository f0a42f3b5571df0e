"""
File: forest.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The space S3: vertical intervals I_i = {1/i} x [0, 1/i] shrinking to the
    origin, with an oscillating ray A_i between each I_i and I_(i+1) that
    accumulates on both of them.

    I_i is parameterized by v in [0, 1] with y = sin(pi v / 2) / i, A_i by
    psi in Q, running from I_(i+1) (psi -> -inf) to I_i (psi -> +inf) while
    its height follows |sin(pi psi)|.

    Every binary sequence x_1 x_2 ... gives a chain family: at level m the
    links cover, in order, zone_1, walk_1, zone_2, ..., zone_L and a tail,
    where zone_i is I_i together with the far ends of A_(i-1) and A_i,
    covered bottom-up when x_i = 0 and top-down when x_i = 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor

from mpmath import iv

from continua.catalog.base import Block, CatalogPoint, Placement, Segment, Strand, StrandSpace
from continua.catalog.geometry import ivq, ivrange, sin_half_pi
from continua.chains import ChainLevel, LevelRelation, level_preorder
from continua.errors import ConfigError, DepthError, DomainError
from continua.foundations import EventuallyPeriodicSet

_STRAND = re.compile(r"^([ia])([1-9][0-9]*)$")


def _frac(q: Fraction) -> Fraction:
    return q - floor(q)


def _zone_density(m: int) -> int:
    return 8 * m


@lru_cache(maxsize=64)
def _bit_set(text: str) -> EventuallyPeriodicSet:
    return EventuallyPeriodicSet.parse(text)


def folded_height(psi: Fraction) -> Fraction:
    """v with sin(pi v / 2) = |sin(pi psi)|, piecewise linear in psi."""
    return 1 - abs(2 * _frac(psi) - 1)


class S3Space(StrandSpace):
    name = "s3"
    title = "comb of intervals joined by oscillating rays"
    variants = ("<binary prefix>", "<set syntax, e.g. bits:01|1>")
    structural = True

    def __init__(self):
        super().__init__()
        self.strands = {"origin": Strand("origin", "origin", Fraction(0), Fraction(0), "the point (0, 0)")}
        self.components = {"origin": (Segment("origin", Fraction(0), None),)}
        self.witnesses = {}
        for i in (1, 2, 3):
            self.witnesses[f"(1/{i},1/{i})"] = f"i{i}:1"
            self.witnesses[f"(1/{i},0)"] = f"i{i}:0"
        self.witnesses["(0,0)"] = "origin:0"

    # -- strands are generated on demand -------------------------------------

    def strand(self, name: str) -> Strand:
        match = _STRAND.match(name)
        if match is None:
            return super().strand(name)
        kind, i = match.group(1), int(match.group(2))
        if kind == "i":
            return Strand(name, name, Fraction(0), Fraction(1), f"v -> (1/{i}, sin(pi v/2)/{i})")
        return Strand(name, name, None, None, f"psi -> ray between I_{i + 1} and I_{i}")

    def segments(self, component: str) -> tuple[Segment, ...]:
        match = _STRAND.match(component)
        if match is None:
            return super().segments(component)
        if match.group(1) == "i":
            return (Segment(component, Fraction(0), Fraction(1)),)
        return (Segment(component, None, None),)

    # -- variants -------------------------------------------------------------

    def variant(self, name: str) -> str:
        text = name.strip().lower()
        if text and set(text) <= {"0", "1"}:
            return text
        try:
            return EventuallyPeriodicSet.parse(text).describe()
        except ConfigError:
            raise ConfigError(
                f"Space {self.name} takes a binary prefix like 011 or a bit set like bits:0|1, got '{name}'"
            ) from None

    def max_level(self, variant: str) -> int | None:
        return len(variant) if not variant.startswith("bits:") else None

    def bit(self, variant: str, i: int, m: int) -> int:
        """x_i as used at level m: bits past m are 0."""
        if i > m:
            return 0
        if variant.startswith("bits:"):
            return int(_bit_set(variant).member(i))
        if i > len(variant):
            raise DepthError(f"Prefix {variant} has no bit {i}")
        return int(variant[i - 1])

    # -- levels ---------------------------------------------------------------

    @staticmethod
    def zone_count(m: int) -> int:
        return 2 * m + 2

    def psi_start(self, variant: str, i: int, m: int) -> Fraction:
        """Where A_i leaves its walk and enters zone_i."""
        return 4 * m + (Fraction(1, 2) if self.bit(variant, i, m) == 0 else 0)

    def psi_end(self, variant: str, i: int, m: int) -> Fraction:
        """Where A_i leaves its walk and enters zone_(i+1)."""
        return -(4 * m + (0 if self.bit(variant, i + 1, m) == 0 else Fraction(1, 2)))

    def mesh_bound(self, n: int, variant: str) -> Fraction:
        return Fraction(7, 8 * n)

    def _index(self, p: CatalogPoint) -> tuple[str, int]:
        match = _STRAND.match(p.strand)
        return (match.group(1), int(match.group(2))) if match else (p.strand, 0)

    def zone_block(self, variant: str, i: int, m: int) -> Block:
        top_down = self.bit(variant, i, m) == 1
        start = self.psi_start(variant, i, m)
        end_before = self.psi_end(variant, i - 1, m) if i > 1 else None

        def height(p: CatalogPoint) -> Fraction | None:
            kind, j = self._index(p)
            if kind == "i" and j == i:
                return p.param
            if kind == "a" and j == i and p.param >= start:
                return folded_height(p.param)
            if kind == "a" and j == i - 1 and end_before is not None and p.param <= end_before:
                return folded_height(p.param)
            return None

        def locate(p: CatalogPoint) -> Fraction | None:
            h = height(p)
            if h is None:
                return None
            return 1 - h if top_down else h

        return Block(f"zone_{i}", 8 * m, locate)

    def walk_block(self, variant: str, i: int, m: int) -> Block:
        start, end = self.psi_start(variant, i, m), self.psi_end(variant, i, m)
        span = start - end

        def locate(p: CatalogPoint) -> Fraction | None:
            kind, j = self._index(p)
            if kind != "a" or j != i or not end <= p.param <= start:
                return None
            return (start - p.param) / span

        return Block(f"walk_{i}", int(span * 8 * m), locate)

    def tail_block(self, variant: str, m: int) -> Block:
        last = self.zone_count(m)
        start = self.psi_start(variant, last, m)

        def locate(p: CatalogPoint) -> Fraction | None:
            kind, j = self._index(p)
            if kind == "origin" or (kind in ("i", "a") and j > last):
                return Fraction(1, 2)
            if kind == "a" and j == last and p.param <= start:
                return Fraction(1, 2)
            return None

        return Block("tail", 1, locate)

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        blocks = []
        last = self.zone_count(n)
        for i in range(1, last + 1):
            blocks.append(self.zone_block(variant, i, n))
            if i < last:
                blocks.append(self.walk_block(variant, i, n))
        blocks.append(self.tail_block(variant, n))
        return blocks, False

    # -- certificates ---------------------------------------------------------

    def placement(self, p: CatalogPoint, variant: str) -> Placement:
        p = self.point(p)
        kind, i = self._index(p)
        if kind == "i":
            return Placement(i, ("zone", i), p.param, _zone_density)
        if kind == "a":
            settle = max(i, floor(abs(p.param) / 4) + 1)
            return Placement(settle, ("walk", i), p.param, _zone_density)
        return Placement(1, ("tail",), Fraction(0), _zone_density)

    # -- geometry -------------------------------------------------------------

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        kind, i = self._index(CatalogPoint(strand, lo))
        if kind == "origin":
            zero = ivq(Fraction(0))
            return zero, zero
        if kind == "i":
            x = ivq(Fraction(1, i))
            return x, x * sin_half_pi(ivrange(lo, hi))
        if kind == "a":
            centre = (Fraction(1, i + 1) + Fraction(1, i)) / 2
            half_width = (Fraction(1, i) - Fraction(1, i + 1)) / 2
            psi = ivrange(lo, hi)
            x = ivq(centre) + ivq(half_width) * psi / (1 + abs(psi))
            return x, x * abs(iv.sin(iv.pi * psi))
        raise DomainError(f"Space {self.name} has no strand '{strand}'")

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        steps = 64 * n
        last = self.zone_count(n)
        reach = 4 * n + 2
        paths = []
        for i in range(1, last + 2):
            paths.append([CatalogPoint(f"i{i}", Fraction(k, steps)) for k in range(steps + 1)])
        for i in range(1, last + 1):
            paths.append(
                [CatalogPoint(f"a{i}", Fraction(k, steps) - reach) for k in range(2 * reach * steps + 1)]
            )
        paths.append([CatalogPoint("origin", Fraction(0))])
        return paths

    # -- witnesses ------------------------------------------------------------

    def witness_points_for(self, length: int) -> tuple[list[str], list[CatalogPoint]]:
        """Top and bottom of I_1..I_L for the zone count L of a level."""
        labels, points = [], []
        for i in range(1, length + 1):
            labels += [f"(1/{i},1/{i})", f"(1/{i},0)"]
            points += [CatalogPoint(f"i{i}", Fraction(1)), CatalogPoint(f"i{i}", Fraction(0))]
        return labels, points


def covering_pattern(level: ChainLevel, count: int) -> tuple[int | None, ...]:
    """
    Reads off how a level covers I_1..I_count: 0 when (1/i, 0) comes first,
    1 when (1/i, 1/i) does, None when the two share a link.
    """
    pattern = []
    for i in range(1, count + 1):
        relation = level_preorder(level, CatalogPoint(f"i{i}", Fraction(0)), CatalogPoint(f"i{i}", Fraction(1)))
        pattern.append({LevelRelation.LE_ONLY: 0, LevelRelation.GE_ONLY: 1}.get(relation))
    return tuple(pattern)


def all_prefixes(length: int) -> list[str]:
    return ["".join(bits) for bits in product("01", repeat=length)]
