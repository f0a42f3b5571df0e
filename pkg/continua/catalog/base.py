"""
File: base.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Strand spaces: planar continua given as finitely many parameterized
    strands (plus infinite families built on demand), chain levels assembled
    from ordered blocks of canonical interval chains, stabilization
    certificates and separating subcontinua.

    A block covers part of the space by a parameter t in [0, 1]; the block's
    links are the canonical interval chain of its own size, shifted past the
    blocks before it. A point located by two blocks (a junction) gets the
    union of both ranges, which is always two adjacent links.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from continua.catalog.geometry import Box, sqrt_lower
from continua.chains import ChainLevel, ChainSequence, IntervalChain, LevelRelation, level_preorder
from continua.errors import CertificateError, ConfigError, DomainError, PreconditionError
from continua.foundations import IndexRange, cofinite, finite, qstr, to_q
from continua.ultrafilter import Certificate
from utils.logger import logger

MAX_CERTIFIED_LEVEL = 128
SEPARATION_PIECES = 64
LEVEL_CACHE_SIZE = 512
LOCATE_CACHE_SIZE = 4096


@dataclass(frozen=True, order=True)
class CatalogPoint:
    """A point of a strand space, named by its strand and exact parameter."""

    strand: str
    param: Fraction

    @classmethod
    def parse(cls, text: str | CatalogPoint) -> CatalogPoint:
        """``strand:param``; a bare rational is a point of the arc."""
        if isinstance(text, CatalogPoint):
            return text
        strand, sep, param = str(text).strip().rpartition(":")
        if not sep:
            return cls("arc", to_q(param))
        return cls(strand.strip().lower(), to_q(param.strip()))

    def __str__(self) -> str:
        return f"{self.strand}:{self.param}"

    def to_dict(self) -> dict:
        return {"strand": self.strand, "param": qstr(self.param)}


@dataclass(frozen=True)
class Strand:
    name: str
    component: str
    lo: Fraction | None = None
    hi: Fraction | None = None
    description: str = ""

    def contains(self, q: Fraction) -> bool:
        return (self.lo is None or q >= self.lo) and (self.hi is None or q <= self.hi)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "component": self.component,
            "domain": [qstr(self.lo) if self.lo is not None else None,
                       qstr(self.hi) if self.hi is not None else None],
            "description": self.description,
        }


@dataclass(frozen=True)
class Segment:
    """
    Piece of an arc component traversed from start to end. An open end
    (None) is only allowed on single-segment components: a ray when only
    end is None, a line when both are.
    """

    strand: str
    start: Fraction | None
    end: Fraction | None


@dataclass(frozen=True)
class Block:
    name: str
    links: int
    locate: Callable[[CatalogPoint], Fraction | None]


@dataclass(frozen=True)
class Placement:
    """
    Where a point sits from level `settle` on: inside block `key`, at
    t * links = measure * density(n) up to a level-independent offset.
    """

    settle: int
    key: tuple
    measure: Fraction
    density: Callable[[int], int]


def block_level(
    n: int,
    blocks: list[Block],
    mesh_bound: Fraction,
    label: str,
    aliases: Callable[[CatalogPoint], Iterable[CatalogPoint]],
    reverse: bool = False,
) -> ChainLevel:
    """
    Concatenates blocks into one chain level.

    :param n: Level number.
    :param blocks: Blocks in link order.
    :param mesh_bound: Declared bound for every link diameter.
    :param label: Name used in error messages.
    :param aliases: All names of a point (junctions have several).
    :param reverse: Number the links from the other end.
    :return: The chain level.
    """
    offsets, k = [], 0
    for block in blocks:
        offsets.append(k)
        k += block.links

    @lru_cache(maxsize=LOCATE_CACHE_SIZE)
    def locate(p: CatalogPoint) -> IndexRange:
        ranges = []
        for q in aliases(p):
            for offset, block in zip(offsets, blocks):
                t = block.locate(q)
                if t is not None:
                    ranges.append(IntervalChain(block.links).index_range(t).shifted(offset))
        if not ranges:
            raise DomainError(f"{p} is not covered by {label} level {n}")
        lo, hi = min(r.lo for r in ranges), max(r.hi for r in ranges)
        if hi - lo > 1:
            raise DomainError(f"{p} falls into links {lo}..{hi} of {label} level {n}")
        rng = IndexRange(lo, hi)
        return rng.reversed(k) if reverse else rng

    return ChainLevel(n, k, mesh_bound, locate, label)


def stable_certificate(relation: LevelRelation, threshold: int, basis: str) -> Certificate:
    if relation is LevelRelation.BOTH:
        raise CertificateError(f"Relation is not strict at the claimed threshold {threshold} ({basis})")
    if relation is LevelRelation.LE_ONLY:
        return Certificate(threshold, cofinite(threshold), finite(()), basis)
    return Certificate(threshold, finite(()), cofinite(threshold), basis)


def first_separating_level(delta: Fraction, density: Callable[[int], int], start: int) -> int | None:
    """First n >= start with |delta| * density(n) >= 3/2, the width of a canonical link."""
    for n in range(max(start, 1), MAX_CERTIFIED_LEVEL + 1):
        if abs(delta) * density(n) >= Fraction(3, 2):
            return n
    return None


@dataclass
class Separation:
    """A subcontinuum M containing x and y but not z, and half of d(z, M)."""

    component: str
    pieces: list[tuple[str, Fraction, Fraction]]
    threshold_mesh: Fraction

    def to_dict(self) -> dict:
        return {
            "component": self.component,
            "pieces": [[s, qstr(lo), qstr(hi)] for s, lo, hi in self.pieces],
            "threshold_mesh": qstr(self.threshold_mesh),
        }


class StrandSpace:
    """
    Base class of the catalog spaces. Subclasses declare strands, components
    and variants, and build chain levels from blocks.
    """

    name = ""
    title = ""
    variants: tuple[str, ...] = ()
    structural = False

    def __init__(self):
        self.strands: dict[str, Strand] = {}
        self.components: dict[str, tuple[Segment, ...]] = {}
        self.witnesses: dict[str, str] = {}
        self._levels: dict[tuple[int, str], ChainLevel] = {}

    # -- points -------------------------------------------------------------

    def strand(self, name: str) -> Strand:
        try:
            return self.strands[name]
        except KeyError:
            raise DomainError(f"Space {self.name} has no strand '{name}'") from None

    def validate(self, p: CatalogPoint) -> CatalogPoint:
        strand = self.strand(p.strand)
        if not strand.contains(p.param):
            raise DomainError(f"Parameter {p.param} is outside the domain of strand {strand.name}")
        return p

    def point(self, text: str | CatalogPoint) -> CatalogPoint:
        return self.canonical(self.validate(CatalogPoint.parse(text)))

    def aliases(self, p: CatalogPoint) -> tuple[CatalogPoint, ...]:
        return (p,)

    def canonical(self, p: CatalogPoint) -> CatalogPoint:
        return min(self.aliases(p))

    def segments(self, component: str) -> tuple[Segment, ...]:
        try:
            return self.components[component]
        except KeyError:
            raise DomainError(f"Space {self.name} has no component '{component}'") from None

    def component_of(self, p: CatalogPoint) -> str:
        return self.strand(self.point(p).strand).component

    def witness_points(self) -> dict[str, CatalogPoint]:
        return {label: self.point(text) for label, text in self.witnesses.items()}

    # -- chains -------------------------------------------------------------

    def variant(self, name: str) -> str:
        if name not in self.variants:
            raise ConfigError(f"Space {self.name} has no variant '{name}', choose from {list(self.variants)}")
        return name

    def max_level(self, variant: str) -> int | None:
        return None

    def mesh_bound(self, n: int, variant: str) -> Fraction:
        raise NotImplementedError

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        raise NotImplementedError

    def level(self, n: int, variant: str) -> ChainLevel:
        variant = self.variant(variant)
        key = (n, variant)
        if key not in self._levels:
            if len(self._levels) >= LEVEL_CACHE_SIZE:
                self._levels.clear()
            blocks, reverse = self.blocks(n, variant)
            self._levels[key] = block_level(
                n, blocks, self.mesh_bound(n, variant), f"{self.name}/{variant}", self.aliases, reverse
            )
        return self._levels[key]

    def family(self, variant: str) -> ChainSequence:
        variant = self.variant(variant)
        return ChainSequence(
            f"{self.name}/{variant}",
            lambda n: self.level(n, variant),
            lambda x, y: self.certify(variant, x, y),
            self.max_level(variant),
        )

    # -- certificates -------------------------------------------------------

    def settle(self, p: CatalogPoint, variant: str) -> int:
        """Level from which the point keeps its block."""
        return 1

    def placement(self, p: CatalogPoint, variant: str) -> Placement:
        raise NotImplementedError

    def certify(self, variant: str, x: CatalogPoint, y: CatalogPoint) -> Certificate | None:
        """
        Certificate for the level relation of x and y, or None when no
        threshold can be proved below MAX_CERTIFIED_LEVEL.
        """
        x, y = self.point(x), self.point(y)
        if x == y:
            everything = cofinite(1)
            return Certificate(1, everything, everything, "identical points")
        threshold = (
            self.structural_threshold(variant, x, y)
            if self.structural
            else self.metric_threshold(variant, x, y)
        )
        max_level = self.max_level(variant)
        if threshold is None or (max_level is not None and threshold > max_level):
            logger.debug(f"{self.name}/{variant}: no certificate for {x} vs {y}")
            return None
        basis = "block structure" if self.structural else "mesh below half the distance"
        return self.certificate_at(variant, x, y, threshold, basis)

    def certificate_at(
        self, variant: str, x: CatalogPoint, y: CatalogPoint, threshold: int, basis: str
    ) -> Certificate:
        relation = level_preorder(self.level(threshold, variant), x, y)
        return stable_certificate(relation, threshold, basis)

    def metric_threshold(self, variant: str, x: CatalogPoint, y: CatalogPoint) -> int | None:
        """First level past both settle levels whose mesh bound is below d(x, y) / 2."""
        half = self.distance_lower(x, y) / 2
        if half <= 0:
            return None
        start = max(self.settle(x, variant), self.settle(y, variant))
        for n in range(start, MAX_CERTIFIED_LEVEL + 1):
            if self.mesh_bound(n, variant) < half:
                return n
        return None

    def structural_threshold(self, variant: str, x: CatalogPoint, y: CatalogPoint) -> int | None:
        px, py = self.placement(x, variant), self.placement(y, variant)
        start = max(px.settle, py.settle)
        if px.key != py.key:
            return start
        return first_separating_level(px.measure - py.measure, px.density, start)

    # -- geometry -----------------------------------------------------------

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        """Interval enclosures (X, Y) of the strand over parameters [lo, hi]."""
        raise NotImplementedError

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        """Sample points along each strand, in parameter order, dense enough for eight per link."""
        raise NotImplementedError

    def breakpoints(self, strand: str, lo: Fraction, hi: Fraction) -> list[Fraction]:
        """Parameters strictly inside (lo, hi) where the parameterization changes formula."""
        return []

    def box(self, p: CatalogPoint) -> Box:
        return Box.enclosing(*self._xy(p.strand, p.param, p.param))

    def piece_boxes(self, strand: str, lo: Fraction, hi: Fraction, pieces: int) -> list[Box]:
        cuts = [lo, *self.breakpoints(strand, lo, hi), hi]
        boxes = []
        for a, b in zip(cuts, cuts[1:]):
            step = (b - a) / pieces
            for i in range(pieces):
                boxes.append(Box.enclosing(*self._xy(strand, a + i * step, a + (i + 1) * step)))
        return boxes

    def distance_lower(self, x: CatalogPoint, y: CatalogPoint) -> Fraction:
        return sqrt_lower(self.box(x).gap_squared(self.box(y)))

    def distance_to_arc(self, z: CatalogPoint, arc: list, pieces: int = SEPARATION_PIECES) -> Fraction:
        """Lower bound for the distance from z to a union of strand pieces."""
        zbox = self.box(z)
        squared = min(
            zbox.gap_squared(b)
            for strand, lo, hi in arc
            for b in self.piece_boxes(strand, lo, hi, pieces if lo != hi else 1)
        )
        return sqrt_lower(squared)

    # -- arc components -----------------------------------------------------

    def _segment_coordinate(self, p: CatalogPoint) -> tuple[str, Fraction]:
        for q in self.aliases(p):
            component = self.strand(q.strand).component
            for k, seg in enumerate(self.segments(component)):
                if seg.strand != q.strand:
                    continue
                if seg.start is None:
                    return component, q.param
                if seg.end is None:
                    return component, q.param - seg.start
                return component, k + (q.param - seg.start) / (seg.end - seg.start)
        raise DomainError(f"{p} lies on no declared component of {self.name}")

    def arc_pieces(self, x: CatalogPoint, y: CatalogPoint) -> tuple[str, list, Fraction, Fraction]:
        """The arc between x and y as strand pieces, with both arc coordinates."""
        cx, gx = self._segment_coordinate(x)
        cy, gy = self._segment_coordinate(y)
        if cx != cy:
            raise DomainError(f"{x} and {y} lie in different arc components ({cx}, {cy})")
        g1, g2 = min(gx, gy), max(gx, gy)
        segments = self.segments(cx)
        if len(segments) == 1 and (segments[0].start is None or segments[0].end is None):
            seg = segments[0]
            lo = g1 if seg.start is None else seg.start + g1
            hi = g2 if seg.start is None else seg.start + g2
            return cx, [(seg.strand, lo, hi)], g1, g2
        pieces = []
        for k, seg in enumerate(segments):
            a, b = max(g1, Fraction(k)), min(g2, Fraction(k + 1))
            if a > b or (a == b and pieces):
                continue
            pa = seg.start + (a - k) * (seg.end - seg.start)
            pb = seg.start + (b - k) * (seg.end - seg.start)
            pieces.append((seg.strand, min(pa, pb), max(pa, pb)))
        return cx, pieces, g1, g2


def separation_data(space: StrandSpace, x, y, z, pieces: int = SEPARATION_PIECES) -> Separation:
    """
    Returns the arc M from x to y and a positive rational lower bound on
    d(z, M) / 2. Raises PreconditionError when no such M exists: x and y in
    different arc components, or z on the arc between them.
    """
    x, y, z = space.point(x), space.point(y), space.point(z)
    try:
        component, arc, g1, g2 = space.arc_pieces(x, y)
    except DomainError as err:
        raise PreconditionError(f"No separating continuum: {err}") from err
    cz, gz = space._segment_coordinate(z)
    if cz == component and g1 <= gz <= g2:
        raise PreconditionError(f"{z} lies on the arc between {x} and {y}")
    half = space.distance_to_arc(z, arc, pieces) / 2
    if half <= 0:
        raise PreconditionError(f"Could not certify a positive distance from {z} to the arc {x}..{y}")
    return Separation(component, arc, half)
