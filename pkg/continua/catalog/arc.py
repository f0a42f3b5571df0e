"""
File: arc.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The arc [0, 1] with its canonical chains: the standard numbering, the
    reversed one, and an alternating family that switches numbering every
    level.
"""

from __future__ import annotations

from fractions import Fraction

from continua.catalog.base import Block, CatalogPoint, Segment, Strand, StrandSpace
from continua.catalog.geometry import ivq, ivrange
from continua.chains import LevelRelation, level_preorder
from continua.foundations import cofinite, residue_class
from continua.ultrafilter import Certificate


class ArcSpace(StrandSpace):
    name = "arc"
    title = "the arc [0, 1]"
    variants = ("standard", "reversed", "alternating")

    def __init__(self):
        super().__init__()
        self.strands = {"arc": Strand("arc", "arc", Fraction(0), Fraction(1), "t -> (t, 0)")}
        self.components = {"arc": (Segment("arc", Fraction(0), Fraction(1)),)}
        self.witnesses = {"0": "arc:0", "1/4": "arc:1/4", "1/2": "arc:1/2", "3/4": "arc:3/4", "1": "arc:1"}

    def mesh_bound(self, n: int, variant: str) -> Fraction:
        return Fraction(3, 2 ** (n + 1))

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        reverse = variant == "reversed" or (variant == "alternating" and n % 2 == 0)
        block = Block("arc", 2**n, lambda p: p.param if p.strand == "arc" else None)
        return [block], reverse

    def certify(self, variant: str, x: CatalogPoint, y: CatalogPoint) -> Certificate | None:
        if variant != "alternating":
            return super().certify(variant, x, y)
        standard = super().certify("standard", x, y)
        if standard is None or standard.le == standard.ge:
            return standard
        n0 = standard.threshold
        odd, even = residue_class(2, 1) & cofinite(n0), residue_class(2, 0) & cofinite(n0)
        relation = level_preorder(self.level(n0, "standard"), x, y)
        if relation is LevelRelation.LE_ONLY:
            return Certificate(n0, odd, even, "standard on odd levels, reversed on even levels")
        return Certificate(n0, even, odd, "standard on odd levels, reversed on even levels")

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        return ivrange(lo, hi), ivq(Fraction(0))

    def distance_lower(self, x: CatalogPoint, y: CatalogPoint) -> Fraction:
        return abs(self.point(x).param - self.point(y).param)

    def distance_to_arc(self, z: CatalogPoint, arc: list, pieces: int = 0) -> Fraction:
        return min(
            Fraction(0) if lo <= z.param <= hi else min(abs(z.param - lo), abs(z.param - hi))
            for _, lo, hi in arc
        )

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        steps = 8 * 2**n
        return [[CatalogPoint("arc", Fraction(i, steps)) for i in range(steps + 1)]]

    def grid(self, size: int) -> list[CatalogPoint]:
        """size equally spaced points including both end points."""
        return [CatalogPoint("arc", Fraction(i, size - 1)) for i in range(size)]
