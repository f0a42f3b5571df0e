"""
File: validator.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Checks a chain level of a strand space against its geometry: walking
    every strand in parameter order must never skip a link, and the hull of
    the certified boxes of the samples in a link must fit the declared mesh.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from continua.catalog.base import StrandSpace
from continua.catalog.geometry import Box, sqrt_lower
from continua.foundations import qstr
from utils.logger import logger


@dataclass
class ValidationReport:
    space: str
    variant: str
    level: int
    links: int
    samples: int = 0
    covered_links: int = 0
    max_diameter_lower: Fraction = Fraction(0)
    skips: list[str] = field(default_factory=list)
    oversized: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.skips and not self.oversized

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "variant": self.variant,
            "level": self.level,
            "links": self.links,
            "samples": self.samples,
            "covered_links": self.covered_links,
            "max_diameter_lower": qstr(self.max_diameter_lower),
            "skips": self.skips[:20],
            "oversized": self.oversized[:20],
            "passed": self.passed,
        }


def validate_level(space: StrandSpace, n: int, variant: str) -> ValidationReport:
    """
    Samples the strands of the space at level n.

    :param space: A strand space.
    :param n: Level to check; the sample count grows like 2^n.
    :param variant: Chain family of the space.
    :return: Adjacency failures and links whose sample hull exceeds the mesh bound.
    """
    variant = space.variant(variant)
    level = space.level(n, variant)
    mesh = level.mesh_bound
    report = ValidationReport(space.name, variant, n, level.k)
    hulls: dict[int, Box] = {}
    for path in space.sample_paths(n, variant):
        previous = None
        for p in path:
            rng = level.index_of(p)
            box = space.box(p)
            report.samples += 1
            for i in range(rng.lo, rng.hi + 1):
                hulls[i] = hulls[i].hull(box) if i in hulls else box
            if previous is not None:
                q, prev = previous
                if rng.lo > prev.hi + 1 or prev.lo > rng.hi + 1:
                    report.skips.append(f"{q} {prev.to_list()} -> {p} {rng.to_list()}")
            previous = (p, rng)
    report.covered_links = len(hulls)
    for i, hull in sorted(hulls.items()):
        squared = hull.diameter_squared()
        report.max_diameter_lower = max(report.max_diameter_lower, sqrt_lower(squared))
        if squared > mesh**2:
            report.oversized.append(i)
    if report.passed:
        logger.debug(f"{space.name}/{variant} level {n}: {report.samples} samples in {len(hulls)} links")
    else:
        logger.warning(
            f"{space.name}/{variant} level {n}: {len(report.skips)} skips, {len(report.oversized)} oversized links"
        )
    return report
