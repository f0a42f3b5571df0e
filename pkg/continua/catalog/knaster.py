"""
File: knaster.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The Knaster continuum as a catalog entry: threads of the tent inverse
    limit with the pulled-back chain family, and the check that the chain
    order and the coordinate order agree level by level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from continua.chains import ChainLevel, ChainSequence, LevelRelation, finest_needed, level_preorder, pullback_chain
from continua.errors import ConfigError, DomainError
from continua.foundations import EventuallyPeriodicSet, qstr
from continua.inverse_limit import TENT_SYSTEM, ThreadPoint, fiber_diameter_bound, inverse_limit_order
from continua.ultrafilter import Comparison, ComparisonVerdict, SimulatedUltrafilter

SEED = Fraction(1, 2)


def pullback_level(n: int) -> ChainLevel:
    return pullback_chain(TENT_SYSTEM, n, finest_needed(TENT_SYSTEM, n))


@dataclass(frozen=True)
class TransferRecord:
    """One level of the pulled-back chain next to the coordinates it comes from."""

    level: int
    relation: LevelRelation
    coordinates: tuple[Fraction, Fraction]
    link_width: Fraction
    consistent: bool

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "relation": self.relation.value,
            "coordinates": [qstr(c) for c in self.coordinates],
            "link_width": qstr(self.link_width),
            "consistent": self.consistent,
        }


class KnasterSpace:
    name = "knaster"
    title = "Knaster continuum, the inverse limit of the tent map"
    variants = ("pullback",)
    structural = False

    def __init__(self):
        self.witnesses = {
            "zero": "zero",
            "all": "all",
            "empty": "empty",
            "even": "even",
            "odd": "odd",
            "mod:3:0": "mod:3:0",
        }

    def variant(self, name: str) -> str:
        name = name.strip().lower()
        if name not in self.variants:
            raise ConfigError(f"Space {self.name} has no variant '{name}', choose from {list(self.variants)}")
        return name

    def point(self, text: str | ThreadPoint) -> ThreadPoint:
        """``zero`` or the branch word (in set syntax) of a thread from x_0 = 1/2."""
        if isinstance(text, ThreadPoint):
            return text
        text = str(text).strip().lower()
        if text == "zero":
            return ThreadPoint.zero()
        try:
            return ThreadPoint.from_branches(SEED, EventuallyPeriodicSet.parse(text))
        except ConfigError as err:
            raise DomainError(f"Not a Knaster point: {err}") from err

    def witness_points(self) -> dict[str, ThreadPoint]:
        return {label: self.point(text) for label, text in self.witnesses.items()}

    def max_level(self, variant: str) -> int | None:
        return None

    def level(self, n: int, variant: str = "pullback") -> ChainLevel:
        self.variant(variant)
        return pullback_level(n)

    def family(self, variant: str = "pullback") -> ChainSequence:
        # threads are compared through their coordinates, the chain levels carry no certificate
        self.variant(variant)
        return ChainSequence("knaster/pullback", pullback_level)

    def compare(self, x, y, u: SimulatedUltrafilter, depth: int) -> ComparisonVerdict:
        return inverse_limit_order(self.point(x), self.point(y), u, depth)

    def transfer(self, x, y, depth: int) -> list[TransferRecord]:
        """
        For levels 1..depth: a strict chain relation must match the strict
        coordinate order, and coordinates two link widths apart must be
        strictly related.
        """
        x, y = self.point(x), self.point(y)
        records = []
        for n in range(1, depth + 1):
            d = pullback_level(n)
            relation = level_preorder(d, x, y)
            a, b = x.coordinate(n), y.coordinate(n)
            width = Fraction(3, 2 * d.k)
            coordinate = Comparison.of(a, b)
            if relation is LevelRelation.BOTH:
                consistent = abs(a - b) < 2 * width
            else:
                consistent = relation.as_comparison() is coordinate
            records.append(TransferRecord(n, relation, (a, b), width, consistent))
        return records

    def mesh_check(self, depth: int) -> list[dict]:
        """Declared mesh gamma_n + 1/n per level, with gamma_n at most 2^-n."""
        rows = []
        for n in range(1, depth + 1):
            gamma = fiber_diameter_bound(TENT_SYSTEM, n)
            d = pullback_level(n)
            rows.append(
                {
                    "level": n,
                    "k": d.k,
                    "mesh": qstr(d.mesh_bound),
                    "ok": gamma <= Fraction(1, 2**n) and d.mesh_bound == gamma + Fraction(1, n),
                }
            )
        return rows
