"""
File: __init__.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Registry of the example continua and the operations shared by all of
    them: chain levels of the named families, arc components, separating
    continua, comparisons and order counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from continua.catalog.arc import ArcSpace
from continua.catalog.base import CatalogPoint, Separation, StrandSpace
from continua.catalog.base import separation_data as _separation_data
from continua.catalog.forest import S3Space, all_prefixes
from continua.catalog.knaster import KnasterSpace
from continua.catalog.sine import S1Space, S2Space
from continua.catalog.space_t import TSpace
from continua.chains import ChainLevel, OrderCheck, chain_order_compare, sorted_order
from continua.errors import ConfigError, DepthError
from continua.ultrafilter import ComparisonVerdict, SimulatedUltrafilter
from utils.logger import logger

SPACES: dict[str, StrandSpace | KnasterSpace] = {
    space.name: space for space in (ArcSpace(), S1Space(), S2Space(), S3Space(), TSpace(), KnasterSpace())
}

ORDER_PREFIX_LENGTH = 6


def get_space(name: str) -> StrandSpace | KnasterSpace:
    try:
        return SPACES[name.strip().lower()]
    except KeyError:
        raise ConfigError(f"Unknown space '{name}', choose from {sorted(SPACES)}") from None


def list_spaces() -> list[dict]:
    return [
        {
            "name": space.name,
            "title": space.title,
            "variants": list(space.variants),
            "witnesses": dict(space.witnesses),
        }
        for space in SPACES.values()
    ]


def arc_chain_family(variant: str, n: int) -> ChainLevel:
    return SPACES["arc"].level(n, variant)


def s1_chain_family(variant: str, n: int) -> ChainLevel:
    return SPACES["s1"].level(n, variant)


def s2_chain_family(variant: str, n: int) -> ChainLevel:
    return SPACES["s2"].level(n, variant)


def s3_chain_family(xprefix: str, n: int) -> ChainLevel:
    if n > len(xprefix):
        raise DepthError(f"Prefix {xprefix} is too short for level {n}")
    return SPACES["s3"].level(n, xprefix)


def t_chain_family(variant: str, n: int) -> ChainLevel:
    return SPACES["t"].level(n, variant)


def component_of(space: StrandSpace, p) -> str:
    return space.component_of(space.point(p))


def separation_data(space: StrandSpace, x, y, z) -> Separation:
    return _separation_data(space, x, y, z)


def compare(space, variant: str, x, y, u: SimulatedUltrafilter, depth: int) -> ComparisonVerdict:
    """Compares two points of a catalog space in the order of one of its chain families."""
    if isinstance(space, KnasterSpace):
        space.variant(variant)
        return space.compare(x, y, u, depth)
    variant = space.variant(variant)
    x, y = space.point(x), space.point(y)
    max_level = space.max_level(variant)
    if max_level is not None and depth > max_level:
        logger.debug(f"{space.name}/{variant}: depth {depth} capped at {max_level}")
        depth = max_level
    return chain_order_compare(space.family(variant), x, y, u, depth)


@dataclass
class OrdersCount:
    space: str
    depth: int
    labels: tuple[str, ...]
    checks: dict[str, OrderCheck] = field(default_factory=dict)

    @property
    def distinct(self) -> int:
        return len({check.order for check in self.checks.values() if check.passed})

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "depth": self.depth,
            "labels": list(self.labels),
            "orders": {variant: check.to_dict() for variant, check in self.checks.items()},
            "distinct": self.distinct,
        }


def _order_points(space, depth: int, arc_grid: int) -> tuple[list[str], list[CatalogPoint], list[str], int]:
    if isinstance(space, ArcSpace):
        points = space.grid(arc_grid)
        return [str(p.param) for p in points], points, ["standard", "reversed"], depth
    if isinstance(space, S3Space):
        length = min(depth, ORDER_PREFIX_LENGTH)
        labels, points = space.witness_points_for(length)
        return labels, points, all_prefixes(length), length
    witnesses = space.witness_points()
    return list(witnesses), list(witnesses.values()), list(space.variants), depth


def orders_count(
    space, u: SimulatedUltrafilter, depth: int, arc_grid: int = 25, variants: list[str] | None = None
) -> OrdersCount:
    """
    Counts the distinct orders the chain families of a space induce on its
    witness points (a rational grid on the arc, the I_i end points for all
    short prefixes on S3).
    """
    if isinstance(space, KnasterSpace):
        raise ConfigError("orders-count needs a strand space; use knaster-witness for the Knaster continuum")
    labels, points, default_variants, depth = _order_points(space, depth, arc_grid)
    result = OrdersCount(space.name, depth, tuple(labels))
    for variant in variants or default_variants:
        variant = space.variant(variant)
        result.checks[variant] = sorted_order(
            labels, points, lambda x, y, v=variant: compare(space, v, x, y, u, depth)
        )
    logger.info(f"{space.name}: {result.distinct} distinct orders over {len(result.checks)} families")
    return result


__all__ = [
    "SPACES",
    "CatalogPoint",
    "OrdersCount",
    "Separation",
    "arc_chain_family",
    "compare",
    "component_of",
    "get_space",
    "list_spaces",
    "orders_count",
    "s1_chain_family",
    "s2_chain_family",
    "s3_chain_family",
    "separation_data",
    "t_chain_family",
]
