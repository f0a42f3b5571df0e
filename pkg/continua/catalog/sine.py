"""
File: sine.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The Warsaw sine curve S1 and its variant S2 with an extra arc attached
    to the bottom of the limit interval.

    The sine strand is parameterized by theta >= 3 with
    (x, y) = (2 / (pi theta), sin(pi theta / 2)), so theta = 3 and theta = 7
    are (2/3pi, -1) and (2/7pi, -1). A limit point (0, sin(pi v / 2)) has
    parameter v in [-1, 1].

    Level n walks the sine strand from theta = 3 to a peak (or trough) Theta_n
    in steps of 2^-n, then covers the limit interval together with the rest of
    the sine strand by horizontal strips. Strips are assigned through the
    triangle wave w(theta), which satisfies sin(pi theta / 2) = sin(pi w / 2),
    so a sine point and a limit point at the same height share strips and the
    index assignment stays exact.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import iv

from continua.catalog.base import Block, CatalogPoint, Segment, Strand, StrandSpace
from continua.catalog.geometry import ivq, ivrange, sin_half_pi
from continua.chains import level_preorder
from continua.errors import ConfigError
from continua.ultrafilter import Comparison

THETA_START = Fraction(3)


def triangle(theta: Fraction) -> Fraction:
    """Piecewise-linear wave in [-1, 1] with the peaks and troughs of sin(pi theta / 2)."""
    phase = theta % 4
    if phase <= 1:
        return phase
    if phase <= 3:
        return 2 - phase
    return phase - 4


def sine_xy(lo: Fraction, hi: Fraction):
    theta = ivrange(lo, hi)
    return 2 / (iv.pi * theta), sin_half_pi(theta)


def limit_xy(lo: Fraction, hi: Fraction):
    return ivq(Fraction(0)), sin_half_pi(ivrange(lo, hi))


def walk_block(theta_end: Fraction, n: int, downward: bool = False) -> Block:
    """theta in [3, theta_end] by steps of 2^-n; downward starts at theta_end."""
    span = theta_end - THETA_START

    def locate(p: CatalogPoint) -> Fraction | None:
        if p.strand != "sine" or p.param > theta_end:
            return None
        t = (p.param - THETA_START) / span
        return 1 - t if downward else t

    return Block("walk", int(span * 2**n), locate)


def strips_block(theta_end: Fraction, n: int, top_down: bool, extra=None) -> Block:
    """
    2^(n+1) strips over the height parameter: limit points by v, sine points
    past theta_end by the triangle wave. extra maps further points to a height.
    """

    def height(p: CatalogPoint) -> Fraction | None:
        if p.strand == "limit":
            return p.param
        if p.strand == "sine" and p.param >= theta_end:
            return triangle(p.param)
        return extra(p) if extra is not None else None

    def locate(p: CatalogPoint) -> Fraction | None:
        h = height(p)
        if h is None:
            return None
        return (1 - h) / 2 if top_down else (h + 1) / 2

    return Block("strips", 2 ** (n + 1), locate)


def sine_samples(theta_end: Fraction, n: int) -> list[CatalogPoint]:
    step = Fraction(1, 8 * 2**n)
    count = int((theta_end + 8 - THETA_START) / step)
    return [CatalogPoint("sine", THETA_START + i * step) for i in range(count + 1)]


def limit_samples(n: int) -> list[CatalogPoint]:
    steps = 16 * 2**n
    return [CatalogPoint("limit", Fraction(-1) + Fraction(2 * i, steps)) for i in range(steps + 1)]


class S1Space(StrandSpace):
    name = "s1"
    title = "Warsaw sine curve"
    variants = ("D", "D'", "E", "E'")

    def __init__(self):
        super().__init__()
        self.strands = {
            "sine": Strand("sine", "sine", THETA_START, None, "theta -> (2/(pi theta), sin(pi theta/2))"),
            "limit": Strand("limit", "limit", Fraction(-1), Fraction(1), "v -> (0, sin(pi v/2))"),
        }
        self.components = {
            "sine": (Segment("sine", THETA_START, None),),
            "limit": (Segment("limit", Fraction(-1), Fraction(1)),),
        }
        self.witnesses = {
            "(0,1)": "limit:1",
            "(0,-1)": "limit:-1",
            "(2/7pi,-1)": "sine:7",
            "(2/3pi,-1)": "sine:3",
        }

    def variant(self, name: str) -> str:
        normalized = name.strip().upper().replace("′", "'").replace("PRIME", "'").replace("P", "'")
        if normalized not in self.variants:
            raise ConfigError(f"Space {self.name} has no variant '{name}', choose from {list(self.variants)}")
        return normalized

    def theta_end(self, n: int, variant: str) -> Fraction:
        """A peak for D and E, a trough for D' and E'."""
        return Fraction(4 * 2**n + (3 if variant.endswith("'") else 1))

    def mesh_bound(self, n: int, variant: str) -> Fraction:
        return Fraction(3, 2**n)

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        end = self.theta_end(n, variant)
        top_down = not variant.endswith("'")
        return [walk_block(end, n), strips_block(end, n, top_down)], variant.startswith("E")

    def settle(self, p: CatalogPoint, variant: str) -> int:
        if p.strand != "sine":
            return 1
        n = 1
        while self.theta_end(n, variant) <= p.param:
            n += 1
        return n

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        return sine_xy(lo, hi) if strand == "sine" else limit_xy(lo, hi)

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        return [sine_samples(self.theta_end(n, variant), n), limit_samples(n)]

    def conditions(self, n: int) -> dict[str, bool]:
        """
        Checks the defining conditions of the four families at level n: the
        start of the sine strand opens D and D', the first link meeting the
        limit interval holds (0,1) in D and (0,-1) in D', and E, E' are the
        reversals of D, D'.
        """
        start = CatalogPoint("sine", THETA_START)
        top, bottom = CatalogPoint("limit", Fraction(1)), CatalogPoint("limit", Fraction(-1))
        levels = {v: self.level(n, v) for v in self.variants}
        limit = limit_samples(n)

        def first_on_limit(variant: str) -> int:
            return min(levels[variant].index_of(p).lo for p in limit)

        checkpoints = sine_samples(self.theta_end(n, "D"), n)[:: 2**n] + limit[:: 2**n]
        return {
            "start in first link of D": levels["D"].index_of(start).lo == 1,
            "start in first link of D'": levels["D'"].index_of(start).lo == 1,
            "(0,1) in first limit link of D": levels["D"].index_of(top).lo == first_on_limit("D"),
            "(0,-1) in first limit link of D'": levels["D'"].index_of(bottom).lo == first_on_limit("D'"),
            "E reverses D": all(
                levels["E"].index_of(p) == levels["D"].index_of(p).reversed(levels["D"].k) for p in checkpoints
            ),
            "E' reverses D'": all(
                levels["E'"].index_of(p) == levels["D'"].index_of(p).reversed(levels["D'"].k) for p in checkpoints
            ),
        }


class S2Space(S1Space):
    name = "s2"
    title = "sine curve with an arc attached below the limit interval"
    variants = ("standard", "reversed")

    def __init__(self):
        super().__init__()
        self.strands.update(
            {
                "bottom": Strand("bottom", "outer", Fraction(0), Fraction(1), "u -> (-u, -1)"),
                "left": Strand("left", "outer", Fraction(-1), Fraction(1), "v -> (-1, v)"),
            }
        )
        self.strands["limit"] = Strand("limit", "outer", Fraction(-1), Fraction(1), "v -> (0, sin(pi v/2))")
        self.components = {
            "sine": (Segment("sine", THETA_START, None),),
            "outer": (
                Segment("limit", Fraction(1), Fraction(-1)),
                Segment("bottom", Fraction(0), Fraction(1)),
                Segment("left", Fraction(-1), Fraction(1)),
            ),
        }
        self.witnesses = {
            "(-1,-1)": "left:-1",
            "(-1,1)": "left:1",
            "(2/7pi,-1)": "sine:7",
            "(2/3pi,-1)": "sine:3",
        }

    _JUNCTIONS = (
        (CatalogPoint("limit", Fraction(-1)), CatalogPoint("bottom", Fraction(0))),
        (CatalogPoint("bottom", Fraction(1)), CatalogPoint("left", Fraction(-1))),
    )

    def variant(self, name: str) -> str:
        return StrandSpace.variant(self, name.strip().lower())

    def aliases(self, p: CatalogPoint) -> tuple[CatalogPoint, ...]:
        for pair in self._JUNCTIONS:
            if p in pair:
                return pair
        return (p,)

    def theta_end(self, n: int, variant: str) -> Fraction:
        return Fraction(4 * 2**n + 1)

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        end = self.theta_end(n, variant)
        bottom = Block("bottom", 2**n, lambda p: p.param if p.strand == "bottom" else None)
        left = Block("left", 2 ** (n + 1), lambda p: (p.param + 1) / 2 if p.strand == "left" else None)
        return [walk_block(end, n), strips_block(end, n, True), bottom, left], variant == "reversed"

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        if strand == "bottom":
            return -ivrange(lo, hi), ivq(Fraction(-1))
        if strand == "left":
            return ivq(Fraction(-1)), ivrange(lo, hi)
        return super()._xy(strand, lo, hi)

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        steps = 8 * 2**n
        bottom = [CatalogPoint("bottom", Fraction(i, steps)) for i in range(steps + 1)]
        left = [CatalogPoint("left", Fraction(-1) + Fraction(i, steps)) for i in range(2 * steps + 1)]
        return super().sample_paths(n, variant) + [bottom, left]


def s2_pattern(corner: Comparison, sine: Comparison) -> int | None:
    """
    Classifies an order on S2 by (-1,-1) vs (-1,1) and (2/7pi,-1) vs (2/3pi,-1):
    1 = (<, >), 2 = (<, <), 3 = (>, >), 4 = (>, <).
    """
    table = {
        (Comparison.LT, Comparison.GT): 1,
        (Comparison.LT, Comparison.LT): 2,
        (Comparison.GT, Comparison.GT): 3,
        (Comparison.GT, Comparison.LT): 4,
    }
    return table.get((corner, sine))


def level_pattern(space: S2Space, n: int, variant: str) -> int | None:
    level = space.level(n, variant)
    pts = space.witness_points()
    corner = level_preorder(level, pts["(-1,-1)"], pts["(-1,1)"]).as_comparison()
    sine = level_preorder(level, pts["(2/7pi,-1)"], pts["(2/3pi,-1)"]).as_comparison()
    return s2_pattern(corner, sine)
