"""
File: space_t.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    The space T: the sine curve S1 (limit interval T1, sine ray T2) together
    with a third ray T3 that accumulates on all of S1.

    T3 is parameterized by rho >= 0 and travels in passes: pass j covers its
    own copy of the sine ray from theta = 3 out to the peak 4 * 2^j + 1 and
    a vertical descent next to the limit interval, forward on even passes and
    backward on odd ones. Every point of T3 is its shadow on S1 (the sine or
    the vertical point it copies) moved right by 1 / (4 (1 + rho)), so the
    ray approaches S1 as rho grows.

    Level n walks T3 up to the pass J_n and then covers S1 as a sine-curve
    level would, with the rest of T3 placed by its shadow. Variant D takes
    J_n = 2n + 1 and gives T3 < T1 < T2 in every ultrafilter order; variant E
    takes J_n = 2n, reverses the S1 part and the whole numbering, and gives
    T1 < T2 < T3.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from mpmath import iv

from continua.catalog.base import Block, CatalogPoint, Placement, Segment, Strand, StrandSpace
from continua.catalog.geometry import ivq, ivrange, sin_half_pi
from continua.catalog.sine import (
    THETA_START,
    limit_samples,
    limit_xy,
    sine_samples,
    sine_xy,
    strips_block,
    walk_block,
)
from continua.errors import DomainError
from continua.ultrafilter import Comparison, ComparisonVerdict


def pass_length(j: int) -> int:
    return 4 * 2**j


def pass_peak(j: int) -> int:
    return 4 * 2**j + 1


def arc_length(rho: Fraction) -> Fraction:
    """Total sine-parameter distance travelled by T3 up to rho."""
    j = floor(rho)
    return 4 * (2**j - 1) + (rho - j) * pass_length(j)


def shadow(rho: Fraction) -> CatalogPoint:
    """
    The S1 point a T3 point copies: a sine point on the first part of a
    pass, and on the rest the limit point at the height of the vertical
    descent.
    """
    j = floor(rho)
    ell = pass_length(j)
    u = (rho - j) * ell
    s = u if j % 2 == 0 else ell - u
    if s <= ell - 2:
        return CatalogPoint("sine", THETA_START + s)
    return CatalogPoint("limit", ell - 1 - s)


def switch_points(j: int) -> Fraction:
    """rho inside pass j where the shadow changes between sine and vertical."""
    if j % 2 == 0:
        return j + 1 - Fraction(1, 2 ** (j + 1))
    return j + Fraction(1, 2 ** (j + 1))


def offset(rho):
    return 1 / (4 * (1 + rho))


class TSpace(StrandSpace):
    name = "t"
    title = "sine curve with a third ray accumulating on it"
    variants = ("D", "E")
    structural = True

    def __init__(self):
        super().__init__()
        self.strands = {
            "limit": Strand("limit", "T1", Fraction(-1), Fraction(1), "v -> (0, sin(pi v/2))"),
            "sine": Strand("sine", "T2", THETA_START, None, "theta -> (2/(pi theta), sin(pi theta/2))"),
            "ray": Strand("ray", "T3", Fraction(0), None, "rho -> shadow(rho) + (1/(4(1+rho)), 0)"),
        }
        self.components = {
            "T1": (Segment("limit", Fraction(-1), Fraction(1)),),
            "T2": (Segment("sine", THETA_START, None),),
            "T3": (Segment("ray", Fraction(0), None),),
        }
        self.witnesses = {
            "T1": "limit:0",
            "T2": "sine:3",
            "T3": "ray:1/2",
            "(0,-1/sqrt2)": "limit:-1/2",
            "(0,1/sqrt2)": "limit:1/2",
            "(2/5pi,1)": "sine:5",
            "(2/7pi,-1)": "sine:7",
            "ray:1/4": "ray:1/4",
            "ray:3/4": "ray:3/4",
        }

    def variant(self, name: str) -> str:
        return StrandSpace.variant(self, name.strip().upper())

    def last_pass(self, n: int, variant: str) -> int:
        """J_n, the pass at which the ray walk hands over to S1."""
        return 2 * n + 1 if variant == "D" else 2 * n

    def mesh_bound(self, n: int, variant: str) -> Fraction:
        return Fraction(3, 2**n) + Fraction(1, 2 * (self.last_pass(n, variant) + 1))

    def ray_block(self, n: int, variant: str) -> Block:
        last = self.last_pass(n, variant)
        total = 4 * (2**last - 1)

        def locate(p: CatalogPoint) -> Fraction | None:
            if p.strand != "ray" or p.param > last:
                return None
            return arc_length(p.param) / total

        return Block("ray", total * 2**n, locate)

    @staticmethod
    def shadowed(block: Block, last: int) -> Block:
        """The block with T3 points past pass `last` located by their shadow."""

        def locate(p: CatalogPoint) -> Fraction | None:
            if p.strand == "ray":
                return block.locate(shadow(p.param)) if p.param >= last else None
            return block.locate(p)

        return Block(block.name, block.links, locate)

    def blocks(self, n: int, variant: str) -> tuple[list[Block], bool]:
        last = self.last_pass(n, variant)
        peak = Fraction(pass_peak(n))
        if variant == "D":
            sine_part = [strips_block(peak, n, top_down=False), walk_block(peak, n, downward=True)]
        else:
            sine_part = [walk_block(peak, n), strips_block(peak, n, top_down=True)]
        return [self.ray_block(n, variant)] + [self.shadowed(b, last) for b in sine_part], variant == "E"

    def placement(self, p: CatalogPoint, variant: str) -> Placement:
        p = self.point(p)
        density = _dyadic
        if p.strand == "limit":
            return Placement(1, ("strips",), p.param, density)
        if p.strand == "sine":
            settle = 1
            while pass_peak(settle) <= p.param:
                settle += 1
            return Placement(settle, ("walk",), p.param, density)
        settle = 1
        while self.last_pass(settle, variant) <= p.param:
            settle += 1
        return Placement(settle, ("ray",), arc_length(p.param), density)

    # -- geometry -------------------------------------------------------------

    def breakpoints(self, strand: str, lo: Fraction, hi: Fraction) -> list[Fraction]:
        if strand != "ray":
            return []
        cuts = set()
        for j in range(floor(lo), floor(hi) + 1):
            cuts.update((Fraction(j), switch_points(j)))
        return sorted(c for c in cuts if lo < c < hi)

    def _xy(self, strand: str, lo: Fraction, hi: Fraction):
        if strand == "limit":
            return limit_xy(lo, hi)
        if strand == "sine":
            return sine_xy(lo, hi)
        if strand != "ray":
            raise DomainError(f"Space {self.name} has no strand '{strand}'")
        mid = (lo + hi) / 2
        j = floor(mid)
        ell = pass_length(j)
        rho = ivrange(lo, hi)
        u = (rho - j) * ell
        s = u if j % 2 == 0 else ell - u
        shift = offset(rho)
        if shadow(mid).strand == "sine":
            theta = s + int(THETA_START)
            return 2 / (iv.pi * theta) + shift, sin_half_pi(theta)
        v = ell - 1 - s
        x = ivq(Fraction(2, 1)) / (iv.pi * pass_peak(j)) * (1 + v) / 2
        return x + shift, sin_half_pi(v)

    def sample_paths(self, n: int, variant: str) -> list[list[CatalogPoint]]:
        peak = Fraction(pass_peak(n))
        ray = []
        for j in range(self.last_pass(n, variant) + 2):
            steps = 8 * 2**n * pass_length(j)
            ray.extend(CatalogPoint("ray", j + Fraction(k, steps)) for k in range(steps))
        ray.append(CatalogPoint("ray", Fraction(self.last_pass(n, variant) + 2)))
        return [sine_samples(peak, n), limit_samples(n), ray]


def _dyadic(n: int) -> int:
    return 2**n


def component_order(verdicts: dict[tuple[str, str], ComparisonVerdict]) -> list[str] | None:
    """Orders T1, T2, T3 from verdicts on representative pairs, None if any is undecided."""
    names = ["T1", "T2", "T3"]
    below = {name: 0 for name in names}
    for (a, b), verdict in verdicts.items():
        if not verdict.decided:
            return None
        if verdict.relation is Comparison.LT:
            below[b] += 1
        elif verdict.relation is Comparison.GT:
            below[a] += 1
    return sorted(names, key=below.__getitem__)
