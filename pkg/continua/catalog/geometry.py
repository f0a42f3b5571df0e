"""
File: geometry.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Certified planar geometry for the catalog strands. Transcendental
    coordinates are enclosed with mpmath interval arithmetic and every bound
    leaving this module is an exact rational endpoint of such an enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from mpmath import iv, libmp

iv.prec = 80


def ivq(q: Fraction):
    """Tight interval around a rational."""
    q = Fraction(q)
    return iv.mpf(q.numerator) / q.denominator


def ivrange(lo: Fraction, hi: Fraction):
    """Interval [lo, hi] with outward rounded endpoints."""
    return iv.mpf((ivq(min(lo, hi)), ivq(max(lo, hi))))


def lower(x) -> Fraction:
    return Fraction(*libmp.to_rational(iv.mpf(x)._mpi_[0]))


def upper(x) -> Fraction:
    return Fraction(*libmp.to_rational(iv.mpf(x)._mpi_[1]))


def sin_half_pi(v):
    """sin(pi * v / 2) on an interval."""
    return iv.sin(iv.pi * v / 2)


@dataclass(frozen=True)
class Box:
    """Axis-parallel rectangle with rational corners."""

    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    @classmethod
    def enclosing(cls, xs, ys) -> Box:
        return cls(lower(xs), upper(xs), lower(ys), upper(ys))

    def hull(self, other: Box) -> Box:
        return Box(
            min(self.x_lo, other.x_lo),
            max(self.x_hi, other.x_hi),
            min(self.y_lo, other.y_lo),
            max(self.y_hi, other.y_hi),
        )

    def diameter_squared(self) -> Fraction:
        return (self.x_hi - self.x_lo) ** 2 + (self.y_hi - self.y_lo) ** 2

    def gap_squared(self, other: Box) -> Fraction:
        """Squared distance between the boxes, a lower bound for any two points in them."""
        dx = max(Fraction(0), other.x_lo - self.x_hi, self.x_lo - other.x_hi)
        dy = max(Fraction(0), other.y_lo - self.y_hi, self.y_lo - other.y_hi)
        return dx**2 + dy**2


def sqrt_lower(q: Fraction) -> Fraction:
    """Rational lower bound for sqrt(q); exact when q is a rational square."""
    if q <= 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return lower(iv.sqrt(ivq(q)))
