"""
File: ultrafilter.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Residue towers standing in for non-principal ultrafilters on the natural
    numbers, and the comparison verdicts both order definitions share.

    A tower m_1 | m_2 | ... | m_K with compatible residues r_i selects the
    nested progressions {n : n = r_i (mod m_i)}. An eventually periodic set
    whose period divides some m_i belongs to the ultrafilter iff that
    progression eventually lies inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import factorial, lcm

from continua.errors import CertificateError, ConfigError
from continua.foundations import EventuallyPeriodicSet
from utils.logger import logger


class Comparison(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"

    def flipped(self) -> Comparison:
        return {Comparison.LT: Comparison.GT, Comparison.GT: Comparison.LT}.get(self, self)

    @classmethod
    def of(cls, a, b) -> Comparison:
        return cls.LT if a < b else cls.GT if a > b else cls.EQ


class VerdictKind(str, Enum):
    STABILIZED = "stabilized"
    ULTRAFILTER_DEPENDENT = "ultrafilter-dependent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SimulatedUltrafilter:
    moduli: tuple[int, ...] = (1,)
    residues: tuple[int, ...] = (0,)

    def __post_init__(self):
        if not self.moduli or len(self.moduli) != len(self.residues):
            raise ConfigError("A tower needs one residue per modulus")
        for m, r in zip(self.moduli, self.residues):
            if m < 1 or not 0 <= r < m:
                raise ConfigError(f"Residue {r} is not valid modulo {m}")
        for (m0, r0), (m1, r1) in zip(
            zip(self.moduli, self.residues), zip(self.moduli[1:], self.residues[1:])
        ):
            if m1 % m0 != 0:
                raise ConfigError(f"Tower moduli must form a divisor chain, {m0} does not divide {m1}")
            if r1 % m0 != r0:
                raise ConfigError(f"Residue {r1} mod {m1} is incompatible with {r0} mod {m0}")

    @classmethod
    def powers_of_two(cls, k: int, residue: int = 0) -> SimulatedUltrafilter:
        """Moduli 1, 2, ..., 2^k, all selecting the class of residue (mod 2^k)."""
        moduli = tuple(2**i for i in range(k + 1))
        return cls(moduli, tuple(residue % m for m in moduli))

    @classmethod
    def factorials(cls, k: int, residue: int = 0) -> SimulatedUltrafilter:
        moduli = tuple(factorial(i) for i in range(1, k + 1))
        return cls(moduli, tuple(residue % m for m in moduli))

    @classmethod
    def parse(cls, text: str) -> SimulatedUltrafilter:
        """
        Parses ``r2=0``, ``r2=1,r4=3``, ``pow2:K`` or ``fact:K``.
        Modulus 1 is always present at the bottom of the tower.
        """
        text = text.strip().lower()
        try:
            if text.startswith("pow2:"):
                return cls.powers_of_two(int(text[5:]))
            if text.startswith("fact:"):
                return cls.factorials(int(text[5:]))
            entries = {}
            for item in text.split(","):
                key, _, value = item.strip().partition("=")
                if not key.startswith("r"):
                    raise ValueError(f"entry '{item}' does not look like rM=R")
                entries[int(key[1:])] = int(value)
        except ValueError as err:
            raise ConfigError(f"Malformed tower '{text}': {err}") from err
        entries.setdefault(1, 0)
        moduli = tuple(sorted(entries))
        return cls(moduli, tuple(entries[m] for m in moduli))

    @classmethod
    def from_dict(cls, data: dict) -> SimulatedUltrafilter:
        return cls(tuple(data["moduli"]), tuple(data["residues"]))

    def to_dict(self) -> dict:
        return {"moduli": list(self.moduli), "residues": list(self.residues)}

    def describe(self) -> str:
        return ",".join(f"r{m}={r}" for m, r in zip(self.moduli, self.residues))

    def extended_for(self, period: int) -> SimulatedUltrafilter:
        """
        Returns a tower with a modulus divisible by period. The new residue is
        the least one compatible with the current top level.
        """
        for m in self.moduli:
            if m % period == 0:
                return self
        top, r = self.moduli[-1], self.residues[-1]
        new = lcm(top, period)
        logger.warning(f"Tower {self.describe()} extended with modulus {new}, residue {r}")
        return SimulatedUltrafilter(self.moduli + (new,), self.residues + (r,))

    def decide(self, s: EventuallyPeriodicSet) -> Decision:
        tower = self.extended_for(s.period)
        for m, r in zip(tower.moduli, tower.residues):
            if m % s.period == 0:
                break
        p, period = s.preperiod, s.period
        witness = p + (r - p) % period
        return Decision(s.member(witness), tower, tower is not self)

    def decides(self, s: EventuallyPeriodicSet) -> bool:
        return self.decide(s).member


@dataclass(frozen=True)
class Decision:
    member: bool
    ultrafilter: SimulatedUltrafilter
    extended: bool


def decides(u: SimulatedUltrafilter, s: EventuallyPeriodicSet) -> bool:
    return u.decides(s)


@dataclass
class FilterAxiomReport:
    s_in: bool
    t_in: bool
    intersection_in: bool
    union_in: bool
    subset: bool
    dichotomy: bool
    extended: bool = False
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def filter_axiom_check(
    u: SimulatedUltrafilter, s: EventuallyPeriodicSet, t: EventuallyPeriodicSet
) -> FilterAxiomReport:
    """
    Checks the ultrafilter laws on one pair of sets: finite intersection,
    upward closure, complement dichotomy and membership of cofinite sets.

    :param u: The tower under test.
    :param s: First set.
    :param t: Second set.
    :return: Report with the decisions and every failed law.
    """
    tower = u.extended_for(lcm(s.period, t.period))
    s_in, t_in = tower.decides(s), tower.decides(t)
    meet_in = tower.decides(s & t)
    join_in = tower.decides(s | t)
    subset = s.is_subset(t)
    dichotomy = s_in != tower.decides(~s)
    report = FilterAxiomReport(s_in, t_in, meet_in, join_in, subset, dichotomy, tower is not u)
    if s_in and t_in and not meet_in:
        report.failures.append("finite intersection")
    if (s_in or t_in) and not join_in:
        report.failures.append("upward closure (union)")
    if s_in and subset and not t_in:
        report.failures.append("upward closure (subset)")
    if not dichotomy:
        report.failures.append("complement dichotomy")
    for x in (s, t):
        if x.is_cofinite() and not tower.decides(x):
            report.failures.append("cofinite membership")
    return report


@dataclass(frozen=True)
class Certificate:
    """
    Exact description of the levels where x <= y (le) and y <= x (ge),
    valid for every level from threshold on.
    """

    threshold: int
    le: EventuallyPeriodicSet
    ge: EventuallyPeriodicSet
    basis: str

    def relation_at(self, n: int) -> Comparison:
        le, ge = self.le.member(n), self.ge.member(n)
        if le and ge:
            return Comparison.EQ
        if le:
            return Comparison.LT
        if ge:
            return Comparison.GT
        raise CertificateError(f"Certificate claims neither x <= y nor y <= x at level {n}")


@dataclass(frozen=True)
class ComparisonVerdict:
    kind: VerdictKind
    relation: Comparison | None
    depth: int
    threshold: int | None = None
    index_set: EventuallyPeriodicSet | None = None
    basis: str | None = None
    tower_extended: bool = False

    @property
    def decided(self) -> bool:
        return self.relation is not None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "relation": self.relation.value if self.relation else None,
            "depth": self.depth,
            "threshold": self.threshold,
            "index_set": self.index_set.to_dict() if self.index_set else None,
            "basis": self.basis,
            "tower_extended": self.tower_extended,
        }

    def __str__(self) -> str:
        if self.kind is VerdictKind.UNKNOWN:
            return f"Unknown({self.depth})"
        if self.kind is VerdictKind.STABILIZED:
            return f"Stabilized({self.relation.value}, from level {self.threshold})"
        return f"UltrafilterDependent({self.relation.value})"


def unknown(depth: int) -> ComparisonVerdict:
    return ComparisonVerdict(VerdictKind.UNKNOWN, None, depth)


def _settled(s: EventuallyPeriodicSet) -> bool:
    return s.is_cofinite() or s.is_finite()


def verdict_from_certificate(
    cert: Certificate | None, u: SimulatedUltrafilter, depth: int
) -> ComparisonVerdict:
    """
    Turns LE/GE index sets into a verdict. Sets that are cofinite or finite
    give the same answer in every non-principal ultrafilter; anything else is
    decided by the tower and flagged as ultrafilter dependent.
    """
    if cert is None or cert.threshold > depth:
        return unknown(depth)
    le, ge = cert.le.truncated_below(cert.threshold), cert.ge.truncated_below(cert.threshold)
    if _settled(le) and _settled(ge):
        relation = _relation(le.is_cofinite(), ge.is_cofinite())
        return ComparisonVerdict(
            VerdictKind.STABILIZED, relation, depth, cert.threshold, le, cert.basis
        )
    le_decision = u.decide(le)
    ge_decision = le_decision.ultrafilter.decide(ge)
    relation = _relation(le_decision.member, ge_decision.member)
    return ComparisonVerdict(
        VerdictKind.ULTRAFILTER_DEPENDENT,
        relation,
        depth,
        cert.threshold,
        le,
        cert.basis,
        le_decision.extended or ge_decision.extended,
    )


def _relation(le_in: bool, ge_in: bool) -> Comparison:
    if le_in and ge_in:
        return Comparison.EQ
    if le_in:
        return Comparison.LT
    if ge_in:
        return Comparison.GT
    raise CertificateError("Neither x <= y nor y <= x holds on a set in the ultrafilter")
