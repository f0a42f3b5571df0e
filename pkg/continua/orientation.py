"""
File: orientation.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Finite-word combinatorics of the tail-flip maps s_n on binary words:
    cylinders B_s, the sets A_n, odd-length decompositions of s_n on a
    cylinder and parity-constrained reachability between cylinders.

    A composition [i_1, ..., i_k] stands for s_(i_1) o ... o s_(i_k); the
    last index is applied first. The flips commute and are involutions, so a
    composition acts on a word as XOR with a mask that is constant past its
    largest index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import product

from continua.errors import DomainError, SearchBoundError
from utils.logger import logger

Word = tuple[int, ...]


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, length: int) -> Parity:
        return cls.EVEN if length % 2 == 0 else cls.ODD


def as_word(bits) -> Word:
    if isinstance(bits, str):
        bits = [int(c) for c in bits if c in "01"]
    word = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in word):
        raise DomainError(f"Not a binary word: {bits!r}")
    return word


def word_str(word: Word) -> str:
    return "".join(map(str, word))


def flip(n: int, w: Word) -> Word:
    """s_n: keeps coordinates below n and complements the rest."""
    if not 0 <= n < len(w):
        raise DomainError(f"Flip index {n} is outside a word of length {len(w)}")
    return w[:n] + tuple(1 - b for b in w[n:])


def in_a_n(n: int, w: Word) -> bool:
    """Membership in A_n = {x : x_k = 0 for k <= n-2, x_(n-1) = 1}; A_0 is everything."""
    if len(w) < n:
        raise DomainError(f"Word of length {len(w)} is too short for A_{n}")
    if n == 0:
        return True
    return all(b == 0 for b in w[: n - 1]) and w[n - 1] == 1


def in_cylinder(s: Word, w: Word) -> bool:
    return w[: len(s)] == s


def cylinder_words(s: Word, depth: int) -> list[Word]:
    """All words of length depth extending s."""
    if depth < len(s):
        raise DomainError(f"Depth {depth} is shorter than the prefix {word_str(s)}")
    return [s + tail for tail in product((0, 1), repeat=depth - len(s))]


def apply_composition(c: list[int] | tuple[int, ...], w: Word) -> Word:
    for i in reversed(c):
        w = flip(i, w)
    return w


def composition_parity(c) -> Parity:
    return Parity.of(len(c))


@dataclass(frozen=True)
class Decomposition:
    n: int
    prefix: Word
    composition: tuple[int, ...]
    inner: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "prefix": word_str(self.prefix),
            "composition": list(self.composition),
            "inner": list(self.inner),
            "parity": composition_parity(self.composition).value,
        }


def decompose_on_cylinder(n: int, s) -> Decomposition:
    """
    Writes s_n on B_s as g o s_n o g^-1 where g is a product of flips with
    indices below n moving B_s into A_n. The result has odd length.

    :param n: Index of the flip.
    :param s: Prefix of length n.
    :return: The composition and its inner part g.
    """
    s = as_word(s)
    if len(s) != n:
        raise DomainError(f"Prefix {word_str(s)} must have length {n}")
    target = (0,) * (n - 1) + (1,) if n else ()
    mask = tuple(a ^ b for a, b in zip(s, target))
    inner = tuple(k for k in range(n) if mask[k] != (mask[k - 1] if k else 0))
    composition = inner + (n,) + tuple(reversed(inner))
    return Decomposition(n, s, composition, inner)


def check_decomposition(dec: Decomposition, depth: int) -> bool:
    """Exhaustive check on every word of length depth extending the prefix."""
    for w in cylinder_words(dec.prefix, depth):
        if apply_composition(dec.composition, w) != flip(dec.n, w):
            return False
        if not in_a_n(dec.n, apply_composition(dec.inner, w)):
            return False
    return True


@dataclass(frozen=True)
class Reach:
    source: Word
    target: Word
    parity: Parity
    composition: tuple[int, ...]
    sub_cylinder: Word
    image: Word

    def to_dict(self) -> dict:
        return {
            "from": word_str(self.source),
            "to": word_str(self.target),
            "parity": self.parity.value,
            "composition": list(self.composition),
            "sub_cylinder": word_str(self.sub_cylinder),
            "image": word_str(self.image),
        }


def search_bound(target: Word) -> int:
    return 2 * (len(target) + 2)


def reach_with_parity(s, target, parity: Parity | str, depth: int) -> Reach:
    """
    Finds a composition of the requested parity and a sub-cylinder B_s' of
    B_s mapped onto the target cylinder. When s is longer than the target,
    the image is the target extended by the remaining bits of s.

    :param s: Source prefix.
    :param target: Target prefix.
    :param parity: Required parity of the composition length.
    :param depth: Word length of the experiment.
    :return: The composition with its source sub-cylinder and image prefix.
    """
    s, target, parity = as_word(s), as_word(target), Parity(parity)
    width = max(len(s), len(target))
    if depth < width + 2:
        raise DomainError(f"Depth {depth} is below {width + 2}")
    full_target = target + s[len(target):]
    wanted = tuple(a ^ b for a, b in zip(s, full_target))
    bound = search_bound(target)
    start = ((0,) * width, Parity.EVEN)
    queue = deque([(start, ())])
    seen = {start}
    while queue:
        (mask, par), path = queue.popleft()
        if mask[: len(s)] == wanted and par is parity:
            source = tuple(a ^ b for a, b in zip(full_target, mask))
            logger.debug(f"reach {word_str(s)} -> {word_str(target)} ({parity.value}): {list(path)}")
            return Reach(s, target, parity, path, source, full_target)
        if len(path) >= bound:
            continue
        for i in range(width, -1, -1):
            flipped = mask[:i] + tuple(1 - b for b in mask[i:])
            state = (flipped, Parity.of(len(path) + 1))
            if state not in seen:
                seen.add(state)
                queue.append((state, path + (i,)))
    raise SearchBoundError(
        f"No {parity.value} composition from {word_str(s)} to {word_str(target)} within {bound} flips",
        bound,
    )


def check_reach(r: Reach, depth: int) -> bool:
    """The composition maps B_s' onto the image cylinder, bit for bit, at depth."""
    if not in_cylinder(r.source, r.sub_cylinder) or composition_parity(r.composition) is not r.parity:
        return False
    images = {apply_composition(r.composition, w) for w in cylinder_words(r.sub_cylinder, depth)}
    return images == set(cylinder_words(r.image, depth))


def cover_targets(s, parity: Parity | str, length: int, depth: int) -> list[Reach]:
    """
    One reach per target prefix of the given length; their images cover
    every word of that length.
    """
    return [
        reach_with_parity(s, target, parity, depth)
        for target in product((0, 1), repeat=length)
    ]


def check_cover(reaches: list[Reach], length: int, depth: int) -> bool:
    covered = set()
    for r in reaches:
        if not check_reach(r, depth):
            return False
        covered.update(w[:length] for w in cylinder_words(r.image, depth))
    return covered == set(product((0, 1), repeat=length))
