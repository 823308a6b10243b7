"""Integer partitions, hooks, staircases, the delta function and scaled dominance."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import zip_longest
from math import comb, isqrt
from typing import Iterable, Iterator

from .errors import NegativePart, NotWeaklyDecreasing, OutOfRange, TooSmall, ZeroPartition


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the zero partition.  Construct through
    :func:`make_partition` (or ``Partition.parse``) to get validation;
    calling the class directly trusts its argument.
    """

    __slots__ = ()

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the canonical comma-separated syntax, e.g. ``"3,2,2"``; ``""`` is zero."""
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        return make_partition(int(tok) for tok in text.strip("()").split(",") if tok.strip())


def make_partition(raw: Iterable[int]) -> Partition:
    parts = list(raw)
    for x in parts:
        if x < 0:
            raise NegativePart(f"negative part {x} in {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(parts)


def conjugate(part: Iterable[int]) -> Partition:
    part = tuple(part)
    if not part:
        return Partition(())
    return Partition(sum(1 for x in part if x > j) for j in range(part[0]))


def delta(x: int) -> int:
    """The unique ``d >= 1`` with ``C(d, 2) <= x < C(d + 1, 2)``."""
    if x < 0:
        raise OutOfRange(f"delta is defined on non-negative integers, got {x}")
    # C(d, 2) <= x  <=>  d <= (1 + sqrt(1 + 8x)) / 2
    d = (1 + isqrt(1 + 8 * x)) // 2
    while comb(d, 2) > x:
        d -= 1
    while comb(d + 1, 2) <= x:
        d += 1
    return d


@dataclass(frozen=True)
class HookIndex:
    k: int
    alpha: int

    def __post_init__(self):
        if self.k < 1 or not 0 <= self.alpha < self.k:
            raise OutOfRange(f"hook index needs 0 <= alpha < k, got k={self.k}, alpha={self.alpha}")

    @property
    def partition(self) -> Partition:
        return Partition((self.alpha + 1,) + (1,) * (self.k - self.alpha - 1))


def hook_partition(k: int, alpha: int) -> Partition:
    """Shape ``(alpha + 1, 1, ..., 1)`` of weight ``k``; ``alpha = 0`` is a column, ``alpha = k - 1`` a row."""
    return HookIndex(k, alpha).partition


def staircase_partition(k: int, m: int) -> tuple[int, int, Partition]:
    """Return ``(l, s, I)`` with ``k = m*l + s``, ``0 <= s < m`` and ``I = ((l+1)^s, l^(m-s))``."""
    if k < 1 or m < 1:
        raise OutOfRange(f"k and m must be positive, got k={k}, m={m}")
    l, s = divmod(k, m)
    if l == 0:
        raise TooSmall(f"k={k} < m={m}: the staircase needs l = k // m >= 1")
    return l, s, Partition((l + 1,) * s + (l,) * (m - s))


class Dominance(str, enum.Enum):
    STRICTLY_DOMINATES = "strictly_dominates"
    EQUIVALENT = "equivalent"
    DOMINATED = "dominated"
    INCOMPARABLE = "incomparable"


def _partial_sums(part: tuple[int, ...]) -> Iterator[int]:
    total = 0
    for x in part:
        total += x
        yield total


def dominates(big: Iterable[int], small: Iterable[int]) -> Dominance:
    """Compare two partitions after scaling both to total weight one.

    Partial sums are cross-multiplied by the other weight, so the comparison is
    exact on integers.  Sums past the end of a partition stay at its weight.
    """
    big, small = tuple(big), tuple(small)
    if not big or not small:
        raise ZeroPartition("dominance is only defined for non-zero partitions")
    wb, ws = sum(big), sum(small)
    ge = le = True
    for sb, ss in zip_longest(_partial_sums(big), _partial_sums(small)):
        sb = wb if sb is None else sb
        ss = ws if ss is None else ss
        lhs, rhs = ws * sb, wb * ss
        if lhs < rhs:
            ge = False
        elif lhs > rhs:
            le = False
    if ge and le:
        return Dominance.EQUIVALENT
    if ge:
        return Dominance.STRICTLY_DOMINATES
    if le:
        return Dominance.DOMINATED
    return Dominance.INCOMPARABLE


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for p in rec(n, max_part, max_length):
        yield Partition(p)


def contained_in(outer: tuple[int, ...]) -> Iterator[Partition]:
    """Every partition whose diagram fits inside ``outer`` (including zero)."""

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(outer):
            yield ()
            return
        for x in range(min(cap, outer[i]), -1, -1):
            if x == 0:
                yield ()
            else:
                for tail in rec(i + 1, x):
                    yield (x,) + tail

    for p in rec(0, outer[0] if outer else 0):
        yield Partition(p)
