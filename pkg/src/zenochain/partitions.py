"""Integer partition machinery.

Exact partition counts, canonical enumeration, and the number of apparatus
configurations realizing each partition. Everything here is exact integer
arithmetic; the only float is the asymptotic bit estimate.

All functions are pure and safe to call concurrently; the count cache is
guarded by a lock and enumeration order is deterministic.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "ASYMPTOTIC_BITS_PER_SQRT_N",
    "COUNT_CAP",
    "ENUMERATION_CAP",
    "CapacityError",
    "Partition",
    "asymptotic_log2_p",
    "count_partitions",
    "enumerate_partitions",
    "state_count",
]

#: Largest n accepted by count_partitions. Desk-scale: the memo table up to
#: here holds ~10^4 integers of ~100 digits.
COUNT_CAP = 10_000

#: Largest n accepted by enumerate_partitions; p(64) = 1,741,630 partitions.
ENUMERATION_CAP = 64

#: Coefficient of sqrt(n) in the large-n growth of log2 p(n):
#: pi * sqrt(2/3) * log2(e), about 3.7007.
ASYMPTOTIC_BITS_PER_SQRT_N = math.pi * math.sqrt(2.0 / 3.0) / math.log(2.0)


class CapacityError(ValueError):
    """An argument exceeded a documented operational cap."""


@dataclass(frozen=True, slots=True)
class Partition:
    """Multiset of positive integers summing to ``n``, stored non-increasing."""

    parts: tuple[int, ...]
    n: int = field(init=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        for prev, cur in zip(parts, parts[1:]):
            if cur > prev:
                raise ValueError(f"parts must be non-increasing, got {parts}")
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def _trusted(cls, parts: tuple[int, ...], n: int) -> "Partition":
        # Enumeration fast path; the caller guarantees the invariants.
        self = object.__new__(cls)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", n)
        return self

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


_count_cache = [1]  # p(0)
_count_lock = threading.Lock()


def count_partitions(n: int) -> int:
    """Exact number of partitions of ``n``; ``p(0) == 1``.

    Euler's pentagonal-number recurrence over a shared memo table, so a
    sweep over 1..n costs no more than the single largest call.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > COUNT_CAP:
        raise CapacityError(f"count_partitions supports n <= {COUNT_CAP}, got {n}")
    if n < len(_count_cache):
        return _count_cache[n]
    with _count_lock:
        while len(_count_cache) <= n:
            m = len(_count_cache)
            total = 0
            k = 1
            while True:
                g = k * (3 * k - 1) // 2
                if g > m:
                    break
                term = _count_cache[m - g]
                g += k  # second pentagonal number of index k
                if g <= m:
                    term += _count_cache[m - g]
                total = total - term if k % 2 == 0 else total + term
                k += 1
            _count_cache.append(total)
    return _count_cache[n]


def _partition_profiles(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(parts, orderings)`` for every partition of ``n``.

    ``parts`` is non-increasing and the sequence is reverse-lexicographic:
    ``(n,)`` first, all ones last. ``orderings`` is the number of distinct
    sequencings of the parts, m! / prod(multiplicity_j!), accumulated during
    the walk so large sweeps avoid a factorial recomputation per partition.
    """
    fact = [math.factorial(i) for i in range(n + 1)]
    parts: list[int] = []

    def walk(remaining: int, max_value: int, m: int, denom: int):
        top = remaining if max_value > remaining else max_value
        for value in range(top, 0, -1):
            for mult in range(remaining // value, 0, -1):
                rest = remaining - value * mult
                if rest and value == 1:
                    break  # ones must absorb the whole remainder
                parts.extend([value] * mult)
                if rest == 0:
                    yield tuple(parts), fact[m + mult] // (denom * fact[mult])
                else:
                    yield from walk(rest, value - 1, m + mult, denom * fact[mult])
                del parts[len(parts) - mult:]

    return walk(n, n, 0, 1)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` exactly once, reverse-lexicographically.

    The first partition is ``(n,)`` and the last is ``n`` ones; the total
    number of items equals ``count_partitions(n)``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise CapacityError(
            f"enumerate_partitions supports n <= {ENUMERATION_CAP}, got {n}"
        )
    return (Partition._trusted(parts, n) for parts, _ in _partition_profiles(n))


def state_count(partition: Partition) -> int:
    """Number of apparatus configurations whose gap structure is ``partition``.

    Each ordering of the parts is realized by exactly two configurations
    (the last slot's polarizer is redundant), hence twice the multinomial
    m! / prod(multiplicity_j!) over the part multiplicities.
    """
    count = 2 * math.factorial(len(partition.parts))
    for _, run in itertools.groupby(partition.parts):
        count //= math.factorial(sum(1 for _ in run))
    return count


def asymptotic_log2_p(n: int) -> float:
    """Leading-order estimate of ``log2 count_partitions(n)`` in bits.

    Evaluates ``sqrt(n) * pi * sqrt(2/3) * log2(e)``, about ``3.7007 sqrt(n)``.
    An overestimate at finite n: the true ``log2 p(n)`` stays strictly below
    it for every n tested (the subexponential prefactor of p(n) is < 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return ASYMPTOTIC_BITS_PER_SQRT_N * math.sqrt(n)
