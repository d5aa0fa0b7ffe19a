"""Primality decisions, windowed prime masks and gap signatures.

Everything here works on 64-bit naturals.  ``is_prime`` is a deterministic
Miller-Rabin test; ``sieve_window`` sieves an arithmetic progression of
values in one pass when the window is dense enough to pay for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

MAX_U64 = (1 << 64) - 1

# First twelve primes: a deterministic witness set for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = frozenset(_MR_BASES)

# Sieving is used only when sqrt(max value) stays below this bound.
SIEVE_ROOT_LIMIT = 1 << 22
DENSE_MIN_COUNT = 64


def is_prime(v: int) -> bool:
    """Return True iff *v* is prime.  Exact for every 0 <= v < 2**64."""
    if v > MAX_U64:
        raise ValueError(f"{v} exceeds the 64-bit range")
    if v < 2:
        return False
    if v in _SMALL_PRIMES:
        return True
    for p in _MR_BASES:
        if v % p == 0:
            return False
    d = v - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, v)
        if x == 1 or x == v - 1:
            continue
        for _ in range(s - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> np.ndarray:
    """All primes <= limit (plain Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _sieve_progression(base: int, step: int, count: int) -> np.ndarray:
    """Prime flags for base, base+step, ..., sieving the progression directly."""
    hi = base + step * (count - 1)
    flags = np.ones(count, dtype=bool)
    # values 0 and 1 sit at the very front of the progression, if at all
    for i in range(min(count, 2)):
        if base + i * step < 2:
            flags[i] = False
    for p in _base_primes(isqrt(hi)).tolist():
        if step % p == 0:
            if base % p:
                continue
            # every value in the window is a multiple of p
            first, stride = 0, 1
        else:
            first, stride = (-base * pow(step, -1, p)) % p, p
        if first >= count:
            continue
        flags[first::stride] = False
        # p itself is prime if it lies on the progression
        own, rem = divmod(p - base, step)
        if p >= base and not rem and own < count:
            flags[own] = True
    return flags


def _window_flags(base: int, step: int, count: int) -> np.ndarray:
    if count <= 0:
        return np.zeros(0, dtype=bool)
    if step < 1:
        raise ValueError("step must be >= 1")
    if base < 0:
        raise ValueError("base must be a natural number")
    hi = base + step * (count - 1)
    if hi > MAX_U64:
        raise OverflowError(f"window end {hi} exceeds the 64-bit range")
    if count >= DENSE_MIN_COUNT and isqrt(hi) <= SIEVE_ROOT_LIMIT:
        return _sieve_progression(base, step, count)
    return np.fromiter((is_prime(base + i * step) for i in range(count)), dtype=bool, count=count)


@dataclass(frozen=True)
class PrimeMask:
    """flags[i] is True iff base + i*step is prime."""

    base: int
    step: int
    flags: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.flags)

    def value(self, i: int) -> int:
        return self.base + i * self.step


def sieve_window(base: int, step: int, count: int) -> PrimeMask:
    """Prime flags for the ``count`` values ``base + i*step``.

    Raises OverflowError when the last value does not fit in 64 bits.
    """
    flags = _window_flags(base, step, count)
    return PrimeMask(base, step, tuple(bool(f) for f in flags))


@dataclass(frozen=True)
class GapSignature:
    """Positions of primes inside a window of consecutive integers.

    ``gaps`` is measured from the value just before the window, so
    ``gaps[0] == prime_offsets[0] + 1``.
    """

    window_len: int
    prime_offsets: tuple[int, ...]

    @property
    def gaps(self) -> tuple[int, ...]:
        out = []
        prev = -1
        for off in self.prime_offsets:
            out.append(off - prev)
            prev = off
        return tuple(out)

    @classmethod
    def from_gaps(cls, window_len: int, gaps) -> GapSignature:
        offsets = []
        pos = -1
        for g in gaps:
            if g < 1:
                raise ValueError("gaps must be positive")
            pos += g
            offsets.append(pos)
        if offsets and offsets[-1] >= window_len:
            raise ValueError("gaps run past the end of the window")
        return cls(window_len, tuple(offsets))


def gap_signature(base: int, count: int) -> GapSignature:
    flags = _window_flags(base, 1, count)
    return GapSignature(count, tuple(int(i) for i in np.flatnonzero(flags)))
