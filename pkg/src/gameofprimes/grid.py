"""Snake (boustrophedon) layout of a value window on an n x n board.

Row 0 is the top row.  Even rows run left to right and odd rows right to
left, so linear index ``r*n + k`` sits at column ``k`` on even rows and at
column ``n-1-k`` on odd rows.  Neighbourhoods are always positional (Moore,
Chebyshev distance 1); vertical neighbours differ by ``n*step`` in value
only in the middle column of an odd board.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .primes import MAX_U64, PrimeMask, sieve_window


class AddressError(IndexError):
    """A cell address lies outside the board."""


class MembershipError(ValueError):
    """A value is not one of the board's values."""


class MaskMismatchError(ValueError):
    """A prime mask was not built from the board it is used with."""


@dataclass(frozen=True)
class GridSpec:
    dim: int
    start: int = 1
    step: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.start < 1:
            raise ValueError(f"start must be >= 1, got {self.start}")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if self.last_value > MAX_U64:
            raise OverflowError("grid values exceed the 64-bit range")

    @property
    def cells(self) -> int:
        return self.dim * self.dim

    @property
    def last_value(self) -> int:
        return self.start + self.step * (self.cells - 1)

    @property
    def is_ngopm(self) -> bool:
        return self.start == 1 and self.step == 1

    def prime_mask(self) -> PrimeMask:
        return sieve_window(self.start, self.step, self.cells)


class CellAddr(NamedTuple):
    row: int
    col: int


def _check_addr(spec: GridSpec, addr) -> CellAddr:
    r, c = addr
    if not (0 <= r < spec.dim and 0 <= c < spec.dim):
        raise AddressError(f"address {(r, c)} outside a {spec.dim}x{spec.dim} grid")
    return CellAddr(r, c)


def linear_index(spec: GridSpec, addr) -> int:
    """Position of the cell along the snake (0 at top-left)."""
    r, c = _check_addr(spec, addr)
    n = spec.dim
    return r * n + (c if r % 2 == 0 else n - 1 - c)


def addr_of_index(spec: GridSpec, li: int) -> CellAddr:
    n = spec.dim
    if not 0 <= li < spec.cells:
        raise AddressError(f"linear index {li} outside a {n}x{n} grid")
    r, k = divmod(li, n)
    return CellAddr(r, k if r % 2 == 0 else n - 1 - k)


def value_at(spec: GridSpec, addr) -> int:
    return spec.start + spec.step * linear_index(spec, addr)


def addr_of(spec: GridSpec, value: int) -> CellAddr:
    """Inverse of :func:`value_at`; raises MembershipError for foreign values."""
    li, rem = divmod(value - spec.start, spec.step)
    if rem or not 0 <= li < spec.cells:
        raise MembershipError(f"{value} is not on the grid {spec}")
    return addr_of_index(spec, li)


def all_addrs(spec: GridSpec):
    n = spec.dim
    return [CellAddr(r, c) for r in range(n) for c in range(n)]


def neighbors(spec: GridSpec, addr) -> set[CellAddr]:
    r, c = _check_addr(spec, addr)
    n = spec.dim
    return {
        CellAddr(rr, cc)
        for rr in range(max(r - 1, 0), min(r + 2, n))
        for cc in range(max(c - 1, 0), min(c + 2, n))
        if (rr, cc) != (r, c)
    }


def is_boundary(spec: GridSpec, addr) -> bool:
    r, c = _check_addr(spec, addr)
    last = spec.dim - 1
    return r in (0, last) or c in (0, last)


def is_corner(spec: GridSpec, addr) -> bool:
    r, c = _check_addr(spec, addr)
    last = spec.dim - 1
    return r in (0, last) and c in (0, last)


def check_mask(spec: GridSpec, mask: PrimeMask) -> None:
    if mask.base != spec.start or mask.step != spec.step or len(mask) != spec.cells:
        raise MaskMismatchError(
            f"mask (base={mask.base}, step={mask.step}, len={len(mask)}) does not match {spec}"
        )


def is_prime_cell(spec: GridSpec, addr, mask: PrimeMask) -> bool:
    return mask.flags[linear_index(spec, addr)]


def prime_neighbor_count(spec: GridSpec, addr, mask: PrimeMask) -> int:
    check_mask(spec, mask)
    return sum(mask.flags[linear_index(spec, u)] for u in neighbors(spec, addr))


def is_middle_column(spec: GridSpec, addr) -> bool:
    _, c = _check_addr(spec, addr)
    return spec.dim % 2 == 1 and c == (spec.dim - 1) // 2
