"""Synchronous evolution of a board and cycle detection over its days.

A cell's *active count* is the number of its neighbours that are prime or
excited (a neighbour that is both counts once).  Each day every cell is
updated at once:

* dormant with active count >= 3 -> excited
* excited with active count >= 4 -> dormant (overcrowding)
* excited with active count == 0 -> dormant (loneliness)
* otherwise unchanged

A cell's own primality never enters its own update.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    CellAddr,
    GridSpec,
    addr_of_index,
    check_mask,
    linear_index,
    neighbors,
)
from .primes import PrimeMask


@dataclass(frozen=True)
class BoardState:
    """Excitation flags indexed by linear (snake) cell index."""

    day: int
    excited: tuple[bool, ...]

    @property
    def count(self) -> int:
        return sum(self.excited)

    def excited_indices(self) -> list[int]:
        return [i for i, e in enumerate(self.excited) if e]

    def excited_values(self, spec: GridSpec) -> list[int]:
        return [spec.start + spec.step * i for i in self.excited_indices()]

    def record(self, spec: GridSpec) -> dict:
        """Trajectory export record: day, ascending excited values, count."""
        values = self.excited_values(spec)
        return {"day": self.day, "excited_values": values, "count": len(values)}


@dataclass(frozen=True)
class CycleReport:
    tail_mu: int
    period_lambda: int
    days_explored: int

    def as_dict(self) -> dict:
        return {
            "tail_mu": self.tail_mu,
            "period_lambda": self.period_lambda,
            "days_explored": self.days_explored,
        }


class BudgetExceeded(RuntimeError):
    """No state repeated within the day budget."""

    def __init__(self, spec: GridSpec, days_explored: int):
        super().__init__(f"no repeated state for {spec} within {days_explored} days")
        self.spec = spec
        self.days_explored = days_explored


class Engine:
    """Vectorised stepper for one board.

    Internally states are n x n boolean arrays in board (row, col) layout;
    conversions to and from :class:`BoardState` go through the snake
    permutation.
    """

    def __init__(self, spec: GridSpec, mask: PrimeMask | None = None):
        if mask is None:
            mask = spec.prime_mask()
        check_mask(spec, mask)
        self.spec = spec
        self.mask = mask
        n = spec.dim
        # position in the flattened board of each linear index
        self._perm = np.array(
            [r * n + c for r, c in (addr_of_index(spec, i) for i in range(spec.cells))],
            dtype=np.intp,
        )
        primes = np.zeros(spec.cells, dtype=bool)
        primes[self._perm] = np.array(mask.flags, dtype=bool)
        self.primes = primes.reshape(n, n)
        self._pad = np.zeros((n + 2, n + 2), dtype=np.int8)

    def to_board(self, state: BoardState) -> np.ndarray:
        if len(state.excited) != self.spec.cells:
            raise ValueError("state length does not match the grid")
        flat = np.zeros(self.spec.cells, dtype=bool)
        flat[self._perm] = np.array(state.excited, dtype=bool)
        return flat.reshape(self.spec.dim, self.spec.dim)

    def from_board(self, board: np.ndarray, day: int) -> BoardState:
        flat = board.ravel()[self._perm]
        return BoardState(day, tuple(bool(x) for x in flat))

    def active_counts(self, board: np.ndarray) -> np.ndarray:
        n = self.spec.dim
        pad = self._pad
        pad[1:-1, 1:-1] = board | self.primes
        total = np.zeros((n, n), dtype=np.int8)
        for dr in (0, 1, 2):
            for dc in (0, 1, 2):
                if dr == 1 and dc == 1:
                    continue
                total += pad[dr : dr + n, dc : dc + n]
        return total

    def advance(self, board: np.ndarray) -> np.ndarray:
        a = self.active_counts(board)
        born = ~board & (a >= 3)
        survive = board & (a >= 1) & (a <= 3)
        return born | survive

    def initial_board(self) -> np.ndarray:
        return np.zeros((self.spec.dim, self.spec.dim), dtype=bool)

    def key(self, board: np.ndarray) -> bytes:
        return np.packbits(board).tobytes()


def initial_state(spec: GridSpec) -> BoardState:
    return BoardState(0, (False,) * spec.cells)


def active_count(spec: GridSpec, state: BoardState, addr, mask: PrimeMask) -> int:
    check_mask(spec, mask)
    total = 0
    for u in neighbors(spec, addr):
        li = linear_index(spec, u)
        if mask.flags[li] or state.excited[li]:
            total += 1
    return total


def step(spec: GridSpec, state: BoardState, mask: PrimeMask) -> BoardState:
    eng = Engine(spec, mask)
    return eng.from_board(eng.advance(eng.to_board(state)), state.day + 1)


def run(spec: GridSpec, num_days: int, mask: PrimeMask | None = None) -> list[BoardState]:
    """States for days 0..num_days inclusive."""
    eng = Engine(spec, mask)
    board = eng.initial_board()
    out = [eng.from_board(board, 0)]
    for day in range(1, num_days + 1):
        board = eng.advance(board)
        out.append(eng.from_board(board, day))
    return out


def explore(spec: GridSpec, max_days: int, mask: PrimeMask | None = None):
    """Walk days until the first repeat.

    Returns ``(report, keys)`` where ``keys[d]`` is the packed state of day
    ``d`` for every distinct day before the first repeat.  Packed states are
    the dictionary keys themselves, so a hash collision can never merge two
    different states.
    """
    if max_days < 1:
        raise ValueError("max_days must be >= 1")
    eng = Engine(spec, mask)
    board = eng.initial_board()
    k = eng.key(board)
    first_seen = {k: 0}
    keys = [k]
    for day in range(1, max_days + 1):
        board = eng.advance(board)
        k = eng.key(board)
        f = first_seen.get(k)
        if f is not None:
            if day == 1:
                # game never starts: all-dormant fixed point, period 0 by convention
                return CycleReport(0, 0, day), keys
            return CycleReport(f, day - f, day), keys
        first_seen[k] = day
        keys.append(k)
    raise BudgetExceeded(spec, max_days)


def detect_cycle(spec: GridSpec, max_days: int = 10**6) -> CycleReport:
    return explore(spec, max_days)[0]


def game_starts(spec: GridSpec, mask: PrimeMask | None = None) -> bool:
    """True iff some cell has at least three prime neighbours."""
    eng = Engine(spec, mask)
    counts = eng.active_counts(eng.initial_board())
    return bool((counts >= 3).any())


def cell_history(states: list[BoardState], spec: GridSpec, addr: CellAddr) -> list[bool]:
    li = linear_index(spec, addr)
    return [s.excited[li] for s in states]
