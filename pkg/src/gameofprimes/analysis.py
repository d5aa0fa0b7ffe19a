"""Quadruple searches, equivalent starting values and theorem validators."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .automaton import Engine, explore, run
from .grid import (
    GridSpec,
    addr_of,
    all_addrs,
    is_boundary,
    is_corner,
    linear_index,
    neighbors,
    prime_neighbor_count,
    value_at,
)
from .primes import _window_flags, gap_signature, is_prime

Mode = Literal["arithmetic", "grid"]


@dataclass(frozen=True)
class QuadrupleHit:
    dim: int
    x: int
    mode: Mode


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    holds: bool
    vacuous: bool = False
    witness: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.holds:
            return "failed"
        return "vacuous" if self.vacuous else "holds"

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "holds": self.holds,
            "witness": self.witness,
            "details": self.details,
        }


# -- quadruple searches -------------------------------------------------------


def quad_search_arithmetic(k: int) -> QuadrupleHit | None:
    """Smallest x in [k+2, k*k-k-1] with x-1, x+1, x-k and x+k all prime.

    Same bounds and test order as the original search loop; no check is
    made that x actually sits where those four values are its neighbours.
    """
    x = k + 2
    while x <= k * k - k - 1:
        if is_prime(x + 1) and is_prime(x - 1) and is_prime(x + k) and is_prime(x - k):
            return QuadrupleHit(k, x, "arithmetic")
        x += 1
    return None


def quad_search_grid(spec: GridSpec) -> QuadrupleHit | None:
    """Smallest value whose cell has four or more prime grid neighbours."""
    mask = spec.prime_mask()
    for li in range(spec.cells):
        addr = addr_of(spec, spec.start + spec.step * li)
        if prime_neighbor_count(spec, addr, mask) >= 4:
            return QuadrupleHit(spec.dim, value_at(spec, addr), "grid")
    return None


def claim_checker(p_max: int) -> list[int]:
    """Primes 5 <= p <= p_max for which the arithmetic search finds nothing."""
    if p_max < 5:
        return []
    flags = _window_flags(0, 1, p_max + 1)
    return [int(p) for p in np.flatnonzero(flags) if p >= 5 and quad_search_arithmetic(int(p)) is None]


def odd_dimension_census(lo: int = 3, hi: int = 100) -> dict[int, int | None]:
    """Arithmetic search result for every odd dimension in [lo, hi]."""
    out = {}
    for k in range(lo | 1, hi + 1, 2):
        hit = quad_search_arithmetic(k)
        out[k] = hit.x if hit else None
    return out


# -- equivalent starting values ---------------------------------------------------

_CHUNK = 1 << 18


def equivalent_starts(dim: int, start: int, search_bound: int, max_results: int = 10) -> list[int]:
    """Starts start < b <= search_bound whose dim*dim window has the same
    prime positions as the window at ``start``, ascending."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    width = dim * dim
    target = np.array(gap_signature(start, width).prime_offsets, dtype=np.intp)
    found: list[int] = []
    lo = start + 1
    while lo <= search_bound and len(found) < max_results:
        hi = min(lo + _CHUNK - 1, search_bound)
        n_starts = hi - lo + 1
        flags = _window_flags(lo, 1, n_starts + width - 1).astype(np.int32)
        csum = np.concatenate(([0], np.cumsum(flags)))
        # candidate b = lo + j: window flags[j : j + width]
        in_window = csum[width : width + n_starts] - csum[:n_starts]
        ok = in_window == len(target)
        for off in target:
            ok &= flags[off : off + n_starts].astype(bool)
        for j in np.flatnonzero(ok)[: max_results - len(found)]:
            found.append(lo + int(j))
        lo = hi + 1
    return found


# -- theorem validators -----------------------------------------------------------


def verify_indegree(spec: GridSpec, max_days: int = 10**6) -> TheoremVerdict:
    """Every realized state has at most two predecessors within the run."""
    report, keys = explore(spec, max_days)
    succ = {i: i + 1 for i in range(len(keys) - 1)}
    succ[len(keys) - 1] = report.tail_mu
    indeg = Counter(succ.values())
    worst_day, worst = max(indeg.items(), key=lambda kv: kv[1])
    details = {
        "states": len(keys),
        "max_in_degree": worst,
        "tail_mu": report.tail_mu,
        "period_lambda": report.period_lambda,
    }
    if worst > 2:
        preds = sorted(d for d, s in succ.items() if s == worst_day)
        return TheoremVerdict("4.1", False, witness=f"day {worst_day} reached from days {preds}", details=details)
    return TheoremVerdict("4.1", True, vacuous=len(keys) == 1, details=details)


def verify_even_cycle(spec: GridSpec, max_days: int = 10**6) -> TheoremVerdict:
    """If some cell has >= 4 prime neighbours, the cycle length is even."""
    hit = quad_search_grid(spec)
    if hit is None:
        return TheoremVerdict("4.2", True, vacuous=True, details={"hypothesis": None})
    report, _ = explore(spec, max_days)
    details = {"hypothesis": hit.x, "period_lambda": report.period_lambda, "tail_mu": report.tail_mu}
    if report.period_lambda % 2:
        return TheoremVerdict(
            "4.2",
            False,
            witness=f"cell {hit.x} has >= 4 prime neighbours but period is {report.period_lambda}",
            details=details,
        )
    return TheoremVerdict("4.2", True, details=details)


def verify_immortal_corners(spec: GridSpec, horizon: int = 50) -> TheoremVerdict:
    """Corners with a prime neighbour never go dormant after first excitation."""
    mask = spec.prime_mask()
    states = run(spec, horizon, mask)
    watched = [a for a in all_addrs(spec) if is_corner(spec, a) and prime_neighbor_count(spec, a, mask) >= 1]
    ever_excited = False
    for addr in watched:
        li = linear_index(spec, addr)
        first = next((s.day for s in states if s.excited[li]), None)
        if first is None:
            continue
        ever_excited = True
        for s in states[first:]:
            if not s.excited[li]:
                return TheoremVerdict(
                    "4.3",
                    False,
                    witness=f"corner {value_at(spec, addr)} excited on day {first}, dormant on day {s.day}",
                )
    return TheoremVerdict("4.3", True, vacuous=not ever_excited, details={"corners_checked": len(watched)})


def _parity_rule_applies(spec: GridSpec, addr) -> bool:
    v = value_at(spec, addr)
    return (
        spec.dim % 2 == 0
        and v % 2 == 1
        and not is_boundary(spec, addr)
        and all(value_at(spec, u) != 2 for u in neighbors(spec, addr))
    )


def day1_parity_excitable(spec: GridSpec, addr) -> bool:
    """Whether the cell is excited on day 1.

    Neighbours that are even and not 2 cannot be prime, so when fewer than
    three neighbours are odd or equal to 2 the answer is False from parity
    alone.  Otherwise the prime neighbours are counted.
    """
    if spec.step != 1:
        raise ValueError("the parity predicate needs consecutive values (step 1)")
    nb_values = [value_at(spec, u) for u in neighbors(spec, addr)]
    could_be_prime = sum(1 for v in nb_values if v % 2 == 1 or v == 2)
    if could_be_prime < 3:
        return False
    return sum(1 for v in nb_values if is_prime(v)) >= 3


def verify_parity_day1(spec: GridSpec) -> TheoremVerdict:
    """Interior odd cells of an even board, away from 2, stay dormant on day 1."""
    if spec.step != 1:
        raise ValueError("the parity check needs consecutive values (step 1)")
    cells = [a for a in all_addrs(spec) if _parity_rule_applies(spec, a)]
    if not cells:
        return TheoremVerdict("4.4.1", True, vacuous=True, details={"cells_checked": 0})
    eng = Engine(spec)
    day1 = eng.from_board(eng.advance(eng.initial_board()), 1)
    bad = sorted(value_at(spec, a) for a in cells if day1.excited[linear_index(spec, a)])
    details = {"cells_checked": len(cells), "excited_on_day1": bad}
    if bad:
        return TheoremVerdict("4.4.1", False, witness=f"odd interior values excited on day 1: {bad}", details=details)
    return TheoremVerdict("4.4.1", True, details=details)


def excite_prob_estimate(p: float) -> float:
    """Chance that at least three of four independent odd neighbours are prime."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return 4 * p**3 * (1 - p) + p**4


VALIDATORS = {
    "4.1": verify_indegree,
    "4.2": verify_even_cycle,
    "4.3": verify_immortal_corners,
    "4.4.1": verify_parity_day1,
}
