"""Game of Primes: a cellular automaton on snake-filled grids of naturals."""

__version__ = "0.1.0"

from .analysis import (  # noqa: E402
    QuadrupleHit,
    TheoremVerdict,
    claim_checker,
    day1_parity_excitable,
    equivalent_starts,
    excite_prob_estimate,
    quad_search_arithmetic,
    quad_search_grid,
    verify_even_cycle,
    verify_immortal_corners,
    verify_indegree,
    verify_parity_day1,
)
from .automaton import (  # noqa: E402
    BoardState,
    BudgetExceeded,
    CycleReport,
    active_count,
    detect_cycle,
    game_starts,
    initial_state,
    run,
    step,
)
from .grid import (  # noqa: E402
    CellAddr,
    GridSpec,
    addr_of,
    is_middle_column,
    neighbors,
    prime_neighbor_count,
    value_at,
)
from .primes import GapSignature, PrimeMask, gap_signature, is_prime, sieve_window  # noqa: E402
from .sonify import Note, note_sequence, render_wav  # noqa: E402
