"""Figures for the CLI report paths.  Everything renders off-screen to files."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .automaton import BoardState  # noqa: E402
from .grid import GridSpec, addr_of_index  # noqa: E402

EXCITED = "#9db8e8"
PRIME_EDGE = "#b03a2e"


def _draw_board(ax, spec: GridSpec, state: BoardState, primes=None):
    n = spec.dim
    img = np.zeros((n, n))
    for li, e in enumerate(state.excited):
        if e:
            r, c = addr_of_index(spec, li)
            img[r, c] = 1
    ax.imshow(img, cmap=matplotlib.colors.ListedColormap(["white", EXCITED]), vmin=0, vmax=1)
    fs = max(4, 11 - n // 2)
    for li in range(spec.cells):
        r, c = addr_of_index(spec, li)
        bold = primes is not None and primes[li]
        ax.text(c, r, str(spec.start + spec.step * li), ha="center", va="center", fontsize=fs,
                color=PRIME_EDGE if bold else "black", fontweight="bold" if bold else "normal")
    ax.set_xticks(np.arange(-0.5, n, 1), minor=True)
    ax.set_yticks(np.arange(-0.5, n, 1), minor=True)
    ax.grid(which="minor", color="0.4", linewidth=0.6)
    ax.tick_params(which="both", bottom=False, left=False, labelbottom=False, labelleft=False)
    ax.set_title(f"Day {state.day}", fontsize=9)


def plot_trajectory(spec: GridSpec, states: list[BoardState], path, primes=None, ncols: int = 4):
    """One panel per day; excited cells shaded, primes in bold red."""
    k = len(states)
    ncols = min(ncols, k)
    nrows = -(-k // ncols)
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.4 * ncols, 2.4 * nrows), squeeze=False)
    for ax in axes.flat[k:]:
        ax.axis("off")
    for ax, s in zip(axes.flat, states):
        _draw_board(ax, spec, s, primes)
    fig.suptitle(f"{spec.dim}x{spec.dim}, start {spec.start}, step {spec.step}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_cycle_table(rows: list[dict], path):
    """Bar chart of period per dimension (log scale), known values marked."""
    ok = [r for r in rows if r.get("period_lambda") is not None]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    dims = [r["dim"] for r in ok]
    lam = [max(r["period_lambda"], 0) for r in ok]
    ax.bar(dims, [v if v > 0 else 0.8 for v in lam], color=EXCITED, edgecolor="0.3", label="computed")
    exp = [(r["dim"], r["expected_lambda"]) for r in ok if r.get("expected_lambda")]
    if exp:
        ax.scatter(*zip(*exp), marker="_", s=200, color=PRIME_EDGE, label="expected", zorder=3)
    ax.set_yscale("log")
    ax.set_xlabel("dimension")
    ax.set_ylabel("cycle length")
    ax.set_xticks(dims)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_notes(notes, path):
    fig, ax = plt.subplots(figsize=(6, 2.8))
    days = [nt.day for nt in notes]
    ax.step(days, [nt.frequency for nt in notes], where="mid", color="0.2")
    ax.scatter(days, [nt.frequency for nt in notes], color=EXCITED, edgecolor="0.2", zorder=3)
    for nt in notes:
        ax.annotate(nt.name, (nt.day, nt.frequency), textcoords="offset points", xytext=(0, 6),
                    ha="center", fontsize=8)
    ax.set_xlabel("day")
    ax.set_ylabel("Hz")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
