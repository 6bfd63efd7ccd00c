"""Additive approximation of minimal energies by weight rounding.

Rounding every weight up to the nearest multiple of B can only help Alice, so
the minimal energies of the rounded game lower-bound the true ones.  When
every node's penalty is at least B (every negative cycle Bob can force has
average weight <= -B), the rounded game keeps all those cycles negative and
the loss is at most B per edge of a simple path: the true energies exceed the
rounded ones by at most n*B.  Solving the rounded game is cheap because its
energies are multiples of B.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import multiples_list
from .core import Edge, EnergyFn, GameGraph
from .value_iteration import ViterResult, solve_with_list


def _round_up(weight: int, granularity: int) -> int:
    return -((-weight) // granularity) * granularity


@dataclass(frozen=True)
class RoundedGame:
    """A game with every weight rounded up to a multiple of ``granularity``."""

    base: GameGraph
    granularity: int
    graph: GameGraph


def round_weights(graph: GameGraph, granularity: int) -> RoundedGame:
    """Round every edge weight up to the nearest multiple of ``granularity``.

    Each rounded weight w_B satisfies w <= w_B < w + B; the input graph is
    untouched.
    """
    if granularity < 1:
        raise ValueError("granularity must be positive")
    rounded: tuple[Edge, ...] = tuple(
        (src, dst, _round_up(weight, granularity)) for src, dst, weight in graph.edges
    )
    return RoundedGame(graph, granularity, GameGraph(graph.owners, rounded))


@dataclass(frozen=True)
class ApproxResult:
    energies: EnergyFn
    granularity: int  # B = floor(error_budget / n)
    bound: int
    error_budget: int
    rounded: RoundedGame
    viter: ViterResult


def approximate_energies(graph: GameGraph, bound: int, error_budget: int) -> ApproxResult:
    """Solve the rounded game exactly, yielding a lower bound on the true
    minimal energies.

    ``bound`` must cap the finite minimal energies of the input game (it then
    also caps the rounded game's, which can only be smaller).  The returned
    energies e satisfy e <= e* unconditionally; when every node's penalty is
    at least B = floor(error_budget/n) they additionally satisfy
    e* <= e + n*B <= e + error_budget with identical infinite sets.
    Rejects error budgets below the node count (they would force B = 0).
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if error_budget < graph.n:
        raise ValueError(
            f"error budget {error_budget} is below the node count {graph.n}"
        )
    granularity = error_budget // graph.n
    rounded = round_weights(graph, granularity)
    result = solve_with_list(rounded.graph, multiples_list(granularity, bound))
    return ApproxResult(
        energies=result.energies,
        granularity=granularity,
        bound=bound,
        error_budget=error_budget,
        rounded=rounded,
        viter=result,
    )
