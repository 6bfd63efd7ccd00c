"""Exact minimal energies via repeated approximation.

Given a lower bound D on the game's penalty and an upper bound M on its
finite minimal energies, one round of the rounding approximation solves the
game to within half the bound; subtracting the approximation as a potential
yields a residual game with the same penalty and half the bound.  Iterating
reaches a trivially small bound, where plain value iteration finishes.

The driver does not know the penalty: it guesses decreasing lower bounds
D_k = (M / 2^k) / n, runs the recursion, and accepts a result only when it
passes the fixed-point verification and introduces no infinities beyond the
nodes the first approximation already proved losing.  The second condition is
automatic for a correct guess (a sufficiently fine rounding keeps exactly the
losing nodes losing) but rejects the inflated near-fixed-points that an
undersized bound can produce; rejected guesses are halved until D_k would
drop below 1, when unrestricted value iteration settles the instance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .admissible import full_list
from .core import (
    INF,
    EnergyFn,
    GameGraph,
    PotentialContractError,
    apply_potential,
    verify_minimal,
)
from .rounding import approximate_energies
from .value_iteration import solve_with_list


@dataclass(frozen=True)
class PhaseRecord:
    """One level of the approximate-transform-recurse pipeline."""

    nodes: int
    bound: int
    error_budget: int | None  # None for a base-case value iteration
    granularity: int | None
    updates: int
    steps: int
    edge_work: int
    dropped: int


@dataclass
class _RunRecorder:
    phases: list[PhaseRecord] = field(default_factory=list)
    first_drop: frozenset[int] | None = None


@dataclass(frozen=True)
class GuessRecord:
    error_budget: int  # c_k
    penalty_guess: Fraction  # D_k = c_k / n
    verified: bool
    infinite_consistent: bool
    contract_error: str | None
    phases: tuple[PhaseRecord, ...]

    @property
    def accepted(self) -> bool:
        return self.contract_error is None and self.verified and self.infinite_consistent


@dataclass(frozen=True)
class SolveReport:
    energies: EnergyFn
    bound: int
    guesses: tuple[GuessRecord, ...]
    fallback_used: bool
    fallback_updates: int
    wall_ms: float
    total_updates: int
    total_steps: int
    total_edge_work: int

    @property
    def recursion_depth(self) -> int:
        accepted = [g for g in self.guesses if g.accepted]
        return len(accepted[0].phases) if accepted else 0


def minimal_energy_with_penalty_bound(
    graph: GameGraph,
    bound: int,
    penalty_floor: Fraction | int,
    recorder: _RunRecorder | None = None,
) -> EnergyFn:
    """Minimal energies assuming ``penalty_floor`` <= P(G,w) and ``bound``
    caps the finite minimal energies.

    When either assumption is wrong the result may be wrong and must be
    checked by the caller (see :func:`solve`); a violated potential-transform
    contract surfaces as PotentialContractError.
    """
    floor = Fraction(penalty_floor)
    if floor < 1:
        raise ValueError("the penalty lower bound must be at least 1")
    if bound < 0:
        raise ValueError("the energy bound must be non-negative")
    return _solve_level(graph, bound, floor, recorder, depth=0)


def _solve_level(
    graph: GameGraph,
    bound: int,
    floor: Fraction,
    recorder: _RunRecorder | None,
    depth: int,
) -> EnergyFn:
    n = graph.n
    if n == 0:
        return ()
    if floor >= Fraction(bound, 2 * n):
        if bound <= n:
            result = solve_with_list(graph, full_list(n))
            if recorder is not None:
                recorder.phases.append(
                    PhaseRecord(
                        nodes=n,
                        bound=bound,
                        error_budget=None,
                        granularity=None,
                        updates=result.total_updates,
                        steps=result.steps,
                        edge_work=result.edge_work,
                        dropped=0,
                    )
                )
            return result.energies
        # Halving step; the approximation rejects budgets below n, so small
        # odd bounds are clamped up (still within n * floor).
        budget = max(bound // 2, n)
    else:
        # One coarse step brings the bound down to n*D, after which the
        # halving regime applies all the way down.
        budget = (n * floor.numerator) // floor.denominator
    approx = approximate_energies(graph, bound, budget)
    transform = apply_potential(graph, approx.energies)
    if recorder is not None:
        recorder.phases.append(
            PhaseRecord(
                nodes=n,
                bound=bound,
                error_budget=budget,
                granularity=approx.granularity,
                updates=approx.viter.total_updates,
                steps=approx.viter.steps,
                edge_work=approx.viter.edge_work,
                dropped=n - len(transform.kept),
            )
        )
        if depth == 0:
            recorder.first_drop = frozenset(range(n)) - frozenset(transform.kept)
    residual = _solve_level(transform.graph, budget, floor, recorder, depth + 1)
    return transform.lift(residual, n)


def solve(graph: GameGraph, bound: int | None = None) -> SolveReport:
    """Compute verified minimal energies without knowing the penalty.

    Tries penalty guesses D_k = floor(M/2^k)/n for k = 1, 2, ...; each run is
    accepted only if it passes the fixed-point check and its infinite set
    matches the nodes dropped by the first approximation phase.  Once the
    guess would drop below 1, falls back to plain value iteration over the
    full value range, which needs no penalty assumption.
    """
    started = time.perf_counter()
    n = graph.n
    cap = graph.default_bound() if bound is None else bound
    if bound is not None and bound < 0:
        raise ValueError("the energy bound must be non-negative")

    guesses: list[GuessRecord] = []
    total_updates = 0
    total_steps = 0
    total_edge_work = 0

    def report(energies: EnergyFn, fallback_used: bool, fallback_updates: int) -> SolveReport:
        return SolveReport(
            energies=energies,
            bound=cap,
            guesses=tuple(guesses),
            fallback_used=fallback_used,
            fallback_updates=fallback_updates,
            wall_ms=(time.perf_counter() - started) * 1000.0,
            total_updates=total_updates,
            total_steps=total_steps,
            total_edge_work=total_edge_work,
        )

    k = 1
    while n > 0 and cap >> k >= n:
        budget = cap >> k
        guess = Fraction(budget, n)
        recorder = _RunRecorder()
        contract_error: str | None = None
        energies: EnergyFn | None = None
        try:
            energies = minimal_energy_with_penalty_bound(graph, cap, guess, recorder)
        except PotentialContractError as exc:
            contract_error = str(exc)
        total_updates += sum(p.updates for p in recorder.phases)
        total_steps += sum(p.steps for p in recorder.phases)
        total_edge_work += sum(p.edge_work for p in recorder.phases)
        verified = energies is not None and verify_minimal(graph, energies)
        if energies is not None and recorder.first_drop is not None:
            infinite = frozenset(v for v in range(n) if energies[v] == INF)
            consistent = infinite == recorder.first_drop
        else:
            consistent = energies is not None
        record = GuessRecord(
            error_budget=budget,
            penalty_guess=guess,
            verified=verified,
            infinite_consistent=consistent,
            contract_error=contract_error,
            phases=tuple(recorder.phases),
        )
        guesses.append(record)
        if record.accepted:
            assert energies is not None
            return report(energies, fallback_used=False, fallback_updates=0)
        k += 1

    result = solve_with_list(graph, full_list(cap))
    total_updates += result.total_updates
    total_steps += result.steps
    total_edge_work += result.edge_work
    assert verify_minimal(graph, result.energies), "full-range value iteration is exact"
    return report(result.energies, fallback_used=True, fallback_updates=result.total_updates)
