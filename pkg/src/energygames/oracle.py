"""Exhaustive ground truth for small games.

Everything here enumerates positional strategies outright, so it is only
usable on instances with a handful of nodes; the point is to have an
independent, obviously-correct reference for the real solvers.  Strategies
select out-edge indices (not successor nodes) so that parallel edges are
handled exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import ALICE, BOB, INF, Energy, EnergyFn, GameGraph

Penalty = Fraction | float  # the only float is INF


class BudgetExceeded(Exception):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OracleBudget:
    max_pairs: int = 1_000_000
    max_nodes: int = 10


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class StrategyPair:
    """A positional strategy pair: a chosen out-edge index per owned node.

    Edges rather than successors so that parallel edges stay distinguishable;
    :meth:`from_successors` covers the common simple-graph case.
    """

    sigma: dict[int, int]  # Alice node -> edge index
    tau: dict[int, int]  # Bob node -> edge index

    @classmethod
    def from_successors(
        cls, graph: GameGraph, sigma: dict[int, int], tau: dict[int, int]
    ) -> "StrategyPair":
        """Build a pair from successor choices (first matching edge wins)."""

        def edge_of(node: int, successor: int) -> int:
            for i in graph.out_edges[node]:
                if graph.edges[i][1] == successor:
                    return i
            raise ValueError(f"no edge from {node} to {successor}")

        return cls(
            sigma={u: edge_of(u, v) for u, v in sigma.items()},
            tau={u: edge_of(u, v) for u, v in tau.items()},
        )

    def edge_choice(self, graph: GameGraph) -> tuple[int, ...]:
        choice = [-1] * graph.n
        for node, edge in itertools.chain(self.sigma.items(), self.tau.items()):
            src = graph.edges[edge][0]
            if src != node:
                raise ValueError(f"edge {edge} does not leave node {node}")
            choice[node] = edge
        if any(c < 0 for c in choice):
            raise ValueError("strategy pair does not cover every node")
        return tuple(choice)


def pair_count(graph: GameGraph) -> int:
    count = 1
    for node in range(graph.n):
        count *= graph.out_degree(node)
    return count


def _check_pair_budget(graph: GameGraph, budget: OracleBudget) -> None:
    if pair_count(graph) > budget.max_pairs:
        raise BudgetExceeded(
            f"{pair_count(graph)} strategy pairs exceed the budget {budget.max_pairs}"
        )


def eval_pair(graph: GameGraph, pair: StrategyPair, start: int) -> Energy:
    """Minimal energy at ``start`` when both players follow ``pair``.

    Walks the unique path until a node repeats.  If the reached cycle has
    negative total weight the energy is infinite; otherwise it is
    max(0, -min prefix sum) over the simple prefixes of the walk.
    """
    choice = pair.edge_choice(graph)
    return _walk_value(graph, choice, start)


def _walk_value(graph: GameGraph, choice: tuple[int, ...], start: int) -> Energy:
    first_seen = {start: 0}
    sums: list[int] = [0]
    cur = start
    while True:
        _, dst, weight = graph.edges[choice[cur]]
        sums.append(sums[-1] + weight)
        cur = dst
        if cur in first_seen:
            cycle_weight = sums[-1] - sums[first_seen[cur]]
            if cycle_weight < 0:
                return INF
            simple = sums[1:-1]  # the closing step revisits a node
            return max(0, -min(simple, default=0))
        first_seen[cur] = len(sums) - 1


def _eval_all(graph: GameGraph, choice: tuple[int, ...]) -> list[Energy]:
    """Energies at every node under a fixed edge choice, in O(n) overall.

    Uses the out-degree-one recurrence e(u) = max(0, e(v) - w(u,v)): cycle
    values are seeded by a direct prefix-sum walk, then pulled back along the
    lasso stems.
    """
    values: list[Energy | None] = [None] * graph.n
    for s in range(graph.n):
        if values[s] is not None:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        cur = s
        while values[cur] is None and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            cur = graph.edges[choice[cur]][1]
        if values[cur] is None:
            # Found a fresh cycle: path[pos[cur]:] closes on cur.
            values[cur] = _walk_value(graph, choice, cur)
        # Pull values back along the walked path.
        for node in reversed(path):
            if values[node] is not None:
                continue
            _, dst, weight = graph.edges[choice[node]]
            succ = values[dst]
            values[node] = INF if succ == INF else max(0, succ - weight)
    return values  # type: ignore[return-value]


def _reached_cycles(
    graph: GameGraph, choice: tuple[int, ...]
) -> list[tuple[int, int]]:
    """Per node, the (total weight, length) of the unique reachable cycle."""
    info: list[tuple[int, int] | None] = [None] * graph.n
    for s in range(graph.n):
        if info[s] is not None:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        sums = [0]
        cur = s
        while info[cur] is None and cur not in pos:
            pos[cur] = len(path)
            path.append(cur)
            sums.append(sums[-1] + graph.edges[choice[cur]][2])
            cur = graph.edges[choice[cur]][1]
        if info[cur] is None:
            j = pos[cur]
            info[cur] = (sums[-1] - sums[j], len(path) - j)
        for node in path:
            info[node] = info[cur]
    return info  # type: ignore[return-value]


def _choice_space(graph: GameGraph, owner: str) -> tuple[list[int], list[tuple[int, ...]]]:
    nodes = [v for v in range(graph.n) if graph.owners[v] == owner]
    return nodes, [graph.out_edges[v] for v in nodes]


def brute_force_energies(
    graph: GameGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> EnergyFn:
    """Minimal energies by full min-max enumeration over strategy pairs."""
    _check_pair_budget(graph, budget)
    alice_nodes, alice_opts = _choice_space(graph, ALICE)
    bob_nodes, bob_opts = _choice_space(graph, BOB)
    base = [-1] * graph.n
    best: list[Energy] | None = None
    for sigma in itertools.product(*alice_opts):
        for node, edge in zip(alice_nodes, sigma):
            base[node] = edge
        worst: list[Energy] = [0] * graph.n
        for tau in itertools.product(*bob_opts):
            for node, edge in zip(bob_nodes, tau):
                base[node] = edge
            vals = _eval_all(graph, tuple(base))
            worst = [max(a, b) for a, b in zip(worst, vals)]
        if best is None:
            best = worst
        else:
            best = [min(a, b) for a, b in zip(best, worst)]
    assert best is not None, "graphs have at least one strategy pair"
    return tuple(best)


@dataclass(frozen=True)
class PenaltyReport:
    """Per-node penalties under both readings of strategy optimality.

    ``per_node`` takes Bob's strategy to be optimal at the probed node only;
    ``per_node_global`` restricts to strategies optimal at every node
    simultaneously, which can only lower the value.  The graph penalty is the
    minimum of ``per_node``.
    """

    per_node: tuple[Penalty, ...]
    per_node_global: tuple[Penalty, ...]

    @property
    def graph_penalty(self) -> Penalty:
        return min(self.per_node)


def brute_force_penalty(
    graph: GameGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> PenaltyReport:
    """Exact per-node penalties by enumerating Bob's strategies.

    For a fixed Bob strategy tau and start s, the defended bound D(tau, s) is
    the minimum of -total/length over the negative cycles Alice can steer s
    into (infinite when she cannot reach any).  The penalty at s maximizes
    D(tau, s) over the strategies tau that are optimal at s.
    """
    _check_pair_budget(graph, budget)
    alice_nodes, alice_opts = _choice_space(graph, ALICE)
    bob_nodes, bob_opts = _choice_space(graph, BOB)
    n = graph.n
    base = [-1] * n

    # One pass per tau: Alice's best responses and the defended bounds.
    tau_value: list[list[Energy]] = []
    tau_bound: list[list[Penalty]] = []
    for tau in itertools.product(*bob_opts):
        for node, edge in zip(bob_nodes, tau):
            base[node] = edge
        value: list[Energy] = [INF] * n
        bound: list[Penalty] = [INF] * n
        for sigma in itertools.product(*alice_opts):
            for node, edge in zip(alice_nodes, sigma):
                base[node] = edge
            vector = tuple(base)
            vals = _eval_all(graph, vector)
            cycles = _reached_cycles(graph, vector)
            for s in range(n):
                value[s] = min(value[s], vals[s])
                total, length = cycles[s]
                if total < 0:
                    bound[s] = min(bound[s], Fraction(-total, length))
        tau_value.append(value)
        tau_bound.append(bound)

    minimal: list[Energy] = [max(vals[s] for vals in tau_value) for s in range(n)]
    per_node: list[Penalty] = [Fraction(0)] * n
    per_node_global: list[Penalty] = [Fraction(0)] * n
    for value, bound in zip(tau_value, tau_bound):
        optimal = [value[s] == minimal[s] for s in range(n)]
        for s in range(n):
            if optimal[s]:
                per_node[s] = max(per_node[s], bound[s])
        if all(optimal):
            for s in range(n):
                per_node_global[s] = max(per_node_global[s], bound[s])
    return PenaltyReport(tuple(per_node), tuple(per_node_global))


def find_ergodic_partition(
    graph: GameGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Search all non-trivial node bipartitions for an ergodic one.

    A partition (S_A, S_B) is ergodic when Alice can keep play inside S_A and
    Bob cannot leave it, and symmetrically for S_B.  Returns the first match
    in ascending bitmask order, or None when the graph is ergodic.
    """
    n = graph.n
    if n > budget.max_nodes:
        raise BudgetExceeded(f"{n} nodes exceed the partition budget {budget.max_nodes}")
    succ_mask = [0] * n
    for src, dst, _ in graph.edges:
        succ_mask[src] |= 1 << dst
    alice = [graph.is_alice(v) for v in range(n)]
    full = (1 << n) - 1
    for mask in range(1, full):
        comp = full ^ mask
        ok = True
        for v in range(n):
            if (mask >> v) & 1:
                if alice[v]:
                    if not succ_mask[v] & mask:  # Alice must be able to stay
                        ok = False
                        break
                elif succ_mask[v] & comp:  # Bob must be unable to leave
                    ok = False
                    break
            elif alice[v]:
                if succ_mask[v] & mask:  # Alice must be unable to escape S_B
                    ok = False
                    break
            elif not succ_mask[v] & comp:  # Bob must be able to stay
                ok = False
                break
        if ok:
            side_a = frozenset(v for v in range(n) if (mask >> v) & 1)
            side_b = frozenset(v for v in range(n) if not (mask >> v) & 1)
            return side_a, side_b
    return None
