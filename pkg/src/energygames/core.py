"""Game-graph model and fixed-point primitives for two-player energy games.

An energy game is played on a finite directed graph whose nodes are owned by
Alice or Bob and whose edges carry integer weights.  Alice wins from a node if
some initial energy lets her keep the running sum of edge weights non-negative
forever; the minimal such energy per node is the quantity every solver in this
package computes.

This module holds the immutable graph representation, structural validation,
self-loop normalization, the local fixed-point checks used to verify candidate
energy functions, and the potential transformation that re-weights a game by a
lower bound on its minimal energies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

ALICE = "A"
BOB = "B"

INF = math.inf

# Finite energies and weights are ints; the only float ever used is INF.
Energy = int | float
EnergyFn = tuple[Energy, ...]
Edge = tuple[int, int, int]  # (source, target, weight)

INT64_MAX = 2**63 - 1


class PotentialContractError(ValueError):
    """The energy function handed to apply_potential cannot have come from a
    sound approximation of the game it is applied to."""


def is_finite(value: Energy) -> bool:
    return value != INF


def opponent(owner: str) -> str:
    return BOB if owner == ALICE else ALICE


@dataclass(frozen=True)
class GameGraph:
    """A weighted game graph.

    Nodes are identified by their index in ``owners``.  Parallel edges are
    permitted (reductions can produce them); self-loops are tolerated by the
    representation but rejected by :func:`validate` until normalized away.
    """

    owners: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        n = len(self.owners)
        for owner in self.owners:
            if owner not in (ALICE, BOB):
                raise ValueError(f"unknown owner {owner!r}")
        for src, dst, weight in self.edges:
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError(f"edge ({src},{dst}) endpoint out of range")
            if not isinstance(weight, int):
                raise ValueError(f"edge ({src},{dst}) weight {weight!r} is not an integer")

    @property
    def n(self) -> int:
        return len(self.owners)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_weight(self) -> int:
        """W, the maximum absolute edge weight (0 for an edgeless graph)."""
        return max((abs(w) for _, _, w in self.edges), default=0)

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices grouped by source node, in edge-list order."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, (src, _, _) in enumerate(self.edges):
            out[src].append(i)
        return tuple(tuple(ids) for ids in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (_, dst, _) in enumerate(self.edges):
            inc[dst].append(i)
        return tuple(tuple(ids) for ids in inc)

    def out_degree(self, node: int) -> int:
        return len(self.out_edges[node])

    def is_alice(self, node: int) -> bool:
        return self.owners[node] == ALICE

    def default_bound(self) -> int:
        """The universal upper bound n*W on finite minimal energies."""
        return self.n * self.max_weight


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def validate(graph: GameGraph) -> ValidationReport:
    """Check the game-graph invariants, reporting every violation found.

    A graph is playable when every node has at least one outgoing edge, no
    self-loops remain (see :func:`eliminate_self_loops`), and weights leave
    enough signed 64-bit headroom for the n^2*W values reductions can create.
    """
    problems: list[str] = []
    for node in range(graph.n):
        if graph.out_degree(node) == 0:
            problems.append(f"node {node}: sink node (out-degree 0)")
    for i, (src, dst, _) in enumerate(graph.edges):
        if src == dst:
            problems.append(f"edge {i} ({src}->{dst}): self-loop (normalize first)")
    headroom = graph.n * graph.n * graph.max_weight
    if headroom > INT64_MAX:
        problems.append(
            f"weights: n^2*W = {headroom} exceeds the 64-bit headroom {INT64_MAX}"
        )
    return ValidationReport(tuple(problems))


def eliminate_self_loops(graph: GameGraph) -> GameGraph:
    """Replace each self-loop (v,v) of weight w by a relay node v' and the two
    edges (v,v') and (v',v), both of weight w.

    Minimal energies at the original nodes and the average weight of every
    cycle are unchanged.  The relay belongs to the opposite player of v; the
    choice is immaterial because the relay has out-degree one, and fixing it
    keeps the construction deterministic.
    """
    if not any(src == dst for src, dst, _ in graph.edges):
        return graph
    owners = list(graph.owners)
    edges: list[Edge] = []
    appended: list[Edge] = []
    for src, dst, weight in graph.edges:
        if src != dst:
            edges.append((src, dst, weight))
            continue
        relay = len(owners)
        owners.append(opponent(graph.owners[src]))
        edges.append((src, relay, weight))
        appended.append((relay, src, weight))
    return GameGraph(tuple(owners), tuple(edges + appended))


def _targets(graph: GameGraph, e: EnergyFn, node: int):
    for i in graph.out_edges[node]:
        _, dst, weight = graph.edges[i]
        yield max(e[dst] - weight, 0)


def verify_minimal(graph: GameGraph, e: EnergyFn) -> bool:
    """Check the local fixed-point equations of the minimal energy function.

    True iff for every node u, e(u) equals min (Alice) or max (Bob) over the
    out-edges (u,v) of max(e(v) - w(u,v), 0), with infinity absorbing the
    subtraction.  The minimal energy function always satisfies the equations;
    so do some inflated functions (the all-infinite function among them), so a
    passing check alone does not certify minimality.
    """
    for node in range(graph.n):
        pick = min if graph.is_alice(node) else max
        if e[node] != pick(_targets(graph, e, node)):
            return False
    return True


def check_progress_conditions(graph: GameGraph, e: EnergyFn) -> bool:
    """Check the two one-sided progress conditions of a sufficient energy
    function: every Alice node has some out-edge with e(u) + w >= e(v), and
    every Bob node satisfies that inequality on all of its out-edges.

    The all-infinite function satisfies both trivially.
    """
    for node in range(graph.n):
        ok_edges = (
            e[node] + weight >= e[dst]
            for _, dst, weight in (graph.edges[i] for i in graph.out_edges[node])
        )
        if graph.is_alice(node):
            if not any(ok_edges):
                return False
        elif not all(ok_edges):
            return False
    return True


@dataclass(frozen=True)
class PotentialTransform:
    """Result of re-weighting a game by a potential function.

    ``graph`` is the subgraph induced by the finite-potential nodes with
    weights w'(u,v) = w(u,v) + e(u) - e(v); ``kept`` maps each new node index
    to its original index, and ``offsets`` records the potential at each kept
    node so energies of the transformed game can be lifted back.
    """

    graph: GameGraph
    kept: tuple[int, ...]
    offsets: tuple[int, ...]

    def lift(self, sub_energies: EnergyFn, original_n: int) -> EnergyFn:
        """Map energies of the transformed game back to the original node set,
        adding the recorded offsets; dropped nodes are infinite."""
        total: list[Energy] = [INF] * original_n
        for new_index, old_index in enumerate(self.kept):
            value = sub_energies[new_index]
            total[old_index] = value if value == INF else value + self.offsets[new_index]
        return tuple(total)


def apply_potential(graph: GameGraph, e: EnergyFn) -> PotentialTransform:
    """Re-weight the game by the potential e and drop the infinite-e nodes.

    Requires e(v) <= e*(v) pointwise and the progress conditions on the game e
    was computed from; under that contract every cycle keeps its total weight,
    minimal energies shift down by exactly e, and every kept node retains an
    outgoing edge.  Edges from an Alice node into a dropped node are removed.

    Raises PotentialContractError when a finite-e Bob node has an edge into a
    dropped node, or a finite-e Alice node has no finite-e successor: neither
    can happen for an energy function produced by a sound approximation.
    """
    kept = [v for v in range(graph.n) if e[v] != INF]
    new_index = {old: new for new, old in enumerate(kept)}
    edges: list[Edge] = []
    for src, dst, weight in graph.edges:
        if e[src] == INF:
            continue
        if e[dst] == INF:
            if not graph.is_alice(src):
                raise PotentialContractError(
                    f"Bob node {src} has finite energy but successor {dst} does not"
                )
            continue
        edges.append((new_index[src], new_index[dst], weight + e[src] - e[dst]))
    sub = GameGraph(tuple(graph.owners[v] for v in kept), tuple(edges))
    for new, old in enumerate(kept):
        if graph.is_alice(old) and sub.out_degree(new) == 0:
            raise PotentialContractError(
                f"Alice node {old} has finite energy but no finite-energy successor"
            )
    return PotentialTransform(sub, tuple(kept), tuple(e[v] for v in kept))
