"""Combinatorial peeling of a graph into (d+2)-vertex atoms.

The peeling repeatedly takes a minimum-degree vertex ``a``: with degree <= d
its edges are dropped, with degree d+1 it forms an atom with its neighbours,
and with larger degree one apex edge at a time is traded for the missing
edges among d+1 chosen neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .core import (Atom, DecompositionTrace, Edge, Extraction, Graph, Removal,
                   degree, edge, replay)


class UnsupportedDimensionError(ValueError):
    pass


def smallest_vertex(candidates: Sequence[int], graph: Graph) -> int:
    return min(candidates)


def smallest_neighbors(apex: int, neighbors: Sequence[int], graph: Graph, d: int) -> list[int]:
    return sorted(neighbors)[: d + 1]


@dataclass(frozen=True)
class SelectionPolicy:
    """Deterministic tie-breaking rules for the peeling.

    ``first_vertex`` forces the first chosen vertex (it must have minimum
    degree); afterwards ``vertex_tie_break`` picks among the minimum-degree
    vertices and ``neighbor_choice`` picks the d+1 neighbours used when the
    apex degree exceeds d+1.
    The first returned neighbour is the one whose apex edge is removed.
    """

    vertex_tie_break: Callable[[Sequence[int], Graph], int] = smallest_vertex
    neighbor_choice: Callable[[int, Sequence[int], Graph, int], list[int]] = smallest_neighbors
    first_vertex: int | None = None


@dataclass(frozen=True)
class NecessityVerdict:
    holds: bool
    witness: Edge | None = None


def combinatorial_decompose(g: Graph, d: int,
                            policy: SelectionPolicy | None = None) -> DecompositionTrace:
    if d < 2:
        raise UnsupportedDimensionError(f"dimension {d} not supported (need d >= 2)")
    policy = policy or SelectionPolicy()
    steps = []
    current = g
    first = True
    while current.edges:
        # isolated vertices never regain edges, so they are excluded
        degs = {v: degree(current, v) for v in current.vertices}
        live = {v: k for v, k in degs.items() if k > 0}
        low = min(live.values())
        candidates = sorted(v for v, k in live.items() if k == low)
        if first and policy.first_vertex is not None:
            a = policy.first_vertex
            if a not in candidates:
                raise ValueError(f"vertex {a} does not have minimum degree {low}")
        else:
            a = policy.vertex_tie_break(candidates, current)
        first = False

        if low <= d:
            removed = tuple(current.incident(a))
            steps.append(Removal(a, removed))
            current = current.with_edges(removed=removed)
            continue

        while degree(current, a) >= d + 2:
            chosen = list(policy.neighbor_choice(a, current.neighbors(a), current, d))
            if len(set(chosen)) != d + 1 or not all(current.has_edge(a, b) for b in chosen):
                raise ValueError("neighbor_choice must return d+1 distinct neighbours")
            dropped = (edge(a, chosen[0]),)
            inserted = _missing_pairs(current, chosen)
            steps.append(Extraction(Atom((a, *chosen), a), dropped, inserted))
            current = current.with_edges(removed=dropped, added=inserted)

        nbrs = current.neighbors(a)
        dropped = tuple(edge(a, b) for b in nbrs)
        inserted = _missing_pairs(current, nbrs)
        steps.append(Extraction(Atom((a, *nbrs), a), dropped, inserted))
        current = current.with_edges(removed=dropped, added=inserted)
    return DecompositionTrace(d, g, tuple(steps))


def _missing_pairs(g: Graph, vertices: Sequence[int]) -> tuple[Edge, ...]:
    return tuple(e for e in combinations(sorted(vertices), 2) if e not in g.edges)


def necessary_condition(trace: DecompositionTrace) -> NecessityVerdict:
    """Every input edge must have both endpoints inside some atom."""
    replay(trace)
    atoms = trace.atoms
    for e in trace.input_graph.sorted_edges():
        if not any(atom.contains(e) for atom in atoms):
            return NecessityVerdict(False, e)
    return NecessityVerdict(True)


def is_edge_inserting(trace: DecompositionTrace) -> bool:
    replay(trace)
    extractions = trace.extractions
    return all(step.inserted_edges for step in extractions[:-1])


def first_vertex_candidates(g: Graph) -> list[int]:
    """Vertices that may legally open a peeling of ``g``."""
    live = {v: degree(g, v) for v in g.vertices if degree(g, v) > 0}
    if not live:
        return []
    low = min(live.values())
    return sorted(v for v, k in live.items() if k == low)


def search_edge_inserting(g: Graph, d: int) -> DecompositionTrace | None:
    """Try every legal first vertex; return the first edge-inserting trace
    that also passes the necessary condition."""
    for v in [None, *first_vertex_candidates(g)]:
        trace = combinatorial_decompose(g, d, SelectionPolicy(first_vertex=v))
        if is_edge_inserting(trace) and necessary_condition(trace).holds:
            return trace
    return None
