"""Abstract graphs, atoms and decomposition traces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Union

Edge = tuple[int, int]


class MalformedTraceError(ValueError):
    pass


def edge(i: int, j: int) -> Edge:
    """Canonical (min, max) form of the unordered pair {i, j}."""
    if i == j:
        raise ValueError(f"self-loop at vertex {i}")
    return (i, j) if i < j else (j, i)


def edge_name(e: Edge) -> str:
    return f"{e[0]}{e[1]}" if max(e) < 10 else f"{e[0]}-{e[1]}"


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        for v in verts:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"vertex identifiers must be integers, got {v!r}")
        canon = set()
        for e in self.edges:
            i, j = e
            c = edge(i, j)
            if i not in verts or j not in verts:
                raise ValueError(f"edge {c} has an endpoint outside the vertex set")
            canon.add(c)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]],
                   vertices: Iterable[int] | None = None) -> "Graph":
        edges = list(edges)
        seen = set()
        for i, j in edges:
            e = edge(i, j)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if vertices is None:
            vertices = {v for e in seen for v in e}
        return cls(tuple(vertices), frozenset(seen))

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> "Graph":
        vs = sorted(vertices)
        return cls(tuple(vs), frozenset(combinations(vs, 2)))

    def has_edge(self, i: int, j: int) -> bool:
        return edge(i, j) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        if v not in self.vertices:
            raise KeyError(f"unknown vertex {v}")
        return sorted(j if i == v else i for i, j in self.edges if v in (i, j))

    def incident(self, v: int) -> list[Edge]:
        return sorted(e for e in self.edges if v in e)

    def is_regular(self, k: int) -> bool:
        return all(degree(self, v) == k for v in self.vertices)

    def with_edges(self, removed: Iterable[Edge] = (), added: Iterable[Edge] = ()) -> "Graph":
        added = {edge(*e) for e in added}
        verts = set(self.vertices).union(*added) if added else self.vertices
        return Graph(tuple(sorted(verts)), (self.edges - {edge(*e) for e in removed}) | added)

    def to_json(self, d: int | None = None) -> dict:
        out = {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}
        if d is not None:
            out = {"d": d, **out}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges([tuple(e) for e in data["edges"]], data.get("vertices"))


def degree(g: Graph, v: int) -> int:
    if v not in g.vertices:
        raise KeyError(f"unknown vertex {v}")
    return sum(1 for e in g.edges if v in e)


@dataclass(frozen=True)
class Atom:
    """d+2 vertices extracted together; ``apex`` is the vertex the step peeled."""

    members: tuple[int, ...]
    apex: int

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if self.apex not in self.members:
            raise ValueError("atom apex must be a member")

    @property
    def others(self) -> tuple[int, ...]:
        return tuple(v for v in self.members if v != self.apex)

    def edges(self) -> list[Edge]:
        return list(combinations(self.members, 2))

    def contains(self, e: Edge) -> bool:
        return e[0] in self.members and e[1] in self.members


@dataclass(frozen=True)
class Removal:
    """A vertex of degree <= d loses its incident edges."""

    vertex: int
    removed_edges: tuple[Edge, ...]


@dataclass(frozen=True)
class Extraction:
    """An atom is recorded, apex edges removed, missing edges inserted."""

    atom: Atom
    removed_edges: tuple[Edge, ...]
    inserted_edges: tuple[Edge, ...]


Step = Union[Removal, Extraction]


@dataclass(frozen=True)
class DecompositionTrace:
    dimension: int
    input_graph: Graph
    steps: tuple[Step, ...] = field(default_factory=tuple)

    @property
    def extractions(self) -> list[Extraction]:
        return [s for s in self.steps if isinstance(s, Extraction)]

    @property
    def atoms(self) -> list[Atom]:
        return [s.atom for s in self.extractions]

    def to_json(self) -> dict:
        steps = []
        for s in self.steps:
            if isinstance(s, Removal):
                steps.append({"type": "removal", "vertex": s.vertex,
                              "removed": [list(e) for e in s.removed_edges]})
            else:
                steps.append({"type": "extraction", "atom": list(s.atom.members),
                              "apex": s.atom.apex,
                              "removed": [list(e) for e in s.removed_edges],
                              "inserted": [list(e) for e in s.inserted_edges]})
        return {"d": self.dimension, "graph": self.input_graph.to_json(), "steps": steps}

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionTrace":
        steps: list[Step] = []
        for s in data["steps"]:
            removed = tuple(edge(*e) for e in s["removed"])
            if s["type"] == "removal":
                steps.append(Removal(s["vertex"], removed))
            elif s["type"] == "extraction":
                steps.append(Extraction(Atom(tuple(s["atom"]), s["apex"]), removed,
                                        tuple(edge(*e) for e in s["inserted"])))
            else:
                raise MalformedTraceError(f"unknown step type {s['type']!r}")
        return cls(data["d"], Graph.from_json(data["graph"]), tuple(steps))


def replay(trace: DecompositionTrace) -> list[Graph]:
    """Re-run the recorded steps, checking each against the current graph.

    Returns the input graph followed by the graph after every step.
    """
    d = trace.dimension
    g = trace.input_graph
    history = [g]
    for k, step in enumerate(trace.steps):
        where = f"step {k}"
        current = g.edges
        if isinstance(step, Removal):
            v = step.vertex
            if v not in g.vertices:
                raise MalformedTraceError(f"{where}: unknown vertex {v}")
            if set(step.removed_edges) != set(g.incident(v)):
                raise MalformedTraceError(f"{where}: removal must delete exactly the edges at {v}")
            if len(step.removed_edges) > d:
                raise MalformedTraceError(f"{where}: vertex {v} has degree above {d}")
            g = g.with_edges(removed=step.removed_edges)
        elif isinstance(step, Extraction):
            atom = step.atom
            if len(atom.members) != d + 2:
                raise MalformedTraceError(f"{where}: atom {atom.members} does not have {d + 2} vertices")
            if any(m not in g.vertices for m in atom.members):
                raise MalformedTraceError(f"{where}: atom has unknown vertices")
            removed = set(step.removed_edges)
            if not removed <= current:
                raise MalformedTraceError(f"{where}: removing absent edges {sorted(removed - current)}")
            if any(atom.apex not in e or not atom.contains(e) for e in removed):
                raise MalformedTraceError(f"{where}: removed edges must join the apex to atom members")
            if len(removed) not in (1, d + 1):
                raise MalformedTraceError(f"{where}: an extraction removes 1 or d+1 apex edges")
            if len(removed) == d + 1 and degree(g, atom.apex) != d + 1:
                raise MalformedTraceError(f"{where}: final extraction at apex of degree {degree(g, atom.apex)}")
            if len(removed) == 1 and degree(g, atom.apex) < d + 2:
                raise MalformedTraceError(f"{where}: single-edge extraction needs apex degree >= {d + 2}")
            if any(not g.has_edge(atom.apex, m) for m in atom.others):
                raise MalformedTraceError(f"{where}: atom members must be neighbours of the apex")
            inserted = set(step.inserted_edges)
            if inserted & current:
                raise MalformedTraceError(f"{where}: inserting present edges {sorted(inserted & current)}")
            if any(atom.apex in e or not atom.contains(e) for e in inserted):
                raise MalformedTraceError(f"{where}: inserted edges must join non-apex atom members")
            missing = {e for e in combinations(atom.others, 2) if e not in current}
            if inserted != missing:
                raise MalformedTraceError(f"{where}: inserted edges must be all missing member pairs")
            g = g.with_edges(removed=removed, added=inserted)
        else:
            raise MalformedTraceError(f"{where}: unknown step {step!r}")
        history.append(g)
    if g.edges:
        raise MalformedTraceError(f"trace ends with edges left: {sorted(g.edges)}")
    return history
