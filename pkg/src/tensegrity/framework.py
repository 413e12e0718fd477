"""Frameworks in R^d, their rigidity matrices and self-stresses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, count
from typing import Mapping, Sequence

from .core import Edge, Graph, edge
from .linalg import RatMatrix, determinant, format_rational, left_nullspace, to_rational

Point = tuple[Fraction, ...]


class DegenerateConfigurationError(ValueError):
    pass


class StressMismatchError(ValueError):
    pass


class InconsistentStressError(ValueError):
    pass


@dataclass(frozen=True)
class Framework:
    dimension: int
    points: Mapping[int, Point]
    graph: Graph

    def __post_init__(self):
        pts = {}
        for v, p in self.points.items():
            p = tuple(to_rational(x) for x in p)
            if len(p) != self.dimension:
                raise ValueError(f"point {v} has {len(p)} coordinates, expected {self.dimension}")
            pts[int(v)] = p
        missing = [v for v in self.graph.vertices if v not in pts]
        if missing:
            raise ValueError(f"no coordinates for vertices {missing}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_edges(cls, d: int, points: Mapping[int, Sequence], edges) -> "Framework":
        return cls(d, points, Graph.from_edges(edges, points.keys()))

    def point(self, v: int) -> Point:
        return self.points[v]

    def to_json(self) -> dict:
        out = self.graph.to_json(self.dimension)
        out["points"] = {str(v): [format_rational(x) for x in self.points[v]]
                         for v in sorted(self.points)}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Framework":
        g = Graph.from_json(data)
        pts = {int(k): tuple(to_rational(x) for x in v) for k, v in data["points"].items()}
        if "vertices" not in data:
            g = Graph(tuple(sorted(set(g.vertices) | set(pts))), g.edges)
        return cls(data["d"], pts, g)


@dataclass(frozen=True)
class Stress:
    tensions: Mapping[Edge, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "tensions",
                           {edge(*e): to_rational(w) for e, w in self.tensions.items()})

    def __getitem__(self, e: Edge) -> Fraction:
        return self.tensions[edge(*e)]

    def edges(self) -> list[Edge]:
        return sorted(self.tensions)

    def vector(self) -> list[Fraction]:
        return [self.tensions[e] for e in self.edges()]

    def scaled(self, c) -> "Stress":
        c = to_rational(c)
        return Stress({e: c * w for e, w in self.tensions.items()})

    def support(self) -> list[Edge]:
        return [e for e in self.edges() if self.tensions[e] != 0]

    def is_null(self) -> bool:
        return not self.support()

    def nowhere_zero(self) -> bool:
        return all(w != 0 for w in self.tensions.values())

    def normalized(self, e: Edge) -> "Stress":
        """Rescale so the tension on ``e`` equals 1."""
        return self.scaled(1 / self[e])

    def to_json(self) -> dict:
        return {"edges": [[i, j, format_rational(self.tensions[(i, j)])] for i, j in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Stress":
        return cls({(int(i), int(j)): to_rational(w) for i, j, w in data["edges"]})

    @classmethod
    def null(cls, edges) -> "Stress":
        return cls({e: 0 for e in edges})


@dataclass(frozen=True)
class Tensegrity:
    framework: Framework
    cables: frozenset[Edge]
    struts: frozenset[Edge]
    removed: frozenset[Edge]

    def to_json(self) -> dict:
        return {"cables": [list(e) for e in sorted(self.cables)],
                "struts": [list(e) for e in sorted(self.struts)],
                "removed": [list(e) for e in sorted(self.removed)]}


@dataclass(frozen=True)
class AtomicDecomposition:
    """Atoms with scales; the scaled atom stresses sum to the decomposed stress."""

    dimension: int
    points: Mapping[int, Point]
    atoms: tuple[tuple[tuple[int, ...], Fraction], ...]

    def total_stress(self) -> dict[Edge, Fraction]:
        out: dict[Edge, Fraction] = {}
        for members, scale in self.atoms:
            w = atom_stress({v: self.points[v] for v in members})
            for e, t in w.tensions.items():
                out[e] = out.get(e, 0) + scale * t
        return out

    def to_json(self) -> dict:
        return {"atoms": [{"members": list(m), "scale": format_rational(s)} for m, s in self.atoms]}


# ------------------------------------------------------------------ geometry

def homogeneous_matrix(points: Sequence[Sequence]) -> RatMatrix:
    return RatMatrix([[1, *p] for p in points])


def affinely_independent(points: Sequence[Sequence]) -> bool:
    """True if the d+1 given points span R^d affinely."""
    return determinant(homogeneous_matrix(points)) != 0


def check_general_position(f: Framework) -> bool:
    """No d+1 of the framework's points lie on a common hyperplane."""
    missing = [v for v in f.graph.vertices if v not in f.points]
    if missing:
        raise ValueError(f"no coordinates for vertices {missing}")
    vs = sorted(f.points)
    for subset in combinations(vs, f.dimension + 1):
        if not affinely_independent([f.points[v] for v in subset]):
            return False
    return True


def rigidity_matrix(f: Framework) -> RatMatrix:
    """Row per edge ij (i<j, lexicographic); p_i - p_j in i's block, p_j - p_i in j's."""
    d = f.dimension
    verts = list(f.graph.vertices)
    col = {v: k * d for k, v in enumerate(verts)}
    rows = []
    for i, j in f.graph.sorted_edges():
        row = [Fraction(0)] * (len(verts) * d)
        pi, pj = f.points[i], f.points[j]
        for k in range(d):
            row[col[i] + k] = pi[k] - pj[k]
            row[col[j] + k] = pj[k] - pi[k]
        rows.append(row)
    return RatMatrix(rows, cols=len(verts) * d)


def is_equilibrium(f: Framework, w: Stress) -> bool:
    if set(w.tensions) != set(f.graph.edges):
        raise StressMismatchError("stress is not defined exactly on the framework's edges")
    if not f.graph.edges:
        return True
    r = rigidity_matrix(f)
    return all(x == 0 for x in r.left_multiply(w.vector()))


def self_stress_basis(f: Framework) -> list[Stress]:
    """Basis of the left kernel of the rigidity matrix.

    Each vector is scaled so its last nonzero entry (in lexicographic edge
    order) is 1, which for a single atom reproduces the l_i l_j normalisation.
    """
    edges = f.graph.sorted_edges()
    if not edges:
        return []
    out = []
    for vec in left_nullspace(rigidity_matrix(f)):
        last = next(x for x in reversed(vec) if x != 0)
        out.append(Stress({e: x / last for e, x in zip(edges, vec)}))
    return out


def nowhere_zero_combination(basis: Sequence[Stress], edges: Sequence[Edge] | None = None
                             ) -> Stress | None:
    """A combination of ``basis`` nonzero on every edge in ``edges``, or None.

    Coefficients (1, t, t^2, ...) are tried for t = 0, 1, 2, ...; each edge
    rules out fewer than len(basis) values of t, so the search is finite.
    """
    if not basis:
        return None
    edges = list(edges) if edges is not None else basis[0].edges()
    for e in edges:
        if all(b[e] == 0 for b in basis):
            return None
    limit = len(edges) * len(basis) + 1
    for t in range(limit + 1):
        coeffs = [Fraction(t) ** k for k in range(len(basis))]
        combo = {e: sum(c * b[e] for c, b in zip(coeffs, basis)) for e in basis[0].edges()}
        if all(combo[e] != 0 for e in edges):
            return Stress(combo)
    raise AssertionError("unreachable: finite exclusion argument failed")


def affine_dependence(points: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients l with sum l_i p_i = 0 and sum l_i = 0, last entry 1.

    l_i is the signed maximal minor of the homogeneous point matrix with row
    i deleted.  If the last minor vanishes, the largest-index nonzero one is
    used for normalisation instead.
    """
    pts = [tuple(to_rational(x) for x in p) for p in points]
    d = len(pts[0]) if pts else 0
    if len(pts) != d + 2:
        raise ValueError(f"need {d + 2} points in dimension {d}, got {len(pts)}")
    rows = [[1, *p] for p in pts]
    lam = [(-1) ** i * determinant(RatMatrix(rows[:i] + rows[i + 1:])) for i in range(len(rows))]
    pivot = next((x for x in reversed(lam) if x != 0), None)
    if pivot is None:
        raise DegenerateConfigurationError("points do not span R^d affinely")
    return [x / pivot for x in lam]


def _as_vertex_map(points) -> dict[int, Point]:
    if isinstance(points, Mapping):
        return {int(v): tuple(to_rational(x) for x in p) for v, p in points.items()}
    return {k + 1: tuple(to_rational(x) for x in p) for k, p in enumerate(points)}


def atom_stress(points) -> Stress:
    """Self-stress l_i l_j on the complete graph of d+2 points.

    ``points`` is a vertex -> coordinates mapping or a sequence (numbered
    from 1).  Raises if the points are not in general position.
    """
    pts = _as_vertex_map(points)
    vs = sorted(pts)
    lam = dict(zip(vs, affine_dependence([pts[v] for v in vs])))
    if any(x == 0 for x in lam.values()):
        raise DegenerateConfigurationError("atom points are not in general position")
    return Stress({(i, j): lam[i] * lam[j] for i, j in combinations(vs, 2)})


def union_framework(f: Framework, f2: Framework) -> Framework:
    if f.dimension != f2.dimension:
        raise ValueError("frameworks of different dimension")
    pts = dict(f.points)
    for v, p in f2.points.items():
        if v in pts and pts[v] != p:
            raise ValueError(f"conflicting coordinates for vertex {v}")
        pts[v] = p
    g = Graph(tuple(sorted(pts)), f.graph.edges | f2.graph.edges)
    return Framework(f.dimension, pts, g)


def add_stresses(w: Stress, w2: Stress) -> Stress:
    out = dict(w.tensions)
    for e, t in w2.tensions.items():
        out[e] = out.get(e, 0) + t
    return Stress(out)


def classify(f: Framework, w: Stress) -> Tensegrity:
    if not is_equilibrium(f, w):
        raise InconsistentStressError("stress is not in equilibrium")
    cables = frozenset(e for e, t in w.tensions.items() if t > 0)
    struts = frozenset(e for e, t in w.tensions.items() if t < 0)
    removed = frozenset(e for e, t in w.tensions.items() if t == 0)
    return Tensegrity(f, cables, struts, removed)


def atomic_decompose(f: Framework, w: Stress) -> AtomicDecomposition:
    """Write a self-stress as a sum of scaled atom stresses.

    Vertices are made null in ascending order.  A vertex with exactly d+1
    nonzero incident tensions is cleared by one atom; with more, atoms on
    its d+1 smallest such neighbours cancel the smallest edge until d+1
    remain.  The opposites of the added atoms are returned.
    """
    d = f.dimension
    if not check_general_position(f):
        raise DegenerateConfigurationError("framework is not in general position")
    if not is_equilibrium(f, w):
        raise InconsistentStressError("stress is not in equilibrium")
    current: dict[Edge, Fraction] = {e: t for e, t in w.tensions.items() if t != 0}
    added: list[tuple[tuple[int, ...], Fraction]] = []

    def support_neighbors(a):
        return sorted(j if i == a else i for (i, j), t in current.items() if a in (i, j))

    for a in sorted(f.points):
        for _ in count():
            nbrs = support_neighbors(a)
            if not nbrs:
                break
            if len(nbrs) <= d:
                raise InconsistentStressError(
                    f"vertex {a} carries {len(nbrs)} nonzero tensions, between 1 and d={d}")
            chosen = nbrs[: d + 1]
            members = tuple(sorted((a, *chosen)))
            ws = atom_stress({v: f.points[v] for v in members})
            target = edge(a, chosen[0])
            scale = -current[target] / ws[target]
            for e, t in ws.tensions.items():
                v = current.get(e, 0) + scale * t
                if v:
                    current[e] = v
                else:
                    current.pop(e, None)
            added.append((members, scale))
    if current:
        raise InconsistentStressError("residual tension after decomposition")
    return AtomicDecomposition(d, dict(f.points), tuple((m, -s) for m, s in added))
