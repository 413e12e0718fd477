"""Bundled worked examples: the octahedral prism in R^3 and perspective triangles in R^2."""

from __future__ import annotations

from fractions import Fraction

from .characterize import characterize_via_elimination, reconstruct, verify_point
from .core import Graph
from .decompose import (SelectionPolicy, combinatorial_decompose, is_edge_inserting,
                        necessary_condition)
from .framework import Framework, atom_stress, nowhere_zero_combination, self_stress_basis
from .linalg import format_rational
from .polysys import parse_polynomial, same_ideal, saturate

OCTAHEDRON = Graph.from_edges([(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (2, 6),
                               (3, 4), (3, 6), (4, 5), (4, 6), (5, 6)])
PERSPECTIVE = Graph.from_edges([(1, 2), (1, 4), (1, 6), (2, 3), (2, 6), (3, 4), (3, 5),
                                (4, 5), (5, 6)])

OCTAHEDRON_BASE = {1: (0, 0, 0), 2: (1, 1, 1), 3: (0, 1, 0), 4: (1, 0, 0), 5: (0, 0, 1)}
HYPERBOLOID = parse_polynomial("x6^2 - y6^2 - z6^2 - x6 + y6 + z6")
ATOM_TABLE = {(1, 2): 2, (1, 3): -2, (1, 4): -2, (1, 5): -2, (2, 3): -1,
              (2, 4): -1, (2, 5): -1, (3, 4): 1, (3, 5): 1, (4, 5): 1}

# lines p2p3, p5p6 and p1p4 all pass through (3, 1)
PERSPECTIVE_POINTS = {1: (2, Fraction(1, 2)), 2: (0, 0), 3: (Fraction(3, 2), Fraction(1, 2)),
                      4: (1, 0), 5: (0, 1), 6: (1, 1)}


class DemoMismatch(AssertionError):
    pass


def _check(cond: bool, what: str):
    if not cond:
        raise DemoMismatch(what)


def octahedron() -> dict:
    trace = combinatorial_decompose(OCTAHEDRON, 3, SelectionPolicy(first_vertex=6))
    _check(necessary_condition(trace).holds, "necessary condition should hold")
    _check(is_edge_inserting(trace), "trace should be edge-inserting")

    table = atom_stress(OCTAHEDRON_BASE)
    _check(dict(table.tensions) == ATOM_TABLE, "atom tension table differs")

    det = reconstruct(trace, OCTAHEDRON_BASE)
    elim = characterize_via_elimination(trace, OCTAHEDRON_BASE)
    for result in (det, elim):
        sat = saturate(result.equations, result.side_conditions)
        _check(same_ideal(sat, [HYPERBOLOID]), f"{result.method} equations are not the hyperboloid")

    checks = {}
    for name, point in {"on_surface": ("3/7", "1/7", "1/7"), "off_surface": (2, 0, 0),
                        "zero_tension": (1, 1, 0)}.items():
        assignment = dict(zip(det.unknowns, (Fraction(x) for x in point)))
        checks[name] = verify_point(det, assignment).to_json()
    _check(checks["on_surface"]["holds"], "(3/7, 1/7, 1/7) should verify")
    _check(not checks["off_surface"]["holds"], "(2, 0, 0) should fail")
    _check(not checks["zero_tension"]["holds"], "(1, 1, 0) should fail")

    return {
        "demo": "octahedron",
        "atoms": [list(a.members) for a in trace.atoms],
        "tensions": {f"w{i}{j}": format_rational(t) for (i, j), t in sorted(table.tensions.items())},
        "hyperboloid": str(HYPERBOLOID),
        "equations": {"det": [str(p) for p in det.equations],
                      "elim": [str(p) for p in elim.equations]},
        "verify": checks,
    }


def perspective() -> dict:
    trace = combinatorial_decompose(PERSPECTIVE, 2, SelectionPolicy(first_vertex=3))
    _check(is_edge_inserting(trace) and necessary_condition(trace).holds, "bad decomposition")
    base = {v: PERSPECTIVE_POINTS[v] for v in trace.atoms[-1].members}
    result = reconstruct(trace, base)

    def run(points):
        assignment = {}
        for v, names in result.coordinate_names().items():
            assignment.update(zip(names, (Fraction(x) for x in points[v])))
        report = verify_point(result, assignment)
        f = Framework(2, points, PERSPECTIVE)
        kernel = nowhere_zero_combination(self_stress_basis(f), PERSPECTIVE.sorted_edges())
        return report, kernel

    concurrent, kernel = run(PERSPECTIVE_POINTS)
    _check(concurrent.holds and kernel is not None, "concurrent configuration should verify")
    moved = dict(PERSPECTIVE_POINTS)
    moved[1] = (moved[1][0] + Fraction(1, 100), moved[1][1])
    perturbed, kernel2 = run(moved)
    _check(not perturbed.holds and kernel2 is None, "perturbed configuration should fail")
    return {
        "demo": "perspective",
        "atoms": [list(a.members) for a in trace.atoms],
        "equations": [str(p) for p in result.equations],
        "concurrent": concurrent.to_json(),
        "perturbed": perturbed.to_json(),
    }


DEMOS = {"octahedron": octahedron, "perspective": perspective}
