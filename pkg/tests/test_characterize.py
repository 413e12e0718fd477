import re
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from families import ON_SURFACE, hyperboloid, octahedra_on_surface, second_intersection
from tensegrity.characterize import (CharacterizationError, CharacterizationResult,
                                     characterize_via_elimination,
                                     default_base, elimination_system, reconstruct, verify_point)
from tensegrity.core import Graph
from tensegrity.decompose import SelectionPolicy, combinatorial_decompose
from tensegrity.demos import (HYPERBOLOID, OCTAHEDRON, OCTAHEDRON_BASE, PERSPECTIVE,
                              PERSPECTIVE_POINTS)
from tensegrity.framework import (Framework, Stress, check_general_position, is_equilibrium,
                                  nowhere_zero_combination, self_stress_basis)
from tensegrity.polysys import Polynomial, parse_polynomial, same_ideal, saturate

P = parse_polynomial
OCT6 = combinatorial_decompose(OCTAHEDRON, 3, SelectionPolicy(first_vertex=6))
OCT1 = combinatorial_decompose(OCTAHEDRON, 3, SelectionPolicy(first_vertex=1))
PERSP = combinatorial_decompose(PERSPECTIVE, 2, SelectionPolicy(first_vertex=3))
PERSP_BASE = {v: PERSPECTIVE_POINTS[v] for v in (2, 4, 5, 6)}

# the fifteen equilibrium equations of the second atom after w24=1, w35=-1
REFERENCE_SYSTEM = """w23+w25-w26*x+w26, -w23-w34-x*w36, w34+w45-w46*x+w46, -w25-w45-x*w56,
-w26+w26*x+x*w36-w46+w46*x+x*w56, -w26+w26*y-w36+w36*y+y*w46+y*w56,
-w26+w26*z+z*w36+z*w46-w56+w56*z, 1+w25-w26*y+w26, w23+1-w26*z+w26, w34-1-w36*y+w36,
-w23+1-z*w36, -1-w34-y*w46, -1-w45-z*w46, -w25+1-y*w56, -1+w45-w56*z+w56"""

# closed-form stress on the octahedron edges in lexicographic order
REFERENCE_W = ["y+z-1-x", "-y+x-z+1", "-y+x-z+1", "-y+x-z+1", "-y+x", "x-z", "1",
           "-y*(-y+x-z+1)/(y+z+x-1)", "-(-y+z+x-1)/(y+z+x-1)", "-z*(-y+x-z+1)/(y+z+x-1)",
           "(-y+x-z+1)/(y+z+x-1)", "-(y-z-1+x)/(y+z+x-1)"]


def rename(text):
    text = re.sub(r"w(\d)(\d)", r"w\1_\2", text)
    return re.sub(r"\b([xyz])\b", r"\g<1>6", text)


def assignment(result, points):
    out = {}
    for v, names in result.coordinate_names().items():
        out.update(zip(names, (Fraction(x) for x in points[v])))
    return out


@pytest.fixture(scope="module")
def det():
    return reconstruct(OCT6, OCTAHEDRON_BASE)


@pytest.fixture(scope="module")
def elim():
    return characterize_via_elimination(OCT6, OCTAHEDRON_BASE)


# ---------------------------------------------------------------- octahedron

def test_determinant_pathway(det):
    assert det.unknowns == ["x6", "y6", "z6"]
    assert det.equations == [HYPERBOLOID]
    assert det.side_conditions == [P("x6 + y6 + z6 - 1"), P("x6 - y6 - z6 + 1")]
    negated = dict(zip(det.negated_edges, det.negated))
    assert negated[(1, 2)] == 2 and negated[(2, 6)] == -2
    assert negated[(3, 4)] == P("2*y6") and negated[(4, 5)] == P("2*z6")
    assert negated[(3, 6)] == P("2*x6 - 2*y6 + 2*z6 - 2")
    assert det.flags == []


def test_elimination_system_matches_reference():
    system = elimination_system(OCT6, OCTAHEDRON_BASE)
    assert system.substitutions == {"w2_4": 1, "w3_5": -1}
    expected = [P(rename(s)) for s in REFERENCE_SYSTEM.replace("\n", " ").split(",")]
    assert len(system.equations) == len(expected) == 15
    for p in expected:
        assert p in system.equations or -p in system.equations


def test_elimination_pathway(elim):
    assert elim.equations == [HYPERBOLOID]


def test_sympy_eliminates_reference_to_hyperboloid():
    ws = sympy.symbols("w23 w25 w26 w34 w36 w45 w46 w56")
    x, y, z = sympy.symbols("x y z")
    exprs = [sympy.sympify(s) for s in REFERENCE_SYSTEM.replace("\n", " ").split(",")]
    g = sympy.groebner(exprs, *ws, x, y, z, order="lex")
    coords = [p for p in g.exprs if not p.free_symbols & set(ws)]
    target = x**2 - y**2 - z**2 - x + y + z
    assert len(coords) == 1 and sympy.simplify(coords[0] / target).is_number


def test_reference_stress_matches_reconstruction(det):
    for direction in [(1, 2, 3), (2, -1, 1), (3, 1, -2), (1, 1, 4)]:
        p6 = second_intersection(direction)
        f = Framework(3, {**OCTAHEDRON_BASE, 6: p6}, OCTAHEDRON)
        if p6 is None or not check_general_position(f):
            continue
        values = dict(zip("xyz", p6))
        expr = [sympy.sympify(s).subs(values) for s in REFERENCE_W]
        w = Stress(dict(zip(OCTAHEDRON.sorted_edges(), (Fraction(str(e)) for e in expr))))
        assert is_equilibrium(f, w)
        mine = det.stress.evaluate(dict(zip(det.unknowns, p6)))
        ratio = mine[(2, 6)] / w[(2, 6)]
        assert mine.tensions == w.scaled(ratio).tensions


def test_verify_points(det):
    on = verify_point(det, dict(zip(det.unknowns, ON_SURFACE)))
    assert on.holds and on.witness.nowhere_zero() and len(on.witness.edges()) == 12
    assert not on.general_position
    assert not verify_point(det, dict(zip(det.unknowns, ON_SURFACE)),
                            require_general_position=True).holds
    off = verify_point(det, dict(zip(det.unknowns, (2, 0, 0))))
    assert not off.holds and off.failed_equations == [HYPERBOLOID]
    zero = verify_point(det, dict(zip(det.unknowns, (1, 1, 0))))
    assert not zero.holds and not zero.failed_equations
    assert (4, 5) in zero.vanishing_negated


def test_trace_equivalence():
    sym1 = {1: tuple(Polynomial.var(n) for n in ("x1", "y1", "z1")),
            **{v: OCTAHEDRON_BASE[v] for v in (2, 3, 4, 5)}}
    a = reconstruct(OCT6, sym1)
    b = reconstruct(OCT1, {6: tuple(Polynomial.var(n) for n in ("x6", "y6", "z6")),
                           **{v: OCTAHEDRON_BASE[v] for v in (2, 3, 4, 5)}})
    # both results relate p1 and p6 with p2..p5 fixed
    assert a.unknowns == ["x6", "y6", "z6"] and b.unknowns == ["x1", "y1", "z1"]
    side = a.side_conditions + b.side_conditions
    assert same_ideal(saturate(a.equations, side), saturate(b.equations, side))
    at_origin = b.equations[0].subs({"x1": 0, "y1": 0, "z1": 0})
    assert same_ideal([at_origin], [HYPERBOLOID])


# ---------------------------------------------------------------- perspective

def test_perspective_equation():
    result = reconstruct(PERSP, PERSP_BASE)
    assert result.unknowns == ["x1", "y1", "x3", "y3"]
    assert result.equations == [P("x1*y3 - y1*x3 + y1*y3 - y3")]
    assert set(result.side_conditions) == {P("y1"), P("x3"), P("x1 - y1"), P("x3 + y3 - 1")}
    elim = characterize_via_elimination(PERSP, PERSP_BASE)
    side = result.side_conditions
    assert same_ideal(saturate(elim.equations, side), saturate(result.equations, side))


def concurrency(points):
    """Determinant of the three lines p2p3, p5p6, p1p4 in homogeneous form."""
    def line(a, b):
        (x1, y1), (x2, y2) = points[a], points[b]
        return (y1 - y2, x2 - x1, x1 * y2 - x2 * y1)
    m = sympy.Matrix([line(2, 3), line(5, 6), line(1, 4)])
    return m.det()


def test_perspective_equation_is_concurrency():
    result = reconstruct(PERSP, PERSP_BASE)
    x1, y1, x3, y3 = sympy.symbols("x1 y1 x3 y3")
    pts = {**PERSP_BASE, 1: (x1, y1), 3: (x3, y3)}
    ratio = sympy.simplify(concurrency(pts) / sympy.sympify(str(result.equations[0]).replace("^", "**")))
    assert ratio.is_number and ratio != 0


@st.composite
def perspective_points(draw, concurrent=True):
    q = st.fractions(min_value=-4, max_value=4, max_denominator=4)
    c = (draw(q), Fraction(1))  # on the line p5p6
    s, u = draw(q), draw(q)
    if concurrent:
        p3 = (s * c[0], s * c[1])
        p1 = (1 + u * (c[0] - 1), u * c[1])
    else:
        p3, p1 = (draw(q), draw(q)), (draw(q), draw(q))
    pts = {**PERSP_BASE, 1: p1, 3: p3}
    assume(len(set(pts.values())) == 6)
    return pts


@settings(max_examples=200, deadline=None)
@given(perspective_points())
def test_perspective_soundness(pts):
    result = reconstruct(PERSP, PERSP_BASE)
    f = Framework(2, pts, PERSPECTIVE)
    assume(check_general_position(f))
    assert all(p.evaluate(assignment(result, pts)) == 0 for p in result.equations)
    assert verify_point(result, assignment(result, pts)).holds


@settings(max_examples=200, deadline=None)
@given(perspective_points(concurrent=False))
def test_perspective_verdict_matches_kernel(pts):
    result = reconstruct(PERSP, PERSP_BASE)
    f = Framework(2, pts, PERSPECTIVE)
    assume(check_general_position(f))
    kernel = nowhere_zero_combination(self_stress_basis(f), PERSPECTIVE.sorted_edges())
    assert verify_point(result, assignment(result, pts)).holds == (kernel is not None)


@settings(max_examples=200, deadline=None)
@given(octahedra_on_surface())
def test_octahedron_soundness(f):
    det = reconstruct(OCT6, OCTAHEDRON_BASE)
    values = dict(zip(det.unknowns, f.points[6]))
    assert hyperboloid(f.points[6]) == 0
    assert all(p.evaluate(values) == 0 for p in det.equations)
    report = verify_point(det, values)
    assert report.holds == (nowhere_zero_combination(self_stress_basis(f)) is not None)


# ---------------------------------------------------------------- plumbing

def test_default_bases():
    assert default_base((1, 2, 3, 4, 5), 3) == {v: tuple(map(Fraction, OCTAHEDRON_BASE[v]))
                                                for v in range(1, 6)}
    assert default_base((2, 4, 5, 6), 2) == {2: (0, 0), 4: (1, 0), 5: (0, 1), 6: (1, 1)}


def test_result_json_round_trip(det):
    again = CharacterizationResult.from_json(det.to_json())
    assert again.to_json() == det.to_json()
    assert verify_point(again, dict(zip(det.unknowns, ON_SURFACE))).holds


def test_rejects_non_edge_inserting():
    g = Graph.complete([1, 2, 3, 4]).with_edges(added=[(3, 5), (3, 6), (4, 5), (4, 6), (5, 6)])
    trace = combinatorial_decompose(g, 2)
    with pytest.raises(CharacterizationError):
        reconstruct(trace)


def test_rejects_failed_necessary_condition():
    trace = combinatorial_decompose(Graph.from_edges([(1, 2)]), 2)
    with pytest.raises(CharacterizationError):
        reconstruct(trace)


def test_rejects_bad_base():
    with pytest.raises(CharacterizationError):
        reconstruct(OCT6, {1: (0, 0, 0), 2: (1, 1, 1)})
    flat = {1: (0, 0, 0), 2: (1, 0, 0), 3: (0, 1, 0), 4: (1, 1, 0), 5: (0, 0, 1)}
    with pytest.raises(CharacterizationError):
        reconstruct(OCT6, flat)
