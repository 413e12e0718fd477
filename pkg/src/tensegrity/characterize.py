"""Conditions on vertex positions from an edge-inserting decomposition.

The atoms of a trace are added back in reverse order.  The last atom is
placed at a fixed base configuration and carries the normalising stress;
every earlier atom gets the scale that cancels the running tension on one
inserted edge, its remaining inserted edges must end with zero tension and
the edges of the input graph must not.  Points not yet placed receive fresh
coordinate unknowns.

Two routes produce the equations: ``reconstruct`` works with the closed-form
atom stresses (signed cofactors of the homogeneous point matrix), while
``characterize_via_elimination`` writes the equilibrium system of every atom
with tension unknowns and eliminates them with a Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence, Union

from .core import DecompositionTrace, Edge, Graph, edge
from .decompose import is_edge_inserting, necessary_condition
from .framework import (Framework, Stress, check_general_position, nowhere_zero_combination,
                        self_stress_basis)
from .linalg import format_rational, to_rational
from .polysys import (Polynomial, aux_var, coord_var, determinant_of, divide_exact, eliminate,
                      parse_polynomial, sort_variables, tension_var, variable_kind)

Coordinate = Union[Fraction, Polynomial]


class CharacterizationError(ValueError):
    pass


class HangingStructureError(CharacterizationError):
    pass


# --------------------------------------------------------------- rational functions

def _primitive_factor(p: Polynomial) -> tuple[Fraction, Polynomial]:
    """Split ``p`` as c * q with q having leading display coefficient 1."""
    q = p.primitive()
    c = p.terms[next(iter(q.terms))] / q.terms[next(iter(q.terms))]
    return c, q


@dataclass(frozen=True)
class RationalFunction:
    """numerator / product(den); denominator factors are kept unexpanded."""

    num: Polynomial
    den: tuple[Polynomial, ...] = ()

    @classmethod
    def make(cls, num, den: Sequence[Polynomial] = ()) -> "RationalFunction":
        num = Polynomial.coerce(num)
        factors = []
        for f in den:
            c = f.constant_value()
            if c is not None:
                if c == 0:
                    raise ZeroDivisionError("zero denominator")
                num = num * (1 / c)
                continue
            c, f = _primitive_factor(f)
            num = num * (1 / c)
            factors.append(f)
        return cls(num, tuple(factors))._cancel()

    def _cancel(self) -> "RationalFunction":
        num = self.num
        if num.is_zero():
            return RationalFunction(num, ())
        keep = []
        for f in self.den:
            q = divide_exact(num, f)
            if q is not None:
                num = q
            else:
                keep.append(f)
        return RationalFunction(num, tuple(keep))

    @staticmethod
    def _lcd(a: tuple, b: tuple) -> tuple[list, list, list]:
        """Common denominator plus the factors each side is missing."""
        rest = list(b)
        for f in a:
            if f in rest:
                rest.remove(f)
        lcd = list(a) + rest
        miss_a = list(rest)
        pool = list(a)
        for f in b:
            if f in pool:
                pool.remove(f)
        miss_b = pool
        return lcd, miss_a, miss_b

    def __add__(self, other):
        other = _rf(other)
        lcd, miss_a, miss_b = self._lcd(self.den, other.den)
        na = self.num
        for f in miss_a:
            na = na * f
        nb = other.num
        for f in miss_b:
            nb = nb * f
        return RationalFunction(na + nb, tuple(lcd))._cancel()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rf(other))

    def __mul__(self, other):
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den + other.den)._cancel()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by a zero rational function")
        num = self.num
        for f in other.den:
            num = num * f
        return RationalFunction.make(num, self.den + (other.num,))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def denominator(self) -> Polynomial:
        out = Polynomial.const(1)
        for f in self.den:
            out = out * f
        return out

    def evaluate(self, assignment) -> Fraction:
        return self.num.evaluate(assignment) / self.denominator().evaluate(assignment)

    def __str__(self):
        if not self.den:
            return str(self.num)
        return f"({self.num}) / (" + ")*(".join(str(f) for f in self.den) + ")"


def _rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction.make(x)


@dataclass(frozen=True)
class SymbolicStress:
    """Edge tensions as rational functions; ``cofactors`` holds the l_i of an atom."""

    tensions: Mapping[Edge, RationalFunction]
    cofactors: Mapping[int, Polynomial] = field(default_factory=dict)

    def __getitem__(self, e: Edge) -> RationalFunction:
        return self.tensions[edge(*e)]

    def evaluate(self, assignment) -> Stress:
        return Stress({e: t.evaluate(assignment) for e, t in self.tensions.items()})


# ------------------------------------------------------------------ placements

def default_base(members: Sequence[int], d: int) -> dict[int, tuple[Fraction, ...]]:
    """Base coordinates for the last atom, assigned to members in ascending order."""
    if d == 3:
        pts = [(0, 0, 0), (1, 1, 1), (0, 1, 0), (1, 0, 0), (0, 0, 1)]
    else:
        unit = [tuple(int(k == i) for k in range(d)) for i in range(d)]
        pts = [(0,) * d, *unit, (1,) * d]
    members = sorted(members)
    if len(members) != d + 2:
        raise ValueError(f"base atom needs {d + 2} vertices")
    return {v: tuple(Fraction(x) for x in p) for v, p in zip(members, pts)}


def _coerce_coordinate(x) -> Coordinate:
    if isinstance(x, Polynomial):
        c = x.constant_value()
        return c if c is not None else x
    if isinstance(x, str):
        try:
            return to_rational(x)
        except ValueError:
            return _coerce_coordinate(parse_polynomial(x))
    return to_rational(x)


def _cofactors(members: Sequence[int], placement: Mapping[int, Sequence[Coordinate]]
               ) -> dict[int, Polynomial]:
    rows = [[1, *placement[v]] for v in members]
    return {v: determinant_of(rows[:i] + rows[i + 1:]) * (-1) ** i
            for i, v in enumerate(members)}


def symbolic_atom_stress(members: Sequence[int], placement: Mapping[int, Sequence[Coordinate]],
                         fresh: Sequence[int] = ()) -> SymbolicStress:
    """Atom stress l_i l_j with l_i the signed cofactors, as polynomials.

    ``fresh`` lists members whose coordinates were just introduced; at least
    d members must already be placed.  When every coordinate is a rational
    number the cofactors are normalised so the last one equals 1.
    """
    members = sorted(members)
    d = len(members) - 2
    missing = [v for v in members if v not in placement]
    if missing:
        raise CharacterizationError(f"no coordinates for {missing}")
    if len(members) - len(set(fresh) & set(members)) < d:
        raise HangingStructureError(
            f"atom {members} shares fewer than {d} placed vertices with the structure")
    lam = _cofactors(members, placement)
    if all(p.is_constant() for p in lam.values()):
        last = next((lam[v].constant_value() for v in reversed(members)
                     if lam[v].constant_value() != 0), None)
        if last is not None:
            lam = {v: p * (1 / last) for v, p in lam.items()}
    return SymbolicStress({(i, j): RationalFunction.make(lam[i] * lam[j])
                           for i, j in combinations(members, 2)}, lam)


# ---------------------------------------------------------------------- results

@dataclass
class CharacterizationResult:
    dimension: int
    graph: Graph
    base: dict[int, tuple[Coordinate, ...]]
    unknowns: list[str]
    equations: list[Polynomial]
    negated: list[Polynomial]
    negated_edges: list[Edge]
    side_conditions: list[Polynomial]
    method: str = "det"
    flags: list[str] = field(default_factory=list)
    stress: SymbolicStress | None = None

    def coordinate_names(self) -> dict[int, tuple[str, ...]]:
        out: dict[int, list[str]] = {}
        for name in self.unknowns:
            _, (v, _k) = variable_kind(name)
            out.setdefault(v, []).append(name)
        return {v: tuple(names) for v, names in out.items()}

    def to_json(self) -> dict:
        def coord(x):
            return format_rational(x) if isinstance(x, Fraction) else str(x)
        return {
            "method": self.method,
            "d": self.dimension,
            "graph": self.graph.to_json(),
            "base": {str(v): [coord(x) for x in p] for v, p in sorted(self.base.items())},
            "unknowns": list(self.unknowns),
            "equations": [str(p) for p in self.equations],
            "negated": [{"edge": list(e), "polynomial": str(p)}
                        for e, p in zip(self.negated_edges, self.negated)],
            "side_conditions": [str(p) for p in self.side_conditions],
            "flags": list(self.flags),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterizationResult":
        return cls(
            dimension=data["d"],
            graph=Graph.from_json(data["graph"]),
            base={int(v): tuple(_coerce_coordinate(x) for x in p) for v, p in data["base"].items()},
            unknowns=list(data["unknowns"]),
            equations=[parse_polynomial(s) for s in data["equations"]],
            negated=[parse_polynomial(n["polynomial"]) for n in data["negated"]],
            negated_edges=[edge(*n["edge"]) for n in data["negated"]],
            side_conditions=[parse_polynomial(s) for s in data["side_conditions"]],
            method=data.get("method", "det"),
            flags=list(data.get("flags", [])),
        )


def _check_preconditions(trace: DecompositionTrace, base: Mapping[int, Sequence]) -> None:
    verdict = necessary_condition(trace)
    if not verdict.holds:
        raise CharacterizationError(f"edge {verdict.witness} lies in no atom; no tensegrity exists")
    if not trace.extractions:
        raise CharacterizationError("decomposition has no atoms")
    if not is_edge_inserting(trace):
        raise CharacterizationError(
            "decomposition is not edge-inserting; per-atom free scales are not supported")
    last = trace.extractions[-1].atom
    if set(base) != set(last.members):
        raise CharacterizationError(
            f"base placement must cover exactly the last atom {list(last.members)}")
    d = trace.dimension
    for v, p in base.items():
        if len(p) != d:
            raise CharacterizationError(f"base point {v} has {len(p)} coordinates, expected {d}")
    lam = _cofactors(sorted(base), base)
    if any(p.is_zero() for p in lam.values()):
        raise CharacterizationError("base placement is not in general position")


def _normalise_base(trace, base):
    if base is None:
        base = default_base(trace.extractions[-1].atom.members, trace.dimension) \
            if trace.extractions else {}
    return {int(v): tuple(_coerce_coordinate(x) for x in p) for v, p in base.items()}


def _strip_factors(p: Polynomial, factors: Sequence[Polynomial]) -> Polynomial:
    """Divide out side-condition factors; they are nonzero where it matters."""
    changed = True
    while changed and not p.is_constant():
        changed = False
        for f in factors:
            q = divide_exact(p, f)
            if q is not None:
                p, changed = q, True
    return p.primitive() if not p.is_zero() else p


def _introduce(members, placement, unknowns, d) -> list[int]:
    fresh = [v for v in members if v not in placement]
    if len(members) - len(fresh) < d:
        raise HangingStructureError(
            f"atom {list(members)} shares fewer than {d} placed vertices with the structure")
    for v in fresh:
        names = [coord_var(v, k, d) for k in range(d)]
        placement[v] = tuple(Polynomial.var(n) for n in names)
        unknowns.extend(names)
    return fresh


def reconstruct(trace: DecompositionTrace,
                base: Mapping[int, Sequence] | None = None) -> CharacterizationResult:
    """Equations and negated equations by closed-form atom stresses."""
    base = _normalise_base(trace, base)
    _check_preconditions(trace, base)
    d = trace.dimension
    steps = trace.extractions
    placement: dict[int, tuple] = dict(base)
    unknowns: list[str] = []
    running: dict[Edge, RationalFunction] = {}
    raw_equations: list[RationalFunction] = []

    last = steps[-1]
    for e, t in symbolic_atom_stress(last.atom.members, placement).tensions.items():
        running[e] = t
    for e in last.inserted_edges:
        raw_equations.append(running[e])
        running[e] = RationalFunction.make(0)

    for step in reversed(steps[:-1]):
        members = step.atom.members
        fresh = _introduce(members, placement, unknowns, d)
        atom = symbolic_atom_stress(members, placement, fresh)
        designated = min(step.inserted_edges)
        i, j = designated
        scale = -running.get(designated, RationalFunction.make(0)) \
            / atom.cofactors[i] / atom.cofactors[j]
        for e, t in atom.tensions.items():
            running[e] = running.get(e, RationalFunction.make(0)) + scale * t
        for e in step.inserted_edges:
            if e != designated:
                raw_equations.append(running[e])
            elif not running[e].is_zero():
                raise AssertionError("normalising edge did not cancel")
            running[e] = RationalFunction.make(0)

    side: list[Polynomial] = []

    def note(rf: RationalFunction):
        for f in rf.den:
            if f not in side:
                side.append(f)

    # a symbolic base must itself stay in general position
    for lam in _cofactors(sorted(base), base).values():
        if not lam.is_constant():
            note(RationalFunction.make(1, [lam]))

    for rf in raw_equations:
        note(rf)
    negated_edges = trace.input_graph.sorted_edges()
    final = {e: running.get(e, RationalFunction.make(0)) for e in negated_edges}
    for rf in final.values():
        note(rf)

    equations = []
    for rf in raw_equations:
        p = _strip_factors(rf.num, side)
        if not p.is_zero() and p not in equations:
            equations.append(p)
    negated = [final[e].num for e in negated_edges]
    result = CharacterizationResult(d, trace.input_graph, base, unknowns, equations, negated,
                                    negated_edges, side, "det",
                                    stress=SymbolicStress(final))
    _flag(result)
    return result


def _flag(result: CharacterizationResult) -> None:
    if any(p.is_constant() and not p.is_zero() for p in result.equations):
        result.flags.append("no general-position solutions: an equation is a nonzero constant")
    for e, p in zip(result.negated_edges, result.negated):
        if p.is_zero():
            result.flags.append(f"no general-position solutions: edge {list(e)} is forced to zero")


# ------------------------------------------------------------- elimination route

@dataclass
class EliminationSystem:
    """Polynomial system of the re-added atoms before elimination."""

    equations: list[Polynomial]
    tension_variables: list[str]
    coordinate_variables: list[str]
    substitutions: dict[str, Polynomial]


def atom_equilibrium_equations(members: Sequence[int], placement: Mapping[int, Sequence],
                               tensions: Mapping[Edge, Polynomial]) -> list[Polynomial]:
    """Rows of R^T w = 0 for the complete graph on ``members``: one per vertex coordinate."""
    members = sorted(members)
    eqs = []
    for v in members:
        d = len(placement[v])
        for k in range(d):
            total = Polynomial()
            for u in members:
                if u == v:
                    continue
                diff = Polynomial.coerce(placement[v][k]) - Polynomial.coerce(placement[u][k])
                total = total + tensions[edge(u, v)] * diff
            eqs.append(total)
    return eqs


def elimination_system(trace: DecompositionTrace, base: Mapping[int, Sequence] | None = None,
                       saturate: bool | None = None) -> EliminationSystem:
    """Equilibrium equations of the re-added atoms with their tension unknowns.

    Inserted-edge tensions whose cancelling value is already a constant are
    substituted; otherwise a linear cancellation equation is kept.  With
    ``saturate`` each input edge's final tension w gets an auxiliary t and
    the equation w*t - 1; by default this is done only when the graph is not
    (d+1)-regular, since otherwise one nonzero tension forces all of them.
    """
    base = _normalise_base(trace, base)
    _check_preconditions(trace, base)
    d = trace.dimension
    steps = trace.extractions
    if saturate is None:
        saturate = not trace.input_graph.is_regular(d + 1)
    placement: dict[int, tuple] = dict(base)
    unknowns: list[str] = []

    running: dict[Edge, Polynomial] = {}
    for e, t in symbolic_atom_stress(steps[-1].atom.members, placement).tensions.items():
        running[e] = t.num
    equations: list[Polynomial] = [running[e] for e in steps[-1].inserted_edges
                                   if not running[e].is_zero()]
    for e in steps[-1].inserted_edges:
        running[e] = Polynomial()

    variable_edges: dict[Edge, int] = {}
    for step in steps[:-1]:
        for e in step.atom.edges():
            variable_edges[e] = variable_edges.get(e, 0) + 1

    tension_vars: list[str] = []
    substitutions: dict[str, Polynomial] = {}
    for idx in range(len(steps) - 2, -1, -1):
        step = steps[idx]
        members = step.atom.members
        _introduce(members, placement, unknowns, d)
        local: dict[Edge, Polynomial] = {}
        for e in step.atom.edges():
            name = tension_var(*e) if variable_edges[e] == 1 else tension_var(*e, tag=idx)
            prior = running.get(e, Polynomial())
            if e in step.inserted_edges and prior.is_constant():
                substitutions[name] = -prior
                local[e] = -prior
            else:
                tension_vars.append(name)
                local[e] = Polynomial.var(name)
                if e in step.inserted_edges:
                    equations.append(local[e] + prior)
        equations.extend(p for p in atom_equilibrium_equations(members, placement, local)
                         if not p.is_zero())
        for e, t in local.items():
            running[e] = running.get(e, Polynomial()) + t
        for e in step.inserted_edges:
            running[e] = Polynomial()

    if saturate:
        for e in trace.input_graph.sorted_edges():
            t = aux_var(*e)
            tension_vars.append(t)
            equations.append(running.get(e, Polynomial()) * Polynomial.var(t) - 1)

    unique = []
    for p in equations:
        if p not in unique and -p not in unique:
            unique.append(p)
    return EliminationSystem(unique, tension_vars, unknowns, substitutions)


def characterize_via_elimination(trace: DecompositionTrace,
                                 base: Mapping[int, Sequence] | None = None,
                                 saturate: bool | None = None,
                                 budget: int | None = None) -> CharacterizationResult:
    """Equations by eliminating the tension unknowns of every re-added atom.

    The negated equations and side conditions are the closed-form tensions
    of :func:`reconstruct`; by uniqueness of atom stresses they agree with
    the eliminated system wherever the side conditions hold.
    """
    base = _normalise_base(trace, base)
    system = elimination_system(trace, base, saturate)
    det = reconstruct(trace, base)
    if system.tension_variables:
        keep = sort_variables(set().union(*(p.variables for p in system.equations))
                              - set(system.tension_variables))
        gens = eliminate(system.equations, system.tension_variables, keep, budget)
    else:
        gens = list(system.equations)
    equations = [g.primitive() for g in gens if not g.is_zero()]
    result = CharacterizationResult(det.dimension, det.graph, det.base, det.unknowns, equations,
                                    det.negated, det.negated_edges, det.side_conditions,
                                    "elim", stress=det.stress)
    _flag(result)
    return result


# ------------------------------------------------------------------ verification

@dataclass
class VerificationReport:
    holds: bool
    witness: Stress | None
    failed_equations: list[Polynomial]
    vanishing_negated: list[Edge]
    vanishing_side_conditions: list[Polynomial]
    general_position: bool
    kernel_witness: bool

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": self.witness.to_json() if self.witness else None,
            "failed_equations": [str(p) for p in self.failed_equations],
            "vanishing_negated": [list(e) for e in self.vanishing_negated],
            "vanishing_side_conditions": [str(p) for p in self.vanishing_side_conditions],
            "general_position": self.general_position,
            "kernel_witness": self.kernel_witness,
        }


def realize(result: CharacterizationResult, assignment: Mapping[str, Fraction]) -> Framework:
    """The framework obtained by plugging ``assignment`` into the unknowns."""
    missing = [u for u in result.unknowns if u not in assignment]
    if missing:
        raise KeyError(f"assignment misses unknowns {missing}")
    values = {k: to_rational(v) for k, v in assignment.items()}
    points = {}
    for v, p in result.base.items():
        points[v] = tuple(x if isinstance(x, Fraction) else x.evaluate(values) for x in p)
    for v, names in result.coordinate_names().items():
        points[v] = tuple(values[n] for n in names)
    return Framework(result.dimension, points, result.graph)


def verify_point(result: CharacterizationResult, assignment: Mapping[str, Fraction],
                 require_general_position: bool = False) -> VerificationReport:
    """Check a candidate placement against the conditions and the kernel.

    The verdict needs every equation to vanish, every negated polynomial and
    side condition to be nonzero, and the rigidity-matrix left kernel of the
    completed framework to contain a stress nonzero on every edge.  Global
    general position is reported and only enforced on request: the
    conditions themselves keep every atom in general position.
    """
    f = realize(result, assignment)
    values = {k: to_rational(v) for k, v in assignment.items()}
    failed = [p for p in result.equations if p.evaluate(values) != 0]
    vanishing = [e for e, p in zip(result.negated_edges, result.negated) if p.evaluate(values) == 0]
    side = [p for p in result.side_conditions if p.evaluate(values) == 0]
    general = check_general_position(f)
    witness = nowhere_zero_combination(self_stress_basis(f), f.graph.sorted_edges())
    holds = (not failed and not vanishing and not side and witness is not None
             and (general or not require_general_position))
    return VerificationReport(holds, witness, failed, vanishing, side, general, witness is not None)
