"""Command-line front end.

Exit status: 0 on success, 1 when the answer is "no" (necessary condition
fails, point rejected, ...), 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .characterize import (CharacterizationError, CharacterizationResult,
                           characterize_via_elimination, default_base, reconstruct,
                           verify_point)
from .core import DecompositionTrace, Graph, MalformedTraceError
from .decompose import (SelectionPolicy, combinatorial_decompose, first_vertex_candidates,
                        is_edge_inserting, necessary_condition)
from .demos import DEMOS, DemoMismatch
from .framework import (DegenerateConfigurationError, Framework, InconsistentStressError,
                        Stress, StressMismatchError, atomic_decompose, classify,
                        self_stress_basis)
from .polysys import GroebnerBudgetExceeded

BUDGET_ENV = "TENSEGRITY_GROEBNER_BUDGET"
_RATIONAL = re.compile(r"^-?\d+/\d+$")


class InputError(Exception):
    pass


class Verdict(Exception):
    """Carries a diagnostic payload for a negative domain answer."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "negative verdict"))
        self.payload = payload


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}")


def _graph_and_dim(args) -> tuple[Graph, int]:
    data = _load(args.graph)
    d = args.dim if args.dim is not None else data.get("d")
    if d is None:
        raise InputError("dimension missing: pass --dim or include \"d\" in the graph file")
    if "d" in data and args.dim is not None and data["d"] != args.dim:
        raise InputError(f"--dim {args.dim} contradicts d={data['d']} in {args.graph}")
    return Graph.from_json(data), int(d)


def _framework(path: str) -> Framework:
    return Framework.from_json(_load(path))


def _trace(g: Graph, d: int, first: int | None) -> DecompositionTrace:
    return combinatorial_decompose(g, d, SelectionPolicy(first_vertex=first))


def cmd_decompose(args) -> dict:
    g, d = _graph_and_dim(args)
    trace = _trace(g, d, args.first_vertex)
    verdict = necessary_condition(trace)
    out = {"trace": trace.to_json(),
           "necessary_condition": {"holds": verdict.holds,
                                   "witness": list(verdict.witness) if verdict.witness else None},
           "edge_inserting": is_edge_inserting(trace)}
    if not verdict.holds:
        raise Verdict(out)
    return out


def cmd_check(args) -> dict:
    g, d = _graph_and_dim(args)
    verdict = necessary_condition(_trace(g, d, args.first_vertex))
    out = {"holds": verdict.holds, "witness": list(verdict.witness) if verdict.witness else None}
    if not verdict.holds:
        raise Verdict(out)
    return out


def cmd_stress(args) -> dict:
    f = _framework(args.framework)
    return {"basis": [w.to_json() for w in self_stress_basis(f)]}


def cmd_classify(args) -> dict:
    f = _framework(args.framework)
    w = Stress.from_json(_load(args.stress))
    return classify(f, w).to_json()


def cmd_atomize(args) -> dict:
    f = _framework(args.framework)
    w = Stress.from_json(_load(args.stress))
    return atomic_decompose(f, w).to_json()


def cmd_characterize(args) -> dict:
    g, d = _graph_and_dim(args)
    base = None
    if args.base:
        base = {int(k): tuple(v) for k, v in _load(args.base).items()}
    if args.first_vertex is not None:
        firsts = [args.first_vertex]
    else:
        firsts = [None, *first_vertex_candidates(g)]
    trace = None
    for first in firsts:
        candidate = _trace(g, d, first)
        verdict = necessary_condition(candidate)
        if not verdict.holds:
            raise Verdict({"error": "necessary condition fails",
                           "witness": list(verdict.witness)})
        if is_edge_inserting(candidate):
            trace = candidate
            break
    if trace is None:
        raise Verdict({"error": "no edge-inserting decomposition found for the tried first vertices"})
    if base is None:
        base = default_base(trace.atoms[-1].members, d)
    if args.method == "elim":
        budget = os.environ.get(BUDGET_ENV)
        result = characterize_via_elimination(trace, base, budget=int(budget) if budget else None)
    else:
        result = reconstruct(trace, base)
    out = result.to_json()
    out["trace"] = trace.to_json()
    return out


def _assignment(result: CharacterizationResult, data: dict) -> dict[str, Fraction]:
    if all(str(k).isdigit() for k in data):
        names = result.coordinate_names()
        out = {}
        for v, coords in data.items():
            v = int(v)
            if v not in names:
                if v in result.base:
                    continue
                raise InputError(f"vertex {v} is not an unknown of the result")
            if len(coords) != len(names[v]):
                raise InputError(f"vertex {v} needs {len(names[v])} coordinates")
            out.update(zip(names[v], (Fraction(str(c)) for c in coords)))
        return out
    return {k: Fraction(str(v)) for k, v in data.items()}


def cmd_verify(args) -> dict:
    result = CharacterizationResult.from_json(_load(args.result))
    assignment = _assignment(result, _load(args.point))
    report = verify_point(result, assignment, args.require_general_position)
    out = report.to_json()
    if not report.holds:
        raise Verdict(out)
    return out


def cmd_demo(args) -> dict:
    return DEMOS[args.name]()


def _approx(obj, found: dict):
    if isinstance(obj, dict):
        for v in obj.values():
            _approx(v, found)
    elif isinstance(obj, list):
        for v in obj:
            _approx(v, found)
    elif isinstance(obj, str) and _RATIONAL.match(obj):
        found[obj] = float(Fraction(obj))
    return found


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tensegrity", description=__doc__.splitlines()[0])
    p.add_argument("--approx", action="store_true",
                   help="append non-authoritative decimal renderings of rationals")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--graph", required=True)
        sp.add_argument("--dim", type=int)
        sp.add_argument("--first-vertex", type=int)

    sp = sub.add_parser("decompose", help="peel a graph into atoms")
    graph_args(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("check", help="necessary condition for a tensegrity")
    graph_args(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("stress", help="self-stress basis of a framework")
    sp.add_argument("--framework", required=True)
    sp.set_defaults(func=cmd_stress)

    for name, func, hlp in (("classify", cmd_classify, "cables, struts and removed edges"),
                            ("atomize", cmd_atomize, "atomic decomposition of a self-stress")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--framework", required=True)
        sp.add_argument("--stress", required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("characterize", help="equations on the unknown vertex positions")
    graph_args(sp)
    sp.add_argument("--base", help="JSON map vertex -> coordinates for the last atom")
    sp.add_argument("--method", choices=("det", "elim"), default="det")
    sp.set_defaults(func=cmd_characterize)

    sp = sub.add_parser("verify", help="check a placement against a characterization")
    sp.add_argument("--result", required=True)
    sp.add_argument("--point", required=True)
    sp.add_argument("--require-general-position", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("demo", help="run a bundled example")
    sp.add_argument("name", choices=sorted(DEMOS))
    sp.set_defaults(func=cmd_demo)
    return p


def _emit(payload: dict, approx: bool, stream) -> None:
    if approx:
        payload = {**payload, "approx_non_authoritative": _approx(payload, {})}
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        payload = args.func(args)
    except Verdict as v:
        _emit(v.payload, args.approx, stdout)
        return 1
    except (CharacterizationError, InconsistentStressError, DegenerateConfigurationError,
            DemoMismatch) as exc:
        _emit({"error": str(exc)}, False, stdout)
        return 1
    except (InputError, MalformedTraceError, StressMismatchError, GroebnerBudgetExceeded,
            KeyError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.approx, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
