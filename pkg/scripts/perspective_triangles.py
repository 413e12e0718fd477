"""Planar perspective triangles: the stress condition is concurrency of the
lines p2p3, p5p6 and p1p4.  Sweeps p1 along and off the feasible line."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from tensegrity.characterize import reconstruct, verify_point
from tensegrity.decompose import SelectionPolicy, combinatorial_decompose
from tensegrity.demos import PERSPECTIVE, PERSPECTIVE_POINTS


@dataclass
class Config:
    steps: int = 8
    offset: Fraction = Fraction(1, 100)


def main(cfg: Config):
    trace = combinatorial_decompose(PERSPECTIVE, 2, SelectionPolicy(first_vertex=3))
    base = {v: PERSPECTIVE_POINTS[v] for v in trace.atoms[-1].members}
    result = reconstruct(trace, base)
    print("atoms:", [a.members for a in trace.atoms])
    print("equation:", *map(str, result.equations))

    # p1 on the line through p4 = (1, 0) and the concurrency point (3, 1)
    for k in range(1, cfg.steps + 1):
        u = Fraction(k, cfg.steps + 1)
        for label, shift in (("on line ", 0), ("shifted ", cfg.offset)):
            p1 = (1 + 2 * u + shift, u)
            values = {"x1": p1[0], "y1": p1[1], "x3": PERSPECTIVE_POINTS[3][0],
                      "y3": PERSPECTIVE_POINTS[3][1]}
            report = verify_point(result, values)
            print(f"  {label} p1 = ({p1[0]}, {p1[1]}): {'holds' if report.holds else 'fails'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=Config.steps)
    ap.add_argument("--offset", type=Fraction, default=Config.offset)
    args = ap.parse_args()
    main(Config(steps=args.steps, offset=args.offset))
