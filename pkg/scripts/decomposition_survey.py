"""Survey of the peeling on random graphs: how often the necessary condition
holds, how often some first vertex yields an edge-inserting trace, and trace lengths."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from tensegrity.core import Graph, replay
from tensegrity.decompose import (combinatorial_decompose, necessary_condition,
                                  search_edge_inserting)


@dataclass
class Config:
    dimension: int = 2
    vertices: int = 8
    density: float = 0.6
    trials: int = 300
    seed: int = 0


def random_graph(rng: random.Random, cfg: Config) -> Graph:
    vs = range(1, cfg.vertices + 1)
    edges = [(i, j) for i in vs for j in vs if i < j and rng.random() < cfg.density]
    return Graph.from_edges(edges, vs)


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    tally = Counter({"necessary condition holds": 0, "edge-inserting trace found": 0,
                     "rejected": 0})
    lengths = Counter()
    for _ in range(cfg.trials):
        g = random_graph(rng, cfg)
        trace = combinatorial_decompose(g, cfg.dimension)
        assert not replay(trace)[-1].edges
        lengths[len(trace.atoms)] += 1
        if necessary_condition(trace).holds:
            tally["necessary condition holds"] += 1
            if search_edge_inserting(g, cfg.dimension) is not None:
                tally["edge-inserting trace found"] += 1
        else:
            tally["rejected"] += 1
    print(f"{cfg.trials} graphs, n={cfg.vertices}, p={cfg.density}, d={cfg.dimension}")
    for k, v in sorted(tally.items()):
        print(f"  {k}: {v}")
    print("  atoms per trace:", dict(sorted(lengths.items())))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    main(Config(**vars(ap.parse_args())))
