"""Named graph families and seeded random graphs for tests and the CLI."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .errors import ValidationError
from .graph import Graph, _components_bits

# Vertex layout of the named families, used throughout the test-suite:
# bowtie: 0 is the shared vertex of triangles {0,1,2} and {0,3,4}.
# triangle_star k: 0 is the centre; triangle i is {0, 2i-1, 2i}.
# star k: 0 is the centre of K_{1,k}.


def path_graph(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def star_graph(k: int) -> Graph:
    _require(k >= 1, "star needs k >= 1 leaves")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def bowtie_graph() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def triangle_star_graph(k: int) -> Graph:
    _require(k >= 1, "triangle star needs k >= 1 triangles")
    edges = []
    for i in range(1, k + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * k + 1, edges)


def random_connected_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) made connected; deterministic per seed.

    Connectivity is forced by joining every later component to the first
    one with a random edge, so the result is a function of (n, p, seed).
    """
    _require(n >= 1, "random graph needs n >= 1")
    _require(0.0 <= p <= 1.0, "edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = Graph(n, edges)
    comps = _components_bits(g._adj, (1 << n) - 1)
    if len(comps) > 1:
        members = [[b.bit_length() - 1 for b in _bits_of(c)] for c in comps]
        for comp in members[1:]:
            edges.append((rng.choice(members[0]), rng.choice(comp)))
        g = Graph(n, edges)
    return g


def _bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def from_spec(spec: str, default_seed: int = 0) -> Graph:
    """Build a graph from a CLI spec string like ``cycle:5``.

    Supported: path:N, cycle:N, complete:N, star:K, bowtie,
    triangle_star:K, random_connected:N,P[,SEED].
    """
    kind, _, argtext = spec.partition(":")
    args = [a for a in argtext.split(",") if a] if argtext else []
    try:
        if kind == "path":
            return path_graph(int(args[0]))
        if kind == "cycle":
            return cycle_graph(int(args[0]))
        if kind == "complete":
            return complete_graph(int(args[0]))
        if kind == "star":
            return star_graph(int(args[0]))
        if kind == "bowtie":
            return bowtie_graph()
        if kind == "triangle_star":
            return triangle_star_graph(int(args[0]))
        if kind == "random_connected":
            n, p = int(args[0]), float(args[1])
            seed = int(args[2]) if len(args) > 2 else default_seed
            return random_connected_graph(n, p, seed)
    except (IndexError, ValueError) as exc:
        raise ValidationError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValidationError(f"unknown generator kind {kind!r}")


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on exactly n vertices.

    Exhaustive over the 2^(n(n-1)/2) edge subsets; intended for n <= 5.
    """
    _require(n >= 1, "need n >= 1")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph(n, edges)
        if len(_components_bits(g._adj, (1 << n) - 1)) == 1:
            yield g
