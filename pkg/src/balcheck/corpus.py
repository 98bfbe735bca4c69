"""Seeded random instance generators used by the test and acceptance
suites: diamond-free graphs by diamond repair, and multisuns by random
clique placement (so that the inscription conditions are frequently
violated) mixed with realized sunwords and their subdivisions."""

from __future__ import annotations

import random

from .graph_core import Graph, bits, is_diamond_free
from .multisun import Multisun, graph_for_rim, recognize_multisun
from . import words as W
from .dyck import enumerate_sunwords

__all__ = [
    "random_diamond_free_graph",
    "diamond_free_corpus",
    "random_multisuns",
]


def _first_diamond_spine(g: Graph) -> tuple[int, int] | None:
    """An edge whose common neighborhood is not a clique, if any."""
    for u in range(g.n):
        for v in bits(g.adj[u]):
            if v <= u:
                continue
            common = g.adj[u] & g.adj[v]
            for w in bits(common):
                if common & ~g.adj[w] & ~(1 << w):
                    return u, v
    return None


def random_diamond_free_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi sample with diamond repair: delete the spine edge of each
    diamond found until none remain."""
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    }
    g = Graph.from_edges(n, edges)
    while True:
        spine = _first_diamond_spine(g)
        if spine is None:
            return g
        edges.discard(spine)
        g = Graph.from_edges(n, edges)


def diamond_free_corpus(seed: int, sizes, per_size: int) -> list[Graph]:
    """Deterministic list of diamond-free graphs across the given orders."""
    rng = random.Random(seed)
    out = []
    for n in sizes:
        for _ in range(per_size):
            p = rng.choice([0.2, 0.3, 0.45, 0.6])
            g = random_diamond_free_graph(rng, n, p)
            assert is_diamond_free(g)
            out.append(g)
    return out


def _random_placed_multisun(rng: random.Random) -> Multisun | None:
    """Inscribe random odd-or-even cliques in a random odd cycle; returns
    None when the placement fails to be a multisun."""
    n = rng.choice(range(9, 26, 2))
    p = rng.choice([1, 1, 2, 2, 3])
    share_hub = rng.random() < 0.6
    hub = 0
    cliques: list[list[int]] = []
    used = set()
    for k in range(p):
        size = rng.choice([3, 3, 3, 4, 5])
        members = [hub] if share_hub and p >= 2 else []
        attempts = 0
        while len(members) < size and attempts < 60:
            attempts += 1
            v = rng.randrange(n)
            ok = v not in members and all(
                (v - u) % n not in (1, n - 1) for u in members
            )
            if ok and (share_hub or v not in used):
                members.append(v)
        if len(members) < max(size, 3):
            return None
        used.update(members)
        cliques.append(sorted(members))
    try:
        g = graph_for_rim(n, cliques)
    except ValueError:
        return None
    return recognize_multisun(g)


def _random_subdivided_sunoid(rng: random.Random, seeds: list[W.CyclicWord]) -> Multisun:
    from .recognition import _subdivide_profile

    word = rng.choice(seeds)
    m = W.standard_multisun(word)
    parts = [0] * m.order
    for _ in range(rng.randrange(0, 4)):
        parts[rng.randrange(m.order)] += 1
    return _subdivide_profile(m, parts)


def random_multisuns(seed: int, count: int) -> list[Multisun]:
    """At least `count` multisuns mixing sunoids (realized sunwords with
    random even subdivisions) with random placements that usually violate
    one of the inscription conditions."""
    rng = random.Random(seed)
    seeds = enumerate_sunwords(5, 4)
    out: list[Multisun] = []
    while len(out) < count:
        if rng.random() < 0.45:
            out.append(_random_subdivided_sunoid(rng, seeds))
        else:
            m = _random_placed_multisun(rng)
            if m is not None:
                out.append(m)
    return out
