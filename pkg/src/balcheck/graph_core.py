"""Simple-graph substrate.

Vertices are dense integers 0..n-1.  Adjacency is stored as one bitmask per
vertex, which keeps the exhaustive search kernels (maximal cliques, chordless
cycles) fast enough for desk-scale instances (n up to roughly 100).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

__all__ = [
    "Graph",
    "Hole",
    "bits",
    "cycle_graph",
    "complete_graph",
    "cycle_with_cliques",
    "is_diamond_free",
    "maximal_cliques",
    "induced_subgraph",
    "find_hole",
    "is_connected",
    "canonical_form",
    "are_isomorphic",
]


def bits(mask: int):
    """Iterate the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError(f"neighbor out of range at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric on ({v},{u})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


@dataclass(frozen=True)
class Hole:
    """A chordless cycle, stored as its cyclic vertex sequence.

    Canonical form: starts at the smallest vertex and runs toward the smaller
    of that vertex's two cycle neighbors.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def verify(self, g: Graph) -> bool:
        """Re-check the hole against ``g``: distinct vertices, length >= 4,
        consecutive pairs adjacent, all other pairs non-adjacent."""
        vs = self.vertices
        k = len(vs)
        if k < 4 or len(set(vs)) != k:
            return False
        for i, u in enumerate(vs):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if g.has_edge(u, vs[j]) != consecutive:
                    return False
        return True


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_with_cliques(n: int, cliques) -> Graph:
    """Cycle 0-1-..-(n-1)-0 with each given vertex set turned into a clique."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    for c in cliques:
        edges.extend(itertools.combinations(sorted(c), 2))
    return Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))


def is_diamond_free(g: Graph) -> bool:
    """True iff no 4 vertices induce K_4 minus an edge.

    Equivalent test: the common neighborhood of every edge is a clique.
    """
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u]):
            if v <= u:
                continue
            common = adj[u] & adj[v]
            for w in bits(common):
                if common & ~adj[w] & ~(1 << w):
                    return False
    return True


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, canonically sorted by vertex tuple.

    Bron-Kerbosch with pivoting on bitmasks.  Isolated vertices come out as
    singleton cliques.
    """
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (p & adj[u]).bit_count())
        cand = p & ~adj[pivot]
        for v in bits(cand):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    masks = sorted(set(out), key=lambda m: tuple(bits(m)))
    return [frozenset(bits(m)) for m in masks]


def induced_subgraph(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by vertex set ``s``, densely re-indexed.

    Returns ``(h, old_ids)`` where new vertex ``i`` corresponds to
    ``old_ids[i]`` in ``g`` (``old_ids`` ascending).
    """
    old = sorted(set(s))
    for v in old:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(old)}
    sel = 0
    for v in old:
        sel |= 1 << v
    adj = []
    for v in old:
        mask = 0
        for u in bits(g.adj[v] & sel):
            mask |= 1 << pos[u]
        adj.append(mask)
    return Graph(len(old), tuple(adj)), tuple(old)


def _parity_ok(length: int, parity: str) -> bool:
    if parity == "any":
        return True
    if parity == "odd":
        return length % 2 == 1
    if parity == "even":
        return length % 2 == 0
    raise ValueError(f"unknown parity filter {parity!r}")


def find_hole(g: Graph, parity: str = "any", min_length: int = 4) -> Hole | None:
    """Exhaustive chordless-cycle search.

    Returns the shortest hole matching the parity filter, breaking ties by
    the lexicographically least canonical vertex sequence, or None if the
    graph has no such hole.  Worst-case exponential; intended for desk-scale
    inputs.
    """
    if min_length < 4:
        raise ValueError("holes have at least 4 vertices")
    if parity not in ("any", "odd", "even"):
        raise ValueError(f"unknown parity filter {parity!r}")
    adj = g.adj
    n = g.n
    best: tuple[int, ...] | None = None
    best_len = n + 1

    def grow(path: list[int], banned: int) -> None:
        nonlocal best, best_len
        last = path[-1]
        k = len(path)
        v0 = path[0]
        cand = adj[last] & ~banned
        close = cand & adj[v0]
        if k >= 3 and k + 1 >= min_length and _parity_ok(k + 1, parity):
            for u in bits(close):
                if path[1] < u:
                    if k + 1 < best_len or (
                        k + 1 == best_len and best is not None and tuple(path) + (u,) < best
                    ):
                        best = tuple(path) + (u,)
                        best_len = k + 1
        if k + 2 > best_len:
            return
        for u in bits(cand & ~adj[v0]):
            path.append(u)
            grow(path, banned | adj[last] | (1 << u))
            path.pop()

    for v0 in range(n):
        gt = -1 << (v0 + 1)
        for v1 in bits(adj[v0] & gt):
            grow([v0, v1], ((1 << v0) | (1 << v1)) | ~gt)
    return Hole(best) if best is not None else None


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


# --- canonical labeling (degree-refined backtracking) ---------------------


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sig = []
        for v in range(n):
            counts: dict[int, int] = {}
            for u in bits(adj[v]):
                counts[colors[u]] = counts.get(colors[u], 0) + 1
            sig.append((colors[v], tuple(sorted(counts.items()))))
        order = sorted(set(sig))
        new = [order.index(s) for s in sig]
        if new == colors:
            return colors
        colors = new


def _adjacency_key(adj: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    # perm[i] = old vertex placed at new position i
    pos = {v: i for i, v in enumerate(perm)}
    key = []
    for v in perm:
        mask = 0
        for u in bits(adj[v]):
            mask |= 1 << pos[u]
        key.append(mask)
    return tuple(key)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Canonical adjacency key: equal for two graphs iff they are isomorphic.

    Color refinement plus backtracking over the first non-singleton class;
    fine for the small, highly structured graphs this library handles.
    """
    n = g.n
    if n == 0:
        return ()
    best: tuple[int, ...] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g.adj, colors)
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            key = _adjacency_key(g.adj, perm)
            if best is None or key < best:
                best = key
            return
        for v in classes[target]:
            branched = [2 * c + (1 if u == v else 0) for u, c in enumerate(colors)]
            search(branched)

    search([0] * n)
    assert best is not None
    return best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)
