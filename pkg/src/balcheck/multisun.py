"""Multisuns: odd cycles with inscribed cliques.

A multisun is a diamond-free graph of odd order whose size-2 maximal cliques
form a Hamiltonian cycle (the rim); the remaining maximal cliques are the
inscribed cliques and sit on pairwise non-consecutive rim vertices.  The rim
is unique, so a recognized multisun is a certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph_core import (
    Graph,
    Hole,
    bits,
    find_hole,
    is_diamond_free,
    maximal_cliques,
)

__all__ = [
    "Multisun",
    "PathReport",
    "NConditionReport",
    "HohReport",
    "graph_for_rim",
    "recognize_multisun",
    "why_not_multisun",
    "sub_multisun",
    "rim_segments",
    "check_n_conditions",
    "is_hoh_free",
    "even_subdivide",
    "even_contract",
    "standardize",
    "decompose_hole",
]


@dataclass(frozen=True)
class Multisun:
    """A graph together with its certified rim ordering and inscribed
    cliques.  The hub is the common vertex of the inscribed cliques when
    there are at least two and they all meet."""

    graph: Graph
    rim: tuple[int, ...]
    cliques: tuple[frozenset[int], ...]
    hub: int | None

    @property
    def order(self) -> int:
        return self.graph.n

    def rim_position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.rim)}

    def clique_memberships(self) -> list[tuple[int, ...]]:
        """For each vertex, the indices of the inscribed cliques holding it."""
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for i, c in enumerate(self.cliques):
            for v in c:
                out[v].append(i)
        return [tuple(x) for x in out]


@dataclass(frozen=True)
class PathReport:
    """A rim subpath between clique vertices whose interior avoids every
    inscribed clique.  kind is "A" (both endpoints share a clique), "AB"
    (endpoints in two different cliques) or "A-hub" (one endpoint is the
    hub)."""

    kind: str
    endpoints: tuple[int, int]
    vertices: tuple[int, ...]
    cliques: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class NConditionReport:
    """Verdicts of the five inscription conditions.

    n4/n5 are None ("not applicable") when n3 fails, since they quantify
    over hub paths.  Every False verdict carries a checkable witness.
    """

    n1: bool
    n2: bool
    n3: bool
    n4: bool | None
    n5: bool | None
    hub: int | None
    n1_witness: PathReport | None = None
    n2_witness: int | None = None
    n3_witness: tuple[int, int] | None = None
    n4_witness: PathReport | None = None
    n5_witness: PathReport | None = None

    @property
    def all_pass(self) -> bool:
        return bool(self.n1 and self.n2 and self.n3 and self.n4 and self.n5)


@dataclass(frozen=True)
class HohReport:
    """Outcome of the hereditary odd-hole check: on failure, the removal set
    of clique indices and the odd hole found in that sub-multisun."""

    ok: bool
    removed: tuple[int, ...] | None
    hole: Hole | None


def graph_for_rim(n: int, cliques) -> Graph:
    """Cycle 0-..-(n-1)-0 plus the clique edge sets."""
    edges = {(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)}
    for c in cliques:
        edges.update(itertools.combinations(sorted(c), 2))
    return Graph.from_edges(n, edges)


def _recognize(g: Graph) -> tuple[Multisun | None, str | None]:
    n = g.n
    if not is_diamond_free(g):
        return None, "contains a diamond"
    if n % 2 == 0:
        return None, "order is even"
    cliques = maximal_cliques(g)
    rim_edges = [c for c in cliques if len(c) == 2]
    inscribed = [c for c in cliques if len(c) >= 3]
    if any(len(c) < 2 for c in cliques):
        return None, "isolated vertex"
    if len(rim_edges) != n:
        return None, "size-2 maximal cliques do not span a Hamiltonian cycle"
    rim_adj = [0] * n
    for c in rim_edges:
        u, v = sorted(c)
        rim_adj[u] |= 1 << v
        rim_adj[v] |= 1 << u
    if any(m.bit_count() != 2 for m in rim_adj):
        return None, "size-2 maximal cliques do not span a Hamiltonian cycle"
    # walk the 2-regular rim; it must be one cycle through all n vertices
    start = 0
    second = min(bits(rim_adj[start]))
    rim = [start, second]
    while True:
        nxt_mask = rim_adj[rim[-1]] & ~(1 << rim[-2])
        nxt = next(bits(nxt_mask))
        if nxt == start:
            break
        rim.append(nxt)
        if len(rim) > n:
            return None, "size-2 maximal cliques do not span a Hamiltonian cycle"
    if len(rim) != n:
        return None, "size-2 maximal cliques do not span a Hamiltonian cycle"
    if not inscribed:
        return None, "no inscribed cliques (bare cycle)"
    pos = {v: i for i, v in enumerate(rim)}
    for c in inscribed:
        for u, v in itertools.combinations(c, 2):
            if (pos[u] - pos[v]) % n in (1, n - 1):
                raise AssertionError("inscribed clique uses a rim edge")
    hub = None
    if len(inscribed) >= 2:
        common = set(inscribed[0])
        for c in inscribed[1:]:
            common &= c
        if len(common) == 1:
            hub = next(iter(common))
    return Multisun(g, tuple(rim), tuple(inscribed), hub), None


def recognize_multisun(g: Graph) -> Multisun | None:
    """Certify g as a multisun, or return None."""
    m, _ = _recognize(g)
    return m


def why_not_multisun(g: Graph) -> str | None:
    """Failure reason when g is not a multisun; None when it is one."""
    _, reason = _recognize(g)
    return reason


def sub_multisun(m: Multisun, removed) -> Multisun:
    """The partial subgraph with the edge sets of the indexed inscribed
    cliques deleted, re-certified on the same rim.  The empty removal set is
    allowed (identity); removing every clique is not."""
    removal = frozenset(removed)
    p = len(m.cliques)
    if not removal <= set(range(p)):
        raise ValueError("removal set contains a bad clique index")
    if len(removal) == p:
        raise ValueError("cannot remove every inscribed clique")
    if not removal:
        return m
    kept = [c for i, c in enumerate(m.cliques) if i not in removal]
    n = m.graph.n
    edges = set()
    for i, v in enumerate(m.rim):
        edges.add(tuple(sorted((v, m.rim[(i + 1) % n]))))
    for c in kept:
        edges.update(itertools.combinations(sorted(c), 2))
    g = Graph.from_edges(n, edges)
    sm = recognize_multisun(g)
    if sm is None:
        raise AssertionError("sub-multisun failed to re-certify")
    return sm


def rim_segments(m: Multisun) -> list[PathReport]:
    """Split the rim at clique vertices: each segment runs from one clique
    vertex to the next with every interior vertex in no inscribed clique."""
    member = m.clique_memberships()
    stations = [i for i, v in enumerate(m.rim) if member[v]]
    n = m.graph.n
    out: list[PathReport] = []
    for a, b in zip(stations, stations[1:] + [stations[0] + n]):
        idxs = [m.rim[i % n] for i in range(a, b + 1)]
        u, v = idxs[0], idxs[-1]
        cu, cv = set(member[u]), set(member[v])
        common = sorted(cu & cv)
        if m.hub is not None and (u == m.hub or v == m.hub):
            other = cv if u == m.hub else cu
            kind = "A-hub"
            cliq = tuple(sorted(other))
        elif common:
            kind = "A"
            cliq = (common[0],)
        else:
            kind = "AB"
            cliq = (min(cu), min(cv))
        out.append(PathReport(kind, (u, v), tuple(idxs), cliq))
    return out


def check_n_conditions(m: Multisun) -> NConditionReport:
    """Evaluate the five inscription conditions.

    N-1: every segment whose endpoints share a clique has an even vertex
    count of at least four.  N-2: every inscribed clique is odd.  N-3: the
    inscribed cliques all meet in one common vertex (the hub) and are
    otherwise disjoint.  N-4: hub segments are even.  N-5: segments joining
    two different cliques (hub excluded) are odd.
    """
    member = m.clique_memberships()
    segments = rim_segments(m)

    n1, n1_w = True, None
    for seg in segments:
        u, v = seg.endpoints
        if set(member[u]) & set(member[v]):
            if seg.vertex_count % 2 or seg.vertex_count < 4:
                n1, n1_w = False, seg
                break

    n2, n2_w = True, None
    for i, c in enumerate(m.cliques):
        if len(c) % 2 == 0:
            n2, n2_w = False, i
            break

    p = len(m.cliques)
    if p <= 1:
        n3, n3_w = True, None
    elif m.hub is not None:
        n3, n3_w = True, None
    else:
        n3 = False
        n3_w = (0, 1)
        for i, j in itertools.combinations(range(p), 2):
            if len(m.cliques[i] & m.cliques[j]) != 1:
                n3_w = (i, j)
                break

    if not n3:
        n4: bool | None = None
        n5: bool | None = None
        n4_w = n5_w = None
    else:
        n4, n4_w = True, None
        n5, n5_w = True, None
        for seg in segments:
            if seg.kind == "A-hub" and n4 and seg.vertex_count % 2:
                n4, n4_w = False, seg
            elif seg.kind == "AB" and n5 and seg.vertex_count % 2 == 0:
                n5, n5_w = False, seg

    return NConditionReport(
        n1, n2, n3, n4, n5, m.hub, n1_w, n2_w, n3_w, n4_w, n5_w
    )


def _removal_sets(p: int):
    """All removal sets except the full one, smallest first."""
    for size in range(p):
        yield from itertools.combinations(range(p), size)


def is_hoh_free(m: Multisun) -> HohReport:
    """Hereditary odd-hole check by brute force over all sub-multisuns
    (including the multisun itself)."""
    for removal in _removal_sets(len(m.cliques)):
        sm = sub_multisun(m, removal)
        h = find_hole(sm.graph, "odd", 5)
        if h is not None:
            return HohReport(False, tuple(removal), h)
    return HohReport(True, None, None)


def _rebuild(rim_vertices: list[int], cliques) -> Multisun:
    """Re-index a rim sequence densely and certify the resulting multisun."""
    relabel = {v: i for i, v in enumerate(sorted(rim_vertices))}
    n = len(rim_vertices)
    order = [relabel[v] for v in rim_vertices]
    edges = set()
    for i, v in enumerate(order):
        edges.add(tuple(sorted((v, order[(i + 1) % n]))))
    for c in cliques:
        edges.update(itertools.combinations(sorted(relabel[v] for v in c), 2))
    g = Graph.from_edges(n, edges)
    m = recognize_multisun(g)
    if m is None:
        raise ValueError(f"result is not a multisun: {why_not_multisun(g)}")
    return m


def even_subdivide(m: Multisun, rim_edge: tuple[int, int], count: int) -> Multisun:
    """Insert an even number of new vertices into one rim edge."""
    if count < 2 or count % 2:
        raise ValueError("subdivision count must be even and positive")
    u, v = rim_edge
    n = m.graph.n
    pos = m.rim_position()
    if u not in pos or v not in pos or (pos[u] - pos[v]) % n not in (1, n - 1):
        raise ValueError(f"({u},{v}) is not a rim edge")
    fresh = list(range(n, n + count))
    out: list[int] = []
    for i, w in enumerate(m.rim):
        out.append(w)
        nxt = m.rim[(i + 1) % n]
        if (w, nxt) in ((u, v), (v, u)):
            out.extend(fresh)
            fresh = []
    return _rebuild(out, m.cliques)


def even_contract(m: Multisun, path, new_length: int) -> Multisun:
    """Replace a rim subpath with unlabeled interior by a shorter path of
    the same parity between the same endpoints."""
    path = tuple(path)
    if len(path) < 5:
        raise ValueError("contraction needs a path of at least 5 vertices")
    if new_length < 2 or new_length >= len(path):
        raise ValueError("new length must be at least 2 and shorter than the path")
    if (len(path) - new_length) % 2:
        raise ValueError("contraction must preserve parity")
    n = m.graph.n
    pos = m.rim_position()
    steps = {(pos[b] - pos[a]) % n for a, b in zip(path, path[1:])}
    if steps not in ({1}, {n - 1}):
        raise ValueError("path does not follow the rim")
    member = m.clique_memberships()
    interior = path[1:-1]
    if any(member[v] for v in interior):
        raise ValueError("path interior meets an inscribed clique")
    drop = set(interior[: len(path) - new_length])
    keep = [v for v in m.rim if v not in drop]
    return _rebuild(keep, m.cliques)


def standardize(m: Multisun) -> Multisun:
    """Contract every segment to its minimal representative: 4 vertices for
    same-clique and hub segments, 3 for segments joining two cliques."""
    report = check_n_conditions(m)
    if not report.all_pass:
        raise ValueError("standardization needs the inscription conditions to hold")
    from . import words

    return words.standard_multisun(words.word_of_multisun(m))


def decompose_hole(m: Multisun, h: Hole) -> list[PathReport]:
    """Split a hole of some sub-multisun into the rim paths it traverses.

    The sub-multisun used is the one with the fewest inscribed cliques in
    which h is a hole; every inscribed clique of it then contributes exactly
    one edge to h, and cutting those edges leaves pairwise vertex-disjoint
    rim paths that partition the hole's vertex set.
    """
    from . import words

    if not words.is_sunword(words.word_of_multisun(m)).ok:
        raise ValueError("hole decomposition is defined for sunoids")
    p = len(m.cliques)
    n = m.graph.n
    host = None
    for size in range(p - 1, -1, -1):
        for removal in itertools.combinations(range(p), size):
            sm = sub_multisun(m, removal)
            if h.verify(sm.graph):
                host = (removal, sm)
                break
        if host:
            break
    if host is None:
        raise ValueError("not a hole of any sub-multisun")
    removal, _sm = host
    kept = [i for i in range(p) if i not in removal]
    pos = m.rim_position()
    vs = h.vertices
    k = len(vs)
    cut_after: list[tuple[int, int]] = []  # (index in hole, clique index)
    for i in range(k):
        u, v = vs[i], vs[(i + 1) % k]
        if (pos[u] - pos[v]) % n in (1, n - 1):
            continue
        owner = None
        for ci in kept:
            if u in m.cliques[ci] and v in m.cliques[ci]:
                owner = ci
                break
        if owner is None:
            raise AssertionError("hole edge neither on the rim nor in a kept clique")
        cut_after.append((i, owner))
    if not cut_after:
        raise AssertionError("hole with no clique edge cannot be chordless here")
    member = m.clique_memberships()
    out: list[PathReport] = []
    for (i, _ci), (j, _cj) in zip(cut_after, cut_after[1:] + [(cut_after[0][0] + k, cut_after[0][1])]):
        idxs = [vs[t % k] for t in range(i + 1, j + 1)]
        u, v = idxs[0], idxs[-1]
        cu = [c for c in member[u] if c in kept]
        cv = [c for c in member[v] if c in kept]
        common = sorted(set(cu) & set(cv))
        if common:
            out.append(PathReport("A", (u, v), tuple(idxs), (common[0],)))
        else:
            out.append(PathReport("AB", (u, v), tuple(idxs), (min(cu), min(cv))))
    return out
