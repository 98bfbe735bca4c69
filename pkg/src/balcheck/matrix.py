"""0/1-matrix layer.

Rows are stored as column-index bitmasks.  The balancedness oracle works on
the bipartite representation graph (rows on one side, columns on the other,
an edge per 1-entry): a k-by-k submatrix with exactly two 1s per row and per
column that forms a single cycle is the same thing as a chordless cycle of
length 2k there, so odd-order cycle submatrices are chordless cycles of
length 2 mod 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph_core import Graph, bits

__all__ = [
    "ZeroOneMatrix",
    "OddCycleCertificate",
    "is_linear",
    "up_matrix",
    "intersection_graph",
    "is_conformal",
    "has_triangle_submatrix",
    "min_odd_cycle_order",
    "is_balanced",
    "clique_matrix",
    "verify_odd_cycle_certificate",
]


@dataclass(frozen=True)
class ZeroOneMatrix:
    """Rectangular 0/1 matrix; ``rows[i]`` is a bitmask over columns."""

    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError("negative column count")
        full = (1 << self.ncols) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {i} has entries beyond column {self.ncols - 1}")

    @classmethod
    def from_rows(cls, rows, ncols: int | None = None) -> "ZeroOneMatrix":
        """Build from an iterable of rows, each a sequence of 0/1 entries."""
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        masks = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            mask = 0
            for j, e in enumerate(r):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not 0/1")
                if e:
                    mask |= 1 << j
            masks.append(mask)
        return cls(ncols, tuple(masks))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_list(self, i: int) -> list[int]:
        return [(self.rows[i] >> j) & 1 for j in range(self.ncols)]

    def column_mask(self, j: int) -> int:
        """Bitmask over row indices having a 1 in column j."""
        mask = 0
        for i, r in enumerate(self.rows):
            if r & (1 << j):
                mask |= 1 << i
        return mask

    def submatrix(self, row_indices, col_indices) -> "ZeroOneMatrix":
        cols = list(col_indices)
        masks = []
        for i in row_indices:
            mask = 0
            for jj, j in enumerate(cols):
                if self.rows[i] & (1 << j):
                    mask |= 1 << jj
            masks.append(mask)
        return ZeroOneMatrix(len(cols), tuple(masks))


def cycle_matrix(k: int) -> ZeroOneMatrix:
    """Edge-vertex matrix of the k-cycle: row i has 1s at columns i, i+1."""
    if k < 3:
        raise ValueError("cycle matrix needs order >= 3")
    return ZeroOneMatrix(k, tuple((1 << i) | (1 << ((i + 1) % k)) for i in range(k)))


@dataclass(frozen=True)
class OddCycleCertificate:
    """Witness of unbalancedness: ``rows[i]`` meets exactly columns ``cols[i]``
    and ``cols[(i+1) % order]`` within the selected submatrix."""

    order: int
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]


def is_linear(m: ZeroOneMatrix) -> bool:
    """True iff no two rows share two or more common 1-columns."""
    rows = m.rows
    for i in range(len(rows)):
        ri = rows[i]
        for j in range(i + 1, len(rows)):
            if (ri & rows[j]).bit_count() >= 2:
                return False
    return True


def up_matrix(m: ZeroOneMatrix) -> tuple[ZeroOneMatrix, tuple[int, ...]]:
    """Row submatrix of the maximal (non-dominated) rows.

    Duplicate rows collapse to their first occurrence.  Returns the reduced
    matrix together with the kept original row indices.
    """
    kept: list[int] = []
    seen: set[int] = set()
    for i, r in enumerate(m.rows):
        if r in seen:
            continue
        if any(s != r and r | s == s for s in m.rows):
            continue
        seen.add(r)
        kept.append(i)
    return ZeroOneMatrix(m.ncols, tuple(m.rows[i] for i in kept)), tuple(kept)


def intersection_graph(m: ZeroOneMatrix) -> Graph:
    """Graph on the columns; edge iff two columns share a 1-row."""
    adj = [0] * m.ncols
    for r in m.rows:
        for j in bits(r):
            adj[j] |= r & ~(1 << j)
    return Graph(m.ncols, tuple(adj))


def _triangles(m: ZeroOneMatrix):
    """Yield (cols, rows) for each triangle submatrix: three columns plus
    three rows covering each column pair while missing the third column."""
    for c1, c2, c3 in itertools.combinations(range(m.ncols), 3):
        triple = (c1, c2, c3)
        picks = []
        for a, b in ((c1, c2), (c2, c3), (c1, c3)):
            other = [c for c in triple if c not in (a, b)][0]
            want = (1 << a) | (1 << b)
            found = None
            for i, r in enumerate(m.rows):
                if r & want == want and not r & (1 << other):
                    found = i
                    break
            if found is None:
                break
            picks.append(found)
        else:
            yield triple, tuple(picks)


def has_triangle_submatrix(m: ZeroOneMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First triangle submatrix as (columns, rows), or None."""
    for cols, rows in _triangles(m):
        return cols, rows
    return None


def is_conformal(m: ZeroOneMatrix) -> bool:
    """Gilmore's criterion: every triangle submatrix is covered by a row
    that dominates all three of its columns."""
    for (c1, c2, c3), _rows in _triangles(m):
        want = (1 << c1) | (1 << c2) | (1 << c3)
        if not any(r & want == want for r in m.rows):
            return False
    return True


def _bipartite_adj(m: ZeroOneMatrix) -> tuple[list[int], int]:
    """Representation graph: nodes 0..nrows-1 are rows, then columns."""
    nr = m.nrows
    adj = [0] * (nr + m.ncols)
    for i, r in enumerate(m.rows):
        for j in bits(r):
            adj[i] |= 1 << (nr + j)
            adj[nr + j] |= 1 << i
    return adj, nr + m.ncols


def min_odd_cycle_order(
    m: ZeroOneMatrix,
) -> tuple[int, OddCycleCertificate] | None:
    """Least odd k such that m has an order-k odd-cycle submatrix, plus a
    certificate; None iff m is balanced.

    Ground-truth oracle: exhaustive search for the shortest chordless cycle
    of length 2 mod 4 in the bipartite representation graph.
    """
    if m.ncols < 3 or m.nrows < 3:
        return None
    adj, nn = _bipartite_adj(m)
    best: tuple[int, ...] | None = None
    best_len = nn + 1

    def grow(path: list[int], banned: int) -> None:
        nonlocal best, best_len
        last = path[-1]
        k = len(path)
        v0 = path[0]
        cand = adj[last] & ~banned
        close = cand & adj[v0]
        if k >= 5 and (k + 1) % 4 == 2:
            for u in bits(close):
                if path[1] < u:
                    if k + 1 < best_len or (k + 1 == best_len and tuple(path) + (u,) < best):
                        best = tuple(path) + (u,)
                        best_len = k + 1
        if k + 2 > best_len:
            return
        for u in bits(cand & ~adj[v0]):
            path.append(u)
            grow(path, banned | adj[last] | (1 << u))
            path.pop()

    for v0 in range(nn):
        gt = -1 << (v0 + 1)
        for v1 in bits(adj[v0] & gt):
            grow([v0, v1], ((1 << v0) | (1 << v1)) | ~gt)

    if best is None:
        return None
    nr = m.nrows
    # rotate the cycle so it starts on a row node
    start = 0 if best[0] < nr else 1
    cyc = best[start:] + best[:start]
    rows = [cyc[i] for i in range(0, len(cyc), 2)]
    cols = [cyc[i] - nr for i in range(1, len(cyc), 2)]
    # row cyc[0] meets cols cyc[1] and cyc[-1]; reorder so rows[i] covers
    # cols[i] and cols[i+1]
    k = len(rows)
    rows = rows[1:] + rows[:1]
    cert = OddCycleCertificate(k, tuple(rows), tuple(cols))
    assert verify_odd_cycle_certificate(m, cert)
    return k, cert


def is_balanced(m: ZeroOneMatrix) -> bool:
    """True iff m has no odd-order cycle submatrix."""
    return min_odd_cycle_order(m) is None


def verify_odd_cycle_certificate(m: ZeroOneMatrix, cert: OddCycleCertificate) -> bool:
    """Independent check: the indexed submatrix has exactly two 1s per row
    and per column and its 1-entries form one single cycle."""
    k = cert.order
    if k < 3 or k % 2 == 0:
        return False
    if len(cert.row_indices) != k or len(cert.col_indices) != k:
        return False
    if len(set(cert.row_indices)) != k or len(set(cert.col_indices)) != k:
        return False
    if not all(0 <= i < m.nrows for i in cert.row_indices):
        return False
    if not all(0 <= j < m.ncols for j in cert.col_indices):
        return False
    sub = m.submatrix(cert.row_indices, cert.col_indices)
    for i in range(k):
        want = (1 << i) | (1 << ((i + 1) % k))
        if sub.rows[i] != want:
            return False
    return True


def clique_matrix(g: Graph) -> ZeroOneMatrix:
    """Maximal-clique incidence matrix: one row per maximal clique (canonical
    order), one column per vertex."""
    from .graph_core import maximal_cliques

    masks = []
    for c in maximal_cliques(g):
        mask = 0
        for v in c:
            mask |= 1 << v
        masks.append(mask)
    return ZeroOneMatrix(g.n, tuple(masks))
