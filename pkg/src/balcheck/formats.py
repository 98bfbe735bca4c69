"""Text formats for graphs, matrices and words, plus DOT rendering.

Graph format: an optional header line ``n=<int>``, then one edge per line
as two 0-based integers; ``#`` starts a comment; the order defaults to the
largest index plus one.

Matrix format: one row per line over the characters 0/1, all lines of equal
length; blank lines and ``#`` comments ignored.

Word grammar (bit-exact for round trips)::

    word  := run+
    run   := letter digits?
    letter := '*' | '.' | 'a'..'z'     ('*' hub mark, '.' blank)
    digits := decimal exponent >= 1 (default 1)
"""

from __future__ import annotations

from .graph_core import Graph
from .matrix import ZeroOneMatrix
from .multisun import Multisun
from . import words as W

__all__ = [
    "parse_graph",
    "render_graph",
    "parse_matrix",
    "render_matrix",
    "parse_word",
    "render_word",
    "graph_to_dot",
]


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    declared: int | None = None
    if lines and lines[0].startswith("n="):
        declared = int(lines[0][2:].strip())
        if declared < 0:
            raise ValueError("declared order must be nonnegative")
        lines = lines[1:]
    edges = []
    top = -1
    for line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise ValueError("negative vertex index")
        edges.append((u, v))
        top = max(top, u, v)
    n = declared if declared is not None else top + 1
    if top >= n:
        raise ValueError(f"vertex {top} out of range for declared order {n}")
    return Graph.from_edges(n, edges)


def render_graph(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ZeroOneMatrix:
    lines = _content_lines(text)
    rows = []
    for line in lines:
        if set(line) - {"0", "1"}:
            raise ValueError(f"matrix line with characters other than 0/1: {line!r}")
        rows.append([int(ch) for ch in line])
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows have unequal lengths")
    return ZeroOneMatrix.from_rows(rows)


def render_matrix(m: ZeroOneMatrix) -> str:
    return "\n".join("".join(str(e) for e in m.row_list(i)) for i in range(m.nrows)) + "\n"


def parse_word(text: str) -> W.LinearWord:
    s = text.strip()
    if not s:
        raise ValueError("empty word")
    runs: list[tuple[int, int]] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "*":
            tok = W.HUB
        elif ch == ".":
            tok = W.BLANK
        elif "a" <= ch <= "z":
            tok = W.proper_letter(ord(ch) - ord("a"))
        else:
            raise ValueError(f"bad character {ch!r} in word")
        i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j > i:
            exp = int(s[i:j])
            if exp < 1:
                raise ValueError("zero exponent in word")
            i = j
        else:
            exp = 1
        runs.append((tok, exp))
    return W.LinearWord.of_runs(runs)


def render_word(w) -> str:
    runs = w.runs if isinstance(w, (W.LinearWord, W.CyclicWord)) else tuple(w)
    return "".join(
        W.letter_char(t) + (str(e) if e > 1 else "") for t, e in runs
    )


_PALETTE = [
    "crimson", "royalblue", "forestgreen", "darkorange",
    "purple", "teal", "saddlebrown", "deeppink",
]


def graph_to_dot(g: Graph, m: Multisun | None = None) -> str:
    """Graphviz rendering; when a multisun certificate is supplied, rim
    edges stay black, each inscribed clique gets a color, and the hub is a
    double circle."""
    lines = ["graph balcheck {", "  node [shape=circle];"]
    clique_of_edge: dict[tuple[int, int], int] = {}
    if m is not None:
        for idx, c in enumerate(m.cliques):
            vs = sorted(c)
            for i, u in enumerate(vs):
                for v in vs[i + 1 :]:
                    clique_of_edge[(u, v)] = idx
        if m.hub is not None:
            lines.append(f"  {m.hub} [shape=doublecircle];")
    for u, v in g.edges():
        idx = clique_of_edge.get((u, v))
        if idx is None:
            lines.append(f"  {u} -- {v};")
        else:
            color = _PALETTE[idx % len(_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
