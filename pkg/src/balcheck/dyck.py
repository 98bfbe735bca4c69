"""Dyck words, Dyck paths, evenly weighted paths, and the bijection with
hub-form sunwords.

A sunword with hub and run letters x_1..x_s maps to the lattice path whose
j-th ordinate is rank(x_{j+1}) - 1 in the induced letter order, weighted by
the run exponents.  Jump-freeness makes the ordinates a Dyck path (unit
steps, endpoints at zero) and the exponent parity conditions make the
weights even exactly at positions whose two neighbors share an ordinate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import words as W

__all__ = [
    "DyckWord",
    "DyckPath",
    "WeightedDyckPath",
    "catalan",
    "word_to_path",
    "path_to_word",
    "enumerate_dyck",
    "sunword_to_dyck",
    "dyck_to_sunword",
    "enumerate_sunwords",
]


@dataclass(frozen=True)
class DyckWord:
    """Balanced word over {L, R}: equal counts, no prefix with more R's."""

    steps: str

    def __post_init__(self):
        depth = 0
        for ch in self.steps:
            if ch == "L":
                depth += 1
            elif ch == "R":
                depth -= 1
            else:
                raise ValueError(f"bad step {ch!r}")
            if depth < 0:
                raise ValueError("prefix with more R's than L's")
        if depth != 0:
            raise ValueError("unbalanced step counts")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


@dataclass(frozen=True)
class DyckPath:
    """Nonnegative lattice ordinates h_0..h_2n with unit steps and
    h_0 = h_2n = 0."""

    heights: tuple[int, ...]

    def __post_init__(self):
        hs = self.heights
        if not hs or len(hs) % 2 == 0:
            raise ValueError("a path on 2n steps has 2n+1 points")
        if hs[0] != 0 or hs[-1] != 0:
            raise ValueError("path must start and end at height 0")
        for a, b in zip(hs, hs[1:]):
            if abs(a - b) != 1:
                raise ValueError("steps must change height by exactly 1")
        if min(hs) < 0:
            raise ValueError("path dips below zero")

    @property
    def semilength(self) -> int:
        return len(self.heights) // 2

    def is_peak(self, i: int) -> bool:
        """True when the neighbors of point i share an ordinate (this covers
        both local maxima and local minima); endpoints are never peaks."""
        if i <= 0 or i >= len(self.heights) - 1:
            return False
        return self.heights[i - 1] == self.heights[i + 1]


@dataclass(frozen=True)
class WeightedDyckPath:
    """Dyck path with positive weights, even exactly at the peaks."""

    path: DyckPath
    weights: tuple[int, ...]

    def __post_init__(self):
        hs = self.path.heights
        if len(self.weights) != len(hs):
            raise ValueError("one weight per path point")
        for i, w in enumerate(self.weights):
            if w < 1:
                raise ValueError("weights must be positive")
            if (w % 2 == 0) != self.path.is_peak(i):
                raise ValueError(
                    f"weight {w} at position {i} violates the peak parity rule"
                )


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def word_to_path(w: DyckWord) -> DyckPath:
    hs = [0]
    for ch in w.steps:
        hs.append(hs[-1] + (1 if ch == "L" else -1))
    return DyckPath(tuple(hs))


def path_to_word(p: DyckPath) -> DyckWord:
    steps = "".join(
        "L" if b > a else "R" for a, b in zip(p.heights, p.heights[1:])
    )
    return DyckWord(steps)


def enumerate_dyck(n: int) -> list[DyckWord]:
    """All Dyck words of semilength n in lexicographic order (L < R);
    Catalan(n) of them."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    out: list[DyckWord] = []

    def build(prefix: list[str], opens: int, closes: int) -> None:
        if opens == n and closes == n:
            out.append(DyckWord("".join(prefix)))
            return
        if opens < n:
            prefix.append("L")
            build(prefix, opens + 1, closes)
            prefix.pop()
        if closes < opens:
            prefix.append("R")
            build(prefix, opens, closes + 1)
            prefix.pop()

    build([], 0, 0)
    return out


def _directional_runs(c: "W.CyclicWord") -> list[list[tuple[int, int]]]:
    """The two hub-first proper-run sequences (forward and reversed)."""
    runs = [r for r in W._hub_first(c.runs) if W.is_proper(r[0])]
    return [runs, list(reversed(runs))]


def sunword_to_dyck(c: "W.CyclicWord") -> WeightedDyckPath:
    """Map a hub-form sunword to its evenly weighted Dyck path.

    Of the two reading directions, the one giving the lexicographically
    least (ordinates, weights) pair is returned, so the image is canonical.
    """
    report = W.is_sunword(c)
    if not report.ok:
        raise W.NotSWordError(f"not a sunword: {report.reason}")
    if report.s_word.form != "hub":
        raise ValueError("single-letter sunwords have no hub path image")
    ranking = report.ranking
    assert ranking is not None
    rank = {tok: i for i, tok in enumerate(ranking)}
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for runs in _directional_runs(c):
        hs = tuple(rank[tok] - 1 for tok, _ in runs)
        ws = tuple(exp for _, exp in runs)
        if best is None or (hs, ws) < best:
            best = (hs, ws)
    assert best is not None
    return WeightedDyckPath(DyckPath(best[0]), best[1])


def dyck_to_sunword(d: WeightedDyckPath) -> "W.CyclicWord":
    """Inverse map: ordinate k becomes the proper letter of rank k+1, the
    weights become run exponents, and a hub mark is prepended."""
    runs: list[tuple[int, int]] = [(W.HUB, 1)]
    for j, (h, wgt) in enumerate(zip(d.path.heights, d.weights)):
        if j:
            runs.append((W.BLANK, 1))
        runs.append((W.proper_letter(h), wgt))
    c = W.canonicalize(W.LinearWord.of_runs(runs))
    report = W.is_sunword(c)
    if not report.ok:
        raise ValueError(f"weighted path does not encode a sunword: {report.reason}")
    return c


def _weight_choices(even: bool, cap: int) -> list[int]:
    start = 2 if even else 1
    return list(range(start, cap + 1, 2))


def enumerate_sunwords(s_max: int, weight_cap: int) -> list["W.CyclicWord"]:
    """All sunwords with at most s_max runs and run exponents at most
    weight_cap, plus the single-letter family [a^lam] for odd lam up to
    weight_cap * s_max.  Generated through the Dyck-path bijection and
    validated; canonically sorted and duplicate-free."""
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    if weight_cap < 2:
        raise ValueError("weight_cap must be at least 2")
    found: dict[tuple[int, ...], W.CyclicWord] = {}
    for lam in range(3, weight_cap * s_max + 1, 2):
        c = W.canonicalize(W.LinearWord.of_runs([(W.proper_letter(0), lam)]))
        assert W.is_sunword(c).ok
        found[c.expand()] = c
    for s in range(3, s_max + 1, 2):
        for dw in enumerate_dyck((s - 1) // 2):
            path = word_to_path(dw)
            choice_lists = [
                _weight_choices(path.is_peak(i), weight_cap) for i in range(s)
            ]
            if any(not ch for ch in choice_lists):
                continue
            for ws in itertools.product(*choice_lists):
                c = dyck_to_sunword(WeightedDyckPath(path, ws))
                if W.is_sunword(c).ok:
                    found[c.expand()] = c
    return [found[k] for k in sorted(found, key=lambda t: (len(t), t))]
