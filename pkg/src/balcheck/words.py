"""Cyclic-word calculus for multisuns.

Words are sequences over a small alphabet: a hub mark (rendered ``*``), a
blank for unlabeled rim vertices (rendered ``.``), and proper letters
``a``..``z``, one per inscribed clique.  Two reductions act on them:

* blank-pair deletion (two adjacent blanks vanish), applied cyclically;
* the dihedral action on the cycle plus renaming of proper letters.

A cyclic word is an equivalence class under both; we store the class as a
canonical representative (lexicographically least rendering over all
rotations and reflections of the fully reduced word, with proper letters
renamed by first occurrence, under the order hub < blank < a < b < ...).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import multisun as _ms

__all__ = [
    "HUB",
    "BLANK",
    "FIRST_LETTER",
    "proper_letter",
    "is_proper",
    "letter_char",
    "LinearWord",
    "CyclicWord",
    "pattern",
    "canonicalize",
    "cyclic_equal",
    "opposite",
    "NotSWordError",
    "OrderUndefinedError",
    "SWordReport",
    "is_s_word",
    "word_of_multisun",
    "rim_reading_key",
    "standard_multisun",
    "project",
    "induced_order",
    "JumpReport",
    "find_jump",
    "ParityReport",
    "check_parity",
    "SunwordReport",
    "is_sunword",
]

HUB = 0
BLANK = 1
FIRST_LETTER = 2


def proper_letter(i: int) -> int:
    if not 0 <= i < 26:
        raise ValueError("proper letters limited to a..z")
    return FIRST_LETTER + i


def is_proper(tok: int) -> bool:
    return tok >= FIRST_LETTER


def letter_char(tok: int) -> str:
    if tok == HUB:
        return "*"
    if tok == BLANK:
        return "."
    return chr(ord("a") + tok - FIRST_LETTER)


def _render_runs(runs) -> str:
    return "".join(letter_char(t) + (str(e) if e > 1 else "") for t, e in runs)


@dataclass(frozen=True)
class LinearWord:
    """Word in standard run form: adjacent runs carry distinct letters and
    every exponent is at least 1."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = None
        for tok, exp in self.runs:
            if exp < 1:
                raise ValueError("run exponents must be positive")
            if tok < 0 or tok >= FIRST_LETTER + 26:
                raise ValueError(f"bad letter token {tok}")
            if tok == prev:
                raise ValueError("adjacent runs must differ (not standard form)")
            prev = tok

    @classmethod
    def of_runs(cls, runs) -> "LinearWord":
        out: list[list[int]] = []
        for tok, exp in runs:
            if exp < 1:
                raise ValueError("run exponents must be positive")
            if out and out[-1][0] == tok:
                out[-1][1] += exp
            else:
                out.append([tok, exp])
        return cls(tuple((t, e) for t, e in out))

    @classmethod
    def of_letters(cls, seq) -> "LinearWord":
        return cls.of_runs((t, 1) for t in seq)

    def expand(self) -> tuple[int, ...]:
        out: list[int] = []
        for tok, exp in self.runs:
            out.extend([tok] * exp)
        return tuple(out)

    def __len__(self) -> int:
        return sum(e for _, e in self.runs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(t for t, _ in self.runs)

    @property
    def proper_letters(self) -> tuple[int, ...]:
        return tuple(sorted({t for t, _ in self.runs if is_proper(t)}))

    def __str__(self) -> str:
        return _render_runs(self.runs)


def pattern(w: LinearWord) -> LinearWord:
    """Reduce every blank run modulo 2 and renormalize; idempotent."""
    runs = list(w.runs)
    while True:
        out: list[list[int]] = []
        changed = False
        for tok, exp in runs:
            if tok == BLANK:
                new = exp % 2
                if new != exp:
                    changed = True
                exp = new
            if exp == 0:
                continue
            if out and out[-1][0] == tok:
                out[-1][1] += exp
                changed = True
            else:
                out.append([tok, exp])
        runs = out
        if not changed:
            return LinearWord(tuple((t, e) for t, e in runs))


def _cyclic_reduce(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Delete blank pairs until none remain, treating the word as a cycle."""
    st: list[int] = []
    for t in seq:
        if st and t == BLANK and st[-1] == BLANK:
            st.pop()
        else:
            st.append(t)
    while len(st) >= 2 and st[0] == BLANK and st[-1] == BLANK:
        st = st[1:-1]
    return tuple(st)


def _rename_first_occurrence(seq: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for t in seq:
        if is_proper(t):
            if t not in mapping:
                mapping[t] = FIRST_LETTER + len(mapping)
            out.append(mapping[t])
        else:
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class CyclicWord:
    """Equivalence class of words under cyclic blank-pair deletion and the
    dihedral action with letter renaming; stored as the canonical
    representative.  Build via :func:`canonicalize`."""

    word: LinearWord

    def expand(self) -> tuple[int, ...]:
        return self.word.expand()

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        return self.word.runs

    @property
    def proper_letters(self) -> tuple[int, ...]:
        return self.word.proper_letters

    @property
    def hub_count(self) -> int:
        return sum(e for t, e in self.runs if t == HUB)

    def __str__(self) -> str:
        return str(self.word)

    def __len__(self) -> int:
        return len(self.word)


def canonicalize(w: LinearWord) -> CyclicWord:
    seq = _cyclic_reduce(w.expand())
    n = len(seq)
    best: tuple[int, ...] | None = None
    for s in (seq, seq[::-1]):
        for r in range(n):
            cand = _rename_first_occurrence(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    if best is None:
        best = ()
    return CyclicWord(LinearWord.of_letters(best))


def cyclic_equal(u: LinearWord, v: LinearWord) -> bool:
    return canonicalize(u) == canonicalize(v)


def opposite(w: LinearWord) -> LinearWord:
    """Reverse the run list, keeping a leading hub run in front."""
    runs = w.runs
    if runs and runs[0][0] == HUB:
        return LinearWord.of_runs((runs[0],) + tuple(reversed(runs[1:])))
    return LinearWord.of_runs(tuple(reversed(runs)))


class NotSWordError(ValueError):
    """Raised when an operation requires an s-word and the input is not one."""


class OrderUndefinedError(ValueError):
    """Raised when two proper letters sit at the same minimal rim distance
    from the hub, so the induced order is not linear."""

    def __init__(self, x: int, y: int):
        super().__init__(
            f"letters {letter_char(x)} and {letter_char(y)} tie at equal distance from the hub"
        )
        self.pair = (x, y)


@dataclass(frozen=True)
class SWordReport:
    """Validation outcome of the s-word grammar, with the parsed run data
    for well-formed words."""

    ok: bool
    reason: str | None
    form: str | None  # "single" | "hub"
    run_letters: tuple[int, ...]
    run_exponents: tuple[int, ...]
    letter_sums: tuple[tuple[int, int], ...]

    @property
    def sigma_present(self) -> bool:
        return self.form == "hub"

    @property
    def s(self) -> int:
        return len(self.run_letters)


def _fail(reason: str) -> SWordReport:
    return SWordReport(False, reason, None, (), (), ())


def _hub_first(runs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    for i, (tok, _) in enumerate(runs):
        if tok == HUB:
            return runs[i:] + runs[:i]
    return runs


def is_s_word(c: CyclicWord) -> SWordReport:
    """Decide membership in the s-word grammar.

    Form "single": one proper letter, no hub, a single run with an odd
    exponent of at least 3.  Form "hub": exactly one hub mark, at least two
    proper letters, runs alternating proper/blank with adjacent run letters
    distinct, every proper letter's total exponent even, and an odd number
    of proper runs (equivalently an even blank count).
    """
    runs = c.runs
    if not runs:
        return _fail("empty-word")
    letters = c.proper_letters
    hubs = c.hub_count
    sums: dict[int, int] = {}
    for tok, exp in runs:
        if is_proper(tok):
            sums[tok] = sums.get(tok, 0) + exp
    sum_items = tuple(sorted(sums.items()))

    if hubs == 0:
        if not letters:
            return _fail("no-proper-letter")
        if len(letters) >= 2:
            return _fail("proper-letters-without-hub")
        if len(runs) != 1:
            return _fail("single-letter-with-gaps")
        lam = runs[0][1]
        if lam % 2 == 0:
            return _fail("single-letter-even-exponent")
        if lam == 1:
            return _fail("single-letter-trivial")
        return SWordReport(True, None, "single", (runs[0][0],), (lam,), sum_items)

    if hubs > 1:
        return _fail("multiple-hub-marks")
    if not letters:
        return _fail("no-proper-letter")
    if len(letters) < 2:
        return _fail("hub-with-single-letter")

    seq = _hub_first(runs)
    if seq[0] != (HUB, 1):
        return _fail("multiple-hub-marks")
    body = seq[1:]
    # expect proper, then (blank^1, proper)* to the end
    run_letters: list[int] = []
    run_exponents: list[int] = []
    expect_proper = True
    for tok, exp in body:
        if expect_proper:
            if tok == BLANK:
                return _fail("gap-next-to-hub" if not run_letters else "double-gap")
            run_letters.append(tok)
            run_exponents.append(exp)
            expect_proper = False
        else:
            if tok != BLANK:
                return _fail("missing-gap-between-runs")
            if exp != 1:
                return _fail("double-gap")
            expect_proper = True
    if expect_proper:
        # body ended right after a blank: that blank is adjacent to the hub
        return _fail("gap-next-to-hub")
    for h in range(len(run_letters) - 1):
        if run_letters[h] == run_letters[h + 1]:
            return _fail("adjacent-runs-same-letter")
    if any(total % 2 for _, total in sum_items):
        return _fail("letter-sum-odd")
    if len(run_letters) % 2 == 0:
        return _fail("even-run-count")
    return SWordReport(True, None, "hub", tuple(run_letters), tuple(run_exponents), sum_items)


# --- multisun <-> word ------------------------------------------------------


def _labels(m: "_ms.Multisun") -> list[int]:
    """Canonical vertex labeling: hub mark for vertices in more than one
    inscribed clique, a proper letter per clique, blank otherwise."""
    memberships: list[list[int]] = [[] for _ in range(m.graph.n)]
    for i, c in enumerate(m.cliques):
        for v in c:
            memberships[v].append(i)
    out = []
    for v in range(m.graph.n):
        ms = memberships[v]
        if not ms:
            out.append(BLANK)
        elif len(ms) == 1:
            out.append(proper_letter(ms[0]))
        else:
            out.append(HUB)
    return out


def word_of_multisun(m: "_ms.Multisun") -> CyclicWord:
    """Cyclic word of the rim reading under the canonical labeling."""
    lab = _labels(m)
    return canonicalize(LinearWord.of_letters(lab[v] for v in m.rim))


def rim_reading_key(m: "_ms.Multisun") -> tuple[int, ...]:
    """Dihedral-and-renaming canonical key of the full (unreduced) rim
    reading.  For multisuns whose multi-clique vertices are at most the hub,
    equal keys mean isomorphic multisuns."""
    lab = _labels(m)
    seq = tuple(lab[v] for v in m.rim)
    best: tuple[int, ...] | None = None
    for s in (seq, seq[::-1]):
        for r in range(len(s)):
            cand = _rename_first_occurrence(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


def _standard_expansion(c: CyclicWord) -> tuple[int, ...]:
    """Rim labeling of the standard realization of a hub word: hub, two
    blanks, the body with a blank pair inserted between equal adjacent
    proper letters, two closing blanks."""
    seq = c.expand()
    if seq.count(HUB) != 1:
        raise ValueError("standard expansion needs exactly one hub mark")
    i = seq.index(HUB)
    body = seq[i + 1 :] + seq[:i]
    out = [HUB, BLANK, BLANK]
    prev: int | None = None
    for t in body:
        if is_proper(t) and t == prev:
            out.extend((BLANK, BLANK))
        out.append(t)
        prev = t
    out.extend((BLANK, BLANK))
    return tuple(out)


def standard_multisun(c: CyclicWord) -> "_ms.Multisun":
    """The minimal multisun realizing an s-word.

    Single-letter form [a^lam]: a 3*lam-cycle with one inscribed clique on
    every third vertex.  Hub form: the hub at vertex 0, every clique made of
    its letter's vertices plus the hub.
    """
    rep = is_s_word(c)
    if not rep.ok:
        raise NotSWordError(f"not an s-word: {rep.reason}")
    if rep.form == "single":
        lam = rep.run_exponents[0]
        n = 3 * lam
        cliques = [range(0, n, 3)]
    else:
        seq = _standard_expansion(c)
        n = len(seq)
        by_letter: dict[int, list[int]] = {}
        for pos, tok in enumerate(seq):
            if is_proper(tok):
                by_letter.setdefault(tok, []).append(pos)
        cliques = [[0] + by_letter[x] for x in sorted(by_letter)]
    g = _ms.graph_for_rim(n, cliques)
    m = _ms.recognize_multisun(g)
    if m is None:
        raise AssertionError("standard realization failed to recognize")
    return m


def project(c: CyclicWord, drop) -> CyclicWord:
    """Set the dropped proper letters to blanks; when only one proper letter
    survives, the hub mark is renamed to it.  Defined for s-words with at
    least two proper letters and a proper nonempty drop set."""
    rep = is_s_word(c)
    if not rep.ok:
        raise NotSWordError(f"not an s-word: {rep.reason}")
    letters = set(c.proper_letters)
    if len(letters) < 2:
        raise ValueError("projection undefined for single-letter words")
    dropset = set(drop)
    if not dropset:
        raise ValueError("drop set is empty")
    if not dropset <= letters:
        raise ValueError("drop set contains letters not in the word")
    if dropset == letters:
        raise ValueError("cannot drop every proper letter")
    survivors = letters - dropset
    hub_target = HUB if len(survivors) > 1 else next(iter(survivors))
    out = []
    for t in c.expand():
        if t in dropset:
            out.append(BLANK)
        elif t == HUB:
            out.append(hub_target)
        else:
            out.append(t)
    return canonicalize(LinearWord.of_letters(out))


def induced_order(c: CyclicWord) -> tuple[int, ...]:
    """Rank the letters of a hub word by minimal rim distance to the hub in
    its standard realization: result[0] is the hub, result[k] the letter of
    rank k.  Raises OrderUndefinedError on a tie."""
    v = _standard_expansion(c)
    n = len(v)
    dmin: dict[int, int] = {}
    for i, t in enumerate(v):
        if is_proper(t):
            d = min(i, n - i)
            if d < dmin.get(t, n):
                dmin[t] = d
    if not dmin:
        raise ValueError("no proper letters to order")
    items = sorted(dmin.items(), key=lambda kv: (kv[1], kv[0]))
    for (x, dx), (y, dy) in zip(items, items[1:]):
        if dx == dy:
            raise OrderUndefinedError(x, y)
    return (HUB,) + tuple(x for x, _ in items)


@dataclass(frozen=True)
class JumpReport:
    order_defined: bool
    ranking: tuple[int, ...] | None
    jump: tuple[int, int, int] | None  # (letter, letter, position in the run cycle)
    tie: tuple[int, int] | None = None

    @property
    def is_jump_free(self) -> bool:
        return self.order_defined and self.jump is None


def find_jump(c: CyclicWord) -> JumpReport:
    """Scan cyclically consecutive run letters (hub included) for a pair
    that is not a cover pair of the induced order."""
    rep = is_s_word(c)
    if rep.ok and rep.form == "single":
        return JumpReport(True, None, None)
    if c.hub_count == 0:
        # no hub and not single form: order talk does not apply
        return JumpReport(True, None, None)
    try:
        ranking = induced_order(c)
    except OrderUndefinedError as exc:
        return JumpReport(False, None, None, tie=exc.pair)
    rank = {tok: i for i, tok in enumerate(ranking)}
    run_letters = [HUB] + [tok for tok, _ in _hub_first(c.runs) if is_proper(tok)]
    k = len(run_letters)
    for i in range(k):
        x = run_letters[i]
        y = run_letters[(i + 1) % k]
        if abs(rank[x] - rank[y]) > 1:
            return JumpReport(True, ranking, (x, y, i))
    return JumpReport(True, ranking, None)


@dataclass(frozen=True)
class ParityReport:
    ok: bool
    violation: tuple[int, int] | None  # (run position, exponent), 1-based
    detail: str | None


def check_parity(c: CyclicWord) -> ParityReport:
    """Exponent parity conditions on the hub-first run sequence: the two
    extremal runs are odd, and an interior run is odd exactly when its two
    neighbors carry different letters.  Single-letter words pass vacuously."""
    rep = is_s_word(c)
    if rep.ok and rep.form == "single":
        return ParityReport(True, None, None)
    if c.hub_count != 1:
        raise ValueError("parity conditions need a hub word")
    proper_runs = [(tok, exp) for tok, exp in _hub_first(c.runs) if is_proper(tok)]
    if not proper_runs:
        raise ValueError("parity conditions need proper letters")
    s = len(proper_runs)
    xs = [tok for tok, _ in proper_runs]
    lams = [exp for _, exp in proper_runs]
    if lams[0] % 2 == 0:
        return ParityReport(False, (1, lams[0]), "first run must have odd exponent")
    if lams[-1] % 2 == 0:
        return ParityReport(False, (s, lams[-1]), "last run must have odd exponent")
    for h in range(1, s - 1):
        want_odd = xs[h - 1] != xs[h + 1]
        if (lams[h] % 2 == 1) != want_odd:
            side = "differ" if want_odd else "coincide"
            return ParityReport(
                False,
                (h + 1, lams[h]),
                f"run {h + 1} has exponent {lams[h]} but its neighbors {side}",
            )
    return ParityReport(True, None, None)


@dataclass(frozen=True)
class SunwordReport:
    ok: bool
    reason: str | None
    s_word: SWordReport
    ranking: tuple[int, ...] | None
    tie: tuple[int, int] | None
    jump: tuple[int, int, int] | None
    parity_violation: tuple[int, int] | None


def is_sunword(c: CyclicWord) -> SunwordReport:
    """Full decision: s-word grammar, then (for hub words) a defined induced
    order, jump-freeness and the parity conditions."""
    sw = is_s_word(c)
    if not sw.ok:
        return SunwordReport(False, f"not-s-word:{sw.reason}", sw, None, None, None, None)
    if sw.form == "single":
        return SunwordReport(True, None, sw, None, None, None, None)
    jr = find_jump(c)
    if not jr.order_defined:
        return SunwordReport(False, "order-undefined", sw, None, jr.tie, None, None)
    if jr.jump is not None:
        return SunwordReport(False, "jump", sw, jr.ranking, None, jr.jump, None)
    pr = check_parity(c)
    if not pr.ok:
        return SunwordReport(False, "parity", sw, jr.ranking, None, None, pr.violation)
    return SunwordReport(True, None, sw, jr.ranking, None, None, None)
