import pytest

from balcheck.dyck import (
    DyckPath,
    DyckWord,
    WeightedDyckPath,
    catalan,
    dyck_to_sunword,
    enumerate_dyck,
    enumerate_sunwords,
    path_to_word,
    sunword_to_dyck,
    word_to_path,
)
from balcheck.formats import parse_word, render_word
from balcheck.words import canonicalize, is_s_word, is_sunword

FIG3B = "*a3.b2.a2.b.c2.b3.a"


def cw(text):
    return canonicalize(parse_word(text))


class TestDyckWordsAndPaths:
    def test_word_validation(self):
        with pytest.raises(ValueError):
            DyckWord("RL")
        with pytest.raises(ValueError):
            DyckWord("LLR")
        with pytest.raises(ValueError):
            DyckWord("LX")

    def test_path_validation(self):
        with pytest.raises(ValueError):
            DyckPath((0, 1, 2))  # even point count
        with pytest.raises(ValueError):
            DyckPath((0, 1, 0, -1, 0))
        with pytest.raises(ValueError):
            DyckPath((0, 2, 0))

    def test_example_path(self):
        assert word_to_path(DyckWord("LRLLRR")).heights == (0, 1, 0, 1, 2, 1, 0)

    def test_staircase(self):
        assert word_to_path(DyckWord("LLLRRR")).heights == (0, 1, 2, 3, 2, 1, 0)

    def test_round_trip_exhaustive(self):
        for n in range(7):
            for w in enumerate_dyck(n):
                assert path_to_word(word_to_path(w)) == w

    def test_peaks_include_valleys(self):
        p = word_to_path(DyckWord("LLRRLR"))  # heights 0,1,2,1,0,1,0
        assert p.is_peak(2) and p.is_peak(4)
        assert not p.is_peak(0) and not p.is_peak(6) and not p.is_peak(1)


class TestEnumerateDyck:
    def test_semilength_three_list(self):
        assert [w.steps for w in enumerate_dyck(3)] == [
            "LLLRRR", "LLRLRR", "LLRRLR", "LRLLRR", "LRLRLR",
        ]

    def test_empty(self):
        assert [w.steps for w in enumerate_dyck(0)] == [""]

    def test_counts_are_catalan(self):
        for n in range(11):
            assert len(enumerate_dyck(n)) == catalan(n)

    def test_catalan_values(self):
        assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


class TestWeightedPaths:
    def test_parity_invariant_enforced(self):
        path = word_to_path(DyckWord("LR"))
        WeightedDyckPath(path, (1, 2, 1))
        with pytest.raises(ValueError):
            WeightedDyckPath(path, (2, 2, 1))
        with pytest.raises(ValueError):
            WeightedDyckPath(path, (1, 1, 1))
        with pytest.raises(ValueError):
            WeightedDyckPath(path, (1, 2))

    def test_positive_weights_required(self):
        path = word_to_path(DyckWord("LR"))
        with pytest.raises(ValueError):
            WeightedDyckPath(path, (1, 0, 1))


class TestSunwordBijection:
    def test_fig3b_forward(self):
        wd = sunword_to_dyck(cw(FIG3B))
        assert path_to_word(wd.path).steps == "LRLLRR"
        assert wd.weights == (3, 2, 2, 1, 2, 3, 1)

    def test_minimal_two_letter(self):
        wd = sunword_to_dyck(cw("*a.b2.a"))
        assert path_to_word(wd.path).steps == "LR"
        assert wd.weights == (1, 2, 1)

    def test_single_letter_rejected(self):
        with pytest.raises(ValueError):
            sunword_to_dyck(cw("a7"))

    def test_non_sunword_rejected(self):
        with pytest.raises(ValueError):
            sunword_to_dyck(cw("*a.b"))

    def test_backward_example(self):
        c = dyck_to_sunword(WeightedDyckPath(word_to_path(DyckWord("LR")), (1, 2, 1)))
        assert c == cw("*a.b2.a")

    def test_round_trip_over_enumeration(self):
        for word in enumerate_sunwords(9, 4):
            if is_s_word(word).form != "hub":
                continue
            wd = sunword_to_dyck(word)
            assert dyck_to_sunword(wd) == word

    def test_images_satisfy_peak_parity(self):
        for word in enumerate_sunwords(7, 4):
            if is_s_word(word).form != "hub":
                continue
            wd = sunword_to_dyck(word)
            for i, w in enumerate(wd.weights):
                assert (w % 2 == 0) == wd.path.is_peak(i)


class TestEnumerateSunwords:
    def test_small_family(self):
        words = enumerate_sunwords(3, 2)
        rendered = sorted(render_word(w) for w in words)
        assert rendered == ["*a.b2.a", "a3", "a5"]

    def test_all_pass_the_decider(self):
        for word in enumerate_sunwords(7, 4):
            assert is_sunword(word).ok

    def test_letter_sums_even(self):
        for word in enumerate_sunwords(7, 4):
            rep = is_s_word(word)
            assert rep.ok
            assert all(total % 2 == 0 for _, total in rep.letter_sums) or rep.form == "single"

    def test_minimal_weight_shapes(self):
        # every semilength-3 path carries exactly one minimal weight vector,
        # but a cyclic word equals its opposite, so the two chiral paths
        # (LRLLRR and LLRRLR) realize one and the same sunword: 3 palindromic
        # paths + 1 mirror pair out of Catalan(3) = 5 paths
        words = enumerate_sunwords(7, 2)
        shapes = [w for w in words if is_s_word(w).form == "hub" and is_s_word(w).s == 7]
        assert len(shapes) == 4
        images = {path_to_word(sunword_to_dyck(w).path).steps for w in shapes}
        assert images == {"LLLRRR", "LLRLRR", "LRLLRR", "LRLRLR"}

    def test_low_cap_has_no_hub_words(self):
        with pytest.raises(ValueError):
            enumerate_sunwords(3, 1)

    def test_deterministic_and_duplicate_free(self):
        a = enumerate_sunwords(7, 3)
        b = enumerate_sunwords(7, 3)
        assert a == b
        assert len({w.expand() for w in a}) == len(a)
