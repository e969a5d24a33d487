"""Maps between timed words, compact timed words and state sequences."""

import random
from fractions import Fraction

import pytest

from mtlsem.encodings import (
    block_index_at,
    block_position,
    compact,
    compact_lasso,
    stutter_free_preimages,
    to_tss,
    uncompact,
    word_position,
    word_to_tss,
)
from mtlsem.errors import OutOfDomainError, SeamStutterError
from mtlsem.structures import (
    CompactTimedWord,
    is_action_based,
    lasso,
    validate_compact,
    validate_tss,
    word,
)

RHO1 = word([("a", "0"), ("b", "1"), ("a", "1"), ("c", "3.3")])
RHO2 = word([("a", "0"), ("a", "1"), ("b", "1"), ("c", "3.3")])

KAPPA1 = validate_tss([
    [["a"], "[0,0]"],
    [[], "(0,1)"],
    [["a", "b"], "[1,1]"],
    [[], "(1,3.3)"],
    [["c"], "[3.3,3.3]"],
])


def cblocks(cw):
    return [(acts, t) for acts, t in cw.blocks]


class TestCompact:
    def test_swap_pair_images(self):
        assert cblocks(compact(RHO1)) == [
            (("a",), 0), (("b", "a"), 1), (("c",), Fraction(33, 10))]
        assert cblocks(compact(RHO2)) == [
            (("a",), 0), (("a", "b"), 1), (("c",), Fraction(33, 10))]

    def test_strictly_monotone_gives_singletons(self):
        cw = compact(word([("a", 0), ("b", 1), ("c", 2)]))
        assert all(len(acts) == 1 for acts, _ in cw.blocks)

    def test_uncompact_examples(self):
        assert uncompact(compact(RHO1)) == RHO1
        assert uncompact(validate_compact([(("a",), 0)])) == word([("a", 0)])
        assert uncompact(validate_compact([(("a", "b", "c"), 0)])) == word(
            [("a", 0), ("b", 0), ("c", 0)])

    def test_roundtrips_fuzzed(self):
        rng = random.Random(21)
        for _ in range(300):
            events = []
            t = Fraction(0)
            for _ in range(rng.randint(1, 8)):
                events.append((rng.choice("abc"), t))
                t += rng.choice([Fraction(0), Fraction(1, 2), Fraction(1)])
            w = word(events)
            cw = compact(w)
            assert uncompact(cw) == w
            assert compact(uncompact(cw)) == cw


class TestToTss:
    def test_shared_image(self):
        assert to_tss(compact(RHO1)) == KAPPA1
        assert to_tss(compact(RHO2)) == KAPPA1
        assert word_to_tss(RHO1) == word_to_tss(RHO2) == KAPPA1

    def test_single_block(self):
        got = to_tss(validate_compact([(("a",), 0)]))
        assert got == validate_tss([[["a"], "[0,0]"]])

    def test_always_action_based_and_odd(self):
        rng = random.Random(22)
        for _ in range(200):
            events = []
            t = Fraction(0)
            for _ in range(rng.randint(1, 8)):
                events.append((rng.choice("abc"), t))
                t += rng.choice([Fraction(0), Fraction(1)])
            k = word_to_tss(word(events))
            assert is_action_based(k)
            assert len(k) % 2 == 1
            assert len(k) == 2 * len(compact(word(events))) - 1

    def test_permutation_collapse(self):
        rng = random.Random(23)
        for _ in range(200):
            events = []
            t = Fraction(0)
            for _ in range(rng.randint(2, 8)):
                events.append((rng.choice("abc"), t))
                t += rng.choice([Fraction(0), Fraction(0), Fraction(1)])
            w = word(events)
            cw = compact(w)
            k = rng.randrange(len(cw.blocks))
            acts = list(cw.blocks[k][0])
            rng.shuffle(acts)
            shuffled = CompactTimedWord(
                cw.blocks[:k] + ((tuple(acts), cw.blocks[k][1]),) + cw.blocks[k + 1:])
            assert word_to_tss(uncompact(shuffled)) == word_to_tss(w)


class TestSurjectivityRecipe:
    def test_recipe_reproduces_element(self):
        # build an action-based sequence, read blocks off alphabetically, map back
        rng = random.Random(24)
        for _ in range(200):
            t = Fraction(0)
            blocks = []
            for _ in range(rng.randint(1, 5)):
                syms = rng.sample("abcd", rng.randint(1, 3))
                blocks.append((tuple(sorted(syms)), t))
                t += rng.choice([Fraction(1, 2), Fraction(1), Fraction(2)])
            cw = validate_compact(blocks)
            kappa = to_tss(cw)
            rebuilt = validate_compact(
                [(tuple(sorted(props)), iv.lo.value)
                 for props, iv in kappa.steps if props])
            assert to_tss(rebuilt) == kappa


class TestIndexHelpers:
    def test_word_position(self):
        cw = compact(RHO1)
        assert word_position(cw, 0, 0) == 0
        assert word_position(cw, 1, 0) == 1
        assert word_position(cw, 1, 1) == 2
        assert word_position(cw, 2, 0) == 3

    def test_block_position(self):
        cw = compact(RHO1)
        assert block_position(cw, 3) == (2, 0)
        assert block_position(cw, 0) == (0, 0)

    def test_mutually_inverse_and_consistent(self):
        rng = random.Random(25)
        for _ in range(200):
            events = []
            t = Fraction(0)
            for _ in range(rng.randint(1, 8)):
                events.append((rng.choice("abc"), t))
                t += rng.choice([Fraction(0), Fraction(1)])
            w = word(events)
            cw = compact(w)
            for i in range(len(w)):
                k, j = block_position(cw, i)
                assert word_position(cw, k, j) == i
                assert cw.blocks[k][0][j] == w.actions[i]
                assert cw.blocks[k][1] == w.times[i]

    def test_out_of_range(self):
        cw = compact(RHO1)
        with pytest.raises(IndexError):
            word_position(cw, 1, 2)
        with pytest.raises(IndexError):
            block_position(cw, 4)

    def test_block_index_at(self):
        cw = compact(RHO1)
        assert block_index_at(cw, 1) == 1
        assert block_index_at(cw, "1/2") is None
        assert block_index_at(cw, 0) == 0
        with pytest.raises(OutOfDomainError):
            block_index_at(cw, 4)


class TestLassoEncodings:
    def test_seam_stutter_rejected(self):
        l = lasso(word([("a", 0)]), ["b"], ["0"], "1")
        with pytest.raises(SeamStutterError):
            compact_lasso(l)

    def test_blockwise_period(self):
        l = lasso(RHO1, ["c", "a", "b"], ["1/2", "1", "1"], "2")
        cl = compact_lasso(l)
        assert cblocks(cl.prefix) == cblocks(compact(RHO1))
        assert cl.period_blocks == ((("c",), Fraction(1, 2)), (("a", "b"), Fraction(1)))


class TestPreimages:
    def test_swap_image_has_two_stutter_free_preimages(self):
        kappa = validate_tss([
            [["a"], "[0,0]"], [[], "(0,1)"], [["a", "b"], "[1,1]"]])
        got = {w.events for w in stutter_free_preimages(kappa)}
        assert got == {
            (("a", Fraction(0)), ("a", Fraction(1)), ("b", Fraction(1))),
            (("a", Fraction(0)), ("b", Fraction(1)), ("a", Fraction(1))),
        }
