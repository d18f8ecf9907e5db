import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpeterson.partitions import (
    Partition,
    Permutation,
    all_permutations,
    complement,
    conjugate,
    partitions_in_rectangle,
)

partitions = st.lists(st.integers(1, 6), max_size=5).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


class TestPartition:
    def test_strips_trailing_zeros(self):
        assert Partition([3, 1, 0, 0]).parts == (3, 1)

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition([1, 2])

    def test_text_format(self):
        assert Partition.from_text("3,2,1").parts == (3, 2, 1)
        assert Partition.from_text("").parts == ()
        assert Partition([3, 2, 1]).to_text() == "3,2,1"

    def test_conjugate_examples(self):
        assert conjugate(Partition()) == Partition()
        assert conjugate(Partition([6, 5, 2, 1])) == Partition([4, 3, 2, 2, 2, 1])
        assert conjugate(Partition([2, 2])) == Partition([2, 2])

    @given(partitions)
    def test_conjugate_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam

    def test_complement_examples(self):
        assert complement(Partition([6, 5, 2, 1]), 4, 10) == Partition([5, 4, 1])
        assert complement(Partition.rectangle(3, 4), 3, 7) == Partition()
        assert complement(Partition(), 1, 2) == Partition([1])

    def test_complement_rejects_outside_rectangle(self):
        with pytest.raises(ValueError):
            complement(Partition([3]), 1, 3)

    @given(st.integers(1, 4), st.integers(2, 4), st.data())
    def test_complement_involution(self, d, width, data):
        lams = list(partitions_in_rectangle(d, width))
        lam = data.draw(st.sampled_from(lams))
        n = d + width
        assert complement(complement(lam, d, n), d, n) == lam

    def test_rectangle_enumeration_count(self):
        from math import comb

        for d in (1, 2, 3):
            for w in (1, 2, 3):
                got = len(list(partitions_in_rectangle(d, w)))
                assert got == comb(d + w, d)


class TestPermutation:
    def test_text_formats(self):
        assert Permutation.from_text("1423").images == (1, 4, 2, 3)
        assert Permutation.from_text("1,4,2,3").images == (1, 4, 2, 3)
        assert Permutation([1, 4, 2, 3]).to_text() == "1423"

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])

    def test_descents_and_length(self):
        w = Permutation([1, 4, 2, 3])
        assert w.descents == frozenset({2})
        assert w.length == 2
        assert Permutation.longest(4).length == 6

    def test_compose_inverse(self):
        w = Permutation([3, 1, 4, 2])
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()

    def test_cycle(self):
        assert Permutation.cycle(4, 0).images == (2, 3, 4, 1)
        assert Permutation.cycle(4, 2).images == (1, 2, 4, 3)

    def test_reduced_word_reconstructs(self):
        for w in all_permutations(4):
            word = w.reduced_word()
            assert len(word) == w.length
            rebuilt = Permutation.identity(4)
            for i in reversed(word):
                # w = s_{i_1} ... s_{i_l}: apply rightmost first
                im = list(rebuilt.images)
                pi, pj = im.index(i), im.index(i + 1)
                im[pi], im[pj] = im[pj], im[pi]
                rebuilt = Permutation(im)
            assert rebuilt == w
