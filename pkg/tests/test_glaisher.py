import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import merge_count_closed_form, merge_fully
from regpart import (
    MERGE,
    SPLIT,
    BijectionTriple,
    InvalidTriple,
    NotRegular,
    Partition,
    PartitionClass,
    TooSmall,
    count_congruent_parts,
    count_repeated_sizes,
    enumerate_class,
    factor_out,
    glaisher_forward,
    glaisher_inverse,
    insertion_map,
    insertion_preimages,
    is_member,
    validate_tuple,
)

parts_lists = st.lists(st.integers(min_value=1, max_value=12), max_size=14)


class TestForward:
    def test_golden_chain(self):
        trace = glaisher_forward(Partition([1] * 6), 2)
        assert [s.parts for s in trace.states()] == [
            (1, 1, 1, 1, 1, 1),
            (2, 1, 1, 1, 1),
            (2, 2, 1, 1),
            (2, 2, 2),
            (4, 2),
        ]
        assert trace.steps == ((MERGE, 1), (MERGE, 1), (MERGE, 1), (MERGE, 2))
        assert trace.count == 4
        assert trace.end == Partition([4, 2])

    def test_already_regular_is_identity(self):
        trace = glaisher_forward(Partition([7]), 3)
        assert trace.count == 0
        assert trace.start == trace.end == Partition([7])
        assert trace.states() == [Partition([7])]

    def test_five_ones_modulus_three(self):
        trace = glaisher_forward(Partition([1] * 5), 3)
        assert trace.end == Partition([3, 1, 1])
        assert trace.count == 1

    def test_five_ones_modulus_five(self):
        trace = glaisher_forward(Partition([1] * 5), 5)
        assert trace.end == Partition([5])
        assert trace.count == 1

    def test_empty(self):
        trace = glaisher_forward(Partition(), 2)
        assert trace.count == 0
        assert trace.end == Partition()

    def test_modulus_too_small(self):
        with pytest.raises(TooSmall):
            glaisher_forward(Partition([1]), 1)


class TestInverse:
    def test_golden_inverse(self):
        trace = glaisher_inverse(Partition([4, 2]), 2)
        assert trace.end == Partition([1] * 6)
        assert trace.count == 4

    def test_mixed_input(self):
        trace = glaisher_inverse(Partition([3, 2, 1]), 2)
        assert trace.end == Partition([3, 1, 1, 1])
        assert trace.count == 1
        assert trace.steps == ((SPLIT, 1),)

    def test_single_divisible_part(self):
        trace = glaisher_inverse(Partition([5]), 5)
        assert trace.end == Partition([1] * 5)
        assert trace.count == 1

    def test_rejects_heavy_multiplicities(self):
        with pytest.raises(NotRegular):
            glaisher_inverse(Partition([2, 2]), 2)

    def test_modulus_too_small(self):
        with pytest.raises(TooSmall):
            glaisher_inverse(Partition([2]), 0)


class TestTraceShape:
    @given(parts_lists, st.integers(min_value=2, max_value=5))
    def test_states_replay(self, parts, r):
        trace = glaisher_forward(Partition(parts), r)
        states = trace.states()
        assert len(states) == trace.count + 1
        assert states[0] == trace.start
        assert states[-1] == trace.end

    @given(parts_lists, st.integers(min_value=2, max_value=5))
    def test_forward_end_is_regular_and_size_preserved(self, parts, r):
        p = Partition(parts)
        trace = glaisher_forward(p, r)
        assert trace.end.size == p.size
        assert all(mult < r for _, mult in trace.end.runs)

    @given(parts_lists, st.integers(min_value=2, max_value=5))
    def test_each_merge_drops_length_by_modulus_minus_one(self, parts, r):
        trace = glaisher_forward(Partition(parts), r)
        assert trace.start.length - trace.end.length == (r - 1) * trace.count


@st.composite
def class_regular_inputs(draw):
    r = draw(st.integers(min_value=2, max_value=5))
    parts = draw(
        st.lists(
            st.integers(min_value=1, max_value=20).filter(lambda p: p % r != 0),
            max_size=14,
        )
    )
    return r, Partition(parts)


@given(class_regular_inputs())
def test_count_matches_closed_form(data):
    r, p = data
    assert glaisher_forward(p, r).count == merge_count_closed_form(p.parts, r)


@given(class_regular_inputs())
def test_inverse_round_trip(data):
    r, p = data
    forward = glaisher_forward(p, r)
    back = glaisher_inverse(forward.end, r)
    assert back.end == p
    assert back.count == forward.count


@given(parts_lists, st.integers(min_value=2, max_value=5), st.integers(min_value=0, max_value=10**6))
def test_confluence_random_orders(parts, r, seed):
    rng = random.Random(seed)
    end, steps = merge_fully(parts, r, rng.choice)
    trace = glaisher_forward(Partition(parts), r)
    assert trace.end.parts == end
    assert trace.count == steps


def test_bijection_small_sweep():
    for r in (2, 3):
        for n in range(13):
            cp = PartitionClass.class_regular(r)
            rp = PartitionClass.regular(r)
            images = [glaisher_forward(p, r).end for p in enumerate_class(cp, n)]
            assert all(is_member(mu, rp) for mu in images)
            assert len(set(images)) == len(images)
            assert len(images) == sum(1 for _ in enumerate_class(rp, n))


class TestFactorOut:
    def test_examples(self):
        assert factor_out(12, (3,)) == (3, 4)
        assert factor_out(45, (3, 5)) == (45, 1)
        assert factor_out(7, (3, 5)) == (1, 7)
        assert factor_out(8, (4,)) == (4, 2)

    def test_no_bases(self):
        assert factor_out(6, ()) == (1, 6)

    def test_accepts_modulus_tuple(self):
        assert factor_out(12, validate_tuple((2, 3))) == (12, 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factor_out(0, (3,))

    @given(st.integers(min_value=1, max_value=10**6), st.sampled_from([(3,), (2, 3), (3, 5), (2, 3, 7)]))
    def test_split_multiplies_back(self, value, bases):
        block, cofactor = factor_out(value, bases)
        assert block * cofactor == value
        assert all(cofactor % b != 0 for b in bases)
        # block factors entirely over the bases
        rest = block
        for b in bases:
            while rest % b == 0:
                rest //= b
        assert rest == 1


class TestInsertionMap:
    def test_insert_single_copy(self):
        mt = validate_tuple(2)
        image = insertion_map(mt, 1, BijectionTriple(Partition([1, 1, 1]), 1, 1))
        assert image == Partition([2, 1])

    def test_insert_every_copy(self):
        mt = validate_tuple(2)
        image = insertion_map(mt, 1, BijectionTriple(Partition([1] * 6), 1, 6))
        assert image == Partition([6])

    def test_pair_moduli_factorization(self):
        mt = validate_tuple((3, 5))
        image = insertion_map(mt, 1, BijectionTriple(Partition([2, 1, 1, 1]), 1, 3))
        assert image == Partition([3, 2])

    def test_residue_out_of_range(self):
        with pytest.raises(InvalidTriple):
            insertion_map(validate_tuple(3), 0, BijectionTriple(Partition([1]), 1, 1))
        with pytest.raises(InvalidTriple):
            insertion_map(validate_tuple(3), 3, BijectionTriple(Partition([1]), 1, 1))

    def test_part_with_wrong_residue(self):
        with pytest.raises(InvalidTriple):
            insertion_map(validate_tuple(3), 1, BijectionTriple(Partition([2, 1]), 2, 1))

    def test_too_many_copies(self):
        with pytest.raises(InvalidTriple):
            insertion_map(validate_tuple(3), 1, BijectionTriple(Partition([4, 1]), 1, 2))

    def test_source_must_be_class_regular(self):
        with pytest.raises(InvalidTriple):
            insertion_map(validate_tuple((3, 5)), 1, BijectionTriple(Partition([5, 1]), 1, 1))

    @given(st.sampled_from([(2,), (3,), (2, 3), (3, 4)]), st.integers(min_value=0, max_value=10))
    def test_preserves_size(self, raw, n):
        mt = validate_tuple(raw)
        family = PartitionClass.class_regular(mt)
        for lam in enumerate_class(family, n):
            for part, mult in lam.runs:
                residue = part % mt.head
                if residue == 0:
                    continue
                for copies in range(1, mult + 1):
                    image = insertion_map(mt, residue, BijectionTriple(lam, part, copies))
                    assert image.size == n


class TestInsertionPreimages:
    def test_unique_preimage_of_single_part(self):
        mt = validate_tuple(3)
        found = insertion_preimages(mt, 1, 7, Partition([7]))
        assert found == frozenset({BijectionTriple(Partition([1] * 7), 1, 7)})

    def test_inferior_target_has_one(self):
        found = insertion_preimages(validate_tuple(3), 1, 7, Partition([2, 2, 2, 1]))
        assert len(found) == 1

    def test_outside_image(self):
        assert insertion_preimages(validate_tuple(3), 2, 7, Partition([4, 3])) == frozenset()

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            insertion_preimages(validate_tuple(3), 1, 6, Partition([4, 3]))

    def test_census_total_is_the_congruent_part_count(self):
        # each preimage pins one run of one class-regular partition, so the
        # census total over all targets equals the aggregated X statistic
        mt = validate_tuple(3)
        for residue, expected in ((1, 25), (2, 10)):
            total = sum(
                len(insertion_preimages(mt, residue, 7, mu))
                for mu in enumerate_class(PartitionClass.all_partitions(), 7)
            )
            assert total == expected

    def test_trichotomy_under_the_hypothesis(self):
        mt = validate_tuple((2, 3))
        regular = PartitionClass.regular(mt)
        inferior = PartitionClass.inferior_regular(mt)
        for mu in enumerate_class(PartitionClass.all_partitions(), 6):
            got = len(insertion_preimages(mt, 1, 6, mu))
            if is_member(mu, regular):
                assert got == count_repeated_sizes(mu, mt.head, 1)
            elif is_member(mu, inferior):
                assert got == 1
            else:
                assert got == 0

    def test_preimages_are_valid_and_map_back(self):
        mt = validate_tuple((3, 4))
        for mu in enumerate_class(PartitionClass.all_partitions(), 8):
            for triple in insertion_preimages(mt, 1, 8, mu):
                assert insertion_map(mt, 1, triple) == mu
                assert triple.part % mt.head == 1
                assert 1 <= triple.copies <= triple.partition.multiplicity(triple.part)
