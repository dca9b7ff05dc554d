from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from oracles import inversions as brute_inversions
from wreathring.errors import EmptyStar, InconsistentMatrix, SizeMismatch
from wreathring.partitions import partitions_of
from wreathring.young_cosets import (
    blocks,
    coset_matrix,
    double_coset_of,
    enumerate_cosets,
    fully_ordered_rep,
    is_fully_ordered,
    length_bound,
    min_length_check,
    orbit_count,
    stabilization_scan,
)

pairs = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))
)


def test_block_convention():
    assert [list(b) for b in blocks((3, 2, 1))] == [[4, 5, 6], [2, 3], [1]]


def test_examples():
    assert len(enumerate_cosets((1, 1), (1, 1))) == 2
    assert len(enumerate_cosets((2, 1), (2, 1))) == 2
    assert len(enumerate_cosets((5,), (5,))) == 1
    assert fully_ordered_rep(((2, 0), (0, 1)), (2, 1), (2, 1)) == (1, 2, 3)
    assert fully_ordered_rep(((0, 1), (1, 0)), (1, 1), (1, 1)) == (2, 1)
    assert is_fully_ordered((1, 2, 3), (2, 1), (1, 1, 1))
    assert not is_fully_ordered((2, 1), (2,), (2,))
    assert min_length_check((2, 1), ((0, 1), (1, 0)))


def test_size_and_matrix_errors():
    with pytest.raises(SizeMismatch):
        enumerate_cosets((2,), (1,))
    with pytest.raises(InconsistentMatrix):
        fully_ordered_rep(((2, 1), (0, 0)), (2, 1), (2, 1))
    with pytest.raises(EmptyStar):
        stabilization_scan((), (), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_orbits(n):
    for mu in partitions_of(n):
        for nu in partitions_of(n):
            assert len(enumerate_cosets(mu, nu)) == orbit_count(mu, nu)


@settings(max_examples=40, deadline=None)
@given(pairs)
def test_representatives(pair):
    mu, nu = pair
    seen = set()
    for c in enumerate_cosets(mu, nu):
        sigma = fully_ordered_rep(c, mu, nu)
        assert coset_matrix(sigma, mu, nu) == c
        assert is_fully_ordered(sigma, mu, nu)
        assert brute_inversions(sigma) == length_bound(c)
        seen.add(sigma)
    assert len(seen) == len(enumerate_cosets(mu, nu))


@pytest.mark.parametrize("mu,nu", [((2, 2, 1), (2, 2, 1)), ((3, 1), (2, 2)), ((2, 1, 1), (3, 1))])
def test_representative_is_shortest_in_its_coset(mu, nu):
    for c in enumerate_cosets(mu, nu):
        sigma = fully_ordered_rep(c, mu, nu)
        coset = double_coset_of(sigma, mu, nu)
        assert min(brute_inversions(x) for x in coset) == brute_inversions(sigma)
        assert sum(1 for x in coset if brute_inversions(x) == brute_inversions(sigma)) == 1
        assert all(coset_matrix(x, mu, nu) == c for x in coset)


@pytest.mark.parametrize("mu,nu", [((2, 1), (2, 1)), ((3, 1), (2, 2)), ((2, 2), (2, 1, 1))])
def test_cosets_partition_the_group(mu, nu):
    n = sum(mu)
    total = 0
    for c in enumerate_cosets(mu, nu):
        total += len(double_coset_of(fully_ordered_rep(c, mu, nu), mu, nu))
    assert total == factorial(n)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 6) for b in range(1, a + 1)])
def test_two_block_count(a, b):
    assert len(enumerate_cosets((a, b), (a, b))) == b + 1


def test_stabilization():
    assert stabilization_scan((1,), (1,), 5) == [1] * 6
    assert stabilization_scan((1, 1), (1, 1), 4) == [2] * 5
    counts = stabilization_scan((2, 1), (2, 1), 5)
    assert len(set(counts[1:])) == 1
    counts = stabilization_scan((2, 1, 1), (2, 1, 1), 4)
    assert counts[-1] == counts[-2] == counts[-3]


def test_all_permutations_have_one_representative():
    mu, nu = (2, 1, 1), (2, 2)
    reps = {fully_ordered_rep(c, mu, nu) for c in enumerate_cosets(mu, nu)}
    found = {s for s in permutations(range(1, 5)) if is_fully_ordered(s, mu, nu)}
    assert found == reps
