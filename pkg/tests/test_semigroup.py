import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nashfan.semigroup import (
    SemigroupPresentation,
    contains,
    divides,
    is_minimal_generating,
    member,
)

from oracles import member_brute

A12 = SemigroupPresentation(((1, 0), (1, 1), (2, 3)))
A3 = SemigroupPresentation(((1, 0), (3, 4), (1, 1)))


def test_generators_keep_given_order():
    assert A3.generators == ((1, 0), (3, 4), (1, 1))
    assert SemigroupPresentation.sorted([(3, 4), (1, 0), (1, 1)]).generators == ((1, 0), (1, 1), (3, 4))


def test_rejects_bad_generators():
    with pytest.raises(ValueError):
        SemigroupPresentation(((1, -1),))
    with pytest.raises(ValueError):
        SemigroupPresentation(((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        SemigroupPresentation(((1, 0), (1, 0)))


def test_member_returns_a_valid_combination():
    lam = member((4, 6), A12)
    assert lam is not None and A12.image(lam) == (4, 6)
    assert member((1, 3), A12) is None
    assert member((0, 0), A12) == (0, 0, 0)


def test_divides_examples():
    assert divides((1, 0), (2, 3), A12) is False
    assert divides((1, 1), (3, 4), A12)
    with pytest.raises(ValueError):
        divides((1, 3), (3, 4), A12)


def test_minimality():
    assert is_minimal_generating(A12)
    assert not is_minimal_generating(SemigroupPresentation(((1, 0), (1, 1), (2, 1))))


def test_edge_generators():
    assert set(A3.edge_generators) == {(1, 0), (3, 4)}
    assert A3.edge_count == 2


points = st.tuples(st.integers(0, 8), st.integers(0, 10))


@settings(max_examples=80, deadline=None)
@given(points)
def test_membership_matches_brute_force(u):
    assert contains(u, A12) == member_brute(u, A12.generators)
    assert contains(u, A3) == member_brute(u, A3.generators)


@settings(max_examples=60, deadline=None)
@given(points, points, points)
def test_divisibility_is_transitive(a, b, c):
    if all(contains(x, A12) for x in (a, b, c)):
        if divides(a, b, A12) and divides(b, c, A12):
            assert divides(a, c, A12)


@settings(max_examples=60, deadline=None)
@given(points, points)
def test_membership_closed_under_addition(a, b):
    if contains(a, A3) and contains(b, A3):
        assert contains(tuple(x + y for x, y in zip(a, b)), A3)
