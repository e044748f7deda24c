import pytest

from schreier.cutoffs import admissible_enum_limit
from schreier.errors import CutoffExceeded, VectorFormatError
from schreier.families import (
    enumerate_admissible,
    format_index_set,
    index_set,
    is_admissible,
    is_maximal,
    parse_index_set,
)

from conftest import powerset_admissible


def test_admissible_order_one_examples():
    assert is_admissible((2, 3), 1) is True
    assert is_admissible((2, 3, 4), 1) is False
    assert is_admissible((), 1) is True
    assert is_admissible((1,), 1) is True
    assert is_admissible((1, 2), 1) is False


def test_admissible_order_two_example():
    # {2,3} u {6,7,8}: two blocks, both admissible, 2 <= min of first block.
    assert is_admissible((2, 3, 6, 7, 8), 2) is True
    assert is_admissible((1, 2), 2) is False
    assert is_admissible((2, 3, 4), 2) is True  # blocks {2,3} and {4}
    assert is_admissible((), 2) is True


def test_admissible_order_zero():
    assert is_admissible((), 0) is True
    assert is_admissible((5,), 0) is True
    assert is_admissible((1, 2), 0) is False


def test_maximality_examples():
    assert is_maximal((1,), 1) is True
    assert is_maximal((3, 5), 1) is False
    assert is_maximal((2, 7), 1) is True
    with pytest.raises(ValueError):
        is_maximal((1, 2), 1)
    with pytest.raises(ValueError):
        is_maximal((), 1)


def test_maximality_closed_form_order_one(rng):
    for F in enumerate_admissible(1, 8):
        if F:
            assert is_maximal(F, 1) == (F[0] == len(F))


def test_maximality_higher_orders():
    assert is_maximal((2, 3, 6, 7, 8), 2) is False  # extends by 9
    assert is_maximal((1,), 2) is True  # {1, j} admits no block split
    assert is_maximal((5,), 0) is True


def test_enumerate_examples():
    assert enumerate_admissible(1, 3, maximal_only=True) == [(1,), (2, 3)]
    assert enumerate_admissible(1, 2) == [(), (1,), (2,)]
    assert enumerate_admissible(0, 3) == [(), (1,), (2,), (3,)]


def test_enumerate_matches_powerset_filter():
    for N in range(0, 11):
        assert enumerate_admissible(1, N) == sorted(powerset_admissible(N))


def test_hereditary(rng):
    from itertools import combinations

    for F in enumerate_admissible(1, 9):
        for size in range(len(F)):
            for G in combinations(F, size):
                assert is_admissible(G, 1)


def test_order_one_inside_order_two():
    for F in enumerate_admissible(1, 8):
        assert is_admissible(F, 2)


def test_spreading_property(rng):
    for _ in range(300):
        N = rng.randint(1, 12)
        F = rng.choice(enumerate_admissible(1, 12))
        if not F:
            continue
        G = []
        floor = 0
        for f in F:
            g = rng.randint(max(f, floor + 1), f + 3)
            G.append(g)
            floor = g
        assert is_admissible(tuple(G), 1)


def test_enumerate_cutoff_error():
    with pytest.raises(CutoffExceeded):
        enumerate_admissible(1, admissible_enum_limit(1) + 1)
    with pytest.raises(CutoffExceeded):
        enumerate_admissible(2, admissible_enum_limit(2) + 1)


def test_index_set_parse_format():
    assert parse_index_set("{2,3,6}") == (2, 3, 6)
    assert parse_index_set("{}") == ()
    assert format_index_set((2, 3, 6)) == "{2,3,6}"
    assert parse_index_set(format_index_set((1, 4, 9))) == (1, 4, 9)
    with pytest.raises(VectorFormatError):
        parse_index_set("{3,2}")
    with pytest.raises(VectorFormatError):
        parse_index_set("{0,1}")
    with pytest.raises(VectorFormatError):
        parse_index_set("2,3")
    with pytest.raises(ValueError):
        index_set([0, 1])


def test_maximal_only_agrees_with_filter():
    for N in (4, 6, 8):
        full = enumerate_admissible(1, N)
        maximal = enumerate_admissible(1, N, maximal_only=True)
        assert maximal == [F for F in full if F and is_maximal(F, 1)]
