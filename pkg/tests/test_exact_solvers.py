from fractions import Fraction

import pytest

from schreier.dd import DDPolytope, box_seed
from schreier.linalg import nullspace_vector, rank, rref, solve_square
from schreier.simplex import lp_max


def test_rank_basics():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 0], [0, Fraction(1, 3)], [1, 1]]) == 2


def test_rank_matches_rref(rng):
    for _ in range(100):
        n_rows = rng.randint(1, 6)
        n_cols = rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n_cols)] for _ in range(n_rows)]
        reduced, pivots = rref(rows)
        assert rank(rows) == len(pivots) == len(reduced)


def test_nullspace_vector(rng):
    for _ in range(100):
        dim = rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(dim)] for _ in range(rng.randint(0, dim + 1))]
        kernel = nullspace_vector(rows, dim)
        if kernel is None:
            assert rank(rows) == dim
        else:
            assert any(v != 0 for v in kernel)
            for row in rows:
                assert sum(a * b for a, b in zip(row, kernel)) == 0


def test_solve_square():
    assert solve_square([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
    assert solve_square([[1, 1], [2, 2]], [1, 2]) is None


def test_lp_simple():
    value, x = lp_max([1, 1], [[1, 0], [0, 1], [1, 1]], [1, 1, 1])
    assert value == 1
    assert sum(x) == 1


def test_lp_unbounded():
    with pytest.raises(ValueError):
        lp_max([1], [[-1]], [0])


def test_lp_degenerate_terminates():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]]
    value, x = lp_max([1, 1, 1], rows, [1, 1, 1, 1])
    assert value == Fraction(3, 2) or value <= Fraction(3, 2)
    for row in rows:
        assert sum(a * b for a, b in zip(row, x)) <= 1


def test_lp_matches_vertex_scan(rng):
    # Oracle: optimum of a linear functional over a product of intervals.
    for _ in range(50):
        dim = rng.randint(1, 4)
        c = [Fraction(rng.randint(-4, 4)) for _ in range(dim)]
        hi = [Fraction(rng.randint(1, 5)) for _ in range(dim)]
        rows = [[Fraction(1) if j == i else Fraction(0) for j in range(dim)] for i in range(dim)]
        value, x = lp_max(c, rows, hi)
        expected = sum(max(ci, 0) * h for ci, h in zip(c, hi))
        assert value == expected


def test_dd_cube_cut():
    rows, vertices = box_seed([(0, 1)] * 3)
    poly = DDPolytope(3, rows, vertices)
    assert len(poly.vertices) == 8
    poly.add_constraint([1, 1, 1], Fraction(3, 2))
    points = {v.point for v in poly.vertices}
    # Four corners with coordinate sum >= 3/2 are cut; six edges cross.
    assert (Fraction(1), Fraction(1), Fraction(1)) not in points
    assert (Fraction(1), Fraction(1, 2), Fraction(0)) in points
    assert len(points) == 10
    for v in points:
        assert sum(v) <= Fraction(3, 2)


def test_dd_simplex_from_cube():
    rows, vertices = box_seed([(0, 1)] * 2)
    poly = DDPolytope(2, rows, vertices)
    poly.add_constraint([1, 1], 1)
    points = sorted(v.point for v in poly.vertices)
    assert points == [
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
    ]


def test_dd_empty_intersection_face():
    rows, vertices = box_seed([(0, 1)] * 2)
    poly = DDPolytope(2, rows, vertices)
    poly.add_constraint([1, 0], 0)  # x <= 0 collapses to a facet
    points = sorted(v.point for v in poly.vertices)
    assert points == [(Fraction(0), Fraction(0)), (Fraction(0), Fraction(1))]


def _vertices_by_combination_search(dim, rows):
    """Independent oracle: rank-dim active subsets, solved and filtered."""
    from itertools import combinations

    from schreier.linalg import solve_square

    found = set()
    for combo in combinations(range(len(rows)), dim):
        system = [rows[i][0] for i in combo]
        rhs = [rows[i][1] for i in combo]
        sol = solve_square(system, rhs)
        if sol is None:
            continue
        if all(
            sum(a * v for a, v in zip(coeffs, sol)) <= b for coeffs, b in rows
        ):
            found.add(tuple(sol))
    return found


def test_dd_fuzz_against_combination_search(rng):
    for trial in range(30):
        dim = rng.randint(2, 4)
        seed_rows, seed_vertices = box_seed([(0, 1)] * dim)
        poly = DDPolytope(dim, seed_rows, seed_vertices)
        all_rows = [(tuple(Fraction(a) for a in coeffs), Fraction(b)) for coeffs, b in seed_rows]
        for _ in range(rng.randint(1, 5)):
            coeffs = [Fraction(rng.randint(-2, 3)) for _ in range(dim)]
            if all(c == 0 for c in coeffs):
                coeffs[0] = Fraction(1)
            b = Fraction(rng.randint(1, 4), rng.randint(1, 3))
            poly.add_constraint(coeffs, b)
            all_rows.append((tuple(coeffs), b))
        expected = _vertices_by_combination_search(dim, all_rows)
        got = {v.point for v in poly.vertices}
        assert got == expected, f"trial {trial}: DD {len(got)} vs oracle {len(expected)}"
