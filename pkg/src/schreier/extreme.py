"""Extreme-point certification and enumeration for the unit ball.

A unit vector e is certified EXTREME exactly when (a) its active signed
admissible-set constraints have full rank on the window [1, max supp e]
(so e is a vertex of the section polytope) and (b) e has a non-maximal
1-set.  (b) forces any midpoint decomposition of e to live inside the
window, so (a)+(b) is equivalent to extremality in the full ball; the
perturbation-witness search provides the independent cross-check.

In-space enumeration exploits the forced shape of extreme supports:
supp e = [1, m] + F for the unique non-maximal 1-set F with |F| = m and
min F > m.  For each m the fully-supported candidates form one polytope
up to relabelling of the tail, which is enumerated once (double
description over a sorted-tail fundamental domain) and then embedded
into every legal support.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from . import cutoffs
from .dd import DDPolytope
from .errors import UnitNormRequired
from .families import IndexSet, enumerate_admissible, index_set, maximal_members
from .linalg import nullspace_vector, rank, solve_square
from .vectors import Vector, norm, one_sets

EXTREME = "EXTREME"
NOT_EXTREME = "NOT_EXTREME"
VERTEX_ONLY = "VERTEX_ONLY"


@dataclass(frozen=True)
class SignedConstraint:
    """The halfspace sum(signs[i] * v[i] for i in indices) <= 1."""

    indices: IndexSet
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.signs):
            raise ValueError("one sign per index required")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs are +1 or -1")

    def row(self, N: int) -> list[int]:
        out = [0] * N
        for i, s in zip(self.indices, self.signs):
            out[i - 1] = s
        return out

    def value_at(self, v: Vector) -> Fraction:
        return sum((s * v[i] for i, s in zip(self.indices, self.signs)), Fraction(0))


@dataclass
class NecessaryConditions:
    has_non_maximal_one_set: bool
    non_maximal_unique: bool | None
    tail_matches_support: bool | None
    head_is_initial_segment: bool | None
    support_twice_one_set: bool | None
    covered: bool
    uncovered_indices: list[int]
    non_maximal_one_set: IndexSet | None

    def failed(self) -> list[str]:
        names = []
        if not self.has_non_maximal_one_set:
            names.append("non_maximal_one_set_exists")
        if self.non_maximal_unique is False:
            names.append("non_maximal_one_set_unique")
        if self.tail_matches_support is False:
            names.append("tail_matches_support")
        if self.head_is_initial_segment is False:
            names.append("head_is_initial_segment")
        if self.support_twice_one_set is False:
            names.append("support_twice_one_set")
        if not self.covered:
            names.append("coverage")
        return names


@dataclass
class ExtremenessCertificate:
    verdict: str
    active_rank: int
    window: int
    witness: Vector | None = None
    failed_conditions: list[str] = field(default_factory=list)


def _require_unit(e: Vector, op: str) -> None:
    value = norm(e, 1).value
    if value != 1:
        raise UnitNormRequired(f"{op} needs a unit vector; got norm {value}")


def _sign(q: Fraction) -> int:
    return 1 if q >= 0 else -1


def active_constraints(e: Vector, N: int) -> list[SignedConstraint]:
    """All signed admissible sets within [1, N] that are tight at e.

    Signs are forced by e on its support; indices in the set where e
    vanishes get both signs, so each tight set expands to a family.
    """
    _require_unit(e, "active_constraints")
    if e.max_index > N:
        raise ValueError(f"support reaches {e.max_index}, beyond window {N}")
    out = []
    for F in enumerate_admissible(1, N):
        if not F:
            continue
        total = sum((abs(e[i]) for i in F), Fraction(0))
        if total != 1:
            continue
        zero_positions = [i for i in F if i not in e]
        for zero_signs in product((1, -1), repeat=len(zero_positions)):
            signs = []
            z = 0
            for i in F:
                if i in e:
                    signs.append(_sign(e[i]))
                else:
                    signs.append(zero_signs[z])
                    z += 1
            out.append(SignedConstraint(F, tuple(signs)))
    out.sort(key=lambda c: (c.indices, c.signs))
    return out


def _active_rank_rows(e: Vector, N: int) -> list[list[int]]:
    """Rank-equivalent compact basis of the active constraints at e.

    A tight set F spans its support-signed indicator plus a unit row per
    index of F off the support (both signs are tight there).
    """
    rows: list[list[int]] = []
    units: set[int] = set()
    for F in enumerate_admissible(1, N):
        if not F:
            continue
        total = sum((abs(e[i]) for i in F), Fraction(0))
        if total != 1:
            continue
        row = [0] * N
        for i in F:
            if i in e:
                row[i - 1] = _sign(e[i])
            else:
                units.add(i)
        rows.append(row)
    for z in sorted(units):
        row = [0] * N
        row[z - 1] = 1
        rows.append(row)
    return rows


def is_vertex(e: Vector, N: int) -> tuple[bool, int]:
    """Whether the active constraints pin e within the section [1, N]."""
    _require_unit(e, "is_vertex")
    if e.max_index > N:
        raise ValueError(f"support reaches {e.max_index}, beyond window {N}")
    rows = _active_rank_rows(e, N)
    r = rank(rows)
    return r == N, r


def _uncovered(e: Vector, upto: int) -> list[int]:
    sets = one_sets(e)
    out = []
    for i in range(1, upto + 1):
        hit = False
        for G in sets:
            if i in G:
                hit = True
                break
            if i not in G:
                merged = index_set(G + (i,))
                if merged[0] >= len(merged):
                    hit = True
                    break
        if not hit:
            out.append(i)
    return out


def necessary_conditions(e: Vector) -> NecessaryConditions:
    """Evaluate every known necessary condition for membership in E(X)."""
    _require_unit(e, "necessary_conditions")
    sets = one_sets(e)
    non_max = [F for F in sets if F[0] > len(F)]
    support = e.support
    max_supp = e.max_index
    uncovered = _uncovered(e, max_supp + 1)
    if not non_max:
        return NecessaryConditions(
            has_non_maximal_one_set=False,
            non_maximal_unique=None,
            tail_matches_support=None,
            head_is_initial_segment=None,
            support_twice_one_set=None,
            covered=not uncovered,
            uncovered_indices=uncovered,
            non_maximal_one_set=None,
        )
    F = non_max[0]
    tail_ok = tuple(i for i in support if i >= F[0]) == F
    m = len(F)
    head_ok = tuple(i for i in support if i <= m) == tuple(range(1, m + 1))
    return NecessaryConditions(
        has_non_maximal_one_set=True,
        non_maximal_unique=len(non_max) == 1,
        tail_matches_support=tail_ok,
        head_is_initial_segment=head_ok,
        support_twice_one_set=len(support) == 2 * m,
        covered=not uncovered,
        uncovered_indices=uncovered,
        non_maximal_one_set=F,
    )


def perturbation_witness(e: Vector, window: int) -> Vector | None:
    """Nonzero w with ||e+w|| <= 1 and ||e-w|| <= 1, if one exists.

    Uses a null direction of the active constraints over [1, window]
    (preferring a plain uncovered coordinate), scaled by half the worst
    slack-to-action ratio, then re-verified against the norm oracle.
    """
    _require_unit(e, "perturbation_witness")
    if window < e.max_index:
        raise ValueError(f"window {window} is smaller than max support {e.max_index}")
    rows = _active_rank_rows(e, window)
    if rank(rows) == window:
        return None

    uncovered = _uncovered(e, min(window, e.max_index + 1))
    direction: list[Fraction]
    if uncovered:
        direction = [Fraction(0)] * window
        direction[uncovered[0] - 1] = Fraction(1)
    else:
        kernel = nullspace_vector(rows, window)
        assert kernel is not None, "rank deficit must yield a null direction"
        direction = kernel

    # Scale: keep signed sums of tight sets exact (signs must not flip) and
    # keep every slack set slack.
    bounds = [Fraction(1)]
    for i, q in enumerate(direction, start=1):
        if q != 0 and i in e:
            bounds.append(abs(e[i]) / (2 * abs(q)))
    for F in enumerate_admissible(1, window):
        if not F:
            continue
        total = sum((abs(e[i]) for i in F), Fraction(0))
        if total == 1:
            continue
        action = sum((abs(direction[i - 1]) for i in F), Fraction(0))
        if action > 0:
            bounds.append((1 - total) / (2 * action))
    t = min(bounds)
    w = Vector({i: t * q for i, q in enumerate(direction, start=1) if q != 0})
    if not w:
        return None
    plus = norm(e + w, 1).value
    minus = norm(e - w, 1).value
    if plus > 1 or minus > 1:
        raise RuntimeError(
            f"witness verification failed: ||e+w||={plus}, ||e-w||={minus}"
        )
    return w


def certify_extreme(e: Vector) -> ExtremenessCertificate:
    """Decide extremality with machine-checkable evidence.

    EXTREME iff e is a vertex of its own section and owns a non-maximal
    1-set.  Otherwise a perturbation witness is searched three indices past
    the support; VERTEX_ONLY is only emitted if that search unexpectedly
    comes back empty for a section vertex.
    """
    _require_unit(e, "certify_extreme")
    N = e.max_index
    sets = one_sets(e)
    has_non_max = any(F[0] > len(F) for F in sets)
    vertex, rank_n = is_vertex(e, N)
    if vertex and has_non_max:
        return ExtremenessCertificate(EXTREME, rank_n, N)
    conditions = necessary_conditions(e)
    failed = conditions.failed()
    witness = perturbation_witness(e, N + 3)
    if witness is not None:
        return ExtremenessCertificate(NOT_EXTREME, rank_n, N, witness, failed)
    if failed:
        return ExtremenessCertificate(NOT_EXTREME, rank_n, N, None, failed)
    return ExtremenessCertificate(VERTEX_ONLY, rank_n, N, None, failed)


# ---------------------------------------------------------------------------
# Vertex enumeration for the full section polytope (small windows).


def canonical_key(v: Vector, N: int):
    """Deterministic vector order: by magnitude then sign, coordinatewise."""
    return tuple((abs(v[i]), 0 if v[i] >= 0 else 1) for i in range(1, N + 1))


def enumerate_vertices(N: int) -> list[Vector]:
    """All vertices of the section polytope on [1, N], exactly."""
    cutoffs.check("enumerate_vertices", N, cutoffs.vertex_enum_limit())
    if N < 1:
        return []
    sum_sets = maximal_members([F for F in enumerate_admissible(1, N) if F])
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for F in sum_sets:
        row = [Fraction(0)] * N
        for i in F:
            row[i - 1] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    for i in range(N):
        row = [Fraction(0)] * N
        row[i] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(0))

    candidates: set[tuple[Fraction, ...]] = set()
    for combo in combinations(range(len(rows)), N):
        sol = solve_square([rows[i] for i in combo], [rhs[i] for i in combo])
        if sol is None:
            continue
        if any(v < 0 for v in sol):
            continue
        point = tuple(sol)
        if all(
            sum((row[j] * point[j] for j in range(N)), Fraction(0)) <= b
            for row, b in zip(rows, rhs)
        ):
            candidates.add(point)

    reps = []
    for point in candidates:
        v = Vector({i + 1: q for i, q in enumerate(point)})
        if not v:
            continue
        if rank(_active_rank_rows(v, N)) == N:
            reps.append(v)

    out = []
    for v in reps:
        support = v.support
        for signs in product((1, -1), repeat=len(support)):
            flipped = Vector({i: s * v[i] for i, s in zip(support, signs)})
            out.append(flipped)
    out.sort(key=lambda u: canonical_key(u, N))
    return out


# ---------------------------------------------------------------------------
# In-space extreme point enumeration via per-size candidate polytopes.
#
# Coordinates of a fully-supported candidate with |F| = m, written in the
# order (1, 2, ..., m, f_1, ..., f_m), satisfy constraints that depend
# only on positions, not on the actual tail indices: head value 1 at
# position 1, tail summing to 1, and for every head position t in [2, m]
# each (t-1)-subset A of the later positions gives value(t) + sum(A) <= 1.


def _class_candidate_rows(m: int) -> list[tuple[int, tuple[int, ...]]]:
    """(t, A) pairs: A is a (t-1)-subset of positions after t.

    Positions are 0-based over (v_2..v_m, w_1..w_m): head position t sits at
    t - 2, tail position j at (m - 1) + j.
    """
    out = []
    for t in range(2, m + 1):
        later = list(range(t - 1, m - 1)) + [m - 1 + j for j in range(m)]
        for A in combinations(later, t - 1):
            out.append((t, A))
    return out


def _class_rank_full(m: int, head: tuple[Fraction, ...], tail: tuple[Fraction, ...]) -> bool:
    """Check the active constraints pin the candidate within its support.

    Columns: head values at positions 1..m then tail values; rows are the
    singleton {1}, the tail 1-set, and every tight candidate row.
    """
    dim = 2 * m
    rows = []
    row = [0] * dim
    row[0] = 1
    rows.append(row)  # {1}
    row = [0] * dim
    for j in range(m):
        row[m + j] = 1
    rows.append(row)  # the tail 1-set
    values = list(head[1:]) + list(tail)  # aligned with candidate positions
    for t, A in _class_candidate_rows(m):
        total = head[t - 1] + sum((values[p] for p in A), Fraction(0))
        if total == 1:
            row = [0] * dim
            row[t - 1] = 1
            for p in A:
                row[p + 2 - 1] = 1  # position p maps to column p + 1
            rows.append(row)
    return rank(rows) == dim


def _class_polytope_pieces(m: int):
    """Seed rows/vertices and cut rows for the sorted-tail class polytope.

    Reduced coordinates: (v_2..v_m, w_1..w_{m-1}) with w_m = 1 - sum(w).
    The seed is the product of the v-box [0,1]^(m-1) with the sorted
    probability simplex; the cuts are the head-subset + tail-prefix rows
    (with sorted tails those dominate every later-position subset).
    """
    n_v = m - 1
    n_w = m - 1
    dim = n_v + n_w

    seed_rows = []
    for t in range(n_v):
        row = [Fraction(0)] * dim
        row[t] = Fraction(-1)
        seed_rows.append((row, Fraction(0)))
        row = [Fraction(0)] * dim
        row[t] = Fraction(1)
        seed_rows.append((row, Fraction(1)))
    for i in range(n_w - 1):  # w_{i+1} <= w_i
        row = [Fraction(0)] * dim
        row[n_v + i + 1] = Fraction(1)
        row[n_v + i] = Fraction(-1)
        seed_rows.append((row, Fraction(0)))
    row = [Fraction(0)] * dim  # w_m <= w_{m-1}
    for i in range(n_w - 1):
        row[n_v + i] = Fraction(-1)
    row[n_v + n_w - 1] = Fraction(-2)
    seed_rows.append((row, Fraction(-1)))
    row = [Fraction(0)] * dim  # w_m >= 0
    for i in range(n_w):
        row[n_v + i] = Fraction(1)
    seed_rows.append((row, Fraction(1)))

    simplex_vertices = []
    for j in range(1, m + 1):
        ws = [Fraction(1, j)] * j + [Fraction(0)] * (m - j)
        simplex_vertices.append(tuple(ws[:n_w]))
    seed_vertices = [
        corner + w
        for corner in product((Fraction(0), Fraction(1)), repeat=n_v)
        for w in simplex_vertices
    ]

    cut_rows = []
    for t in range(2, m + 1):
        heads_after = list(range(t - 1, n_v))
        for h in range(0, min(t - 1, len(heads_after)) + 1):
            prefix = t - 1 - h  # <= m - 1, so it always fits the reduced tail
            for H in combinations(heads_after, h):
                row = [Fraction(0)] * dim
                row[t - 2] += Fraction(1)
                for p in H:
                    row[p] += Fraction(1)
                for j in range(prefix):
                    row[n_v + j] += Fraction(1)
                cut_rows.append((row, Fraction(1)))
    return dim, seed_rows, seed_vertices, cut_rows


def _class_reps_from_cut_order(m: int, cut_rows) -> tuple:
    n_v = m - 1
    dim, seed_rows, seed_vertices, _ = _class_polytope_pieces(m)
    poly = DDPolytope(dim, seed_rows, seed_vertices)
    for row, b in cut_rows:
        poly.add_constraint(row, b)
    reps = []
    seen = set()
    for vert in poly.vertices:
        vs = vert.point[:n_v]
        ws = tuple(vert.point[n_v:]) + (1 - sum(vert.point[n_v:]),)
        if any(v <= 0 for v in vs) or ws[-1] <= 0:
            continue
        head = (Fraction(1),) + tuple(vs)
        if (head, ws) in seen:
            continue
        seen.add((head, ws))
        if _class_rank_full(m, head, ws):
            reps.append((head, ws))
    reps.sort()
    return tuple(reps)


@lru_cache(maxsize=None)
def _class_positive_vertices(m: int) -> tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]:
    """Fully-positive candidate vertices for tail size m.

    Returns (head, tail) pairs with head[0] == 1 and tail sorted
    descending; tails are interchangeable, so each pair stands for its
    whole arrangement orbit.
    """
    if m == 1:
        return (((Fraction(1),), (Fraction(1),)),)
    _, _, _, cut_rows = _class_polytope_pieces(m)
    return _class_reps_from_cut_order(m, cut_rows)


def positive_extreme_points(N: int) -> list[Vector]:
    """Extreme points with nonnegative coordinates and support within [1, N]."""
    return list(_positive_extreme_points(N))


@lru_cache(maxsize=8)
def _positive_extreme_points(N: int) -> tuple[Vector, ...]:
    cutoffs.check("enumerate_extreme_in_space", N, cutoffs.extreme_enum_limit())
    out = []
    for m in range(1, N // 2 + 1):
        reps = _class_positive_vertices(m)
        arrangements = {
            tail: sorted(set(permutations(tail))) for _, tail in reps
        }
        for F in combinations(range(m + 1, N + 1), m):
            for head, tail in reps:
                for arranged in arrangements[tail]:
                    coords = {i + 1: head[i] for i in range(m)}
                    for pos, value in zip(F, arranged):
                        coords[pos] = value
                    e = Vector(coords)
                    if certify_extreme(e).verdict == EXTREME:
                        out.append(e)
    out.sort(key=lambda v: canonical_key(v, N))
    return tuple(out)


def iter_extreme_in_space(N: int):
    """Yield every in-space extreme point: positive reps in canonical order,
    each expanded over all sign patterns.  Deterministic but unsorted."""
    for v in _positive_extreme_points(N):
        support = v.support
        for signs in product((1, -1), repeat=len(support)):
            yield Vector({i: s * v[i] for i, s in zip(support, signs)})


def enumerate_extreme_in_space(N: int) -> list[Vector]:
    """All certified extreme points with support inside [1, N].

    The output is closed under sign flips (the norm is 1-unconditional), so
    it is the positive list expanded over all sign patterns.  The signed
    list grows as 4^(|F|) per support; prefer positive_extreme_points for
    large windows.
    """
    out = list(iter_extreme_in_space(N))
    out.sort(key=lambda u: canonical_key(u, N))
    return out
