"""Exact lambda computations: per-pair maxima, window lower bounds, and the
decay-bound verifier for the theorem-1 construction.

The feasibility function h(t) = ||x - t e|| + t - 1 is convex piecewise
linear, so the largest feasible weight is found by Newton steps from the
right: each step evaluates the norm, takes the achieved admissible signed
sum as a global affine minorant, and jumps to that piece's root.  Every
answer is re-verified against the norm oracle and comes with the binding
constraint whose positive slope certifies infeasibility above the answer.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import UnitNormRequired
from .extreme import (
    EXTREME,
    SignedConstraint,
    certify_extreme,
    iter_extreme_in_space,
    positive_extreme_points,
)
from .families import IndexSet, enumerate_admissible, index_set, is_admissible
from .vectors import Vector, covers_index, make_thm1_vector, norm, one_sets


@dataclass
class LambdaResult:
    lam: Fraction
    extreme: Vector
    residual: Vector
    binding: list[SignedConstraint] = field(default_factory=list)


def max_feasible_weight(x: Vector, e: Vector, oracle) -> tuple[Fraction, Vector | None]:
    """Largest t in [0, 1] with oracle-norm(x - t e) <= 1 - t.

    oracle(v) returns (value, g) where g is a functional with <g, v> = value
    and <g, u> <= oracle-norm(u) for every u.  Also returns the binding
    functional certifying that no larger t is feasible (None when t = 1).
    """
    if x == e:
        return Fraction(1), None
    lam = Fraction(1)
    binding = None
    while True:
        value, g = oracle(x - lam * e)
        if value <= 1 - lam:
            assert value == 1 - lam or binding is None
            return lam, binding
        a = g.dot(x)
        b = g.dot(e)
        assert b < 1, "a violated piece must have positive slope"
        new_lam = (1 - a) / (1 - b)
        assert new_lam < lam
        lam = new_lam
        binding = g


def _primal_oracle(v: Vector) -> tuple[Fraction, Vector]:
    report = norm(v, 1)
    g = Vector({i: (1 if v[i] > 0 else -1) for i in report.witness if v[i] != 0})
    return report.value, g


def _tight_constraints(v: Vector, level: Fraction, window: int) -> list[SignedConstraint]:
    out = []
    for F in enumerate_admissible(1, window):
        if not F:
            continue
        total = sum((abs(v[i]) for i in F), Fraction(0))
        if total == level:
            signs = tuple(1 if v[i] >= 0 else -1 for i in F)
            out.append(SignedConstraint(F, signs))
    return out


def lambda_pair(x: Vector, e: Vector) -> LambdaResult:
    """Exact maximum lambda with ||x - lambda e|| <= 1 - lambda."""
    nx = norm(x, 1).value
    if nx > 1:
        raise UnitNormRequired(f"lambda_pair needs ||x|| <= 1; got {nx}")
    ne = norm(e, 1).value
    if ne != 1:
        raise UnitNormRequired(f"lambda_pair needs ||e|| = 1; got {ne}")
    lam, _ = max_feasible_weight(x, e, _primal_oracle)
    if lam == 1:
        return LambdaResult(lam, e, Vector.zero(), [])
    v = x - lam * e
    check = norm(v, 1).value
    if check > 1 - lam:
        raise RuntimeError(f"lambda verification failed: ||x-le|| = {check} > {1 - lam}")
    residual = v / (1 - lam)
    window = max(x.max_index, e.max_index, 1)
    binding = _tight_constraints(v, 1 - lam, window)
    return LambdaResult(lam, e, residual, binding)


def gap_bound(x: Vector, e: Vector, F: IndexSet) -> Fraction:
    """Upper bound g/h on lambda from a single admissible set F.

    Needs both |x| and e to fall short of 1 on F and e nonnegative; any
    decomposition of x over e whose residual is nonnegative on F then has
    lambda at most g/h.
    """
    F = index_set(F)
    if not is_admissible(F, 1):
        raise ValueError(f"set {F} is not admissible")
    if not e.is_nonnegative():
        raise ValueError("gap_bound needs a nonnegative extreme candidate")
    g = 1 - sum((abs(x[i]) for i in F), Fraction(0))
    h = 1 - sum((e[i] for i in F), Fraction(0))
    if g <= 0:
        raise ValueError(f"sum of |x| over F must stay below 1 (gap {g})")
    if h <= 0:
        raise ValueError(f"sum of e over F must stay below 1 (gap {h})")
    return g / h


def lambda_lower(x: Vector, window: int) -> tuple[Fraction, Vector]:
    """Certified lower bound for the lambda function over a finite window."""
    nx = norm(x, 1).value
    if nx > 1:
        raise UnitNormRequired(f"lambda_lower needs ||x|| <= 1; got {nx}")
    best_lam = Fraction(-1)
    best_e = None
    for e in iter_extreme_in_space(window):
        lam, _ = max_feasible_weight(x, e, _primal_oracle)
        if lam > best_lam:
            best_lam = lam
            best_e = e
    if best_e is None:
        raise ValueError(f"no extreme points with support inside [1, {window}]")
    return best_lam, best_e


@dataclass
class Thm1Report:
    n: int
    window: int
    bound: Fraction
    norm_ok: bool
    one_sets_ok: bool
    covers_ok: bool
    not_extreme_ok: bool
    claims: dict[str, bool]
    pool_size: int
    max_pair_lambda: Fraction
    pool_bound_ok: bool
    gap_bound_value: Fraction
    gap_bound_ok: bool
    alpha_candidate_in_pool: bool
    violations: list[tuple[Vector, Fraction]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.norm_ok
            and self.one_sets_ok
            and self.covers_ok
            and self.not_extreme_ok
            and all(self.claims.values())
            and self.pool_bound_ok
            and self.gap_bound_ok
        )


def expected_one_sets(n: int) -> list[IndexSet]:
    """The 1-set inventory of the order-n construction."""
    D = tuple(range(n + 2, 2 * n + 2))
    sets = [(1,), (2, 3), tuple(range(n + 2, 2 * n + 3))]
    sets += [(3, i, j) for k, i in enumerate(D) for j in D[k + 1 :]]
    return sorted(index_set(F) for F in sets)


def alpha_pattern_vector(n: int) -> Vector:
    """The constant-tail extreme candidate with value 1/(n+1) past index 3."""
    alpha = Fraction(1, n + 1)
    coords = {1: Fraction(1), 2: 2 * alpha, 3: 1 - 2 * alpha}
    for i in range(4, 2 * n + 3):
        coords[i] = alpha
    return Vector(coords)


def verify_thm1(n: int, window: int | None = None) -> Thm1Report:
    """Run every check of the decay-bound pipeline at order n.

    Builds the construction, checks its norm, 1-set inventory and
    non-extremality, then evaluates the exact pair lambda against the
    (n+1)/n^2 bound for every nonnegative extreme point in the window.
    Reports are cached; treat them as read-only.
    """
    if window is None:
        window = 2 * n + 2
    return _verify_thm1(n, window)


@lru_cache(maxsize=16)
def _verify_thm1(n: int, window: int) -> Thm1Report:
    x = make_thm1_vector(n)
    if window < 2 * n + 2:
        raise ValueError(f"window must reach the last coordinate {2 * n + 2}")
    bound = Fraction(n + 1, n * n)
    D = tuple(range(n + 2, 2 * n + 2))
    E = tuple(range(4, n + 1))

    norm_ok = norm(x, 1).value == 1
    one_sets_ok = one_sets(x) == expected_one_sets(n)
    covers_ok = covers_index(x, 4) is False
    not_extreme_ok = certify_extreme(x).verdict != EXTREME

    pool = positive_extreme_points(window)
    claims = {"i": True, "ii": True, "iii": True, "iv": True}
    violations: list[tuple[Vector, Fraction]] = []
    max_lam = Fraction(0)
    for e in pool:
        lam, _ = max_feasible_weight(x, e, _primal_oracle)
        if lam > max_lam:
            max_lam = lam
        if lam > bound:
            violations.append((e, lam))
        if lam == 0:
            continue
        if e.max_index > 2 * n + 2:
            claims["i"] = False
        alpha = e[n + 2]
        constant = alpha > 0 and all(e[i] == alpha for i in D + E)
        if not constant:
            claims["ii"] = False
            claims["iii"] = False
            continue
        if not (e[3] > e[2] > alpha >= e[2 * n + 2] and e[n + 1] == e[2 * n + 2]):
            claims["iii"] = False
        if e[2 * n + 2] == alpha and lam > bound:
            claims["iv"] = False

    e_alpha = alpha_pattern_vector(n)
    gap_value = gap_bound(x, e_alpha, D)
    return Thm1Report(
        n=n,
        window=window,
        bound=bound,
        norm_ok=norm_ok,
        one_sets_ok=one_sets_ok,
        covers_ok=covers_ok,
        not_extreme_ok=not_extreme_ok,
        claims=claims,
        pool_size=len(pool),
        max_pair_lambda=max_lam,
        pool_bound_ok=not violations,
        gap_bound_value=gap_value,
        gap_bound_ok=gap_value == bound,
        alpha_candidate_in_pool=e_alpha in pool,
        violations=violations,
    )
