"""The dual norm, dual extreme points, and the dual decay-bound verifier.

The dual norm is the maximum of the pairing over the primal section ball,
computed by an exact-rational LP with lazy constraints: the separation
oracle is the primal norm greedy applied to the incumbent.  Dual extreme
points have the closed form "all coefficients of modulus one on a set F
with |F| = min F", which makes the decay bound a finite computation over
traces of F inside the relevant initial segment.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import UnitNormRequired
from .families import IndexSet, index_set
from .lambdas import max_feasible_weight
from .simplex import lp_max
from .vectors import Vector, norm


def dual_norm_witness(f: Vector) -> tuple[Fraction, Vector]:
    """Exact dual norm together with a norming vector from the primal ball."""
    if not f:
        return Fraction(0), Vector.zero()
    N = f.max_index
    c = [abs(f[i]) for i in range(1, N + 1)]
    # The ball is sign-symmetric, so the optimum is attained at x >= 0 against
    # |f|; constraints start at the singletons and grow lazily.
    rows: list[list[Fraction]] = []
    seen: set[IndexSet] = set()

    def add_set(F: IndexSet) -> None:
        row = [Fraction(0)] * N
        for i in F:
            row[i - 1] = Fraction(1)
        rows.append(row)
        seen.add(F)

    for i in range(1, N + 1):
        add_set((i,))
    while True:
        value, xs = lp_max(c, rows, [Fraction(1)] * len(rows))
        incumbent = Vector({i + 1: q for i, q in enumerate(xs)})
        report = norm(incumbent, 1)
        if report.value <= 1:
            break
        if report.witness in seen:
            raise RuntimeError("separation oracle repeated a constraint")
        add_set(report.witness)
    signed = Vector({i: (1 if f[i] >= 0 else -1) * incumbent[i] for i in incumbent.support})
    return value, signed


def dual_norm(f: Vector) -> Fraction:
    return dual_norm_witness(f)[0]


def is_dual_extreme(f: Vector) -> bool:
    """Closed-form test: every coordinate is +-1 and |supp f| = min supp f."""
    if not f:
        return False
    if any(abs(q) != 1 for _, q in f.items()):
        return False
    support = f.support
    return len(support) == support[0]


def make_thm2_functional(n: int) -> Vector:
    """Averaged block functional: 1/n on every index below 2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Vector({i: Fraction(1, n) for i in range(1, 2**n)})


def make_thm2_witness(n: int) -> Vector:
    """Unit vector pairing to 1: 1/2^(k-1) on the dyadic block [2^(k-1), 2^k)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = {}
    for k in range(1, n + 1):
        for i in range(2 ** (k - 1), 2**k):
            coords[i] = Fraction(1, 2 ** (k - 1))
    return Vector(coords)


def _dyadic_block(k: int) -> range:
    return range(2 ** (k - 1), 2**k)


def thm2_lambda_bound(G: IndexSet, n: int) -> Fraction:
    """Exact decay bound 1 - T(G)/n for a trace G of a dual extreme support.

    T(G) sums |block_k minus G| / 2^(k-1) over the first n dyadic blocks; any
    dual extreme point whose support meets [1, 2^n - 1] in G admits no
    decomposition weight above the returned value.
    """
    G = index_set(G)
    if G and (G[-1] > 2**n - 1 or len(G) > G[0]):
        raise ValueError(
            f"{G} is not a trace of a legal dual support inside [1, {2 ** n - 1}]"
        )
    in_G = set(G)
    T = Fraction(0)
    for k in range(1, n + 1):
        missing = sum(1 for i in _dyadic_block(k) if i not in in_G)
        T += Fraction(missing, 2 ** (k - 1))
    bound = 1 - T / n
    return bound if bound > 0 else Fraction(0)


def _dual_oracle(v: Vector) -> tuple[Fraction, Vector]:
    return dual_norm_witness(v)


def lambda_pair_dual(x_star: Vector, e_star: Vector) -> Fraction:
    """Exact maximum lambda with dual-norm(x* - lambda e*) <= 1 - lambda."""
    nx = dual_norm(x_star)
    if nx > 1:
        raise UnitNormRequired(f"lambda_pair_dual needs dual norm <= 1; got {nx}")
    if not is_dual_extreme(e_star):
        raise ValueError("e* must be a dual extreme point")
    lam, _ = max_feasible_weight(x_star, e_star, _dual_oracle)
    if lam < 1:
        check = dual_norm(x_star - lam * e_star)
        if check > 1 - lam:
            raise RuntimeError(f"dual lambda verification failed: {check} > {1 - lam}")
    return lam


def dual_extreme_traces(n: int) -> list[IndexSet]:
    """All G inside [1, 2^n - 1] with |G| = min G, lexicographically."""
    top = 2**n - 1
    out: list[IndexSet] = []
    for m in range(1, top + 1):
        if m - 1 > top - m:
            break
        for rest in combinations(range(m + 1, top + 1), m - 1):
            out.append((m,) + rest)
    out.sort()
    return out


@dataclass
class Thm2Report:
    n: int
    window: int
    candidate_count: int
    max_bound: Fraction
    bound_target: Fraction
    zero_trace_bound: Fraction
    unit_checks_ok: bool
    spot_checks: list[tuple[IndexSet, Fraction, Fraction]] = field(default_factory=list)

    @property
    def bounds_ok(self) -> bool:
        return self.max_bound < self.bound_target

    @property
    def spot_checks_ok(self) -> bool:
        return all(lam <= bound for _, lam, bound in self.spot_checks)

    @property
    def passed(self) -> bool:
        return (
            self.unit_checks_ok
            and self.bounds_ok
            and self.spot_checks_ok
            and self.zero_trace_bound == 0
        )


def verify_thm2(n: int, window: int | None = None) -> Thm2Report:
    """Evaluate the dual decay bound over every realizable trace at order n.

    Checks the averaged functional sits on the dual sphere, maximizes the
    closed-form bound over all traces, records the empty-trace branch, and
    spot-checks the first ten traces with exact pair computations.
    Reports are cached; treat them as read-only.
    """
    if window is None:
        window = 2**n - 1
    if window < 2**n - 1:
        raise ValueError(f"window must cover [1, {2 ** n - 1}]")
    return _verify_thm2(n, window)


@lru_cache(maxsize=16)
def _verify_thm2(n: int, window: int) -> Thm2Report:
    x_star = make_thm2_functional(n)
    witness = make_thm2_witness(n)
    unit_ok = (
        dual_norm(x_star) == 1
        and x_star.dot(witness) == 1
        and norm(witness, 1).value == 1
    )
    candidates = dual_extreme_traces(n)
    max_bound = Fraction(0)
    for G in candidates:
        value = thm2_lambda_bound(G, n)
        if value > max_bound:
            max_bound = value
    spot_checks = []
    for G in candidates[:10]:
        e_star = Vector({i: 1 for i in G})
        lam = lambda_pair_dual(x_star, e_star)
        spot_checks.append((G, lam, thm2_lambda_bound(G, n)))
    return Thm2Report(
        n=n,
        window=window,
        candidate_count=len(candidates),
        max_bound=max_bound,
        bound_target=Fraction(3, n),
        zero_trace_bound=thm2_lambda_bound((), n),
        unit_checks_ok=unit_ok,
        spot_checks=spot_checks,
    )
