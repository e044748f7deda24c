"""Finitely supported vectors with exact rational coordinates and their norms.

The norm of order k is the supremum of |x| summed over a member of S_k.
Order 1 is computed by a per-minimum greedy that is exact; higher orders
fall back to windowed enumeration.  Also provides the 1-set inventory, the
coverage predicate, the second-best gap, and the decay-witness constructor
used by the theorem-1 verifier.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from . import cutoffs
from .errors import CutoffExceeded, UnitNormRequired
from .families import IndexSet, enumerate_admissible, index_set


class Vector:
    """Immutable map from positive 1-based indices to nonzero rationals."""

    __slots__ = ("_coords", "_items")

    def __init__(self, coords: Mapping[int, Fraction | int | str] | Iterable[tuple[int, Fraction]] = ()):
        if isinstance(coords, Mapping):
            pairs = coords.items()
        else:
            pairs = list(coords)
        clean: dict[int, Fraction] = {}
        for i, value in pairs:
            i = int(i)
            if i < 1:
                raise ValueError(f"indices are 1-based positive integers, got {i}")
            q = Fraction(value)
            if q == 0:
                continue
            if i in clean:
                raise ValueError(f"duplicate coordinate index {i}")
            clean[i] = q
        object.__setattr__(self, "_coords", clean)
        object.__setattr__(self, "_items", tuple(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def unit(cls, i: int) -> "Vector":
        return cls({i: 1})

    @classmethod
    def zero(cls) -> "Vector":
        return cls()

    @property
    def support(self) -> IndexSet:
        return tuple(i for i, _ in self._items)

    @property
    def max_index(self) -> int:
        return self._items[-1][0] if self._items else 0

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return self._items

    def __getitem__(self, i: int) -> Fraction:
        return self._coords.get(i, Fraction(0))

    def __contains__(self, i: int) -> bool:
        return i in self._coords

    def __bool__(self) -> bool:
        return bool(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {q}" for i, q in self._items)
        return f"Vector({{{body}}})"

    def __add__(self, other: "Vector") -> "Vector":
        coords = dict(self._coords)
        for i, q in other._items:
            coords[i] = coords.get(i, Fraction(0)) + q
        return Vector(coords)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector({i: -q for i, q in self._items})

    def __mul__(self, scalar) -> "Vector":
        s = Fraction(scalar)
        return Vector({i: s * q for i, q in self._items})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Vector":
        return self * (1 / Fraction(scalar))

    def __abs__(self) -> "Vector":
        return Vector({i: abs(q) for i, q in self._items})

    def restrict(self, indices: Iterable[int]) -> "Vector":
        keep = set(indices)
        return Vector({i: q for i, q in self._items if i in keep})

    def without(self, indices: Iterable[int]) -> "Vector":
        drop = set(indices)
        return Vector({i: q for i, q in self._items if i not in drop})

    def flip_signs(self, indices: Iterable[int]) -> "Vector":
        flip = set(indices)
        return Vector({i: (-q if i in flip else q) for i, q in self._items})

    def is_nonnegative(self) -> bool:
        return all(q > 0 for _, q in self._items)

    def dot(self, other: "Vector") -> Fraction:
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        return sum((q * big[i] for i, q in small._items), Fraction(0))


@dataclass(frozen=True)
class NormReport:
    value: Fraction
    witness: IndexSet


def norm(x: Vector, k: int = 1) -> NormReport:
    """Exact norm of order k with an achieving admissible set."""
    if k < 0:
        raise ValueError("norm order must be >= 0")
    if not x:
        return NormReport(Fraction(0), ())
    if k == 0:
        best_i = min(x.support, key=lambda i: (-abs(x[i]), i))
        return NormReport(abs(x[best_i]), (best_i,))
    if k == 1:
        return _norm_order_one(x)
    N = x.max_index
    limit = cutoffs.admissible_enum_limit(k)
    if N > limit:
        raise CutoffExceeded(f"norm(order={k})", N, limit)
    best = NormReport(Fraction(0), ())
    for F in enumerate_admissible(k, N):
        total = sum((abs(x[i]) for i in F), Fraction(0))
        if total > best.value:
            best = NormReport(total, F)
    return best


def _norm_order_one(x: Vector) -> NormReport:
    # For each candidate minimum m the best admissible sum is |x(m)| plus the
    # m-1 largest |x(i)| beyond m; ties in "largest" break to smaller index.
    support = x.support
    ranked = sorted(support, key=lambda i: (-abs(x[i]), i))
    best_value = Fraction(-1)
    best_witness: IndexSet = ()
    for m in range(1, x.max_index + 1):
        take = m - 1
        chosen = []
        if take > 0:
            for i in ranked:
                if i > m:
                    chosen.append(i)
                    if len(chosen) == take:
                        break
        value = sum((abs(x[i]) for i in chosen), Fraction(0))
        witness = chosen
        if m in x:
            value += abs(x[m])
            witness = [m] + chosen
        if value > best_value:
            best_value = value
            best_witness = index_set(witness)
    return NormReport(best_value, best_witness)


def _require_unit(x: Vector, op: str) -> None:
    value = norm(x, 1).value
    if value != 1:
        raise UnitNormRequired(f"{op} needs a unit vector; got norm {value}")


def _admissible_support_subsets(x: Vector):
    """Yield (subset, sum of |x| over it) for admissible subsets of supp x."""
    support = x.support
    values = [abs(x[i]) for i in support]
    n = len(support)

    def rec(start: int, chosen: list[int], total: Fraction, capacity: int):
        yield tuple(chosen), total
        if len(chosen) >= capacity and chosen:
            return
        for pos in range(start, n):
            i = support[pos]
            if not chosen:
                cap = i  # min element bounds the final size
            else:
                cap = capacity
            chosen.append(i)
            yield from rec(pos + 1, chosen, total + values[pos], cap)
            chosen.pop()

    yield from rec(0, [], Fraction(0), n + 1)


def one_sets(x: Vector) -> list[IndexSet]:
    """The complete family of 1-sets: admissible, inside supp x, summing to 1."""
    _require_unit(x, "one_sets")
    found = [F for F, total in _admissible_support_subsets(x) if F and total == 1]
    found.sort()
    return found


def covers_index(x: Vector, i: int) -> bool:
    """True when some admissible set containing i has |x|-sum exactly 1."""
    if i < 1:
        raise ValueError("indices are positive")
    _require_unit(x, "covers_index")
    sets = one_sets(x)
    for G in sets:
        if i in G:
            return True
    for G in sets:
        if i not in G:
            merged = index_set(G + (i,))
            if merged[0] >= len(merged):
                return True
    return False


def eps_gap(x: Vector) -> Fraction:
    """1 minus the best admissible |x|-sum that falls strictly short of 1."""
    _require_unit(x, "eps_gap")
    limit = cutoffs.eps_gap_support_limit()
    if len(x) > limit:
        raise CutoffExceeded("eps_gap support size", len(x), limit)
    second = Fraction(0)
    for _, total in _admissible_support_subsets(x):
        if second < total < 1:
            second = total
    return 1 - second


def make_thm1_vector(n: int) -> Vector:
    """Unit vector whose extreme-decomposition weight the verifier bounds.

    Coordinates: 1 at index 1, 2/n - 2/n^3 at index 2, 1 - 2/n + 2/n^3 at
    index 3, zeros through n+1, 1/n - 1/n^3 on indices n+2..2n+1, and 1/n^2
    at index 2n+2.  Every ordering the construction relies on is re-checked
    here, so the admissible range of n comes out of the inequalities rather
    than a hard-coded table.
    """
    if not isinstance(n, int):
        raise ValueError("n must be an integer")
    x2 = Fraction(2, n) - Fraction(2, n**3) if n >= 1 else Fraction(0)
    x3 = 1 - x2
    tail = Fraction(1, n) - Fraction(1, n**3) if n >= 1 else Fraction(0)
    last = Fraction(1, n * n) if n >= 1 else Fraction(0)
    checks = [
        (n >= 1 and x2 > 0, "2/n - 2/n^3 > 0"),
        (n >= 1 and x3 > tail, "1 - 2/n + 2/n^3 > 1/n - 1/n^3"),
        (n >= 1 and tail > last, "1/n - 1/n^3 > 1/n^2"),
        (n >= 1 and x3 > x2, "1 - 2/n + 2/n^3 > 2/n - 2/n^3"),
        (n >= 1 and n * n - n - 1 > 0, "n^2 - n - 1 > 0"),
        (n >= 4, f"n >= 4 (got {n})"),
    ]
    for ok, label in checks:
        if not ok:
            raise ValueError(f"construction requires {label}")
    coords = {1: Fraction(1), 2: x2, 3: x3}
    for i in range(n + 2, 2 * n + 2):
        coords[i] = tail
    coords[2 * n + 2] = last
    return Vector(coords)
