"""Schreier families S_k: membership, maximality, and windowed enumeration.

An index set is a strictly increasing tuple of positive integers.  S_0 holds
the sets of size at most one, S_1 the admissible sets (min F >= |F|), and
S_{k+1} is built from S_k by constrained unions: F is in S_{k+1} when the
sorted elements of F split into d consecutive blocks E_1 < ... < E_d with
d <= min E_1 and every block in S_k.  The empty set belongs to every S_k.
"""

from collections.abc import Iterable
from functools import lru_cache
from itertools import combinations

from . import cutoffs
from .errors import VectorFormatError

IndexSet = tuple[int, ...]


def index_set(elements: Iterable[int]) -> IndexSet:
    """Canonicalize to a sorted tuple of distinct positive integers."""
    items = sorted(set(int(i) for i in elements))
    if items and items[0] < 1:
        raise ValueError(f"index sets contain positive integers only, got {items[0]}")
    return tuple(items)


def parse_index_set(text: str) -> IndexSet:
    """Parse the brace form used by the CLI, e.g. '{2,3,6}' or '{}'."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise VectorFormatError(f"index set literal must be brace-delimited, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        items = [int(part.strip()) for part in body.split(",")]
    except ValueError as exc:
        raise VectorFormatError(f"bad index set literal {text!r}: {exc}") from None
    if any(i < 1 for i in items):
        raise VectorFormatError(f"index set {text!r} has non-positive entries")
    if sorted(items) != items or len(set(items)) != len(items):
        raise VectorFormatError(f"index set {text!r} must be strictly increasing")
    return tuple(items)


def format_index_set(F: IndexSet) -> str:
    return "{" + ",".join(str(i) for i in F) + "}"


def is_admissible(F: Iterable[int], k: int = 1) -> bool:
    """Decide membership of F in the Schreier family of order k."""
    if k < 0:
        raise ValueError("family order must be >= 0")
    F = index_set(F)
    if not F:
        return True
    if k == 0:
        return len(F) <= 1
    if k == 1:
        return F[0] >= len(F)
    return _in_family(F, k)


@lru_cache(maxsize=65536)
def _in_family(F: IndexSet, k: int) -> bool:
    # Recursive block-partition search; only reached for k >= 2.
    if len(F) <= 1:
        return True
    n = len(F)
    max_blocks = F[0]

    # reachable(i) = set of block counts that can tile the suffix F[i:].
    @lru_cache(maxsize=None)
    def reachable(i: int) -> frozenset[int]:
        if i == n:
            return frozenset([0])
        counts = set()
        for j in range(i + 1, n + 1):
            block = F[i:j]
            ok = block[0] >= len(block) if k - 1 == 1 else (
                len(block) <= 1 if k - 1 == 0 else _in_family(block, k - 1)
            )
            if ok:
                for c in reachable(j):
                    if c + 1 <= max_blocks:
                        counts.add(c + 1)
        return frozenset(counts)

    result = any(1 <= d <= max_blocks for d in reachable(0))
    reachable.cache_clear()
    return result


def is_maximal(F: Iterable[int], k: int = 1) -> bool:
    """True when no further index can be added while staying inside S_k.

    Candidate extensions only need checking up to max F + 1: pushing an
    extension element further right is a spread, which preserves membership,
    so admissibility of F + {j} for j > max F is settled at j = max F + 1.
    """
    F = index_set(F)
    if not is_admissible(F, k):
        raise ValueError(f"{format_index_set(F)} is not in S_{k}")
    if not F:
        raise ValueError("maximality is defined for non-empty sets")
    if k == 1:
        return F[0] == len(F)
    present = set(F)
    for j in range(1, F[-1] + 2):
        if j not in present and is_admissible(F + (j,), k):
            return False
    return True


def enumerate_admissible(k: int, N: int, maximal_only: bool = False) -> list[IndexSet]:
    """All members of S_k contained in [1, N], lexicographically sorted."""
    if N < 0:
        raise ValueError("window must be >= 0")
    limit = cutoffs.admissible_enum_limit(k)
    cutoffs.check(f"enumerate_admissible(k={k})", N, limit)
    if k == 0:
        sets: list[IndexSet] = [()] + [(i,) for i in range(1, N + 1)]
    elif k == 1:
        sets = [()]
        for m in range(1, N + 1):
            above = range(m + 1, N + 1)
            for size_above in range(0, min(m - 1, N - m) + 1):
                for rest in combinations(above, size_above):
                    sets.append((m,) + rest)
        sets.sort()
    else:
        sets = []
        universe = list(range(1, N + 1))
        for size in range(0, N + 1):
            for cand in combinations(universe, size):
                if is_admissible(cand, k):
                    sets.append(cand)
        sets.sort()
    if maximal_only:
        sets = [F for F in sets if F and is_maximal(F, k)]
    return sets


def maximal_members(sets: list[IndexSet]) -> list[IndexSet]:
    """Inclusion-maximal elements of a finite family (windowed domination)."""
    out = []
    as_sets = [set(F) for F in sets]
    for i, F in enumerate(sets):
        dominated = any(
            j != i and as_sets[i] < as_sets[j] for j in range(len(sets))
        )
        if not dominated:
            out.append(F)
    return out
