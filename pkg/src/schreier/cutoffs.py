"""Size limits for the exhaustive enumerations, overridable via SCHREIER_MAX_DIM.

Every cutoff guards an enumeration whose cost grows at least exponentially
in the window size; the defaults keep all operations at desk scale.
"""

import os

from .errors import CutoffExceeded

ADMISSIBLE_ENUM_MAX = {0: 64, 1: 24, 2: 12}
ADMISSIBLE_ENUM_MAX_HIGHER = 10  # families of order >= 3
EPS_GAP_SUPPORT_MAX = 24
VERTEX_ENUM_MAX = 6
EXTREME_ENUM_MAX = 12


def _override() -> int | None:
    raw = os.environ.get("SCHREIER_MAX_DIM")
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value >= 1 else None


def admissible_enum_limit(k: int) -> int:
    limit = ADMISSIBLE_ENUM_MAX.get(k, ADMISSIBLE_ENUM_MAX_HIGHER)
    forced = _override()
    return forced if forced is not None else limit


def vertex_enum_limit() -> int:
    forced = _override()
    return forced if forced is not None else VERTEX_ENUM_MAX


def extreme_enum_limit() -> int:
    forced = _override()
    return forced if forced is not None else EXTREME_ENUM_MAX


def eps_gap_support_limit() -> int:
    forced = _override()
    return forced if forced is not None else EPS_GAP_SUPPORT_MAX


def check(what: str, requested: int, limit: int) -> None:
    if requested > limit:
        raise CutoffExceeded(what, requested, limit)
