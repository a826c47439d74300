"""Resource caps, overridable through environment variables.

``GENCHAR_MANN_TERMS``      maximum number of terms accepted by ``mann_solve`` (default 4)
``GENCHAR_FIELD_BOUND``     largest supported field size p**n (default 2**20)
``GENCHAR_CONDUCTOR_MAX``   largest cyclotomic conductor (default 1260)
``GENCHAR_GB_MAX_BASIS``    Groebner basis size cap (default 400)
``GENCHAR_GB_MAX_DEGREE``   Groebner S-polynomial degree cap (default 60)
``GENCHAR_FACTOR_BOUND``    trial-division bound for rational units (default 10**6)
"""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Limits:
    mann_terms: int
    field_bound: int
    conductor_max: int
    gb_max_basis: int
    gb_max_degree: int
    factor_bound: int


def limits() -> Limits:
    return Limits(
        mann_terms=_env_int("GENCHAR_MANN_TERMS", 4),
        field_bound=_env_int("GENCHAR_FIELD_BOUND", 2**20),
        conductor_max=_env_int("GENCHAR_CONDUCTOR_MAX", 1260),
        gb_max_basis=_env_int("GENCHAR_GB_MAX_BASIS", 400),
        gb_max_degree=_env_int("GENCHAR_GB_MAX_DEGREE", 60),
        factor_bound=_env_int("GENCHAR_FACTOR_BOUND", 10**6),
    )
