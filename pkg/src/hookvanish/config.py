"""Enumeration guards.

Every brute-force routine checks its input size against one of these limits
and raises :class:`~hookvanish.errors.OracleTooLarge` instead of truncating.
``SCHUR_GUARD_MAX`` in the environment overrides the total-weight guards.
"""

from __future__ import annotations

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


# monomial oracle: |I| + |J| and number of variables
ORACLE_MAX_WEIGHT = _env_int("SCHUR_GUARD_MAX", 12)
ORACLE_MAX_RANK = 5

# tensor powers and the dominance spot check: total weight of the power
POWER_MAX_WEIGHT = max(_env_int("SCHUR_GUARD_MAX", 0), 160)

# n_s tables
NS_MAX_R = 20

# grid sweeps: number of points
SWEEP_MAX_POINTS = 2_000_000
