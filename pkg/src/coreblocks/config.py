"""Size limits shared by the enumeration and group-algebra routines."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_N = "COREBLOCKS_MAX_N"


@dataclass(frozen=True)
class Limits:
    chartable_max_n: int = 20
    group_max_n: int = 7
    enum_max_n: int = 60
    trial_division_bound: int = 10**6


def limits() -> Limits:
    """Current limits; ``COREBLOCKS_MAX_N`` overrides the enumeration bound."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return Limits()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    return Limits(enum_max_n=value)


class BoundExceeded(ValueError):
    """Input is larger than the configured computation bound."""
