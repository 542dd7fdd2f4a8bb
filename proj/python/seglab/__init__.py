"""Python access to the seglab solver and analysis core."""

from ._seglab import (
    Field,
    SeglabError,
    fit_power_law,
    profile_1d,
    read_snapshot,
    run_checks,
    solve,
    write_snapshot,
)

__all__ = [
    "Field",
    "SeglabError",
    "fit_power_law",
    "profile_1d",
    "read_snapshot",
    "run_checks",
    "solve",
    "write_snapshot",
]
