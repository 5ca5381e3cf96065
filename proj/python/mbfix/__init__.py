"""Counting monotone Boolean functions fixed by variable permutations."""

from ._core import (
    ConsistencyError,
    RefusalError,
    class_count,
    class_size,
    cycle_poset_size,
    cycle_type,
    dedekind,
    fix_count,
    gen_fix,
    generate_dn,
    is_monotone,
    known_dedekind,
    verify_tables,
)

__all__ = [
    "ConsistencyError",
    "RefusalError",
    "class_count",
    "class_size",
    "cycle_poset_size",
    "cycle_type",
    "dedekind",
    "fix_count",
    "gen_fix",
    "generate_dn",
    "is_monotone",
    "known_dedekind",
    "verify_tables",
]
