"""Shared helpers: cached corona graphs and oracle runs reused across modules."""

import functools

from coronamagic import CoronaSpec, Family, corona, exact_chi_la


@functools.lru_cache(maxsize=None)
def cached_corona(family: str, n: int, m: int):
    return corona(CoronaSpec(Family(family), n, m))


@functools.lru_cache(maxsize=None)
def cached_exact(family: str, n: int, m: int):
    result = exact_chi_la(cached_corona(family, n, m))
    assert result.exhausted, f"oracle did not exhaust on {family}({n},{m})"
    return result
