"""
In-memory cache for the pure, reusable results of the calculator
(Vandermonde tables per context and node set, curve-class expansions,
theta products of basis monomials).

Everything cached here is a deterministic function of its key, so entries
never expire. The store is capped at settings.TABLE_CACHE_MAX_ENTRIES;
past the cap the oldest entries are evicted first. clear_cache() empties
it for tests and long-running servers.
"""
import logging
import threading
from typing import Any, Callable, Dict, Hashable, Tuple

from src.utils.config import settings

logger = logging.getLogger(__name__)

_cache_store: Dict[Tuple[str, Hashable], Any] = {}
_lock = threading.Lock()
_stats = {"hits": 0, "misses": 0, "evictions": 0}


def get_cached(operation: str, key: Hashable) -> Any:
    """Return the cached value or None."""
    with _lock:
        value = _cache_store.get((operation, key))
        if value is None:
            _stats["misses"] += 1
        else:
            _stats["hits"] += 1
        return value


def set_cached(operation: str, key: Hashable, value: Any) -> None:
    with _lock:
        _cache_store[(operation, key)] = value
        overflow = len(_cache_store) - settings.TABLE_CACHE_MAX_ENTRIES
        if overflow > 0:
            # dicts keep insertion order, so the first keys are the oldest
            for old in list(_cache_store)[:overflow]:
                del _cache_store[old]
            _stats["evictions"] += overflow
            logger.debug(f"Evicted {overflow} cache entries", extra={"operation": operation})


def cached_call(operation: str, key: Hashable, compute: Callable[[], Any]) -> Any:
    """Look up (operation, key); compute and store on a miss."""
    value = get_cached(operation, key)
    if value is None:
        value = compute()
        set_cached(operation, key, value)
        logger.debug(f"Cached {operation}", extra={"key": repr(key)})
    return value


def clear_cache() -> None:
    """Clear all cached entries (useful for testing)."""
    global _cache_store
    with _lock:
        _cache_store = {}
        for name in _stats:
            _stats[name] = 0
    logger.info("Cache cleared")


def cache_stats() -> Dict[str, int]:
    with _lock:
        return {"entries": len(_cache_store), **_stats}
