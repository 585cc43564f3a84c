"""Shared state for the higher-level computations.

A :class:`Workspace` owns a :class:`~hurwitzhodge.hurwitz.HurwitzCache`,
extends it on demand, and memoizes the derived objects (interpolated
polynomials, Witten tables, transformed series) so that a verification run
computes each of them once.
"""
from __future__ import annotations

import logging
from typing import Dict, Optional, Union

from .hurwitz import HurwitzCache, solve_closure

log = logging.getLogger(__name__)


class Workspace:
    def __init__(self, cache: Optional[HurwitzCache] = None):
        self.cache = cache if cache is not None else HurwitzCache()
        self.memo: Dict[tuple, object] = {}
        self._regions = set()

    def ensure(self, d_max: int, g: int, n: int) -> HurwitzCache:
        """Make sure every key with degree ``<= d_max``, genus ``<= g`` and
        ``g' + n' <= g + n`` is solved."""
        region = (d_max, g, g + n)
        if region in self._regions:
            return self.cache
        if any(d >= d_max and gg >= g and w >= g + n for d, gg, w in self._regions):
            self._regions.add(region)
            return self.cache
        log.debug("solving region d<=%d g<=%d weight<=%d", d_max, g, g + n)
        solve_closure(max(d_max, 1), g, self.cache, max_weight=g + n)
        self._regions.add(region)
        return self.cache

    def cached(self, key: tuple, build):
        try:
            return self.memo[key]
        except KeyError:
            value = self.memo[key] = build()
            return value


def as_workspace(obj: Union[Workspace, HurwitzCache, None]) -> Workspace:
    if isinstance(obj, Workspace):
        return obj
    return Workspace(obj)
