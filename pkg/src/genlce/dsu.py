"""Disjoint-set forests (union by rank, full path compression) with counters.

The forest itself lives in the selected kernel backend; ``finds``, ``unions``
and ``hops`` (parent pointers followed) are read straight off the instance.
"""

from __future__ import annotations

from ._backend import kernels

DsuForest = kernels.DisjointSets


def make(size: int) -> DsuForest:
    """A forest of ``size`` singletons over ``range(size)``."""
    return DsuForest(size)


def classes(forest: DsuForest) -> list[list[int]]:
    """Current partition as sorted lists, ordered by smallest member."""
    groups: dict[int, list[int]] = {}
    for x in range(forest.size):
        groups.setdefault(forest.find(x), []).append(x)
    return sorted(groups.values())
