"""Maximal independent sets: a pivoting enumerator and a brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from wcdim import _backend
from wcdim.graph import Graph, bits_of, mask_of

__all__ = [
    "MisList",
    "maximal_independent_sets",
    "brute_force_mis",
    "is_maximal_independent",
    "is_well_covered",
    "BRUTE_FORCE_MAX_ORDER",
]

BRUTE_FORCE_MAX_ORDER = 20


def _sort_key(mask: int) -> list[int]:
    return bits_of(mask)


@dataclass(frozen=True)
class MisList:
    """Maximal independent sets of a graph on ``host_order`` vertices.

    ``sets`` holds bitmasks.  Lists produced by the enumerators are in
    canonical order (lexicographic on sorted member lists); callers may build
    other orderings explicitly, e.g. to rotate the anchor set.
    """

    sets: tuple[int, ...]
    host_order: int

    @classmethod
    def canonical(cls, masks: Iterable[int], host_order: int) -> "MisList":
        return cls(tuple(sorted(set(masks), key=_sort_key)), host_order)

    def as_lists(self) -> list[list[int]]:
        return [bits_of(m) for m in self.sets]

    def sizes(self) -> list[int]:
        return [m.bit_count() for m in self.sets]

    def rotated(self, k: int) -> "MisList":
        k %= max(len(self.sets), 1)
        return MisList(self.sets[k:] + self.sets[:k], self.host_order)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)


def maximal_independent_sets(g: Graph) -> MisList:
    return MisList.canonical(_backend.maximal_independent_sets(g.adj, g.order), g.order)


def is_maximal_independent(g: Graph, s: Iterable[int] | int) -> bool:
    m = mask_of(s)
    if not g.is_independent(m):
        return False
    for v in g.vertices():
        if not m >> v & 1 and not g.adj[v] & m:
            return False
    return True


def brute_force_mis(g: Graph) -> MisList:
    """Scan all ``2**order`` vertex subsets and keep the maximal independent ones."""
    if g.order > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(
            f"brute force is limited to order {BRUTE_FORCE_MAX_ORDER}, got {g.order}"
        )
    found = []
    for s in range(1 << g.order):
        independent = all(not (s >> v & 1 and g.adj[v] & s) for v in range(g.order))
        if not independent:
            continue
        if all(s >> v & 1 or g.adj[v] & s for v in range(g.order)):
            found.append(s)
    return MisList.canonical(found, g.order)


def is_well_covered(g: Graph) -> bool:
    return len(set(maximal_independent_sets(g).sizes())) == 1
