"""Associated matrices, well-covered dimensions and per-graph profiles."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from wcdim.graph import Graph, bits_of, to_graph6
from wcdim.linalg import (
    QQ,
    FieldSpec,
    IntMatrix,
    _field,
    invariant_factors,
    nullspace_basis,
    prime_factors,
    rank,
    rank_from_factors,
)
from wcdim.mis import MisList, maximal_independent_sets

__all__ = [
    "WcdimProfile",
    "associated_matrix",
    "wcdim",
    "wcdim_profile",
    "well_covered_space_basis",
    "weighting_sums",
]


def associated_matrix(g: Graph, mis: MisList | None = None) -> IntMatrix:
    """One row per set ``M_i`` (i >= 2): +1 on ``M_1 \\ M_i``, -1 on ``M_i \\ M_1``."""
    if mis is None:
        mis = maximal_independent_sets(g)
    if mis.host_order != g.order:
        raise ValueError(
            f"independent sets index {mis.host_order} vertices, graph has {g.order}"
        )
    if not mis.sets:
        raise ValueError("a graph always has at least one maximal independent set")
    first = mis.sets[0]
    rows = []
    for other in mis.sets[1:]:
        row = [0] * g.order
        for v in bits_of(first & ~other):
            row[v] = 1
        for v in bits_of(other & ~first):
            row[v] = -1
        rows.append(tuple(row))
    return IntMatrix(len(rows), g.order, tuple(rows))


def wcdim(g: Graph, f: FieldSpec | int = QQ, mis: MisList | None = None) -> int:
    return g.order - rank(associated_matrix(g, mis), f)


@dataclass(frozen=True)
class WcdimProfile:
    """Well-covered dimension of one graph over every characteristic at once."""

    order: int
    mis_count: int
    generic_rank: int
    invariant_factors: tuple[int, ...]
    critical_primes: tuple[int, ...]
    wcdim_generic: int
    wcdim_at: dict[int, int] = field(default_factory=dict)

    def wcdim_over(self, f: FieldSpec | int) -> int:
        p = _field(f).characteristic
        return self.wcdim_at.get(p, self.wcdim_generic) if p else self.wcdim_generic

    @property
    def dependent(self) -> bool:
        return bool(self.critical_primes)

    def to_dict(self, graph6: str | None = None) -> dict:
        return {
            "graph6": graph6,
            "order": self.order,
            "mis_count": self.mis_count,
            "wcdim_generic": self.wcdim_generic,
            "invariant_factors": list(self.invariant_factors),
            "critical": [{"p": p, "wcdim": self.wcdim_at[p]} for p in self.critical_primes],
        }

    def to_json(self, graph6: str | None = None) -> str:
        return json.dumps(self.to_dict(graph6), separators=(",", ":"))


def wcdim_profile(g: Graph, mis: MisList | None = None) -> WcdimProfile:
    if mis is None:
        mis = maximal_independent_sets(g)
    factors = tuple(invariant_factors(associated_matrix(g, mis)))
    primes = set()
    for d in factors:
        if d > 1:
            primes.update(prime_factors(d))
    critical = tuple(sorted(primes))
    return WcdimProfile(
        order=g.order,
        mis_count=len(mis),
        generic_rank=len(factors),
        invariant_factors=factors,
        critical_primes=critical,
        wcdim_generic=g.order - len(factors),
        wcdim_at={p: g.order - rank_from_factors(factors, p) for p in critical},
    )


def weighting_sums(mis: MisList, weights, f: FieldSpec | int = QQ) -> list[int]:
    """Total weight of every maximal independent set, reduced into the field."""
    p = _field(f).characteristic
    sums = [sum(weights[v] for v in bits_of(m)) for m in mis.sets]
    return [s % p for s in sums] if p else sums


def well_covered_space_basis(g: Graph, f: FieldSpec | int = QQ) -> list[tuple[int, ...]]:
    """Basis of the well-covered weightings over ``f``.

    Each vector is re-checked to have equal weight on every maximal
    independent set before it is returned.
    """
    f = _field(f)
    mis = maximal_independent_sets(g)
    basis = nullspace_basis(associated_matrix(g, mis), f)
    for vec in basis:
        if len(set(weighting_sums(mis, vec, f))) != 1:
            raise ArithmeticError(f"basis vector {vec} is not a well-covered weighting")
    if len(basis) != wcdim(g, f, mis):
        raise ArithmeticError("basis size disagrees with the well-covered dimension")
    return basis


def graph_profile_json(g: Graph) -> str:
    return wcdim_profile(g).to_json(to_graph6(g))
