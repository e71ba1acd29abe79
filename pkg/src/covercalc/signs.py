"""Twist and comparison-sign calculus for graph Y-links.

Two Y-links with isomorphic underlying graphs differ in the graded quotient
by the product, over edges, of the two twists the isomorphism matches up.
A twist carried through a chain of claspers picks up one sign flip per
intermediate clasper.

Convention note: the chain twist is implemented as (-1)^mu * l_0 * ... * l_mu
(mu + 1 linking numbers along the chain), so that a direct leaf-leaf link
(mu = 0) returns its own linking number. Magnitudes agree with any
convention that repeats the leading factor when l_0 = ±1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .diagrams import DecoratedDiagram


def chain_twist(linkings: Sequence[int]) -> int:
    """Twist of an edge whose leaves are linked through a clasper chain."""
    if not linkings:
        raise ValueError("a twist chain needs at least one linking number")
    mu = len(linkings) - 1
    product = 1
    for l in linkings:
        product *= l
    return (-1) ** mu * product


@dataclass(frozen=True)
class GraphIso:
    """An edge bijection between two diagrams' underlying graphs."""

    edge_map: Mapping[Hashable, Hashable]


def _endpoint_pairs(d: DecoratedDiagram) -> dict:
    return {e.id: (e.tail, e.head) for e in d.edges}


def _has_consistent_vertex_map(d1: DecoratedDiagram, d2: DecoratedDiagram, iso: GraphIso) -> bool:
    """Backtracking check that the edge bijection respects adjacency."""
    ep1, ep2 = _endpoint_pairs(d1), _endpoint_pairs(d2)
    items = sorted(iso.edge_map.items(), key=lambda kv: str(kv[0]))

    def extend(index: int, vmap: dict, used: set) -> bool:
        if index == len(items):
            return True
        e1, e2 = items[index]
        (a, b), (c, d) = ep1[e1], ep2[e2]
        for x, y in ((c, d), (d, c)):
            ok = True
            new = {}
            for src, dst in ((a, x), (b, y)):
                want = vmap.get(src, new.get(src))
                if want is None:
                    if dst in used or dst in new.values() and new.get(src) != dst:
                        ok = False
                        break
                    new[src] = dst
                elif want != dst:
                    ok = False
                    break
            if ok:
                merged = dict(vmap)
                merged.update(new)
                if extend(index + 1, merged, used | set(new.values())):
                    return True
        return False

    return extend(0, {}, set())


def comparison_sign(d1: DecoratedDiagram, d2: DecoratedDiagram, iso: GraphIso) -> int:
    """Product over edges of the two matched twists; always ±1.

    Requires ±1 twist data on every edge of both diagrams (leaves linking
    exactly once) and an adjacency-respecting edge bijection.
    """
    ids1 = {e.id for e in d1.edges}
    ids2 = {e.id for e in d2.edges}
    if set(iso.edge_map.keys()) != ids1 or set(iso.edge_map.values()) != ids2:
        raise ValueError("edge map is not a bijection between the two edge sets")
    for d, ids in ((d1, ids1), (d2, ids2)):
        for eid in ids:
            if d.twists.get(eid) not in (1, -1):
                raise ValueError(f"missing or non-unit twist on edge {eid}")
    if not _has_consistent_vertex_map(d1, d2, iso):
        raise ValueError("edge map does not respect vertex adjacency")
    sign = 1
    for e1, e2 in iso.edge_map.items():
        sign *= d1.twists[e1] * d2.twists[e2]
    return sign
