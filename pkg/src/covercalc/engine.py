"""Leading-term calculus for branched cyclic covers of decorated knots.

The first non-vanishing coefficient produced by a complete graph Y-link
decoration is a signed count of leg states whose cycle windings all vanish
mod p, scaled by p. For theta-shaped decorations this feeds the
Casson-Walker-Lescop delta 2|H_1| per admissible copy; for a chain of n
legs on one edge it reduces to the exact roots-of-unity sum of (1-t)^n.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .diagrams import (
    DecoratedDiagram,
    cycle_basis,
    cycle_winding_affine,
    is_theta_graph,
    require_valid,
    sawn_edge_graph,
    surplus,
)
from .knots import KnotDescriptor, h1_order
from .laurent import LaurentPoly

DEFAULT_LEG_CAP = 24


@dataclass(frozen=True)
class LeadingTerm:
    magnitude: int
    sign: Optional[int]  # +1, -1, or None for unknown
    grade: int
    label: str
    p: int
    note: Optional[str] = None

    def to_json_dict(self) -> dict:
        data = {
            "magnitude": str(self.magnitude),
            "sign": "unknown" if self.sign is None else f"{self.sign:+d}",
            "grade": self.grade,
            "p": self.p,
            "label": self.label,
        }
        if self.note:
            data["note"] = self.note
        return data


def _multiplier_enumeration(forms, legs, p, signed):
    """Signed count of admissible leg states, times p.

    Legs with identical contribution vectors across the basis cycles are
    interchangeable, so states are enumerated per group with binomial
    multiplicities. Worst case is still 2^legs (all vectors distinct).
    """
    groups: dict[tuple[int, ...], int] = {}
    for leg in legs:
        vec = tuple(f.coeffs.get(leg.id, 0) for f in forms)
        groups[vec] = groups.get(vec, 0) + 1

    constants = tuple(f.constant for f in forms)
    total = 0
    choices = [range(m + 1) for m in groups.values()]
    vectors = list(groups)
    multiplicities = list(groups.values())
    for counts in itertools.product(*choices):
        windings = list(constants)
        weight = 1
        flips = 0
        for vec, m, j in zip(vectors, multiplicities, counts):
            weight *= math.comb(m, j)
            flips += j
            for i, v in enumerate(vec):
                windings[i] += j * v
        if all(w % p == 0 for w in windings):
            if signed and flips % 2:
                total -= weight
            else:
                total += weight
    return p * total


def _multiplier_polynomial(forms, legs, p, signed):
    # One variable per basis cycle; each leg contributes a factor
    # (1 -/+ monomial of its winding contributions). The mod-p indicator sum
    # of the expanded product is the signed admissible-state count.
    variables = tuple(f"c{i}" for i in range(len(forms)))
    poly = LaurentPoly.monomial(variables, tuple(f.constant for f in forms))
    one = LaurentPoly.const(1, variables)
    for leg in legs:
        exps = tuple(f.coeffs.get(leg.id, 0) for f in forms)
        mono = LaurentPoly.monomial(variables, exps)
        poly = poly * (one - mono if signed else one + mono)
    return p * poly.modp_indicator_sum(p)


def multiplier(
    d: DecoratedDiagram,
    p: int,
    signed: bool = True,
    leg_cap: int = DEFAULT_LEG_CAP,
) -> int:
    """p times the signed count of leg states with all cycle windings = 0 mod p.

    Computed twice -- by direct enumeration over the 2^legs states and by an
    exact roots-of-unity indicator sum on the product polynomial -- and the
    two paths must agree.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    require_valid(d)
    if len(d.legs) > leg_cap:
        raise ValueError(
            f"{len(d.legs)} legs exceeds the enumeration cap of {leg_cap}"
        )
    forms = cycle_winding_affine(d, cycle_basis(d))
    by_enum = _multiplier_enumeration(forms, d.legs, p, signed)
    by_poly = _multiplier_polynomial(forms, d.legs, p, signed)
    if by_enum != by_poly:
        raise RuntimeError(
            f"internal disagreement: enumeration {by_enum} vs polynomial {by_poly}"
        )
    return by_enum


def _sign_from_twists(d: DecoratedDiagram) -> Optional[int]:
    # Full ±1 twist data pins the comparison sign against the all-positive
    # reference orientation; anything less leaves the global sign unknown.
    if not d.edges:
        return None
    sign = 1
    for e in d.edges:
        t = d.twists.get(e.id)
        if t not in (1, -1):
            return None
        sign *= t
    return sign


def cwl_delta(
    knot: KnotDescriptor,
    d: DecoratedDiagram,
    p: int,
    signed: bool = True,
    leg_cap: int = DEFAULT_LEG_CAP,
) -> LeadingTerm:
    """Casson-Walker-Lescop leading delta for a theta-with-legs decoration.

    Magnitude is 2 * |H_1| of the cover times the absolute multiplier; the
    invariant vanishes on higher-surplus shapes, so a non-theta sawn diagram
    reports magnitude 0 with a note.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    require_valid(d)
    grade = surplus(d)
    if not is_theta_graph(sawn_edge_graph(d)):
        return LeadingTerm(
            magnitude=0,
            sign=None,
            grade=grade,
            label=d.label,
            p=p,
            note="sawn diagram is not a theta graph; the invariant vanishes here",
        )
    m = multiplier(d, p, signed=signed, leg_cap=leg_cap)
    magnitude = 2 * h1_order(knot, p) * abs(m)
    sign = _sign_from_twists(d) if magnitude else None
    return LeadingTerm(magnitude=magnitude, sign=sign, grade=grade, label=d.label, p=p)


@functools.lru_cache(maxsize=512)
def _one_minus_t_power(l: int) -> LaurentPoly:
    t = LaurentPoly.gen("t")
    one = LaurentPoly.const(1)
    return (one - t) ** l


def lmo_leading_multiplier(l: int, p: int) -> int:
    """Exact sum of (1 - w)^l over all p-th roots of unity w."""
    if l < 0:
        raise ValueError("l must be >= 0")
    if p < 1:
        raise ValueError("p must be >= 1")
    return _one_minus_t_power(l).root_of_unity_sum(p)


def window_nonzero(l_start: int, p: int) -> tuple[int, int]:
    """First l' in [l_start, l_start + p) with nonzero leading multiplier.

    Such an l' always exists for p >= 2 (the shifted sums form a nonsingular
    Vandermonde system); failure to find one is a hard error. For p = 1
    every multiplier with l >= 1 vanishes and the window is vacuous, so the
    degenerate pair (l_start, 0) is reported.
    """
    if l_start < 1:
        raise ValueError("l_start must be >= 1")
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == 1:
        return (l_start, 0)
    for l in range(l_start, l_start + p):
        value = lmo_leading_multiplier(l, p)
        if value != 0:
            return (l, value)
    raise RuntimeError(
        f"no nonzero multiplier in [{l_start}, {l_start + p}) for p={p}; "
        "this should be impossible"
    )
