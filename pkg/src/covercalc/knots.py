"""Homology orders of branched cyclic covers from Alexander polynomials.

The order of the first homology of the p-fold branched cyclic cover of a
knot is the absolute value of the product of its Alexander polynomial over
all p-th roots of unity, with the convention that a vanishing product
encodes positive first Betti number. Everything here runs in exact integer
arithmetic through the Laurent-polynomial resultant.
"""
from __future__ import annotations

from .laurent import LaurentPoly

_T = LaurentPoly.gen("t")
_ONE = LaurentPoly.const(1)


class KnotDescriptor:
    """A knot presented by its Alexander polynomial (up to units ±t^k)."""

    __slots__ = ("label", "alexander")

    def __init__(self, label: str, alexander: LaurentPoly, check_symmetry: bool = True):
        if not alexander.is_univariate():
            raise ValueError("Alexander polynomial must be univariate")
        at_one = alexander.coefficient_sum()
        if at_one not in (1, -1):
            raise ValueError(
                f"Alexander polynomial must evaluate to ±1 at t=1, got {at_one}"
            )
        if check_symmetry and not _symmetric_up_to_unit(alexander):
            raise ValueError(
                "Alexander polynomial is not symmetric under t -> 1/t up to a unit"
            )
        self.label = label
        self.alexander = alexander

    def __repr__(self) -> str:
        return f"KnotDescriptor({self.label!r}, {self.alexander!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, KnotDescriptor)
            and self.label == other.label
            and self.alexander == other.alexander
        )

    def to_json_dict(self) -> dict:
        data = self.alexander.to_json_dict()
        data["label"] = self.label
        return data

    @classmethod
    def from_json_dict(cls, data, check_symmetry: bool = True) -> "KnotDescriptor":
        return cls(
            str(data.get("label", "")),
            LaurentPoly.from_json_dict(data),
            check_symmetry=check_symmetry,
        )


def _normal_form(p: LaurentPoly) -> tuple[int, ...]:
    """Dense coefficient tuple after shifting the lowest exponent to zero."""
    if not p.terms:
        return ()
    exps = [e for (e,) in p.terms]
    lo, hi = min(exps), max(exps)
    return tuple(p.terms.get((e,), 0) for e in range(lo, hi + 1))


def _symmetric_up_to_unit(p: LaurentPoly) -> bool:
    var = p.vars[0]
    flipped = _normal_form(p.substitute_inverse(var))
    return flipped == _normal_form(p) or flipped == _normal_form(-p)


def h1_order(knot: KnotDescriptor, p: int) -> int:
    """|H_1| of the p-fold branched cyclic cover; 0 encodes positive Betti number."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return abs(knot.alexander.resultant_with_cyclotomic(p))


def wheel_knot(n: int) -> KnotDescriptor:
    """The n-spoke wheel surgery knot, A(t) = (1-(1-t)^n)(1-(1-t^-1)^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    half = _ONE - (_ONE - _T) ** n
    alexander = half * half.substitute_inverse("t")
    return KnotDescriptor(f"wheel-{n}", alexander)


def f_table(p: int, n_max: int) -> list[tuple[int, int]]:
    """Rows (n, |H_1| of the p-fold cover of the n-spoke wheel) for n=1..n_max."""
    if p < 1 or n_max < 1:
        raise ValueError("p and n_max must be >= 1")
    return [(n, h1_order(wheel_knot(n), p)) for n in range(1, n_max + 1)]


def unknot() -> KnotDescriptor:
    return KnotDescriptor("unknot", _ONE)


def trefoil() -> KnotDescriptor:
    return KnotDescriptor("trefoil", LaurentPoly.univariate({-1: 1, 0: -1, 1: 1}))


def figure_eight() -> KnotDescriptor:
    return KnotDescriptor("figure-eight", LaurentPoly.univariate({-1: -1, 0: 3, 1: -1}))


CATALOG = {
    "unknot": unknot,
    "trefoil": trefoil,
    "figure-eight": figure_eight,
}
