"""Exact leading-order invariants of p-fold branched cyclic covers of knots.

Submodules:
    laurent   -- exact integer Laurent polynomials and roots-of-unity sums
    knots     -- homology orders of branched covers, the wheel-knot family
    diagrams  -- trivalent graphs with legs, completeness validation
    lifts     -- the mod-p lift equations and their solver
    signs     -- twist chains and comparison signs
    engine    -- leading-term multipliers and Casson-Walker-Lescop deltas
    cli       -- command-line frontend
"""

from .laurent import LaurentPoly
from .knots import KnotDescriptor, h1_order, wheel_knot, f_table
from .diagrams import DecoratedDiagram, Edge, Leg, validate_complete, surplus, degree
from .lifts import LiftSystem, LiftEdge, solve, admissible
from .signs import GraphIso, chain_twist, comparison_sign
from .engine import LeadingTerm, multiplier, cwl_delta, lmo_leading_multiplier, window_nonzero

__all__ = [
    "LaurentPoly",
    "KnotDescriptor",
    "h1_order",
    "wheel_knot",
    "f_table",
    "DecoratedDiagram",
    "Edge",
    "Leg",
    "validate_complete",
    "surplus",
    "degree",
    "LiftSystem",
    "LiftEdge",
    "solve",
    "admissible",
    "GraphIso",
    "chain_twist",
    "comparison_sign",
    "LeadingTerm",
    "multiplier",
    "cwl_delta",
    "lmo_leading_multiplier",
    "window_nonzero",
]

__version__ = "0.1.0"
