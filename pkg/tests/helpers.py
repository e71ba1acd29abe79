"""Shared fixture builders: reference diagrams, random generators, relabeling."""
from __future__ import annotations

import random

from covercalc.diagrams import (
    DecoratedDiagram,
    Edge,
    Leg,
    attach_leg_by_subdivision,
    theta,
)


def chord_fixture() -> DecoratedDiagram:
    """Two legs joined by a single edge: the ruled-out chord."""
    return DecoratedDiagram(
        label="chord",
        vertices=("a", "b"),
        edges=(Edge("e", "a", "b", 0),),
        legs=(Leg("l1", "a", 1, "e"), Leg("l2", "b", 1, "e")),
    )


def fork_fixture() -> DecoratedDiagram:
    """Two legs on one vertex: the ruled-out fork (incidence still 3 everywhere)."""
    return DecoratedDiagram(
        label="fork",
        vertices=("u", "v", "w"),
        edges=(
            Edge("e1", "u", "v", 0),
            Edge("e2", "u", "v", 0),
            Edge("e3", "u", "w", 0),
        ),
        legs=(
            Leg("l1", "v", 1, "e1"),
            Leg("l2", "w", 1, "e3"),
            Leg("l3", "w", -1, "e3"),
        ),
    )


def theta_with_legs(n: int) -> DecoratedDiagram:
    """Theta with n legs hung on edge e1 by repeated subdivision."""
    d = theta(label=f"theta-{n}legs")
    edge = "e1"
    for i in range(1, n + 1):
        d = attach_leg_by_subdivision(d, edge, f"l{i}", sign=1, target="first")
        edge = f"{edge}~l{i}b"
    return d


def example_two_leg_theta() -> DecoratedDiagram:
    """Theta with two legs whose cycle windings are (eps1, eps2 + 1).

    Edges are named so the lowest-id spanning tree is {k, m1, n1}, making
    the two fundamental cycles pass through exactly one leg chain each.
    """
    return DecoratedDiagram(
        label="two-leg-theta",
        vertices=("u", "v", "w1", "w2"),
        edges=(
            Edge("k", "u", "v", 0),
            Edge("m1", "u", "w1", 0),
            Edge("m2", "w1", "v", 0),
            Edge("n1", "u", "w2", 1),
            Edge("n2", "w2", "v", 0),
        ),
        legs=(Leg("l1", "w1", 1, "m1"), Leg("l2", "w2", 1, "n1")),
    )


def kappa_diagram(n: int) -> DecoratedDiagram:
    """K4 with a chain of n legs subdividing one edge.

    Every cycle through the chain picks up winding sum eps_1 + ... + eps_n,
    all other cycles are constant zero, so the multiplier reduces to the
    roots-of-unity sum of (1-t)^n.
    """
    d = DecoratedDiagram(
        label=f"kappa-{n}",
        vertices=(1, 2, 3, 4),
        edges=(
            Edge("a", 1, 2, 0),
            Edge("b", 1, 3, 0),
            Edge("c", 1, 4, 0),
            Edge("d", 2, 3, 0),
            Edge("e", 2, 4, 0),
            Edge("f", 3, 4, 0),
        ),
    )
    edge = "a"
    for i in range(1, n + 1):
        d = attach_leg_by_subdivision(d, edge, f"l{i}", sign=1, target="first")
        edge = f"{edge}~l{i}b"
    return d


def dumbbell() -> DecoratedDiagram:
    """Two self-loops joined by an edge; valid and complete, surplus 2."""
    return DecoratedDiagram(
        label="dumbbell",
        vertices=("x", "y"),
        edges=(
            Edge("lx", "x", "x", 0),
            Edge("mid", "x", "y", 0),
            Edge("ly", "y", "y", 0),
        ),
    )


def k4_diagram() -> DecoratedDiagram:
    return DecoratedDiagram(
        label="k4",
        vertices=(1, 2, 3, 4),
        edges=(
            Edge("a", 1, 2, 0),
            Edge("b", 1, 3, 0),
            Edge("c", 1, 4, 0),
            Edge("d", 2, 3, 0),
            Edge("e", 2, 4, 0),
            Edge("f", 3, 4, 0),
        ),
    )


def random_diagram(rng: random.Random, max_legs: int = 12) -> DecoratedDiagram:
    """A random valid complete diagram: random base graph, windings, legs."""
    base = rng.choice([theta, dumbbell, k4_diagram])()
    edges = tuple(
        Edge(e.id, e.tail, e.head, rng.randint(-3, 3)) for e in base.edges
    )
    d = DecoratedDiagram(base.label, base.vertices, edges)
    n_legs = rng.randint(0, max_legs)
    for i in range(1, n_legs + 1):
        taken = {l.edge for l in d.legs}
        edge = rng.choice([e.id for e in d.edges if e.id not in taken])
        d = attach_leg_by_subdivision(
            d,
            edge,
            f"l{i}",
            sign=rng.choice((1, -1)),
            target=rng.choice(("first", "second")),
        )
    return d


def relabel(d: DecoratedDiagram, prefix: str) -> DecoratedDiagram:
    """Rename every vertex, edge and leg id; structure preserved."""
    vmap = {v: f"{prefix}v{i}" for i, v in enumerate(d.vertices)}
    emap = {e.id: f"{prefix}e{i}" for i, e in enumerate(d.edges)}
    lmap = {l.id: f"{prefix}l{i}" for i, l in enumerate(d.legs)}
    return DecoratedDiagram(
        label=d.label + "-relabeled",
        vertices=tuple(vmap[v] for v in d.vertices),
        edges=tuple(
            Edge(emap[e.id], vmap[e.tail], vmap[e.head], e.winding) for e in d.edges
        ),
        legs=tuple(
            Leg(lmap[l.id], vmap[l.vertex], l.sign, emap[l.edge]) for l in d.legs
        ),
        twists={emap[k]: v for k, v in d.twists.items()},
    )


def flip_all(d: DecoratedDiagram) -> DecoratedDiagram:
    """Flip every wrap sign and negate every base winding."""
    return DecoratedDiagram(
        label=d.label,
        vertices=d.vertices,
        edges=tuple(Edge(e.id, e.tail, e.head, -e.winding) for e in d.edges),
        legs=tuple(Leg(l.id, l.vertex, -l.sign, l.edge) for l in d.legs),
        twists=d.twists,
    )
