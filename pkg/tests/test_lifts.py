import itertools
import random

import pytest

from covercalc.lifts import LiftEdge, LiftSystem, admissible, solve


def triangle(offsets, p, directed_cycle=True):
    a, b, c = offsets
    if directed_cycle:
        edges = (LiftEdge("e1", 1, 2, a), LiftEdge("e2", 2, 3, b), LiftEdge("e3", 3, 1, c))
    else:
        edges = (LiftEdge("e1", 1, 2, a), LiftEdge("e2", 2, 3, b), LiftEdge("e3", 1, 3, c))
    return LiftSystem(vertices=(1, 2, 3), edges=edges, p=p)


def brute_force(system):
    solutions = []
    for values in itertools.product(range(system.p), repeat=len(system.vertices)):
        assign = dict(zip(system.vertices, values))
        if all(
            (assign[e.head] - assign[e.tail] - e.offset) % system.p == 0
            for e in system.edges
        ):
            solutions.append(assign)
    return solutions


def as_set(solutions):
    return {tuple(sorted(s.items(), key=lambda kv: str(kv[0]))) for s in solutions}


def test_triangle_zero_offsets_has_constant_solutions():
    sols = solve(triangle((0, 0, 0), 3))
    assert sols is not None and len(sols) == 3
    assert all(len(set(s.values())) == 1 for s in sols)


def test_directed_cycle_with_unit_surplus_is_inadmissible():
    system = triangle((1, 0, 0), 3)
    assert solve(system) is None
    assert as_set(brute_force(system)) == set()


def test_single_edge_offset_reduces_mod_p():
    system = LiftSystem(
        vertices=("a", "b"), edges=(LiftEdge("e", "a", "b", 5),), p=2
    )
    sols = solve(system)
    assert sols is not None and len(sols) == 2
    for s in sols:
        assert (s["b"] - s["a"]) % 2 == 1


def test_p1_always_admissible():
    assert admissible(triangle((1, 2, 3), 1))


def test_theta_cycle_offsets_inadmissible():
    # two independent cycles with offset sums 0 and 1 mod 2
    system = LiftSystem(
        vertices=("u", "v"),
        edges=(
            LiftEdge("e1", "u", "v", 0),
            LiftEdge("e2", "u", "v", 0),
            LiftEdge("e3", "u", "v", 1),
        ),
        p=2,
    )
    assert not admissible(system)
    assert as_set(brute_force(system)) == set()


def test_acyclic_always_admissible():
    system = LiftSystem(
        vertices=(1, 2, 3, 4),
        edges=(LiftEdge("a", 1, 2, 7), LiftEdge("b", 2, 3, -4), LiftEdge("c", 3, 4, 2)),
        p=5,
    )
    assert admissible(system)


def test_disconnected_raises():
    system = LiftSystem(
        vertices=(1, 2, 3, 4),
        edges=(LiftEdge("a", 1, 2, 0), LiftEdge("b", 3, 4, 0)),
        p=3,
    )
    with pytest.raises(ValueError):
        solve(system)


def test_rejects_bad_modulus():
    with pytest.raises(ValueError):
        LiftSystem(vertices=(1,), edges=(), p=0)


def random_system(rng):
    n = rng.randint(1, 5)
    vertices = tuple(range(1, n + 1))
    # spanning path keeps it connected, then extra random edges
    edges = [
        LiftEdge(f"t{i}", i, i + 1, rng.randint(-6, 6)) for i in range(1, n)
    ]
    for j in range(rng.randint(0, 4)):
        a, b = rng.randint(1, n), rng.randint(1, n)
        edges.append(LiftEdge(f"x{j}", a, b, rng.randint(-6, 6)))
    return LiftSystem(vertices=vertices, edges=tuple(edges), p=rng.randint(1, 5))


def test_solver_matches_brute_force():
    rng = random.Random(42)
    for _ in range(100):
        system = random_system(rng)
        expected = as_set(brute_force(system))
        got = solve(system)
        assert as_set(got or []) == expected
        assert len(got or []) in (0, system.p)


def test_solutions_ordered_by_root_value():
    system = triangle((1, 1, -2), 4)
    sols = solve(system)
    assert sols is not None
    root = min(system.vertices)
    assert [s[root] for s in sols] == [0, 1, 2, 3]


def test_admissible_invariant_under_edge_reversal():
    rng = random.Random(23)
    for _ in range(50):
        system = random_system(rng)
        k = rng.randrange(len(system.edges)) if system.edges else None
        if k is None:
            continue
        flipped = list(system.edges)
        e = flipped[k]
        flipped[k] = LiftEdge(e.id, e.head, e.tail, -e.offset)
        other = LiftSystem(system.vertices, tuple(flipped), system.p)
        assert admissible(system) == admissible(other)


def test_json_round_trip():
    system = triangle((1, 0, -1), 3)
    again = LiftSystem.from_json_dict(system.to_json_dict())
    assert again.p == 3
    assert as_set(solve(again) or []) == as_set(solve(system) or [])
