"""Rank-oracle matroids: graphic/bond construction, duality, strong maps."""

import random

import pytest

import corpus
from topopoly import matroid as mt
from topopoly import multigraph as mg


def triangle():
    return mg.Multigraph((0, 1, 2), {1: (0, 1), 2: (1, 2), 3: (0, 2)})


def loops_and_bridge():
    return mg.Multigraph((0, 1), {1: (0, 0), 2: (0, 1), 3: (1, 1)})


def test_cycle_matroid_ranks():
    m = mt.cycle_matroid(triangle())
    assert m.rank() == 2
    assert m.rank(frozenset({1, 2})) == 2
    assert m.rank(frozenset({1})) == 1
    assert m.rank(frozenset()) == 0


def test_loops_and_isthmuses():
    m = mt.cycle_matroid(loops_and_bridge())
    assert mt.is_loop(m, 1) and mt.is_loop(m, 3)
    assert mt.is_isthmus(m, 2)
    b = mt.bond_matroid(loops_and_bridge())
    # loops and isthmuses swap under duality
    assert mt.is_isthmus(b, 1) and mt.is_isthmus(b, 3)
    assert mt.is_loop(b, 2)


def test_dual_rank_formula():
    m = mt.cycle_matroid(triangle())
    d = mt.dual(m)
    n = len(m.ground)
    for a in map(frozenset, [(), (1,), (1, 2), (1, 2, 3), (2, 3)]):
        comp = frozenset(m.ground) - a
        assert d.rank(a) == len(a) + m.rank(comp) - m.rank()
    assert mt.dual(d).rank(frozenset({1, 2})) == m.rank(frozenset({1, 2}))
    assert d.rank() == n - m.rank()


def test_minors():
    m = mt.cycle_matroid(triangle())
    dm = mt.delete(m, 3)
    cm = mt.contract(m, 3)
    assert dm.ground == (1, 2) and cm.ground == (1, 2)
    assert dm.rank(frozenset({1, 2})) == 2
    assert cm.rank(frozenset({1, 2})) == 1
    assert cm.rank(frozenset({1})) == 1


def test_axioms_on_graphic_matroids():
    rng = random.Random(5)
    for _ in range(6):
        rs = corpus.random_rotation(rng, rng.randint(1, 4), rng.randint(0, 6))
        g = rs.underlying()
        mt.check_rank_axioms(mt.cycle_matroid(g))
        mt.check_rank_axioms(mt.bond_matroid(g))


def test_circuits_of_triangle():
    m = mt.cycle_matroid(triangle())
    assert mt.circuits(m) == [frozenset({1, 2, 3})]
    b = mt.bond_matroid(triangle())
    assert sorted(map(sorted, mt.circuits(b))) == [[1, 2], [1, 3], [2, 3]]


def test_is_flat():
    m = mt.cycle_matroid(triangle())
    assert mt.is_flat(m, frozenset())
    assert mt.is_flat(m, frozenset({1}))
    assert not mt.is_flat(m, frozenset({1, 2}))  # closure is everything
    assert mt.is_flat(m, frozenset({1, 2, 3}))


def test_self_perspective_is_valid():
    m = mt.cycle_matroid(triangle())
    mp = mt.make_perspective(m, m)
    assert mp.ground == m.ground


def test_identity_like_perspective():
    # cycle matroid maps onto its contraction-by-nothing; a genuinely
    # different quotient: contract one element on the target side
    m = mt.cycle_matroid(triangle())
    target = mt.RankMatroid(m.ground,
                            lambda a: m.rank(a | {1}) - m.rank(frozenset({1})),
                            name="contracted")
    mp = mt.make_perspective(m, target)
    mt.check_circuit_refinement(mp)  # raises on failure
    mt.check_flat_refinement(mp)


def test_perspective_rejects_wrong_order():
    m = mt.cycle_matroid(triangle())
    zero = mt.RankMatroid(m.ground, lambda a: 0, name="zero")
    mt.make_perspective(m, zero)  # everything maps onto rank zero
    with pytest.raises(mt.MatroidError):
        mt.make_perspective(zero, m)


def test_perspective_rejects_cycle_to_bond():
    g = loops_and_bridge()
    with pytest.raises(mt.MatroidError):
        mt.make_perspective(mt.cycle_matroid(g), mt.bond_matroid(g))
