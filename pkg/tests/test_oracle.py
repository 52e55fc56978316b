import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import small_ideals
from edgedepth.enumeration import enumerate_connected_graphs
from edgedepth.graphs import complete, edge_ideal, paper_example, path
from edgedepth.homology import GF2, RATIONALS
from edgedepth.monomials import Monomial, MonomialIdeal, embed, ideal_power, minimalize, parse_monomial, permute
from edgedepth.oracle import (BOX, LATTICE, BoxOverflow, LatticeOverflow, SocleBudgetOverflow, TimeBudgetExceeded,
                              betti_table, depth, depth_from_table, lcm_lattice, projective_dimension,
                              socle_depth_zero, upper_koszul_complex)

NAMES = ["x", "y", "z"]


def M(t):
    return parse_monomial(t, NAMES)


def I(*texts):
    return minimalize([M(t) for t in texts], 3)


def test_lcm_lattice_examples():
    assert lcm_lattice(I("x*y")) == [M("x*y")]
    assert set(lcm_lattice(I("x*y", "y*z", "x*z"))) == {M("x*y"), M("y*z"), M("x*z"), M("x*y*z")}
    assert set(lcm_lattice(I("x*y", "y*z"))) == {M("x*y"), M("y*z"), M("x*y*z")}


def test_upper_koszul_examples():
    assert upper_koszul_complex(I("x*y"), M("x*y")).facets == ((),)
    assert upper_koszul_complex(I("x*y", "y*z"), M("x*y*z")).facets == ((0,), (2,))
    assert upper_koszul_complex(I("x"), M("y")).is_void()


@pytest.mark.parametrize("strategy", [LATTICE, BOX])
def test_betti_examples(strategy):
    t = betti_table(I("x*y"), strategy)
    assert t.entries == {(0, M("1")): 1, (1, M("x*y")): 1} and t.pd == 1
    t = betti_table(I("x*y", "y*z"), strategy)
    assert t.entries == {(0, M("1")): 1, (1, M("x*y")): 1, (1, M("y*z")): 1, (2, M("x*y*z")): 1}
    t = betti_table(I("x*y", "y*z", "x*z"), strategy)
    assert t.pd == 2 and t.total(2) == 2 and t.total(1) == 3


def test_depth_examples():
    assert depth(edge_ideal(path(2))).depth == 1
    assert depth(edge_ideal(complete(3))).depth == 1
    assert depth(edge_ideal(path(4))).depth == 2
    assert depth(ideal_power(edge_ideal(paper_example("square-sharp")), 2)).depth == 0


def test_depth_special_ideals():
    assert depth(MonomialIdeal.zero(3)).depth == 3
    assert depth(I("x", "y")).depth == 1
    assert depth(I("x", "y*z")).depth == 1
    assert depth(I("x^2"), 3).depth == 2
    with pytest.raises(ValueError):
        depth(MonomialIdeal.unit(2))
    with pytest.raises(ValueError):
        depth(I("x"), 2)


def test_socle_examples():
    two = ["x", "y"]
    J = minimalize([parse_monomial(t, two) for t in ("x^2", "x*y", "y^2")])
    w = socle_depth_zero(J)
    assert w is not None and w not in J
    assert all(w * Monomial.var(2, i) in J for i in range(2))
    assert socle_depth_zero(minimalize([parse_monomial("x*y", two)])) is None
    S = ideal_power(edge_ideal(paper_example("square-sharp")), 2)
    assert socle_depth_zero(S) is not None


def test_caps_raise_structured_errors():
    J = ideal_power(edge_ideal(path(5)), 2)
    with pytest.raises(LatticeOverflow) as e:
        betti_table(J, LATTICE, lattice_cap=5)
    assert e.value.cap == "lattice_cap"
    with pytest.raises(BoxOverflow) as e:
        betti_table(J, BOX, box_cap=5)
    assert e.value.cap == "box_cap"
    with pytest.raises(SocleBudgetOverflow):
        socle_depth_zero(J, budget=2)
    with pytest.raises(TimeBudgetExceeded):
        depth(ideal_power(edge_ideal(paper_example("cube-sharp")), 2), budget_ms=1)


def test_pruned_scan_matches_full_table():
    for n in range(2, 6):
        for G in enumerate_connected_graphs(n):
            for t in (1, 2):
                J = ideal_power(edge_ideal(G), t)
                assert depth(J).depth == depth_from_table(J)
                assert projective_dimension(J)[0] == betti_table(J).pd


def test_table_invariants_on_graphs():
    for G in enumerate_connected_graphs(5):
        J = ideal_power(edge_ideal(G), 2)
        t = betti_table(J)
        zero = [(i, b) for (i, b) in t.entries if i == 0]
        assert zero == [(0, Monomial.one(G.n))]
        lattice = set(lcm_lattice(J))
        assert all(b in lattice for (i, b) in t.entries if i >= 1)
        assert t.pd <= G.n


def taylor_count(J, b):
    gens = [g for g in J.generators if g.divides(b)]
    total = 0
    for k in range(len(gens) + 1):
        for S in itertools.combinations(gens, k):
            lcm = Monomial.one(J.ambient_n)
            for g in S:
                lcm = lcm.lcm(g)
            if lcm == b:
                total += -1 if k % 2 else 1
    return total


@given(small_ideals(max_exp=2, max_gens=4))
def test_k_polynomial_matches_taylor(J):
    t = betti_table(J, BOX)
    top = J.lcm_all().exponents
    for e in itertools.product(*[range(x + 1) for x in top]):
        b = Monomial(e)
        alt = sum(-r if i % 2 else r for (i, c), r in t.entries.items() if c == b)
        assert alt == taylor_count(J, b)


@given(small_ideals())
def test_strategies_agree(J):
    assert betti_table(J, LATTICE) == betti_table(J, BOX)


@given(small_ideals())
def test_free_variable_adds_one(J):
    E = embed(J, 1)
    assert depth(E).depth == depth(J).depth + 1
    a = betti_table(J).entries
    b = betti_table(E).entries
    assert b == {(i, Monomial(m.exponents + (0,))): r for (i, m), r in a.items()}


@given(small_ideals(), st.randoms(use_true_random=False))
def test_permutation_invariance(J, rnd):
    perm = list(range(J.ambient_n))
    rnd.shuffle(perm)
    assert depth(permute(J, perm)).depth == depth(J).depth


@given(small_ideals())
def test_socle_iff_depth_zero(J):
    assert (socle_depth_zero(J) is not None) == (depth(J).depth == 0)


def test_squarefree_edge_ideals_have_positive_depth():
    for n in range(2, 7):
        for G in enumerate_connected_graphs(n):
            assert depth(edge_ideal(G)).depth >= 1


def test_fields_agree_on_graph_powers():
    for G in enumerate_connected_graphs(5):
        J = ideal_power(edge_ideal(G), 2)
        assert depth(J, field=GF2).depth == depth(J, field=RATIONALS).depth


def test_cube_example_depths():
    C = paper_example("cube-sharp")
    I1 = edge_ideal(C)
    assert depth(I1).depth == 3
    assert depth(ideal_power(I1, 2)).depth == 2


def test_seeded_random_ideals_all_routes():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)] or [(1,) * n]
        J = minimalize([Monomial(g) for g in gens])
        d = depth(J).depth
        assert d == depth(J, strategy=BOX).depth == depth_from_table(J, strategy=BOX)
