"""Degree and maximal-subgroup bounds with their equality characterizations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import grouplattice as gl
from grouplattice.arith import divisors
from grouplattice.bounds import (
    CandidateOrders,
    candidate_orders,
    cww_b,
    edge_bound,
    herzog_manz_c,
    lemma_2_1,
    lemma_2_3_check,
    lemma_2_3_scan,
    newton_d,
    newton_e,
    wall_a,
)
from grouplattice.errors import (
    GroupError,
    NotPrime,
    NotSolvable,
    PrimesNotDistinct,
    TrivialGroup,
)
from grouplattice.lattice import all_subgroups


def lat(g):
    return all_subgroups(g)


# ---------------------------------------------------------------------------
# per-subgroup degree bound


def test_degree_bound_elementary_abelian_equality():
    g = gl.elementary_abelian(2, 3)
    lattice = lat(g)
    h = next(s for s in lattice.subgroups if s.order == 2)
    rep = lemma_2_1(g, h, lattice)
    assert rep.computed == 4
    assert rep.limit == Fraction(4)  # 2 + 8/2 - 2
    assert rep.holds and rep.equality and rep.equality_condition


def test_degree_bound_cyclic_4_equality():
    g = gl.cyclic(4)
    lattice = lat(g)
    h = next(s for s in lattice.subgroups if s.order == 2)
    rep = lemma_2_1(g, h, lattice)
    assert (rep.computed, rep.limit) == (2, Fraction(2))
    assert rep.equality and rep.equality_condition


def test_degree_bound_cyclic_9_strict():
    g = gl.cyclic(9)
    lattice = lat(g)
    h = next(s for s in lattice.subgroups if s.order == 3)
    rep = lemma_2_1(g, h, lattice)
    assert (rep.computed, rep.limit) == (2, Fraction(4))
    assert rep.holds and not rep.equality and not rep.equality_condition


def test_degree_bound_rejects_nonsolvable():
    g = gl.alternating(5)
    with pytest.raises(NotSolvable):
        lemma_2_1(g, g.trivial_subgroup(), None)


def test_degree_bound_equality_characterization_all_pairs(catalog36):
    # every subgroup of every solvable catalog group up to order 24
    for entry in catalog36:
        g = entry.group
        if g.order > 24 or not g.is_solvable:
            continue
        lattice = lat(g)
        for h in lattice.subgroups:
            rep = lemma_2_1(g, h, lattice)  # internal assert enforces iff
            assert rep.holds


# ---------------------------------------------------------------------------
# maximal-subgroup counts


def test_maximal_count_bound_s3(s3):
    rep = wall_a(s3, lat(s3))
    assert (rep.computed, rep.limit, rep.holds) == (4, Fraction(5), True)


def test_maximal_count_bound_s4(s4):
    rep = wall_a(s4, lat(s4))
    assert (rep.computed, rep.limit, rep.holds) == (8, Fraction(23), True)


def test_smallest_prime_refinement_s3(s3):
    rep = cww_b(s3, lat(s3))
    assert (rep.computed, rep.limit) == (4, Fraction(5))
    assert rep.holds and not rep.equality and not rep.equality_condition


def test_smallest_prime_refinement_elementary_abelian_equality():
    g = gl.elementary_abelian(3, 2)
    rep = cww_b(g, lat(g))
    assert (rep.computed, rep.limit) == (4, Fraction(4))
    assert rep.equality and rep.equality_condition


def test_smallest_prime_refinement_condition_over_catalog(catalog36):
    for entry in catalog36:
        g = entry.group
        if g.order == 1 or g.order > 24 or not g.is_solvable:
            continue
        rep = cww_b(g, lat(g))
        assert rep.holds
        assert rep.equality == rep.equality_condition


def test_frattini_index_bound_d8(d8):
    rep = herzog_manz_c(d8, lat(d8))
    assert (rep.computed, rep.limit) == (3, Fraction(3))
    assert rep.equality


def test_frattini_index_bound_catalog(catalog36):
    for entry in catalog36:
        g = entry.group
        if g.order == 1 or g.order > 24 or not g.is_solvable:
            continue
        assert herzog_manz_c(g, lat(g)).holds


def test_p_power_index_maximal_counts_s3(s3):
    lattice = lat(s3)
    by_two = newton_d(s3, lattice, 2)
    assert [r.bound_name for r in by_two] == ["newton_d_main", "newton_d_sharp"]
    assert [(r.computed, r.limit, r.equality) for r in by_two] == [
        (1, Fraction(1), True),
        (1, Fraction(1), True),
    ]
    by_three = newton_d(s3, lattice, 3)
    # no proper normal subgroup of 3-power index, so only the main report
    assert [r.bound_name for r in by_three] == ["newton_d_main"]
    assert (by_three[0].computed, by_three[0].limit) == (3, Fraction(3))
    assert by_three[0].equality


def test_p_power_index_maximal_counts_boolean_cube():
    g = gl.elementary_abelian(2, 5)
    lattice = lat(g)
    reports = newton_d(g, lattice, 2)
    assert [(r.bound_name, r.computed, r.limit) for r in reports] == [
        ("newton_d_main", 31, Fraction(31)),
        ("newton_d_sharp", 31, Fraction(31)),
    ]


def test_p_power_index_rejects_non_divisor(s3):
    with pytest.raises(GroupError):
        newton_d(s3, lat(s3), 5)
    with pytest.raises(NotPrime):
        newton_d(s3, lat(s3), 4)


def test_prime_power_part_bound_examples(s3, s4):
    rep = newton_e(s3, lat(s3))
    assert (rep.computed, rep.limit, rep.equality) == (4, Fraction(4), True)

    c12 = gl.cyclic(12)
    rep = newton_e(c12, lat(c12))
    assert (rep.computed, rep.limit, rep.equality) == (2, Fraction(7), False)

    c5 = gl.cyclic(5)
    rep = newton_e(c5, lat(c5))
    assert (rep.computed, rep.limit, rep.equality) == (1, Fraction(1), True)

    rep = newton_e(s4, lat(s4))
    assert (rep.computed, rep.limit) == (8, Fraction(15))


def test_maximal_bounds_reject_trivial_and_nonsolvable():
    t = gl.trivial()
    with pytest.raises(TrivialGroup):
        wall_a(t, lat(t))
    a5 = gl.alternating(5)
    for fn in (wall_a, cww_b, herzog_manz_c, newton_e):
        with pytest.raises(NotSolvable):
            fn(a5, None)


def test_bounds_hold_across_solvable_catalog(catalog36):
    for entry in catalog36:
        g = entry.group
        if g.order == 1 or g.order > 24 or not g.is_solvable:
            continue
        lattice = lat(g)
        assert wall_a(g, lattice).holds
        assert newton_e(g, lattice).holds
        for p in sorted(gl.factorize(g.order)):
            for rep in newton_d(g, lattice, p):
                assert rep.holds


# ---------------------------------------------------------------------------
# three-prime inequality


def test_three_prime_inequality_smallest_case():
    rep = lemma_2_3_check(2, 3, 5, 1, 1, 1)
    assert (rep.computed, rep.limit, rep.holds) == (10, Fraction(15), True)


def test_three_prime_inequality_rejects_bad_input():
    with pytest.raises(PrimesNotDistinct):
        lemma_2_3_check(2, 3, 3, 1, 1, 1)
    with pytest.raises(NotPrime):
        lemma_2_3_check(2, 3, 9, 1, 1, 1)
    with pytest.raises(GroupError):
        lemma_2_3_check(2, 3, 5, 1, 0, 1)


def test_three_prime_scan_is_clean():
    reports = lemma_2_3_scan(31, 4)
    assert reports
    assert all(r.holds for r in reports)


def test_three_prime_scan_counts():
    # primes up to 13: C(6, 3) triples, 2^3 exponent patterns up to 2
    reports = lemma_2_3_scan(13, 2)
    assert len(reports) == 20 * 8


@given(
    st.tuples(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 4)),
    st.tuples(st.sampled_from([17, 19, 23]), st.integers(1, 4)),
    st.tuples(st.sampled_from([29, 31, 37]), st.integers(1, 4)),
)
def test_three_prime_inequality_property(a, b, c):
    rep = lemma_2_3_check(a[0], b[0], c[0], a[1], b[1], c[1])
    assert rep.holds


# ---------------------------------------------------------------------------
# which orders can carry a high-degree vertex


def test_candidate_orders_small_cases():
    for n in range(1, 12):
        res = candidate_orders(n)
        assert res == CandidateOrders(n=n, small_case=True, divisors=None)


def test_candidate_orders_examples():
    assert candidate_orders(12).divisors == frozenset({1, 2, 6, 12})
    assert candidate_orders(16).divisors == frozenset({1, 2, 8, 16})
    assert candidate_orders(15).divisors == frozenset({1, 15})


def test_candidate_orders_rejects_nonpositive():
    with pytest.raises(GroupError):
        candidate_orders(0)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=12, max_value=10000))
def test_candidate_orders_land_in_four_targets(n):
    res = candidate_orders(n)
    assert not res.small_case
    targets = {1, 2, n, n // 2 if n % 2 == 0 else n}
    assert res.divisors <= targets
    assert {1, n} <= res.divisors  # endpoints always satisfy the quadratic


# ---------------------------------------------------------------------------
# global edge count


def test_edge_count_bound_examples(d8):
    rep = edge_bound(lat(gl.cyclic(2)))
    assert (rep.computed, rep.limit, rep.equality) == (1, Fraction(1), True)
    rep = edge_bound(lat(d8))
    assert (rep.computed, rep.limit) == (15, Fraction(35))
    rep = edge_bound(lat(gl.elementary_abelian(2, 3)))
    assert (rep.computed, rep.limit) == (35, Fraction(56))


def test_edge_count_bound_catalog(catalog36):
    for entry in catalog36:
        g = entry.group
        if g.order > 24 or not g.is_solvable:
            continue
        assert edge_bound(lat(g)).holds
