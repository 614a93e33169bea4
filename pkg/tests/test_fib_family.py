"""Closed forms for the Fibonacci-shift family against the brute-force oracle."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsemi.fib_family import (
    EnumerationTooLarge,
    TableTooLarge,
    enumerate_sparse_subsets,
    family_apery,
    family_apery_value,
    family_frobenius,
    family_generators,
    family_genus,
    family_genus_recurrence_check,
    family_genus_sum,
    family_summary,
    kaplansky_count,
    zeckendorf_bijection_check,
)
from fibsemi.fibonacci import beta, fib
from fibsemi.semigroup_core import NumericalSemigroup


# -- generators --------------------------------------------------------------

def test_generators_reproduce_known_list():
    assert family_generators(7) == (13, 14, 15, 16, 18, 21)


def test_generators_trivial_parameters():
    assert family_generators(0) == (1,)
    assert family_generators(1) == (1,)
    assert family_generators(2) == (1,)


def test_generators_count_and_shape():
    for a in range(3, 40):
        gens = family_generators(a)
        assert len(gens) == a - 1
        assert gens[0] == fib(a)
        assert gens == tuple(sorted(set(gens)))
        assert gens[-1] == fib(a) + fib(a - 1)


def test_generators_a10_include_top_shift():
    # the shift by fib(9) = 34 is a genuine minimal generator
    assert family_generators(10) == (55, 56, 57, 58, 60, 63, 68, 76, 89)
    # the first eight values alone generate a smaller semigroup in which
    # they are still the minimal system
    truncated = (55, 56, 57, 58, 60, 63, 68, 76)
    assert NumericalSemigroup(truncated).minimal_generators() == truncated
    assert NumericalSemigroup(truncated).frobenius() != family_frobenius(10)


def test_generators_are_oracle_minimal():
    for a in range(3, 13):
        gens = family_generators(a)
        assert NumericalSemigroup(gens).minimal_generators() == gens


# -- Apery -------------------------------------------------------------------

def test_apery_reproduces_known_values():
    table = family_apery(7)
    assert table.n == 13
    assert table.w == (0, 14, 15, 16, 30, 18, 32, 33, 21, 35, 36, 37, 51)


def test_apery_value_pointwise():
    assert family_apery_value(7, 0) == 0
    assert family_apery_value(7, 4) == 30
    assert family_apery_value(7, 12) == 51
    with pytest.raises(ValueError):
        family_apery_value(7, 13)
    with pytest.raises(ValueError):
        family_apery_value(7, -1)


def test_apery_value_has_no_size_bound():
    # pointwise queries stay cheap far beyond any materialization bound
    assert family_apery_value(200, 1) == fib(200) + 1


def test_apery_small_parameters_collapse():
    for a in range(3):
        assert family_apery(a).w == (0,)


def test_apery_table_bound_enforced():
    with pytest.raises(TableTooLarge):
        family_apery(40)
    with pytest.raises(TableTooLarge):
        family_apery(10, table_bound=50)
    assert family_apery(10, table_bound=55).n == 55


def test_apery_matches_oracle():
    for a in (8, 11):
        gens = family_generators(a)
        assert NumericalSemigroup(gens).apery(fib(a)) == family_apery(a)


# -- Frobenius ----------------------------------------------------------------

def test_frobenius_known_values():
    assert family_frobenius(7) == 38
    assert family_frobenius(2) == -1
    assert family_frobenius(0) == -1
    assert family_frobenius(1) == -1
    assert family_frobenius(12) == 719


def test_frobenius_12_matches_oracle():
    sg = NumericalSemigroup(family_generators(12))
    assert sg.frobenius() == 719


def test_frobenius_via_embedding_dimension_restatement():
    for a in range(3, 200):
        e = a - 1
        assert family_frobenius(a) == (e // 2) * fib(a) - 1


# -- genus ---------------------------------------------------------------------

def test_genus_known_values():
    assert family_genus(7) == 20
    assert family_genus(2) == 0
    assert family_genus(0) == 0
    assert family_genus(3) == 1
    assert family_genus(4) == 2


def test_genus_sum_examples():
    assert family_genus_sum(7) == 20
    assert family_genus_sum(3) == 1
    assert family_genus_sum(4) == 2
    with pytest.raises(ValueError):
        family_genus_sum(2)


def test_genus_two_routes_agree():
    for a in range(3, 61):
        assert family_genus(a) == family_genus_sum(a)


def test_genus_equals_beta_sum():
    for a in range(3, 21):
        assert family_genus(a) == sum(beta(x) for x in range(1, fib(a)))


def test_genus_recurrence():
    assert family_genus_recurrence_check(5)
    assert family_genus_recurrence_check(7)
    assert family_genus_recurrence_check(30)
    for a in range(5, 101):
        assert family_genus_recurrence_check(a)
    with pytest.raises(ValueError):
        family_genus_recurrence_check(4)


def test_genus_recurrence_terms_recomputed():
    # the a = 7 instance, with both addends taken from the closed form
    assert family_genus(6) == 10
    assert family_genus(5) == 5
    assert family_genus(7) == family_genus(6) + family_genus(5) + fib(5)


# -- sparse-subset combinatorics -----------------------------------------------

def test_kaplansky_known_values():
    assert kaplansky_count(7, 2) == 6
    assert kaplansky_count(7, 4) == 0
    assert kaplansky_count(9, 3) == 10
    assert kaplansky_count(5, 0) == 1
    with pytest.raises(ValueError):
        kaplansky_count(1, 1)
    with pytest.raises(ValueError):
        kaplansky_count(5, -1)


def test_sparse_subsets_examples():
    assert enumerate_sparse_subsets(5, 1) == [(2,), (3,), (4,)]
    assert enumerate_sparse_subsets(7, 3) == [(2, 4, 6)]
    assert len(enumerate_sparse_subsets(8, 2)) == 10
    assert enumerate_sparse_subsets(4, 0) == [()]
    assert enumerate_sparse_subsets(2, 1) == []


def test_sparse_subsets_lex_order_and_validity():
    subs = enumerate_sparse_subsets(12, 3)
    assert subs == sorted(subs)
    for s in subs:
        assert all(2 <= v <= 11 for v in s)
        assert all(b - a >= 2 for a, b in zip(s, s[1:]))
    assert len(set(subs)) == len(subs)


def test_sparse_subsets_counts_match_kaplansky():
    for n in range(2, 21):
        for m in range(0, n):
            assert len(enumerate_sparse_subsets(n, m)) == kaplansky_count(n, m)


def test_sparse_subsets_enumeration_bound():
    with pytest.raises(EnumerationTooLarge):
        enumerate_sparse_subsets(41, 2)
    assert len(enumerate_sparse_subsets(40, 1)) == 38


def test_bijection_check_examples():
    assert zeckendorf_bijection_check(3)
    assert zeckendorf_bijection_check(7)
    assert zeckendorf_bijection_check(20)
    with pytest.raises(ValueError):
        zeckendorf_bijection_check(2)
    with pytest.raises(ValueError):
        zeckendorf_bijection_check(26)


def test_bijection_class_sizes_for_a7():
    counts: dict[int, int] = {}
    for x in range(1, fib(7)):
        counts[beta(x)] = counts.get(beta(x), 0) + 1
    assert counts == {1: 5, 2: 6, 3: 1}
    assert sum(counts.values()) == fib(7) - 1 == 12


# -- summary --------------------------------------------------------------------

def test_summary_a7_exact():
    s = family_summary(7)
    assert s.generators == (13, 14, 15, 16, 18, 21)
    assert s.embedding_dimension == 6
    assert s.multiplicity == 13
    assert s.frobenius == 38
    assert s.genus == 20
    assert s.n_count == 19
    assert s.wilf_slack == 75


def test_summary_trivial_parameter():
    s = family_summary(0)
    assert s.generators == (1,)
    assert s.embedding_dimension == 1
    assert s.multiplicity == 1
    assert s.frobenius == -1
    assert s.genus == 0
    assert s.n_count == 0
    assert s.wilf_slack == 0


def test_summary_oracle_scale_and_identity_scale():
    # full oracle agreement where feasible
    s = family_summary(14)
    sg = NumericalSemigroup(s.generators)
    assert sg.frobenius() == s.frobenius
    assert sg.genus() == s.genus
    assert sg.n_count() == s.n_count
    assert sg.embedding_dimension() == s.embedding_dimension
    # internal identities only, far beyond oracle scale
    big = family_summary(25)
    assert big.genus + big.n_count == big.frobenius + 1
    assert big.wilf_slack == big.embedding_dimension * big.n_count - (big.frobenius + 1)


def test_summary_large_parameter_exact_arithmetic():
    s = family_summary(90)
    assert s.frobenius == 44 * fib(90) - 1
    assert s.multiplicity == fib(90)
    assert s.embedding_dimension == 89
    assert s.genus + s.n_count == s.frobenius + 1
    assert s.wilf_slack >= 0


def test_wilf_slack_nonnegative_sweep():
    for a in range(0, 101):
        assert family_summary(a).wilf_slack >= 0


def test_membership_inclusion_of_later_fibonacci():
    # every fib(n) with n >= a lies in the semigroup
    for a in range(3, 13):
        sg = NumericalSemigroup(family_generators(a))
        for n in range(a, a + 9):
            assert sg.contains(fib(n))


@given(st.integers(min_value=0, max_value=400))
@settings(max_examples=80, deadline=None)
def test_summary_identities_random_parameter(a):
    s = family_summary(a)
    assert s.genus + s.n_count == s.frobenius + 1
    assert s.wilf_slack == s.embedding_dimension * s.n_count - (s.frobenius + 1)
    assert s.wilf_slack >= 0
    assert s.multiplicity == s.generators[0]
    assert s.embedding_dimension == len(s.generators)


def test_negative_parameter_rejected():
    for fn in (family_generators, family_frobenius, family_genus, family_summary):
        with pytest.raises(ValueError):
            fn(-1)
    with pytest.raises(ValueError):
        family_apery(-1)
    with pytest.raises(ValueError):
        family_apery_value(-1, 0)
