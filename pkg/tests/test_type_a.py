from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affine_springer.combinatorics import cyclic_classes, dual_arrangement, iter_compositions, multinomial
from affine_springer.laurent import CharPoly, homogeneity_index, pi_power
from affine_springer.lattice import verify_almost_commute
from affine_springer import type_a as A

COPRIME = [(n, s) for n in range(1, 6) for s in range(1, 8) if gcd(n, s) == 1]


def subsets(n):
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def test_admissibility_messages():
    assert A.admissible_sl(3, 2) == []
    assert "gcd(s,n) != 1" in A.admissible_sl(4, 2)
    assert "b != 0" in A.admissible_sl(3, 2, 0)
    with pytest.raises(A.InadmissibleError, match="gcd"):
        A.standard_rep_sl(4, 2)


def test_standard_representative():
    N = A.standard_rep_sl(3, 2)
    assert N.char_poly() == CharPoly.from_coeffs([1, 0, 0, -pi_power(2)])
    assert homogeneity_index(N.char_poly()).q == Fraction(2, 3)
    assert verify_almost_commute(N, A.nu_sl(3, 2), 2)
    M = A.standard_rep_sl(2, 1, 5)
    assert M.trace().is_zero()
    assert M[1, 0] == pi_power(1, 5)


def test_companion_representative():
    M, f, e = A.companion_rep([0, Fraction(1, 2), 0, -1], Fraction(1, 2))
    assert M.char_poly() == CharPoly.from_coeffs([1, 0, pi_power(1, Fraction(1, 2)), 0, -pi_power(2)])
    assert verify_almost_commute(M, f, e)
    with pytest.raises(A.InadmissibleError):
        A.companion_rep([1], Fraction(1, 2))


def test_window_examples():
    assert A.enumerate_R(3, 2, 0) == [(-1, 0, 1), (0, 0, 0)]
    assert A.enumerate_R(2, 3, 0) == [(-1, 1), (0, 0)]
    for n in range(1, 6):
        for m in range(-2, 3):
            assert len(A.enumerate_R(n, 1, m)) == 1


@pytest.mark.parametrize("n,s", COPRIME)
def test_window_counts_match_closed_form(n, s):
    for m in range(-2, 3):
        R = A.enumerate_R(n, s, m)
        assert len(R) == A.count_R(n, s) == comb(n + s - 1, n) // s
        assert all(A.in_window(r, s) and sum(r) == m for r in R)


def test_phi_examples():
    assert A.phi((-1, 0, 1), 2).parts == (0, 1, 1)
    assert A.phi((0, 0, 0), 2).parts == (2, 0, 0)
    assert A.phi_inverse((0, 1, 1), 0) == (-1, 0, 1)
    with pytest.raises(ValueError):
        A.phi_inverse((1, 1, 0), 0)


@pytest.mark.parametrize("n,s", COPRIME)
def test_phi_picks_one_representative_per_necklace(n, s):
    for m in range(-2, 3):
        images = [A.phi(r, s) for r in A.enumerate_R(n, s, m)]
        assert all(A.in_C_sm(c, m) and A.phi_inverse(c, m) == r for c, r in zip(images, A.enumerate_R(n, s, m)))
        classes = Counter(A.psi(c).representative for c in images)
        assert set(classes) == {c.representative for c in cyclic_classes(n, s)}
        assert set(classes.values()) == {1}
        members = [c for c in iter_compositions(n, s) if A.in_C_sm(c, m)]
        assert sorted(members) == sorted(c.parts for c in images)


def test_parahoric_type():
    P = A.ParahoricTypeA(5, (3, 1))
    assert P.I == (1, 3) and P.m == 1 and P.J == (2, 5) and P.gaps == (2, 3)
    assert A.ParahoricTypeA.full(3).gaps == (1, 1, 1)
    with pytest.raises(A.InadmissibleError):
        A.ParahoricTypeA(3, ())
    with pytest.raises(A.InadmissibleError):
        A.ParahoricTypeA(3, (3,))


def test_chain_examples():
    assert len(A.enumerate_chains(3, 2, (1, 2, 3), 0)) == 4
    assert len(A.enumerate_chains(3, 2, (3,), 0)) == 2
    assert len(A.enumerate_chains(3, 2, (1, 3), 0)) == 3
    with pytest.raises(ValueError):
        A.enumerate_chains(3, 2, (1, 2), 0)


def test_euler_examples():
    assert A.euler_sl(3, 2, (0, 1, 2)) == 4
    assert A.euler_sl(3, 2, (0,)) == 2
    assert A.euler_sl(3, 2, (0, 1)) == 3
    with pytest.raises(A.InadmissibleError):
        A.euler_sl(4, 2, (0,))


@pytest.mark.parametrize("n,s", [(n, s) for n, s in COPRIME if n <= 4 and s <= 5])
def test_euler_formula_equals_chain_count(n, s):
    for I in subsets(n):
        chi = A.euler_sl(n, s, I)
        assert chi == A.euler_sl_oracle(n, s, I) == A.euler_sl_by_fibers(n, s, I)
    assert A.euler_sl(n, s, range(n)) == s ** (n - 1)
    assert A.euler_sl(n, s, (0,)) == factorial(n + s - 1) // (factorial(n) * factorial(s))


@pytest.mark.parametrize("n,s", [(3, 2), (3, 4), (4, 3), (2, 5)])
def test_chain_count_independent_of_base_valuation(n, s):
    for I in subsets(n):
        base = A.euler_sl_oracle(n, s, I)
        assert all(A.euler_sl_oracle(n, s, I, m) == base for m in (-1, 2))


@pytest.mark.parametrize("n,s", [(3, 2), (4, 3), (3, 5), (5, 2)])
def test_step_functions_and_matrices_correspond(n, s):
    J = tuple(range(1, n + 1))
    chains = A.enumerate_chains(n, s, J, 0)
    by_base = Counter(ch[0] for ch in chains)
    for r0 in A.enumerate_R(n, s, 0):
        c = A.phi(r0, s)
        dual = dual_arrangement(c)
        sigmas = A.enumerate_sigmas(r0, s, J)
        assert len(sigmas) == by_base[r0] == multinomial(dual.cells)
        for sg in sigmas:
            assert A.sigma_of_chain(A.chain_of_sigma(r0, sg, J), J) == sg
            Q = A.intersection_matrix_of_sigma(sg, dual, J)
            assert A.sigma_of_matrix(Q, dual, J) == sg


def test_fiber_sizes_over_base_vectors():
    J = (1, 2, 3)
    assert len(A.enumerate_sigmas((0, 0, 0), 2, J)) == 1
    assert len(A.enumerate_sigmas((-1, 0, 1), 2, J)) == 3


def test_intersection_matrix_examples():
    assert len(A.enumerate_intersection_matrices((0, 1, 3), 4, (2, 1, 0, 0))) == 2
    assert len(A.enumerate_intersection_matrices((0, 3), 4)) == comb(6, 3)
    assert len(A.enumerate_intersection_matrices((0, 1, 2, 3), 2)) == 8
    assert A.enumerate_intersection_matrices((0, 3), 2, (1, 1)) == []
    with pytest.raises(ValueError):
        A.enumerate_intersection_matrices((0, 2, 1), 2)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.integers(1, 4))
def test_intersection_matrix_count_formula(steps, t):
    d = [0]
    for x in steps:
        d.append(d[-1] + x)
    assert len(A.enumerate_intersection_matrices(d, t)) == A.count_intersection_matrices(d, t)


def test_jordan_types_of_windows():
    assert A.jordan_type_of_window((0, 0, 0), 2) == (3,)
    assert A.jordan_type_of_window((-1, 0, 1), 2) == (2, 1)
    for n in range(1, 6):
        s = n + 1
        zero_type = [r for r in A.enumerate_R(n, s, 0) if A.jordan_type_of_window(r, s) == (1,) * n]
        assert len(zero_type) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_jordan_type_cells_match_matrix_ranks(n):
    s = A.default_springer_s(n, n)
    for r in A.enumerate_R(n, s, 0):
        assert A.jordan_type_of_window(r, s) == A.jordan_type_of_window_matrix(r, s)


def test_springer_examples():
    assert A.springer_euler_sl((2, 1)) == 3
    assert A.springer_euler_sl((2, 1), (1, 2)) == 3
    assert A.springer_euler_sl((2, 1), (1,)) == 2
    assert A.springer_euler_sl((1, 1, 1)) == 6
    assert A.springer_euler_sl((3,)) == 1
    with pytest.raises(A.InadmissibleError):
        A.springer_euler_sl((2, 0))
    with pytest.raises(A.InadmissibleError):
        A.springer_euler_sl((2, 1), (3,))
    with pytest.raises(A.InadmissibleError):
        A.springer_euler_sl((1, 1, 1), None, 2)


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@pytest.mark.parametrize("n", range(1, 6))
def test_springer_full_flags_are_multinomials(n):
    for parts in partitions(n):
        assert A.springer_euler_sl(parts) == multinomial(parts)
    assert A.springer_euler_sl((1,) * n) == factorial(n)
    assert A.full_flag_fiber_sum(n, n + 1) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_springer_partial_flags_match_chains(n):
    for parts in partitions(n):
        for k in range(n):
            for I in combinations(range(1, n), k):
                assert A.springer_euler_sl(parts, I) == A.springer_euler_sl_by_chains(parts, I)


def test_default_springer_s():
    assert A.default_springer_s(3, 2) == 4
    assert A.default_springer_s(4, 1) == 3
