from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affine_springer import type_c as C
from affine_springer.combinatorics import iter_compositions
from affine_springer.laurent import CharPoly, pi_power
from affine_springer.lattice import is_symplectic_matrix, symplectic_gram, verify_almost_commute
from affine_springer.type_a import InadmissibleError, euler_sl, in_C_sm

SP_PAIRS = [(n, s) for n in range(1, 4) for s in (1, 3, 5) if C.admissible_sp_params(n, s) == []]


def subsets(items):
    items = list(items)
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


def test_parameter_checks():
    assert C.admissible_sp_params(2, 3) == []
    assert "s must be odd" in C.admissible_sp_params(2, 4)
    assert "gcd(s,n) != 1" in C.admissible_sp_params(3, 3)
    with pytest.raises(InadmissibleError, match="odd"):
        C.standard_rep_sp(2, 2)


def test_admissibility_of_products():
    assert C.admissible_sp(1, 2, 3, [1]).nil_elliptic
    assert not C.admissible_sp(1, 2, 2, [1]).regular_semisimple
    rep = C.admissible_sp(2, 1, 1, [1, 1])
    assert not rep.regular_semisimple and "b_i must be distinct" in rep.reasons
    assert not C.admissible_sp(1, 1, 2, [1]).nil_elliptic


def test_symplectic_representative():
    M = C.standard_rep_sp(2, 3)
    assert M.char_poly() == CharPoly.from_coeffs([1, 0, 0, 0, -pi_power(3)])
    assert is_symplectic_matrix(M, symplectic_gram(2))
    assert verify_almost_commute(M, C.nu_sp(2, 3), 3)


@pytest.mark.parametrize("coeffs", [[1], [0, 2], [3, 0, -1], [1, -2, 0, 5]])
def test_general_symplectic_representative(coeffs):
    n = len(coeffs)
    M = C.standard_rep_sp_general(coeffs, 1)
    expect = [0] * (2 * n + 1)
    for j, c in enumerate([1] + coeffs):
        expect[2 * j] = pi_power(j, c) if c else 0
    assert is_symplectic_matrix(M, symplectic_gram(n))
    assert M.char_poly() == CharPoly.from_coeffs(expect)
    with pytest.raises(InadmissibleError):
        C.standard_rep_sp_general([1, 1], Fraction(1, 2))


def test_window_examples():
    R0 = C.enumerate_R_sp(2, 3, 0)
    assert sorted(x.r for x in R0) == sorted([(0, 0, 0, 0), (0, -1, 0, 1), (-1, -1, 1, 1)])
    assert len(C.enumerate_R_sp(2, 3, 1)) == 4
    assert len(C.enumerate_R_sp(2, 3, 2)) == 3
    with pytest.raises(InadmissibleError):
        C.enumerate_R_sp(2, 3, 3)


@pytest.mark.parametrize("n,s", [(n, s) for n in range(1, 5) for s in (1, 3, 5, 7) if C.admissible_sp_params(n, s) == []])
def test_window_counts(n, s):
    for m in range(n + 1):
        R = C.enumerate_R_sp(n, s, m)
        assert len(R) == C.count_R_sp(n, s, m) == len(C.enumerate_R_sp(n, s, n - m))
        assert all(C.in_sp_window(x.r, s, x.I) for x in R)


def test_relabel_round_trip():
    assert C.relabel((1, 2, 3, 4)) == (2, 1, 3, 4)
    assert C.unrelabel(C.relabel((5, 6, 7, 8, 9, 10))) == (5, 6, 7, 8, 9, 10)


def test_q_coordinate_examples():
    qv = C.q_coords(C.SpWindowVector((0, -1, 0, 1), frozenset()), 3)
    assert C.psi_sp(qv) == (0, 2, 1)
    qv = C.q_coords((0, 0, 0, 0), 3)
    assert qv.I == frozenset() and C.psi_sp(qv) == (0, 0, 3)
    # (0, -1, 0, 1) has r_{n+i} = -r_i for both i, so its marker set is empty
    with pytest.raises(ValueError):
        C.q_coords(C.SpWindowVector((0, -1, 0, 1), frozenset({1})), 3)


def test_q_violation_names_the_condition():
    assert C.sp_q_violation((3, 0, 0, 0), ()) is None
    assert "q_n" in C.sp_q_violation((2, 0, 0, 0), ())
    assert "q_-1" in C.sp_q_violation((2, 0, 0, 1), ())
    with pytest.raises(ValueError):
        C.q_coords_inverse(C.SpQVector((2, 0, 0, 1), frozenset()))


@pytest.mark.parametrize("n,s", [(1, 3), (2, 3), (2, 5), (3, 5), (1, 5), (3, 1)])
def test_q_coordinates_and_vertices_invert(n, s):
    images = set()
    for m in range(n + 1):
        for x in C.enumerate_R_sp(n, s, m):
            qv = C.q_coords(x, s)
            assert C.q_coords_inverse(qv) == x
            assert in_C_sm(qv.c, m)
            p = C.psi_sp(qv)
            assert C.vertex_markers(p) == x.I
            assert C.psi_sp_inverse(p) == qv
            assert C.window_of_vertex(p) == x
            images.add(p)
    assert images == set(iter_compositions(n + 1, s))


def test_succession_counts():
    assert C.succession_counts(2, 1) == {0: 1, 1: 1}
    for n in range(1, 9):
        for m in range(n + 1):
            assert C.succession_counts(n, m) == C.succession_counts_scan(n, m)


def test_vertex_counts():
    assert C.count_G(2, 3, 1) == 4
    for n in range(1, 5):
        assert C.count_G(n, 1, 0) == C.count_G(n, 1, n) == 1
    for n, s in [(2, 3), (3, 5), (4, 3)]:
        for m in range(n + 1):
            assert len(C.vertices(n, s, m)) == len(C.enumerate_G_sp(n, s, m)) == C.count_G(n, s, m)


def test_markers_and_edges():
    assert C.vertex_markers((3, 0, 0)) == {1, 2}
    assert C.vertex_markers((0, 0, 3)) == frozenset()
    assert C.delta_out_edges((0, 0, 3)) == [(0, 1, 2)]
    assert C.in_G_sp((0, 0, 3), ())
    assert not C.in_G_sp((0, 0, 3), (1,))


@pytest.mark.parametrize("n,s", [(2, 3), (3, 5), (3, 1), (2, 5)])
def test_edges_match_the_window_order(n, s):
    for m in range(n):
        lower = {C.vertex_of_window(x, s): x for x in C.enumerate_R_sp(n, s, m)}
        upper = {C.vertex_of_window(x, s): x for x in C.enumerate_R_sp(n, s, m + 1)}
        for v, x in lower.items():
            by_order = {w for w, y in upper.items() if all(a <= b for a, b in zip(x.r, y.r))}
            assert set(C.delta_out_edges(v)) == by_order


def test_marker_sum():
    for n in range(1, 7):
        for I in subsets(range(1, n + 1)):
            assert C.marker_sum(n, I) == n * (n in I) - len(I)
        assert C.marker_sum(n, ()) == 0


def test_path_examples():
    assert len(C.enumerate_E(2, 3, (0,))) == 3
    assert len(C.enumerate_E(2, 3, (0, 1, 2))) == 9
    assert len(C.enumerate_E(2, 3, (0, 2))) == 6
    assert len(C.enumerate_sp_chains(2, 3, (0, 2))) == 6
    assert len(C.enumerate_sp_chains(2, 3, (0, 1, 2))) == 9
    assert [c[0] for c in C.enumerate_sp_chains(2, 3, (1,))] == C.enumerate_R_sp(2, 3, 1)
    with pytest.raises(InadmissibleError):
        C.enumerate_E(2, 3, (3,))


def test_pooling_examples():
    assert C.eta((0, 0, 3)) == (2, 0)
    assert C.eta0_inverse((2, 0)) == (0, 0, 3)
    assert C.tau((0, 0), (2, 0)) == (0, 0, 3)
    with pytest.raises(ValueError):
        C.eta((0, 2))
    with pytest.raises(ValueError):
        C.tau((3, 0), (2, 0))


@given(st.integers(1, 3).flatmap(lambda t: st.lists(st.integers(0, 3), min_size=t + 1, max_size=t + 1)))
def test_pooling_inverts_on_level_zero(a):
    if sum(a) == 0:
        return
    v = C.eta0_inverse(a)
    assert C.vertex_markers(v) == frozenset()
    assert C.eta(v) == tuple(a)
    assert not any(C.cell_counts(v)[1::2])


def test_pooling_fibers_are_bounded_compositions():
    for n, s in [(2, 3), (3, 5), (2, 5), (4, 5)]:
        t = (s - 1) // 2
        base = sorted(C.vertices(n, s, 0))
        assert sorted(C.eta0_inverse(a) for a in iter_compositions(t + 1, n)) == base
        for m in range(n + 1):
            fibers = Counter(C.eta(v) for v in C.vertices(n, s, m))
            for a in iter_compositions(t + 1, n):
                bounded = [c for c in iter_compositions(t + 1, m) if all(x <= y for x, y in zip(c, a))]
                assert fibers.get(a, 0) == len(bounded) == len({C.tau(c, a) for c in bounded})


def test_zeta_fibers_match_fiber_count():
    paths = C.enumerate_E(2, 3, (0, 2))
    fibers = Counter(C.zeta(p, 2) for p in paths)
    assert sorted(fibers.values()) == [1, 2, 3]
    for Q, size in fibers.items():
        assert C.fiber_count(Q) == size
    assert sorted(Q[1] for Q in fibers) == [(0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("n,s", [(2, 3), (3, 5), (2, 5), (3, 1)])
def test_zeta_fibers_match_fiber_count_everywhere(n, s):
    for J in subsets(range(n + 1)):
        fibers = Counter(C.zeta(p, n) for p in C.enumerate_E(n, s, J))
        assert all(C.fiber_count(Q) == k for Q, k in fibers.items())


def test_counting_identities():
    assert C.gamma(1, 1) == 2
    assert C.gamma(2, 2) == 10
    assert C.fiber_count(((0, 0), (0, 1), (2, 0))) == 2
    for d in range(0, 9):
        for t in range(1, 9):
            assert C.gamma(d, t) == C.gamma_brute(d, t)
            assert C.pooled_sum(d, t) == C.pooled_sum_brute(d, t)


@pytest.mark.parametrize("z", [(2,), (1, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0, 1), (0, 0, 0)])
def test_single_cell_game(z):
    beta = 1
    for x in z[1:-1]:
        beta *= x + 1
    assert C.game_outcomes(z, False) == 1
    assert C.game_outcomes(z, True) == beta


def test_euler_examples():
    assert C.euler_sp(2, 3, (0, 1, 2)) == 9
    assert C.euler_sp(2, 3, (1,)) == 4
    assert C.euler_sp(2, 3, (0,)) == 3
    assert C.euler_sp(2, 3, (0, 2)) == 6
    assert C.euler_sp(3, 5, (0, 3)) == 35
    with pytest.raises(InadmissibleError):
        C.euler_sp(2, 4, (0,))


@pytest.mark.parametrize("n,s", SP_PAIRS)
def test_four_counts_agree(n, s):
    for J in subsets(range(n + 1)):
        chi = C.euler_sp(n, s, J)
        assert chi == C.euler_sp_oracle(n, s, J) == C.euler_sp_paths(n, s, J) == C.euler_sp_by_matrices(n, s, J)
        assert set(C.enumerate_E(n, s, J)) == C.enumerate_E_by_paths(n, s, J)
    assert C.euler_sp(n, s, range(n + 1)) == s ** n


def test_comparison_with_special_linear():
    assert C.sl_type_of(2, (0,)) == (0,)
    assert C.sl_type_of(2, (1, 2)) == (1, 2, 3)
    cmp = C.compare_with_sl(1, 3, (0, 1))
    assert cmp.relation == "equal"
    cmp = C.compare_with_sl(2, 3, (0,))
    assert cmp.sp == 3 and cmp.sl == euler_sl(4, 3, (0,)) == 5 and cmp.relation == "less"
    for n in range(1, 5):
        for J in subsets(range(n + 1)):
            c = C.compare_with_sl(n, 1, J)
            assert c.sp == c.sl == 1


def test_symplectic_partitions():
    sp = C.SymplecticPartition(1, (1,))
    assert sp.n == 2 and sp.jordan_type() == (2, 1, 1)
    assert sp.base_composition(2) == (1, 1, 0)
    with pytest.raises(InadmissibleError):
        sp.base_composition(0)
    with pytest.raises(InadmissibleError):
        C.SymplecticPartition(-1, ())
    assert C.SymplecticPartition(0, (1, 2)).parts == (2, 1)
    assert len(C.symplectic_partitions(3)) == 1 + 1 + 2 + 3
    assert C.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_springer_examples():
    assert C.springer_euler_sp(C.SymplecticPartition(1, (1,))) == 4
    assert C.springer_full_flag_sp(C.SymplecticPartition(1, (1,))) == 4
    for n in range(1, 5):
        assert C.springer_euler_sp(C.SymplecticPartition(n, ())) == 1
        assert C.springer_euler_sp(C.SymplecticPartition(0, (1,) * n)) == 2 ** n * factorial(n)
    with pytest.raises(InadmissibleError):
        C.springer_euler_sp(C.SymplecticPartition(0, (1, 1)), None, 3)
    with pytest.raises(InadmissibleError):
        C.springer_euler_sp(C.SymplecticPartition(1, (1,)), (3,))


@pytest.mark.parametrize("n", range(1, 5))
def test_springer_full_flag_counts(n):
    for sp in C.symplectic_partitions(n):
        assert C.springer_euler_sp(sp) == C.springer_full_flag_sp(sp) == C.springer_euler_sp_paths(sp)


@pytest.mark.parametrize("n", range(1, 4))
def test_springer_partial_flag_counts(n):
    for sp in C.symplectic_partitions(n):
        for J in subsets(range(1, n + 1)):
            a = C.springer_euler_sp(sp, J)
            assert a == C.springer_euler_sp_paths(sp, J) == C.springer_euler_sp_chains(sp, J)


@pytest.mark.parametrize("n", range(1, 5))
def test_springer_jordan_types(n):
    for sp in C.symplectic_partitions(n):
        comb_type, mat_type = C.springer_jordan_types(sp)
        assert comb_type == mat_type == sp.jordan_type()
