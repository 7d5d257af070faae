"""Verification suites: every closed form checked against an independent enumeration.

Each suite returns a list of :class:`Check` records.  A check stops at its
first counterexample and reports it.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Callable, Iterable, Iterator

from . import type_a as A
from . import type_c as C
from .combinatorics import (
    binomial,
    cyclic_classes,
    dual_arrangement,
    enumerate_compositions,
    iter_compositions,
    multinomial,
    necklace_of,
)
from .laurent import CharPoly, LaurentMatrix, LaurentScalar, eigen_valuations, homogeneity_index, pi_power
from .lattice import (
    DiagonalLattice,
    LatticeBasis,
    NuAction,
    dual,
    flow_exponents,
    flow_limit,
    is_fixed,
    is_fixed_at,
    is_symplectic,
    is_symplectic_matrix,
    stabilizes,
    stabilizes_diagonal,
    symplectic_gram,
    verify_almost_commute,
)


@dataclass
class Check:
    name: str
    anchor: str
    cases: int = 0
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def as_dict(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "cases": self.cases, "ok": self.ok, "failure": self.failure}


def run_check(name: str, anchor: str, cases: Iterable[tuple[object, bool]]) -> Check:
    """Consume ``(label, passed)`` pairs until the first failure."""
    chk = Check(name, anchor)
    try:
        for label, passed in cases:
            chk.cases += 1
            if not passed:
                chk.failure = str(label)
                break
    except Exception as exc:  # an exception inside a case is a failure too
        chk.failure = f"{type(exc).__name__}: {exc}"
    return chk


def coprime_pairs(n_lo: int, n_max: int, s_max: int) -> Iterator[tuple[int, int]]:
    for n in range(n_lo, n_max + 1):
        for s in range(1, s_max + 1):
            if gcd(n, s) == 1:
                yield n, s


def sp_pairs(n_max: int, s_max: int) -> Iterator[tuple[int, int]]:
    for n in range(1, n_max + 1):
        for s in range(1, s_max + 1, 2):
            if gcd(n, s) == 1:
                yield n, s


def nonempty_subsets(items) -> Iterator[tuple[int, ...]]:
    items = list(items)
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


# bijections


def suite_bijections(n_max: int = 4, s_max: int = 5) -> list[Check]:
    out = []

    def phi_cases():
        for n, s in coprime_pairs(1, n_max + 1, s_max + 2):
            for m in range(-2, 3):
                R = A.enumerate_R(n, s, m)
                images = [A.phi(r, s) for r in R]
                classes = Counter(necklace_of(c).representative for c in images)
                ok = (
                    all(A.phi_inverse(c, m) == r for c, r in zip(images, R))
                    and all(A.in_C_sm(c, m) for c in images)
                    and len(set(images)) == len(R)
                    and len(classes) == len(cyclic_classes(n, s))
                    and all(v == 1 for v in classes.values())
                )
                yield (n, s, m), ok

    out.append(run_check("phi round trip and one representative per necklace", "window vectors to compositions to necklaces", phi_cases()))

    def dual_cases():
        for n, s in coprime_pairs(1, 8, 8):
            img = {necklace_of(dual_arrangement(c.representative).cells).representative for c in cyclic_classes(n, s)}
            back = all(
                necklace_of(dual_arrangement(dual_arrangement(c.representative).cells).cells) == c
                for c in cyclic_classes(n, s)
            )
            yield (n, s), img == {c.representative for c in cyclic_classes(s, n)} and back

    out.append(run_check("ball/wall duality is a bijection of necklaces", "circular ball and wall exchange", dual_cases()))

    def sigma_cases():
        for n, s in coprime_pairs(1, min(n_max, 4), min(s_max, 5)):
            for I in nonempty_subsets(range(n)):
                P = A.ParahoricTypeA(n, I)
                J = P.J
                chains = A.enumerate_chains(n, s, J, P.m)
                by_base = Counter(ch[0] for ch in chains)
                ok = True
                for ch in chains:
                    sg = A.sigma_of_chain(ch, J)
                    c = A.phi(ch[0], s)
                    dual_c = dual_arrangement(c)
                    Q = A.intersection_matrix_of_sigma(sg, dual_c, J)
                    ok &= A.sigma_is_monotone(sg, c)
                    ok &= A.chain_of_sigma(ch[0], sg, J) == tuple(ch)
                    ok &= A.sigma_of_matrix(Q, dual_c, J) == sg
                for r in A.enumerate_R(n, s, P.m):
                    dual_c = dual_arrangement(A.phi(r, s))
                    sigmas = A.enumerate_sigmas(r, s, J)
                    mats = A.enumerate_intersection_matrices((0,) + J, s, dual_c.cells)
                    ok &= len(sigmas) == by_base.get(r, 0) == len(mats)
                    ok &= {A.intersection_matrix_of_sigma(sg, dual_c, J) for sg in sigmas} == set(mats)
                yield (n, s, I), ok

    out.append(run_check("chains, step functions and intersection matrices correspond", "chain to step function to matrix", sigma_cases()))

    def sp_q_cases():
        for n, s in sp_pairs(min(n_max, 3), max(s_max, 5)):
            for m in range(n + 1):
                for x in C.enumerate_R_sp(n, s, m):
                    qv = C.q_coords(x, s)
                    p = C.psi_sp(qv)
                    ok = (
                        C.q_coords_inverse(qv) == x
                        and C.psi_sp_inverse(p, qv.I) == qv
                        and C.vertex_markers(p) == x.I
                        and C.window_of_vertex(p) == x
                        and C.sp_q_violation(qv.c, x.I) is None
                    )
                    yield (n, s, x.r), ok
                verts = C.vertices(n, s, m)
                yield (n, s, m, "vertices"), sorted(C.vertex_of_window(C.window_of_vertex(v), s) for v in verts) == sorted(verts)

    out.append(run_check("q coordinates and box sums invert", "symplectic windows to parity marked compositions to vertices", sp_q_cases()))

    def eta_cases():
        for n, s in sp_pairs(min(n_max, 4), max(s_max, 5)):
            t = (s - 1) // 2
            base = C.vertices(n, s, 0)
            ok = sorted(C.eta0_inverse(a) for a in iter_compositions(t + 1, n)) == sorted(base)
            ok &= all(C.eta(C.eta0_inverse(a)) == a for a in iter_compositions(t + 1, n))
            for m in range(n + 1):
                fib = Counter(C.eta(v) for v in C.vertices(n, s, m))
                for a in iter_compositions(t + 1, n):
                    cs = [c for c in iter_compositions(t + 1, m) if all(x <= y for x, y in zip(c, a))]
                    imgs = {C.tau(c, a) for c in cs}
                    ok &= len(imgs) == len(cs) == fib.get(a, 0)
                    ok &= all(C.eta(v) == a and len(C.vertex_markers(v)) == m for v in imgs)
            yield (n, s), ok

    out.append(run_check("pooling map inverts on level zero and fibers match bounded compositions", "pooled cells of a vertex", eta_cases()))
    return out


# oracle equivalences


def suite_oracles(n_max: int = 4, s_max: int = 5) -> list[Check]:
    out = []

    def sl_cases():
        for n, s in coprime_pairs(1, n_max, s_max):
            for I in nonempty_subsets(range(n)):
                f = A.euler_sl(n, s, I)
                yield (n, s, I, f), f == A.euler_sl_oracle(n, s, I) == A.euler_sl_by_fibers(n, s, I)

    out.append(run_check("special linear closed form equals chain count", "product of binomials over s", sl_cases()))

    def m_cases():
        for n, s in coprime_pairs(1, min(n_max, 4), min(s_max, 5)):
            yield (n, s), len({len(A.enumerate_R(n, s, m)) for m in range(-3, 4)} | {A.count_R(n, s)}) == 1
            for I in nonempty_subsets(range(n)):
                P = A.ParahoricTypeA(n, I)
                yield (n, s, I), len({len(A.enumerate_chains(n, s, P.J, m)) for m in (-1, 0, 2)}) == 1

    out.append(run_check("counts do not depend on the valuation", "independence of m", m_cases()))

    def sp_cases():
        for n, s in sp_pairs(min(n_max, 3), s_max):
            for J in nonempty_subsets(range(n + 1)):
                f = C.euler_sp(n, s, J)
                yield (n, s, J, f), f == C.euler_sp_oracle(n, s, J) == C.euler_sp_paths(n, s, J) == C.euler_sp_by_matrices(n, s, J)

    out.append(run_check("symplectic closed form equals chain and path counts", "symplectic product formula", sp_cases()))

    def pairwise_reach_cases():
        for n, s in sp_pairs(min(n_max, 3), min(s_max, 5)):
            for J in nonempty_subsets(range(n + 1)):
                yield (n, s, J), set(C.enumerate_E(n, s, J)) == C.enumerate_E_by_paths(n, s, J)

    out.append(run_check("pairwise reachability equals a single path through all levels", "graded move graph", pairwise_reach_cases()))

    def zeta_cases():
        for n, s in sp_pairs(min(n_max, 3), min(s_max, 5)):
            for J in nonempty_subsets(range(n + 1)):
                groups = Counter(C.zeta(path, n) for path in C.enumerate_E(n, s, J))
                yield (n, s, J), all(C.fiber_count(Q) == k for Q, k in groups.items())

    out.append(run_check("fiber sizes of the matrix map", "product of (q_ik + 1)", zeta_cases()))
    return out


# matrix identities


def suite_matrix(n_max: int = 6, s_max: int = 7) -> list[Check]:
    out = []

    def sl_cases():
        for n, s in coprime_pairs(2, n_max, s_max):
            for b in (1, 2, 3):
                N = A.standard_rep_sl(n, s, b)
                p = N.char_poly()
                target = CharPoly.from_coeffs([1] + [0] * (n - 1) + [pi_power(s, -b)])
                h = homogeneity_index(p)
                ok = p == target and verify_almost_commute(N, A.nu_sl(n, s), s)
                ok &= N.trace().is_zero() and h.q == Fraction(s, n)
                ok &= eigen_valuations(p).all_equal(Fraction(s, n))
                yield (n, s, b), ok

    out.append(run_check("special linear representative: characteristic polynomial and weights", "mu^n - b pi^s", sl_cases()))

    def sp_cases():
        for n in range(1, min(n_max, 4) + 1):
            J = symplectic_gram(n)
            for s in (3, 5, 7):
                if gcd(s, n) != 1:
                    continue
                M = C.standard_rep_sp(n, s)
                target = CharPoly.from_coeffs([1] + [0] * (2 * n - 1) + [pi_power(s, -1)])
                ok = is_symplectic_matrix(M, J) and M.char_poly() == target
                ok &= verify_almost_commute(M, C.nu_sp(n, s), s)
                yield (n, s), ok

    out.append(run_check("symplectic representative: form preserved and characteristic polynomial", "h(mu^2)", sp_cases()))

    def general_cases():
        rng = random.Random(7)
        for n in range(1, 5):
            for _ in range(4):
                coeffs = [rng.choice([0, 1, -2, 3]) for _ in range(n)]
                M = C.standard_rep_sp_general(coeffs, 1)
                hpoly = [1] + coeffs
                expect = [0] * (2 * n + 1)
                for j, c in enumerate(hpoly):
                    expect[2 * j] = pi_power(j, c) if c else 0
                ok = is_symplectic_matrix(M, symplectic_gram(n)) and M.char_poly() == CharPoly.from_coeffs(expect)
                Mc, f, e = A.companion_rep(coeffs, 1)
                ok &= Mc.char_poly() == CharPoly.from_coeffs([1] + [pi_power(j, c) if c else 0 for j, c in enumerate(coeffs, 1)])
                ok &= verify_almost_commute(Mc, f, e)
                yield (n, coeffs), ok

    out.append(run_check("general representatives realize their polynomials", "companion and symplectic block forms", general_cases()))

    def conj_cases():
        rng = random.Random(11)
        for n in range(1, 5):
            for _ in range(5):
                M = _random_matrix(rng, n)
                g = _random_unimodular(rng, n)
                yield (n,), (g @ M @ g.inverse()).char_poly() == M.char_poly()

    out.append(run_check("characteristic polynomial is a conjugation invariant", "similarity invariance", conj_cases()))
    return out


def _random_scalar(rng, lo=-1, hi=2, density=0.5) -> LaurentScalar:
    return LaurentScalar({e: rng.randint(-3, 3) for e in range(lo, hi + 1) if rng.random() < density})


def _random_matrix(rng, n) -> LaurentMatrix:
    return LaurentMatrix([[_random_scalar(rng) for _ in range(n)] for _ in range(n)])


def _random_unimodular(rng, n) -> LaurentMatrix:
    """Upper unitriangular with power series entries times a permutation with monomial scaling."""
    U = [[LaurentScalar.const(1) if i == j else (_random_scalar(rng, 0, 2) if j > i else LaurentScalar()) for j in range(n)] for i in range(n)]
    L = [[LaurentScalar.const(1) if i == j else (_random_scalar(rng, 1, 2) if j < i else LaurentScalar()) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = LaurentMatrix([[LaurentScalar.const(rng.choice([1, -1, 2])) if perm[i] == j else LaurentScalar() for j in range(n)] for i in range(n)])
    return LaurentMatrix(U) @ P @ LaurentMatrix(L)


# identities


def suite_identities(n_max: int = 8, s_max: int = 7) -> list[Check]:
    out = []
    out.append(run_check(
        "succession counts",
        "binomial(m, j) binomial(n-m, m-j)",
        (((n, m), C.succession_counts(n, m) == C.succession_counts_scan(n, m)) for n in range(1, n_max + 1) for m in range(n + 1)),
    ))

    def g_cases():
        for n, s in sp_pairs(min(n_max, 4), s_max):
            for m in range(n + 1):
                k = C.count_G(n, s, m)
                yield (n, s, m), k == len(C.vertices(n, s, m)) == len(C.enumerate_G_sp(n, s, m)) == len(C.enumerate_R_sp(n, s, m))

    out.append(run_check("vertex counts per level", "binomial(t+m, m) binomial(t+n-m, n-m)", g_cases()))
    out.append(run_check(
        "weighted compositions",
        "binomial(2t+d-1, d)",
        (((d, t), C.gamma(d, t) == C.gamma_brute(d, t)) for d in range(0, 9) for t in range(1, 9)),
    ))
    out.append(run_check(
        "weighted compositions with a free first part",
        "binomial(2t+d, d)",
        (((d, t), C.pooled_sum(d, t) == C.pooled_sum_brute(d, t)) for d in range(0, 9) for t in range(1, 7)),
    ))
    out.append(run_check(
        "marker sums",
        "n [n in I] - |I|",
        (((n, I), C.marker_sum(n, I) == n * (n in I) - len(I)) for n in range(1, n_max + 1) for k in range(n + 1) for I in combinations(range(1, n + 1), k)),
    ))

    def inclusion_cases():
        for n, s in sp_pairs(min(n_max, 4), s_max):
            for m in range(n + 1):
                for I in combinations(range(1, n + 1), m):
                    members = [c for c in iter_compositions(2 * n, s) if C.sp_q_violation(c, I) is None]
                    imgs = sorted(C.q_coords(C.SpWindowVector(r, frozenset(I)), s).c for r in C.enumerate_R_sp_I(n, s, I))
                    yield (n, s, I), all(A.in_C_sm(c, m) for c in members) and imgs == sorted(members)

    out.append(run_check("parity marked compositions satisfy the valuation congruence", "symplectic inside special linear", inclusion_cases()))

    def symmetry_cases():
        for n, s in sp_pairs(min(n_max, 5), s_max):
            for m in range(n + 1):
                yield (n, s, m), len(C.enumerate_R_sp(n, s, m)) == len(C.enumerate_R_sp(n, s, n - m)) == C.count_R_sp(n, s, m)

    out.append(run_check("window counts are symmetric under m -> n - m", "duality symmetry", symmetry_cases()))

    def compare_cases():
        for n, s in sp_pairs(min(n_max, 4), s_max):
            for J in nonempty_subsets(range(n + 1)):
                cmp = C.compare_with_sl(n, s, J)
                equal_expected = n == 1 or s == 1
                yield (n, s, J, cmp.sp, cmp.sl), cmp.sp <= cmp.sl and (cmp.sp == cmp.sl) == equal_expected

    out.append(run_check("symplectic count is at most the special linear count", "equality exactly when n == 1 or s == 1", compare_cases()))

    def game_cases():
        for d in range(0, 5):
            for l in range(1, 4):
                for z in iter_compositions(l + 1, d):
                    beta = 1
                    for x in z[1:l]:
                        beta *= x + 1
                    yield (z,), C.game_outcomes(z, False) == 1 and C.game_outcomes(z, True) == beta

    out.append(run_check("single cell game outcomes", "alpha = 1, beta = prod (z_i + 1)", game_cases()))

    def matrix_count_cases():
        for t in range(1, 5):
            for d in ([0, 1, 3], [0, 2, 2, 4], [0, 1, 2, 3], [0, 4]):
                yield (d, t), len(A.enumerate_intersection_matrices(d, t)) == A.count_intersection_matrices(d, t)

    out.append(run_check("unrestricted intersection matrix count", "product of binomial(t + d_i - d_{i-1} - 1, ...)", matrix_count_cases()))

    out.append(run_check(
        "compositions and necklaces",
        "binomial(t+d-1, d) and free rotation when coprime",
        (((t, d), len(enumerate_compositions(t, d)) == binomial(t + d - 1, d)
          and (gcd(t, d) != 1 or (all(c.period == t for c in cyclic_classes(t, d)) and t * len(cyclic_classes(t, d)) == binomial(t + d - 1, d))))
         for t in range(1, 9) for d in range(0, 9)),
    ))
    return out


# Springer fibers


def suite_springer(n_max: int = 6, sp_n_max: int = 4) -> list[Check]:
    out = []

    def sl_cases():
        for n in range(1, n_max + 1):
            for parts in C.partitions(n):
                chi = A.springer_euler_sl(parts)
                ok = chi == multinomial(parts)
                s2 = A.default_springer_s(n, len(parts) + 1)
                ok &= A.springer_euler_sl(parts, None, s2) == chi
                yield (parts,), ok
            yield (n, "zero"), A.springer_euler_sl((1,) * n) == factorial(n)
            s = n + 1
            yield (n, "fiber sum"), A.full_flag_fiber_sum(n, s) == s ** (n - 1)

    out.append(run_check("special linear full flag Springer counts", "n! / prod n_i!", sl_cases()))

    def sl_partial_cases():
        for n in range(1, min(n_max, 4) + 1):
            for parts in C.partitions(n):
                for k in range(0, n):
                    for I in combinations(range(1, n), k):
                        yield (parts, I), A.springer_euler_sl(parts, I) == A.springer_euler_sl_by_chains(parts, I)

    out.append(run_check("special linear partial flag Springer counts match chains over one base vector", "matrices with fixed column sums", sl_partial_cases()))

    def sp_cases():
        for n in range(1, sp_n_max + 1):
            for sp in C.symplectic_partitions(n):
                chi = C.springer_euler_sp(sp)
                yield (sp,), chi == C.springer_full_flag_sp(sp) == C.springer_euler_sp_paths(sp)
            yield (n, "zero"), C.springer_euler_sp(C.SymplecticPartition(0, (1,) * n)) == 2 ** n * factorial(n)

    out.append(run_check("symplectic full flag Springer counts", "n! 2^(n_1+...+n_l) / prod n_i!", sp_cases()))

    def sp_partial_cases():
        for n in range(1, min(sp_n_max, 3) + 1):
            for sp in C.symplectic_partitions(n):
                for J in nonempty_subsets(range(1, n + 1)):
                    a = C.springer_euler_sp(sp, J)
                    yield (sp, J), a == C.springer_euler_sp_paths(sp, J) == C.springer_euler_sp_chains(sp, J)

    out.append(run_check("symplectic partial flag Springer counts match paths and chains", "matrices weighted by fiber counts", sp_partial_cases()))
    return out


# Jordan types


def suite_jordan(n_max: int = 6, sp_n_max: int = 4) -> list[Check]:
    def sl_cases():
        for n in range(1, n_max + 1):
            s = A.default_springer_s(n, n)
            for r in A.enumerate_R(n, s, 0):
                yield (n, s, r), A.jordan_type_of_window(r, s) == A.jordan_type_of_window_matrix(r, s)

    def sp_cases():
        for n in range(1, sp_n_max + 1):
            for sp in C.symplectic_partitions(n):
                comb, mat = C.springer_jordan_types(sp)
                yield (sp, comb, mat), comb == mat == sp.jordan_type()

    return [
        run_check("cell sizes give the Jordan type on special linear windows", "Jordan blocks from cells", sl_cases()),
        run_check("base vertex of a symplectic partition has the expected Jordan type", "one block of size 2 n_0, two of each n_i", sp_cases()),
    ]


# lattices


def suite_lattices(n_max: int = 3, s_max: int = 4, lattice=None) -> list[Check]:
    out = []
    rng = random.Random(5)

    def canonical_cases():
        for n in range(1, min(n_max, 4) + 1):
            for _ in range(20):
                L = _random_lattice(rng, n)
                g = _random_unimodular(rng, n)
                c = L.canonical()
                ok = c.lattice().canonical() == c
                ok &= LatticeBasis(L.basis @ g).canonical() == c
                yield (n, L), ok

    out.append(run_check("canonical basis is idempotent and basis independent", "reduced triangular basis", canonical_cases()))

    def dual_cases():
        for n, count in ((1, 25), (2, 8)):
            J = symplectic_gram(n)
            for _ in range(count):
                L = _random_lattice(rng, 2 * n)
                D = dual(L, J)
                ok = dual(D, J) == L and D.det().valuation() == -L.det().valuation()
                ok &= dual(L.shift(1), J) == D.shift(-1)
                yield (n, L), ok

    out.append(run_check("duality is an involution reversing valuation", "dual lattice", dual_cases()))

    def fixed_cases():
        for n, s in coprime_pairs(2, n_max, s_max):
            f = A.nu_sl(n, s)
            for r in A.enumerate_R(n, s, 0)[:3]:
                yield (n, s, r), is_fixed(f, DiagonalLattice(r))
                for i in range(n):
                    for j in range(i + 1, n):
                        for m in range(r[i] - 3, r[i]):
                            cols = [[pi_power(r[k]) if k == c else 0 for k in range(n)] for c in range(n)]
                            cols[j][i] = pi_power(m)
                            L = LatticeBasis.from_columns(cols)
                            fixed = is_fixed(f, L)
                            yield (n, s, r, i, j, m), fixed == L.canonical().is_diagonal() == is_fixed_at(f, L) and not fixed

    out.append(run_check("torus fixed lattices are exactly the diagonal ones", "fixed points are diagonal", fixed_cases()))

    def random_fixed_cases():
        for n, s in coprime_pairs(2, n_max, s_max):
            f = A.nu_sl(n, s)
            for _ in range(5):
                L = _random_lattice(rng, n)
                yield (n, s, L), is_fixed(f, L) == L.canonical().is_diagonal() == is_fixed_at(f, L)

    out.append(run_check("fixedness by exponents agrees with a concrete scaling", "symbolic versus numeric action", random_fixed_cases()))

    def flow_cases():
        for n in range(2, n_max + 1):
            f = NuAction(n, tuple(-i for i in range(1, n + 1)))
            for r in _small_vectors(n, 2):
                for _ in range(3):
                    L = _bruhat_cell_lattice(rng, n, r)
                    yield (n, r), flow_limit(f, L) == DiagonalLattice(r)
            for _ in range(10):
                L = _random_lattice(rng, n)
                if all(e > 0 for *_, e in flow_exponents(f, L)):
                    yield (n, "positive", L), flow_limit(f, L).r == L.canonical().r

    out.append(run_check("flow limit of a cell lattice is its diagonal lattice", "attracting cell coordinates", flow_cases()))

    def stab_cases():
        for n, s in coprime_pairs(2, n_max, s_max):
            N = A.standard_rep_sl(n, s)
            for r in _small_vectors(n, 2):
                diag = stabilizes_diagonal(N, r)
                yield (n, s, r), diag == stabilizes(N, DiagonalLattice(r)) == A.in_window(r, s)

    out.append(run_check("stability of diagonal lattices is the window condition", "r_1 <= ... <= r_n <= r_1 + s", stab_cases()))

    def sym_cases():
        for n, s in sp_pairs(2, 5):
            J = symplectic_gram(n)
            for m in range(n + 1):
                for x in C.enumerate_R_sp(n, s, m):
                    yield (n, s, x.r), is_symplectic(DiagonalLattice(x.r), J)

    out.append(run_check("symplectic window vectors give symplectic lattices", "chains of homotheties and duals", sym_cases()))

    if lattice is not None:
        out.extend(check_lattice(lattice))
    return out


def check_lattice(L) -> list[Check]:
    """Consistency checks on one user supplied lattice."""
    from .lattice import as_lattice

    Lb = as_lattice(L)
    n = Lb.n
    checks = [
        run_check("supplied lattice: canonical form is idempotent", "reduced triangular basis",
                  [("canonical", Lb.canonical().lattice().canonical() == Lb.canonical())]),
    ]
    if n % 2 == 0:
        J = symplectic_gram(n // 2)
        checks.append(run_check("supplied lattice: duality is an involution", "dual lattice",
                                [("dual", dual(dual(Lb, J), J) == Lb)]))
    rng = random.Random(3)
    checks.append(run_check("supplied lattice: canonical form survives basis changes", "basis independence",
                            ((k, LatticeBasis(Lb.basis @ _random_unimodular(rng, n)) == Lb) for k in range(5))))
    return checks


def _small_vectors(n: int, bound: int):
    from itertools import product

    return [r for r in product(range(-bound, bound + 1), repeat=n) if sum(r) in (-1, 0, 1)][:40]


def _random_lattice(rng, n) -> LatticeBasis:
    while True:
        M = LaurentMatrix([[_random_scalar(rng, -1, 2, 0.4) for _ in range(n)] for _ in range(n)])
        if M.det().is_known_nonzero():
            return LatticeBasis(M)


def _bruhat_cell_lattice(rng, n, r) -> LatticeBasis:
    """Columns ``pi^{r_j}(e_j + sum a pi^{l + <i,j>} e_i)`` with coefficients only below ``r_i - r_j - <i,j>``."""
    cols = []
    for j in range(n):
        col = [LaurentScalar() for _ in range(n)]
        col[j] = pi_power(r[j])
        for i in range(n):
            if i == j:
                continue
            shift = 1 if i > j else 0
            terms = {}
            for l in range(0, r[i] - r[j] - shift):
                if rng.random() < 0.6:
                    terms[r[j] + l + shift] = rng.choice([1, -1, 2])
            col[i] = LaurentScalar(terms)
        cols.append(col)
    return LatticeBasis.from_columns(cols)


SUITES: dict[str, Callable[..., list[Check]]] = {
    "bijections": suite_bijections,
    "oracles": suite_oracles,
    "matrix": suite_matrix,
    "identities": suite_identities,
    "springer": suite_springer,
    "jordan": suite_jordan,
    "lattices": suite_lattices,
}


def run_suite(name: str, n_max: int | None = None, s_max: int | None = None, lattice=None) -> list[Check]:
    """Run one named suite, or every suite for ``"all"``.

    ``n_max`` and ``s_max`` override each suite's default ranges.
    """
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        fn = SUITES[nm]
        kwargs = {}
        if nm == "springer":
            if n_max is not None:
                kwargs["n_max"] = n_max
        elif nm == "jordan":
            if n_max is not None:
                kwargs["n_max"] = n_max
        else:
            if n_max is not None:
                kwargs["n_max"] = n_max
            if s_max is not None:
                kwargs["s_max"] = s_max
        if nm == "lattices":
            kwargs["lattice"] = lattice
        out.extend(fn(**kwargs))
    if lattice is not None and "lattices" not in names:
        out.extend(check_lattice(lattice))
    return out
