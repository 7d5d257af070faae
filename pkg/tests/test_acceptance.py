"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  Run the file directly
(``python3 tests/test_acceptance.py``) for just those lines.
"""

import subprocess
import sys
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd

import pytest

from affine_springer import suites
from affine_springer import type_a as A
from affine_springer import type_c as C
from affine_springer.combinatorics import multinomial
from affine_springer.laurent import CharPoly, pi_power
from affine_springer.lattice import is_symplectic_matrix, symplectic_gram, verify_almost_commute


def subsets(items):
    items = list(items)
    for k in range(1, len(items) + 1):
        yield from combinations(items, k)


@pytest.fixture
def report(capsys):
    def emit(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        line = f"[acceptance {number}] {status} {title}"
        if failures:
            line += f" (first counterexample: {failures[0]})"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def failed_checks(checks):
    return [f"{c.name}: {c.failure}" for c in checks if not c.ok]


def test_1_special_linear_formula_equals_chain_count(report):
    bad = []
    for n in range(2, 6):
        for s in range(1, 8):
            if gcd(n, s) != 1:
                continue
            for I in subsets(range(n)):
                f, o = A.euler_sl(n, s, I), A.euler_sl_oracle(n, s, I)
                if f != o:
                    bad.append((n, s, I, f, o))
    if A.euler_sl(3, 2, (0, 1, 2)) != 4 or A.euler_sl(3, 2, (0,)) != 2:
        bad.append("spot values")
    report(1, "special linear closed form equals brute-force chain count, n <= 5, s <= 7", bad)


def test_2_symplectic_formula_chains_and_paths_agree(report):
    bad = []
    for n in (1, 2, 3):
        for s in (1, 3, 5):
            if C.admissible_sp_params(n, s):
                continue
            for J in subsets(range(n + 1)):
                counts = (C.euler_sp_oracle(n, s, J), C.euler_sp_paths(n, s, J), C.euler_sp(n, s, J))
                if len(set(counts)) != 1:
                    bad.append((n, s, J, counts))
    spots = {(0, 1, 2): 9, (0,): 3, (0, 2): 6}
    bad += [("spot", J) for J, v in spots.items() if C.euler_sp(2, 3, J) != v]
    report(2, "symplectic chain count == path count == closed form, n <= 3, s in {1, 3, 5}", bad)


def test_3_bijections_round_trip(report):
    report(3, "window, step function, q coordinate and pooling bijections round trip", failed_checks(suites.suite_bijections(6, 7)))


def test_4_classical_springer_counts(report):
    bad = failed_checks(suites.suite_springer(6, 4))
    for n in range(1, 7):
        for parts in C.partitions(n):
            if A.springer_euler_sl(parts) != multinomial(parts):
                bad.append(parts)
        if A.full_flag_fiber_sum(n, n + 1) != (n + 1) ** (n - 1):
            bad.append(("fiber sum", n))
        if A.springer_euler_sl((1,) * n) != factorial(n):
            bad.append(("zero", n))
    for n in range(1, 5):
        for sp in C.symplectic_partitions(n):
            if C.springer_euler_sp(sp) != C.springer_full_flag_sp(sp):
                bad.append(sp)
        if C.springer_euler_sp(C.SymplecticPartition(0, (1,) * n)) != 2 ** n * factorial(n):
            bad.append(("zero sp", n))
    report(4, "full flag Springer counts match multinomial closed forms and Weyl group orders", bad)


def test_5_jordan_types(report):
    report(5, "cell size Jordan types equal rank-of-powers Jordan types", failed_checks(suites.suite_jordan(6, 4)))


def test_6_matrix_identities(report):
    bad = []
    for n in range(1, 7):
        for s in range(1, 8):
            if gcd(n, s) != 1:
                continue
            for b in (1, 2, 3):
                N = A.standard_rep_sl(n, s, b)
                target = CharPoly.from_coeffs([1] + [0] * (n - 1) + [pi_power(s, -b)])
                if N.char_poly() != target or not verify_almost_commute(N, A.nu_sl(n, s), s):
                    bad.append((n, s, b))
    for n in range(1, 5):
        for s in (3, 5, 7):
            if gcd(n, s) != 1:
                continue
            M = C.standard_rep_sp(n, s)
            target = CharPoly.from_coeffs([1] + [0] * (2 * n - 1) + [pi_power(s, -1)])
            if not is_symplectic_matrix(M, symplectic_gram(n)) or M.char_poly() != target:
                bad.append(("sp", n, s))
    bad += failed_checks(suites.suite_matrix(6, 7))
    report(6, "characteristic polynomials, commutation exponents and symplectic forms", bad)


def test_7_symplectic_count_bounded_by_special_linear(report):
    bad = []
    for n in range(1, 5):
        for s in (1, 3, 5, 7):
            if C.admissible_sp_params(n, s):
                continue
            for J in subsets(range(n + 1)):
                c = C.compare_with_sl(n, s, J)
                if c.sp > c.sl or (c.sp == c.sl) != (n == 1 or s == 1):
                    bad.append((n, s, J, c.sp, c.sl))
    report(7, "symplectic count <= special linear count, equal exactly when n == 1 or s == 1", bad)


def test_8_counting_identities(report):
    bad = []
    for n in range(1, 9):
        for m in range(n + 1):
            if C.succession_counts(n, m) != C.succession_counts_scan(n, m):
                bad.append(("succession", n, m))
        for s in (1, 3, 5, 7):
            if C.admissible_sp_params(n, s):
                continue
            for m in range(n + 1):
                k = C.count_G(n, s, m)
                if not (k == len(C.vertices(n, s, m)) == len(C.enumerate_R_sp(n, s, m))):
                    bad.append(("level size", n, s, m))
    for d in range(0, 9):
        for t in range(1, 9):
            if C.gamma(d, t) != C.gamma_brute(d, t):
                bad.append(("gamma", d, t))
            if C.pooled_sum(d, t) != C.pooled_sum_brute(d, t):
                bad.append(("pooled", d, t))
    bad += failed_checks(suites.suite_identities(8, 7))
    report(8, "succession, level size and weighted composition identities up to 8", bad)


def test_9_cli_determinism_and_verify(report, tmp_path):
    cmd = [sys.executable, "-m", "affine_springer"]
    outs = []
    for k in range(2):
        path = tmp_path / f"table{k}.csv"
        proc = subprocess.run(cmd + ["table", "--n-max", "4", "--s-max", "5", "--oracle", "--jobs", str(k + 1), "--out", str(path)],
                              capture_output=True, text=True)
        outs.append((proc.returncode, path.read_bytes() if path.exists() else b""))
    bad = []
    if outs[0] != outs[1] or outs[0][0] != 0 or not outs[0][1]:
        bad.append("table output differs between runs or failed")
    proc = subprocess.run(cmd + ["verify", "all"], capture_output=True, text=True)
    if proc.returncode != 0:
        bad.append(proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr)
    report(9, "table output is byte identical across runs and verify all exits 0", bad)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
