"""Special linear family: window vectors, chains, step functions and Euler characteristics.

Coordinates and walls are numbered from 1 in the public functions, matching the
way window vectors ``(r_1, ..., r_n)`` are usually written.  Internally tuples
are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .combinatorics import (
    Composition,
    DualArrangement,
    binomial,
    dual_arrangement,
    iter_compositions,
    multinomial,
    necklace_of,
)
from .laurent import LaurentMatrix, pi_power
from .lattice import DiagonalLattice, NuAction, induced_endomorphism, jordan_type


class InadmissibleError(ValueError):
    """Parameters violate a stated admissibility condition."""


# standard representative


def admissible_sl(n: int, s: int, b=1) -> list[str]:
    """List the violated conditions for ``(n, s, b)``; empty means admissible."""
    bad = []
    if n < 1:
        bad.append("n >= 1")
    if s <= 0:
        bad.append("s > 0")
    if n >= 1 and s > 0 and gcd(n, s) != 1:
        bad.append("gcd(s,n) != 1")
    if b == 0:
        bad.append("b != 0")
    return bad


def _require(bad: list[str]):
    if bad:
        raise InadmissibleError("; ".join(bad))


def standard_rep_sl(n: int, s: int, b=1) -> LaurentMatrix:
    """Ones above the diagonal and ``b pi^s`` in the bottom left corner."""
    _require(admissible_sl(n, s, b))
    entries = {(i, i + 1): 1 for i in range(n - 1)}
    entries[(n - 1, 0)] = pi_power(s, b)
    return LaurentMatrix.from_sparse(n, entries)


def nu_sl(n: int, s: int) -> NuAction:
    """``nu(m, i) = n m - i s`` with ``i`` counted from 1."""
    return NuAction(n, tuple(-i * s for i in range(1, n + 1)))


def companion_rep(coeffs: Sequence, q) -> tuple[LaurentMatrix, NuAction, int]:
    """Companion matrix of ``mu^n + sum c_i pi^{iq} mu^{n-i}`` with a matching action.

    ``coeffs`` are the rational ``c_1 .. c_n``.  Returns the matrix, a diagonal
    action it almost commutes with, and the exponent of that relation.
    """
    n = len(coeffs)
    q = Fraction(q)
    entries = {(i, i + 1): 1 for i in range(n - 1)}
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        e = i * q
        if e.denominator != 1:
            raise InadmissibleError(f"i*q must be an integer for nonzero c_{i}")
        entries[(i - 1, 0)] = entries.get((i - 1, 0), 0) + pi_power(int(e), -Fraction(c))
    M = LaurentMatrix.from_sparse(n, entries)
    scale = (n * q).denominator
    f = NuAction(n * scale, tuple(int(-i * n * q * scale) for i in range(1, n + 1)))
    return M, f, int(n * q * scale)


# window vectors


@dataclass(frozen=True, order=True)
class WindowVector:
    s: int
    r: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def m(self) -> int:
        return sum(self.r)


def in_window(r: Sequence[int], s: int) -> bool:
    """``r_1 <= ... <= r_n <= r_1 + s``."""
    return all(a <= b for a, b in zip(r, r[1:])) and r[-1] <= r[0] + s


def _iter_window(n: int, s: int, m: int) -> Iterator[tuple[int, ...]]:
    lo = -((n - 1) * s - m) // n  # ceil((m - (n-1)s)/n)
    hi = m // n

    def extend(prefix, remaining, left):
        if left == 1:
            last = remaining
            if prefix[-1] <= last <= prefix[0] + s:
                yield prefix + (last,)
            return
        for x in range(prefix[-1], prefix[0] + s + 1):
            # the rest are all at least x
            if x * left > remaining:
                break
            yield from extend(prefix + (x,), remaining - x, left - 1)

    for r1 in range(lo, hi + 1):
        if n == 1:
            if r1 == m:
                yield (r1,)
            continue
        yield from extend((r1,), m - r1, n - 1)


def enumerate_R(n: int, s: int, m: int = 0) -> list[tuple[int, ...]]:
    """All ``r`` with ``r_1 <= ... <= r_n <= r_1 + s`` and ``sum(r) == m``, sorted."""
    _require(admissible_sl(n, s))
    return sorted(_iter_window(n, s, m))


def count_R(n: int, s: int) -> int:
    return binomial(n + s - 1, n) // s if s else 0


def phi(r: Sequence[int], s: int) -> Composition:
    """``c_i = r_i - r_{i-1} + s [i == 1]`` with ``r_0 = r_n``."""
    n = len(r)
    return Composition(r[i] - r[i - 1] + (s if i == 0 else 0) for i in range(n))


def in_C_sm(c: Sequence[int], m: int) -> bool:
    """Congruence picking out the image of valuation ``m``."""
    n = len(c)
    s = sum(c)
    return (m - s + sum(i * x for i, x in enumerate(c, start=1))) % n == 0


def phi_inverse(c: Sequence[int], m: int) -> tuple[int, ...]:
    n = len(c)
    s = sum(c)
    num = m - s + sum(i * x for i, x in enumerate(c, start=1))
    if num % n:
        raise ValueError(f"composition {tuple(c)} does not meet the congruence for m={m}")
    rn = num // n
    r = [0] * n
    tail = 0
    for j in range(n, 0, -1):
        r[j - 1] = rn - tail
        tail += c[j - 1]
    return tuple(r)


def psi(c: Sequence[int]):
    """Rotation class of ``c``."""
    return necklace_of(c)


# parahoric types


@dataclass(frozen=True)
class ParahoricTypeA:
    """A nonempty ``I`` inside ``[0, n-1]``."""

    n: int
    I: tuple[int, ...]

    def __post_init__(self):
        I = tuple(sorted(set(self.I)))
        if not I:
            raise InadmissibleError("type set must be nonempty")
        if I[0] < 0 or I[-1] > self.n - 1:
            raise InadmissibleError(f"type set must lie in [0, {self.n - 1}]")
        object.__setattr__(self, "I", I)

    @classmethod
    def full(cls, n: int) -> "ParahoricTypeA":
        return cls(n, tuple(range(n)))

    @property
    def m(self) -> int:
        return self.I[0]

    @property
    def J(self) -> tuple[int, ...]:
        """Gap set: ``{j - j_1 for j in I, j != j_1} | {n}``."""
        j1 = self.I[0]
        return tuple(j - j1 for j in self.I[1:]) + (self.n,)

    @property
    def gaps(self) -> tuple[int, ...]:
        levels = (0,) + self.J
        return tuple(b - a for a, b in zip(levels, levels[1:]))


# chains


def enumerate_chains(n: int, s: int, J: Sequence[int], m: int = 0) -> list[tuple[tuple[int, ...], ...]]:
    """Tuples ``(r^0, r^{j_1}, ..., r^{j_{l-1}})`` of window vectors.

    Valuations are ``m, m + j_1, ...``; consecutive vectors are componentwise
    nondecreasing and the last one is bounded by ``r^0 + 1``.  The closing
    vector ``r^n = r^0 + 1`` is implied and not stored.
    """
    _require(admissible_sl(n, s))
    J = tuple(sorted(set(J)))
    if not J or J[-1] != n or J[0] < 1:
        raise ValueError("gap set must lie in [1, n] and contain n")
    levels = [enumerate_R(n, s, m + j) for j in (0,) + J[:-1]]
    out = []

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    def walk(prefix):
        k = len(prefix)
        if k == len(levels):
            top = tuple(x + 1 for x in prefix[0])
            if leq(prefix[-1], top):
                out.append(tuple(prefix))
            return
        top = tuple(x + 1 for x in prefix[0])
        for r in levels[k]:
            if leq(prefix[-1], r) and leq(r, top):
                walk(prefix + [r])

    for r0 in levels[0]:
        walk([r0])
    return out


def sigma_of_chain(chain: Sequence[Sequence[int]], J: Sequence[int]) -> tuple[int, ...]:
    """``sigma(t)`` is the level at which coordinate ``t`` goes up by one."""
    J = tuple(sorted(J))
    r0 = chain[0]
    full = list(chain) + [tuple(x + 1 for x in r0)]
    if len(full) != len(J) + 1:
        raise ValueError("chain length does not match the gap set")
    n = len(r0)
    sigma = [None] * n
    for lvl, (a, b) in zip(J, zip(full, full[1:])):
        for t in range(n):
            d = b[t] - a[t]
            if d == 1:
                if sigma[t] is not None:
                    raise ValueError("coordinate increases twice")
                sigma[t] = lvl
            elif d != 0:
                raise ValueError("chain steps must be 0 or 1")
    if any(x is None for x in sigma):
        raise ValueError("some coordinate never increases")
    return tuple(sigma)


def chain_of_sigma(r0: Sequence[int], sigma: Sequence[int], J: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    J = tuple(sorted(J))
    out = [tuple(r0)]
    for lvl in J[:-1]:
        out.append(tuple(x + (1 if sg <= lvl else 0) for x, sg in zip(r0, sigma)))
    return tuple(out)


def sigma_is_monotone(sigma: Sequence[int], c: Sequence[int]) -> bool:
    """``sigma(t) <= sigma(t-1)`` whenever box ``t`` is empty (indices cyclic)."""
    return all(sigma[t] <= sigma[t - 1] for t in range(len(c)) if c[t] == 0)


def enumerate_sigmas(r0: Sequence[int], s: int, J: Sequence[int]) -> list[tuple[int, ...]]:
    """Step functions with fibers of sizes ``p_i`` that are monotone on cells."""
    J = tuple(sorted(J))
    n = len(r0)
    c = phi(r0, s)
    sizes = [b - a for a, b in zip((0,) + J, J)]
    out = []

    def fill(prefix, remaining):
        if len(prefix) == n:
            if sigma_is_monotone(prefix, c):
                out.append(tuple(prefix))
            return
        for k, lvl in enumerate(J):
            if remaining[k]:
                remaining[k] -= 1
                fill(prefix + [lvl], remaining)
                remaining[k] += 1

    fill([], sizes)
    return out


def intersection_matrix_of_sigma(sigma: Sequence[int], dual: DualArrangement, J: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Entry ``(i, k)`` counts walls of cell ``k`` sent to level ``j_i``."""
    J = tuple(sorted(J))
    row = {lvl: i for i, lvl in enumerate(J)}
    Q = [[0] * dual.s for _ in J]
    for k, ws in enumerate(dual.walls):
        for w in ws:
            Q[row[sigma[w - 1]]][k] += 1
    return tuple(tuple(r) for r in Q)


def sigma_of_matrix(Q: Sequence[Sequence[int]], dual: DualArrangement, J: Sequence[int]) -> tuple[int, ...]:
    """Fill each cell clockwise with the highest levels first."""
    J = tuple(sorted(J))
    n = dual.n
    sigma = [0] * n
    for k, ws in enumerate(dual.walls):
        labels = []
        for i in reversed(range(len(J))):
            labels.extend([J[i]] * Q[i][k])
        if len(labels) != len(ws):
            raise ValueError(f"column {k} does not match the cell size")
        for w, lab in zip(ws, labels):
            sigma[w - 1] = lab
    return tuple(sigma)


# intersection matrices


def enumerate_intersection_matrices(d: Sequence[int], t: int, col_sums: Sequence[int] | None = None) -> list[tuple[tuple[int, ...], ...]]:
    """Matrices with ``t`` columns whose row ``i`` sums to ``d_i - d_{i-1}``.

    With ``col_sums`` only those with the given column sums are kept; the
    filter is applied while building, so the search stays small.
    """
    diffs = [b - a for a, b in zip(d, d[1:])]
    if any(x < 0 for x in diffs):
        raise ValueError("d must be nondecreasing")
    out = []
    if col_sums is not None:
        col_sums = tuple(col_sums)
        if len(col_sums) != t:
            raise ValueError("col_sums must have length t")
        if sum(col_sums) != sum(diffs):
            return []

    def rows(i, acc, left):
        if i == len(diffs):
            if col_sums is None or not any(left):
                out.append(tuple(acc))
            return
        for row in iter_compositions(t, diffs[i]):
            if col_sums is not None:
                if any(x > y for x, y in zip(row, left)):
                    continue
                rows(i + 1, acc + [row], [y - x for x, y in zip(row, left)])
            else:
                rows(i + 1, acc + [row], left)

    rows(0, [], list(col_sums) if col_sums is not None else None)
    return out


def count_intersection_matrices(d: Sequence[int], t: int) -> int:
    return prod(binomial(t + b - a - 1, b - a) for a, b in zip(d, d[1:]))


# Euler characteristics


def euler_sl(n: int, s: int, I: ParahoricTypeA | Iterable[int]) -> int:
    """``(1/s) prod binomial(s + p_i - 1, p_i)`` over the cyclic gaps of ``I``."""
    _require(admissible_sl(n, s))
    if not isinstance(I, ParahoricTypeA):
        I = ParahoricTypeA(n, tuple(I))
    num = prod(binomial(s + p - 1, p) for p in I.gaps)
    q, rem = divmod(num, s)
    if rem:
        raise ArithmeticError("closed form is not an integer")
    return q


def euler_sl_oracle(n: int, s: int, I: ParahoricTypeA | Iterable[int], m: int | None = None) -> int:
    """Count lattice chains directly."""
    if not isinstance(I, ParahoricTypeA):
        I = ParahoricTypeA(n, tuple(I))
    return len(enumerate_chains(n, s, I.J, I.m if m is None else m))


def euler_sl_by_fibers(n: int, s: int, I: ParahoricTypeA | Iterable[int]) -> int:
    """Sum over base vectors ``r`` of the intersection matrices with column sums ``b(r)``."""
    if not isinstance(I, ParahoricTypeA):
        I = ParahoricTypeA(n, tuple(I))
    d = (0,) + I.J
    total = 0
    for r in enumerate_R(n, s, I.m):
        b = dual_arrangement(phi(r, s)).cells
        total += len(enumerate_intersection_matrices(d, s, b))
    return total


def jordan_type_of_window(r: Sequence[int], s: int) -> tuple[int, ...]:
    """Nonzero cell sizes of the dual arrangement of ``phi(r)``, largest first."""
    cells = dual_arrangement(phi(r, s)).cells
    return tuple(sorted((x for x in cells if x), reverse=True))


def jordan_type_of_window_matrix(r: Sequence[int], s: int) -> tuple[int, ...]:
    """Jordan type of the standard representative acting on ``L_r / pi L_r``."""
    N = standard_rep_sl(len(r), s)
    return jordan_type(induced_endomorphism(N, DiagonalLattice(tuple(r))))


# classical Springer fibers


def validate_partition(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    parts = tuple(int(x) for x in parts)
    if not parts or any(x <= 0 for x in parts):
        raise InadmissibleError("partition parts must be positive")
    if n is not None and sum(parts) != n:
        raise InadmissibleError(f"partition must sum to {n}")
    return tuple(sorted(parts, reverse=True))


def default_springer_s(n: int, t: int) -> int:
    """Smallest ``s > t`` coprime to ``n``."""
    s = t + 1
    while gcd(s, n) != 1:
        s += 1
    return s


def _springer_levels(n: int, I) -> tuple[int, ...]:
    if I is None or I == "full":
        return tuple(range(1, n + 1))
    I = sorted(set(I))
    if any(i < 1 or i > n - 1 for i in I):
        raise InadmissibleError(f"type set must lie in [1, {n - 1}]")
    return tuple(I) + (n,)


def springer_euler_sl(parts: Sequence[int], I=None, s: int | None = None) -> int:
    """Euler characteristic of the partial Springer fiber of a nilpotent of Jordan type ``parts``.

    ``I`` is a subset of ``[1, n-1]`` (``None`` or ``"full"`` for full flags).
    The count is the number of intersection matrices with row sums given by
    the gaps of ``I | {n}`` and column sums ``parts`` padded to length ``s``.
    """
    parts = validate_partition(parts)
    n = sum(parts)
    t = len(parts)
    if s is None:
        s = default_springer_s(n, t)
    if s <= t:
        raise InadmissibleError("s must exceed the number of parts")
    _require(admissible_sl(n, s))
    b = parts + (0,) * (s - t)
    d = (0,) + _springer_levels(n, I)
    return len(enumerate_intersection_matrices(d, s, b))


def springer_euler_sl_by_chains(parts: Sequence[int], I=None, s: int | None = None) -> int:
    """Same count obtained from the lattice chains starting at a base vector of that Jordan type."""
    parts = validate_partition(parts)
    n = sum(parts)
    if s is None:
        s = n + 1
    J = _springer_levels(n, I)
    for r in enumerate_R(n, s, 0):
        if jordan_type_of_window(r, s) == parts:
            return sum(1 for ch in enumerate_chains(n, s, J, 0) if ch[0] == r)
    raise ValueError(f"no base vector of type {parts} for s={s}")


def full_flag_fiber_sum(n: int, s: int) -> int:
    """``sum over r in R_{s,0}`` of the multinomial of the cells of ``r``."""
    return sum(multinomial(dual_arrangement(phi(r, s)).cells) for r in enumerate_R(n, s, 0))
