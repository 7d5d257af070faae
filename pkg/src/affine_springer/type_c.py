"""Symplectic family: window vectors, the ball/wall move graph, path sets and Euler characteristics.

Vertices of the move graph are tuples ``p = (p_0, ..., p_n)``: ``s`` balls in
``n + 1`` boxes laid out on a line.  Wall ``i`` (for ``i`` in ``1..n``) sits
between box ``i - 1`` and box ``i``.  Marker sets are subsets of ``1..n``.
Symplectic window vectors ``r`` are 2n-tuples in their natural coordinate
order ``(r_1, ..., r_{2n})``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from .combinatorics import Composition, binomial, iter_compositions
from .laurent import LaurentMatrix, pi_power
from .lattice import DiagonalLattice, NuAction, induced_endomorphism, jordan_type
from .type_a import (
    InadmissibleError,
    enumerate_intersection_matrices,
    in_C_sm,
    jordan_type_of_window,
    phi,
    phi_inverse,
)


# standard representative and admissibility


def admissible_sp_params(n: int, s: int) -> list[str]:
    """Violated conditions for the nil-elliptic single block case; empty when fine."""
    bad = []
    if n < 1:
        bad.append("n >= 1")
    if s <= 0:
        bad.append("s > 0")
    elif s % 2 == 0:
        bad.append("s must be odd")
    if n >= 1 and s > 0 and gcd(s, n) != 1:
        bad.append("gcd(s,n) != 1")
    return bad


def _require(bad: list[str]):
    if bad:
        raise InadmissibleError("; ".join(bad))


@dataclass(frozen=True)
class Admissibility:
    regular_semisimple: bool
    nil_elliptic: bool
    reasons: tuple[str, ...]


def admissible_sp(r: int, d: int, s: int, b: Sequence) -> Admissibility:
    """Check a product of ``r`` factors ``mu^d - b_i pi^s``.

    Regular semisimple needs ``r`` distinct nonzero ``b_i`` and ``gcd(s, d) == 1``;
    nil-elliptic additionally needs ``s > 0`` and ``gcd(s, 2d) == 1``.
    """
    reasons = []
    if len(b) != r:
        reasons.append(f"expected {r} values of b")
    if any(x == 0 for x in b):
        reasons.append("b_i != 0")
    if len(set(b)) != len(b):
        reasons.append("b_i must be distinct")
    if gcd(s, d) != 1:
        reasons.append("gcd(s,d) != 1")
    rs = not reasons
    nil = []
    if s <= 0:
        nil.append("s > 0")
    if gcd(s, 2 * d) != 1:
        nil.append("gcd(s,2d) != 1")
    return Admissibility(rs, rs and not nil, tuple(reasons + nil))


def standard_rep_sp(n: int, s: int, b=1) -> LaurentMatrix:
    """Nil-elliptic representative with characteristic polynomial ``(mu^2)^n - b pi^s``."""
    _require(admissible_sp_params(n, s))
    coeffs = [0] * (n - 1) + [-Fraction(b)]
    return standard_rep_sp_general(coeffs, Fraction(s, n))


def standard_rep_sp_general(coeffs: Sequence, q) -> LaurentMatrix:
    """Matrix whose characteristic polynomial is ``h(mu^2)`` for ``h = mu^n + sum c_j pi^{qj} mu^{n-j}``.

    Ones move ``e_j`` to ``e_{j+1}`` and ``e_{n+1}`` to ``e_1``, minus ones move
    ``e_{i+1}`` to ``e_i`` in the second half, and ``(-1)^j c_j pi^{qj}`` sits
    in row ``n + j``, column ``j``.
    """
    n = len(coeffs)
    q = Fraction(q)
    entries = {}
    for j in range(1, n):
        entries[(j, j - 1)] = 1
    entries[(0, n)] = 1
    for i in range(n + 1, 2 * n):
        entries[(i - 1, i)] = -1
    for j, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        e = q * j
        if e.denominator != 1:
            raise InadmissibleError(f"q*j must be an integer for nonzero c_{j}")
        entries[(n + j - 1, j - 1)] = pi_power(int(e), (-1) ** j * Fraction(c))
    return LaurentMatrix.from_sparse(2 * n, entries)


def nu_sp(d: int, s: int) -> NuAction:
    """``nu(m, i) = 2dm + is`` and ``nu(m, d+i) = 2dm + (1-i)s``."""
    offs = [i * s for i in range(1, d + 1)] + [(1 - i) * s for i in range(1, d + 1)]
    return NuAction(2 * d, tuple(offs))


# symplectic window vectors


@dataclass(frozen=True, order=True)
class SpWindowVector:
    r: tuple[int, ...]
    I: frozenset

    @property
    def n(self) -> int:
        return len(self.r) // 2

    @property
    def m(self) -> int:
        return len(self.I)


def relabel(r: Sequence[int]) -> tuple[int, ...]:
    """``(r_n, ..., r_1, r_{n+1}, ..., r_{2n})``."""
    n = len(r) // 2
    return tuple(reversed(r[:n])) + tuple(r[n:])


def unrelabel(rho: Sequence[int]) -> tuple[int, ...]:
    n = len(rho) // 2
    return tuple(reversed(rho[:n])) + tuple(rho[n:])


def in_sp_window(r: Sequence[int], s: int, I: Iterable[int]) -> bool:
    n = len(r) // 2
    I = set(I)
    rho = relabel(r)
    if any(a > b for a, b in zip(rho, rho[1:])) or rho[-1] > rho[0] + s:
        return False
    return all(r[n + i - 1] == -r[i - 1] + (i in I) for i in range(1, n + 1))


def enumerate_R_sp_I(n: int, s: int, I: Iterable[int]) -> list[tuple[int, ...]]:
    """Window vectors with marker set ``I``, by scanning ``r_1..r_n``."""
    I = frozenset(I)
    dn = int(n in I)
    lo = -((s - dn) // 2)  # ceil((dn - s)/2)
    out = []

    def rec(prefix):
        # prefix holds r_1, r_2, ... which must be nonincreasing
        if len(prefix) == n:
            r = tuple(prefix) + tuple(-prefix[i - 1] + (i in I) for i in range(1, n + 1))
            if in_sp_window(r, s, I):
                out.append(r)
            return
        top = prefix[-1] if prefix else 0
        for x in range(lo, top + 1):
            rec(prefix + [x])

    rec([])
    return sorted(out)


def enumerate_R_sp(n: int, s: int, m: int) -> list[SpWindowVector]:
    """All symplectic window vectors of valuation ``m``, sorted."""
    _require(admissible_sp_params(n, s))
    if not 0 <= m <= n:
        raise InadmissibleError(f"m must lie in [0, {n}]")
    out = []
    for I in combinations(range(1, n + 1), m):
        out.extend(SpWindowVector(r, frozenset(I)) for r in enumerate_R_sp_I(n, s, I))
    return sorted(out)


def count_R_sp(n: int, s: int, m: int) -> int:
    t = (s - 1) // 2
    return binomial(t + m, m) * binomial(t + n - m, n - m)


# q coordinates


@dataclass(frozen=True)
class SpQVector:
    """``c = (q_n, ..., q_1, q_0, q_{-1}, ..., q_{-(n-1)})`` with marker set ``I``."""

    c: tuple[int, ...]
    I: frozenset

    @property
    def n(self) -> int:
        return len(self.c) // 2

    def q(self, i: int) -> int:
        return self.c[self.n - i]


def epsilon(I, i: int) -> int:
    return int(i + 1 in I) - int(i in I)


def sp_q_violation(c: Sequence[int], I: Iterable[int]) -> str | None:
    """Name the failed condition for ``c`` to carry marker set ``I``, or ``None``."""
    I = set(I)
    n = len(c) // 2
    q = lambda i: c[n - i]
    for i in range(1, n):
        if q(-i) != q(i) + epsilon(I, i):
            return f"q_-{i} != q_{i} + eps_{i}"
    if (q(n) % 2 == 0) != (n in I):
        return "q_n even must match n in I"
    if (q(0) % 2 == 1) != (1 in I):
        return "q_0 odd must match 1 in I"
    return None


def markers_from_q(c: Sequence[int]) -> frozenset:
    """Recover the marker set from parities and differences, checking consistency."""
    n = len(c) // 2
    q = lambda i: c[n - i]
    delta = {n: int(q(n) % 2 == 0)}
    for i in range(n - 1, 0, -1):
        delta[i] = delta[i + 1] - (q(-i) - q(i))
        if delta[i] not in (0, 1):
            raise ValueError(f"q_-{i} - q_{i} is not a valid marker step")
    I = frozenset(i for i, d in delta.items() if d)
    bad = sp_q_violation(c, I)
    if bad:
        raise ValueError(bad)
    return I


def q_coords(r: SpWindowVector | Sequence[int], s: int) -> SpQVector:
    """``phi`` applied to the relabeled vector."""
    if isinstance(r, SpWindowVector):
        vec, I = r.r, r.I
    else:
        vec, I = tuple(r), None
    c = tuple(phi(relabel(vec), s))
    found = markers_from_q(c)
    if I is not None and found != I:
        raise ValueError("marker set does not match the q coordinates")
    return SpQVector(c, found)


def q_coords_inverse(qv: SpQVector) -> SpWindowVector:
    bad = sp_q_violation(qv.c, qv.I)
    if bad:
        raise ValueError(bad)
    rho = phi_inverse(qv.c, len(qv.I))
    return SpWindowVector(unrelabel(rho), qv.I)


def psi_sp(qv: SpQVector) -> tuple[int, ...]:
    """``(q_0, q_1 + q_{-1}, ..., q_{n-1} + q_{-(n-1)}, q_n)``."""
    n = qv.n
    return (qv.q(0),) + tuple(qv.q(i) + qv.q(-i) for i in range(1, n)) + (qv.q(n),)


def psi_sp_inverse(p: Sequence[int], I: Iterable[int] | None = None) -> SpQVector:
    """Split each middle box as evenly as the marker set allows."""
    n = len(p) - 1
    I = vertex_markers(p) if I is None else frozenset(I)
    if not in_G_sp(p, I):
        raise ValueError("p fails the parity rule for this marker set")
    q = {0: p[0], n: p[n]}
    for i in range(1, n):
        h = p[i] // 2
        if i not in I and i + 1 in I:
            q[i], q[-i] = h, h + 1
        elif i in I and i + 1 not in I:
            q[i], q[-i] = h + 1, h
        else:
            q[i], q[-i] = h, h
    c = tuple(q[i] for i in range(n, -n, -1))
    return SpQVector(c, I)


def window_of_vertex(p: Sequence[int], s: int | None = None) -> SpWindowVector:
    return q_coords_inverse(psi_sp_inverse(p))


def vertex_of_window(r: SpWindowVector, s: int) -> tuple[int, ...]:
    return psi_sp(q_coords(r, s))


# the move graph


def in_G_sp(p: Sequence[int], I: Iterable[int]) -> bool:
    """``p_i`` is even exactly when ``i`` and ``i+1`` are both in or both out of ``I | {n+1}``."""
    n = len(p) - 1
    hat = set(I) | {n + 1}
    return all((p[i] % 2 == 0) == ((i in hat) == (i + 1 in hat)) for i in range(n + 1))


def vertex_markers(p: Sequence[int]) -> frozenset:
    """``I_v``: ``0`` is out, and ``|{i, i+1} & I_v|`` has the parity of ``p_i``."""
    n = len(p) - 1
    d = 0
    out = []
    for i in range(n):
        d = (p[i] - d) % 2
        if d:
            out.append(i + 1)
    return frozenset(out)


def delta_out_edges(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Vertices reached by moving one ball across a wall not in ``I_v``."""
    p = tuple(p)
    n = len(p) - 1
    I = vertex_markers(p)
    out = []
    for w in range(1, n + 1):
        if w in I:
            continue
        if p[w - 1]:
            out.append(p[: w - 1] + (p[w - 1] - 1, p[w] + 1) + p[w + 1:])
        if p[w]:
            out.append(p[: w - 1] + (p[w - 1] + 1, p[w] - 1) + p[w + 1:])
    return sorted(out)


def vertices(n: int, s: int, m: int | None = None) -> list[tuple[int, ...]]:
    vs = list(iter_compositions(n + 1, s))
    if m is not None:
        vs = [v for v in vs if len(vertex_markers(v)) == m]
    return vs


def enumerate_G_sp(n: int, s: int, m: int) -> list[tuple[int, ...]]:
    """Vertices whose parities fit some marker set of size ``m``, found from the parity rule alone."""
    out = set()
    for I in combinations(range(1, n + 1), m):
        for p in iter_compositions(n + 1, s):
            if in_G_sp(p, I):
                out.add(p)
    return sorted(out)


def count_G(n: int, s: int, m: int) -> int:
    return count_R_sp(n, s, m)


def succession_counts(n: int, m: int) -> dict[int, int]:
    """``g_{n,m,j} = binomial(m, j) binomial(n-m, m-j)`` for every ``j``."""
    return {j: binomial(m, j) * binomial(n - m, m - j) for j in range(m + 1)}


def succession_counts_scan(n: int, m: int) -> dict[int, int]:
    """Count subsets ``I`` of size ``m`` by successions in ``I | {n+1}``."""
    out = {j: 0 for j in range(m + 1)}
    for I in combinations(range(1, n + 1), m):
        hat = set(I) | {n + 1}
        out[sum(1 for i in hat if i + 1 in hat)] += 1
    return out


def marker_sum(n: int, I: Iterable[int]) -> int:
    """``sum_{i=1}^{n-1} i * eps_i``."""
    I = set(I)
    return sum(i * epsilon(I, i) for i in range(1, n))


# path sets


def _check_levels(n: int, J: Iterable[int]) -> tuple[int, ...]:
    J = tuple(sorted(set(J)))
    if not J:
        raise InadmissibleError("type set must be nonempty")
    if J[0] < 0 or J[-1] > n:
        raise InadmissibleError(f"type set must lie in [0, {n}]")
    return J


def _reach_table(n: int, s: int):
    @lru_cache(maxsize=None)
    def reach(v: tuple[int, ...], k: int) -> tuple[tuple[int, ...], ...]:
        """Vertices at the end of directed paths of length ``k``."""
        frontier = {v}
        for _ in range(k):
            frontier = {w for u in frontier for w in delta_out_edges(u)}
        return tuple(sorted(frontier))

    return reach


def enumerate_E(n: int, s: int, J: Iterable[int], start=None) -> list[tuple[tuple[int, ...], ...]]:
    """Vertex tuples ``(v_1, ..., v_l)`` with ``v_i`` at level ``m_i`` joined by directed paths.

    Every edge raises the level by one, so consecutive vertices must be
    joined by a path of exactly ``m_{i+1} - m_i`` edges.  ``start`` restricts
    ``v_1``.
    """
    _require(admissible_sp_params(n, s))
    J = _check_levels(n, J)
    reach = _reach_table(n, s)
    firsts = vertices(n, s, J[0]) if start is None else [tuple(start)]
    out = []

    def walk(prefix):
        k = len(prefix)
        if k == len(J):
            out.append(tuple(prefix))
            return
        for w in reach(prefix[-1], J[k] - J[k - 1]):
            walk(prefix + [w])

    for v in firsts:
        if len(vertex_markers(v)) == J[0]:
            walk([v])
    return out


def enumerate_E_by_paths(n: int, s: int, J: Iterable[int]) -> set[tuple[tuple[int, ...], ...]]:
    """Collect level tuples from every full directed path between the outer levels."""
    J = _check_levels(n, J)
    out = set()

    def walk(path):
        if len(path) - 1 == J[-1] - J[0]:
            out.add(tuple(path[j - J[0]] for j in J))
            return
        for w in delta_out_edges(path[-1]):
            walk(path + [w])

    for v in vertices(n, s, J[0]):
        walk([v])
    return out


def enumerate_sp_chains(n: int, s: int, J: Iterable[int], start=None) -> list[tuple[SpWindowVector, ...]]:
    """Componentwise nondecreasing tuples of symplectic window vectors, one per level."""
    J = _check_levels(n, J)
    levels = [enumerate_R_sp(n, s, m) for m in J]
    if start is not None:
        levels[0] = [x for x in levels[0] if x.r == tuple(start)]
    out = []

    def leq(a, b):
        return all(x <= y for x, y in zip(a.r, b.r))

    def walk(prefix):
        if len(prefix) == len(levels):
            out.append(tuple(prefix))
            return
        for x in levels[len(prefix)]:
            if leq(prefix[-1], x):
                walk(prefix + [x])

    for x in levels[0]:
        walk([x])
    return out


# theta, eta, zeta


def wall_cells(p: Sequence[int]) -> tuple[int, ...]:
    """Cell index (``0..s``) of each wall ``1..n``: the number of balls to its left."""
    out = []
    acc = 0
    for i in range(1, len(p)):
        acc += p[i - 1]
        out.append(acc)
    return tuple(out)


def cell_counts(p: Sequence[int]) -> tuple[int, ...]:
    s = sum(p)
    b = [0] * (s + 1)
    for c in wall_cells(p):
        b[c] += 1
    return tuple(b)


def eta(p: Sequence[int]) -> tuple[int, ...]:
    """Pool cells ``2k`` and ``2k+1``: ``a_k = b_{2k} + b_{2k+1}``."""
    s = sum(p)
    if s % 2 == 0:
        raise ValueError("needs an odd number of balls")
    b = cell_counts(p)
    return tuple(b[2 * k] + b[2 * k + 1] for k in range((s - 1) // 2 + 1))


def eta0_inverse(a: Sequence[int]) -> tuple[int, ...]:
    """The level 0 vertex with ``a_k`` walls in cell ``2k`` and the odd cells empty.

    As a string: ``W^{a_0} B B W^{a_1} B B ... W^{a_t} B``.
    """
    t = len(a) - 1
    cells = []
    for k, x in enumerate(a):
        cells.append(x)
        if k < t:
            cells.append(0)
    return vertex_from_cells(cells + [0], 2 * t + 1)


def vertex_from_cells(b: Sequence[int], s: int) -> tuple[int, ...]:
    """Inverse of :func:`cell_counts`."""
    n = sum(b)
    p = [0] * (n + 1)
    box = 0
    for j, walls in enumerate(b):
        if j > 0:
            p[box] += 1  # ball j
        box += walls
    if sum(p) != s:
        raise ValueError("cell vector does not match the number of balls")
    return tuple(p)


def tau(c: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """Move ball ``2k+1`` left past the last ``c_k`` walls of cell ``2k`` in the base vertex of ``a``."""
    if any(x < 0 or x > y for x, y in zip(c, a)):
        raise ValueError("need 0 <= c_k <= a_k")
    t = len(a) - 1
    b = []
    for k in range(t + 1):
        b.extend([a[k] - c[k], c[k]])
    return vertex_from_cells(b, 2 * t + 1)


def theta(path: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(v_1, sigma)`` with ``sigma^{-1}(0) = I_{v_1}``, ``sigma^{-1}(i) = I_{v_{i+1}} - I_{v_i}``
    and the remaining walls sent to ``l``."""
    marks = [vertex_markers(v) for v in path]
    l = len(path)
    sigma = [l] * n
    for w in marks[0]:
        sigma[w - 1] = 0
    for i in range(1, l):
        if not marks[i - 1] <= marks[i]:
            raise ValueError("marker sets must grow along the tuple")
        for w in marks[i] - marks[i - 1]:
            sigma[w - 1] = i
    return tuple(path[0]), tuple(sigma)


def zeta(path: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Entry ``(i, k)``: walls with ``sigma = i`` lying in cell ``2k`` of the base vertex."""
    v1, sigma = theta(path, n)
    a = eta(v1)
    base_cells = wall_cells(eta0_inverse(a))
    l = len(path)
    Q = [[0] * len(a) for _ in range(l + 1)]
    for w, sg in enumerate(sigma):
        Q[sg][base_cells[w] // 2] += 1
    return tuple(tuple(r) for r in Q)


def fiber_count(Q: Sequence[Sequence[int]]) -> int:
    """``prod_{i=1}^{l-1} prod_{k=1}^{t} (q_ik + 1)`` for a matrix with rows ``0..l``."""
    return prod(x + 1 for row in Q[1:-1] for x in row[1:])


def gamma(d: int, t: int) -> int:
    return binomial(2 * t + d - 1, d)


def gamma_brute(d: int, t: int) -> int:
    return sum(prod(y + 1 for y in ys) for ys in iter_compositions(t, d))


def pooled_sum_brute(d: int, t: int) -> int:
    """``sum over z in C^{t+1}_d`` of ``prod_{k=1}^t (z_k + 1)``."""
    return sum(prod(z + 1 for z in zs[1:]) for zs in iter_compositions(t + 1, d))


def pooled_sum(d: int, t: int) -> int:
    return binomial(2 * t + d, d)


def game_outcomes(z: Sequence[int], bounded_left: bool) -> int:
    """Play the single cell game and count distinct outcome sequences.

    The cell holds ``sum(z)`` walls with a ball on its right, and also on its
    left when ``bounded_left``.  Step ``i`` (for ``i < len(z) - 1``) crosses
    ``z_i`` fresh walls; at step 0 balls may only move left.  Each wall is
    crossed at most once.
    """
    d = sum(z)
    steps = len(z) - 1
    start = (("B",) if bounded_left else ()) + tuple(range(1, d + 1)) + ("B",)
    states = {((start,), frozenset())}
    for i in range(steps):
        nxt = set()
        for hist, used in states:
            for cfg, used2 in _moves(hist[-1], used, z[i], left_only=(i == 0)):
                nxt.add((hist + (cfg,), used2))
        states = nxt
    return len({hist for hist, _ in states})


def _moves(cfg, used, k, left_only):
    layer = {(cfg, used)}
    for _ in range(k):
        nxt = set()
        for c, u in layer:
            for j in range(len(c) - 1):
                x, y = c[j], c[j + 1]
                if x != "B" and y == "B" and x not in u:
                    nxt.add((c[:j] + (y, x) + c[j + 2:], u | {x}))
                if x == "B" and y != "B" and y not in u and not left_only:
                    nxt.add((c[:j] + (y, x) + c[j + 2:], u | {y}))
        layer = nxt
    return layer


# Euler characteristics


def _level_sequence(n: int, J: Sequence[int]) -> tuple[int, ...]:
    """``(0, m_1, ..., m_l, n)``."""
    return (0,) + tuple(J) + (n,)


def euler_sp(n: int, s: int, J: Iterable[int]) -> int:
    """``binomial(t+j_0, t) binomial(t+j_l, t) prod binomial(s+j_i-1, j_i)`` with ``t = (s-1)/2``."""
    _require(admissible_sp_params(n, s))
    J = _check_levels(n, J)
    t = (s - 1) // 2
    ms = _level_sequence(n, J)
    js = [b - a for a, b in zip(ms, ms[1:])]
    return binomial(t + js[0], t) * binomial(t + js[-1], t) * prod(binomial(s + j - 1, j) for j in js[1:-1])


def euler_sp_oracle(n: int, s: int, J: Iterable[int]) -> int:
    return len(enumerate_sp_chains(n, s, J))


def euler_sp_paths(n: int, s: int, J: Iterable[int]) -> int:
    return len(enumerate_E(n, s, J))


def euler_sp_by_matrices(n: int, s: int, J: Iterable[int]) -> int:
    """Sum of fiber counts over all intersection matrices with rows ``0..l`` and ``t+1`` columns."""
    J = _check_levels(n, J)
    t = (s - 1) // 2
    d = _level_sequence(n, J)
    total = 0
    for a in iter_compositions(t + 1, n):
        for Q in enumerate_intersection_matrices(d, t + 1, a):
            total += fiber_count(Q)
    return total


@dataclass(frozen=True)
class Comparison:
    sp: int
    sl: int
    sl_type: tuple[int, ...]

    @property
    def relation(self) -> str:
        return "equal" if self.sp == self.sl else ("less" if self.sp < self.sl else "greater")


def sl_type_of(n: int, J: Iterable[int]) -> tuple[int, ...]:
    """``J | (2n - J)`` with ``2n`` removed."""
    J = set(J)
    return tuple(sorted((J | {2 * n - j for j in J}) - {2 * n}))


def compare_with_sl(n: int, s: int, J: Iterable[int]) -> Comparison:
    from .type_a import euler_sl

    J = _check_levels(n, J)
    I = sl_type_of(n, J)
    return Comparison(euler_sp(n, s, J), euler_sl(2 * n, s, I), I)


# symplectic Springer fibers


@dataclass(frozen=True)
class SymplecticPartition:
    """One Jordan block of size ``2 n0`` and two blocks of each size in ``parts``."""

    n0: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(x) for x in self.parts), reverse=True))
        if self.n0 < 0:
            raise InadmissibleError("n0 must be >= 0")
        if any(x <= 0 for x in parts):
            raise InadmissibleError("partition parts must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return self.n0 + sum(self.parts)

    def jordan_type(self) -> tuple[int, ...]:
        blocks = ([2 * self.n0] if self.n0 else []) + [x for x in self.parts for _ in (0, 1)]
        return tuple(sorted(blocks, reverse=True))

    def base_composition(self, t: int) -> tuple[int, ...]:
        """``a = (n_0, n_1, ..., n_l, 0, ...)`` of length ``t + 1``."""
        a = (self.n0,) + self.parts
        if len(a) > t + 1:
            raise InadmissibleError("s must exceed twice the number of parts")
        return a + (0,) * (t + 1 - len(a))


def default_springer_sp_s(sp: SymplecticPartition) -> int:
    """Smallest odd ``s > 2l`` coprime to ``n``."""
    s = 2 * len(sp.parts) + 1
    while gcd(s, sp.n) != 1:
        s += 2
    return s


def _springer_sp_setup(sp: SymplecticPartition, J, s):
    n = sp.n
    if n < 1:
        raise InadmissibleError("partition must be nonempty")
    if s is None:
        s = default_springer_sp_s(sp)
    _require(admissible_sp_params(n, s))
    if s <= 2 * len(sp.parts):
        raise InadmissibleError("s must exceed twice the number of parts")
    if J is None or J == "full":
        J = tuple(range(1, n + 1))
    J = tuple(sorted(set(J)))
    if not J or J[0] < 1 or J[-1] > n:
        raise InadmissibleError(f"type set must be a nonempty subset of [1, {n}]")
    t = (s - 1) // 2
    return n, s, t, J, sp.base_composition(t)


def springer_euler_sp(sp: SymplecticPartition, J=None, s: int | None = None) -> int:
    """Sum of fiber counts over intersection matrices with column sums ``a``."""
    n, s, t, J, a = _springer_sp_setup(sp, J, s)
    d = _level_sequence(n, (0,) + J)
    return sum(fiber_count(Q) for Q in enumerate_intersection_matrices(d, t + 1, a))


def springer_euler_sp_paths(sp: SymplecticPartition, J=None, s: int | None = None) -> int:
    """Path tuples starting at the base vertex of ``a``."""
    n, s, t, J, a = _springer_sp_setup(sp, J, s)
    return len(enumerate_E(n, s, (0,) + J, start=eta0_inverse(a)))


def springer_euler_sp_chains(sp: SymplecticPartition, J=None, s: int | None = None) -> int:
    """Symplectic chains starting at the window vector of the base vertex."""
    n, s, t, J, a = _springer_sp_setup(sp, J, s)
    r = window_of_vertex(eta0_inverse(a)).r
    return len(enumerate_sp_chains(n, s, (0,) + J, start=r))


def springer_full_flag_sp(sp: SymplecticPartition) -> int:
    """``n! 2^{n_1 + ... + n_l} / (n_0! ... n_l!)``."""
    out = factorial(sp.n) * 2 ** sum(sp.parts)
    for x in (sp.n0,) + sp.parts:
        out //= factorial(x)
    return out


def springer_base_window(sp: SymplecticPartition, s: int | None = None) -> SpWindowVector:
    n, s, t, J, a = _springer_sp_setup(sp, None, s)
    return window_of_vertex(eta0_inverse(a))


def springer_jordan_types(sp: SymplecticPartition, s: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Jordan type at the base window vector, by cell sizes and by rank of powers."""
    if s is None:
        s = default_springer_sp_s(sp)
    r = springer_base_window(sp, s).r
    combinatorial = jordan_type_of_window(relabel(r), s)
    N = standard_rep_sp(sp.n, s)
    matrix = jordan_type(induced_endomorphism(N, DiagonalLattice(r)))
    return combinatorial, matrix


def symplectic_partitions(n: int) -> list[SymplecticPartition]:
    """Every ``(n0, parts)`` with ``n0 + sum(parts) == n``."""
    out = []
    for n0 in range(n + 1):
        for parts in _partitions(n - n0):
            out.append(SymplecticPartition(n0, parts))
    return out


def _partitions(k: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    largest = k if largest is None else largest
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return out


def partitions(k: int) -> list[tuple[int, ...]]:
    """Integer partitions of ``k``, largest parts first."""
    return _partitions(k)
