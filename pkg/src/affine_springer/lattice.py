"""Lattices over ``A = Q[[pi]]`` inside ``F^n``.

A lattice is stored by a basis matrix whose columns generate it over ``A``.
Most questions are answered by passing to the canonical upper triangular basis
``z_j = pi^{r_j} e_j + sum_{i<j} z_ij e_i`` where every exponent in ``z_ij`` is
below ``r_i``.  That basis is found by exact linear algebra over ``Q`` in the
finite window ``L / pi^N A^n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentMatrix, LaurentScalar, PrecisionError, pi_power


@dataclass(frozen=True)
class DiagonalLattice:
    """The lattice spanned by ``pi^{r_i} e_i``."""

    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))

    @property
    def n(self) -> int:
        return len(self.r)

    def basis(self) -> "LatticeBasis":
        return LatticeBasis(LaurentMatrix.diagonal([pi_power(x) for x in self.r]))

    def valuation(self) -> int:
        return sum(self.r)


class LatticeBasis:
    """A lattice given by the ``A``-span of the columns of ``basis``."""

    def __init__(self, basis: LaurentMatrix):
        self.basis = basis
        det = basis.det()
        if not det.is_known_nonzero():
            raise ValueError("basis columns are dependent")
        self._det = det
        self._canonical = None

    @property
    def n(self) -> int:
        return self.basis.dim

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[object]]) -> "LatticeBasis":
        return cls(LaurentMatrix.from_columns(cols))

    @classmethod
    def standard(cls, n: int) -> "LatticeBasis":
        return cls(LaurentMatrix.identity(n))

    def det(self) -> LaurentScalar:
        return self._det

    def shift(self, k: int) -> "LatticeBasis":
        """``pi^k L``."""
        return LatticeBasis(self.basis.map(lambda a: a.shift(k)))

    def transform(self, g: LaurentMatrix) -> "LatticeBasis":
        """``g L``."""
        return LatticeBasis(g @ self.basis)

    def canonical(self) -> "CanonicalBasis":
        if self._canonical is None:
            self._canonical = _canonical_basis(self)
        return self._canonical

    def __eq__(self, other):
        if isinstance(other, DiagonalLattice):
            other = other.basis()
        if not isinstance(other, LatticeBasis):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"LatticeBasis({self.basis!r})"


def as_lattice(L) -> LatticeBasis:
    if isinstance(L, DiagonalLattice):
        return L.basis()
    if isinstance(L, LatticeBasis):
        return L
    raise TypeError(f"not a lattice: {L!r}")


@dataclass(frozen=True)
class CanonicalBasis:
    """Upper triangular basis in reduced form.

    ``offdiag[j]`` maps ``i < j`` (0-based) to the Laurent polynomial ``z_ij``.
    """

    r: tuple[int, ...]
    offdiag: tuple[tuple[tuple[int, LaurentScalar], ...], ...]

    @property
    def n(self) -> int:
        return len(self.r)

    def is_diagonal(self) -> bool:
        return all(not col for col in self.offdiag)

    def coefficients(self):
        """Yield ``(i, j, m, c)``: coefficient ``c`` of ``pi^m e_i`` in ``z_j``, off the diagonal."""
        for j, col in enumerate(self.offdiag):
            for i, z in col:
                for m, c in z.items():
                    yield i, j, m, c

    def matrix(self) -> LaurentMatrix:
        n = self.n
        rows = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            rows[j][j] = pi_power(self.r[j])
            for i, z in self.offdiag[j]:
                rows[i][j] = z
        return LaurentMatrix(rows)

    def lattice(self) -> LatticeBasis:
        return LatticeBasis(self.matrix())


def canonical_basis(L) -> tuple[LatticeBasis, DiagonalLattice]:
    """Return the canonical triangular basis of ``L`` and its diagonal exponents."""
    c = as_lattice(L).canonical()
    return c.lattice(), DiagonalLattice(c.r)


def _window(L: LatticeBasis) -> tuple[int, int]:
    """Return ``(M0, N)`` with ``pi^N A^n`` inside ``L`` inside ``pi^M0 A^n``."""
    B = L.basis
    adj = B.adjugate()
    min_adj = min(a.lower_valuation() for r in adj.rows for a in r)
    K = L.det().valuation() - min_adj
    N = int(K) + 1
    M0 = min(a.lower_valuation() for r in B.rows for a in r)
    return int(M0), N


def _canonical_basis(L: LatticeBasis) -> CanonicalBasis:
    n = L.n
    B = L.basis
    M0, N = _window(L)
    for a in (x for r in B.rows for x in r):
        if a.precision is not None and a.precision < N:
            raise PrecisionError(f"entries known to O(pi^{a.precision}) but O(pi^{N}) is needed")
    # coordinates (i, m) ordered by i descending, then m ascending
    cols = [(i, m) for i in reversed(range(n)) for m in range(M0, N)]
    pos = {c: k for k, c in enumerate(cols)}
    vectors = []
    for j in range(n):
        col = B.column(j)
        for a in range(0, N - M0):
            v = {}
            for i, x in enumerate(col):
                for e, c in x.items():
                    e2 = e + a
                    if e2 < N:
                        v[pos[(i, e2)]] = c
            if v:
                vectors.append(v)
    pivots = _rref(vectors)
    r = [None] * n
    pivot_row = {}
    for k, row in pivots.items():
        i, m = cols[k]
        if r[i] is None or m < r[i]:
            r[i] = m
            pivot_row[i] = row
    if any(x is None for x in r):
        raise PrecisionError("window too small to resolve the lattice")
    offdiag = []
    for j in range(n):
        row = pivot_row[j]
        terms: dict[int, dict[int, Fraction]] = {}
        for k, c in row.items():
            i, m = cols[k]
            if i == j:
                continue
            terms.setdefault(i, {})[m] = c
        offdiag.append(tuple(sorted((i, LaurentScalar(t)) for i, t in terms.items())))
    return CanonicalBasis(tuple(r), tuple(offdiag))


def _rref(vectors: list[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Fully reduced row echelon form of sparse vectors; returns ``{pivot: row}``."""
    basis: dict[int, dict[int, Fraction]] = {}
    for v in vectors:
        v = dict(v)
        for p in sorted(k for k in v if k in basis):
            if p in v:
                c = v[p]
                for k, x in basis[p].items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        for q, row in basis.items():
            if p in row:
                c = row[p]
                for k, x in v.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        basis[p] = v
    return basis


def valuation(L) -> int:
    """Valuation of the determinant of any basis."""
    if isinstance(L, DiagonalLattice):
        return L.valuation()
    return as_lattice(L).det().valuation()


def contains(L, vec: Sequence[LaurentScalar]) -> bool:
    """Whether ``vec`` lies in ``L``, by back substitution against the canonical basis."""
    c = as_lattice(L).canonical()
    n = c.n
    rest = [LaurentScalar.coerce(x) for x in vec]
    cols = {j: dict(c.offdiag[j]) for j in range(n)}
    for j in reversed(range(n)):
        x = rest[j].div_monomial(pi_power(c.r[j]))
        if not x.in_ring():
            return False
        if x.is_zero():
            continue
        for i, z in cols[j].items():
            rest[i] = rest[i] - x * z
    return True


def is_sublattice(L1, L2) -> bool:
    """``L1 <= L2``."""
    L1 = as_lattice(L1)
    return all(contains(L2, col) for col in L1.basis.columns())


def stabilizes(N: LaurentMatrix, L) -> bool:
    """Whether ``N L`` lies inside ``L``."""
    Lb = as_lattice(L)
    return all(contains(Lb, N.apply(col)) for col in Lb.basis.columns())


def stabilizes_diagonal(N: LaurentMatrix, r: Sequence[int]) -> bool:
    """Entry test for diagonal lattices: ``v(N_ij) + r_j >= r_i``."""
    for i, j, a in N.nonzero_entries():
        if a.valuation() + r[j] < r[i]:
            return False
    return True


def symplectic_gram(n: int) -> LaurentMatrix:
    """``J = [[0, I], [-I, 0]]`` of size ``2n``."""
    entries = {}
    for i in range(n):
        entries[(i, n + i)] = 1
        entries[(n + i, i)] = -1
    return LaurentMatrix.from_sparse(2 * n, entries)


def dual(L, J: LaurentMatrix) -> LatticeBasis:
    """``L* = {v : v^T J L in A}``, spanned by the columns of ``J adj(B)^T / pi^{v(det B)}``."""
    Lb = as_lattice(L)
    if Lb.n % 2:
        raise ValueError("symplectic duality needs even dimension")
    v = Lb.det().valuation()
    M = J @ Lb.basis.adjugate().transpose()
    return LatticeBasis(M.map(lambda a: a.shift(-v)))


def is_symplectic(L, J: LaurentMatrix) -> bool:
    """Whether homotheties of ``L`` and ``L*`` form a chain under inclusion."""
    Lb = as_lattice(L)
    Ld = dual(Lb, J)
    v = valuation(Lb)
    half = Lb.n // 2
    a = -(-v // half)  # the smallest a allowed by comparing valuations
    while not is_sublattice(Ld.shift(a), Lb):
        a += 1
    return is_sublattice(Lb, Ld.shift(a - 1))


@dataclass(frozen=True)
class NuAction:
    """Diagonal action scaling ``pi^m e_i`` by ``lambda^{p m + c_i}`` (``i`` 0-based here)."""

    slope: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(int(c) for c in self.offsets))

    def nu(self, m: int, i: int) -> int:
        return self.slope * m + self.offsets[i]

    def apply(self, L, lam) -> LatticeBasis:
        """``f(lam) L`` for a concrete nonzero rational ``lam``."""
        lam = Fraction(lam)
        B = as_lattice(L).basis
        rows = [
            [a.scale_exponents(lambda m, i=i: lam ** self.nu(m, i)) for a in row]
            for i, row in enumerate(B.rows)
        ]
        return LatticeBasis(LaurentMatrix(rows))


def flow_exponents(f: NuAction, L) -> list[tuple[int, int, int, int]]:
    """``(i, j, m, nu(m,i) - nu(r_j,j))`` for each nonzero canonical coefficient."""
    c = as_lattice(L).canonical()
    return [(i, j, m, f.nu(m, i) - f.nu(c.r[j], j)) for i, j, m, _ in c.coefficients()]


def is_fixed(f: NuAction, L) -> bool:
    """Whether ``f(lambda) L == L`` for every ``lambda``, decided on exponents."""
    return all(e == 0 for *_, e in flow_exponents(f, L))


def is_fixed_at(f: NuAction, L, lam=2) -> bool:
    """Same question answered numerically at one ``lam``; agrees with :func:`is_fixed`
    whenever ``lam`` has no root-of-unity powers, e.g. ``lam = 2``."""
    Lb = as_lattice(L)
    return f.apply(Lb, lam) == Lb


def flow_limit(f: NuAction, L) -> DiagonalLattice:
    """Limit of ``f(lambda) L`` as ``lambda`` tends to 0.

    Each window element converges to its lowest weight monomial, so the limit
    is spanned by the pivot monomials of an elimination whose columns are
    ordered by increasing weight.
    """
    if f.slope <= 0:
        raise ValueError("flow limit needs a positive slope")
    Lb = as_lattice(L)
    n = Lb.n
    M0, N = _window(Lb)
    cols = [(i, m) for i in range(n) for m in range(M0, N)]
    weights = [f.nu(m, i) for i, m in cols]
    if len(set(weights)) != len(weights):
        raise ValueError("weights collide inside the window; the limit is not diagonal")
    cols = [c for _, c in sorted(zip(weights, cols))]
    pos = {c: k for k, c in enumerate(cols)}
    vectors = []
    for j in range(n):
        col = Lb.basis.column(j)
        for a in range(0, N - M0):
            v = {}
            for i, x in enumerate(col):
                for e, c in x.items():
                    if e + a < N:
                        v[pos[(i, e + a)]] = c
            if v:
                vectors.append(v)
    r = [N] * n
    for k in _rref(vectors):
        i, m = cols[k]
        r[i] = min(r[i], m)
    return DiagonalLattice(tuple(r))


def verify_almost_commute(N: LaurentMatrix, f: NuAction, s: int) -> bool:
    """Whether ``f(lam) N f(lam)^{-1} == lam^s N``.

    A term ``pi^l`` in row ``i``, column ``j`` must satisfy ``p l + c_i - c_j == s``.
    """
    if s == 0:
        raise ValueError("exponent must be nonzero")
    for i, j, a in N.nonzero_entries():
        for l, _ in a.items():
            if f.slope * l + f.offsets[i] - f.offsets[j] != s:
                return False
    return True


def is_symplectic_matrix(M: LaurentMatrix, J: LaurentMatrix) -> bool:
    """``M^T J + J M == 0``."""
    return (M.transpose() @ J + J @ M).is_zero()


# reduction mod pi and Jordan types


def induced_endomorphism(N: LaurentMatrix, L) -> list[list[Fraction]]:
    """Matrix of ``N`` on ``L / pi L`` in the canonical basis of ``L``."""
    if isinstance(L, DiagonalLattice):
        r = L.r
        n = len(r)
        if not stabilizes_diagonal(N, r):
            raise ValueError("N does not stabilize L")
        out = [[Fraction(0)] * n for _ in range(n)]
        for i, j, a in N.nonzero_entries():
            out[i][j] = a.coeff(r[i] - r[j]) if a.lower_valuation() <= r[i] - r[j] else Fraction(0)
        return out
    Bc = as_lattice(L).canonical().matrix()
    conj = Bc.inverse() @ N @ Bc
    n = conj.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, j, a in conj.nonzero_entries():
        if not a.in_ring():
            raise ValueError("N does not stabilize L")
        out[i][j] = a.coeff(0)
    return out


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(_rref([{k: Fraction(x) for k, x in enumerate(r) if x} for r in rows]))


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def jordan_type(M: Sequence[Sequence[Fraction]]) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix, from ranks of its powers."""
    n = len(M)
    ranks = [n]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    while ranks[-1] > 0:
        P = _matmul(P, M)
        ranks.append(matrix_rank(P))
        if ranks[-1] == ranks[-2]:
            raise ValueError("matrix is not nilpotent")
    # number of blocks of size >= j is ranks[j-1] - ranks[j]
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    parts = []
    for j, cnt in enumerate(at_least, start=1):
        nxt = at_least[j] if j < len(at_least) else 0
        parts.extend([j] * (cnt - nxt))
    return tuple(sorted(parts, reverse=True))


# serialization


def lattice_to_json(L) -> dict:
    if isinstance(L, DiagonalLattice):
        return {"n": L.n, "diagonal": list(L.r)}
    B = as_lattice(L).basis
    return {"n": B.dim, "basis": [[a.to_text() for a in row] for row in B.rows]}


def lattice_from_json(obj) -> DiagonalLattice | LatticeBasis:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    if "diagonal" in obj:
        r = obj["diagonal"]
        if len(r) != n:
            raise ValueError("diagonal length does not match n")
        return DiagonalLattice(tuple(int(x) for x in r))
    rows = obj["basis"]
    if len(rows) != n:
        raise ValueError("basis size does not match n")
    return LatticeBasis(LaurentMatrix([[LaurentScalar.from_text(x) for x in row] for row in rows]))


def matrix_to_json(M: LaurentMatrix) -> dict:
    return {"n": M.dim, "matrix": [[a.to_text() for a in row] for row in M.rows]}


def matrix_from_json(obj) -> LaurentMatrix:
    rows = obj["matrix"]
    return LaurentMatrix([[LaurentScalar.from_text(x) for x in row] for row in rows])
