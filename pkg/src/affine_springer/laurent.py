"""Truncated Laurent series in ``pi`` with rational coefficients, and matrices over them.

A :class:`LaurentScalar` is either an exact Laurent polynomial (``precision is
None``) or a series known modulo ``pi**precision``.  Arithmetic tracks the
tightest sound precision and never silently drops information.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class PrecisionError(ArithmeticError):
    """Raised when a result cannot be determined within the known precision."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class LaurentScalar:
    __slots__ = ("_coeffs", "precision", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None, precision: int | None = None):
        items = {}
        for e, c in (coeffs or {}).items():
            c = _as_fraction(c)
            if c != 0 and (precision is None or e < precision):
                items[int(e)] = c
        self._coeffs = dict(sorted(items.items()))
        self.precision = precision
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, coeff, exp: int) -> "LaurentScalar":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c) -> "LaurentScalar":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "LaurentScalar":
        if isinstance(x, LaurentScalar):
            return x
        return cls({0: x})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def exact(self) -> bool:
        return self.precision is None

    def items(self):
        return self._coeffs.items()

    def coeff(self, e: int) -> Fraction:
        if self.precision is not None and e >= self.precision:
            raise PrecisionError(f"coefficient of pi^{e} is beyond O(pi^{self.precision})")
        return self._coeffs.get(e, Fraction(0))

    def is_zero(self) -> bool:
        """True only when the value is known to be zero."""
        return not self._coeffs and self.precision is None

    def is_known_nonzero(self) -> bool:
        return bool(self._coeffs)

    def valuation(self) -> int | float:
        """Lowest exponent with nonzero coefficient; ``inf`` for exact zero."""
        if self._coeffs:
            return next(iter(self._coeffs))
        if self.precision is None:
            return float("inf")
        raise PrecisionError(f"valuation of O(pi^{self.precision}) is unknown")

    def lower_valuation(self) -> int | float:
        """A lower bound for the valuation that never raises."""
        if self._coeffs:
            return next(iter(self._coeffs))
        return float("inf") if self.precision is None else self.precision

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero has no degree")
        return next(reversed(self._coeffs))

    def is_monomial(self) -> bool:
        return self.precision is None and len(self._coeffs) == 1

    def leading(self) -> tuple[int, Fraction]:
        """(valuation, coefficient) of the lowest term."""
        e = self.valuation()
        return e, self._coeffs[e]

    def truncate(self, precision: int) -> "LaurentScalar":
        p = precision if self.precision is None else min(precision, self.precision)
        return LaurentScalar(self._coeffs, p)

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by ``pi**k``."""
        p = None if self.precision is None else self.precision + k
        return LaurentScalar({e + k: c for e, c in self._coeffs.items()}, p)

    def scale_exponents(self, weight) -> "LaurentScalar":
        """Multiply the coefficient of ``pi**e`` by ``weight(e)``."""
        return LaurentScalar({e: c * weight(e) for e, c in self._coeffs.items()}, self.precision)

    # arithmetic
    def __add__(self, other):
        other = LaurentScalar.coerce(other)
        p = _min_prec(self.precision, other.precision)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out, p)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self._coeffs.items()}, self.precision)

    def __sub__(self, other):
        return self + (-LaurentScalar.coerce(other))

    def __rsub__(self, other):
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other):
        other = LaurentScalar.coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentScalar()
        p = None
        if self.precision is not None:
            p = self.precision + other.lower_valuation()
        if other.precision is not None:
            q = other.precision + self.lower_valuation()
            p = q if p is None else min(p, q)
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(out, p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_monomial() ** (-k)
        out = LaurentScalar.const(1)
        for _ in range(k):
            out = out * self
        return out

    def div_monomial(self, other: "LaurentScalar") -> "LaurentScalar":
        """Divide by an exact monomial."""
        other = LaurentScalar.coerce(other)
        if not other.is_monomial():
            raise ValueError("division is only supported by exact monomials")
        e, c = other.leading()
        p = None if self.precision is None else self.precision - e
        return LaurentScalar({k - e: v / c for k, v in self._coeffs.items()}, p)

    def inverse_monomial(self) -> "LaurentScalar":
        return LaurentScalar.const(1).div_monomial(self)

    def in_ring(self) -> bool:
        """True when the value lies in ``k[[pi]]`` (no negative exponents)."""
        return self.lower_valuation() >= 0

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.const(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._coeffs == other._coeffs and self.precision == other.precision

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self._coeffs.items()), self.precision))
        return self._hash

    def agrees_with(self, other: "LaurentScalar") -> bool:
        """Equality up to the smaller of the two precisions."""
        other = LaurentScalar.coerce(other)
        p = _min_prec(self.precision, other.precision)
        return self.truncate_opt(p)._coeffs == other.truncate_opt(p)._coeffs

    def truncate_opt(self, p):
        return self if p is None else self.truncate(p)

    # text form
    def to_text(self) -> str:
        body = ",".join(f"{e}:{_frac_text(c)}" for e, c in self._coeffs.items()) or "0"
        if self.precision is not None:
            body += f"|O:{self.precision}"
        return body

    @classmethod
    def from_text(cls, text: str) -> "LaurentScalar":
        """Parse ``"e:num/den,e:num/den"`` with optional ``"|O:P"`` suffix."""
        text = text.strip()
        precision = None
        if "|" in text:
            text, tail = text.split("|", 1)
            tag, _, value = tail.partition(":")
            if tag.strip() != "O":
                raise ValueError(f"bad precision suffix {tail!r}")
            precision = int(value)
        text = text.strip()
        coeffs: dict[int, Fraction] = {}
        if text and text != "0":
            for term in text.split(","):
                e, _, c = term.partition(":")
                if not _:
                    raise ValueError(f"bad term {term!r}")
                e = int(e)
                coeffs[e] = coeffs.get(e, 0) + Fraction(c.strip())
        return cls(coeffs, precision)

    def __repr__(self):
        return f"LaurentScalar({self.to_text()!r})"

    def __str__(self):
        if not self._coeffs:
            return "0" if self.precision is None else f"O(pi^{self.precision})"
        terms = []
        for e, c in self._coeffs.items():
            mono = "" if e == 0 else ("pi" if e == 1 else f"pi^{e}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        out = " + ".join(terms).replace("+ -", "- ")
        if self.precision is not None:
            out += f" + O(pi^{self.precision})"
        return out


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


PI = LaurentScalar.monomial(1, 1)
ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)


def pi_power(k: int, coeff=1) -> LaurentScalar:
    return LaurentScalar.monomial(coeff, k)


class LaurentMatrix:
    """Square matrix with :class:`LaurentScalar` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[object]]):
        self.rows = tuple(tuple(LaurentScalar.coerce(x) for x in row) for row in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, n: int) -> "LaurentMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[object]) -> "LaurentMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_sparse(cls, n: int, entries: Mapping[tuple[int, int], object]) -> "LaurentMatrix":
        """Build from ``{(row, col): value}`` with 0-based indices."""
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = LaurentScalar.coerce(v)
        return cls(rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[object]]) -> "LaurentMatrix":
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[LaurentScalar]:
        return [row[j] for row in self.rows]

    def columns(self) -> list[list[LaurentScalar]]:
        return [self.column(j) for j in range(self.dim)]

    def transpose(self) -> "LaurentMatrix":
        n = self.dim
        return LaurentMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)])

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return LaurentMatrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.dim
        cols = other.columns()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return LaurentMatrix(out)

    def apply(self, vec: Sequence[LaurentScalar]) -> list[LaurentScalar]:
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def scale(self, c) -> "LaurentMatrix":
        c = LaurentScalar.coerce(c)
        return LaurentMatrix([[c * a for a in r] for r in self.rows])

    def map(self, fn) -> "LaurentMatrix":
        return LaurentMatrix([[fn(a) for a in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def trace(self) -> LaurentScalar:
        acc = ZERO
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def nonzero_entries(self):
        """Yield ``(row, col, value)`` for entries not known to be zero."""
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if not a.is_zero():
                    yield i, j, a

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LaurentMatrix({[[a.to_text() for a in r] for r in self.rows]})"

    # determinants
    def _minor_fn(self):
        rows = self.rows

        @lru_cache(maxsize=None)
        def minor(rs: tuple[int, ...], cs: tuple[int, ...]) -> LaurentScalar:
            if len(rs) == 1:
                return rows[rs[0]][cs[0]]
            r0, rest = rs[0], rs[1:]
            acc = ZERO
            for k, c in enumerate(cs):
                a = rows[r0][c]
                if a.is_zero():
                    continue
                sub = minor(rest, cs[:k] + cs[k + 1:])
                if sub.is_zero():
                    continue
                term = a * sub
                acc = acc - term if k % 2 else acc + term
            return acc

        return minor

    def det(self) -> LaurentScalar:
        n = self.dim
        if n == 0:
            return ONE
        return self._minor_fn()(tuple(range(n)), tuple(range(n)))

    def adjugate(self) -> "LaurentMatrix":
        n = self.dim
        if n == 1:
            return LaurentMatrix([[ONE]])
        minor = self._minor_fn()
        full = tuple(range(n))
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m = minor(full[:j] + full[j + 1:], full[:i] + full[i + 1:])
                out[i][j] = -m if (i + j) % 2 else m
        return LaurentMatrix(out)

    def inverse(self) -> "LaurentMatrix":
        """Inverse, available when the determinant is an exact monomial."""
        d = self.det()
        if not d.is_monomial():
            raise ValueError("inverse requires a monomial determinant")
        return self.adjugate().map(lambda a: a.div_monomial(d))

    def char_poly(self) -> "CharPoly":
        """Characteristic polynomial ``det(mu - M)`` by division-free expansion.

        ``c_i`` is ``(-1)**i`` times the sum of the ``i x i`` principal minors.
        """
        n = self.dim
        minor = self._minor_fn()
        coeffs = [ONE]
        for i in range(1, n + 1):
            acc = ZERO
            for idx in combinations(range(n), i):
                m = minor(idx, idx)
                if not m.is_zero():
                    acc = acc + m
            coeffs.append(-acc if i % 2 else acc)
        return CharPoly(tuple(coeffs))


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial ``sum c_i mu**(n-i)`` with ``c_0 = 1``."""

    coefficients: tuple[LaurentScalar, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != ONE:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[object]) -> "CharPoly":
        return cls(tuple(LaurentScalar.coerce(c) for c in coeffs))

    def __getitem__(self, i: int) -> LaurentScalar:
        return self.coefficients[i]

    def __str__(self):
        n = self.degree
        terms = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            mu = "" if n - i == 0 else ("mu" if n - i == 1 else f"mu^{n - i}")
            if c == ONE and mu:
                terms.append(mu)
            else:
                terms.append(f"({c})" + (f"*{mu}" if mu else ""))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class HomogeneityIndex:
    """Result of the homogeneity test.

    ``q`` is the common ratio ``v(c_i)/i``.  ``any_q`` marks the nilpotent case
    where every ``c_i`` with ``i >= 1`` vanishes.  Both unset means the
    polynomial is not homogeneous.
    """

    q: Fraction | None = None
    any_q: bool = False

    @property
    def present(self) -> bool:
        return self.q is not None or self.any_q


def homogeneity_index(p: CharPoly) -> HomogeneityIndex:
    """Find ``q`` with ``p`` homogeneous of degree n in ``mu`` and ``pi**q``.

    Every nonzero ``c_i`` must be a single exact monomial of valuation ``q*i``.
    """
    q = None
    for i, c in enumerate(p.coefficients[1:], start=1):
        if c.is_zero():
            continue
        if not c.is_monomial():
            return HomogeneityIndex()
        qi = Fraction(c.valuation(), i)
        if q is None:
            q = qi
        elif q != qi:
            return HomogeneityIndex()
    if q is None:
        return HomogeneityIndex(any_q=True)
    return HomogeneityIndex(q=q)


@dataclass(frozen=True)
class RootValuations:
    """Valuations of the roots of a polynomial, read off its Newton polygon."""

    valuations: tuple[Fraction, ...]
    zero_roots: int

    def all_equal(self, q) -> bool:
        return all(v == q for v in self.valuations)


def eigen_valuations(p: CharPoly) -> RootValuations:
    """Root valuations from the lower Newton polygon of ``p``.

    With ``p = sum a_k mu**k`` the polygon is the lower convex hull of the
    points ``(k, v(a_k))``.  A segment of slope ``m`` and width ``w`` carries
    ``w`` roots of valuation ``-m``.
    """
    n = p.degree
    pts = []
    for i, c in enumerate(p.coefficients):
        if not c.is_zero():
            pts.append((n - i, c.valuation()))
    pts.sort()
    zero_roots = pts[0][0]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    vals: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        vals.extend([-slope] * (x2 - x1))
    return RootValuations(tuple(sorted(vals)), zero_roots)
