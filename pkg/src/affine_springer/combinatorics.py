"""Integer combinatorics: compositions, necklaces and the ball/wall duality.

Everything here works on plain Python integers, so counts never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import Iterator, Sequence


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(parts: Sequence[int]) -> int:
    """``sum(parts)! / prod(part!)``."""
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


@dataclass(frozen=True, order=True)
class Composition:
    """An ordered tuple of nonnegative integers with a fixed total."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def rotate(self, k: int) -> "Composition":
        k %= max(len(self.parts), 1)
        return Composition(self.parts[k:] + self.parts[:k])


def iter_compositions(t: int, d: int) -> Iterator[tuple[int, ...]]:
    """Yield the compositions of ``d`` into ``t`` parts as tuples, lexicographically."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if d < 0:
        return
    if t == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in iter_compositions(t - 1, d - first):
            yield (first,) + rest


def enumerate_compositions(t: int, d: int) -> list[Composition]:
    """All compositions of ``d`` into ``t`` ordered nonnegative parts.

    The list is in lexicographic order and has ``binomial(t+d-1, d)`` members.
    """
    return [Composition(c) for c in iter_compositions(t, d)]


@dataclass(frozen=True, order=True)
class CyclicClass:
    """A rotation orbit of compositions, stored by its minimal rotation."""

    representative: Composition
    period: int

    def members(self) -> list[Composition]:
        return [self.representative.rotate(k) for k in range(self.period)]


def necklace_of(c: Composition | Sequence[int]) -> CyclicClass:
    """Return the rotation class containing ``c``."""
    parts = tuple(c)
    t = len(parts)
    rots = [parts[k:] + parts[:k] for k in range(t)]
    period = next(k for k in range(1, t + 1) if rots[k % t] == parts)
    return CyclicClass(Composition(min(rots)), period)


def cyclic_classes(t: int, d: int) -> list[CyclicClass]:
    """One class per rotation orbit of ``C^t_d``, sorted by representative."""
    seen = {}
    for c in iter_compositions(t, d):
        cls = necklace_of(c)
        seen.setdefault(cls.representative, cls)
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class DualArrangement:
    """Walls per cell after exchanging balls and walls on a circle.

    ``walls[k]`` lists the walls of cell ``k+1`` in clockwise order, so
    ``cells[k] == len(walls[k])``.
    """

    cells: Composition
    walls: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.cells.total

    @property
    def s(self) -> int:
        return len(self.cells)

    def cell_of_wall(self) -> dict[int, int]:
        """Map wall number to its (1-based) cell."""
        return {w: k + 1 for k, ws in enumerate(self.walls) for w in ws}


def dual_arrangement(c: Composition | Sequence[int]) -> DualArrangement:
    """Exchange balls and walls around a circle.

    Box ``i`` holds ``c[i-1]`` balls and sits just counterclockwise of wall
    ``i``.  Reading clockwise the circle is ``box 1, W1, box 2, W2, ...,
    box n, Wn``.  Ball 1 is the first ball counterclockwise of wall 1 and the
    balls are numbered clockwise from there; cell ``k`` holds the walls lying
    between ball ``k-1`` and ball ``k`` (ball 0 being ball s).
    """
    parts = tuple(c)
    n = len(parts)
    s = sum(parts)
    if n < 1:
        raise ValueError("need at least one box")
    if s == 0:
        raise ValueError("need at least one ball")
    if gcd(n, s) != 1:
        raise ValueError(f"gcd(n, s) != 1 for n={n}, s={s}")
    word: list[int] = []  # 0 is a ball, w > 0 is wall w
    for i, k in enumerate(parts, start=1):
        word.extend([0] * k)
        word.append(i)
    size = len(word)
    w1 = word.index(1)
    start = next((w1 - d) % size for d in range(1, size + 1) if word[(w1 - d) % size] == 0)
    cells: list[list[int]] = [[] for _ in range(s)]
    ball = 1
    for d in range(1, size):
        x = word[(start + d) % size]
        if x == 0:
            ball += 1
        else:
            # walls after ball k belong to cell k+1; after ball s they wrap to cell 1
            cells[ball % s].append(x)
    walls = tuple(tuple(ws) for ws in cells)
    return DualArrangement(Composition(len(ws) for ws in walls), walls)
